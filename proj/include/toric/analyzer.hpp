#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/birational.hpp"
#include "toric/mori.hpp"

namespace toric {

namespace detail {

inline std::string wall_str(const Wall& w)
{
    return cone_str(w.rays) + " apexes " + std::to_string(w.apexes.first) + "," +
           std::to_string(w.apexes.second);
}

inline void expect(bool cond, const std::string& what)
{
    if (!cond)
        throw InvariantViolation(what);
}

/** Walls of the result contracted by the blow-down map. */
inline Wall fiber_wall(const BlowupRecord& rec)
{
    if (rec.exceptional_walls.empty())
        throw NoFiberWall("blow-up record has no exceptional fiber curve");
    return rec.exceptional_walls.front();
}

} // namespace detail

/**
 * Whether the class of a curve in a fiber of the blow-down spans an edge of
 * the Mori cone of the blow-up. When the blow-up is projective this holds
 * exactly when the base is projective; that equivalence is checked here and
 * a mismatch raises InvariantViolation.
 */
inline bool fiber_class_extremal(const BlowupRecord& rec)
{
    const Wall w = detail::fiber_wall(rec);
    const MoriCone mc(rec.result);
    const bool extremal = is_extremal(mc, w);
    if (is_projective(mc).projective) {
        const bool base_projective = is_projective(rec.base).projective;
        detail::expect(extremal == base_projective,
                       "fiber_class_extremal: extremality disagrees with projectivity of the base");
    }
    return extremal;
}

enum class GuaranteeReason { Fano, EnoughMoriRays, None };

inline const char* to_string(GuaranteeReason r)
{
    switch (r) {
    case GuaranteeReason::Fano: return "Fano";
    case GuaranteeReason::EnoughMoriRays: return "EnoughMoriRays";
    case GuaranteeReason::None: return "None";
    }
    return "None";
}

struct GuaranteeReport
{
    bool guaranteed = false;
    GuaranteeReason reason = GuaranteeReason::None;
    std::size_t mori_extremal_rays = 0;
};

/**
 * Sufficient conditions for a Mori-extremal curve meeting the exceptional
 * divisor: the blow-up is Fano, or it has at least rho(base) Mori-extremal
 * rays. For a projective blow-up of a non-projective base the existence of
 * such a curve is asserted.
 */
inline GuaranteeReport hypothesis_guarantee(const BlowupRecord& rec)
{
    const MoriCone mc(rec.result);
    GuaranteeReport g;
    g.mori_extremal_rays = count_mori_extremal_rays(mc);
    if (is_fano(rec.result)) {
        g.guaranteed = true;
        g.reason = GuaranteeReason::Fano;
    } else if (g.mori_extremal_rays >= picard_number(rec.base)) {
        g.guaranteed = true;
        g.reason = GuaranteeReason::EnoughMoriRays;
    }
    if (g.guaranteed && is_projective(mc).projective && !is_projective(rec.base).projective) {
        bool found = false;
        for (std::size_t i = 0; i < mc.walls.size() && !found; ++i)
            found = mc.relations[i].coeffs[rec.new_ray] != 0 && is_mori_extremal(mc, mc.walls[i]);
        detail::expect(found, "hypothesis_guarantee: no Mori-extremal curve meets the exceptional divisor");
    }
    return g;
}

enum class Phenomenon { TrivialReduction, ForbiddenFlip, ElementaryTransformation };

inline const char* to_string(Phenomenon p)
{
    switch (p) {
    case Phenomenon::TrivialReduction: return "TrivialReduction";
    case Phenomenon::ForbiddenFlip: return "ForbiddenFlip";
    case Phenomenon::ElementaryTransformation: return "ElementaryTransformation";
    }
    return "?";
}

/**
 * One Mori-extremal curve omega meeting E and the smooth surgery its
 * contraction performs.
 *
 * y is the image of the contraction, which is the blow-up of y along
 * y_center. ForbiddenFlip: y_center = Z, a codimension-two center with normal
 * degrees (-1,-1). ElementaryTransformation and TrivialReduction:
 * y_center = <e, e'>. TrivialReduction also carries X' with X = B_p(X'),
 * p = x_prime_point.
 */
struct PhenomenonFinding
{
    Phenomenon kind = Phenomenon::ForbiddenFlip;
    Wall witness_wall;
    Integer e_dot_omega = 0;
    Fan y;
    Cone y_center;
    std::vector<Integer> z_normal_degrees;
    std::optional<Fan> x_prime;
    std::optional<Cone> x_prime_point;
    std::optional<Wall> x_prime_curve;
};

struct AnalysisReport
{
    bool x_projective = false;
    bool xt_projective = false;
    Fan xt;                        // the blow-up of X along C
    std::size_t exceptional_ray = 0; // E, as a ray index of xt
    std::vector<PhenomenonFinding> findings;
    std::vector<Wall> unclassified; // meet E, extremal, -K . omega <= 0
};

namespace detail {

inline PhenomenonFinding forbidden_flip(const Fan& x, const Wall& curve, const BlowupRecord& rec,
                                        const MoriCone& mc, std::size_t wi)
{
    const Wall& omega = mc.walls[wi];
    const WallRelation& rel = mc.relations[wi];
    const std::size_t e = rec.new_ray;
    const Fan& xt = rec.result;

    expect(cone_contains(omega.rays, e), "forbidden flip: omega with E.omega < 0 is not inside E");
    for (auto r : omega.rays)
        expect(rel.coeffs[r] == (r == e ? -1 : 0),
               "forbidden flip: relation of omega is not e_n + e_n+1 - e = 0 (" + wall_str(omega) + ")");
    const auto [p, q] = omega.apexes;
    expect(add(xt.ray(p), xt.ray(q)) == xt.ray(e), "forbidden flip: e is not the sum of the apexes");
    expect(Cone{p, q} == make_cone({curve.apexes.first, curve.apexes.second}),
           "forbidden flip: apexes of omega differ from those of C");
    for (const auto& a : wall_relation(x, curve).normal_degrees())
        expect(a == -1, "forbidden flip: normal bundle of C is not O(-1)^(n-1)");

    PhenomenonFinding fnd;
    fnd.kind = Phenomenon::ForbiddenFlip;
    fnd.witness_wall = omega;
    fnd.e_dot_omega = rel.coeffs[e];
    fnd.y = blow_down(xt, e, Cone{p, q});
    // e is the last ray, so p and q keep their indices in Y
    fnd.y_center = Cone{p, q};
    const MoriCone ymc(fnd.y);
    expect(is_projective(ymc).projective, "forbidden flip: Y is not projective");
    bool z_curve_seen = false;
    bool z_curve_extremal = false;
    for (std::size_t i = 0; i < ymc.walls.size(); ++i) {
        if (!is_subset(fnd.y_center, ymc.walls[i].rays))
            continue;
        expect(ymc.relations[i].coeffs[p] == -1 && ymc.relations[i].coeffs[q] == -1,
               "forbidden flip: normal degrees of Z are not (-1,-1)");
        if (!z_curve_seen)
            z_curve_extremal = is_extremal(ymc, ymc.walls[i]);
        z_curve_seen = true;
    }
    expect(z_curve_seen, "forbidden flip: Z contains no invariant curve");
    expect(!z_curve_extremal, "forbidden flip: curves in Z are extremal in Y although X is not projective");
    fnd.z_normal_degrees = {Integer(-1), Integer(-1)};
    return fnd;
}

inline PhenomenonFinding transverse_contraction(const Fan& x, const Wall& curve, const BlowupRecord& rec,
                                                const MoriCone& mc, std::size_t wi)
{
    const Wall& omega = mc.walls[wi];
    const WallRelation& rel = mc.relations[wi];
    const std::size_t e = rec.new_ray;
    const Fan& xt = rec.result;
    const Cone c_apexes = make_cone({curve.apexes.first, curve.apexes.second});

    expect(!cone_contains(omega.rays, e), "E.omega > 0 but omega lies in E");
    expect(omega.apexes.first == e || omega.apexes.second == e, "E.omega = 1 but e is not an apex of omega");
    const std::size_t e_prime = omega.apexes.first == e ? omega.apexes.second : omega.apexes.first;
    expect(is_subset(omega.rays, cone_union(curve.rays, c_apexes)) &&
               cone_intersection(omega.rays, c_apexes).size() == 1,
           "transverse omega is not of the form <C minus e_j, e_n>");

    std::vector<std::size_t> minus_one;
    for (auto r : omega.rays) {
        expect(rel.coeffs[r] <= 0, "positive coefficient b_i in the relation of omega");
        if (rel.coeffs[r] == -1)
            minus_one.push_back(r);
        else
            expect(rel.coeffs[r] == 0, "coefficient b_i below -1 in the relation of omega");
    }
    expect(!minus_one.empty(), "all b_i vanish: omega would define a fibration, impossible for non-projective X");
    expect(minus_one.size() == 1, "more than one b_i equals -1 although -K.omega > 0");
    const std::size_t r = minus_one.front();
    expect(xt.ray(r) == add(xt.ray(e), xt.ray(e_prime)), "relation e' + e = e_i does not hold");

    PhenomenonFinding fnd;
    fnd.witness_wall = omega;
    fnd.e_dot_omega = rel.coeffs[e];
    fnd.y = blow_down(xt, r, make_cone({e, e_prime}));
    fnd.y_center = cone_after_removal(make_cone({e, e_prime}), r);
    expect(is_projective(fnd.y).projective, "contraction image Y is not projective");

    if (cone_contains(c_apexes, r)) {
        // e_n = e_1 + ... + e_n-1 + e': X is the blow-up of X' at a fixed point
        fnd.kind = Phenomenon::TrivialReduction;
        const Cone point = cone_union(curve.rays, Cone{e_prime});
        fnd.x_prime = blow_down(x, r, point);
        fnd.x_prime_point = cone_after_removal(point, r);
        fnd.x_prime_curve = find_wall(*fnd.x_prime, cone_after_removal(curve.rays, r));
        expect(!is_projective(*fnd.x_prime).projective, "trivial reduction: X' is projective");
        // Y must be B_C'(X') with the same ray order
        expect(blow_up_curve(*fnd.x_prime, *fnd.x_prime_curve).result == fnd.y,
               "trivial reduction: Y is not the blow-up of X' along C'");
    } else {
        fnd.kind = Phenomenon::ElementaryTransformation;
    }
    return fnd;
}

} // namespace detail

/**
 * Blows up X along the curve of a wall and classifies every Mori-extremal
 * curve omega of the blow-up with E . omega != 0, performing the blow-down
 * each case prescribes and validating the outcome. Any violated expectation
 * raises InvariantViolation.
 */
inline AnalysisReport analyze_pair(const Fan& x, const Wall& curve)
{
    const BlowupRecord rec = blow_up_curve(x, curve);
    AnalysisReport rep;
    rep.xt = rec.result;
    rep.exceptional_ray = rec.new_ray;
    rep.x_projective = is_projective(x).projective;
    const MoriCone mc(rec.result);
    rep.xt_projective = is_projective(mc).projective;
    if (rep.x_projective || !rep.xt_projective)
        return rep;

    const std::size_t e = rec.new_ray;
    for (std::size_t i = 0; i < mc.walls.size(); ++i) {
        const Wall& omega = mc.walls[i];
        const bool meets_e = cone_contains(omega.rays, e) || omega.apexes.first == e || omega.apexes.second == e;
        if (!meets_e || !is_extremal(mc, omega))
            continue;
        const Integer e_dot = mc.relations[i].coeffs[e];
        if (anticanonical_degree(mc.relations[i]) <= 0) {
            rep.unclassified.push_back(omega);
            continue;
        }
        detail::expect(!(e_dot >= 0 && cone_contains(omega.rays, e)),
                       "Mori-extremal omega with E.omega >= 0 lies inside E (" + detail::wall_str(omega) + ")");
        if (e_dot == -1)
            rep.findings.push_back(detail::forbidden_flip(x, curve, rec, mc, i));
        else if (e_dot == 1)
            rep.findings.push_back(detail::transverse_contraction(x, curve, rec, mc, i));
        else
            throw InvariantViolation("Mori-extremal omega with E.omega = " + e_dot.str());
    }
    return rep;
}

inline json finding_to_json(const PhenomenonFinding& f)
{
    json j{{"kind", to_string(f.kind)},
           {"witness_wall", wall_to_json(f.witness_wall)},
           {"e_dot_omega", integer_to_json(f.e_dot_omega)},
           {"y", fan_to_json(f.y)},
           {"y_center", cone_to_json(f.y_center)}};
    if (!f.z_normal_degrees.empty()) {
        json d = json::array();
        for (const auto& a : f.z_normal_degrees)
            d.push_back(integer_to_json(a));
        j["z_normal_degrees"] = std::move(d);
    }
    if (f.x_prime)
        j["x_prime"] = fan_to_json(*f.x_prime);
    if (f.x_prime_point)
        j["x_prime_point"] = cone_to_json(*f.x_prime_point);
    if (f.x_prime_curve)
        j["x_prime_curve"] = wall_to_json(*f.x_prime_curve);
    return j;
}

inline json report_to_json(const AnalysisReport& r)
{
    json findings = json::array();
    for (const auto& f : r.findings)
        findings.push_back(finding_to_json(f));
    json unclassified = json::array();
    for (const auto& w : r.unclassified)
        unclassified.push_back(wall_to_json(w));
    return json{{"x_projective", r.x_projective},
                {"xt_projective", r.xt_projective},
                {"xt", fan_to_json(r.xt)},
                {"exceptional_ray", r.exceptional_ray},
                {"findings", std::move(findings)},
                {"unclassified", std::move(unclassified)}};
}

} // namespace toric
