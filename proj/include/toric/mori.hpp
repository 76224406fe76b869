#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "toric/intersection.hpp"
#include "toric/lp.hpp"

namespace toric {

/** A distinct wall class together with the walls realizing it. */
struct MoriGenerator
{
    CurveClass cls;
    std::vector<std::size_t> walls; // indices into MoriCone::walls
};

/** Wall data of a fan, computed once and shared by the cone queries below. */
struct MoriCone
{
    std::vector<Wall> walls;
    std::vector<WallRelation> relations;
    std::vector<MoriGenerator> generators;
    std::vector<std::size_t> generator_of; // wall index -> generator index

    explicit MoriCone(const Fan& f) : walls(toric::walls(f))
    {
        std::map<CurveClass, std::size_t> index;
        for (const auto& w : walls) {
            relations.push_back(wall_relation(f, w));
            const auto& cls = relations.back().coeffs;
            auto [it, inserted] = index.emplace(cls, generators.size());
            if (inserted)
                generators.push_back(MoriGenerator{cls, {}});
            generators[it->second].walls.push_back(relations.size() - 1);
            generator_of.push_back(it->second);
        }
    }

    std::size_t wall_index(const Wall& w) const
    {
        for (std::size_t i = 0; i < walls.size(); ++i)
            if (walls[i] == w)
                return i;
        throw NotAWall("wall is not a wall of this fan");
    }
};

inline std::vector<MoriGenerator> mori_generators(const Fan& f) { return MoriCone(f).generators; }

struct ProjectivityVerdict
{
    bool projective = false;
    /** Divisor d with d . C >= 1 on every wall curve C. */
    std::optional<RationalVector> ample_witness;
    /** Pairs (wall index in walls() order, y >= 0) with sum y * class = 0. */
    std::optional<std::vector<std::pair<std::size_t, Rational>>> degeneracy_certificate;
};

inline bool verify_verdict(const MoriCone& mc, const ProjectivityVerdict& v)
{
    if (v.projective) {
        if (!v.ample_witness || v.degeneracy_certificate)
            return false;
        for (const auto& g : mc.generators) {
            Rational s = 0;
            for (std::size_t r = 0; r < g.cls.size(); ++r)
                s += (*v.ample_witness)[r] * Rational(g.cls[r]);
            if (s < 1)
                return false;
        }
        return true;
    }
    if (!v.degeneracy_certificate || v.ample_witness || v.degeneracy_certificate->empty())
        return false;
    const std::size_t m = mc.generators.front().cls.size();
    RationalVector total(m, Rational(0));
    bool positive = false;
    for (const auto& [w, y] : *v.degeneracy_certificate) {
        if (y < 0 || w >= mc.relations.size())
            return false;
        positive = positive || y > 0;
        for (std::size_t r = 0; r < m; ++r)
            total[r] += y * Rational(mc.relations[w].coeffs[r]);
    }
    for (const auto& t : total)
        if (t != 0)
            return false;
    return positive;
}

/**
 * Decides projectivity by exact linear programming.
 *
 * A smooth complete toric variety is projective iff some divisor is
 * positive on every invariant curve. The strict system is homogeneous in
 * the divisor, so it is solved as d . C >= 1. When that is infeasible, the
 * Gordan alternative y >= 0, sum y = 1, sum y_C * C = 0 is solved instead
 * and returned as the certificate. Both answers are re-verified exactly.
 */
inline ProjectivityVerdict is_projective(const MoriCone& mc)
{
    ProjectivityVerdict v;
    const std::size_t k = mc.generators.size();
    const std::size_t m = mc.generators.front().cls.size();

    // d = d_plus - d_minus, slack s: C d_plus - C d_minus - s = 1
    RatMatrix a(k, RationalVector(2 * m + k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            a[i][r] = Rational(mc.generators[i].cls[r]);
            a[i][m + r] = -a[i][r];
        }
        a[i][2 * m + i] = -1;
    }
    if (auto x = lp::find_nonnegative_solution(a, RationalVector(k, Rational(1)))) {
        RationalVector d(m);
        for (std::size_t r = 0; r < m; ++r)
            d[r] = (*x)[r] - (*x)[m + r];
        v.projective = true;
        v.ample_witness = std::move(d);
    } else {
        RatMatrix g(m + 1, RationalVector(k, Rational(0)));
        RationalVector rhs(m + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t r = 0; r < m; ++r)
                g[r][i] = Rational(mc.generators[i].cls[r]);
            g[m][i] = 1;
        }
        rhs[m] = 1;
        auto y = lp::find_nonnegative_solution(g, rhs);
        if (!y)
            throw InvariantViolation("is_projective: neither an ample divisor nor a certificate exists");
        std::vector<std::pair<std::size_t, Rational>> cert;
        for (std::size_t i = 0; i < k; ++i)
            if ((*y)[i] != 0)
                cert.emplace_back(mc.generators[i].walls.front(), (*y)[i]);
        std::sort(cert.begin(), cert.end());
        v.projective = false;
        v.degeneracy_certificate = std::move(cert);
    }
    if (!verify_verdict(mc, v))
        throw InvariantViolation("is_projective: verdict failed exact re-verification");
    return v;
}

inline ProjectivityVerdict is_projective(const Fan& f) { return is_projective(MoriCone(f)); }

namespace detail {

inline bool positively_proportional(const CurveClass& a, const CurveClass& b)
{
    std::size_t i = 0;
    while (i < a.size() && a[i] == 0)
        ++i;
    if (i == a.size() || b[i] == 0 || (a[i] > 0) != (b[i] > 0))
        return false;
    // b == (b_i / a_i) * a, compared without division
    for (std::size_t r = 0; r < a.size(); ++r)
        if (b[r] * a[i] != a[r] * b[i])
            return false;
    return true;
}

} // namespace detail

/**
 * Certificate that a class is a nonnegative combination of the other
 * generators: pairs (generator index, coefficient). Empty when the class
 * spans an edge of the cone.
 */
inline std::optional<std::vector<std::pair<std::size_t, Rational>>>
non_extremality_certificate(const MoriCone& mc, std::size_t generator)
{
    const CurveClass& c = mc.generators.at(generator).cls;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < mc.generators.size(); ++i)
        if (!detail::positively_proportional(c, mc.generators[i].cls))
            others.push_back(i);
    if (others.empty())
        return std::nullopt;

    const std::size_t m = c.size();
    RatMatrix a(m, RationalVector(others.size(), Rational(0)));
    RationalVector rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
        rhs[r] = Rational(c[r]);
        for (std::size_t j = 0; j < others.size(); ++j)
            a[r][j] = Rational(mc.generators[others[j]].cls[r]);
    }
    auto y = lp::find_nonnegative_solution(a, rhs);
    if (!y)
        return std::nullopt;
    std::vector<std::pair<std::size_t, Rational>> combo;
    for (std::size_t j = 0; j < others.size(); ++j)
        if ((*y)[j] != 0)
            combo.emplace_back(others[j], (*y)[j]);
    return combo;
}

inline bool is_extremal_generator(const MoriCone& mc, std::size_t generator)
{
    return !non_extremality_certificate(mc, generator).has_value();
}

inline bool is_extremal(const MoriCone& mc, const Wall& w)
{
    return is_extremal_generator(mc, mc.generator_of[mc.wall_index(w)]);
}

inline bool is_extremal(const Fan& f, const Wall& w) { return is_extremal(MoriCone(f), w); }

/** Extremal with positive anticanonical degree. */
inline bool is_mori_extremal(const MoriCone& mc, const Wall& w)
{
    const std::size_t i = mc.wall_index(w);
    return anticanonical_degree(mc.relations[i]) > 0 && is_extremal_generator(mc, mc.generator_of[i]);
}

/** Indices of the generators spanning edges of the cone. */
inline std::vector<std::size_t> extremal_generators(const MoriCone& mc)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mc.generators.size(); ++i)
        if (is_extremal_generator(mc, i))
            out.push_back(i);
    return out;
}

/** Number of edges R with -K . R > 0. */
inline std::size_t count_mori_extremal_rays(const MoriCone& mc)
{
    std::size_t count = 0;
    for (auto i : extremal_generators(mc)) {
        Integer deg = 0;
        for (const auto& c : mc.generators[i].cls)
            deg += c;
        if (deg > 0)
            ++count;
    }
    return count;
}

struct Fibration
{
    std::size_t base_dim = 0;
    friend bool operator==(const Fibration&, const Fibration&) = default;
};

struct Birational
{
    std::size_t exceptional_dim = 0;
    std::size_t image_dim = 0;
    std::size_t fiber_dim = 0;
    bool divisorial = false;
    friend bool operator==(const Birational&, const Birational&) = default;
};

struct ContractionInfo
{
    std::size_t alpha = 0; // number of a_i < 0
    std::size_t beta = 0;  // number of a_i <= 0
    std::variant<Fibration, Birational> kind;
    bool mori_extremal = false;
};

/** Shape of the contraction of an extremal wall, read off its relation. */
inline ContractionInfo classify_contraction(const MoriCone& mc, std::size_t dim, const Wall& w)
{
    const std::size_t i = mc.wall_index(w);
    if (!is_extremal_generator(mc, mc.generator_of[i]))
        throw NotExtremal("classify_contraction: wall class is not extremal");
    const WallRelation& rel = mc.relations[i];

    ContractionInfo info;
    for (const auto& a : rel.normal_degrees()) {
        if (a < 0)
            ++info.alpha;
        if (a <= 0)
            ++info.beta;
    }
    if (info.alpha == 0)
        info.kind = Fibration{info.beta};
    else
        info.kind = Birational{dim - info.alpha, info.beta - info.alpha, dim - info.beta, info.alpha == 1};
    info.mori_extremal = anticanonical_degree(rel) > 0;
    return info;
}

inline ContractionInfo classify_contraction(const Fan& f, const Wall& w)
{
    return classify_contraction(MoriCone(f), f.dim(), w);
}

inline json verdict_to_json(const ProjectivityVerdict& v)
{
    json j{{"projective", v.projective}};
    if (v.ample_witness) {
        json w = json::array();
        for (const auto& q : *v.ample_witness)
            w.push_back(rational_to_json(q));
        j["witness"] = std::move(w);
    }
    if (v.degeneracy_certificate) {
        json c = json::array();
        for (const auto& [wall, y] : *v.degeneracy_certificate)
            c.push_back(json{{"wall", wall}, {"y", rational_to_json(y)}});
        j["certificate"] = std::move(c);
    }
    return j;
}

inline json contraction_to_json(const ContractionInfo& info)
{
    json j{{"alpha", info.alpha}, {"beta", info.beta}, {"mori_extremal", info.mori_extremal}};
    if (const auto* fib = std::get_if<Fibration>(&info.kind)) {
        j["kind"] = "fibration";
        j["base_dim"] = fib->base_dim;
    } else {
        const auto& bir = std::get<Birational>(info.kind);
        j["kind"] = "birational";
        j["exceptional_dim"] = bir.exceptional_dim;
        j["image_dim"] = bir.image_dim;
        j["fiber_dim"] = bir.fiber_dim;
        j["divisorial"] = bir.divisorial;
    }
    return j;
}

} // namespace toric
