// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace toric;

namespace {

class Failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw Failure(what);
}

/** Every fan touched by the criteria, with its LP verdict. */
struct Registry
{
    std::map<std::string, Fan> fans;
    std::map<std::string, bool> projective;

    bool is_projective(const Fan& f)
    {
        const std::string key = fan_to_json(f).dump();
        auto it = projective.find(key);
        if (it != projective.end())
            return it->second;
        const MoriCone mc(f);
        const ProjectivityVerdict v = toric::is_projective(mc);
        require(verify_verdict(mc, v), "verdict failed re-verification");
        fans.emplace(key, f);
        projective.emplace(key, v.projective);
        return v.projective;
    }

    void touch(const Fan& f) { is_projective(f); }
};

Registry registry;

std::string wall_name(const Wall& w) { return detail::wall_str(w); }

Fan xab_fan(int a, int b) { return detail::xab(a, b); }

// base fans for the Ewald and blow-up sweeps
std::vector<Fan> gallery_bases()
{
    std::vector<Fan> out;
    for (std::int64_t n = 1; n <= 3; ++n)
        out.push_back(get_fan("pn", {n}).fan);
    for (std::int64_t a = 0; a <= 3; ++a)
        out.push_back(get_fan("hirzebruch", {a}).fan);
    out.push_back(get_fan("p1xp1").fan);
    out.push_back(get_fan("oda3").fan);
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            out.push_back(xab_fan(a, b));
    out.push_back(get_fan("ewald-tower", {1}).fan);
    return out;
}

std::string oda_threefold()
{
    const Fan x = get_fan("oda3").fan;
    const ValidationReport rep = validate(x);
    require(rep.smooth && rep.complete && rep.proper, "Oda fan is not smooth and complete");
    require(picard_number(x) == 4, "Picard number is not 4");

    const MoriCone mc(x);
    const ProjectivityVerdict v = is_projective(mc);
    require(!v.projective && v.degeneracy_certificate, "Oda fan reported projective");
    require(verify_verdict(mc, v), "degeneracy certificate does not re-verify");
    registry.touch(x);

    std::vector<Wall> minus_one;
    for (const auto& rel : mc.relations)
        if (rel.normal_degrees() == std::vector<Integer>{-1, -1})
            minus_one.push_back(rel.wall);
    require(minus_one.size() == 3, "expected 3 walls of degrees (-1,-1), found " + std::to_string(minus_one.size()));

    std::size_t flips = 0;
    for (const auto& c : minus_one) {
        const auto rec = blow_up_curve(x, c);
        require(registry.is_projective(rec.result), "blow-up along " + wall_name(c) + " is not projective");
        const AnalysisReport r = analyze_pair(x, c);
        bool flip = false;
        for (const auto& f : r.findings) {
            registry.touch(f.y);
            if (f.kind == Phenomenon::ForbiddenFlip && validate(f.y).ok() && registry.is_projective(f.y))
                flip = true;
        }
        require(flip, "no forbidden flip for " + wall_name(c));
        ++flips;
    }
    return "rho 4, certificate of " + std::to_string(v.degeneracy_certificate->size()) + " walls, " +
           std::to_string(flips) + " forbidden flips";
}

std::string projectivity_grid()
{
    std::size_t projective = 0;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            const Fan x = xab_fan(a, b);
            require(validate(x).ok(), "X_{" + std::to_string(a) + "," + std::to_string(b) + "} invalid");
            const bool p = registry.is_projective(x);
            require(p == (a == 0 || b == -1),
                    "X_{" + std::to_string(a) + "," + std::to_string(b) + "} projectivity mismatch");
            projective += p;
        }
    return "49 fans, " + std::to_string(projective) + " projective";
}

std::string elementary_transformations()
{
    const Fan target = xab_fan(0, 0);
    for (std::int64_t a : {1, -1}) {
        const auto entry = get_fan("xab", {a, 0});
        require(!entry.notes.distinguished.empty(), "no distinguished curve");
        const AnalysisReport r = analyze_pair(entry.fan, entry.notes.distinguished.front());
        bool found = false;
        for (const auto& f : r.findings) {
            registry.touch(f.y);
            if (f.kind == Phenomenon::ElementaryTransformation && find_lattice_isomorphism(f.y, target))
                found = true;
        }
        require(found, "X_{" + std::to_string(a) + ",0}: no elementary transformation onto X_{0,0}");
    }
    return "X_{1,0} and X_{-1,0} both reach X_{0,0}";
}

std::string trivial_reduction()
{
    const Fan oda = get_fan("oda3").fan;
    // the fixed point <n1, n3, n'3> lies on the curve <n1, n'3>
    const Fan x = star_subdivision(oda, {1, 3, 6}).result;
    const Wall c = find_wall(x, {1, 6});
    registry.touch(x);
    const AnalysisReport r = analyze_pair(x, c);
    bool found = false;
    for (const auto& f : r.findings) {
        if (f.kind != Phenomenon::TrivialReduction)
            continue;
        require(f.x_prime.has_value(), "missing X'");
        require(validate(f.y).ok() && validate(*f.x_prime).ok(), "constructed fans invalid");
        require(registry.is_projective(f.y), "Y not projective");
        registry.touch(*f.x_prime);
        require(*f.x_prime == oda, "X' is not the Oda fan");
        found = true;
    }
    require(found, "no trivial reduction finding");
    return "B_p(Oda) along " + wall_name(c) + ", X' = Oda";
}

std::string ewald()
{
    const Fan p1 = get_fan("pn", {1}).fan;
    const SuspensionRecord s = suspend(p1, {1});
    require(find_lattice_isomorphism(s.suspended, get_fan("hirzebruch", {1}).fan).has_value(),
            "suspend(P1, 1) is not F1");
    require(find_lattice_isomorphism(ewald_blow_down(s, 0), get_fan("pn", {2}).fan).has_value(),
            "blow-down is not P2");
    std::size_t checked = 0;
    for (const auto& x : gallery_bases()) {
        const bool p = registry.is_projective(x);
        for (std::size_t d = 0; d < x.num_rays(); ++d) {
            const Fan xv = ewald_blow_down(suspend(x, x.ray(d)), d);
            require(picard_number(xv) == picard_number(x), "Picard number changed");
            require(registry.is_projective(xv) == p, "projectivity changed");
            ++checked;
        }
    }
    return std::to_string(checked) + " divisor blow-downs";
}

std::string towers()
{
    const auto oda = get_fan("oda3");
    const auto t = ewald_tower(oda.fan, oda.notes.distinguished.front(), 2);
    std::ostringstream detail;
    for (std::size_t s = 1; s <= 2; ++s) {
        const Fan& f = t[s].fan;
        require(f.dim() == 3 + s, "wrong dimension");
        require(validate(f).ok(), "tower fan invalid");
        require(picard_number(f) == 4, "Picard number is not 4");
        const auto start = std::chrono::steady_clock::now();
        const bool p = registry.is_projective(f);
        const bool bp = registry.is_projective(blow_up_curve(f, t[s].curve).result);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(!p, "tower fan is projective");
        require(bp, "blow-up of tower fan is not projective");
        require(secs < 10.0, "LP took " + std::to_string(secs) + " s");
        detail << (s == 1 ? "" : ", ") << "dim " << f.dim() << " in " << static_cast<int>(secs * 1000) << " ms";
    }
    return detail.str();
}

std::string no_fano_blowups()
{
    std::vector<Fan> fans{get_fan("oda3").fan};
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (a != 0 && b != -1)
                fans.push_back(xab_fan(a, b));
    std::size_t checked = 0;
    for (const auto& x : fans) {
        require(!registry.is_projective(x), "expected a non-projective fan");
        for (const auto& w : walls(x)) {
            const Fan xt = blow_up_curve(x, w).result;
            if (!registry.is_projective(xt))
                continue;
            require(!is_fano(xt), "Fano blow-up along " + wall_name(w));
            ++checked;
        }
    }
    return std::to_string(checked) + " projective curve blow-ups, none Fano";
}

std::string fiber_extremality()
{
    std::vector<BlowupRecord> recs;
    for (const auto& x : gallery_bases()) {
        for (const auto& w : walls(x))
            if (w.rays.size() >= 2)
                recs.push_back(blow_up_curve(x, w));
        if (x.dim() >= 2)
            recs.push_back(star_subdivision(x, x.cones().front()));
    }
    const std::size_t gallery_count = recs.size();
    for (auto& rec : oracle::random_star_subdivisions(50, 20261016))
        recs.push_back(std::move(rec));

    std::size_t compared = 0;
    for (const auto& rec : recs) {
        require(blow_down(rec.result, rec.new_ray, rec.center) == rec.base, "round trip failed");
        if (!registry.is_projective(rec.result))
            continue;
        require(fiber_class_extremal(rec) == registry.is_projective(rec.base), "extremality mismatch");
        ++compared;
    }
    return std::to_string(gallery_count) + " gallery + 50 random blow-ups, " + std::to_string(compared) +
           " with projective result";
}

std::string oracle_agreement()
{
    std::size_t n = 0;
    for (const auto& [key, f] : registry.fans) {
        require(oracle::fm_is_projective(f) == registry.projective.at(key), "oracle disagrees on " + key);
        ++n;
    }
    return std::to_string(n) + " fans";
}

std::string identities()
{
    std::size_t wall_count = 0;
    for (const auto& [key, f] : registry.fans) {
        const auto rels = wall_relations(f);
        IntMatrix classes;
        for (const auto& rel : rels) {
            LatticePoint total(f.dim(), Integer(0));
            for (std::size_t r = 0; r < f.num_rays(); ++r)
                for (std::size_t i = 0; i < f.dim(); ++i)
                    total[i] += rel.coeffs[r] * f.ray(r)[i];
            require(is_zero(total), "relation does not vanish");
            Integer expected = 2;
            for (const auto& a : rel.normal_degrees())
                expected += a;
            require(anticanonical_degree(rel) == expected, "anticanonical degree mismatch");
            classes.push_back(rel.coeffs);
            ++wall_count;
        }
        require(rank(classes) == f.num_rays() - f.dim(), "wall-class rank is not rho");
    }
    return std::to_string(wall_count) + " walls over " + std::to_string(registry.fans.size()) + " fans";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"Oda threefold", oda_threefold},
        {"X_{a,b} projectivity grid", projectivity_grid},
        {"elementary transformations from X_{+-1,0}", elementary_transformations},
        {"trivial reduction", trivial_reduction},
        {"Ewald suspension and blow-down", ewald},
        {"towers in dimensions 4 and 5", towers},
        {"projective curve blow-ups of non-projective threefolds are not Fano", no_fano_blowups},
        {"fiber extremality equivalence and round trips", fiber_extremality},
        {"Fourier-Motzkin oracle agreement", oracle_agreement},
        {"wall relation identities", identities},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string status, detail;
        try {
            detail = criteria[i].second();
            status = "PASS";
        } catch (const std::exception& e) {
            detail = e.what();
            status = "FAIL";
            ++failed;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << status << " criterion " << i + 1 << ": " << criteria[i].first << " -- " << detail << " ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)" << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
              << std::endl;
    return failed ? 1 : 0;
}
