#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/** A star subdivision together with the bookkeeping of its exceptional locus. */
struct BlowupRecord
{
    Fan base;
    Fan result;
    Cone center;                     // indices in base
    std::size_t new_ray = 0;         // index in result, always base.num_rays()
    std::vector<Wall> exceptional_walls; // curves in fibers of the blow-down map
    std::vector<Wall> section_walls;     // curve centers only: lifts of the center curve
};

namespace detail {

inline void require_valid(const Fan& f, const char* where)
{
    const ValidationReport rep = validate(f);
    if (!rep.ok())
        throw InvariantViolation(std::string(where) + ": result is not a smooth complete fan (" +
                                 (rep.failures.empty() ? std::string("?") : rep.failures.front()) + ")");
}

} // namespace detail

/**
 * Blow-up along the orbit closure of a cone: inserts e = sum of the center
 * generators and replaces each maximal cone containing the center by the
 * |center| cones obtained by swapping e for one center ray.
 */
inline BlowupRecord star_subdivision(const Fan& f, const Cone& center_in)
{
    const Cone center = make_cone(center_in);
    if (center.size() != center_in.size() || center.size() < 2 || center.size() > f.dim())
        throw NotAFace("star_subdivision: center must have between 2 and dim distinct rays");
    if (center.back() >= f.num_rays() || !f.is_face(center))
        throw NotAFace("star_subdivision: center is not a face of the fan");

    LatticePoint e = sum(f.generators(center), f.dim());
    if (!is_primitive(e))
        throw InvariantViolation("star_subdivision: sum of a smooth face is not primitive");
    const std::size_t e_idx = f.num_rays();

    std::vector<LatticePoint> rays = f.rays();
    rays.push_back(e);
    std::vector<Cone> cones;
    for (const auto& c : f.cones()) {
        if (!is_subset(center, c)) {
            cones.push_back(c);
            continue;
        }
        for (auto drop : center) {
            Cone d = cone_minus(c, Cone{drop});
            d.push_back(e_idx);
            cones.push_back(make_cone(d));
        }
    }

    BlowupRecord rec{f, Fan(f.dim(), std::move(rays), std::move(cones)), center, e_idx, {}, {}};
    detail::require_valid(rec.result, "star_subdivision");

    // fiber curves: walls through e whose apexes are both center rays
    for (const auto& w : walls(rec.result)) {
        if (!cone_contains(w.rays, e_idx))
            continue;
        if (cone_contains(center, w.apexes.first) && cone_contains(center, w.apexes.second))
            rec.exceptional_walls.push_back(w);
    }
    return rec;
}

/** Blow-up along the invariant curve of a wall; also records the section curves. */
inline BlowupRecord blow_up_curve(const Fan& f, const Wall& curve)
{
    if (curve.rays.size() + 1 != f.dim() || curve.rays.size() < 2)
        throw NotAWall("blow_up_curve: center must be a wall with at least two rays");
    const Wall actual = find_wall(f, curve.rays);
    if (actual.apexes != curve.apexes)
        throw NotAWall("blow_up_curve: apexes do not match the fan");

    BlowupRecord rec = star_subdivision(f, curve.rays);
    // the n-1 curves <C minus e_j, e> map isomorphically onto C
    for (auto drop : curve.rays) {
        Cone w = cone_minus(curve.rays, Cone{drop});
        w.push_back(rec.new_ray);
        rec.section_walls.push_back(find_wall(rec.result, make_cone(w)));
    }
    return rec;
}

/** Index of a ray after removing ray `removed` from the list. */
inline std::size_t index_after_removal(std::size_t i, std::size_t removed)
{
    if (i == removed)
        throw MalformedInput("index_after_removal: index was removed");
    return i > removed ? i - 1 : i;
}

inline Cone cone_after_removal(const Cone& c, std::size_t removed)
{
    Cone out;
    for (auto i : c)
        out.push_back(index_after_removal(i, removed));
    return make_cone(out);
}

/**
 * Inverse star subdivision: removes `ray`, whose generator must equal the
 * sum of the generators in `decomposition` (S). The star of the ray must
 * split into groups sharing an outside part T, each group consisting of the
 * |S| cones (S minus s) + ray + T; each group collapses to S + T.
 *
 * Rays above `ray` shift down by one index in the result.
 */
inline Fan blow_down(const Fan& f, std::size_t ray, const Cone& decomposition)
{
    const Cone s = make_cone(decomposition);
    if (ray >= f.num_rays() || s.size() != decomposition.size() || s.size() < 2 ||
        s.back() >= f.num_rays() || cone_contains(s, ray))
        throw MalformedInput("blow_down: bad ray or decomposition indices");
    if (sum(f.generators(s), f.dim()) != f.ray(ray))
        throw SumMismatch("blow_down: generator is not the sum of the decomposition");

    std::map<Cone, std::vector<Cone>> groups; // outside part T -> cones of the star
    for (const auto& c : f.cones()) {
        if (!cone_contains(c, ray))
            continue;
        const Cone inside = cone_intersection(c, s);
        if (inside.size() + 1 != s.size())
            throw BadStarShape("blow_down: star cone does not contain |S|-1 decomposition rays");
        groups[cone_minus(cone_minus(c, s), Cone{ray})].push_back(c);
    }
    if (groups.empty())
        throw BadStarShape("blow_down: ray lies in no maximal cone");

    std::vector<Cone> cones;
    for (const auto& c : f.cones())
        if (!cone_contains(c, ray))
            cones.push_back(c);
    for (const auto& [outside, members] : groups) {
        if (members.size() != s.size())
            throw BadStarShape("blow_down: star group has the wrong number of cones");
        // each member misses a different decomposition ray
        std::vector<std::size_t> missing;
        for (const auto& c : members)
            missing.push_back(cone_minus(s, c).front());
        if (make_cone(missing).size() != s.size())
            throw BadStarShape("blow_down: star group repeats a cone shape");
        cones.push_back(cone_union(s, outside));
    }

    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < f.num_rays(); ++i)
        if (i != ray)
            rays.push_back(f.ray(i));
    std::vector<Cone> shifted;
    for (const auto& c : cones)
        shifted.push_back(cone_after_removal(c, ray));
    Fan out;
    try {
        out = Fan(f.dim(), std::move(rays), std::move(shifted));
    } catch (const MalformedInput& e) {
        throw BadStarShape(std::string("blow_down: ") + e.what());
    }

    for (const auto& c : out.cones()) {
        const Integer d = determinant(out.generators(c));
        if (d != 1 && d != -1)
            throw ResultSingular("blow_down: replacement cone is not unimodular");
    }
    const ValidationReport rep = validate(out);
    if (!rep.ok())
        throw BadStarShape("blow_down: result is not a fan (" + rep.failures.front() + ")");
    return out;
}

} // namespace toric
