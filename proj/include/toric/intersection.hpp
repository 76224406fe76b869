#pragma once

#include <cstddef>
#include <vector>

#include "toric/fan.hpp"
#include "toric/fan_io.hpp"

namespace toric {

/**
 * The relation apex_1 + apex_2 + sum_i a_i * wall_i = 0 across a wall.
 *
 * coeffs is indexed by ray: 1 at both apexes, a_i at the wall rays and 0
 * elsewhere. The same vector is the numerical class of the invariant curve,
 * i.e. its intersection numbers with every invariant divisor. The a_i are
 * the degrees of the splitting of the curve's normal bundle.
 */
struct WallRelation
{
    Wall wall;
    std::vector<Integer> coeffs;

    /** a_i in the order of wall.rays. */
    std::vector<Integer> normal_degrees() const
    {
        std::vector<Integer> out;
        out.reserve(wall.rays.size());
        for (auto r : wall.rays)
            out.push_back(coeffs[r]);
        return out;
    }
};

using CurveClass = std::vector<Integer>;

inline WallRelation wall_relation(const Fan& f, const Wall& w)
{
    const Wall actual = find_wall(f, w.rays);
    if (actual.apexes != w.apexes)
        throw NotAWall("wall_relation: apexes do not match the fan");

    const std::vector<LatticePoint> targets{f.ray(w.apexes.first), f.ray(w.apexes.second)};
    const RationalVector c = solve_integer_relation(targets, f.generators(w.rays));

    WallRelation rel{w, std::vector<Integer>(f.num_rays(), Integer(0))};
    rel.coeffs[w.apexes.first] = 1;
    rel.coeffs[w.apexes.second] = 1;
    for (std::size_t i = 0; i < w.rays.size(); ++i) {
        // smoothness of both adjacent cones makes the coefficients integral
        if (boost::multiprecision::denominator(c[i]) != 1)
            throw InvariantViolation("wall_relation: non-integral coefficient on a smooth wall");
        rel.coeffs[w.rays[i]] = -boost::multiprecision::numerator(c[i]);
    }
    return rel;
}

inline CurveClass curve_class(const Fan& f, const Wall& w) { return wall_relation(f, w).coeffs; }

/** -K . C = 2 + sum a_i, the pairing of the class with the all-ones divisor. */
inline Integer anticanonical_degree(const WallRelation& rel)
{
    Integer s = 0;
    for (const auto& c : rel.coeffs)
        s += c;
    return s;
}

inline std::vector<WallRelation> wall_relations(const Fan& f)
{
    std::vector<WallRelation> out;
    for (const auto& w : walls(f))
        out.push_back(wall_relation(f, w));
    return out;
}

/** -K is ample iff it is positive on every invariant curve. */
inline bool is_fano(const Fan& f)
{
    for (const auto& rel : wall_relations(f))
        if (anticanonical_degree(rel) <= 0)
            return false;
    return true;
}

/** Euler characteristic of the normal bundle: -K . C + n - 3. */
inline Integer chi_normal_curve(const Fan& f, const Wall& w)
{
    return anticanonical_degree(wall_relation(f, w)) + Integer(f.dim()) - 3;
}

/** Rows are the classes of all walls, in walls() order. */
inline IntMatrix wall_class_matrix(const Fan& f)
{
    IntMatrix m;
    for (const auto& rel : wall_relations(f))
        m.push_back(rel.coeffs);
    return m;
}

inline json relation_to_json(const WallRelation& rel)
{
    json coeffs = json::array();
    for (const auto& c : rel.coeffs)
        coeffs.push_back(integer_to_json(c));
    json j = wall_to_json(rel.wall);
    j["coeffs"] = std::move(coeffs);
    return j;
}

} // namespace toric
