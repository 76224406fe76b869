#pragma once

#include <cstddef>
#include <vector>

#include "toric/birational.hpp"
#include "toric/mori.hpp"

namespace toric {

/** Fan of the P^1-fibration over the base twisted by the one-parameter subgroup v. */
struct SuspensionRecord
{
    Fan base;
    LatticePoint v;
    Fan suspended;
    std::size_t ray_up = 0;   // (v, 1), the divisor over 0
    std::size_t ray_down = 0; // (0, -1), the divisor over infinity
    std::vector<std::size_t> lifted_rays; // base ray -> (w, 0)
};

/**
 * Lifts every base cone sigma to (sigma, 0) + (v, 1) and (sigma, 0) + (0, -1).
 * Base ray i becomes ray i of the suspension.
 */
inline SuspensionRecord suspend(const Fan& base, const LatticePoint& v)
{
    const std::size_t n = base.dim();
    if (v.size() != n)
        throw DimensionMismatch("suspend: v has the wrong dimension");

    SuspensionRecord rec;
    rec.base = base;
    rec.v = v;
    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < base.num_rays(); ++i) {
        LatticePoint w = base.ray(i);
        w.push_back(0);
        rays.push_back(std::move(w));
        rec.lifted_rays.push_back(i);
    }
    rec.ray_up = rays.size();
    LatticePoint up = v;
    up.push_back(1);
    rays.push_back(std::move(up));
    rec.ray_down = rays.size();
    LatticePoint down(n + 1, Integer(0));
    down[n] = -1;
    rays.push_back(std::move(down));

    std::vector<Cone> cones;
    for (const auto& c : base.cones()) {
        Cone top = c, bottom = c;
        top.push_back(rec.ray_up);
        bottom.push_back(rec.ray_down);
        cones.push_back(std::move(top));
        cones.push_back(std::move(bottom));
    }
    rec.suspended = Fan(n + 1, std::move(rays), std::move(cones));
    detail::require_valid(rec.suspended, "suspend");
    return rec;
}

/**
 * Contracts the P^1 x D over the divisor D with generator v: removes the
 * lifted ray of D, using (v, 1) + (0, -1) = (v, 0).
 */
inline Fan ewald_blow_down(const SuspensionRecord& rec, std::size_t divisor_ray)
{
    if (divisor_ray >= rec.base.num_rays() || rec.base.ray(divisor_ray) != rec.v)
        throw VMismatch("ewald_blow_down: v is not the generator of the divisor ray");
    return blow_down(rec.suspended, rec.lifted_rays[divisor_ray], make_cone({rec.ray_up, rec.ray_down}));
}

struct TowerStep
{
    Fan fan;
    Wall curve;
    std::optional<std::size_t> divisor_ray; // divisor used to reach this step, in the previous fan
};

/**
 * Iterates the suspension/blow-down over a divisor containing the curve.
 * The first entry is the input pair. Each new pair is re-verified: the fan
 * is non-projective and its blow-up along the curve is projective.
 */
inline std::vector<TowerStep> ewald_tower(const Fan& base, const Wall& curve, std::size_t steps)
{
    std::vector<TowerStep> out{TowerStep{base, find_wall(base, curve.rays), std::nullopt}};
    if (out.front().curve.apexes != curve.apexes)
        throw NotAWall("ewald_tower: apexes do not match the fan");
    for (std::size_t s = 0; s < steps; ++s) {
        const TowerStep& cur = out.back();
        if (cur.curve.rays.empty())
            throw NoSuitableDivisor("ewald_tower: curve lies in no invariant divisor");
        // a divisor contains the curve iff its ray is among the wall rays
        const std::size_t d = cur.curve.rays.front();
        const SuspensionRecord rec = suspend(cur.fan, cur.fan.ray(d));
        Fan next = ewald_blow_down(rec, d);

        Cone rays = cone_minus(cur.curve.rays, Cone{d});
        rays.push_back(rec.ray_up);
        rays.push_back(rec.ray_down);
        const Wall w = find_wall(next, cone_after_removal(make_cone(rays), d));

        if (is_projective(next).projective)
            throw InvariantViolation("ewald_tower: tower fan is projective");
        if (!is_projective(blow_up_curve(next, w).result).projective)
            throw InvariantViolation("ewald_tower: blow-up along the lifted curve is not projective");
        out.push_back(TowerStep{std::move(next), w, d});
    }
    return out;
}

} // namespace toric
