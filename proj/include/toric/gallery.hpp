#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/analyzer.hpp"
#include "toric/ewald.hpp"
#include "toric/fan_io.hpp"

namespace toric {

struct GalleryNotes
{
    bool projective = false;
    std::size_t rho = 0;
    std::size_t dim = 0;
    std::vector<Wall> distinguished;
};

struct GalleryEntry
{
    std::string name;
    std::vector<std::int64_t> params;
    Fan fan;
    GalleryNotes notes;
};

namespace gallery_data {

// rays: n0 = -(n1+n2+n3), n1, n2, n3 (standard basis), n'i = n0 + ni
inline constexpr const char* oda3 = R"({
  "dim": 3,
  "rays": [[-1,-1,-1], [1,0,0], [0,1,0], [0,0,1], [0,-1,-1], [-1,0,-1], [-1,-1,0]],
  "max_cones": [[1,2,3],
                [0,4,5], [0,5,6], [0,4,6],
                [1,2,4], [2,3,5], [1,3,6],
                [2,4,5], [3,5,6], [1,4,6]]
})";

// the curves with normal bundle O(-1)^2: <n1,n'3>, <n2,n'1>, <n3,n'2>
inline const std::vector<Wall> oda3_distinguished{
    Wall{{1, 6}, {3, 4}}, Wall{{2, 4}, {1, 5}}, Wall{{3, 5}, {2, 6}}};

// rays: n, n', n'', -n', -n'', -n-n'-n'', -n+b n', n+n'+a n''
inline const std::vector<Cone> xab_cones{
    {0, 2, 3}, {0, 2, 7}, {0, 3, 4}, {0, 4, 7}, {1, 2, 6}, {1, 2, 7},
    {1, 4, 5}, {1, 4, 7}, {1, 5, 6}, {2, 3, 6}, {3, 4, 5}, {3, 5, 6}};

} // namespace gallery_data

namespace detail {

inline void require_params(const std::string& name, const std::vector<std::int64_t>& params, std::size_t count)
{
    if (params.size() != count)
        throw BadParams(name + " takes " + std::to_string(count) + " parameter(s), got " +
                        std::to_string(params.size()));
}

inline Fan projective_space(std::int64_t n)
{
    if (n < 1 || n > 12)
        throw BadParams("pn: dimension must be between 1 and 12");
    const auto dim = static_cast<std::size_t>(n);
    std::vector<LatticePoint> rays;
    for (std::size_t i = 0; i < dim; ++i) {
        LatticePoint e(dim, Integer(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(LatticePoint(dim, Integer(-1)));
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= dim; ++skip) {
        Cone c;
        for (std::size_t i = 0; i <= dim; ++i)
            if (i != skip)
                c.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan(dim, std::move(rays), std::move(cones));
}

inline Fan surface(std::int64_t a)
{
    return Fan(2, {{1, 0}, {0, 1}, {-1, Integer(a)}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan xab(std::int64_t a, std::int64_t b)
{
    const std::vector<LatticePoint> rays{{1, 0, 0},  {0, 1, 0},   {0, 0, 1},
                                         {0, -1, 0}, {0, 0, -1},  {-1, -1, -1},
                                         {-1, Integer(b), 0}, {1, 1, Integer(a)}};
    return Fan(3, rays, gallery_data::xab_cones);
}

/** Recomputes every note from the fan; a mismatch is a gallery bug. */
inline void verify_entry(const GalleryEntry& e)
{
    const auto fail = [&](const std::string& what) {
        throw InvariantViolation("gallery " + e.name + ": " + what);
    };
    const ValidationReport rep = validate(e.fan);
    if (!rep.ok())
        fail("fan is not smooth and complete");
    if (e.fan.dim() != e.notes.dim)
        fail("dimension differs from notes");
    if (picard_number(e.fan) != e.notes.rho)
        fail("Picard number differs from notes");
    if (is_projective(e.fan).projective != e.notes.projective)
        fail("projectivity differs from notes");
    for (const auto& w : e.notes.distinguished) {
        if (find_wall(e.fan, w.rays).apexes != w.apexes)
            fail("distinguished wall has wrong apexes");
        if (!e.notes.projective && !is_projective(blow_up_curve(e.fan, w).result).projective)
            fail("blow-up along a distinguished wall is not projective");
    }
}

} // namespace detail

inline std::vector<std::string> gallery_names()
{
    return {"pn", "hirzebruch", "p1xp1", "oda3", "xab", "ewald-tower"};
}

/**
 * Named fans. Parameters: pn (n), hirzebruch (a), p1xp1, oda3, xab (a, b),
 * ewald-tower (steps; base is oda3 with its first distinguished curve).
 */
inline GalleryEntry get_fan(const std::string& name, const std::vector<std::int64_t>& params = {})
{
    GalleryEntry e{name, params, Fan{}, {}};
    if (name == "pn") {
        detail::require_params(name, params, 1);
        e.fan = detail::projective_space(params[0]);
        e.notes = {true, 1, static_cast<std::size_t>(params[0]), {}};
    } else if (name == "hirzebruch") {
        detail::require_params(name, params, 1);
        e.fan = detail::surface(params[0]);
        e.notes = {true, 2, 2, {}};
    } else if (name == "p1xp1") {
        detail::require_params(name, params, 0);
        e.fan = detail::surface(0);
        e.notes = {true, 2, 2, {}};
    } else if (name == "oda3") {
        detail::require_params(name, params, 0);
        e.fan = parse_fan(gallery_data::oda3);
        e.notes = {false, 4, 3, gallery_data::oda3_distinguished};
        std::vector<Wall> minus_one;
        for (const auto& rel : wall_relations(e.fan)) {
            const auto d = rel.normal_degrees();
            if (d == std::vector<Integer>{-1, -1})
                minus_one.push_back(rel.wall);
        }
        if (minus_one != e.notes.distinguished)
            throw InvariantViolation("gallery oda3: (-1,-1) walls differ from notes");
    } else if (name == "xab") {
        detail::require_params(name, params, 2);
        const auto a = params[0], b = params[1];
        if (a < -64 || a > 64 || b < -64 || b > 64)
            throw BadParams("xab: parameters must lie in [-64, 64]");
        e.fan = detail::xab(a, b);
        e.notes = {a == 0 || b == -1, 5, 3, {}};
        // X_{1,b} and X_{-1,b} become projective after blowing up <-a n'', n+n'+a n''>
        if ((a == 1 || a == -1) && b != -1)
            e.notes.distinguished.push_back(Wall{{a == 1 ? 4u : 2u, 7}, {0, 1}});
    } else if (name == "ewald-tower") {
        detail::require_params(name, params, 1);
        if (params[0] < 0 || params[0] > 3)
            throw BadParams("ewald-tower: steps must be between 0 and 3");
        const auto tower = ewald_tower(parse_fan(gallery_data::oda3), gallery_data::oda3_distinguished.front(),
                                       static_cast<std::size_t>(params[0]));
        e.fan = tower.back().fan;
        e.notes = {false, 4, 3 + static_cast<std::size_t>(params[0]), {tower.back().curve}};
    } else {
        throw UnknownName("unknown gallery fan: " + name);
    }
    detail::verify_entry(e);
    return e;
}

} // namespace toric
