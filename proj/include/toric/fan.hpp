#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/lp.hpp"

namespace toric {

/** Sorted, duplicate-free set of ray indices. */
using Cone = std::vector<std::size_t>;

inline bool cone_contains(const Cone& c, std::size_t i)
{
    return std::binary_search(c.begin(), c.end(), i);
}

inline bool is_subset(const Cone& small, const Cone& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Cone make_cone(std::vector<std::size_t> idx)
{
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

inline Cone cone_minus(const Cone& c, const Cone& remove)
{
    Cone out;
    std::set_difference(c.begin(), c.end(), remove.begin(), remove.end(), std::back_inserter(out));
    return out;
}

inline Cone cone_union(const Cone& a, const Cone& b)
{
    Cone out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Cone cone_intersection(const Cone& a, const Cone& b)
{
    Cone out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/**
 * A simplicial fan given by primitive ray generators and maximal cones.
 *
 * Construction only checks that the data is well formed: rays are
 * canonicalized to primitive form and must be distinct, every cone has
 * exactly dim distinct in-range indices. Smoothness, completeness and the
 * fan property are checked by validate().
 */
class Fan
{
public:
    Fan() = default;

    Fan(std::size_t dim, std::vector<LatticePoint> rays, std::vector<Cone> cones)
        : dim_(dim)
    {
        if (dim == 0)
            throw MalformedInput("fan: dimension must be positive");
        std::set<LatticePoint> seen;
        rays_.reserve(rays.size());
        for (auto& r : rays) {
            if (r.size() != dim)
                throw MalformedInput("fan: ray of length " + std::to_string(r.size()) +
                                     " in dimension " + std::to_string(dim));
            if (is_zero(r))
                throw MalformedInput("fan: zero ray");
            LatticePoint p = primitive_vector(r);
            if (!seen.insert(p).second)
                throw MalformedInput("fan: duplicate ray");
            rays_.push_back(std::move(p));
        }
        std::set<Cone> cone_set;
        for (auto& c : cones) {
            Cone s = make_cone(c);
            if (s.size() != c.size() || s.size() != dim)
                throw MalformedInput("fan: maximal cone must have exactly dim distinct rays");
            if (!s.empty() && s.back() >= rays_.size())
                throw MalformedInput("fan: ray index out of range");
            if (!cone_set.insert(s).second)
                throw MalformedInput("fan: duplicate maximal cone");
        }
        cones_.assign(cone_set.begin(), cone_set.end());
    }

    std::size_t dim() const { return dim_; }
    const std::vector<LatticePoint>& rays() const { return rays_; }
    const LatticePoint& ray(std::size_t i) const { return rays_.at(i); }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<Cone>& cones() const { return cones_; }

    std::vector<LatticePoint> generators(const Cone& c) const
    {
        std::vector<LatticePoint> out;
        out.reserve(c.size());
        for (auto i : c)
            out.push_back(rays_.at(i));
        return out;
    }

    bool has_cone(const Cone& c) const
    {
        return std::binary_search(cones_.begin(), cones_.end(), c);
    }

    /** True when c is a face of some maximal cone. */
    bool is_face(const Cone& c) const
    {
        return std::any_of(cones_.begin(), cones_.end(),
                           [&](const Cone& m) { return is_subset(c, m); });
    }

    std::optional<std::size_t> find_ray(const LatticePoint& v) const
    {
        for (std::size_t i = 0; i < rays_.size(); ++i)
            if (rays_[i] == v)
                return i;
        return std::nullopt;
    }

    friend bool operator==(const Fan& a, const Fan& b)
    {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<LatticePoint> rays_;
    std::vector<Cone> cones_;
};

/** A codimension-one cone together with the two rays completing it to maximal cones. */
struct Wall
{
    Cone rays;
    std::pair<std::size_t, std::size_t> apexes;

    friend bool operator==(const Wall&, const Wall&) = default;
    friend auto operator<=>(const Wall&, const Wall&) = default;
};

struct ValidationReport
{
    bool smooth = false;
    bool complete = false;
    bool proper = false;
    std::vector<std::string> failures;

    bool ok() const { return smooth && complete && proper && failures.empty(); }
};

namespace detail {

inline std::string cone_str(const Cone& c)
{
    std::string s = "<";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + ">";
}

/** Every size dim-1 face of a maximal cone, mapped to its adjacent apexes. */
inline std::map<Cone, std::vector<std::size_t>> facet_adjacency(const Fan& f)
{
    std::map<Cone, std::vector<std::size_t>> adj;
    for (const auto& c : f.cones()) {
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Cone face;
            face.reserve(c.size() - 1);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (k != drop)
                    face.push_back(c[k]);
            adj[face].push_back(c[drop]);
        }
    }
    return adj;
}

/**
 * True when the simplicial cones s and t meet exactly in the cone spanned
 * by their shared rays.
 *
 * Decided by exact feasibility: a common point with positive weight on some
 * non-shared generator exists iff the intersection is larger than the face.
 */
inline bool meet_properly(const Fan& f, const Cone& s, const Cone& t)
{
    const Cone shared = cone_intersection(s, t);
    const std::size_t n = f.dim();
    const std::size_t cols = s.size() + t.size();
    RatMatrix a(n + 1, RationalVector(cols, Rational(0)));
    RationalVector b(n + 1, Rational(0));
    for (std::size_t j = 0; j < s.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i)
            a[i][j] = Rational(f.ray(s[j])[i]);
        if (!cone_contains(shared, s[j]))
            a[n][j] = 1;
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i)
            a[i][s.size() + j] = Rational(-f.ray(t[j])[i]);
        if (!cone_contains(shared, t[j]))
            a[n][s.size() + j] = 1;
    }
    b[n] = 1;
    return !lp::find_nonnegative_solution(a, b).has_value();
}

} // namespace detail

/**
 * Checks smoothness, completeness and the fan property.
 *
 * smooth: every maximal cone has determinant +-1.
 * complete: cones exist and every facet of a maximal cone bounds exactly two.
 * proper: any two maximal cones meet in their common face.
 */
inline ValidationReport validate(const Fan& f)
{
    ValidationReport rep;
    rep.smooth = true;
    for (const auto& c : f.cones()) {
        const Integer d = determinant(f.generators(c));
        if (d != 1 && d != -1) {
            rep.smooth = false;
            rep.failures.push_back("cone " + detail::cone_str(c) + " has determinant " + d.str());
        }
    }

    rep.complete = !f.cones().empty();
    if (f.cones().empty())
        rep.failures.emplace_back("fan has no maximal cones");
    for (const auto& [face, apexes] : detail::facet_adjacency(f)) {
        if (apexes.size() != 2) {
            rep.complete = false;
            rep.failures.push_back("wall " + detail::cone_str(face) + " bounds " +
                                   std::to_string(apexes.size()) + " maximal cones");
        }
    }

    std::vector<bool> used(f.num_rays(), false);
    for (const auto& c : f.cones())
        for (auto i : c)
            used[i] = true;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            rep.failures.push_back("ray " + std::to_string(i) + " lies in no maximal cone");

    rep.proper = true;
    const auto& cs = f.cones();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (!detail::meet_properly(f, cs[i], cs[j])) {
                rep.proper = false;
                rep.failures.push_back("cones " + detail::cone_str(cs[i]) + " and " +
                                       detail::cone_str(cs[j]) + " overlap");
            }
        }
    }
    // completeness by wall count is only conclusive for proper fans
    if (!rep.proper)
        rep.complete = false;
    return rep;
}

/** All walls, sorted by ray set; each appears once with its two apexes. */
inline std::vector<Wall> walls(const Fan& f)
{
    std::vector<Wall> out;
    for (const auto& [face, apexes] : detail::facet_adjacency(f)) {
        if (apexes.size() != 2)
            throw NotComplete("walls: face " + detail::cone_str(face) + " bounds " +
                              std::to_string(apexes.size()) + " maximal cones");
        out.push_back(Wall{face, std::minmax(apexes[0], apexes[1])});
    }
    return out;
}

/** The wall with the given ray set, or NotAWall. */
inline Wall find_wall(const Fan& f, const Cone& rays)
{
    const Cone c = make_cone(rays);
    if (c.size() + 1 != f.dim())
        throw NotAWall("find_wall: " + detail::cone_str(c) + " does not have dim-1 rays");
    std::vector<std::size_t> apexes;
    for (const auto& m : f.cones())
        if (is_subset(c, m))
            apexes.push_back(cone_minus(m, c).front());
    if (apexes.size() != 2)
        throw NotAWall("find_wall: " + detail::cone_str(c) + " bounds " +
                       std::to_string(apexes.size()) + " maximal cones");
    return Wall{c, std::minmax(apexes[0], apexes[1])};
}

/** Maximal cones containing the given ray. */
inline std::vector<Cone> star(const Fan& f, std::size_t ray)
{
    if (ray >= f.num_rays())
        throw MalformedInput("star: ray index out of range");
    std::vector<Cone> out;
    for (const auto& c : f.cones())
        if (cone_contains(c, ray))
            out.push_back(c);
    return out;
}

/** Maximal cones containing every ray of the given cone. */
inline std::vector<Cone> star(const Fan& f, const Cone& face)
{
    std::vector<Cone> out;
    for (const auto& c : f.cones())
        if (is_subset(face, c))
            out.push_back(c);
    return out;
}

inline std::size_t picard_number(const Fan& f) { return f.num_rays() - f.dim(); }

/** Fan with rays permuted so that old index i becomes perm[i]. */
inline Fan relabel(const Fan& f, const std::vector<std::size_t>& perm)
{
    std::vector<LatticePoint> rays(f.num_rays());
    for (std::size_t i = 0; i < perm.size(); ++i)
        rays.at(perm[i]) = f.ray(i);
    std::vector<Cone> cones;
    for (const auto& c : f.cones()) {
        Cone d;
        for (auto i : c)
            d.push_back(perm[i]);
        cones.push_back(make_cone(d));
    }
    return Fan(f.dim(), rays, cones);
}

/** Equality up to reordering the rays. */
inline bool same_up_to_ray_order(const Fan& a, const Fan& b)
{
    if (a.dim() != b.dim() || a.num_rays() != b.num_rays() || a.cones().size() != b.cones().size())
        return false;
    std::vector<std::size_t> perm(a.num_rays());
    for (std::size_t i = 0; i < a.num_rays(); ++i) {
        auto j = b.find_ray(a.ray(i));
        if (!j)
            return false;
        perm[i] = *j;
    }
    return relabel(a, perm) == b;
}

/**
 * Searches for g in GL(n, Z) mapping the rays of a onto the rays of b and
 * maximal cones onto maximal cones. Returns the ray permutation (index in
 * a -> index in b) when one exists.
 *
 * Any such map sends a fixed maximal cone of a onto some maximal cone of b,
 * so it suffices to try every cone of b with every ordering of its rays.
 * Requires the first cone of a to be unimodular.
 */
inline std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const Fan& a, const Fan& b)
{
    const std::size_t n = a.dim();
    if (n != b.dim() || a.num_rays() != b.num_rays() || a.cones().size() != b.cones().size() ||
        a.cones().empty())
        return std::nullopt;

    const Cone& base = a.cones().front();
    // source basis as columns; solve g * u_k = w_k via inverse of U
    RatMatrix u(n, RationalVector(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            u[i][k] = Rational(a.ray(base[k])[i]);
    // Gauss-Jordan inverse
    RatMatrix inv(n, RationalVector(n, Rational(0)));
    {
        RatMatrix m = u;
        for (std::size_t i = 0; i < n; ++i)
            inv[i][i] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m[p][c] == 0)
                ++p;
            if (p == n)
                return std::nullopt;
            std::swap(m[c], m[p]);
            std::swap(inv[c], inv[p]);
            const Rational piv = m[c][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[c][j] /= piv;
                inv[c][j] /= piv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || m[i][c] == 0)
                    continue;
                const Rational fct = m[i][c];
                for (std::size_t j = 0; j < n; ++j) {
                    m[i][j] -= fct * m[c][j];
                    inv[i][j] -= fct * inv[c][j];
                }
            }
        }
    }

    const std::set<Cone> target_cones(b.cones().begin(), b.cones().end());
    for (const auto& tc : b.cones()) {
        std::vector<std::size_t> order(tc.begin(), tc.end());
        do {
            // g = W * U^{-1}
            RatMatrix g(n, RationalVector(n, Rational(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        g[i][j] += Rational(b.ray(order[k])[i]) * inv[k][j];
            bool integral = true;
            IntMatrix gi(n, LatticePoint(n));
            for (std::size_t i = 0; i < n && integral; ++i)
                for (std::size_t j = 0; j < n && integral; ++j) {
                    if (boost::multiprecision::denominator(g[i][j]) != 1)
                        integral = false;
                    else
                        gi[i][j] = boost::multiprecision::numerator(g[i][j]);
                }
            if (!integral)
                continue;
            const Integer d = determinant(gi);
            if (d != 1 && d != -1)
                continue;

            std::vector<std::size_t> perm(a.num_rays());
            bool ok = true;
            for (std::size_t r = 0; r < a.num_rays() && ok; ++r) {
                LatticePoint img(n, Integer(0));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        img[i] += gi[i][j] * a.ray(r)[j];
                auto hit = b.find_ray(img);
                if (!hit)
                    ok = false;
                else
                    perm[r] = *hit;
            }
            if (!ok)
                continue;
            for (const auto& c : a.cones()) {
                Cone mapped;
                for (auto i : c)
                    mapped.push_back(perm[i]);
                if (!target_cones.count(make_cone(mapped))) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return perm;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return std::nullopt;
}

} // namespace toric
