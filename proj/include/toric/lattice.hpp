#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "toric/errors.hpp"

/**
 * Exact integer and rational linear algebra for fan computations.
 *
 * Everything here is arbitrary precision (GMP via boost::multiprecision);
 * nothing in the library touches floating point.
 */
namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** A point of the lattice N, one coordinate per ambient dimension. */
using LatticePoint = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline bool is_zero(const LatticePoint& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer content(const LatticePoint& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    return g;
}

/** Divides v by the gcd of its coordinates. */
inline LatticePoint primitive_vector(const LatticePoint& v)
{
    if (is_zero(v))
        throw ZeroVector("primitive_vector: zero vector has no direction");
    const Integer g = content(v);
    LatticePoint out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x / g);
    return out;
}

inline bool is_primitive(const LatticePoint& v) { return !is_zero(v) && content(v) == 1; }

inline LatticePoint add(const LatticePoint& a, const LatticePoint& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("add: vectors of different length");
    LatticePoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline LatticePoint sum(std::span<const LatticePoint> vs, std::size_t dim)
{
    LatticePoint out(dim, Integer(0));
    for (const auto& v : vs) {
        if (v.size() != dim)
            throw DimensionMismatch("sum: vector of wrong length");
        for (std::size_t i = 0; i < dim; ++i)
            out[i] += v[i];
    }
    return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("dot: vectors of different length");
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/**
 * Exact determinant of the square matrix whose rows are vs.
 *
 * Fraction-free Bareiss elimination; every intermediate division is exact.
 */
inline Integer determinant(std::span<const LatticePoint> vs)
{
    const std::size_t n = vs.size();
    for (const auto& v : vs)
        if (v.size() != n)
            throw DimensionMismatch("determinant: need n vectors of length n");
    if (n == 0)
        return 1;

    IntMatrix m(vs.begin(), vs.end());
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Integer determinant(const std::vector<LatticePoint>& vs)
{
    return determinant(std::span<const LatticePoint>(vs));
}

/** Rank of a rational matrix by Gaussian elimination. */
inline std::size_t rank(RatMatrix m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m)
{
    RatMatrix q;
    q.reserve(m.size());
    for (const auto& row : m)
        q.emplace_back(row.begin(), row.end());
    return rank(std::move(q));
}

/**
 * Coefficients c with sum(targets) == sum_i c_i * basis_i, exactly.
 *
 * The basis must be linearly independent; a target sum outside its span
 * raises NotInSpan.
 */
inline RationalVector solve_integer_relation(std::span<const LatticePoint> targets,
                                             std::span<const LatticePoint> basis)
{
    if (targets.empty())
        throw DimensionMismatch("solve_integer_relation: no targets");
    const std::size_t n = targets.front().size();
    for (const auto& b : basis)
        if (b.size() != n)
            throw DimensionMismatch("solve_integer_relation: basis vector of wrong length");
    const LatticePoint rhs = sum(targets, n);
    const std::size_t k = basis.size();

    // augmented n x (k+1) system, columns are basis vectors
    RatMatrix m(n, RationalVector(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            m[i][j] = Rational(basis[j][i]);
        m[i][k] = Rational(rhs[i]);
    }

    std::vector<std::size_t> pivot_row(k);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = r;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw DegenerateBasis("solve_integer_relation: basis is linearly dependent");
        std::swap(m[r], m[p]);
        const Rational piv = m[r][c];
        for (std::size_t j = c; j <= k; ++j)
            m[r][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= k; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (m[i][k] != 0)
            throw NotInSpan("solve_integer_relation: target sum is outside the span of the basis");

    RationalVector out(k);
    for (std::size_t c = 0; c < k; ++c)
        out[c] = m[pivot_row[c]][k];
    return out;
}

inline RationalVector solve_integer_relation(const std::vector<LatticePoint>& targets,
                                             const std::vector<LatticePoint>& basis)
{
    return solve_integer_relation(std::span<const LatticePoint>(targets),
                                  std::span<const LatticePoint>(basis));
}

/** Canonical "p/q" rendering; integers render with denominator 1. */
inline std::string to_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/** Parses "p/q" or a plain integer "p". */
inline Rational parse_rational(const std::string& s)
{
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(s));
        const Integer den(s.substr(slash + 1));
        if (den == 0)
            throw MalformedInput("parse_rational: zero denominator in '" + s + "'");
        return Rational(Integer(s.substr(0, slash)), den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const ToricError*>(&e))
            throw;
        throw MalformedInput("parse_rational: cannot parse '" + s + "'");
    }
}

} // namespace toric
