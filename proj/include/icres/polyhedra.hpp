#ifndef ICRES_POLYHEDRA_HPP
#define ICRES_POLYHEDRA_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clutter.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace icres {

/// Limits for the double description engine.  Exceeding either raises ScaleExceeded.
struct DoubleDescriptionOptions
{
    std::size_t max_generators = 4096;
    std::size_t max_rays = 1'000'000;
};

namespace detail {

/// Fraction-free Gaussian elimination; int64 working copy with __int128 products.
inline std::optional<std::size_t> rank_small(std::vector<std::vector<long long>> m, std::size_t cols)
{
    constexpr __int128 limit = (__int128(1) << 62);
    std::size_t r = 0;
    long long prev = 1;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t k = col + 1; k < cols; ++k) {
                __int128 v = __int128(m[r][col]) * m[i][k] - __int128(m[i][col]) * m[r][k];
                v /= prev;
                if (v >= limit || v <= -limit)
                    return std::nullopt;
                m[i][k] = static_cast<long long>(v);
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

inline std::size_t rank_big(std::vector<IntVector> m, std::size_t cols)
{
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t k = col + 1; k < cols; ++k)
                m[i][k] = (m[r][col] * m[i][k] - m[i][col] * m[r][k]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

/// Exact rank of the matrix whose rows are rows[i] for i in `pick`.
inline std::size_t rank_of(const std::vector<IntVector>& rows, const std::vector<std::size_t>& pick, std::size_t cols)
{
    constexpr long long small = 1LL << 30;
    std::vector<std::vector<long long>> fast;
    fast.reserve(pick.size());
    bool fits = true;
    for (auto i : pick) {
        std::vector<long long> row(cols);
        for (std::size_t k = 0; k < cols && fits; ++k) {
            if (rows[i][k] >= small || rows[i][k] <= -small)
                fits = false;
            else
                row[k] = rows[i][k].convert_to<long long>();
        }
        if (!fits)
            break;
        fast.push_back(std::move(row));
    }
    if (fits)
        if (auto r = rank_small(std::move(fast), cols))
            return *r;
    std::vector<IntVector> big;
    big.reserve(pick.size());
    for (auto i : pick)
        big.push_back(rows[i]);
    return rank_big(std::move(big), cols);
}

inline std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols)
{
    std::vector<std::size_t> all(rows.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return rank_of(rows, all, cols);
}

/// Solves B x = rhs for square nonsingular B over the rationals.
inline RationalVector solve_square(std::vector<RationalVector> a, RationalVector rhs)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw Error(ErrorKind::DegenerateCone, "singular basis in initial cone");
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[i][k] -= f * a[col][k];
            rhs[i] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] /= a[i][i];
    return rhs;
}

struct Ray
{
    IntVector x;
    VertexSet zeros;   // indices of processed constraints tight at x
};

}   // namespace detail

/**
 * Extreme rays of the pointed cone { x : <a, x> >= 0 for every row a }.
 *
 * Double description: start from the simplicial cone cut out by the first
 * `dim` linearly independent rows (in the given order), then insert the
 * remaining rows one at a time.  When a row separates the current rays, a
 * new ray is formed from each adjacent (positive, negative) pair, where two
 * rays are adjacent exactly when the constraints tight at both have rank
 * dim - 2.  Rays are kept primitive throughout.
 *
 * Throws DegenerateCone when the rows do not have full column rank (the cone
 * has a lineality space).
 */
inline std::vector<IntVector> extreme_rays(const std::vector<IntVector>& rows, std::size_t dim,
                                           const DoubleDescriptionOptions& options = {})
{
    for (const auto& r : rows)
        if (r.size() != dim)
            throw Error(ErrorKind::DimensionMismatch, "constraint " + to_string(r) + " is not of length "
                        + std::to_string(dim));
    if (rows.size() > options.max_generators)
        throw Error(ErrorKind::ScaleExceeded, std::to_string(rows.size()) + " inequalities exceed the limit of "
                    + std::to_string(options.max_generators));

    // Greedy basis in insertion order.
    std::vector<std::size_t> basis;
    std::vector<RationalVector> echelon;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
        RationalVector v = to_rational(rows[i]);
        for (std::size_t b = 0; b < echelon.size(); ++b) {
            if (v[pivots[b]] == 0)
                continue;
            Rational f = v[pivots[b]] / echelon[b][pivots[b]];
            for (std::size_t k = 0; k < dim; ++k)
                v[k] -= f * echelon[b][k];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (nz == v.end())
            continue;
        pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
        echelon.push_back(std::move(v));
        basis.push_back(i);
    }
    if (basis.size() < dim)
        throw Error(ErrorKind::DegenerateCone, "inequalities have rank " + std::to_string(basis.size())
                    + " < " + std::to_string(dim) + "; the cone is not pointed");

    // Columns of B^{-1} are the initial rays: <a_{basis[i]}, r_k> = delta_ik.
    std::vector<RationalVector> b_matrix;
    for (auto i : basis)
        b_matrix.push_back(to_rational(rows[i]));
    std::vector<detail::Ray> rays;
    for (std::size_t k = 0; k < dim; ++k) {
        RationalVector rhs(dim, 0);
        rhs[k] = 1;
        detail::Ray ray{clear_denominators(detail::solve_square(b_matrix, rhs)), {}};
        for (std::size_t i = 0; i < dim; ++i)
            if (i != k)
                ray.zeros.insert(basis[i]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(rows.size(), false);
    for (auto i : basis)
        in_basis[i] = true;

    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (in_basis[t])
            continue;
        const auto& a = rows[t];
        std::vector<Integer> value(rays.size());
        bool any_negative = false;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = dot(a, rays[k].x);
            any_negative = any_negative || value[k] < 0;
        }
        if (!any_negative) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (value[k] == 0)
                    rays[k].zeros.insert(t);
            continue;
        }
        std::vector<detail::Ray> next;
        std::vector<std::size_t> positive, negative;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (value[k] > 0) {
                positive.push_back(k);
                next.push_back(rays[k]);
            }
            else if (value[k] == 0) {
                next.push_back(rays[k]);
                next.back().zeros.insert(t);
            }
            else {
                negative.push_back(k);
            }
        }
        for (auto p : positive) {
            for (auto n : negative) {
                // Common tight set, computed on the bitsets directly.
                std::vector<std::size_t> common;
                for (auto i : rays[p].zeros.indices())
                    if (rays[n].zeros.contains(i))
                        common.push_back(i);
                if (common.size() + 2 < dim)
                    continue;
                if (detail::rank_of(rows, common, dim) != dim - 2)
                    continue;
                IntVector combo(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    combo[k] = value[p] * rays[n].x[k] - value[n] * rays[p].x[k];
                detail::Ray ray{make_primitive(std::move(combo)), VertexSet::from_indices(common)};
                ray.zeros.insert(t);
                next.push_back(std::move(ray));
                if (next.size() > options.max_rays)
                    throw Error(ErrorKind::ScaleExceeded, "double description exceeded "
                                + std::to_string(options.max_rays) + " intermediate rays");
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays)
        out.push_back(std::move(r.x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * Primitive inner normals of the facets of the cone generated by
 * `generators`: the unique irreducible halfspace description.  Computed as
 * the extreme rays of the dual cone, then each normal is re-verified against
 * the facet criterion (all generators on the nonnegative side and dim - 1
 * linearly independent generators on the hyperplane).
 */
inline std::vector<IntVector> support_hyperplanes(const std::vector<IntVector>& generators,
                                                  const DoubleDescriptionOptions& options = {})
{
    if (generators.empty())
        throw Error(ErrorKind::DegenerateCone, "no generators");
    const std::size_t dim = generators.front().size();
    auto normals = extreme_rays(generators, dim, options);
    for (const auto& n : normals) {
        std::vector<std::size_t> on_hyperplane;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            auto v = dot(n, generators[i]);
            if (v < 0)
                throw Error(ErrorKind::CrossCheckFailed, "normal " + to_string(n) + " cuts off generator "
                            + to_string(generators[i]));
            if (v == 0)
                on_hyperplane.push_back(i);
        }
        if (detail::rank_of(generators, on_hyperplane, dim) != dim - 1)
            throw Error(ErrorKind::CrossCheckFailed, "normal " + to_string(n) + " does not define a facet");
    }
    return normals;
}

/**
 * A nontrivial support hyperplane (gamma, -d) of a Rees cone.  gamma / d is
 * the matching vertex of the covering polyhedron.
 */
struct PrimitiveHalfspace
{
    IntVector normal;   // (gamma_1, ..., gamma_s, -d), nonzero entries coprime

    IntVector gamma() const { return IntVector(normal.begin(), normal.end() - 1); }
    Integer d() const { return -normal.back(); }

    RationalVector vertex() const
    {
        RationalVector v;
        Integer den = d();
        v.reserve(normal.size() - 1);
        for (std::size_t i = 0; i + 1 < normal.size(); ++i)
            v.emplace_back(normal[i], den);
        return v;
    }

    friend bool operator==(const PrimitiveHalfspace&, const PrimitiveHalfspace&) = default;
};

/**
 * Irreducible representation of RC(I) = cone(e_1..e_s, (v_1,1)..(v_q,1)).
 *
 * `trivial` lists the 0-based coordinates i (0..s) whose halfspace x_i >= 0
 * is a facet.  `nontrivial` is sorted by d, then by gamma, so the integral
 * facets (d = 1, the minimal vertex covers) come first.
 */
struct FacetSystem
{
    std::size_t s = 0;
    std::vector<std::size_t> trivial;
    std::vector<PrimitiveHalfspace> nontrivial;

    std::size_t integral_count() const
    {
        return static_cast<std::size_t>(std::count_if(nontrivial.begin(), nontrivial.end(),
                                                      [](const auto& h) { return h.d() == 1; }));
    }
};

/// Vertices of a covering polyhedron in lexicographic order.
struct PolyhedronVertices
{
    std::vector<RationalVector> vertices;
    std::size_t integral_count = 0;

    std::size_t size() const { return vertices.size(); }

    std::vector<RationalVector> integral() const
    {
        std::vector<RationalVector> out;
        for (const auto& v : vertices)
            if (is_integral(v))
                out.push_back(v);
        return out;
    }
};

/// e_1..e_s followed by (v_i, 1) for the edges in canonical order.
inline std::vector<IntVector> rees_cone_generators(const Clutter& c)
{
    const auto s = c.vertex_count();
    std::vector<IntVector> gens;
    gens.reserve(s + c.edge_count());
    for (std::size_t i = 0; i < s; ++i)
        gens.push_back(unit_vector(s + 1, i));
    for (auto v : c.incidence_vectors()) {
        v.push_back(1);
        gens.push_back(std::move(v));
    }
    return gens;
}

/**
 * Facets of a Rees cone, split into coordinate halfspaces and (gamma, -d)
 * halfspaces.  Throws InvalidParams if a facet has neither shape, which
 * cannot happen for generators produced by rees_cone_generators.
 */
inline FacetSystem cone_facets(const std::vector<IntVector>& generators, const DoubleDescriptionOptions& options = {})
{
    auto normals = support_hyperplanes(generators, options);
    FacetSystem fs;
    fs.s = generators.front().size() - 1;
    for (auto& n : normals) {
        auto nonzero = std::count_if(n.begin(), n.end(), [](const Integer& x) { return x != 0; });
        if (nonzero == 1 && std::all_of(n.begin(), n.end(), [](const Integer& x) { return x >= 0; })) {
            fs.trivial.push_back(static_cast<std::size_t>(
                std::find_if(n.begin(), n.end(), [](const Integer& x) { return x != 0; }) - n.begin()));
            continue;
        }
        bool rees_shape = n.back() < 0 && std::all_of(n.begin(), n.end() - 1, [](const Integer& x) { return x >= 0; });
        if (!rees_shape)
            throw Error(ErrorKind::InvalidParams, "facet normal " + to_string(n) + " is not of the form (gamma, -d)");
        fs.nontrivial.push_back(PrimitiveHalfspace{std::move(n)});
    }
    std::sort(fs.trivial.begin(), fs.trivial.end());
    std::sort(fs.nontrivial.begin(), fs.nontrivial.end(), [](const auto& a, const auto& b) {
        auto da = a.d(), db = b.d();
        if (da != db)
            return da < db;
        return a.normal < b.normal;
    });
    return fs;
}

inline FacetSystem rees_cone_facets(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return cone_facets(rees_cone_generators(c), options);
}

inline PolyhedronVertices vertices_from_facets(const FacetSystem& fs)
{
    PolyhedronVertices out;
    for (const auto& h : fs.nontrivial)
        out.vertices.push_back(h.vertex());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.integral_count = fs.integral_count();
    return out;
}

/// V(Q(I)) read off the nontrivial facets of RC(I): the vertices are gamma_i / d_i.
inline PolyhedronVertices covering_polyhedron_vertices(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return vertices_from_facets(rees_cone_facets(c, options));
}

/**
 * Extreme rays of SC(I^v) = { x in R^{s+1} : x >= 0, <x, (v_i, -1)> >= 0 }.
 * Independent route to V(Q(I)); see vertices_from_simis_rays.
 */
inline std::vector<IntVector> simis_cone_extreme_rays(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    const auto s = c.vertex_count();
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i <= s; ++i)
        rows.push_back(unit_vector(s + 1, i));
    for (auto v : c.incidence_vectors()) {
        v.push_back(-1);
        rows.push_back(std::move(v));
    }
    return extreme_rays(rows, s + 1, options);
}

/// Rays with positive last coordinate, scaled so it is 1 and then dropped.
inline PolyhedronVertices vertices_from_simis_rays(const std::vector<IntVector>& rays)
{
    PolyhedronVertices out;
    for (const auto& r : rays) {
        if (r.back() <= 0)
            continue;
        RationalVector v;
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            v.emplace_back(r[i], r.back());
        out.integral_count += is_integral(v) ? 1 : 0;
        out.vertices.push_back(std::move(v));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

enum class MembershipMode { Symbolic, Newton };

/**
 * With `vertices` = V(Q(I)):
 *  - Symbolic: <x, u> >= threshold for every integral vertex u (the minimal
 *    covers), i.e. x / threshold lies in Q(I^v).  With x = a and
 *    threshold = n this is t^a in I^(n).
 *  - Newton:   <x, u> >= threshold for every vertex u, i.e. x / threshold
 *    lies in NP(I).  With x = a and threshold = r this is t^a in the
 *    integral closure of I^r.
 */
inline bool membership(const RationalVector& x, const PolyhedronVertices& vertices, MembershipMode mode,
                       const Rational& threshold)
{
    if (threshold <= 0)
        throw Error(ErrorKind::InvalidParams, "membership threshold must be positive, got " + to_string(threshold));
    for (const auto& u : vertices.vertices) {
        if (u.size() != x.size())
            throw Error(ErrorKind::DimensionMismatch, "point " + to_string(x) + " vs vertex " + to_string(u));
        if (mode == MembershipMode::Symbolic && !is_integral(u))
            continue;
        if (dot(x, u) < threshold)
            return false;
    }
    return true;
}

}   // namespace icres

#endif
