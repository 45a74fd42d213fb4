#ifndef ICRES_TESTS_SUPPORT_HPP
#define ICRES_TESTS_SUPPORT_HPP

// Fixture loading, seeded random clutters, and brute-force reference
// implementations that share no algorithmic code with the library.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <icres/clutter.hpp>
#include <icres/io.hpp>
#include <icres/rational.hpp>

namespace testing_support {

using icres::Clutter;
using icres::Integer;
using icres::IntVector;
using icres::Rational;
using icres::RationalVector;

inline std::string data_path(const std::string& file) { return std::string(ICRES_DATA_DIR) + "/" + file; }

inline Clutter load(const std::string& file) { return icres::read_clutter_file(data_path(file)).clutter; }

/// Every JSON fixture, sorted by file name.
inline std::vector<std::pair<std::string, Clutter>> corpus()
{
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(ICRES_DATA_DIR))
        if (entry.path().extension() == ".json")
            names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    std::vector<std::pair<std::string, Clutter>> out;
    for (const auto& n : names)
        out.emplace_back(n, load(n));
    return out;
}

inline Clutter labels(std::size_t s, const std::vector<std::vector<long long>>& edges)
{
    return Clutter::from_labels(s, edges);
}

inline RationalVector rv(const std::vector<std::pair<long, long>>& entries)
{
    RationalVector out;
    for (auto [p, q] : entries)
        out.emplace_back(Integer(p), Integer(q));
    return out;
}

inline RationalVector uniform(std::size_t s, long p, long q)
{
    return RationalVector(s, Rational(Integer(p), Integer(q)));
}

inline std::vector<RationalVector> from_masks(std::size_t s, const std::vector<std::vector<int>>& rows)
{
    std::vector<RationalVector> out;
    for (const auto& r : rows) {
        RationalVector v(s, 0);
        for (std::size_t i = 0; i < s; ++i)
            v[i] = r[i];
        out.push_back(std::move(v));
    }
    return out;
}

/// Subsets as bit masks, reduced to the inclusion-minimal ones.
inline std::vector<std::uint32_t> minimal_masks(std::vector<std::uint32_t> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::uint32_t> out;
    for (auto a : sets) {
        bool minimal = true;
        for (auto b : sets)
            if (b != a && (b & a) == b)
                minimal = false;
        if (minimal)
            out.push_back(a);
    }
    return out;
}

inline Clutter from_mask_list(std::size_t s, const std::vector<std::uint32_t>& masks)
{
    std::vector<std::vector<long long>> edges;
    for (auto m : masks) {
        std::vector<long long> e;
        for (std::size_t i = 0; i < s; ++i)
            if (m >> i & 1)
                e.push_back(static_cast<long long>(i + 1));
        edges.push_back(e);
    }
    return Clutter::from_labels(s, edges);
}

inline std::uint32_t mask_of(const icres::VertexSet& e)
{
    std::uint32_t m = 0;
    for (auto i : e.indices())
        m |= 1u << i;
    return m;
}

/// Random antichain: `tries` random nonempty subsets of [s], kept inclusion-minimal.
inline Clutter random_clutter(std::mt19937& rng, std::size_t s, std::size_t tries)
{
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << s) - 1);
    std::vector<std::uint32_t> sets;
    for (std::size_t i = 0; i < tries; ++i)
        sets.push_back(pick(rng));
    return from_mask_list(s, minimal_masks(sets));
}

/// Random simple graph on s vertices, each pair with probability 1/2, at least one edge.
inline Clutter random_graph(std::mt19937& rng, std::size_t s)
{
    std::bernoulli_distribution coin(0.5);
    while (true) {
        std::vector<std::vector<long long>> edges;
        for (std::size_t i = 1; i <= s; ++i)
            for (std::size_t j = i + 1; j <= s; ++j)
                if (coin(rng))
                    edges.push_back({static_cast<long long>(i), static_cast<long long>(j)});
        if (!edges.empty())
            return Clutter::from_labels(s, edges);
    }
}

/// Minimal transversals by checking every vertex subset.
inline Clutter brute_blocker(const Clutter& c)
{
    const auto s = c.vertex_count();
    std::vector<std::uint32_t> edges;
    for (const auto& e : c.edges())
        edges.push_back(mask_of(e));
    std::vector<std::uint32_t> transversals;
    for (std::uint32_t t = 1; t < (1u << s); ++t)
        if (std::all_of(edges.begin(), edges.end(), [&](auto e) { return (e & t) != 0; }))
            transversals.push_back(t);
    return from_mask_list(s, minimal_masks(transversals));
}

/// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != row && m[r][col] != 0) {
                Rational f = m[r][col];
                for (std::size_t k = 0; k < m[r].size(); ++k)
                    m[r][k] -= f * m[row][k];
            }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Unique solution of A x = b, if A is square and nonsingular.
inline std::optional<RationalVector> solve(const std::vector<RationalVector>& a, const RationalVector& b)
{
    const auto n = b.size();
    std::vector<RationalVector> m;
    for (std::size_t i = 0; i < n; ++i) {
        auto row = a[i];
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }
    if (rref(m, n).size() < n)
        return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n];
    return x;
}

/// Primitive integer normal of the hyperplane through dim-1 vectors of rank dim-1.
inline std::optional<IntVector> hyperplane_normal(std::vector<RationalVector> rows, std::size_t dim)
{
    auto pivots = rref(rows, dim);
    if (pivots.size() != dim - 1)
        return std::nullopt;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
        ++free_col;
    RationalVector n(dim, 0);
    n[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        n[pivots[r]] = -rows[r][free_col];
    return icres::clear_denominators(n);
}

/// Facet normals of cone(generators): every (dim-1)-subset spanning a hyperplane that supports the cone.
inline std::vector<IntVector> brute_facets(const std::vector<IntVector>& gens)
{
    const auto dim = gens.front().size();
    const auto g = gens.size();
    std::vector<IntVector> out;
    std::vector<bool> pick(g, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim - 1), true);
    do {
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < g; ++i)
            if (pick[i])
                rows.push_back(icres::to_rational(gens[i]));
        auto n = hyperplane_normal(rows, dim);
        if (!n)
            continue;
        bool pos = false, neg = false;
        for (const auto& v : gens) {
            auto x = icres::dot(*n, v);
            pos = pos || x > 0;
            neg = neg || x < 0;
        }
        if (pos && neg)
            continue;
        if (neg)
            for (auto& x : *n)
                x = -x;
        out.push_back(*n);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Vertices of {x >= 0, <v_e, x> >= 1}: every s-subset of the inequalities taken as equalities.
inline std::vector<RationalVector> brute_q_vertices(const Clutter& c)
{
    const auto s = c.vertex_count();
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t i = 0; i < s; ++i) {
        rows.push_back(icres::to_rational(icres::unit_vector(s, i)));
        rhs.push_back(0);
    }
    for (const auto& v : c.incidence_vectors()) {
        rows.push_back(icres::to_rational(v));
        rhs.push_back(1);
    }
    std::vector<RationalVector> out;
    std::vector<bool> pick(rows.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
        std::vector<RationalVector> a;
        RationalVector b;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (pick[i]) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
        auto x = solve(a, b);
        if (!x)
            continue;
        bool feasible = true;
        for (std::size_t i = 0; i < rows.size() && feasible; ++i)
            feasible = icres::dot(rows[i], *x) >= rhs[i];
        if (feasible)
            out.push_back(*x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}   // namespace testing_support

#endif
