#ifndef ICRES_ORACLE_HPP
#define ICRES_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "clutter.hpp"
#include "error.hpp"
#include "polyhedra.hpp"
#include "rational.hpp"

/**
 * Brute-force ground truth for small clutters: minimal generators of
 * symbolic powers, integral-closure membership and containment of
 * I^(n) in the integral closure of I^r.
 */
namespace icres {

/// Exponent vector a of the monomial t^a.  Entries are nonnegative.
using ExponentVector = std::vector<long long>;

inline constexpr std::uint64_t default_oracle_budget = 10'000'000;

/// t^a with ⟨a, u_i⟩ >= n on every minimal cover, and ⟨a, gamma_j⟩ <= r d_j - 1 on one facet.
struct ContainmentWitness
{
    ExponentVector a;
    long long n = 0;
    long long r = 0;
    std::size_t violated_facet = 0;   // index into FacetSystem::nontrivial

    friend bool operator==(const ContainmentWitness&, const ContainmentWitness&) = default;
};

struct ContainmentResult
{
    bool contained = true;
    std::optional<ContainmentWitness> witness;
};

struct ScanEntry
{
    long long n = 0;
    long long r = 0;
    ContainmentWitness witness;

    Rational ratio() const { return Rational(Integer(n), Integer(r)); }
};

/// Degree ascending, then lexicographically descending: (1,1,1) < (2,2,0) < (2,0,2) < (0,2,2).
inline bool graded_lex_less(const ExponentVector& a, const ExponentVector& b)
{
    long long da = coordinate_sum(a), db = coordinate_sum(b);
    if (da != db)
        return da < db;
    return b < a;
}

namespace detail {

inline void require_exponent(const ExponentVector& a, std::size_t s)
{
    if (a.size() != s)
        throw Error(ErrorKind::DimensionMismatch, "exponent vector has length " + std::to_string(a.size())
                    + ", clutter has " + std::to_string(s) + " vertices");
    for (auto x : a)
        if (x < 0)
            throw Error(ErrorKind::InvalidParams, "exponent vector has a negative entry");
}

inline void require_positive(long long x, const char* name)
{
    if (x < 1)
        throw Error(ErrorKind::InvalidParams, std::string(name) + " must be a positive integer");
}

/// prod (bound_k + 1), or nullopt once it passes `budget`.
inline std::optional<std::uint64_t> box_volume(const std::vector<long long>& bounds, std::uint64_t budget)
{
    std::uint64_t v = 1;
    for (auto b : bounds) {
        auto side = static_cast<std::uint64_t>(b) + 1;
        if (v > budget / side)
            return std::nullopt;
        v *= side;
    }
    return v <= budget ? std::optional(v) : std::nullopt;
}

inline long long level(const std::vector<std::vector<std::size_t>>& sets, const ExponentVector& a)
{
    long long best = -1;
    for (const auto& e : sets) {
        long long sum = 0;
        for (auto k : e)
            sum += a[k];
        if (best < 0 || sum < best)
            best = sum;
    }
    return best;
}

inline Integer facet_value(const PrimitiveHalfspace& h, const ExponentVector& a)
{
    Integer sum = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        sum += h.normal[k] * a[k];
    return sum;
}

}   // namespace detail

/**
 * Holds the minimal covers and the Rees cone facets of one clutter so that
 * repeated queries do not recompute them.  Generator lists are cached per n.
 */
class ContainmentOracle
{
    public:
        explicit ContainmentOracle(const Clutter& c, std::uint64_t budget = default_oracle_budget,
                                   const DoubleDescriptionOptions& options = {})
            : s_(c.vertex_count()), budget_(budget), facets_(rees_cone_facets(c, options))
        {
            auto dual = blocker(c);
            for (const auto& cover : dual.edges())
                covers_.push_back(cover.indices());
        }

        std::size_t vertex_count() const { return s_; }
        const FacetSystem& facets() const { return facets_; }
        const std::vector<std::vector<std::size_t>>& covers() const { return covers_; }

        /// t^a in I^(n): ⟨a, u⟩ >= n for every minimal cover u.
        bool in_symbolic_power(const ExponentVector& a, long long n) const
        {
            detail::require_exponent(a, s_);
            return detail::level(covers_, a) >= n;
        }

        /**
         * Minimal generators of I^(n) in graded-lex order.  Every one lies in
         * the box [0, n]^s, which is walked in full; ScaleExceeded when its
         * volume passes the budget.
         */
        const std::vector<ExponentVector>& symbolic_power_min_gens(long long n)
        {
            detail::require_positive(n, "n");
            if (auto it = gens_.find(n); it != gens_.end())
                return it->second;
            if (!detail::box_volume(std::vector<long long>(s_, n), budget_))
                throw Error(ErrorKind::ScaleExceeded, "box [0," + std::to_string(n) + "]^" + std::to_string(s_)
                            + " exceeds the budget of " + std::to_string(budget_) + " points");

            // cover_of[k]: covers containing vertex k
            std::vector<std::vector<std::size_t>> cover_of(s_);
            for (std::size_t i = 0; i < covers_.size(); ++i)
                for (auto k : covers_[i])
                    cover_of[k].push_back(i);

            std::vector<ExponentVector> out;
            ExponentVector a(s_, 0);
            std::vector<long long> sums(covers_.size(), 0);
            while (true) {
                bool member = std::all_of(sums.begin(), sums.end(), [&](long long x) { return x >= n; });
                if (member) {
                    // a - e_k leaves I^(n) iff some cover through k is tight
                    bool minimal = true;
                    for (std::size_t k = 0; k < s_ && minimal; ++k)
                        if (a[k] > 0)
                            minimal = std::any_of(cover_of[k].begin(), cover_of[k].end(),
                                                  [&](std::size_t i) { return sums[i] == n; });
                    if (minimal)
                        out.push_back(a);
                }
                std::size_t k = 0;
                while (k < s_ && a[k] == n) {
                    for (auto i : cover_of[k])
                        sums[i] -= n;
                    a[k] = 0;
                    ++k;
                }
                if (k == s_)
                    break;
                ++a[k];
                for (auto i : cover_of[k])
                    ++sums[i];
            }
            std::sort(out.begin(), out.end(), graded_lex_less);
            return gens_.emplace(n, std::move(out)).first->second;
        }

        /// First facet j (canonical order) with ⟨a, gamma_j⟩ < r d_j, if any.
        std::optional<std::size_t> first_violated_facet(const ExponentVector& a, long long r) const
        {
            detail::require_exponent(a, s_);
            detail::require_positive(r, "r");
            for (std::size_t j = 0; j < facets_.nontrivial.size(); ++j) {
                const auto& h = facets_.nontrivial[j];
                if (detail::facet_value(h, a) < h.d() * r)
                    return j;
            }
            return std::nullopt;
        }

        /// t^a in the integral closure of I^r: ⟨a, gamma_j⟩ >= r d_j for every facet.
        bool in_integral_closure(const ExponentVector& a, long long r) const
        {
            return !first_violated_facet(a, r);
        }

        /// Witness is the first failing generator in graded-lex order.
        ContainmentResult containment(long long n, long long r)
        {
            detail::require_positive(r, "r");
            for (const auto& a : symbolic_power_min_gens(n))
                if (auto j = first_violated_facet(a, r))
                    return {false, ContainmentWitness{a, n, r, *j}};
            return {true, std::nullopt};
        }

        /// Checks both witness conditions directly.
        bool is_witness(const ContainmentWitness& w) const
        {
            detail::require_exponent(w.a, s_);
            if (w.violated_facet >= facets_.nontrivial.size())
                return false;
            const auto& h = facets_.nontrivial[w.violated_facet];
            return in_symbolic_power(w.a, w.n) && detail::facet_value(h, w.a) <= h.d() * w.r - 1;
        }

        /**
         * Every (n, r) in [1, n_max] x [1, r_max] where containment fails,
         * sorted by (n, r).  Each ratio n/r is a lower bound for rho_ic; the
         * supremum need not be attained on any grid.
         */
        std::vector<ScanEntry> witness_ratio_scan(long long n_max, long long r_max)
        {
            detail::require_positive(n_max, "n_max");
            detail::require_positive(r_max, "r_max");
            std::vector<ScanEntry> out;
            for (long long n = 1; n <= n_max; ++n)
                for (long long r = 1; r <= r_max; ++r)
                    if (auto res = containment(n, r); !res.contained)
                        out.push_back({n, r, *res.witness});
            return out;
        }

    private:
        std::size_t s_;
        std::uint64_t budget_;
        FacetSystem facets_;
        std::vector<std::vector<std::size_t>> covers_;
        std::map<long long, std::vector<ExponentVector>> gens_;
};

inline std::vector<ExponentVector> symbolic_power_min_gens(const Clutter& c, long long n,
                                                           std::uint64_t budget = default_oracle_budget)
{
    return ContainmentOracle(c, budget).symbolic_power_min_gens(n);
}

inline bool in_integral_closure(const ExponentVector& a, const Clutter& c, long long r)
{
    return ContainmentOracle(c).in_integral_closure(a, r);
}

inline ContainmentResult containment(const Clutter& c, long long n, long long r,
                                     std::uint64_t budget = default_oracle_budget)
{
    return ContainmentOracle(c, budget).containment(n, r);
}

inline std::vector<ScanEntry> witness_ratio_scan(const Clutter& c, long long n_max, long long r_max,
                                                 std::uint64_t budget = default_oracle_budget)
{
    return ContainmentOracle(c, budget).witness_ratio_scan(n_max, r_max);
}

/// min over edges of ⟨a, v⟩.
inline long long cover_level(const Clutter& c, const ExponentVector& a)
{
    detail::require_exponent(a, c.vertex_count());
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& e : c.edges())
        edges.push_back(e.indices());
    return detail::level(edges, a);
}

/**
 * a is a reducible b-cover when a = c' + d' with c' an i-cover, d' a
 * j-cover, i + j = b and neither part equal to (0, 0).  Such i, j exist iff
 * level(c') + level(d') >= b, so every componentwise split 0 < c' < a is
 * tried.  ScaleExceeded when the number of splits passes the budget.
 */
inline bool is_irreducible_b_cover(const Clutter& c, const ExponentVector& a, long long b,
                                   std::uint64_t budget = default_oracle_budget)
{
    if (b < 0)
        throw Error(ErrorKind::InvalidParams, "b must be nonnegative");
    auto lvl = cover_level(c, a);
    if (lvl < b)
        throw Error(ErrorKind::NotABCover, to_string(IntVector(a.begin(), a.end())) + " has level "
                    + std::to_string(lvl) + " < " + std::to_string(b));
    if (!detail::box_volume(a, budget))
        throw Error(ErrorKind::ScaleExceeded, "too many splits of " + to_string(IntVector(a.begin(), a.end())));

    std::vector<std::vector<std::size_t>> edges;
    for (const auto& e : c.edges())
        edges.push_back(e.indices());
    const std::size_t s = a.size();
    ExponentVector part(s, 0), rest = a;
    while (true) {
        std::size_t k = 0;
        while (k < s && part[k] == a[k]) {
            part[k] = 0;
            rest[k] = a[k];
            ++k;
        }
        if (k == s)
            break;
        ++part[k];
        --rest[k];
        if (part == a)
            continue;
        if (detail::level(edges, part) + detail::level(edges, rest) >= b)
            return false;
    }
    return true;
}

}   // namespace icres

#endif
