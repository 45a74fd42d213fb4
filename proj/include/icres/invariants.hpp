#ifndef ICRES_INVARIANTS_HPP
#define ICRES_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clutter.hpp"
#include "error.hpp"
#include "lp.hpp"
#include "polyhedra.hpp"
#include "rational.hpp"

namespace icres {

/// 1/rho_ic together with the first vertex pair (in lexicographic order) attaining it.
struct DualityMinimum
{
    Rational rho;
    Rational inner_product;
    RationalVector u;   // vertex of Q(I)
    RationalVector v;   // vertex of Q(I^v)
};

/// rho_ic(I) = 1 / min { <u, v> : u in V(Q(I)), v in V(Q(I^v)) }, full pairwise scan.
inline DualityMinimum ic_resurgence(const PolyhedronVertices& q, const PolyhedronVertices& q_dual)
{
    if (q.vertices.empty() || q_dual.vertices.empty())
        throw Error(ErrorKind::InvalidParams, "empty vertex set");
    std::optional<DualityMinimum> best;
    for (const auto& u : q.vertices)
        for (const auto& v : q_dual.vertices) {
            Rational ip = dot(u, v);
            if (!best || ip < best->inner_product)
                best = DualityMinimum{0, ip, u, v};
        }
    if (best->inner_product <= 0)
        throw Error(ErrorKind::CrossCheckFailed, "nonpositive inner product " + to_string(best->inner_product)
                    + " at " + to_string(best->u) + ", " + to_string(best->v));
    best->rho = 1 / best->inner_product;
    return *best;
}

inline DualityMinimum ic_resurgence(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return ic_resurgence(covering_polyhedron_vertices(c, options),
                         covering_polyhedron_vertices(blocker(c), options));
}

struct WaldschmidtValue
{
    Rational value;
    RationalVector attained_at;
};

/// min |x| over the given vertex set, first attaining vertex in lexicographic order.
inline WaldschmidtValue min_coordinate_sum(const PolyhedronVertices& vertices)
{
    if (vertices.vertices.empty())
        throw Error(ErrorKind::InvalidParams, "empty vertex set");
    std::optional<WaldschmidtValue> best;
    for (const auto& x : vertices.vertices) {
        Rational sum = coordinate_sum(x);
        if (!best || sum < best->value)
            best = WaldschmidtValue{sum, x};
    }
    return *best;
}

/// alpha-hat(I) = min |v| over V(Q(I^v)).
inline WaldschmidtValue waldschmidt(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return min_coordinate_sum(covering_polyhedron_vertices(blocker(c), options));
}

/// alpha-hat(I^v) = min |u| over V(Q(I)).
inline WaldschmidtValue waldschmidt_dual(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return min_coordinate_sum(covering_polyhedron_vertices(c, options));
}

struct InvariantReport
{
    Rational rho_ic;
    Rational rho_ic_dual;
    Rational waldschmidt;        // alpha-hat(I)
    Rational waldschmidt_dual;   // alpha-hat(I^v)
    std::size_t alpha = 0;       // alpha(I)
    std::size_t alpha_dual = 0;  // alpha(I^v)
    bool q_integral = false;
    bool q_dual_integral = false;
    std::optional<bool> bipartite;   // set for graphs only
    RationalVector argmin_u;
    RationalVector argmin_v;
    PolyhedronVertices vertices;
    PolyhedronVertices dual_vertices;
    std::vector<std::string> warnings;
};

namespace detail {

inline void check(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::CrossCheckFailed, what);
}

}   // namespace detail

/**
 * Computes every invariant of I and I^v from the two vertex sets and checks
 * the identities that tie them together:
 *  - rho_ic(I) = rho_ic(I^v) >= 1, with equality iff Q(I) is integral iff Q(I^v) is;
 *  - the vertex minima of |x| agree with the Waldschmidt LP;
 *  - if Q(I) is integral, alpha-hat = alpha on both sides;
 *  - for graphs, rho_ic = 1 iff bipartite, and rho_ic = 2 / alpha-hat(I).
 * A failed identity raises CrossCheckFailed.
 */
inline InvariantReport classify(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    InvariantReport r;
    auto dual = blocker(c);
    r.vertices = covering_polyhedron_vertices(c, options);
    r.dual_vertices = covering_polyhedron_vertices(dual, options);
    r.warnings = assumption_warnings(c, dual);

    auto primal = ic_resurgence(r.vertices, r.dual_vertices);
    auto flipped = ic_resurgence(r.dual_vertices, r.vertices);
    r.rho_ic = primal.rho;
    r.rho_ic_dual = flipped.rho;
    r.argmin_u = primal.u;
    r.argmin_v = primal.v;
    r.waldschmidt = min_coordinate_sum(r.dual_vertices).value;
    r.waldschmidt_dual = min_coordinate_sum(r.vertices).value;
    r.alpha = c.min_edge_size();
    r.alpha_dual = dual.min_edge_size();
    r.q_integral = r.vertices.integral_count == r.vertices.size();
    r.q_dual_integral = r.dual_vertices.integral_count == r.dual_vertices.size();

    detail::check(r.vertices.integral() == [&] {
        std::vector<RationalVector> covers;
        for (const auto& u : dual.incidence_vectors())
            covers.push_back(to_rational(u));
        std::sort(covers.begin(), covers.end());
        return covers;
    }(), "integral vertices of Q(I) differ from the minimal vertex covers");
    detail::check(r.rho_ic == r.rho_ic_dual, "rho_ic(I) = " + to_string(r.rho_ic) + " but rho_ic(I^v) = "
                  + to_string(r.rho_ic_dual));
    detail::check(r.rho_ic >= 1, "rho_ic < 1");
    detail::check((r.rho_ic == 1) == r.q_integral, "rho_ic = 1 disagrees with integrality of Q(I)");
    detail::check(r.q_integral == r.q_dual_integral, "Q(I) and Q(I^v) disagree on integrality");
    detail::check(r.waldschmidt == waldschmidt_lp(c), "alpha-hat(I) from vertices disagrees with the LP");
    detail::check(r.waldschmidt_dual == waldschmidt_lp(dual), "alpha-hat(I^v) from vertices disagrees with the LP");
    if (r.q_integral) {
        detail::check(r.waldschmidt == r.alpha, "Q(I) integral but alpha-hat(I) != alpha(I)");
        detail::check(r.waldschmidt_dual == r.alpha_dual, "Q(I) integral but alpha-hat(I^v) != alpha(I^v)");
    }
    if (c.is_graph()) {
        r.bipartite = is_bipartite(c);
        detail::check(*r.bipartite == (r.rho_ic == 1), "rho_ic = 1 disagrees with bipartiteness");
        detail::check(r.rho_ic == 2 / r.waldschmidt, "rho_ic != 2 / alpha-hat(I) for a graph");
    }
    return r;
}

struct SumFormula
{
    Rational rho_union;
    Rational rho_max;
    Rational waldschmidt_union;
    Rational waldschmidt_min;
};

/**
 * rho_ic and alpha-hat of I_1 + I_2 on disjoint variables, computed on the
 * union clutter and compared with max / min of the parts.
 */
inline SumFormula sum_formula_check(const Clutter& c1, const Clutter& c2, const DoubleDescriptionOptions& options = {})
{
    auto whole = disjoint_union(c1, c2);
    SumFormula out;
    out.rho_union = ic_resurgence(whole, options).rho;
    out.rho_max = std::max(ic_resurgence(c1, options).rho, ic_resurgence(c2, options).rho);
    out.waldschmidt_union = waldschmidt(whole, options).value;
    out.waldschmidt_min = std::min(waldschmidt(c1, options).value, waldschmidt(c2, options).value);
    detail::check(out.rho_union == out.rho_max, "rho_ic of the sum is " + to_string(out.rho_union)
                  + ", max of parts is " + to_string(out.rho_max));
    detail::check(out.waldschmidt_union == out.waldschmidt_min, "alpha-hat of the sum is "
                  + to_string(out.waldschmidt_union) + ", min of parts is " + to_string(out.waldschmidt_min));
    return out;
}

inline Integer binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    Integer out = 1;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * Integer(n - k + i) / Integer(i);
    return out;
}

/**
 * Vertex set of Q(I_{d,s}) in closed form:
 *  - d = s: the unit vectors;
 *  - otherwise (e_{i_1} + ... + e_{i_k}) / (k - s + d) for every k-subset,
 *    s - d + 1 <= k <= s.
 * The dual vertex set is the same formula for d' = s - d + 1.
 */
inline PolyhedronVertices veronese_vertex_set(std::size_t d, std::size_t s)
{
    if (d < 1 || d > s)
        throw Error(ErrorKind::InvalidParams, "need 1 <= d <= s");
    PolyhedronVertices out;
    if (d == s) {
        for (std::size_t i = 0; i < s; ++i)
            out.vertices.push_back(to_rational(unit_vector(s, i)));
    }
    else {
        for (std::size_t k = s - d + 1; k <= s; ++k) {
            std::vector<bool> pick(s, false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
            Rational den = Rational(k + d - s);
            do {
                RationalVector v(s, 0);
                for (std::size_t i = 0; i < s; ++i)
                    if (pick[i])
                        v[i] = 1 / den;
                out.vertices.push_back(std::move(v));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.integral_count = static_cast<std::size_t>(
        std::count_if(out.vertices.begin(), out.vertices.end(), [](const auto& v) { return is_integral(v); }));
    return out;
}

struct VeroneseInvariants
{
    Rational rho;         // rho_ic(I_{d,s}) = rho_ic(I_{d,s}^v)
    Rational wald;        // alpha-hat(I_{d,s})
    Rational wald_dual;   // alpha-hat(I_{d,s}^v)
    Integer nv;           // |V(Q(I))|
    Integer nv_dual;      // |V(Q(I^v))|
    bool verified = false;   // true when the polyhedral pipeline reproduced every value
};

namespace detail {

inline Integer veronese_vertex_count(std::size_t d, std::size_t s)
{
    if (d == s)
        return Integer(s);
    Integer sum = 0;
    for (std::size_t k = s - d + 1; k <= s; ++k)
        sum += binomial(s, k);
    return sum;
}

}   // namespace detail

/**
 * Closed forms for the squarefree Veronese ideal I_{d,s}:
 * rho = d(s-d+1)/s, alpha-hat = s/(s-d+1), alpha-hat(dual) = s/d, and the
 * vertex counts.  With `verify` and s <= verify_limit, the clutter is run
 * through the polyhedral pipeline and every value, including the explicit
 * vertex sets, is compared (CrossCheckFailed on mismatch).
 */
inline VeroneseInvariants veronese_invariants(std::size_t d, std::size_t s, bool verify = false,
                                              std::size_t verify_limit = 7)
{
    if (d < 1 || d > s)
        throw Error(ErrorKind::InvalidParams, "veronese invariants need 1 <= d <= s, got d=" + std::to_string(d)
                    + " s=" + std::to_string(s));
    VeroneseInvariants out;
    out.rho = Rational(Integer(d * (s - d + 1)), Integer(s));
    out.wald = Rational(Integer(s), Integer(s - d + 1));
    out.wald_dual = Rational(Integer(s), Integer(d));
    out.nv = detail::veronese_vertex_count(d, s);
    out.nv_dual = detail::veronese_vertex_count(s - d + 1, s);
    if (!verify || s > verify_limit)
        return out;

    auto c = veronese_clutter(d, s);
    auto dual = blocker(c);
    detail::check(dual == veronese_clutter(s - d + 1, s), "blocker of I_{d,s} is not I_{s-d+1,s}");
    auto q = covering_polyhedron_vertices(c);
    auto qd = covering_polyhedron_vertices(dual);
    detail::check(q.vertices == veronese_vertex_set(d, s).vertices, "V(Q(I_{d,s})) differs from the closed form");
    detail::check(qd.vertices == veronese_vertex_set(s - d + 1, s).vertices,
                  "V(Q(I_{d,s}^v)) differs from the closed form");
    detail::check(Integer(q.size()) == out.nv && Integer(qd.size()) == out.nv_dual, "vertex counts differ");
    detail::check(ic_resurgence(q, qd).rho == out.rho, "rho_ic differs from d(s-d+1)/s");
    detail::check(min_coordinate_sum(qd).value == out.wald, "alpha-hat differs from s/(s-d+1)");
    detail::check(min_coordinate_sum(q).value == out.wald_dual, "alpha-hat of the dual differs from s/d");
    out.verified = true;
    return out;
}

/**
 * For a connected non-bipartite graph with a perfect matching,
 * alpha-hat(I(G)^v) = |V(G)| / 2.  Raises HypothesisNotMet when the graph
 * does not qualify and CrossCheckFailed when the identity fails.
 */
inline Rational matching_waldschmidt_check(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    if (!c.is_graph())
        throw Error(ErrorKind::HypothesisNotMet, "not a graph");
    if (!is_connected(c))
        throw Error(ErrorKind::HypothesisNotMet, "graph is disconnected");
    if (is_bipartite(c))
        throw Error(ErrorKind::HypothesisNotMet, "graph is bipartite");
    if (!has_perfect_matching(c))
        throw Error(ErrorKind::HypothesisNotMet, "graph has no perfect matching");
    auto value = waldschmidt_dual(c, options).value;
    Rational expected(Integer(c.vertex_count()), Integer(2));
    detail::check(value == expected, "alpha-hat(I^v) = " + to_string(value) + ", expected " + to_string(expected));
    return value;
}

}   // namespace icres

#endif
