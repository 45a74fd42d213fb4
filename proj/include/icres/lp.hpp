#ifndef ICRES_LP_HPP
#define ICRES_LP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clutter.hpp"
#include "error.hpp"
#include "polyhedra.hpp"
#include "rational.hpp"

namespace icres {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint
{
    RationalVector row;
    Relation relation = Relation::LessEqual;
    Rational rhs = 0;
};

/**
 * maximize <objective, y> + objective_offset subject to the constraints,
 * with y_k >= 0 wherever nonneg[k] is set.
 */
struct LinearProgram
{
    RationalVector objective;
    std::vector<Constraint> constraints;
    std::vector<bool> nonneg;
    Rational objective_offset = 0;

    std::size_t variable_count() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome
{
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;      // meaningful when Optimal
    RationalVector point;    // an optimal basic solution when Optimal
};

inline bool satisfies(const LinearProgram& lp, const RationalVector& y)
{
    for (std::size_t k = 0; k < y.size(); ++k)
        if (lp.nonneg[k] && y[k] < 0)
            return false;
    for (const auto& c : lp.constraints) {
        Rational lhs = dot(c.row, y);
        switch (c.relation) {
            case Relation::LessEqual:    if (lhs > c.rhs) return false; break;
            case Relation::GreaterEqual: if (lhs < c.rhs) return false; break;
            case Relation::Equal:        if (lhs != c.rhs) return false; break;
        }
    }
    return true;
}

namespace detail {

/**
 * Dense tableau over the rationals.  Column `width` holds the right-hand
 * side; `cost` is the reduced-cost row with -(objective value) in its last
 * slot, so a pivot updates it exactly like any other row.
 */
class Tableau
{
    public:
        Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis, std::size_t width)
            : rows_(std::move(rows)), basis_(std::move(basis)), width_(width), allowed_(width, true)
        {
        }

        void set_objective(const RationalVector& c)
        {
            cost_.assign(width_ + 1, 0);
            for (std::size_t j = 0; j < width_; ++j)
                cost_[j] = c[j];
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                Rational f = cost_[basis_[i]];
                if (f != 0)
                    subtract(cost_, rows_[i], f);
            }
        }

        void forbid(std::size_t col) { allowed_[col] = false; }

        /// Bland's rule: lowest improving column enters, ratio ties go to the lowest basic index.
        LpStatus optimize()
        {
            for (;;) {
                std::optional<std::size_t> enter;
                for (std::size_t j = 0; j < width_; ++j)
                    if (allowed_[j] && cost_[j] > 0) {
                        enter = j;
                        break;
                    }
                if (!enter)
                    return LpStatus::Optimal;
                std::optional<std::size_t> leave;
                Rational best;
                for (std::size_t i = 0; i < rows_.size(); ++i) {
                    const auto& a = rows_[i][*enter];
                    if (a <= 0)
                        continue;
                    Rational ratio = rows_[i][width_] / a;
                    if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
                if (!leave)
                    return LpStatus::Unbounded;
                pivot(*leave, *enter);
            }
        }

        void pivot(std::size_t r, std::size_t e)
        {
            Rational p = rows_[r][e];
            for (auto& x : rows_[r])
                x /= p;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (i == r || rows_[i][e] == 0)
                    continue;
                Rational f = rows_[i][e];
                subtract(rows_[i], rows_[r], f);
            }
            if (cost_[e] != 0) {
                Rational f = cost_[e];
                subtract(cost_, rows_[r], f);
            }
            basis_[r] = e;
        }

        Rational value() const { return -cost_[width_]; }

        RationalVector solution() const
        {
            RationalVector x(width_, 0);
            for (std::size_t i = 0; i < rows_.size(); ++i)
                x[basis_[i]] = rows_[i][width_];
            return x;
        }

        /**
         * After phase 1: pivot artificial columns (>= first_artificial) out of
         * the basis, dropping rows that turn out to be redundant.
         */
        void expel_artificials(std::size_t first_artificial)
        {
            for (std::size_t i = 0; i < rows_.size();) {
                if (basis_[i] < first_artificial) {
                    ++i;
                    continue;
                }
                std::optional<std::size_t> col;
                for (std::size_t j = 0; j < first_artificial; ++j)
                    if (rows_[i][j] != 0) {
                        col = j;
                        break;
                    }
                if (col) {
                    pivot(i, *col);
                    ++i;
                }
                else {
                    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                }
            }
            for (std::size_t j = first_artificial; j < width_; ++j)
                forbid(j);
        }

    private:
        static void subtract(RationalVector& target, const RationalVector& row, const Rational& f)
        {
            for (std::size_t k = 0; k < target.size(); ++k)
                if (row[k] != 0)
                    target[k] -= f * row[k];
        }

        std::vector<RationalVector> rows_;
        std::vector<std::size_t> basis_;
        std::size_t width_;
        std::vector<bool> allowed_;
        RationalVector cost_;
};

}   // namespace detail

/**
 * Exact primal simplex with Bland's rule.
 *
 * Free variables are split into a difference of two nonnegative columns.
 * When every constraint can be written as <= with a nonnegative right-hand
 * side the slack basis is feasible and phase 1 is skipped; otherwise
 * artificial variables and a standard phase 1 are used.
 */
inline LpOutcome simplex_solve(const LinearProgram& lp)
{
    const std::size_t n = lp.variable_count();
    if (lp.nonneg.size() != n)
        throw Error(ErrorKind::MalformedProgram, "nonnegativity mask has length " + std::to_string(lp.nonneg.size())
                    + ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
        if (lp.constraints[i].row.size() != n)
            throw Error(ErrorKind::MalformedProgram, "constraint " + std::to_string(i) + " has length "
                        + std::to_string(lp.constraints[i].row.size()) + ", expected " + std::to_string(n));

    // Structural columns: one per variable, plus a negative part for free ones.
    std::vector<std::size_t> plus(n), minus(n, static_cast<std::size_t>(-1));
    std::size_t structural = 0;
    for (std::size_t k = 0; k < n; ++k) {
        plus[k] = structural++;
        if (!lp.nonneg[k])
            minus[k] = structural++;
    }

    struct Row { RationalVector coef; Relation rel; Rational rhs; };
    std::vector<Row> rows;
    for (const auto& c : lp.constraints) {
        Row r{RationalVector(structural, 0), c.relation, c.rhs};
        for (std::size_t k = 0; k < n; ++k) {
            r.coef[plus[k]] = c.row[k];
            if (!lp.nonneg[k])
                r.coef[minus[k]] = -c.row[k];
        }
        // Nonnegative right-hand sides, preferring <= so the slack can start basic.
        bool flip = r.rhs < 0 || (r.rhs == 0 && r.rel == Relation::GreaterEqual);
        if (flip) {
            for (auto& x : r.coef)
                x = -x;
            r.rhs = -r.rhs;
            if (r.rel == Relation::LessEqual)
                r.rel = Relation::GreaterEqual;
            else if (r.rel == Relation::GreaterEqual)
                r.rel = Relation::LessEqual;
        }
        rows.push_back(std::move(r));
    }

    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : rows) {
        slacks += r.rel != Relation::Equal ? 1 : 0;
        artificials += r.rel != Relation::LessEqual ? 1 : 0;
    }
    const std::size_t first_artificial = structural + slacks;
    const std::size_t width = first_artificial + artificials;

    std::vector<RationalVector> table;
    std::vector<std::size_t> basis;
    std::size_t next_slack = structural, next_art = first_artificial;
    for (auto& r : rows) {
        RationalVector t(width + 1, 0);
        std::copy(r.coef.begin(), r.coef.end(), t.begin());
        t[width] = r.rhs;
        if (r.rel == Relation::LessEqual) {
            t[next_slack] = 1;
            basis.push_back(next_slack++);
        }
        else {
            if (r.rel == Relation::GreaterEqual)
                t[next_slack++] = -1;
            t[next_art] = 1;
            basis.push_back(next_art++);
        }
        table.push_back(std::move(t));
    }

    detail::Tableau tab(std::move(table), std::move(basis), width);
    if (artificials > 0) {
        RationalVector phase1(width, 0);
        for (std::size_t j = first_artificial; j < width; ++j)
            phase1[j] = -1;
        tab.set_objective(phase1);
        tab.optimize();
        if (tab.value() < 0)
            return LpOutcome{LpStatus::Infeasible, 0, {}};
        tab.expel_artificials(first_artificial);
    }

    RationalVector cost(width, 0);
    for (std::size_t k = 0; k < n; ++k) {
        cost[plus[k]] = lp.objective[k];
        if (!lp.nonneg[k])
            cost[minus[k]] = -lp.objective[k];
    }
    tab.set_objective(cost);
    if (tab.optimize() == LpStatus::Unbounded)
        return LpOutcome{LpStatus::Unbounded, 0, {}};

    auto x = tab.solution();
    RationalVector point(n);
    for (std::size_t k = 0; k < n; ++k)
        point[k] = x[plus[k]] - (lp.nonneg[k] ? Rational(0) : x[minus[k]]);
    Rational value = dot(lp.objective, point) + lp.objective_offset;
    return LpOutcome{LpStatus::Optimal, value, std::move(point)};
}

/**
 * Substitutes y_var = value: the column is removed, its contribution moves to
 * the right-hand sides and the objective offset, and constraints left with
 * no variables are dropped when they hold (kept, and so infeasible, when
 * they do not).
 */
inline LinearProgram fix_variable(const LinearProgram& lp, std::size_t var, const Rational& value)
{
    if (var >= lp.variable_count())
        throw Error(ErrorKind::IndexOutOfRange, "variable " + std::to_string(var) + " of "
                    + std::to_string(lp.variable_count()));
    auto drop = [&](const RationalVector& v) {
        RationalVector out(v);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(var));
        return out;
    };
    LinearProgram out;
    out.objective = drop(lp.objective);
    out.objective_offset = lp.objective_offset + lp.objective[var] * value;
    out.nonneg = lp.nonneg;
    out.nonneg.erase(out.nonneg.begin() + static_cast<std::ptrdiff_t>(var));
    for (const auto& c : lp.constraints) {
        Constraint r{drop(c.row), c.relation, c.rhs - c.row[var] * value};
        bool empty = std::all_of(r.row.begin(), r.row.end(), [](const Rational& x) { return x == 0; });
        if (empty) {
            bool holds = (r.relation == Relation::LessEqual && 0 <= r.rhs)
                         || (r.relation == Relation::GreaterEqual && 0 >= r.rhs)
                         || (r.relation == Relation::Equal && r.rhs == 0);
            if (holds)
                continue;
        }
        out.constraints.push_back(std::move(r));
    }
    return out;
}

/**
 * The program P_j over y_1..y_{s+3} for the nontrivial facet j (0-based
 * index into facets.nontrivial):
 *
 *   maximize y_{s+1}
 *   <(y_1..y_s), u_i> - y_{s+1} >= 0    for the integral vertices u_i
 *   y_{s+1} >= y_{s+3}
 *   d_j y_{s+2} - <(y_1..y_s), gamma_j> >= y_{s+3}
 *   y_{s+2} = 1,  y_1..y_s >= 0,  y_{s+3} >= 0.
 */
inline LinearProgram build_pj(const FacetSystem& facets, std::size_t j)
{
    if (j >= facets.nontrivial.size())
        throw Error(ErrorKind::IndexOutOfRange, "facet index " + std::to_string(j) + " but only "
                    + std::to_string(facets.nontrivial.size()) + " nontrivial facets");
    const std::size_t s = facets.s;
    const std::size_t top = s, scale = s + 1, slack = s + 2;
    LinearProgram lp;
    lp.objective.assign(s + 3, 0);
    lp.objective[top] = 1;
    lp.nonneg.assign(s + 3, true);
    lp.nonneg[top] = false;
    lp.nonneg[scale] = false;

    for (const auto& h : facets.nontrivial) {
        if (h.d() != 1)
            continue;
        Constraint c{RationalVector(s + 3, 0), Relation::GreaterEqual, 0};
        for (std::size_t k = 0; k < s; ++k)
            c.row[k] = h.normal[k];
        c.row[top] = -1;
        lp.constraints.push_back(std::move(c));
    }
    {
        Constraint c{RationalVector(s + 3, 0), Relation::GreaterEqual, 0};
        c.row[top] = 1;
        c.row[slack] = -1;
        lp.constraints.push_back(std::move(c));
    }
    {
        const auto& h = facets.nontrivial[j];
        Constraint c{RationalVector(s + 3, 0), Relation::GreaterEqual, 0};
        for (std::size_t k = 0; k < s; ++k)
            c.row[k] = -h.normal[k];
        c.row[scale] = h.d();
        c.row[slack] = -1;
        lp.constraints.push_back(std::move(c));
    }
    {
        Constraint c{RationalVector(s + 3, 0), Relation::Equal, 1};
        c.row[scale] = 1;
        lp.constraints.push_back(std::move(c));
    }
    return lp;
}

/**
 * Solves P_j.  y_{s+2} = 1 is substituted first; every remaining constraint
 * is then <= 0 or <= d_j, so e_{s+2} (the slack basis) is the starting
 * vertex and no phase 1 runs.  The returned point has all s+3 coordinates.
 */
inline LpOutcome solve_pj(const FacetSystem& facets, std::size_t j)
{
    const std::size_t scale = facets.s + 1;
    auto reduced = fix_variable(build_pj(facets, j), scale, 1);
    auto out = simplex_solve(reduced);
    if (out.status == LpStatus::Optimal)
        out.point.insert(out.point.begin() + static_cast<std::ptrdiff_t>(scale), Rational(1));
    return out;
}

struct LpResurgence
{
    Rational rho;
    std::vector<Rational> per_facet;   // rho_j, aligned with facets.nontrivial
};

/**
 * rho_ic(I) = max_j rho_j.  Each rho_j is checked against 1 <= rho_j <= d_j
 * and a violation raises CrossCheckFailed.
 */
inline LpResurgence rho_via_lp_details(const FacetSystem& facets)
{
    LpResurgence out;
    out.rho = 0;
    for (std::size_t j = 0; j < facets.nontrivial.size(); ++j) {
        auto res = solve_pj(facets, j);
        if (res.status != LpStatus::Optimal)
            throw Error(ErrorKind::CrossCheckFailed, "P_" + std::to_string(j + 1) + " has no finite optimum");
        Rational d = facets.nontrivial[j].d();
        if (res.value < 1 || res.value > d)
            throw Error(ErrorKind::CrossCheckFailed, "rho_" + std::to_string(j + 1) + " = " + to_string(res.value)
                        + " outside [1, " + to_string(d) + "]");
        out.rho = std::max(out.rho, res.value);
        out.per_facet.push_back(res.value);
    }
    return out;
}

inline Rational rho_via_lp(const Clutter& c, const DoubleDescriptionOptions& options = {})
{
    return rho_via_lp_details(rees_cone_facets(c, options)).rho;
}

/**
 * Optimum of P_j from the vertices v = delta_k / f_k of Q(I^v):
 * max_k d_j / <gamma_j, v>.  The companion values d_j / (<gamma_j, v> + 1)
 * are always smaller and never optimal.
 */
inline Rational pj_optimum_closed_form(const FacetSystem& facets, const PolyhedronVertices& dual_vertices,
                                       std::size_t j)
{
    if (j >= facets.nontrivial.size())
        throw Error(ErrorKind::IndexOutOfRange, "facet index " + std::to_string(j) + " but only "
                    + std::to_string(facets.nontrivial.size()) + " nontrivial facets");
    const auto& h = facets.nontrivial[j];
    auto gamma = to_rational(h.gamma());
    Rational d = h.d();
    std::optional<Rational> best;
    for (const auto& v : dual_vertices.vertices) {
        Rational ip = dot(gamma, v);
        if (ip <= 0)
            throw Error(ErrorKind::CrossCheckFailed, "<gamma_j, v> = 0 for v = " + to_string(v));
        Rational candidate = d / ip;
        if (!best || candidate > *best)
            best = candidate;
    }
    if (!best)
        throw Error(ErrorKind::InvalidParams, "dual vertex set is empty");
    return *best;
}

/**
 * All points of the two vertex families of P_j with y_{s+1} > 0, one pair
 * per dual vertex v:
 *   (a) (y v, y, 1, 0) with y = d_j / <gamma_j, v>
 *   (b) (y v, y, 1, y) with y = d_j / (<gamma_j, v> + 1)
 */
inline std::vector<RationalVector> pj_vertex_forms(const FacetSystem& facets, const PolyhedronVertices& dual_vertices,
                                                   std::size_t j)
{
    if (j >= facets.nontrivial.size())
        throw Error(ErrorKind::IndexOutOfRange, "facet index " + std::to_string(j));
    const auto& h = facets.nontrivial[j];
    auto gamma = to_rational(h.gamma());
    Rational d = h.d();
    std::vector<RationalVector> out;
    for (const auto& v : dual_vertices.vertices) {
        Rational ip = dot(gamma, v);
        for (int form = 0; form < 2; ++form) {
            Rational y = form == 0 ? d / ip : d / (ip + 1);
            RationalVector p;
            for (const auto& x : v)
                p.push_back(y * x);
            p.push_back(y);
            p.push_back(1);
            p.push_back(form == 0 ? Rational(0) : y);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// minimize y_1 + ... + y_s subject to <y, u> >= 1 for the minimal covers u, y >= 0.
inline LinearProgram waldschmidt_program(const Clutter& c)
{
    const auto s = c.vertex_count();
    LinearProgram lp;
    lp.objective.assign(s, -1);
    lp.nonneg.assign(s, true);
    for (const auto& u : blocker(c).incidence_vectors())
        lp.constraints.push_back(Constraint{to_rational(u), Relation::GreaterEqual, 1});
    return lp;
}

/// alpha-hat(I) as an LP optimum.
inline Rational waldschmidt_lp(const Clutter& c)
{
    auto res = simplex_solve(waldschmidt_program(c));
    if (res.status != LpStatus::Optimal)
        throw Error(ErrorKind::CrossCheckFailed, "Waldschmidt program has no finite optimum");
    return -res.value;
}

}   // namespace icres

#endif
