#include <gtest/gtest.h>

#include <random>

#include <icres/invariants.hpp>

#include "support.hpp"

using namespace icres;
using namespace testing_support;

namespace {

Clutter k3() { return labels(3, {{1, 2}, {1, 3}, {2, 3}}); }
Clutter c4() { return labels(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }

/// 1 / min <u, v> over the brute-force vertex sets.
Rational brute_rho(const Clutter& c)
{
    auto a = brute_q_vertices(c);
    auto b = brute_q_vertices(blocker(c));
    Rational best = dot(a[0], b[0]);
    for (const auto& u : a)
        for (const auto& v : b)
            best = std::min(best, dot(u, v));
    return 1 / best;
}

}   // namespace

TEST(IcResurgence, KnownExamples)
{
    auto m = ic_resurgence(load("antihole7.json"));
    EXPECT_EQ(m.rho, q(10, 7));
    EXPECT_EQ(m.inner_product, q(7, 10));
    EXPECT_EQ(m.u, uniform(7, 1, 2));
    EXPECT_EQ(m.v, uniform(7, 1, 5));
    EXPECT_EQ(ic_resurgence(load("clutter7.json")).rho, q(4, 3));
    EXPECT_EQ(ic_resurgence(load("selfdual4.json")).rho, q(9, 7));
    EXPECT_EQ(ic_resurgence(load("graph7.json")).rho, q(14, 9));
    EXPECT_EQ(ic_resurgence(k3()).rho, q(4, 3));
    EXPECT_EQ(ic_resurgence(c4()).rho, 1);
}

TEST(IcResurgence, MatchesBruteForceVertices)
{
    std::mt19937 rng(55);
    for (int i = 0; i < 30; ++i) {
        auto c = random_clutter(rng, 2 + i % 3, 2 + i % 6);
        EXPECT_EQ(ic_resurgence(c).rho, brute_rho(c)) << c.to_string();
    }
}

TEST(IcResurgence, DualitySymmetryAndMethodAgreement)
{
    std::vector<Clutter> cs;
    for (const auto& [name, c] : corpus())
        cs.push_back(c);
    std::mt19937 rng(99);
    for (int i = 0; i < 30; ++i)
        cs.push_back(random_clutter(rng, 2 + i % 7, 2 + i % 8));
    for (const auto& c : cs) {
        auto rho = ic_resurgence(c).rho;
        EXPECT_EQ(rho, ic_resurgence(blocker(c)).rho) << c.to_string();
        EXPECT_EQ(rho, rho_via_lp(c)) << c.to_string();
        EXPECT_GE(rho, 1);
    }
}

TEST(IcResurgence, FirstAttainingPairIsLexicographic)
{
    auto q1 = covering_polyhedron_vertices(k3());
    auto m = ic_resurgence(q1, q1);
    // (0,1,1) pairs with (1/2,1/2,1/2) at 1; the first vertex attaining 3/4 is (1/2,1/2,1/2)
    EXPECT_EQ(m.inner_product, q(3, 4));
    EXPECT_EQ(m.u, uniform(3, 1, 2));
    EXPECT_EQ(m.v, uniform(3, 1, 2));
}

TEST(Waldschmidt, KnownExamples)
{
    auto a = load("antihole7.json");
    auto wd = waldschmidt_dual(a);
    EXPECT_EQ(wd.value, q(7, 2));
    EXPECT_EQ(wd.attained_at, uniform(7, 1, 2));
    EXPECT_EQ(waldschmidt(a).value, q(7, 5));

    auto e44 = load("graph7.json");
    auto w = waldschmidt(e44);
    EXPECT_EQ(w.value, q(9, 7));
    EXPECT_EQ(w.attained_at, rv({{1, 7}, {1, 7}, {1, 7}, {1, 7}, {1, 7}, {2, 7}, {2, 7}}));
    EXPECT_EQ(waldschmidt_dual(e44).value, q(7, 2));

    auto v = veronese_clutter(3, 6);
    EXPECT_EQ(waldschmidt_dual(v).value, 2);
    EXPECT_EQ(waldschmidt_dual(v).attained_at, uniform(6, 1, 3));
    EXPECT_EQ(waldschmidt(v).value, q(3, 2));
    EXPECT_EQ(waldschmidt(v).attained_at, uniform(6, 1, 4));
}

TEST(Waldschmidt, AgreesWithLp)
{
    for (const auto& [name, c] : corpus()) {
        EXPECT_EQ(waldschmidt(c).value, waldschmidt_lp(c)) << name;
        EXPECT_EQ(waldschmidt_dual(c).value, waldschmidt_lp(blocker(c))) << name;
    }
}

TEST(Classify, FourCycle)
{
    auto r = classify(c4());
    EXPECT_EQ(r.rho_ic, 1);
    EXPECT_TRUE(r.q_integral);
    EXPECT_TRUE(r.q_dual_integral);
    ASSERT_TRUE(r.bipartite);
    EXPECT_TRUE(*r.bipartite);
    EXPECT_EQ(r.waldschmidt, 2);
    EXPECT_EQ(r.alpha, 2u);
}

TEST(Classify, Triangle)
{
    auto r = classify(k3());
    EXPECT_EQ(r.rho_ic, q(4, 3));
    EXPECT_FALSE(r.q_integral);
    EXPECT_FALSE(*r.bipartite);
    EXPECT_EQ(r.waldschmidt, q(3, 2));
}

TEST(Classify, Antihole)
{
    auto r = classify(load("antihole7.json"));
    EXPECT_EQ(r.rho_ic, q(10, 7));
    EXPECT_EQ(r.rho_ic_dual, q(10, 7));
    EXPECT_FALSE(r.q_integral);
    EXPECT_NE(std::find(r.vertices.vertices.begin(), r.vertices.vertices.end(), uniform(7, 1, 2)),
              r.vertices.vertices.end());
    EXPECT_EQ(r.argmin_u, uniform(7, 1, 2));
    EXPECT_EQ(r.argmin_v, uniform(7, 1, 5));
    EXPECT_EQ(r.alpha_dual, 5u);
}

TEST(Classify, NonGraphHasNoBipartiteFlag)
{
    auto r = classify(load("selfdual4.json"));
    EXPECT_FALSE(r.bipartite.has_value());
    EXPECT_EQ(r.rho_ic, q(9, 7));
}

TEST(Classify, WarnsOnSingletonCover)
{
    auto r = classify(labels(4, {{1, 2}, {1, 3}, {1, 4}}));
    EXPECT_FALSE(r.warnings.empty());
    EXPECT_EQ(r.rho_ic, 1);
}

TEST(Classify, RandomGraphsConsistent)
{
    std::mt19937 rng(4242);
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(rng, 2 + i % 7);
        auto r = classify(g);
        EXPECT_EQ(*r.bipartite, r.rho_ic == 1) << g.to_string();
        EXPECT_EQ(r.rho_ic, 2 / r.waldschmidt) << g.to_string();
    }
}

TEST(Classify, IntegralMeansAlphaHatEqualsAlpha)
{
    std::mt19937 rng(6);
    int integral = 0;
    for (int i = 0; i < 40; ++i) {
        auto c = random_clutter(rng, 2 + i % 6, 1 + i % 5);
        auto r = classify(c);
        if (r.q_integral) {
            ++integral;
            EXPECT_EQ(r.waldschmidt, r.alpha);
            EXPECT_EQ(r.waldschmidt_dual, r.alpha_dual);
        }
    }
    EXPECT_GT(integral, 0);
}

TEST(SumFormula, Examples)
{
    auto a = sum_formula_check(k3(), c4());
    EXPECT_EQ(a.rho_union, q(4, 3));
    EXPECT_EQ(a.rho_max, q(4, 3));
    auto b = sum_formula_check(k3(), k3());
    EXPECT_EQ(b.rho_union, q(4, 3));
    EXPECT_EQ(b.waldschmidt_union, q(3, 2));
    EXPECT_EQ(b.waldschmidt_min, q(3, 2));
    EXPECT_EQ(sum_formula_check(c4(), c4()).rho_union, 1);
    auto c = sum_formula_check(load("selfdual4.json"), k3());
    EXPECT_EQ(c.rho_union, q(4, 3));
    EXPECT_EQ(c.waldschmidt_union, q(3, 2));
}

TEST(Veronese, ThreeOfSix)
{
    auto v = veronese_invariants(3, 6, true);
    EXPECT_TRUE(v.verified);
    EXPECT_EQ(v.rho, 2);
    EXPECT_EQ(v.wald, q(3, 2));
    EXPECT_EQ(v.wald_dual, 2);
    EXPECT_EQ(v.nv, 22);
    EXPECT_EQ(v.nv_dual, 42);
}

TEST(Veronese, CompleteGraphs)
{
    for (std::size_t n = 2; n <= 12; ++n) {
        auto v = veronese_invariants(2, n);
        EXPECT_EQ(v.rho, q(2 * (static_cast<long>(n) - 1), static_cast<long>(n)));
    }
    EXPECT_EQ(ic_resurgence(load("k4.json")).rho, q(3, 2));
}

TEST(Veronese, Degenerate)
{
    for (std::size_t s = 1; s <= 6; ++s) {
        auto top = veronese_invariants(s, s, true);
        EXPECT_EQ(top.rho, 1);
        EXPECT_EQ(top.wald, static_cast<long>(s));
        EXPECT_EQ(top.wald_dual, 1);
        EXPECT_EQ(top.nv, static_cast<long>(s));
        EXPECT_EQ(top.nv_dual, 1);
        EXPECT_TRUE(top.verified);
        auto bottom = veronese_invariants(1, s, true);
        EXPECT_EQ(bottom.rho, 1);
        EXPECT_EQ(bottom.nv, 1);
        EXPECT_EQ(bottom.nv_dual, static_cast<long>(s));
        EXPECT_TRUE(bottom.verified);
    }
    EXPECT_THROW(veronese_invariants(0, 3), Error);
    EXPECT_THROW(veronese_invariants(4, 3), Error);
}

TEST(Veronese, VerifyLimit)
{
    auto big = veronese_invariants(5, 40, true);
    EXPECT_FALSE(big.verified);
    EXPECT_EQ(big.rho, q(5 * 36, 40));
    EXPECT_FALSE(veronese_invariants(3, 6, true, 5).verified);
    EXPECT_FALSE(veronese_invariants(3, 6, false).verified);
}

TEST(Veronese, VertexSetsMatchPipeline)
{
    for (std::size_t s = 2; s <= 6; ++s)
        for (std::size_t d = 1; d <= s; ++d)
            EXPECT_EQ(veronese_vertex_set(d, s).vertices, covering_polyhedron_vertices(veronese_clutter(d, s)).vertices)
                << d << "," << s;
}

TEST(MatchingWaldschmidt, Examples)
{
    EXPECT_EQ(matching_waldschmidt_check(load("k4.json")), 2);
    EXPECT_EQ(matching_waldschmidt_check(veronese_clutter(2, 6)), 3);
    auto kind = [](const Clutter& c) {
        try {
            matching_waldschmidt_check(c);
        }
        catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind(k3()), ErrorKind::HypothesisNotMet);
    EXPECT_EQ(kind(c4()), ErrorKind::HypothesisNotMet);
    EXPECT_EQ(kind(load("selfdual4.json")), ErrorKind::HypothesisNotMet);
    EXPECT_EQ(kind(disjoint_union(k3(), k3())), ErrorKind::HypothesisNotMet);
}

TEST(MatchingWaldschmidt, RandomQualifyingGraphs)
{
    std::mt19937 rng(12);
    int checked = 0;
    for (int i = 0; i < 80 && checked < 15; ++i) {
        auto g = random_graph(rng, 4 + 2 * (i % 3));
        if (!is_connected(g) || is_bipartite(g) || !has_perfect_matching(g))
            continue;
        ++checked;
        EXPECT_EQ(matching_waldschmidt_check(g), q(static_cast<long>(g.vertex_count()), 2));
    }
    EXPECT_GT(checked, 0);
}

// |A n B| / ((k-s+d)(l-d+1)) >= s / (d(s-d+1)), exhaustively over subset pairs.
TEST(IntersectionInequality, Exhaustive)
{
    for (long s = 1; s <= 8; ++s) {
        std::vector<int> size(1u << s);
        for (std::uint32_t m = 0; m < (1u << s); ++m)
            size[m] = __builtin_popcount(m);
        for (long d = 1; d <= s; ++d) {
            Rational bound = q(s, d * (s - d + 1));
            for (std::uint32_t a = 0; a < (1u << s); ++a) {
                long k = size[a];
                if (k < s - d + 1)
                    continue;
                for (std::uint32_t b = 0; b < (1u << s); ++b) {
                    long l = size[b];
                    if (l < d)
                        continue;
                    Rational lhs = q(size[a & b], (k - s + d) * (l - d + 1));
                    ASSERT_GE(lhs, bound) << "s=" << s << " d=" << d << " A=" << a << " B=" << b;
                    if (k == s && l == s) {
                        EXPECT_EQ(lhs, bound);
                    }
                }
            }
        }
    }
}

TEST(Binomial, Values)
{
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
    EXPECT_EQ(binomial(3, 5), 0);
}
