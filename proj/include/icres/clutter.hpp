#ifndef ICRES_CLUTTER_HPP
#define ICRES_CLUTTER_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace icres {

/**
 * A subset of {0, ..., s-1} stored as a little-endian bit mask.  One 64-bit
 * word covers every desk-scale clutter; larger vertex counts spill into
 * additional words transparently.
 *
 * Vertex indices are 0-based inside the library.  The 1-based t_i labels
 * only appear at the I/O boundary.
 */
class VertexSet
{
    public:
        VertexSet() = default;

        static VertexSet from_indices(const std::vector<std::size_t>& indices)
        {
            VertexSet out;
            for (auto i : indices)
                out.insert(i);
            return out;
        }

        void insert(std::size_t i)
        {
            if (words_.size() <= i / 64)
                words_.resize(i / 64 + 1, 0);
            words_[i / 64] |= std::uint64_t(1) << (i % 64);
        }

        bool contains(std::size_t i) const
        {
            return i / 64 < words_.size() && (words_[i / 64] >> (i % 64) & 1);
        }

        bool empty() const
        {
            return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
        }

        std::size_t count() const
        {
            std::size_t n = 0;
            for (auto w : words_)
                n += std::popcount(w);
            return n;
        }

        bool intersects(const VertexSet& other) const
        {
            auto n = std::min(words_.size(), other.words_.size());
            for (std::size_t i = 0; i < n; ++i)
                if (words_[i] & other.words_[i])
                    return true;
            return false;
        }

        bool is_subset_of(const VertexSet& other) const
        {
            for (std::size_t i = 0; i < words_.size(); ++i) {
                auto theirs = i < other.words_.size() ? other.words_[i] : 0;
                if (words_[i] & ~theirs)
                    return false;
            }
            return true;
        }

        VertexSet operator|(const VertexSet& other) const
        {
            VertexSet out = words_.size() >= other.words_.size() ? *this : other;
            const auto& small = words_.size() >= other.words_.size() ? other : *this;
            for (std::size_t i = 0; i < small.words_.size(); ++i)
                out.words_[i] |= small.words_[i];
            return out;
        }

        VertexSet shifted(std::size_t offset) const
        {
            VertexSet out;
            for (auto i : indices())
                out.insert(i + offset);
            return out;
        }

        /// Members in increasing order.
        std::vector<std::size_t> indices() const
        {
            std::vector<std::size_t> out;
            for (std::size_t w = 0; w < words_.size(); ++w) {
                auto bits = words_[w];
                while (bits) {
                    out.push_back(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
            return out;
        }

        IntVector characteristic_vector(std::size_t s) const
        {
            IntVector v(s, 0);
            for (auto i : indices())
                if (i < s)
                    v[i] = 1;
            return v;
        }

        /// 1-based, e.g. "{1,3,4}".
        std::string to_string() const
        {
            std::string out = "{";
            bool first = true;
            for (auto i : indices()) {
                if (!first)
                    out += ",";
                out += std::to_string(i + 1);
                first = false;
            }
            return out + "}";
        }

        friend bool operator==(const VertexSet& a, const VertexSet& b)
        {
            auto n = std::max(a.words_.size(), b.words_.size());
            for (std::size_t i = 0; i < n; ++i)
                if (a.word(i) != b.word(i))
                    return false;
            return true;
        }

        /**
         * Lexicographic order on characteristic vectors (x_1, ..., x_s): at the
         * first vertex where the sets differ, the set missing it is smaller.
         */
        friend bool operator<(const VertexSet& a, const VertexSet& b)
        {
            auto n = std::max(a.words_.size(), b.words_.size());
            for (std::size_t i = 0; i < n; ++i) {
                auto diff = a.word(i) ^ b.word(i);
                if (diff) {
                    auto bit = std::uint64_t(1) << std::countr_zero(diff);
                    return (a.word(i) & bit) == 0;
                }
            }
            return false;
        }

    private:
        std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

        std::vector<std::uint64_t> words_;
};

/**
 * A clutter on vertices t_1..t_s: a nonempty antichain of nonempty vertex
 * sets.  Edges are kept sorted in lexicographic order of their
 * characteristic vectors, so two clutters are equal exactly when they have
 * the same vertex count and the same edge family.
 */
class Clutter
{
    public:
        /// Validates and canonicalizes.  The input order of edges is irrelevant.
        Clutter(std::size_t s, std::vector<VertexSet> edges) : s_(s), edges_(std::move(edges))
        {
            if (s_ == 0)
                throw Error(ErrorKind::InvalidParams, "a clutter needs at least one vertex");
            if (edges_.empty())
                throw Error(ErrorKind::InvalidParams, "a clutter needs at least one edge");
            for (const auto& e : edges_) {
                if (e.empty())
                    throw Error(ErrorKind::EmptyEdge, "edge {} has no vertices");
                auto idx = e.indices();
                if (idx.back() >= s_)
                    throw Error(ErrorKind::VertexOutOfRange,
                                "edge " + e.to_string() + " uses vertex " + std::to_string(idx.back() + 1)
                                + " but the clutter has " + std::to_string(s_) + " vertices");
            }
            std::sort(edges_.begin(), edges_.end());
            for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
                if (edges_[i] == edges_[i + 1])
                    throw Error(ErrorKind::DuplicateEdge, "edge " + edges_[i].to_string() + " appears twice");
            for (std::size_t i = 0; i < edges_.size(); ++i)
                for (std::size_t j = 0; j < edges_.size(); ++j)
                    if (i != j && edges_[i].is_subset_of(edges_[j]))
                        throw Error(ErrorKind::NotAntichain, "edge " + edges_[i].to_string()
                                    + " is contained in edge " + edges_[j].to_string());
        }

        /// Edges given as 1-based vertex labels, as in t_1..t_s.
        static Clutter from_labels(std::size_t s, const std::vector<std::vector<long long>>& edges)
        {
            if (s == 0)
                throw Error(ErrorKind::InvalidParams, "a clutter needs at least one vertex");
            std::vector<VertexSet> sets;
            sets.reserve(edges.size());
            for (const auto& labels : edges) {
                VertexSet e;
                for (auto label : labels) {
                    if (label < 1 || static_cast<unsigned long long>(label) > s) {
                        std::string shown = "{";
                        for (std::size_t k = 0; k < labels.size(); ++k)
                            shown += (k ? "," : "") + std::to_string(labels[k]);
                        throw Error(ErrorKind::VertexOutOfRange, "edge " + shown + "} uses vertex "
                                    + std::to_string(label) + " outside 1.." + std::to_string(s));
                    }
                    e.insert(static_cast<std::size_t>(label - 1));
                }
                sets.push_back(std::move(e));
            }
            return Clutter(s, std::move(sets));
        }

        std::size_t vertex_count() const { return s_; }
        std::size_t edge_count() const { return edges_.size(); }
        const std::vector<VertexSet>& edges() const { return edges_; }

        /// Columns v_1..v_q of the incidence matrix, in canonical edge order.
        std::vector<IntVector> incidence_vectors() const
        {
            std::vector<IntVector> out;
            out.reserve(edges_.size());
            for (const auto& e : edges_)
                out.push_back(e.characteristic_vector(s_));
            return out;
        }

        bool is_graph() const
        {
            return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.count() == 2; });
        }

        /// alpha(I): least degree of a generator of the edge ideal.
        std::size_t min_edge_size() const
        {
            std::size_t best = s_;
            for (const auto& e : edges_)
                best = std::min(best, e.count());
            return best;
        }

        /// 1-based edge lists, e.g. "[{1,2},{2,3}]".
        std::string to_string() const
        {
            std::string out = "[";
            for (std::size_t i = 0; i < edges_.size(); ++i)
                out += (i ? "," : "") + edges_[i].to_string();
            return out + "]";
        }

        friend bool operator==(const Clutter& a, const Clutter& b)
        {
            return a.s_ == b.s_ && a.edges_ == b.edges_;
        }

    private:
        std::size_t s_;
        std::vector<VertexSet> edges_;
};

namespace detail {

/// Drops duplicates and every set that strictly contains another set of the family.
inline std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> family)
{
    std::sort(family.begin(), family.end(), [](const VertexSet& a, const VertexSet& b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<VertexSet> kept;
    for (auto& candidate : family) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const VertexSet& k) { return k.is_subset_of(candidate); });
        if (!dominated)
            kept.push_back(std::move(candidate));
    }
    return kept;
}

inline void require_graph(const Clutter& c, const char* what)
{
    if (!c.is_graph())
        throw Error(ErrorKind::NotAGraph, std::string(what) + " needs every edge to have exactly 2 vertices; got "
                    + c.to_string());
}

inline std::vector<std::vector<std::size_t>> adjacency(const Clutter& c)
{
    std::vector<std::vector<std::size_t>> adj(c.vertex_count());
    for (const auto& e : c.edges()) {
        auto idx = e.indices();
        for (auto a : idx)
            for (auto b : idx)
                if (a != b)
                    adj[a].push_back(b);
    }
    return adj;
}

}   // namespace detail

/**
 * The clutter of minimal vertex covers.
 *
 * Partial transversals are grown one edge at a time: a transversal that
 * already meets the next edge is kept, otherwise it is extended by each
 * vertex of that edge, and the family is cut back to its inclusion-minimal
 * members.  After the last edge the survivors are exactly the minimal
 * transversals.
 */
inline Clutter blocker(const Clutter& c)
{
    std::vector<VertexSet> transversals{VertexSet{}};
    for (const auto& edge : c.edges()) {
        std::vector<VertexSet> next;
        auto members = edge.indices();
        for (const auto& t : transversals) {
            if (t.intersects(edge)) {
                next.push_back(t);
                continue;
            }
            for (auto v : members) {
                VertexSet grown = t;
                grown.insert(v);
                next.push_back(std::move(grown));
            }
        }
        transversals = detail::inclusion_minimal(std::move(next));
    }
    return Clutter(c.vertex_count(), std::move(transversals));
}

/// Throws NotAGraph unless every edge has exactly two vertices.
inline bool is_bipartite(const Clutter& c)
{
    detail::require_graph(c, "is_bipartite");
    auto adj = detail::adjacency(c);
    std::vector<int> colour(c.vertex_count(), -1);
    for (std::size_t start = 0; start < colour.size(); ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        std::queue<std::size_t> todo;
        todo.push(start);
        while (!todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : adj[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    todo.push(w);
                }
                else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Vertices joined through shared edges form one component; isolated vertices are their own component.
inline bool is_connected(const Clutter& c)
{
    auto adj = detail::adjacency(c);
    std::vector<bool> seen(c.vertex_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == c.vertex_count();
}

namespace detail {

inline bool extend_matching(const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& matched)
{
    auto first = std::find(matched.begin(), matched.end(), false);
    if (first == matched.end())
        return true;
    auto v = static_cast<std::size_t>(first - matched.begin());
    matched[v] = true;
    for (auto w : adj[v]) {
        if (matched[w])
            continue;
        matched[w] = true;
        if (extend_matching(adj, matched))
            return true;
        matched[w] = false;
    }
    matched[v] = false;
    return false;
}

}   // namespace detail

/**
 * Exhaustive search: the lowest uncovered vertex must be matched to one of
 * its uncovered neighbours, so branching on that choice visits every
 * perfect matching at most once.
 */
inline bool has_perfect_matching(const Clutter& c)
{
    detail::require_graph(c, "has_perfect_matching");
    if (c.vertex_count() % 2)
        return false;
    auto adj = detail::adjacency(c);
    std::vector<bool> matched(c.vertex_count(), false);
    return detail::extend_matching(adj, matched);
}

/// All d-subsets of {1..s}: the clutter of the squarefree Veronese ideal I_{d,s}.
inline Clutter veronese_clutter(std::size_t d, std::size_t s)
{
    if (d < 1 || d > s)
        throw Error(ErrorKind::InvalidParams, "veronese clutter needs 1 <= d <= s, got d=" + std::to_string(d)
                    + " s=" + std::to_string(s));
    std::vector<VertexSet> edges;
    std::vector<bool> pick(s, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        VertexSet e;
        for (std::size_t i = 0; i < s; ++i)
            if (pick[i])
                e.insert(i);
        edges.push_back(std::move(e));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return Clutter(s, std::move(edges));
}

/// c2's vertices are relabeled t_{s1+1}..t_{s1+s2}.
inline Clutter disjoint_union(const Clutter& c1, const Clutter& c2)
{
    auto edges = c1.edges();
    for (const auto& e : c2.edges())
        edges.push_back(e.shifted(c1.vertex_count()));
    return Clutter(c1.vertex_count() + c2.vertex_count(), std::move(edges));
}

/**
 * The standing assumption is that edges and minimal covers have at least two
 * vertices.  Everything still computes without it; this lists the violations.
 */
inline std::vector<std::string> assumption_warnings(const Clutter& c, const Clutter& cover_clutter)
{
    std::vector<std::string> out;
    for (const auto& e : c.edges())
        if (e.count() == 1)
            out.push_back("edge " + e.to_string() + " has a single vertex");
    for (const auto& e : cover_clutter.edges())
        if (e.count() == 1)
            out.push_back("minimal vertex cover " + e.to_string() + " has a single vertex");
    return out;
}

}   // namespace icres

#endif
