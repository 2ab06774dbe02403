#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they are compared against.

#include <planemu/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle
{
    using planemu::Graph;
    using planemu::VertexId;

    using Adjacency = std::vector<std::set<VertexId>>;

    inline auto adjacency(const Graph & g) -> Adjacency
    {
        Adjacency adj(g.vertex_count());
        for (auto e : g.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        return adj;
    }

    // Kuratowski subdivisions

    namespace detail
    {
        /// Simple paths from a to b whose interior avoids `branch`.
        inline void paths_between(const Adjacency & adj, VertexId a, VertexId b, const std::set<VertexId> & branch,
            std::vector<std::vector<VertexId>> & out)
        {
            std::vector<VertexId> path{a};
            std::set<VertexId> on_path{a};
            std::function<void(VertexId)> walk = [&](VertexId x) {
                for (auto y : adj[x]) {
                    if (y == b) {
                        out.emplace_back(path.begin() + 1, path.end());  // interior only
                        continue;
                    }
                    if (branch.contains(y) || on_path.contains(y))
                        continue;
                    path.push_back(y);
                    on_path.insert(y);
                    walk(y);
                    on_path.erase(y);
                    path.pop_back();
                }
            };
            walk(a);
        }

        /// Can every pair be joined by a path, interiors pairwise disjoint?
        inline auto disjoint_paths(const Adjacency & adj, const std::vector<std::pair<VertexId, VertexId>> & pairs,
            const std::set<VertexId> & branch) -> bool
        {
            std::vector<std::vector<std::vector<VertexId>>> options(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                paths_between(adj, pairs[i].first, pairs[i].second, branch, options[i]);
                if (options[i].empty())
                    return false;
            }
            std::set<VertexId> used;
            std::function<bool(std::size_t)> pick = [&](std::size_t i) {
                if (i == pairs.size())
                    return true;
                for (const auto &interior : options[i]) {
                    if (std::any_of(interior.begin(), interior.end(), [&](VertexId x) { return used.contains(x); }))
                        continue;
                    used.insert(interior.begin(), interior.end());
                    if (pick(i + 1))
                        return true;
                    for (auto x : interior)
                        used.erase(x);
                }
                return false;
            };
            return pick(0);
        }

        inline void subsets(std::size_t n, std::size_t k, const std::function<bool(const std::vector<VertexId> &)> & f)
        {
            std::vector<bool> mask(n, false);
            std::fill(mask.begin(), mask.begin() + static_cast<long>(std::min(k, n)), true);
            if (k > n)
                return;
            do {
                std::vector<VertexId> chosen;
                for (VertexId i = 0; i < n; ++i)
                    if (mask[i])
                        chosen.push_back(i);
                if (f(chosen))
                    return;
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
    }

    inline auto has_k5_subdivision(const Graph & g) -> bool
    {
        auto adj = adjacency(g);
        bool found = false;
        detail::subsets(g.vertex_count(), 5, [&](const std::vector<VertexId> & b) {
            for (auto v : b)
                if (adj[v].size() < 4)
                    return false;
            std::vector<std::pair<VertexId, VertexId>> pairs;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    pairs.emplace_back(b[i], b[j]);
            found = detail::disjoint_paths(adj, pairs, {b.begin(), b.end()});
            return found;
        });
        return found;
    }

    inline auto has_k33_subdivision(const Graph & g) -> bool
    {
        auto adj = adjacency(g);
        bool found = false;
        detail::subsets(g.vertex_count(), 6, [&](const std::vector<VertexId> & b) {
            for (auto v : b)
                if (adj[v].size() < 3)
                    return false;
            // sides {b[0], b[i], b[j]} and the rest
            for (std::size_t i = 1; i < 6 && ! found; ++i)
                for (std::size_t j = i + 1; j < 6 && ! found; ++j) {
                    std::vector<VertexId> left{b[0], b[i], b[j]}, right;
                    for (auto v : b)
                        if (std::find(left.begin(), left.end(), v) == left.end())
                            right.push_back(v);
                    std::vector<std::pair<VertexId, VertexId>> pairs;
                    for (auto x : left)
                        for (auto y : right)
                            pairs.emplace_back(x, y);
                    found = detail::disjoint_paths(adj, pairs, {b.begin(), b.end()});
                }
            return found;
        });
        return found;
    }

    /// Kuratowski: planar iff no subdivision of K5 or K3,3.
    inline auto planar(const Graph & g) -> bool
    {
        return ! has_k5_subdivision(g) && ! has_k33_subdivision(g);
    }

    /// True iff the edge set, after dropping isolated vertices and smoothing
    /// degree-2 vertices, is exactly K5 or K3,3.
    inline auto is_kuratowski_subdivision(std::size_t n, const std::vector<planemu::Edge> & edges) -> bool
    {
        Adjacency adj(n);
        for (auto e : edges) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        std::vector<VertexId> branch;
        for (VertexId v = 0; v < n; ++v) {
            auto d = adj[v].size();
            if (d == 1 || d > 4)
                return false;
            if (d >= 3)
                branch.push_back(v);
        }
        // follow each branch-vertex edge through degree-2 vertices
        std::map<std::pair<VertexId, VertexId>, int> joins;
        std::set<VertexId> visited_interior;
        for (auto b : branch)
            for (auto first : adj[b]) {
                VertexId prev = b, cur = first;
                while (adj[cur].size() == 2) {
                    visited_interior.insert(cur);
                    auto it = adj[cur].begin();
                    auto next = *it == prev ? *std::next(it) : *it;
                    prev = cur;
                    cur = next;
                }
                if (cur == b)
                    return false;
                ++joins[{std::min(b, cur), std::max(b, cur)}];
            }
        for (auto &[pair, count] : joins)
            if (count != 2)  // seen once from each end
                return false;
        for (VertexId v = 0; v < n; ++v)
            if (adj[v].size() == 2 && ! visited_interior.contains(v))
                return false;  // a stray cycle
        Graph h(branch.size());
        std::map<VertexId, VertexId> index;
        for (std::size_t i = 0; i < branch.size(); ++i)
            index[branch[i]] = i;
        for (auto &[pair, count] : joins)
            h.add_edge(index[pair.first], index[pair.second]);
        if (branch.size() == 5 && h.edge_count() == 10)
            return true;
        if (branch.size() != 6 || h.edge_count() != 9)
            return false;
        for (VertexId v = 0; v < 6; ++v)
            if (h.degree(v) != 3)
                return false;
        // bipartite with sides of three
        std::vector<int> side(6, -1);
        side[0] = 0;
        std::vector<VertexId> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (auto w : h.neighbors(queue[i])) {
                if (side[w] == -1) {
                    side[w] = 1 - side[queue[i]];
                    queue.push_back(w);
                }
                else if (side[w] == side[queue[i]])
                    return false;
            }
        return queue.size() == 6 && std::count(side.begin(), side.end(), 0) == 3;
    }

    // isomorphism

    /// Tries every permutation; use for n <= 9.
    inline auto isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
            return false;
        std::vector<VertexId> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        auto edges = g.edges();
        do {
            if (std::all_of(edges.begin(), edges.end(), [&](planemu::Edge e) { return h.has_edge(perm[e.u], perm[e.v]); }))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    // maps

    inline auto homomorphism(const Graph & h, const Graph & t, const std::vector<VertexId> & a) -> bool
    {
        for (auto e : h.edges())
            if (a[e.u] == a[e.v] || ! t.has_edge(a[e.u], a[e.v]))
                return false;
        return true;
    }

    inline auto vertex_surjective(const Graph & t, const std::vector<VertexId> & a) -> bool
    {
        std::set<VertexId> image(a.begin(), a.end());
        return image.size() == t.vertex_count();
    }

    inline auto emulator(const Graph & h, const Graph & t, const std::vector<VertexId> & a) -> bool
    {
        if (! homomorphism(h, t, a) || ! vertex_surjective(t, a))
            return false;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            std::set<VertexId> images;
            for (auto w : h.neighbors(v))
                images.insert(a[w]);
            for (auto x : t.neighbors(a[v]))
                if (! images.contains(x))
                    return false;
        }
        return true;
    }

    inline auto cover(const Graph & h, const Graph & t, const std::vector<VertexId> & a) -> bool
    {
        if (! emulator(h, t, a))
            return false;
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) != t.degree(a[v]))
                return false;
        return true;
    }

    /// Every labeling in lexicographic order of (a[order[0]], a[order[1]], ...);
    /// returns the first emulator labeling. |T|^|H| leaves.
    inline auto first_emulator(const Graph & h, const Graph & t, const std::vector<VertexId> & order)
        -> std::optional<std::vector<VertexId>>
    {
        auto n = h.vertex_count(), k = t.vertex_count();
        if (k == 0)
            return n == 0 ? std::optional<std::vector<VertexId>>{std::vector<VertexId>{}} : std::nullopt;
        std::vector<VertexId> digits(n, 0), a(n);
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                a[order[i]] = digits[i];
            if (emulator(h, t, a))
                return a;
            std::size_t i = n;
            while (i > 0 && ++digits[i - 1] == k)
                digits[--i] = 0;
            if (i == 0)
                return std::nullopt;
        }
    }

    // generators

    inline auto random_graph(std::mt19937 & rng, std::size_t n, double p) -> Graph
    {
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    /// Random spanning tree plus random extra edges.
    inline auto random_connected_graph(std::mt19937 & rng, std::size_t n, double p) -> Graph
    {
        Graph g = random_graph(rng, n, p);
        for (VertexId v = 1; v < n; ++v)
            g.add_edge(v, std::uniform_int_distribution<VertexId>(0, v - 1)(rng));
        return g;
    }

    /// Graph on n vertices whose edges are the set bits of `code` over pairs (u < v) in order.
    inline auto graph_from_code(std::size_t n, std::uint64_t code) -> Graph
    {
        Graph g(n);
        std::size_t bit = 0;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v, ++bit)
                if ((code >> bit) & 1U)
                    g.add_edge(u, v);
        return g;
    }

    inline auto connected(const Graph & g) -> bool
    {
        if (g.vertex_count() == 0)
            return true;
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == g.vertex_count();
    }
}
