#pragma once

#include <planemu/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace planemu
{
    namespace detail
    {
        /// Colour refinement run on several graphs at once, so that colours are
        /// comparable between them. Returns one colour vector per graph.
        inline auto refine_colours(const std::vector<const Graph *> & graphs) -> std::vector<std::vector<std::size_t>>
        {
            std::vector<std::vector<std::size_t>> colour;
            for (auto g : graphs)
                colour.emplace_back(g->vertex_count(), 0);
            std::size_t classes = 1;
            for (;;) {
                std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> signature;
                std::vector<std::vector<std::pair<std::size_t, std::vector<std::size_t>>>> keys(graphs.size());
                for (std::size_t k = 0; k < graphs.size(); ++k)
                    for (VertexId v = 0; v < graphs[k]->vertex_count(); ++v) {
                        std::vector<std::size_t> around;
                        for (auto w : graphs[k]->neighbors(v))
                            around.push_back(colour[k][w]);
                        std::sort(around.begin(), around.end());
                        keys[k].emplace_back(colour[k][v], std::move(around));
                        signature.emplace(keys[k].back(), 0);
                    }
                std::size_t next = 0;
                for (auto &[key, id] : signature)
                    id = next++;
                for (std::size_t k = 0; k < graphs.size(); ++k)
                    for (VertexId v = 0; v < graphs[k]->vertex_count(); ++v)
                        colour[k][v] = signature.at(keys[k][v]);
                if (next == classes)
                    return colour;
                classes = next;
            }
        }
    }

    /// A vertex bijection `iso` with g.has_edge(u, w) == h.has_edge(iso[u], iso[w]),
    /// or nothing. Backtracking within the classes of a joint colour refinement.
    inline auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<std::vector<VertexId>>
    {
        auto n = g.vertex_count();
        if (n != h.vertex_count() || g.edge_count() != h.edge_count())
            return std::nullopt;
        auto colours = detail::refine_colours({&g, &h});
        const auto &cg = colours[0], &ch = colours[1];
        {
            auto a = cg, b = ch;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                return std::nullopt;
        }

        // rarest colour first, then grow along edges
        std::map<std::size_t, std::size_t> class_size;
        for (auto c : cg)
            ++class_size[c];
        std::vector<VertexId> order;
        std::vector<bool> queued(n, false);
        while (order.size() < n) {
            VertexId seed = n;
            for (VertexId v = 0; v < n; ++v)
                if (! queued[v] && (seed == n || class_size[cg[v]] < class_size[cg[seed]]))
                    seed = v;
            queued[seed] = true;
            order.push_back(seed);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i)
                for (auto w : g.neighbors(order[i]))
                    if (! queued[w]) {
                        queued[w] = true;
                        order.push_back(w);
                    }
        }

        std::vector<VertexId> iso(n, n);
        std::vector<bool> used(n, false);
        auto extend = [&](auto &self, std::size_t depth) -> bool {
            if (depth == n)
                return true;
            auto u = order[depth];
            for (VertexId x = 0; x < n; ++x) {
                if (used[x] || ch[x] != cg[u])
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < depth && ok; ++i)
                    ok = g.has_edge(u, order[i]) == h.has_edge(x, iso[order[i]]);
                if (! ok)
                    continue;
                iso[u] = x;
                used[x] = true;
                if (self(self, depth + 1))
                    return true;
                used[x] = false;
            }
            iso[u] = n;
            return false;
        };
        if (! extend(extend, 0))
            return std::nullopt;
        return iso;
    }

    inline auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        return find_isomorphism(g, h).has_value();
    }

    /// Isomorphism-invariant fingerprint: sorted stable colour multiset plus sizes.
    inline auto invariant_key(const Graph & g) -> std::vector<std::size_t>
    {
        auto colour = detail::refine_colours({&g})[0];
        std::vector<std::size_t> key{g.vertex_count(), g.edge_count()};
        std::map<std::size_t, std::vector<std::size_t>> by_class;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<std::size_t> around;
            for (auto w : g.neighbors(v))
                around.push_back(colour[w]);
            std::sort(around.begin(), around.end());
            by_class[colour[v]] = around;
        }
        std::vector<std::size_t> counts;
        for (auto c : colour)
            counts.push_back(c);
        std::sort(counts.begin(), counts.end());
        key.insert(key.end(), counts.begin(), counts.end());
        for (auto &[c, around] : by_class) {
            key.push_back(around.size());
            key.insert(key.end(), around.begin(), around.end());
        }
        return key;
    }

    /// Collection of graphs kept pairwise non-isomorphic.
    class IsomorphismClasses
    {
    public:
        /// Adds `g` unless an isomorphic graph is present; true if added.
        auto insert(const Graph & g) -> bool
        {
            auto &bucket = _buckets[invariant_key(g)];
            for (auto i : bucket)
                if (are_isomorphic(_graphs[i], g))
                    return false;
            bucket.push_back(_graphs.size());
            _graphs.push_back(g);
            return true;
        }

        [[nodiscard]] auto graphs() const -> const std::vector<Graph> & { return _graphs; }
        [[nodiscard]] auto size() const -> std::size_t { return _graphs.size(); }

    private:
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> _buckets;
        std::vector<Graph> _graphs;
    };
}
