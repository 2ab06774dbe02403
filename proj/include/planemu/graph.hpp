#pragma once

#include <planemu/errors.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace planemu
{
    /// Dense identifier, assigned in creation order.
    using VertexId = std::size_t;

    /// Undirected edge, always stored with u < v.
    struct Edge
    {
        VertexId u = 0;
        VertexId v = 0;

        Edge() = default;
        Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

        auto operator<=>(const Edge &) const = default;

        [[nodiscard]] auto other(VertexId x) const -> VertexId { return x == u ? v : u; }
    };

    /// Finite simple undirected graph. Vertices are 0..n-1; each may carry an
    /// optional display name that survives renumbering by covers and quotients.
    class Graph
    {
    public:
        Graph() = default;

        explicit Graph(std::size_t n) : _adjacency(n), _names(n) {}

        auto add_vertex(std::optional<std::string> name = std::nullopt) -> VertexId
        {
            _adjacency.emplace_back();
            _names.push_back(std::move(name));
            return _adjacency.size() - 1;
        }

        /// Idempotent. Returns true if the edge was not already present.
        auto add_edge(VertexId a, VertexId b) -> bool
        {
            if (a == b)
                throw GraphError{"loop requested at vertex " + std::to_string(a)};
            require(a);
            require(b);
            auto &na = _adjacency[a];
            auto pos = std::lower_bound(na.begin(), na.end(), b);
            if (pos != na.end() && *pos == b)
                return false;
            na.insert(pos, b);
            auto &nb = _adjacency[b];
            nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
            ++_edge_count;
            return true;
        }

        [[nodiscard]] auto contains(VertexId v) const -> bool { return v < _adjacency.size(); }

        [[nodiscard]] auto has_edge(VertexId a, VertexId b) const -> bool
        {
            if (! contains(a) || ! contains(b))
                return false;
            const auto &na = _adjacency[a];
            return std::binary_search(na.begin(), na.end(), b);
        }

        /// Open neighbourhood, ascending.
        [[nodiscard]] auto neighbors(VertexId v) const -> std::span<const VertexId>
        {
            require(v);
            return _adjacency[v];
        }

        [[nodiscard]] auto degree(VertexId v) const -> std::size_t { return neighbors(v).size(); }

        [[nodiscard]] auto vertex_count() const -> std::size_t { return _adjacency.size(); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edge_count; }
        [[nodiscard]] auto empty() const -> bool { return _adjacency.empty(); }

        /// All edges in canonical (u, v) lexicographic order.
        [[nodiscard]] auto edges() const -> std::vector<Edge>
        {
            std::vector<Edge> result;
            result.reserve(_edge_count);
            for (VertexId u = 0; u < _adjacency.size(); ++u)
                for (auto w : _adjacency[u])
                    if (u < w)
                        result.emplace_back(u, w);
            return result;
        }

        [[nodiscard]] auto name(VertexId v) const -> const std::optional<std::string> &
        {
            require(v);
            return _names[v];
        }

        void set_name(VertexId v, std::optional<std::string> name)
        {
            require(v);
            _names[v] = std::move(name);
        }

        /// The display name, or the decimal id when unnamed.
        [[nodiscard]] auto label(VertexId v) const -> std::string
        {
            const auto &n = name(v);
            return n ? *n : std::to_string(v);
        }

        /// First vertex carrying the given display name.
        [[nodiscard]] auto find_by_name(const std::string &name) const -> std::optional<VertexId>
        {
            for (VertexId v = 0; v < _names.size(); ++v)
                if (_names[v] && *_names[v] == name)
                    return v;
            return std::nullopt;
        }

        void require(VertexId v) const
        {
            if (! contains(v))
                throw GraphError{"unknown vertex " + std::to_string(v)};
        }

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<std::vector<VertexId>> _adjacency;
        std::vector<std::optional<std::string>> _names;
        std::size_t _edge_count = 0;
    };

    /// Components by reachability. Each component is ascending; components are
    /// ordered by their smallest vertex.
    inline auto connected_components(const Graph & g) -> std::vector<std::vector<VertexId>>
    {
        std::vector<std::vector<VertexId>> result;
        std::vector<bool> seen(g.vertex_count(), false);
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (seen[s])
                continue;
            std::vector<VertexId> component{s}, stack{s};
            seen[s] = true;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : g.neighbors(v))
                    if (! seen[w]) {
                        seen[w] = true;
                        component.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    inline auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    /// |E| - |V| + (number of components): the dimension of the cycle space.
    inline auto cycle_rank(const Graph & g) -> std::size_t
    {
        return g.edge_count() + connected_components(g).size() - g.vertex_count();
    }

    /// Subgraph induced by `keep`, renumbered in ascending order of old id.
    /// The second member maps each old id to its new id, if kept.
    inline auto induced_subgraph(const Graph & g, std::span<const VertexId> keep)
        -> std::pair<Graph, std::vector<std::optional<VertexId>>>
    {
        std::vector<std::optional<VertexId>> renumber(g.vertex_count());
        std::vector<VertexId> sorted(keep.begin(), keep.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        Graph h;
        for (auto v : sorted) {
            g.require(v);
            renumber[v] = h.add_vertex(g.name(v));
        }
        for (auto e : g.edges())
            if (renumber[e.u] && renumber[e.v])
                h.add_edge(*renumber[e.u], *renumber[e.v]);
        return {std::move(h), std::move(renumber)};
    }

    inline auto remove_vertex(const Graph & g, VertexId doomed)
        -> std::pair<Graph, std::vector<std::optional<VertexId>>>
    {
        g.require(doomed);
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != doomed)
                keep.push_back(v);
        return induced_subgraph(g, keep);
    }

    /// Graph on the same vertices with the given edges only.
    inline auto spanning_subgraph(const Graph & g, std::span<const Edge> edges) -> Graph
    {
        Graph h;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            h.add_vertex(g.name(v));
        for (auto e : edges)
            h.add_edge(e.u, e.v);
        return h;
    }
}
