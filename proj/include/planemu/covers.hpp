#pragma once

#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

namespace planemu
{
    /// Z/2 voltage on every edge of `graph`.
    class VoltageAssignment
    {
    public:
        VoltageAssignment() = default;

        /// All voltages zero.
        explicit VoltageAssignment(Graph graph) : _graph(std::move(graph))
        {
            for (auto e : _graph.edges())
                _voltage.emplace(e, false);
        }

        VoltageAssignment(Graph graph, std::map<Edge, bool> voltage) :
            _graph(std::move(graph)),
            _voltage(std::move(voltage))
        {
            auto edges = _graph.edges();
            if (_voltage.size() != edges.size())
                throw CoverError{"voltage assignment is not total over the edge set"};
            for (auto e : edges)
                if (! _voltage.contains(e))
                    throw CoverError{"voltage assignment is missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v)};
        }

        [[nodiscard]] auto graph() const -> const Graph & { return _graph; }
        [[nodiscard]] auto voltage() const -> const std::map<Edge, bool> & { return _voltage; }
        [[nodiscard]] auto operator[](Edge e) const -> bool { return _voltage.at(e); }

        void set(Edge e, bool b)
        {
            if (! _voltage.contains(e))
                throw CoverError{"edge not in graph"};
            _voltage[e] = b;
        }

        friend auto operator==(const VoltageAssignment &, const VoltageAssignment &) -> bool = default;

    private:
        Graph _graph;
        std::map<Edge, bool> _voltage;
    };

    /// Derived Z/2 cover. Vertex (v, s) has id 2v + s; an edge {u, w} of
    /// voltage b lifts to {(u, s), (w, s ⊕ b)} for both sheets s. The map is the
    /// sheet projection.
    inline auto derive_double_cover(const VoltageAssignment & va) -> std::pair<Graph, GraphMap>
    {
        const auto &g = va.graph();
        Graph lift;
        std::vector<VertexId> projection;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId s = 0; s < 2; ++s) {
                lift.add_vertex(g.name(v));
                projection.push_back(v);
            }
        for (auto [e, b] : va.voltage())
            for (VertexId s = 0; s < 2; ++s)
                lift.add_edge(2 * e.u + s, 2 * e.v + (s ^ (b ? 1 : 0)));
        GraphMap map{lift, g, std::move(projection)};
        return {std::move(lift), std::move(map)};
    }

    /// Co-tree edges of the BFS spanning forest rooted at the smallest vertex
    /// of each component, in canonical edge order.
    inline auto cotree_edges(const Graph & g) -> std::vector<Edge>
    {
        std::set<Edge> tree;
        std::vector<bool> seen(g.vertex_count(), false);
        for (VertexId root = 0; root < g.vertex_count(); ++root) {
            if (seen[root])
                continue;
            seen[root] = true;
            std::vector<VertexId> queue{root};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto w : g.neighbors(queue[i]))
                    if (! seen[w]) {
                        seen[w] = true;
                        tree.insert(Edge{queue[i], w});
                        queue.push_back(w);
                    }
        }
        std::vector<Edge> result;
        for (auto e : g.edges())
            if (! tree.contains(e))
                result.push_back(e);
        return result;
    }

    /// Voltages that are zero on the tree and read `bits` on the co-tree
    /// edges, the first co-tree edge being the most significant bit.
    inline auto voltage_from_index(const Graph & g, const std::vector<Edge> & cotree, std::uint64_t bits) -> VoltageAssignment
    {
        VoltageAssignment va{g};
        auto k = cotree.size();
        for (std::size_t i = 0; i < k; ++i)
            va.set(cotree[i], (bits >> (k - 1 - i)) & 1U);
        return va;
    }

    struct ProjectiveDecision
    {
        bool projective_planar = false;
        std::optional<VoltageAssignment> certificate;  ///< derived cover is planar
        std::uint64_t assignments_checked = 0;
        std::uint64_t assignments_total = 0;
    };

    struct ProjectiveOptions
    {
        unsigned jobs = 1;
        /// Voltages are normalised to zero on this spanning tree; when absent the
        /// BFS tree of cotree_edges() is used.
        std::optional<std::vector<Edge>> cotree;
    };

    /// Decides whether a connected graph embeds in the projective plane by
    /// searching the 2^cycle_rank inequivalent Z/2 voltage assignments for one
    /// whose derived double cover is planar. The certificate is the first
    /// success in lexicographic order over the co-tree edges, whatever the
    /// number of jobs; assignments_checked counts assignments up to and
    /// including it.
    inline auto is_projective_planar(const Graph & g, const ProjectiveOptions & options = {}) -> ProjectiveDecision
    {
        if (! is_connected(g))
            throw CoverError{"is_projective_planar requires a connected graph"};
        auto cotree = options.cotree ? *options.cotree : cotree_edges(g);
        {
            std::set<Edge> off_tree(cotree.begin(), cotree.end());
            std::vector<Edge> tree;
            for (auto e : g.edges())
                if (! off_tree.contains(e))
                    tree.push_back(e);
            if (off_tree.size() != cotree.size() || cotree.size() != cycle_rank(g) ||
                ! is_connected(spanning_subgraph(g, tree)))
                throw CoverError{"co-tree edge set does not complement a spanning tree"};
        }
        if (cotree.size() >= 40)
            throw CoverError{"cycle rank too large for exhaustive voltage enumeration"};

        std::uint64_t total = std::uint64_t{1} << cotree.size();
        auto jobs = std::max(1U, options.jobs);

        auto planar_lift = [&](std::uint64_t bits) {
            auto [lift, projection] = derive_double_cover(voltage_from_index(g, cotree, bits));
            return is_planar(lift);
        };

        std::atomic<std::uint64_t> best{total};
        auto worker = [&](unsigned id) {
            for (std::uint64_t bits = id; bits < total && bits < best.load(); bits += jobs)
                if (planar_lift(bits)) {
                    auto current = best.load();
                    while (bits < current && ! best.compare_exchange_weak(current, bits)) {
                    }
                    return;
                }
        };

        if (jobs == 1)
            worker(0);
        else {
            std::vector<std::thread> threads;
            for (unsigned id = 0; id < jobs; ++id)
                threads.emplace_back(worker, id);
            for (auto &t : threads)
                t.join();
        }

        ProjectiveDecision decision;
        decision.assignments_total = total;
        if (best.load() < total) {
            decision.projective_planar = true;
            decision.certificate = voltage_from_index(g, cotree, best.load());
            decision.assignments_checked = best.load() + 1;
        }
        else
            decision.assignments_checked = total;
        return decision;
    }

    /// Fixed-point-free automorphism of order two.
    class Involution
    {
    public:
        Involution() = default;

        /// Throws CoverError unless `pairing` is a fixed-point-free involutive
        /// automorphism of `graph`.
        Involution(const Graph & graph, std::vector<VertexId> pairing) : _pairing(std::move(pairing))
        {
            if (_pairing.size() != graph.vertex_count())
                throw CoverError{"involution is not total"};
            for (VertexId v = 0; v < _pairing.size(); ++v) {
                if (! graph.contains(_pairing[v]))
                    throw CoverError{"involution references unknown vertex " + std::to_string(_pairing[v])};
                if (_pairing[v] == v)
                    throw CoverError{"involution has a fixed point at vertex " + std::to_string(v)};
                if (_pairing[_pairing[v]] != v)
                    throw CoverError{"pairing is not an involution at vertex " + std::to_string(v)};
            }
            for (auto e : graph.edges())
                if (! graph.has_edge(_pairing[e.u], _pairing[e.v]))
                    throw CoverError{"pairing is not an automorphism: edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v) + " has no image"};
        }

        [[nodiscard]] auto pairing() const -> const std::vector<VertexId> & { return _pairing; }
        [[nodiscard]] auto operator()(VertexId v) const -> VertexId { return _pairing.at(v); }

        friend auto operator==(const Involution &, const Involution &) -> bool = default;

    private:
        std::vector<VertexId> _pairing;
    };

    /// Swaps the two sheets of a derived double cover.
    inline auto sheet_swap(const Graph & lift) -> Involution
    {
        std::vector<VertexId> pairing(lift.vertex_count());
        for (VertexId v = 0; v < pairing.size(); ++v)
            pairing[v] = v ^ 1U;
        return Involution{lift, std::move(pairing)};
    }

    struct Quotient
    {
        Graph graph;
        GraphMap projection;              ///< 2-to-1 cover onto the quotient
        std::optional<GraphMap> induced;  ///< present when a map was supplied
    };

    /// Quotient by the orbits {v, pairing(v)}. Orbit ids follow the order of
    /// their smallest member; each orbit keeps that member's name. Rejects an
    /// edge inside an orbit (it would become a loop) and a vertex adjacent to
    /// both members of an orbit (the projection would not be a cover). If `m`
    /// is given it must be constant on orbits; the induced map then satisfies
    /// induced ∘ projection = m.
    inline auto quotient_by_involution(const Graph & g, const Involution & inv, const std::optional<GraphMap> & m = std::nullopt)
        -> Quotient
    {
        if (inv.pairing().size() != g.vertex_count())
            throw CoverError{"involution does not match graph"};
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (inv(v) == v)
                throw CoverError{"involution has a fixed point at vertex " + std::to_string(v)};
            if (g.has_edge(v, inv(v)))
                throw CoverError{"edge " + std::to_string(v) + "-" + std::to_string(inv(v)) + " would become a loop"};
            for (auto w : g.neighbors(v))
                if (w < inv(w) && g.has_edge(v, inv(w)))
                    throw CoverError{"vertex " + std::to_string(v) + " is adjacent to both " + std::to_string(w) + " and " +
                        std::to_string(inv(w)) + "; the projection would not be a cover"};
        }
        if (m) {
            if (m->domain() != g)
                throw CoverError{"map domain is not the graph being quotiented"};
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (m->assignment()[v] != m->assignment()[inv(v)])
                    throw CoverError{"map is not involution-invariant at vertex " + std::to_string(v)};
        }

        Graph q;
        std::vector<VertexId> orbit(g.vertex_count());
        std::vector<VertexId> representative;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v < inv(v)) {
                orbit[v] = orbit[inv(v)] = q.add_vertex(g.name(v));
                representative.push_back(v);
            }
        for (auto e : g.edges())
            q.add_edge(orbit[e.u], orbit[e.v]);

        Quotient result{q, GraphMap{g, q, orbit}, std::nullopt};
        if (m) {
            std::vector<VertexId> induced;
            for (auto r : representative)
                induced.push_back(m->assignment()[r]);
            result.induced = GraphMap{q, m->codomain(), std::move(induced)};
        }
        return result;
    }
}
