#pragma once

#include <planemu/graph.hpp>
#include <planemu/rotation.hpp>

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planemu
{
    struct PlanarityOptions
    {
        /// Also extract a Kuratowski subgraph when the graph is not planar.
        bool find_obstruction = false;
    };

    struct PlanarityResult
    {
        bool planar = false;
        std::optional<RotationSystem> embedding;   ///< present iff planar
        std::optional<std::vector<Edge>> obstruction;  ///< subdivision of K5 or K3,3, when requested
    };

    namespace detail
    {
        /// Circular doubly linked neighbour lists, one per vertex.
        class HalfEdgeRings
        {
        public:
            static constexpr VertexId none = static_cast<VertexId>(-1);

            explicit HalfEdgeRings(std::size_t n) : _links(n), _first(n, none) {}

            /// Insert `end` immediately clockwise of `reference` around `start`.
            void add_cw(VertexId start, VertexId end, VertexId reference)
            {
                auto &ring = _links[start];
                if (reference == none) {
                    ring[end] = {end, end};
                    _first[start] = end;
                    return;
                }
                auto cw_reference = ring.at(reference).cw;
                ring[reference].cw = end;
                ring[end] = {cw_reference, reference};
                ring[cw_reference].ccw = end;
            }

            /// Insert `end` immediately counter-clockwise of `reference` around `start`.
            void add_ccw(VertexId start, VertexId end, VertexId reference)
            {
                if (reference == none) {
                    add_cw(start, end, none);
                    return;
                }
                add_cw(start, end, _links[start].at(reference).ccw);
                if (reference == _first[start])
                    _first[start] = end;
            }

            void add_first(VertexId start, VertexId end)
            {
                add_ccw(start, end, _first[start]);
            }

            /// Neighbours of v in counter-clockwise order, starting at the first.
            [[nodiscard]] auto ccw_order(VertexId v) const -> std::vector<VertexId>
            {
                std::vector<VertexId> order;
                if (_first[v] == none)
                    return order;
                auto w = _first[v];
                do {
                    order.push_back(w);
                    w = _links[v].at(w).ccw;
                } while (w != _first[v]);
                return order;
            }

        private:
            struct Links
            {
                VertexId cw = none;
                VertexId ccw = none;
            };
            std::vector<std::map<VertexId, Links>> _links;
            std::vector<VertexId> _first;
        };

        /// Left-right planarity test with embedding construction, following
        /// the orientation / testing / embedding phases of the LR criterion.
        class LeftRightPlanarity
        {
        public:
            explicit LeftRightPlanarity(const Graph & g) :
                _g(g),
                _height(g.vertex_count(), -1),
                _parent_edge(g.vertex_count(), -1),
                _out(g.vertex_count()),
                _left_ref(g.vertex_count(), HalfEdgeRings::none),
                _right_ref(g.vertex_count(), HalfEdgeRings::none)
            {
            }

            auto run() -> std::optional<RotationSystem>
            {
                auto n = _g.vertex_count();
                if (n > 2 && _g.edge_count() > 3 * n - 6)
                    return std::nullopt;

                for (VertexId v = 0; v < n; ++v)
                    if (_height[v] == -1) {
                        _height[v] = 0;
                        _roots.push_back(v);
                        orient(v);
                    }

                auto m = _src.size();
                _ref.assign(m, -1);
                _side.assign(m, 1);
                _stack_bottom.assign(m, 0);
                _lowpt_edge.assign(m, -1);

                sort_adjacency();
                for (auto r : _roots)
                    if (! test(r))
                        return std::nullopt;

                for (long e = 0; e < static_cast<long>(m); ++e)
                    _nesting_depth[e] *= sign(e);
                sort_adjacency();

                HalfEdgeRings rings(n);
                for (VertexId v = 0; v < n; ++v) {
                    auto previous = HalfEdgeRings::none;
                    for (auto e : _ordered[v]) {
                        rings.add_cw(v, _dst[e], previous);
                        previous = _dst[e];
                    }
                }
                for (auto r : _roots)
                    embed(r, rings);

                std::vector<std::vector<VertexId>> rotation(n);
                for (VertexId v = 0; v < n; ++v)
                    rotation[v] = rings.ccw_order(v);
                return RotationSystem{_g, std::move(rotation)};
            }

        private:
            struct Interval
            {
                long low = -1;
                long high = -1;
                [[nodiscard]] auto empty() const -> bool { return low == -1 && high == -1; }
            };

            struct ConflictPair
            {
                Interval left;
                Interval right;
                void swap() { std::swap(left, right); }
            };

            [[nodiscard]] auto conflicting(const Interval & i, long b) const -> bool
            {
                return ! i.empty() && _lowpt[i.high] > _lowpt[b];
            }

            [[nodiscard]] auto lowest(const ConflictPair & p) const -> long
            {
                if (p.left.empty() && p.right.empty())
                    return LONG_MAX;
                if (p.left.empty())
                    return _lowpt[p.right.low];
                if (p.right.empty())
                    return _lowpt[p.left.low];
                return std::min(_lowpt[p.left.low], _lowpt[p.right.low]);
            }

            void sort_adjacency()
            {
                _ordered = _out;
                for (auto &adj : _ordered)
                    std::stable_sort(adj.begin(), adj.end(),
                        [&](long a, long b) { return _nesting_depth[a] < _nesting_depth[b]; });
            }

            void orient(VertexId v)
            {
                auto e = _parent_edge[v];
                for (auto w : _g.neighbors(v)) {
                    if (_oriented.contains(Edge{v, w}))
                        continue;
                    _oriented.insert(Edge{v, w});
                    long vw = static_cast<long>(_src.size());
                    _src.push_back(v);
                    _dst.push_back(w);
                    _out[v].push_back(vw);
                    _lowpt.push_back(_height[v]);
                    _lowpt2.push_back(_height[v]);
                    _nesting_depth.push_back(0);

                    if (_height[w] == -1) {
                        _parent_edge[w] = vw;
                        _height[w] = _height[v] + 1;
                        orient(w);
                    }
                    else
                        _lowpt[vw] = _height[w];

                    _nesting_depth[vw] = 2 * _lowpt[vw];
                    if (_lowpt2[vw] < _height[v])
                        _nesting_depth[vw] += 1;

                    if (e != -1) {
                        if (_lowpt[vw] < _lowpt[e]) {
                            _lowpt2[e] = std::min(_lowpt[e], _lowpt2[vw]);
                            _lowpt[e] = _lowpt[vw];
                        }
                        else if (_lowpt[vw] > _lowpt[e])
                            _lowpt2[e] = std::min(_lowpt2[e], _lowpt[vw]);
                        else
                            _lowpt2[e] = std::min(_lowpt2[e], _lowpt2[vw]);
                    }
                }
            }

            auto test(VertexId v) -> bool
            {
                auto e = _parent_edge[v];
                for (auto ei : _ordered[v]) {
                    auto w = _dst[ei];
                    _stack_bottom[ei] = _stack.size();
                    if (ei == _parent_edge[w]) {
                        if (! test(w))
                            return false;
                    }
                    else {
                        _lowpt_edge[ei] = ei;
                        _stack.push_back(ConflictPair{{}, {ei, ei}});
                    }

                    if (_lowpt[ei] < _height[v]) {
                        if (ei == _ordered[v].front())
                            _lowpt_edge[e] = _lowpt_edge[ei];
                        else if (! add_constraints(ei, e))
                            return false;
                    }
                }
                if (e != -1)
                    remove_back_edges(e);
                return true;
            }

            auto add_constraints(long ei, long e) -> bool
            {
                ConflictPair p;
                do {
                    auto q = _stack.back();
                    _stack.pop_back();
                    if (! q.left.empty())
                        q.swap();
                    if (! q.left.empty())
                        return false;
                    if (_lowpt[q.right.low] > _lowpt[e]) {
                        if (p.right.empty())
                            p.right = q.right;
                        else
                            _ref[p.right.low] = q.right.high;
                        p.right.low = q.right.low;
                    }
                    else
                        _ref[q.right.low] = _lowpt_edge[e];
                } while (_stack.size() != _stack_bottom[ei]);

                while (! _stack.empty() && (conflicting(_stack.back().left, ei) || conflicting(_stack.back().right, ei))) {
                    auto q = _stack.back();
                    _stack.pop_back();
                    if (conflicting(q.right, ei))
                        q.swap();
                    if (conflicting(q.right, ei))
                        return false;
                    if (p.right.low != -1)
                        _ref[p.right.low] = q.right.high;
                    if (q.right.low != -1)
                        p.right.low = q.right.low;

                    if (p.left.empty())
                        p.left = q.left;
                    else
                        _ref[p.left.low] = q.left.high;
                    p.left.low = q.left.low;
                }

                if (! (p.left.empty() && p.right.empty()))
                    _stack.push_back(p);
                return true;
            }

            void remove_back_edges(long e)
            {
                auto u = _src[e];
                while (! _stack.empty() && lowest(_stack.back()) == _height[u]) {
                    auto p = _stack.back();
                    _stack.pop_back();
                    if (p.left.low != -1)
                        _side[p.left.low] = -1;
                }

                if (! _stack.empty()) {
                    auto p = _stack.back();
                    _stack.pop_back();
                    while (p.left.high != -1 && _dst[p.left.high] == u)
                        p.left.high = _ref[p.left.high];
                    if (p.left.high == -1 && p.left.low != -1) {
                        _ref[p.left.low] = p.right.low;
                        _side[p.left.low] = -1;
                        p.left.low = -1;
                    }
                    while (p.right.high != -1 && _dst[p.right.high] == u)
                        p.right.high = _ref[p.right.high];
                    if (p.right.high == -1 && p.right.low != -1) {
                        _ref[p.right.low] = p.left.low;
                        _side[p.right.low] = -1;
                        p.right.low = -1;
                    }
                    _stack.push_back(p);
                }

                if (_lowpt[e] < _height[u] && ! _stack.empty()) {
                    auto hl = _stack.back().left.high;
                    auto hr = _stack.back().right.high;
                    if (hl != -1 && (hr == -1 || _lowpt[hl] > _lowpt[hr]))
                        _ref[e] = hl;
                    else
                        _ref[e] = hr;
                }
            }

            auto sign(long e) -> long
            {
                // iterative form of side[e] *= sign(ref[e]) along the ref chain
                std::vector<long> chain;
                while (e != -1) {
                    chain.push_back(e);
                    e = _ref[e];
                }
                for (auto it = chain.rbegin() + 1; it < chain.rend(); ++it) {
                    auto f = *it;
                    _side[f] *= _side[_ref[f]];
                    _ref[f] = -1;
                }
                return _side[chain.front()];
            }

            void embed(VertexId v, HalfEdgeRings & rings)
            {
                for (auto ei : _ordered[v]) {
                    auto w = _dst[ei];
                    if (ei == _parent_edge[w]) {
                        rings.add_first(w, v);
                        _left_ref[v] = w;
                        _right_ref[v] = w;
                        embed(w, rings);
                    }
                    else if (_side[ei] == 1)
                        rings.add_cw(w, v, _right_ref[w]);
                    else {
                        rings.add_ccw(w, v, _left_ref[w]);
                        _left_ref[w] = v;
                    }
                }
            }

            const Graph &_g;
            std::vector<long> _height;
            std::vector<long> _parent_edge;
            std::vector<std::vector<long>> _out, _ordered;
            std::vector<VertexId> _src, _dst;
            std::vector<long> _lowpt, _lowpt2, _nesting_depth;
            std::set<Edge> _oriented;
            std::vector<VertexId> _roots;
            std::vector<long> _ref;
            std::vector<long> _side;
            std::vector<ConflictPair> _stack;
            std::vector<std::size_t> _stack_bottom;
            std::vector<long> _lowpt_edge;
            std::vector<VertexId> _left_ref, _right_ref;
        };

        inline auto planar_embedding(const Graph & g) -> std::optional<RotationSystem>
        {
            return LeftRightPlanarity{g}.run();
        }

        /// Faces per component must satisfy V - E + F = 2.
        inline auto is_spherical(const RotationSystem & r) -> bool
        {
            const auto &g = r.graph();
            auto comps = connected_components(g);
            std::vector<std::size_t> component_of(g.vertex_count());
            for (std::size_t c = 0; c < comps.size(); ++c)
                for (auto v : comps[c])
                    component_of[v] = c;
            std::vector<long> chi(comps.size(), 0);
            for (std::size_t c = 0; c < comps.size(); ++c)
                chi[c] = static_cast<long>(comps[c].size());
            for (auto e : g.edges())
                --chi[component_of[e.u]];
            for (const auto &f : faces(r))
                ++chi[component_of[f.front()]];
            return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
        }

        /// Greedy edge deletion down to a minimal non-planar subgraph, which is
        /// necessarily a subdivision of K5 or K3,3.
        inline auto kuratowski_subgraph(const Graph & g) -> std::vector<Edge>
        {
            auto kept = g.edges();
            for (std::size_t i = 0; i < kept.size();) {
                std::vector<Edge> trial;
                trial.reserve(kept.size() - 1);
                for (std::size_t j = 0; j < kept.size(); ++j)
                    if (j != i)
                        trial.push_back(kept[j]);
                if (! planar_embedding(spanning_subgraph(g, trial)))
                    kept = std::move(trial);
                else
                    ++i;
            }
            return kept;
        }
    }

    /// Planarity of g (componentwise). When planar, the embedding is a genus 0
    /// rotation system on every component. Deterministic for a given input.
    inline auto test_planarity(const Graph & g, PlanarityOptions options = {}) -> PlanarityResult
    {
        PlanarityResult result;
        if (auto embedding = detail::planar_embedding(g)) {
            if (! detail::is_spherical(*embedding))
                throw std::logic_error{"planarity: constructed embedding is not spherical"};
            result.planar = true;
            result.embedding = std::move(embedding);
        }
        else if (options.find_obstruction)
            result.obstruction = detail::kuratowski_subgraph(g);
        return result;
    }

    inline auto is_planar(const Graph & g) -> bool
    {
        return detail::planar_embedding(g).has_value();
    }
}
