#pragma once

#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/isomorphism.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace planemu
{
    struct SearchLimits
    {
        std::uint64_t max_nodes = 10'000'000;
    };

    struct SearchProblem
    {
        Graph host;
        Graph target;
        std::map<VertexId, VertexId> partial;  ///< host vertex -> fixed target vertex
        SearchLimits limits;
    };

    enum class SearchStatus
    {
        found,
        none,
        budget_exhausted
    };

    inline auto to_string(SearchStatus s) -> std::string_view
    {
        switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
        }
        return "?";
    }

    struct SearchResult
    {
        SearchStatus status = SearchStatus::none;
        std::optional<GraphMap> labeling;
        std::uint64_t nodes = 0;  ///< assignments tried
    };

    namespace detail
    {
        class EmulatorSearch
        {
        public:
            explicit EmulatorSearch(const SearchProblem & p) : _p(p), _n(p.host.vertex_count()), _value(_n, unset)
            {
                for (auto [u, t] : p.partial) {
                    if (! p.host.contains(u) || ! p.target.contains(t))
                        throw SearchError{"partial assignment references unknown vertex"};
                    _value[u] = t;
                }
                for (auto [u, t] : p.partial)
                    for (auto w : p.host.neighbors(u))
                        if (_value[w] != unset && ! p.target.has_edge(t, _value[w]))
                            throw SearchError{"partial assignment is inconsistent: edge " + std::to_string(std::min(u, w)) +
                                "-" + std::to_string(std::max(u, w)) + " is not preserved"};
                for (auto [u, t] : p.partial)
                    if (! admissible(u))
                        throw SearchError{"partial assignment is inconsistent: vertex " + std::to_string(u) +
                            " cannot reach every neighbour of its image"};

                for (VertexId v = 0; v < _n; ++v)
                    if (_value[v] == unset)
                        _order.push_back(v);
                std::stable_sort(_order.begin(), _order.end(),
                    [&](VertexId a, VertexId b) { return p.host.degree(a) > p.host.degree(b); });
                _hits.assign(p.target.vertex_count(), 0);
                for (VertexId v = 0; v < _n; ++v)
                    if (_value[v] != unset && _hits[_value[v]]++ == 0)
                        ++_covered;
            }

            auto run() -> SearchResult
            {
                SearchResult result;
                auto outcome = descend(0);
                result.nodes = _nodes;
                if (outcome == SearchStatus::found) {
                    GraphMap m{_p.host, _p.target, _value};
                    if (verify_emulator(m))
                        throw std::logic_error{"emulator search returned a labeling that fails verification"};
                    result.labeling = std::move(m);
                }
                result.status = outcome;
                return result;
            }

        private:
            static constexpr VertexId unset = static_cast<VertexId>(-1);

            /// Images still missing around `x` can be supplied by its unassigned neighbours.
            [[nodiscard]] auto admissible(VertexId x) const -> bool
            {
                auto want = _p.target.neighbors(_value[x]);
                std::size_t free = 0, missing = 0;
                for (auto w : _p.host.neighbors(x))
                    if (_value[w] == unset)
                        ++free;
                for (auto t : want) {
                    bool seen = false;
                    for (auto w : _p.host.neighbors(x))
                        if (_value[w] == t) {
                            seen = true;
                            break;
                        }
                    if (! seen)
                        ++missing;
                }
                return missing <= free;
            }

            auto descend(std::size_t depth) -> SearchStatus
            {
                if (depth == _order.size())
                    return _covered == _p.target.vertex_count() ? SearchStatus::found : SearchStatus::none;
                if (_p.target.vertex_count() - _covered > _order.size() - depth)
                    return SearchStatus::none;

                auto u = _order[depth];
                for (VertexId t = 0; t < _p.target.vertex_count(); ++t) {
                    if (_p.host.degree(u) < _p.target.degree(t))
                        continue;
                    bool ok = true;
                    for (auto w : _p.host.neighbors(u))
                        if (_value[w] != unset && ! _p.target.has_edge(t, _value[w])) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    if (++_nodes > _p.limits.max_nodes)
                        return SearchStatus::budget_exhausted;

                    _value[u] = t;
                    if (_hits[t]++ == 0)
                        ++_covered;
                    ok = admissible(u);
                    for (auto w : _p.host.neighbors(u))
                        if (ok && _value[w] != unset)
                            ok = admissible(w);
                    auto outcome = ok ? descend(depth + 1) : SearchStatus::none;
                    if (outcome == SearchStatus::found)
                        return outcome;
                    if (--_hits[t] == 0)
                        --_covered;
                    _value[u] = unset;
                    if (outcome == SearchStatus::budget_exhausted)
                        return outcome;
                }
                return SearchStatus::none;
            }

            const SearchProblem &_p;
            std::size_t _n;
            std::vector<VertexId> _value;
            std::vector<VertexId> _order;
            std::vector<std::size_t> _hits;
            std::size_t _covered = 0;
            std::uint64_t _nodes = 0;
        };
    }

    /// Backtracking search for an emulator labeling host -> target.
    ///
    /// Host vertices are taken in descending degree (ties by id), values in
    /// ascending target id, so the result is the first labeling in that order.
    /// Pruning: edge preservation, host degree at least target degree, and an
    /// admissibility filter on every assigned vertex near the latest choice.
    /// Any labeling returned has passed verify_emulator. Throws SearchError on
    /// an inconsistent partial assignment.
    inline auto find_emulator_labeling(const SearchProblem & p) -> SearchResult
    {
        return detail::EmulatorSearch{p}.run();
    }

    struct HostOutcome
    {
        Graph host;
        SearchStatus status = SearchStatus::none;
        std::optional<GraphMap> labeling;
        std::uint64_t nodes = 0;
    };

    struct RefuteOptions
    {
        std::size_t max_hosts = 200'000;   ///< SearchError beyond this many hosts
        std::uint64_t max_nodes_per_host = 1'000'000;
    };

    struct RefuteReport
    {
        std::size_t max_vertices = 0;
        std::vector<HostOutcome> hosts;

        [[nodiscard]] auto count(SearchStatus s) const -> std::size_t
        {
            return static_cast<std::size_t>(
                std::count_if(hosts.begin(), hosts.end(), [&](const HostOutcome & h) { return h.status == s; }));
        }
    };

    /// Connected planar graphs with 1..max_vertices vertices, one per
    /// isomorphism class, by vertex count and then generation order. Each is
    /// obtained from a smaller one by adding a vertex joined to a non-empty
    /// neighbour set (every connected graph has a non-cut vertex).
    inline auto connected_planar_graphs(std::size_t max_vertices, std::size_t max_graphs = 200'000) -> std::vector<Graph>
    {
        std::vector<Graph> all;
        if (max_vertices == 0)
            return all;
        std::vector<Graph> level{Graph{1}};
        all.push_back(level.front());
        for (std::size_t n = 2; n <= max_vertices; ++n) {
            IsomorphismClasses next;
            for (const auto &base : level)
                for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
                    Graph g = base;
                    auto v = g.add_vertex(std::nullopt);
                    for (VertexId w = 0; w + 1 < n; ++w)
                        if ((subset >> w) & 1U)
                            g.add_edge(v, w);
                    if (is_planar(g) && next.insert(g) && all.size() + next.size() > max_graphs)
                        throw SearchError{"host enumeration exceeded " + std::to_string(max_graphs) + " graphs"};
                }
            level = next.graphs();
            all.insert(all.end(), level.begin(), level.end());
        }
        return all;
    }

    /// Runs find_emulator_labeling on every connected planar host with at most
    /// `max_vertices` vertices. A host that exhausts its node budget is recorded
    /// as such, never as refuted.
    inline auto refute_small_hosts(const Graph & target, std::size_t max_vertices, const RefuteOptions & options = {})
        -> RefuteReport
    {
        RefuteReport report;
        report.max_vertices = max_vertices;
        for (auto &host : connected_planar_graphs(max_vertices, options.max_hosts)) {
            HostOutcome outcome;
            if (host.vertex_count() >= target.vertex_count()) {
                auto r = find_emulator_labeling(SearchProblem{host, target, {}, {options.max_nodes_per_host}});
                outcome.status = r.status;
                outcome.labeling = std::move(r.labeling);
                outcome.nodes = r.nodes;
            }
            outcome.host = std::move(host);
            report.hosts.push_back(std::move(outcome));
        }
        return report;
    }
}
