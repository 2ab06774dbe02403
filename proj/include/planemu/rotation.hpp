#pragma once

#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/maps.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace planemu
{
    /// A closed walk, listed as the vertices visited; the last vertex is
    /// joined back to the first.
    using Face = std::vector<VertexId>;

    /// Cyclic order of neighbours at every vertex.
    ///
    /// Face tracing convention, used everywhere in the project: the dart that
    /// follows u→v along a face is v→w, where w is the neighbour after u in
    /// the cyclic order at v.
    class RotationSystem
    {
    public:
        RotationSystem() = default;

        RotationSystem(Graph graph, std::vector<std::vector<VertexId>> rotation) :
            _graph(std::move(graph)),
            _rotation(std::move(rotation))
        {
            if (_rotation.size() != _graph.vertex_count())
                throw EmbeddingError{"malformed rotation: wrong number of vertices"};
            for (VertexId v = 0; v < _rotation.size(); ++v) {
                auto sorted = _rotation[v];
                std::sort(sorted.begin(), sorted.end());
                auto nbrs = _graph.neighbors(v);
                if (! std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
                    throw EmbeddingError{"malformed rotation: order at vertex " + std::to_string(v) +
                        " is not a permutation of its neighbours"};
            }
            _position.resize(_rotation.size());
            for (VertexId v = 0; v < _rotation.size(); ++v)
                for (std::size_t i = 0; i < _rotation[v].size(); ++i)
                    _position[v].emplace(_rotation[v][i], i);
        }

        [[nodiscard]] auto graph() const -> const Graph & { return _graph; }
        [[nodiscard]] auto rotation() const -> const std::vector<std::vector<VertexId>> & { return _rotation; }
        [[nodiscard]] auto at(VertexId v) const -> const std::vector<VertexId> & { return _rotation.at(v); }

        /// Neighbour after `from` in the cyclic order at `v`.
        [[nodiscard]] auto successor(VertexId v, VertexId from) const -> VertexId
        {
            auto i = _position.at(v).at(from);
            const auto &r = _rotation[v];
            return r[(i + 1) % r.size()];
        }

        /// The dart following u→v on its face.
        [[nodiscard]] auto next_dart(VertexId u, VertexId v) const -> std::pair<VertexId, VertexId>
        {
            return {v, successor(v, u)};
        }

        /// Same graph with every cyclic order reversed.
        [[nodiscard]] auto mirror() const -> RotationSystem
        {
            auto r = _rotation;
            for (auto &order : r)
                std::reverse(order.begin(), order.end());
            return RotationSystem{_graph, std::move(r)};
        }

        friend auto operator==(const RotationSystem & a, const RotationSystem & b) -> bool
        {
            return a._graph == b._graph && a._rotation == b._rotation;
        }

    private:
        Graph _graph;
        std::vector<std::vector<VertexId>> _rotation;
        std::vector<std::map<VertexId, std::size_t>> _position;
    };

    /// Partition of all darts into face walks. Faces are discovered from the
    /// smallest unused dart (u, v) in (u ascending, rotation order) sequence.
    /// An isolated vertex contributes the one-vertex walk [v].
    inline auto faces(const RotationSystem & r) -> std::vector<Face>
    {
        const auto &g = r.graph();
        std::set<std::pair<VertexId, VertexId>> used;
        std::vector<Face> result;
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            if (g.degree(u) == 0) {
                result.push_back({u});
                continue;
            }
            for (auto v : r.at(u)) {
                if (used.contains({u, v}))
                    continue;
                Face walk;
                std::pair<VertexId, VertexId> dart{u, v};
                while (! used.contains(dart)) {
                    used.insert(dart);
                    walk.push_back(dart.first);
                    dart = r.next_dart(dart.first, dart.second);
                }
                if (dart != std::pair{u, v})
                    throw EmbeddingError{"malformed rotation: face trace does not close"};
                result.push_back(std::move(walk));
            }
        }
        return result;
    }

    /// True if `walk`, read cyclically, is exactly one face of `r` (from any
    /// starting point).
    inline auto is_face(const RotationSystem & r, const Face & walk) -> bool
    {
        const auto &g = r.graph();
        if (walk.empty())
            return false;
        if (walk.size() == 1)
            return g.contains(walk[0]) && g.degree(walk[0]) == 0;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            auto u = walk[i], v = walk[(i + 1) % walk.size()], w = walk[(i + 2) % walk.size()];
            if (! g.has_edge(u, v))
                return false;
            if (r.next_dart(u, v) != std::pair{v, w})
                return false;
        }
        // the walk must not repeat a dart, otherwise it is several laps of a shorter face
        std::set<std::pair<VertexId, VertexId>> darts;
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (! darts.emplace(walk[i], walk[(i + 1) % walk.size()]).second)
                return false;
        return true;
    }

    /// 2 - V + E - F, which is twice the orientable genus of the embedding.
    /// Zero means spherical. Requires a connected graph.
    inline auto euler_genus(const RotationSystem & r) -> long
    {
        const auto &g = r.graph();
        if (! is_connected(g))
            throw EmbeddingError{"euler_genus requires a connected graph"};
        if (g.empty())
            return 0;
        auto f = static_cast<long>(faces(r).size());
        return 2 - static_cast<long>(g.vertex_count()) + static_cast<long>(g.edge_count()) - f;
    }

    /// Images under `m` of the vertices on `face`, ascending and distinct.
    inline auto face_labels(const RotationSystem & r, const GraphMap & m, const Face & face) -> std::vector<VertexId>
    {
        if (m.domain() != r.graph())
            throw EmbeddingError{"map domain is not the embedded graph"};
        if (! is_face(r, face))
            throw EmbeddingError{"walk is not a face of this rotation system"};
        std::vector<VertexId> labels;
        for (auto v : face)
            labels.push_back(m.assignment()[v]);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    }

    /// Proper 2-colouring of the faces (faces sharing an edge get different
    /// colours), if one exists. Colour of face i is element i.
    inline auto dual_two_coloring(const RotationSystem & r) -> std::optional<std::vector<int>>
    {
        auto fs = faces(r);
        std::map<std::pair<VertexId, VertexId>, std::size_t> owner;
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < fs[i].size() && fs[i].size() > 1; ++j)
                owner[{fs[i][j], fs[i][(j + 1) % fs[i].size()]}] = i;

        std::vector<std::vector<std::size_t>> dual(fs.size());
        for (auto [dart, f] : owner) {
            auto g = owner.at({dart.second, dart.first});
            dual[f].push_back(g);
        }

        std::vector<int> colour(fs.size(), -1);
        for (std::size_t s = 0; s < fs.size(); ++s) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            std::vector<std::size_t> stack{s};
            while (! stack.empty()) {
                auto f = stack.back();
                stack.pop_back();
                for (auto g : dual[f]) {
                    if (colour[g] == -1) {
                        colour[g] = 1 - colour[f];
                        stack.push_back(g);
                    }
                    else if (colour[g] == colour[f])
                        return std::nullopt;
                }
            }
        }
        return colour;
    }
}
