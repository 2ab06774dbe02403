#pragma once

#include <planemu/errors.hpp>
#include <planemu/graph.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace planemu
{
    /// A vertex assignment from `domain` to `codomain`. The assignment is
    /// total and in range; whether it is a homomorphism is checked separately.
    class GraphMap
    {
    public:
        GraphMap() = default;

        GraphMap(Graph domain, Graph codomain, std::vector<VertexId> assignment) :
            _domain(std::move(domain)),
            _codomain(std::move(codomain)),
            _assignment(std::move(assignment))
        {
            if (_assignment.size() != _domain.vertex_count())
                throw MapError{"assignment is not total: " + std::to_string(_assignment.size()) + " images for " +
                    std::to_string(_domain.vertex_count()) + " domain vertices"};
            for (VertexId v = 0; v < _assignment.size(); ++v)
                if (! _codomain.contains(_assignment[v]))
                    throw MapError{"assignment references unknown codomain vertex " + std::to_string(_assignment[v]) +
                        " (image of " + std::to_string(v) + ")"};
        }

        static auto identity(const Graph & g) -> GraphMap
        {
            std::vector<VertexId> a(g.vertex_count());
            for (VertexId v = 0; v < a.size(); ++v)
                a[v] = v;
            return GraphMap{g, g, std::move(a)};
        }

        [[nodiscard]] auto domain() const -> const Graph & { return _domain; }
        [[nodiscard]] auto codomain() const -> const Graph & { return _codomain; }
        [[nodiscard]] auto assignment() const -> const std::vector<VertexId> & { return _assignment; }

        [[nodiscard]] auto operator()(VertexId v) const -> VertexId
        {
            _domain.require(v);
            return _assignment[v];
        }

        friend auto operator==(const GraphMap &, const GraphMap &) -> bool = default;

    private:
        Graph _domain;
        Graph _codomain;
        std::vector<VertexId> _assignment;
    };

    enum class FailureKind
    {
        not_surjective,        ///< some neighbour of f(v) has no preimage among the neighbours of v
        not_injective,         ///< some neighbour of f(v) is hit twice
        not_edge_preserving,   ///< an edge at v maps to a non-edge
        not_vertex_surjective  ///< a codomain vertex has an empty fibre
    };

    inline auto to_string(FailureKind k) -> std::string_view
    {
        switch (k) {
        case FailureKind::not_surjective: return "not-surjective";
        case FailureKind::not_injective: return "not-injective";
        case FailureKind::not_edge_preserving: return "not-edge-preserving";
        case FailureKind::not_vertex_surjective: return "not-vertex-surjective";
        }
        return "?";
    }

    /// A witness that a local condition fails. `at` is the offending domain
    /// vertex (empty for not-vertex-surjective). `detail` holds the codomain
    /// vertices missing or duplicated; for not-edge-preserving it holds the
    /// domain neighbour whose edge is not preserved.
    struct LocalFailure
    {
        FailureKind kind;
        std::optional<VertexId> at;
        std::vector<VertexId> detail;

        friend auto operator==(const LocalFailure &, const LocalFailure &) -> bool = default;
    };

    namespace detail
    {
        /// Multiplicity of each codomain vertex among the images of N(v).
        inline auto neighbour_image_counts(const GraphMap & m, VertexId v) -> std::vector<std::size_t>
        {
            std::vector<std::size_t> counts(m.codomain().vertex_count(), 0);
            for (auto w : m.domain().neighbors(v))
                ++counts[m.assignment()[w]];
            return counts;
        }

        inline auto first_uncovered(const GraphMap & m) -> std::optional<VertexId>
        {
            std::vector<bool> hit(m.codomain().vertex_count(), false);
            for (auto t : m.assignment())
                hit[t] = true;
            for (VertexId t = 0; t < hit.size(); ++t)
                if (! hit[t])
                    return t;
            return std::nullopt;
        }

        inline auto local_homomorphism_failure(const GraphMap & m, VertexId v) -> std::optional<LocalFailure>
        {
            const auto &a = m.assignment();
            for (auto w : m.domain().neighbors(v))
                if (! m.codomain().has_edge(a[v], a[w]))
                    return LocalFailure{FailureKind::not_edge_preserving, v, {w}};
            return std::nullopt;
        }

        inline auto local_surjectivity_failure(const GraphMap & m, VertexId v) -> std::optional<LocalFailure>
        {
            auto counts = neighbour_image_counts(m, v);
            std::vector<VertexId> missing;
            for (auto t : m.codomain().neighbors(m.assignment()[v]))
                if (counts[t] == 0)
                    missing.push_back(t);
            if (! missing.empty())
                return LocalFailure{FailureKind::not_surjective, v, std::move(missing)};
            return std::nullopt;
        }

        inline auto local_injectivity_failure(const GraphMap & m, VertexId v) -> std::optional<LocalFailure>
        {
            auto counts = neighbour_image_counts(m, v);
            for (VertexId t = 0; t < counts.size(); ++t)
                if (counts[t] > 1)
                    return LocalFailure{FailureKind::not_injective, v, {t}};
            return std::nullopt;
        }

        inline void require_homomorphism(const GraphMap & m)
        {
            for (VertexId v = 0; v < m.domain().vertex_count(); ++v)
                if (local_homomorphism_failure(m, v))
                    throw MapError{"precondition violated: map is not a homomorphism at vertex " + std::to_string(v)};
        }
    }

    /// Edge preservation, checked in ascending vertex order. Adjacent vertices
    /// with equal images fail, since the codomain has no loops.
    inline auto verify_homomorphism(const GraphMap & m) -> std::optional<LocalFailure>
    {
        for (VertexId v = 0; v < m.domain().vertex_count(); ++v)
            if (auto f = detail::local_homomorphism_failure(m, v))
                return f;
        return std::nullopt;
    }

    /// Every neighbour of f(v) is the image of some neighbour of v, and f is
    /// onto. Throws MapError if `m` is not a homomorphism.
    inline auto verify_emulator(const GraphMap & m) -> std::optional<LocalFailure>
    {
        detail::require_homomorphism(m);
        for (VertexId v = 0; v < m.domain().vertex_count(); ++v)
            if (auto f = detail::local_surjectivity_failure(m, v))
                return f;
        if (auto t = detail::first_uncovered(m))
            return LocalFailure{FailureKind::not_vertex_surjective, std::nullopt, {*t}};
        return std::nullopt;
    }

    /// Every induced neighbour map is a bijection, and f is onto. Duplicated
    /// images are reported before missing ones.
    inline auto verify_cover(const GraphMap & m) -> std::optional<LocalFailure>
    {
        detail::require_homomorphism(m);
        for (VertexId v = 0; v < m.domain().vertex_count(); ++v) {
            if (auto f = detail::local_injectivity_failure(m, v))
                return f;
            if (auto f = detail::local_surjectivity_failure(m, v))
                return f;
        }
        if (auto t = detail::first_uncovered(m))
            return LocalFailure{FailureKind::not_vertex_surjective, std::nullopt, {*t}};
        return std::nullopt;
    }

    /// Re-evaluates the condition named by `f` against the map data.
    inline auto reproduces(const GraphMap & m, const LocalFailure & f) -> bool
    {
        const auto &a = m.assignment();
        if (f.kind == FailureKind::not_vertex_surjective) {
            if (f.detail.size() != 1 || ! m.codomain().contains(f.detail[0]))
                return false;
            return std::find(a.begin(), a.end(), f.detail[0]) == a.end();
        }
        if (! f.at || ! m.domain().contains(*f.at) || f.detail.empty())
            return false;
        auto v = *f.at;
        switch (f.kind) {
        case FailureKind::not_edge_preserving: {
            auto w = f.detail[0];
            return m.domain().has_edge(v, w) && ! m.codomain().has_edge(a[v], a[w]);
        }
        case FailureKind::not_injective: {
            auto counts = detail::neighbour_image_counts(m, v);
            return f.detail[0] < counts.size() && counts[f.detail[0]] > 1;
        }
        case FailureKind::not_surjective: {
            auto counts = detail::neighbour_image_counts(m, v);
            return std::all_of(f.detail.begin(), f.detail.end(), [&](VertexId t) {
                return t < counts.size() && m.codomain().has_edge(a[v], t) && counts[t] == 0;
            });
        }
        case FailureKind::not_vertex_surjective: break;
        }
        return false;
    }

    enum class MapClass
    {
        cover,
        proper_emulator,
        homomorphism_only,
        invalid
    };

    inline auto to_string(MapClass c) -> std::string_view
    {
        switch (c) {
        case MapClass::cover: return "cover";
        case MapClass::proper_emulator: return "proper-emulator";
        case MapClass::homomorphism_only: return "homomorphism-only";
        case MapClass::invalid: return "invalid";
        }
        return "?";
    }

    /// The class, plus the witness explaining why the map is not in the next
    /// stronger class (absent for covers).
    struct Classification
    {
        MapClass kind;
        std::optional<LocalFailure> witness;
    };

    inline auto classify(const GraphMap & m) -> Classification
    {
        if (auto f = verify_homomorphism(m))
            return {MapClass::invalid, f};
        if (auto f = verify_emulator(m))
            return {MapClass::homomorphism_only, f};
        if (auto f = verify_cover(m))
            return {MapClass::proper_emulator, f};
        return {MapClass::cover, std::nullopt};
    }

    /// Preimage cardinality of every codomain vertex.
    inline auto fiber_sizes(const GraphMap & m) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> sizes(m.codomain().vertex_count(), 0);
        for (auto t : m.assignment())
            ++sizes[t];
        return sizes;
    }

    /// outer ∘ inner. Requires inner.codomain() == outer.domain().
    inline auto compose(const GraphMap & outer, const GraphMap & inner) -> GraphMap
    {
        if (inner.codomain() != outer.domain())
            throw MapError{"cannot compose: intermediate graphs differ"};
        std::vector<VertexId> a(inner.domain().vertex_count());
        for (VertexId v = 0; v < a.size(); ++v)
            a[v] = outer.assignment()[inner.assignment()[v]];
        return GraphMap{inner.domain(), outer.codomain(), std::move(a)};
    }
}
