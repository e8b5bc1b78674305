#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgraceful
{
    using VertexId = int;

    /// Undirected edge, always stored with first < second.
    using Edge = std::pair<VertexId, VertexId>;

    enum class Family
    {
        Path,
        Star,
        Cycle,
        Ladder,
        Complete,
        Custom
    };

    auto family_name(Family f) -> std::string;
    auto family_from_name(const std::string & name) -> std::optional<Family>;

    struct FamilyTag
    {
        Family family;
        int param;

        auto operator== (const FamilyTag &) const -> bool = default;
    };

    /// Simple undirected graph on vertices 0 .. n-1. Immutable after construction.
    class Graph
    {
        public:
            /// Throws InvalidParameter on self-loops, duplicate edges or bad endpoints.
            Graph(int vertex_count, std::vector<Edge> edges, std::optional<FamilyTag> family = std::nullopt);

            auto vertex_count() const -> int { return _vertex_count; }

            /// The size e, i.e. the number of edges.
            auto size() const -> int { return static_cast<int>(_edges.size()); }

            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto neighbours(VertexId v) const -> const std::vector<VertexId> & { return _adjacency.at(v); }
            auto degree(VertexId v) const -> int { return static_cast<int>(_adjacency.at(v).size()); }
            auto adjacent(VertexId a, VertexId b) const -> bool;
            auto family() const -> const std::optional<FamilyTag> & { return _family; }

            auto connected() const -> bool;
            auto complete() const -> bool;

            auto operator== (const Graph & other) const -> bool;

        private:
            int _vertex_count;
            std::vector<Edge> _edges;
            std::vector<std::vector<VertexId>> _adjacency;
            std::optional<FamilyTag> _family;
    };

    // Family builders. The usual 1-based vertex names x_1, x_2, ... map to ids
    // 0, 1, ..., i.e. x_t has id t - 1.

    /// P_{e+1}: x_1 ~ x_2 ~ ... ~ x_{e+1}.
    auto build_path(int e) -> Graph;

    /// Centre has id 0, external vertices 1 .. e.
    auto build_star(int e) -> Graph;

    /// C_k with edges {t, t+1 mod k}.
    auto build_cycle(int k) -> Graph;

    /// L_{2k} = P_2 x P_k. Vertex (i, j), i in {0,1}, j in [0, k-1], has id i*k + j.
    auto build_ladder(int k) -> Graph;
    auto ladder_vertex(int k, int i, int j) -> VertexId;

    auto build_complete(int v) -> Graph;

    struct Bipartition
    {
        std::vector<VertexId> part_a;
        std::vector<VertexId> part_b;
    };

    /// Two-colouring with vertex 0 in part_a, or nullopt if there is an odd
    /// cycle. Throws PreconditionFailed for disconnected graphs.
    auto bipartition(const Graph & g) -> std::optional<Bipartition>;
}
