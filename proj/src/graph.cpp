#include <dgraceful/graph.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <queue>
#include <set>

namespace dgraceful
{
    namespace
    {
        auto normalise(Edge e) -> Edge
        {
            if (e.first > e.second)
                std::swap(e.first, e.second);
            return e;
        }

        auto require_at_least(const char * what, int value, int minimum) -> void
        {
            if (value < minimum)
                throw InvalidParameter(std::string(what) + " must be at least " + std::to_string(minimum)
                        + ", got " + std::to_string(value));
        }
    }

    auto family_name(Family f) -> std::string
    {
        switch (f) {
            case Family::Path:     return "Path";
            case Family::Star:     return "Star";
            case Family::Cycle:    return "Cycle";
            case Family::Ladder:   return "Ladder";
            case Family::Complete: return "Complete";
            case Family::Custom:   return "Custom";
        }
        return "Custom";
    }

    auto family_from_name(const std::string & name) -> std::optional<Family>
    {
        for (auto f : { Family::Path, Family::Star, Family::Cycle, Family::Ladder, Family::Complete, Family::Custom })
            if (family_name(f) == name)
                return f;
        return std::nullopt;
    }

    Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<FamilyTag> family) :
        _vertex_count(vertex_count),
        _adjacency(vertex_count < 0 ? 0 : vertex_count),
        _family(family)
    {
        if (vertex_count < 1)
            throw InvalidParameter("graph needs at least one vertex");

        std::set<Edge> seen;
        _edges.reserve(edges.size());
        for (auto e : edges) {
            if (e.first < 0 || e.second < 0 || e.first >= vertex_count || e.second >= vertex_count)
                throw InvalidParameter("edge endpoint out of range: [" + std::to_string(e.first) + ","
                        + std::to_string(e.second) + "]");
            if (e.first == e.second)
                throw InvalidParameter("self-loop at vertex " + std::to_string(e.first));
            e = normalise(e);
            if (! seen.insert(e).second)
                throw InvalidParameter("duplicate edge [" + std::to_string(e.first) + ","
                        + std::to_string(e.second) + "]");
            _edges.push_back(e);
            _adjacency[e.first].push_back(e.second);
            _adjacency[e.second].push_back(e.first);
        }
    }

    auto Graph::adjacent(VertexId a, VertexId b) const -> bool
    {
        const auto & n = _adjacency.at(a);
        return std::find(n.begin(), n.end(), b) != n.end();
    }

    auto Graph::connected() const -> bool
    {
        std::vector<char> seen(_vertex_count, 0);
        std::queue<VertexId> todo;
        todo.push(0);
        seen[0] = 1;
        int reached = 1;
        while (! todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : _adjacency[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    todo.push(w);
                }
        }
        return reached == _vertex_count;
    }

    auto Graph::complete() const -> bool
    {
        return 2 * static_cast<long long>(_edges.size())
            == static_cast<long long>(_vertex_count) * (_vertex_count - 1);
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        if (_vertex_count != other._vertex_count || _family != other._family)
            return false;
        auto a = _edges, b = other._edges;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    auto build_path(int e) -> Graph
    {
        require_at_least("path size e", e, 1);
        std::vector<Edge> edges;
        for (int t = 0 ; t < e ; ++t)
            edges.emplace_back(t, t + 1);
        return Graph(e + 1, std::move(edges), FamilyTag{ Family::Path, e });
    }

    auto build_star(int e) -> Graph
    {
        require_at_least("star size e", e, 1);
        std::vector<Edge> edges;
        for (int t = 1 ; t <= e ; ++t)
            edges.emplace_back(0, t);
        return Graph(e + 1, std::move(edges), FamilyTag{ Family::Star, e });
    }

    auto build_cycle(int k) -> Graph
    {
        require_at_least("cycle length k", k, 3);
        std::vector<Edge> edges;
        for (int t = 0 ; t < k ; ++t)
            edges.emplace_back(t, (t + 1) % k);
        return Graph(k, std::move(edges), FamilyTag{ Family::Cycle, k });
    }

    auto ladder_vertex(int k, int i, int j) -> VertexId
    {
        return i * k + j;
    }

    auto build_ladder(int k) -> Graph
    {
        require_at_least("ladder length k", k, 2);
        std::vector<Edge> edges;
        for (int j = 0 ; j < k ; ++j)
            edges.emplace_back(ladder_vertex(k, 0, j), ladder_vertex(k, 1, j));
        for (int i = 0 ; i < 2 ; ++i)
            for (int j = 0 ; j + 1 < k ; ++j)
                edges.emplace_back(ladder_vertex(k, i, j), ladder_vertex(k, i, j + 1));
        return Graph(2 * k, std::move(edges), FamilyTag{ Family::Ladder, k });
    }

    auto build_complete(int v) -> Graph
    {
        require_at_least("complete graph order v", v, 2);
        std::vector<Edge> edges;
        for (int a = 0 ; a < v ; ++a)
            for (int b = a + 1 ; b < v ; ++b)
                edges.emplace_back(a, b);
        return Graph(v, std::move(edges), FamilyTag{ Family::Complete, v });
    }

    auto bipartition(const Graph & g) -> std::optional<Bipartition>
    {
        if (! g.connected())
            throw PreconditionFailed("bipartition requires a connected graph");

        std::vector<int> colour(g.vertex_count(), -1);
        std::queue<VertexId> todo;
        colour[0] = 0;
        todo.push(0);
        while (! todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : g.neighbours(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    todo.push(w);
                }
                else if (colour[w] == colour[v])
                    return std::nullopt;
            }
        }

        Bipartition result;
        for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
            (colour[v] == 0 ? result.part_a : result.part_b).push_back(v);
        return result;
    }
}
