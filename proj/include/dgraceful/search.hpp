#pragma once

#include <dgraceful/labeling.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dgraceful
{
    struct SearchConfig
    {
        Graph graph;
        int d;
        bool require_alpha = false;
        std::optional<std::size_t> max_solutions = std::nullopt;
        /// Keep one labelling per complement pair {f, d(m+1)-1-f}: the
        /// lexicographically smaller label vector.
        bool symmetry_reduction = false;
        std::uint64_t node_budget = 1'000'000'000;
        /// Workers over the first vertex's label choices. Output does not depend on it.
        unsigned threads = 1;
    };

    struct SearchResult
    {
        Graph graph;
        int d;
        int m;
        /// Label vectors indexed by vertex id, sorted lexicographically.
        std::vector<std::vector<Label>> solutions;
        std::uint64_t nodes_explored = 0;
        /// The whole tree was explored: no budget overrun, no early stop at max_solutions.
        bool complete = false;

        auto labeling(std::size_t i) const -> Labeling;
    };

    /// Depth-first enumeration of every d-graceful labelling (alpha-labelling if
    /// required). Throws NotAdmissible if d does not divide e.
    auto search_all(const SearchConfig & cfg) -> SearchResult;

    /// Stops at the first solution. False if none exists or the budget ran out first.
    auto exists(const SearchConfig & cfg) -> bool;

    struct CrossCheckBounds
    {
        int max_e = 10;
        /// Stars have 2 e! labellings for d = 1, so they get a tighter bound.
        int max_star_e = 8;
        unsigned threads = 1;
    };

    struct CrossCheckRow
    {
        std::string family;
        int param;
        int d;
        std::size_t solutions = 0;
        bool complete = false;
        bool contains_construction = false;
        bool contains_construction_alpha = true;  // only checked for alpha-claiming families
        bool complement_closed = false;
        bool all_verify = false;

        auto ok() const -> bool
        {
            return complete && contains_construction && contains_construction_alpha && complement_closed && all_verify;
        }
    };

    struct CrossCheckReport
    {
        bool ok = true;
        std::vector<CrossCheckRow> rows;
    };

    /// Runs the exhaustive search on every small construction instance and
    /// checks that the constructed labelling is among the solutions.
    auto cross_check(const CrossCheckBounds & bounds = { }) -> CrossCheckReport;
}
