#pragma once

#include <dgraceful/decomposition.hpp>
#include <dgraceful/search.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace dgraceful
{
    using Json = nlohmann::ordered_json;

    /// {"vertices": n, "edges": [[a,b],...], "family": {"tag": ..., "param": k}}
    /// Edges are written with a < b in lexicographic order.
    auto to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    /// {"graph": ..., "d": d, "m": m, "labels": [...]}, labels by vertex id.
    auto to_json(const Labeling & l) -> Json;
    auto labeling_from_json(const Json & j) -> Labeling;

    auto to_json(const std::vector<Violation> & violations) -> Json;
    auto to_json(const DifferenceSpectrum & s) -> Json;
    auto to_json(const GracefulReport & r) -> Json;
    auto to_json(const RdsReport & r) -> Json;

    /// {"v": v, "forbidden_order": t, "graph": ..., "maps": [[...],...]}
    auto to_json(const DifferenceFamily & df) -> Json;
    auto difference_family_from_json(const Json & j) -> DifferenceFamily;
    auto to_json(const CoverageReport & r) -> Json;

    /// {"spec": {"parts": p, "part_size": q}, "graph": ..., "base_blocks": [...]};
    /// the full block list is rebuilt on load.
    auto to_json(const Decomposition & dec) -> Json;
    auto decomposition_from_json(const Json & j) -> Decomposition;
    auto to_json(const DecompositionReport & r) -> Json;
    auto to_json(const DecompositionSummary & s) -> Json;

    /// Compact form of a range minus some points, e.g. "[1,7]∖{4}".
    auto spectrum_string(int d, int m) -> std::string;

    /// Throws FormatError on unreadable files or malformed JSON.
    auto read_json_file(const std::filesystem::path & path) -> Json;
    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void;
}
