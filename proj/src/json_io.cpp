#include <dgraceful/json_io.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dgraceful
{
    namespace
    {
        template <typename T>
        auto field(const Json & j, const char * key) -> T
        {
            if (! j.is_object() || ! j.contains(key))
                throw FormatError(std::string("missing field \"") + key + "\"");
            try {
                return j.at(key).get<T>();
            }
            catch (const nlohmann::json::exception & e) {
                throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
            }
        }

        auto pairs_to_json(const std::vector<std::pair<Label, Label>> & pairs) -> Json
        {
            auto result = Json::array();
            for (auto [a, b] : pairs)
                result.push_back({ a, b });
            return result;
        }
    }

    auto to_json(const Graph & g) -> Json
    {
        auto edges = g.edges();
        std::sort(edges.begin(), edges.end());
        Json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = Json::array();
        for (auto [a, b] : edges)
            j["edges"].push_back({ a, b });
        if (g.family())
            j["family"] = { { "tag", family_name(g.family()->family) }, { "param", g.family()->param } };
        else
            j["family"] = { { "tag", "Custom" }, { "param", nullptr } };
        return j;
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        auto n = field<int>(j, "vertices");
        auto raw = field<std::vector<std::vector<int>>>(j, "edges");
        std::vector<Edge> edges;
        for (auto & e : raw) {
            if (e.size() != 2)
                throw FormatError("edges must be pairs");
            edges.emplace_back(e[0], e[1]);
        }

        std::optional<FamilyTag> tag;
        if (j.contains("family") && j["family"].is_object()) {
            auto name = field<std::string>(j["family"], "tag");
            auto family = family_from_name(name);
            if (! family)
                throw FormatError("unknown graph family \"" + name + "\"");
            if (*family != Family::Custom)
                tag = FamilyTag{ *family, field<int>(j["family"], "param") };
        }

        try {
            return Graph(n, std::move(edges), tag);
        }
        catch (const InvalidParameter & e) {
            throw FormatError(std::string("invalid graph: ") + e.what());
        }
    }

    auto to_json(const Labeling & l) -> Json
    {
        return Json{ { "graph", to_json(l.graph) }, { "d", l.d }, { "m", l.m }, { "labels", l.labels } };
    }

    auto labeling_from_json(const Json & j) -> Labeling
    {
        return Labeling{ graph_from_json(field<Json>(j, "graph")), field<std::vector<Label>>(j, "labels"),
            field<int>(j, "d"), field<int>(j, "m") };
    }

    auto to_json(const std::vector<Violation> & violations) -> Json
    {
        auto result = Json::array();
        for (auto & v : violations)
            result.push_back({ { "kind", violation_kind_name(v.kind) }, { "detail", v.detail } });
        return result;
    }

    auto to_json(const DifferenceSpectrum & s) -> Json
    {
        auto realized = s.realized;
        std::sort(realized.begin(), realized.end());
        return Json{ { "realized", realized }, { "required", s.required } };
    }

    auto to_json(const GracefulReport & r) -> Json
    {
        return Json{ { "valid", r.ok }, { "spectrum", to_json(r.spectrum) }, { "violations", to_json(r.violations) } };
    }

    auto to_json(const RdsReport & r) -> Json
    {
        return Json{ { "ok", r.ok }, { "group_order", r.group_order }, { "subgroup_order", r.subgroup_order },
            { "distinct", r.distinct }, { "uncovered", r.uncovered }, { "overcovered", r.overcovered },
            { "subgroup_hits", r.subgroup_hits } };
    }

    auto to_json(const DifferenceFamily & df) -> Json
    {
        return Json{ { "v", df.modulus }, { "forbidden_order", df.forbidden_order }, { "graph", to_json(df.graph) },
            { "maps", df.maps } };
    }

    auto difference_family_from_json(const Json & j) -> DifferenceFamily
    {
        return DifferenceFamily{ field<Label>(j, "v"), field<Label>(j, "forbidden_order"),
            graph_from_json(field<Json>(j, "graph")), field<std::vector<std::vector<Label>>>(j, "maps") };
    }

    auto to_json(const CoverageReport & r) -> Json
    {
        return Json{ { "ok", r.ok }, { "shape_ok", r.shape_ok }, { "difference_count", r.difference_count },
            { "uncovered", r.uncovered }, { "overcovered", r.overcovered }, { "subgroup_hits", r.subgroup_hits },
            { "non_injective_maps", r.non_injective_maps } };
    }

    auto to_json(const Decomposition & dec) -> Json
    {
        return Json{ { "spec", { { "parts", dec.spec.parts }, { "part_size", dec.spec.part_size } } },
            { "graph", to_json(dec.graph) }, { "base_blocks", dec.base_blocks } };
    }

    auto decomposition_from_json(const Json & j) -> Decomposition
    {
        auto spec = field<Json>(j, "spec");
        try {
            return decomposition_from_base_blocks(MultipartiteSpec{ field<Label>(spec, "parts"), field<Label>(spec, "part_size") },
                    graph_from_json(field<Json>(j, "graph")), field<std::vector<Block>>(j, "base_blocks"));
        }
        catch (const InvalidParameter & e) {
            throw FormatError(std::string("invalid decomposition: ") + e.what());
        }
    }

    auto to_json(const DecompositionReport & r) -> Json
    {
        return Json{ { "ok", r.ok }, { "materialized", r.materialized }, { "block_count", r.block_count },
            { "host_edges", r.host_edges }, { "block_edges", r.block_edges },
            { "uncovered_edges", r.uncovered_edges }, { "overcovered_edges", r.overcovered_edges },
            { "excess_coverage", r.excess_coverage }, { "intra_part_edges", r.intra_part_edges },
            { "malformed_blocks", r.malformed_blocks }, { "cyclic", r.cyclic },
            { "uncovered_sample", pairs_to_json(r.uncovered_sample) } };
    }

    auto to_json(const DecompositionSummary & s) -> Json
    {
        return Json{ { "p", s.parts }, { "q", s.part_size }, { "blocks", s.blocks },
            { "edges_per_block", s.edges_per_block }, { "orbit_lengths", s.orbit_lengths } };
    }

    auto spectrum_string(int d, int m) -> std::string
    {
        std::ostringstream out;
        out << "[1," << max_label(d, m) << "]";
        auto gone = forbidden_gaps(d, m);
        if (! gone.empty()) {
            out << "∖{";
            for (std::size_t i = 0 ; i < gone.size() ; ++i)
                out << (i ? "," : "") << gone[i];
            out << "}";
        }
        return out.str();
    }

    auto read_json_file(const std::filesystem::path & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open " + path.string());
        try {
            return Json::parse(in);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw FormatError(path.string() + ": " + e.what());
        }
    }

    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw FormatError("cannot write " + path.string());
        out << text;
    }
}
