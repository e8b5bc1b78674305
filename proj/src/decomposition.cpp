#include <dgraceful/decomposition.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <set>

namespace dgraceful
{
    namespace
    {
        auto modulo(Label a, Label n) -> Label
        {
            auto r = a % n;
            return r < 0 ? r + n : r;
        }

        using CanonicalBlock = std::vector<std::pair<Label, Label>>;

        // Embedded copies are compared by their edge sets, so two vertex orders
        // of the same subgraph are the same block.
        auto canonical(const Graph & g, const Block & b, Label modulus) -> CanonicalBlock
        {
            CanonicalBlock result;
            result.reserve(g.edges().size());
            for (auto [x, y] : g.edges()) {
                auto a = modulo(b.at(x), modulus), c = modulo(b.at(y), modulus);
                result.emplace_back(std::min(a, c), std::max(a, c));
            }
            std::sort(result.begin(), result.end());
            return result;
        }

        auto well_formed(const Graph & g, const Block & b, Label modulus) -> bool
        {
            if (static_cast<int>(b.size()) != g.vertex_count())
                return false;
            std::set<Label> seen;
            for (auto x : b)
                if (x < 0 || x >= modulus || ! seen.insert(x).second)
                    return false;
            return true;
        }
    }

    auto MultipartiteSpec::same_part(Label x, Label y) const -> bool
    {
        return modulo(x - y, parts) == 0;
    }

    auto translate(const Block & b, Label by, Label modulus) -> Block
    {
        Block result;
        result.reserve(b.size());
        for (auto x : b)
            result.push_back(modulo(x + by, modulus));
        return result;
    }

    auto decomposition_from_base_blocks(MultipartiteSpec spec, Graph graph, std::vector<Block> base_blocks)
        -> Decomposition
    {
        if (spec.parts < 1 || spec.part_size < 1)
            throw InvalidParameter("multipartite spec needs positive part count and size");

        const auto v = spec.modulus();
        for (auto & base : base_blocks) {
            if (static_cast<int>(base.size()) != graph.vertex_count())
                throw InvalidParameter("base block length does not match the graph order");
            for (auto & x : base)
                x = modulo(x, v);
        }

        std::vector<Block> blocks;
        blocks.reserve(base_blocks.size() * v);
        for (auto & base : base_blocks)
            for (Label g = 0 ; g < v ; ++g)
                blocks.push_back(translate(base, g, v));

        return Decomposition{ spec, std::move(graph), std::move(base_blocks), std::move(blocks) };
    }

    auto expand(const DifferenceFamily & df) -> Decomposition
    {
        if (! verify_df(df))
            throw PreconditionFailed("expand needs a verified difference family");

        MultipartiteSpec spec{ df.modulus / df.forbidden_order, df.forbidden_order };
        return decomposition_from_base_blocks(spec, df.graph, df.maps);
    }

    auto verify_decomposition(const Decomposition & dec, const VerifyOptions & options) -> DecompositionReport
    {
        DecompositionReport report;
        const auto & spec = dec.spec;
        const auto v = spec.modulus();
        report.block_count = dec.blocks.size();
        report.host_edges = static_cast<std::size_t>(spec.edge_count());
        report.materialized = v <= options.materialize_cap;

        std::vector<std::uint32_t> counts;
        std::vector<std::uint64_t> keys;
        if (report.materialized)
            counts.assign(static_cast<std::size_t>(v * v), 0);

        for (auto & b : dec.blocks) {
            if (! well_formed(dec.graph, b, v)) {
                ++report.malformed_blocks;
                continue;
            }
            for (auto [x, y] : dec.graph.edges()) {
                auto a = std::min(b[x], b[y]), c = std::max(b[x], b[y]);
                ++report.block_edges;
                if (spec.same_part(a, c)) {
                    ++report.intra_part_edges;
                    continue;
                }
                auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(v) + static_cast<std::uint64_t>(c);
                if (report.materialized)
                    ++counts[key];
                else
                    keys.push_back(key);
            }
        }

        if (report.materialized) {
            for (Label a = 0 ; a < v ; ++a)
                for (Label c = a + 1 ; c < v ; ++c) {
                    if (spec.same_part(a, c))
                        continue;
                    auto n = counts[a * v + c];
                    if (n == 0) {
                        ++report.uncovered_edges;
                        if (report.uncovered_sample.size() < 64)
                            report.uncovered_sample.emplace_back(a, c);
                    }
                    else if (n > 1) {
                        ++report.overcovered_edges;
                        report.excess_coverage += n - 1;
                    }
                }
        }
        else {
            std::sort(keys.begin(), keys.end());
            std::size_t distinct = 0;
            for (std::size_t i = 0 ; i < keys.size() ; ) {
                auto j = i;
                while (j < keys.size() && keys[j] == keys[i])
                    ++j;
                ++distinct;
                if (j - i > 1) {
                    ++report.overcovered_edges;
                    report.excess_coverage += j - i - 1;
                }
                i = j;
            }
            report.uncovered_edges = report.host_edges - distinct;
        }

        std::vector<CanonicalBlock> here, shifted;
        here.reserve(dec.blocks.size());
        shifted.reserve(dec.blocks.size());
        for (auto & b : dec.blocks) {
            if (static_cast<int>(b.size()) != dec.graph.vertex_count())
                continue;
            here.push_back(canonical(dec.graph, b, v));
            shifted.push_back(canonical(dec.graph, translate(b, 1, v), v));
        }
        std::sort(here.begin(), here.end());
        std::sort(shifted.begin(), shifted.end());
        report.cyclic = here == shifted;

        report.ok = report.malformed_blocks == 0 && report.uncovered_edges == 0 && report.overcovered_edges == 0
            && report.intra_part_edges == 0 && report.cyclic;
        return report;
    }

    auto decomposition_summary(const Decomposition & dec) -> DecompositionSummary
    {
        const auto v = dec.spec.modulus();
        DecompositionSummary summary{ dec.spec.parts, dec.spec.part_size, dec.blocks.size(), dec.graph.size(), { } };

        std::set<CanonicalBlock> seen;
        for (auto & b : dec.blocks) {
            auto start = canonical(dec.graph, b, v);
            if (seen.contains(start))
                continue;
            std::size_t length = 0;
            auto current = b;
            do {
                seen.insert(canonical(dec.graph, current, v));
                current = translate(current, 1, v);
                ++length;
            } while (canonical(dec.graph, current, v) != start);
            summary.orbit_lengths.push_back(length);
        }
        std::sort(summary.orbit_lengths.begin(), summary.orbit_lengths.end());
        return summary;
    }
}
