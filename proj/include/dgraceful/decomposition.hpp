#pragma once

#include <dgraceful/diff_family.hpp>

#include <cstddef>
#include <vector>

namespace dgraceful
{
    /// K_{p x q} on Z_{pq}; the parts are the cosets of p Z_{pq}, so x and y
    /// share a part iff x = y (mod p).
    struct MultipartiteSpec
    {
        Label parts;
        Label part_size;

        auto modulus() const -> Label { return parts * part_size; }
        auto edge_count() const -> Label { return modulus() * (modulus() - part_size) / 2; }
        auto same_part(Label x, Label y) const -> bool;

        auto operator== (const MultipartiteSpec &) const -> bool = default;
    };

    /// A copy of the graph embedded in Z_{pq}: block[x] is the image of vertex x.
    using Block = std::vector<Label>;

    auto translate(const Block & b, Label by, Label modulus) -> Block;

    struct Decomposition
    {
        MultipartiteSpec spec;
        Graph graph;
        std::vector<Block> base_blocks;
        /// Every translate base + g, g in Z_{pq}, base-major.
        std::vector<Block> blocks;
    };

    /// Rebuilds the full block list from base blocks.
    auto decomposition_from_base_blocks(MultipartiteSpec spec, Graph graph, std::vector<Block> base_blocks)
        -> Decomposition;

    /// Cyclic decomposition of K_{v/t x t} generated by a verified (v, t, G, 1)
    /// difference family. Throws PreconditionFailed if the family does not verify.
    auto expand(const DifferenceFamily & df) -> Decomposition;

    struct VerifyOptions
    {
        /// Above this many vertices the host edge set is not materialized; coverage
        /// is counted from the sorted list of block edges instead.
        Label materialize_cap = 512;
    };

    struct DecompositionReport
    {
        bool ok = false;
        bool materialized = false;
        std::size_t block_count = 0;
        std::size_t host_edges = 0;
        std::size_t block_edges = 0;
        std::size_t uncovered_edges = 0;
        /// Host edges covered more than once, and the total surplus coverage.
        std::size_t overcovered_edges = 0;
        std::size_t excess_coverage = 0;
        std::size_t intra_part_edges = 0;
        std::size_t malformed_blocks = 0;   // wrong length, out of range or not injective
        bool cyclic = false;                // x -> x+1 maps the block multiset to itself
        std::vector<std::pair<Label, Label>> uncovered_sample;

        explicit operator bool() const { return ok; }
    };

    /// Checks that the blocks partition E(K_{p x q}) and are permuted by x -> x+1.
    auto verify_decomposition(const Decomposition & dec, const VerifyOptions & options = { }) -> DecompositionReport;

    struct DecompositionSummary
    {
        Label parts;
        Label part_size;
        std::size_t blocks;
        int edges_per_block;
        std::vector<std::size_t> orbit_lengths;
    };

    auto decomposition_summary(const Decomposition & dec) -> DecompositionSummary;
}
