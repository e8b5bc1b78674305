#pragma once

#include <dgraceful/labeling.hpp>

#include <vector>

namespace dgraceful
{
    /// A family of injections V(G) -> Z_v whose di-edge differences cover Z_v
    /// minus the subgroup of order forbidden_order exactly once, and miss the
    /// subgroup entirely. maps[i][x] is the image of vertex x under the i-th map.
    struct DifferenceFamily
    {
        Label modulus;
        Label forbidden_order;
        Graph graph;
        std::vector<std::vector<Label>> maps;
    };

    /// Single-map family in Z_{2d(m+1)} relative to the subgroup of order 2d.
    /// Throws PreconditionFailed unless the labelling is d-graceful.
    auto df_from_labeling(const Labeling & l) -> DifferenceFamily;

    /// n maps in Z_{2dn(m+1)}: the lower part keeps f, the upper part gets
    /// f + (i-1)(d+e) in map i. Throws PreconditionFailed unless the labelling is
    /// a d-graceful alpha-labelling, InvalidParameter if n < 1.
    auto df_from_alpha(const Labeling & l, int n) -> DifferenceFamily;

    struct CoverageReport
    {
        bool ok = false;
        std::vector<Label> uncovered;      // off the subgroup, count 0
        std::vector<Label> overcovered;    // off the subgroup, count > 1
        std::vector<Label> subgroup_hits;  // on the subgroup, count > 0
        std::vector<std::size_t> non_injective_maps;
        bool shape_ok = true;              // modulus, subgroup order and map sizes consistent
        std::size_t difference_count = 0;  // |Delta F|, always 2 e (number of maps) for well-formed input

        explicit operator bool() const { return ok; }
    };

    /// Recomputes Delta F from scratch and checks the exact-cover condition.
    auto verify_df(const DifferenceFamily & df) -> CoverageReport;
}
