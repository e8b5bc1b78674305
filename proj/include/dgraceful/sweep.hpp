#pragma once

#include <dgraceful/constructions.hpp>
#include <dgraceful/decomposition.hpp>

#include <string>
#include <vector>

namespace dgraceful
{
    struct SweepBounds
    {
        int max_e = 60;              // paths and stars, every divisor d
        int max_k_cycle4k = 25;      // C_4k, d = 2 and d = 4
        int max_k_cycle2k_odd = 49;  // C_2k, odd k >= 3
        int max_k_ladder = 30;       // L_2k, even k
        /// Labellings with 2d(m+1) above this skip the difference family stage.
        Label df_max_v = 200;
        std::vector<int> n_values{ 1, 2 };
        VerifyOptions verify;
    };

    /// Every construction request the bounds cover, in a fixed order.
    auto sweep_requests(const SweepBounds & bounds) -> std::vector<ConstructionRequest>;

    /// One labelling pushed through difference family -> expansion -> verification.
    struct PipelineCheck
    {
        int n = 1;
        Label modulus = 0;
        bool df_ok = false;
        bool decomposition_ok = false;
        bool cyclic = false;
        std::size_t blocks = 0;
        std::size_t expected_blocks = 0;        // modulus * n
        std::size_t covered_edges = 0;          // blocks * e
        std::size_t expected_edges = 0;         // |E(K_{(m+1) x 2dn})|
        std::string error;

        auto ok() const -> bool
        {
            return error.empty() && df_ok && decomposition_ok && cyclic && blocks == expected_blocks
                && covered_edges == expected_edges;
        }
    };

    /// n = 1 uses the labelling directly; n > 1 needs an alpha-labelling.
    auto check_pipeline(const Labeling & l, int n, const VerifyOptions & options = { }) -> PipelineCheck;

    struct SweepRow
    {
        ConstructionRequest request;
        int m = 0;
        std::string error;
        bool graceful = false;
        bool alpha_claimed = false;
        bool alpha = false;
        std::vector<PipelineCheck> pipeline;

        auto ok() const -> bool;
    };

    struct SweepReport
    {
        std::vector<SweepRow> rows;
        std::size_t failures = 0;
        std::size_t pipeline_checks = 0;

        auto ok() const -> bool { return failures == 0; }
    };

    /// Rows come back in sweep_requests order whatever the thread count.
    auto run_sweep(const SweepBounds & bounds, unsigned threads = 1) -> SweepReport;
}
