#include <dgraceful/sweep.hpp>
#include <dgraceful/errors.hpp>

#include <atomic>
#include <thread>

namespace dgraceful
{
    auto sweep_requests(const SweepBounds & bounds) -> std::vector<ConstructionRequest>
    {
        std::vector<ConstructionRequest> result;
        for (int e = 1 ; e <= bounds.max_e ; ++e)
            for (int d : divisors(e))
                result.push_back({ ConstructionFamily::Path, e, d });
        for (int e = 1 ; e <= bounds.max_e ; ++e)
            for (int d : divisors(e))
                result.push_back({ ConstructionFamily::Star, e, d });
        for (int k = 1 ; k <= bounds.max_k_cycle4k ; ++k) {
            result.push_back({ ConstructionFamily::Cycle4kD2, k, 2 });
            result.push_back({ ConstructionFamily::Cycle4kD4, k, 4 });
        }
        for (int k = 3 ; k <= bounds.max_k_cycle2k_odd ; k += 2)
            result.push_back({ ConstructionFamily::Cycle2kOddD2, k, 2 });
        for (int k = 2 ; k <= bounds.max_k_ladder ; k += 2)
            result.push_back({ ConstructionFamily::LadderD2, k, 2 });
        return result;
    }

    auto check_pipeline(const Labeling & l, int n, const VerifyOptions & options) -> PipelineCheck
    {
        PipelineCheck check;
        check.n = n;
        try {
            auto df = n == 1 ? df_from_labeling(l) : df_from_alpha(l, n);
            check.modulus = df.modulus;
            check.df_ok = static_cast<bool>(verify_df(df));
            auto dec = expand(df);
            auto report = verify_decomposition(dec, options);

            const MultipartiteSpec host{ l.m + 1, 2 * static_cast<Label>(l.d) * n };
            check.decomposition_ok = report.ok && dec.spec == host;
            check.cyclic = report.cyclic;
            check.blocks = dec.blocks.size();
            check.expected_blocks = static_cast<std::size_t>(df.modulus) * df.maps.size();
            check.covered_edges = check.blocks * static_cast<std::size_t>(l.graph.size());
            check.expected_edges = static_cast<std::size_t>(host.edge_count());
            if (df.maps.size() != static_cast<std::size_t>(n))
                check.error = "expected " + std::to_string(n) + " maps";
        }
        catch (const std::exception & e) {
            check.error = e.what();
        }
        return check;
    }

    auto SweepRow::ok() const -> bool
    {
        if (! error.empty() || ! graceful || (alpha_claimed && ! alpha))
            return false;
        for (auto & p : pipeline)
            if (! p.ok())
                return false;
        return true;
    }

    namespace
    {
        auto sweep_one(const ConstructionRequest & req, const SweepBounds & bounds) -> SweepRow
        {
            SweepRow row;
            row.request = req;
            row.alpha_claimed = claims_alpha(req.family);
            try {
                auto l = construct(req);
                row.m = l.m;
                row.graceful = static_cast<bool>(verify_d_graceful(l));
                row.alpha = verify_alpha(l);
                if (2 * static_cast<Label>(l.d) * (l.m + 1) <= bounds.df_max_v)
                    for (int n : bounds.n_values)
                        if (n == 1 || row.alpha)
                            row.pipeline.push_back(check_pipeline(l, n, bounds.verify));
            }
            catch (const std::exception & e) {
                row.error = e.what();
            }
            return row;
        }
    }

    auto run_sweep(const SweepBounds & bounds, unsigned threads) -> SweepReport
    {
        auto requests = sweep_requests(bounds);
        SweepReport report;
        report.rows.resize(requests.size());

        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i ; (i = next++) < requests.size() ; )
                report.rows[i] = sweep_one(requests[i], bounds);
        };
        if (threads <= 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (unsigned t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        for (auto & row : report.rows) {
            report.pipeline_checks += row.pipeline.size();
            if (! row.ok())
                ++report.failures;
        }
        return report;
    }
}
