#include <dgraceful/search.hpp>
#include <dgraceful/constructions.hpp>
#include <dgraceful/errors.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dgraceful
{
    namespace
    {
        /// Everything one top-level branch produced, with the branch-local node
        /// count at which each solution was found so a sequential run can be
        /// replayed exactly from independently computed branches.
        struct BranchOutcome
        {
            std::vector<std::vector<Label>> solutions;
            std::vector<std::uint64_t> found_at;
            std::uint64_t nodes = 0;
        };

        class Engine
        {
            public:
                explicit Engine(const SearchConfig & cfg) :
                    _cfg(cfg),
                    _n(cfg.graph.vertex_count()),
                    _d(cfg.d),
                    _m(cfg.graph.size() / cfg.d),
                    _top(max_label(_d, _m))
                {
                    _order.resize(_n);
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(), [&] (VertexId a, VertexId b) {
                            return cfg.graph.degree(a) > cfg.graph.degree(b); });

                    std::vector<int> position(_n);
                    for (int i = 0 ; i < _n ; ++i)
                        position[_order[i]] = i;
                    _earlier.resize(_n);
                    for (int i = 0 ; i < _n ; ++i)
                        for (auto w : cfg.graph.neighbours(_order[i]))
                            if (position[w] < i)
                                _earlier[i].push_back(w);

                    _forbidden.assign(_top + 1, 0);
                    for (auto g : forbidden_gaps(_d, _m))
                        _forbidden[g] = 1;
                }

                auto top() const -> Label { return _top; }
                auto m() const -> int { return _m; }

                auto first_choices() const -> std::vector<Label>
                {
                    std::vector<Label> result;
                    for (Label l = 0 ; l <= _top ; ++l)
                        if (allowed_for(_order[0], l))
                            result.push_back(l);
                    return result;
                }

                auto run_branch(Label first, std::uint64_t budget, std::optional<std::size_t> cap) const -> BranchOutcome
                {
                    State s{ std::vector<Label>(_n, -1), std::vector<char>(_top + 1, 0), _forbidden,
                        budget, cap, { } };
                    s.labels[_order[0]] = first;
                    s.label_used[first] = 1;
                    descend(s, 1);
                    return std::move(s.out);
                }

            private:
                struct State
                {
                    std::vector<Label> labels;
                    std::vector<char> label_used;
                    std::vector<char> gap_used;   // forbidden gaps start out used
                    std::uint64_t budget;
                    std::optional<std::size_t> cap;
                    BranchOutcome out;
                };

                auto allowed_for(VertexId v, Label l) const -> bool
                {
                    // symmetry: f(0) <= top - f(0); ties are settled at the leaf
                    return ! (_cfg.symmetry_reduction && v == 0 && 2 * l > _top);
                }

                /// Returns false when the branch must stop (budget or cap).
                auto descend(State & s, int depth) const -> bool
                {
                    if (++s.out.nodes > s.budget)
                        return false;

                    if (depth == _n)
                        return accept(s);

                    const auto v = _order[depth];
                    const auto & back = _earlier[depth];
                    std::vector<Label> gaps;
                    gaps.reserve(back.size());

                    for (Label l = 0 ; l <= _top ; ++l) {
                        if (s.label_used[l] || ! allowed_for(v, l))
                            continue;

                        gaps.clear();
                        bool fits = true;
                        for (auto w : back) {
                            auto g = l > s.labels[w] ? l - s.labels[w] : s.labels[w] - l;
                            if (s.gap_used[g]) {
                                fits = false;
                                break;
                            }
                            s.gap_used[g] = 1;
                            gaps.push_back(g);
                        }

                        if (fits) {
                            s.labels[v] = l;
                            s.label_used[l] = 1;
                            bool go_on = descend(s, depth + 1);
                            s.label_used[l] = 0;
                            s.labels[v] = -1;
                            if (! go_on) {
                                for (auto g : gaps)
                                    s.gap_used[g] = 0;
                                return false;
                            }
                        }
                        for (auto g : gaps)
                            s.gap_used[g] = 0;
                    }
                    return true;
                }

                auto accept(State & s) const -> bool
                {
                    if (_cfg.symmetry_reduction) {
                        std::vector<Label> mirrored(s.labels);
                        for (auto & f : mirrored)
                            f = _top - f;
                        if (mirrored < s.labels)
                            return true;
                    }

                    auto l = Labeling{ _cfg.graph, s.labels, _d, _m };
                    if (_cfg.require_alpha && ! verify_alpha(l))
                        return true;
                    if (! verify_d_graceful(l))
                        throw std::logic_error("search produced a labelling the verifier rejects");

                    s.out.solutions.push_back(s.labels);
                    s.out.found_at.push_back(s.out.nodes);
                    return ! (s.cap && s.out.solutions.size() >= *s.cap);
                }

                const SearchConfig & _cfg;
                int _n, _d, _m;
                Label _top;
                std::vector<VertexId> _order;
                std::vector<std::vector<VertexId>> _earlier;
                std::vector<char> _forbidden;
        };
    }

    auto SearchResult::labeling(std::size_t i) const -> Labeling
    {
        return Labeling{ graph, solutions.at(i), d, m };
    }

    auto search_all(const SearchConfig & cfg) -> SearchResult
    {
        if (cfg.d < 1 || cfg.graph.size() % cfg.d != 0)
            throw NotAdmissible("d = " + std::to_string(cfg.d) + " does not divide e = "
                    + std::to_string(cfg.graph.size()));
        if (cfg.require_alpha && ! bipartition(cfg.graph))
            throw PreconditionFailed("alpha search needs a bipartite graph");

        Engine engine(cfg);
        SearchResult result{ cfg.graph, cfg.d, engine.m(), { }, 0, false };

        // the root is the first node
        if (cfg.node_budget < 1 || (cfg.max_solutions && *cfg.max_solutions == 0)) {
            result.nodes_explored = std::min<std::uint64_t>(cfg.node_budget, 1);
            return result;
        }

        auto choices = engine.first_choices();
        std::vector<BranchOutcome> outcomes(choices.size());
        std::uint64_t used = 1;
        std::optional<std::size_t> remaining_cap = cfg.max_solutions;
        bool complete = true;

        // Replays the sequential search: branch b is given whatever budget and
        // solution allowance the branches before it left over.
        auto merge = [&] (std::size_t b) -> bool {
            auto & o = outcomes[b];
            const auto remaining = cfg.node_budget - used;
            std::size_t take = 0;
            while (take < o.solutions.size() && o.found_at[take] <= remaining
                    && (! remaining_cap || take < *remaining_cap))
                ++take;

            for (std::size_t j = 0 ; j < take ; ++j)
                result.solutions.push_back(std::move(o.solutions[j]));

            if (remaining_cap && take == *remaining_cap) {
                used += o.found_at[take - 1];
                complete = false;
                return false;
            }
            if (o.nodes > remaining) {
                used = cfg.node_budget;
                complete = false;
                return false;
            }
            used += o.nodes;
            if (remaining_cap)
                *remaining_cap -= take;
            return true;
        };

        if (cfg.threads <= 1 || choices.size() <= 1) {
            for (std::size_t b = 0 ; b < choices.size() ; ++b) {
                outcomes[b] = engine.run_branch(choices[b], cfg.node_budget - used, remaining_cap);
                if (! merge(b))
                    break;
            }
        }
        else {
            std::atomic<std::size_t> next{ 0 };
            std::exception_ptr failure;
            std::atomic<bool> failed{ false };
            auto worker = [&] {
                for (std::size_t b ; (b = next++) < choices.size() ; ) {
                    try {
                        outcomes[b] = engine.run_branch(choices[b], cfg.node_budget - 1, cfg.max_solutions);
                    }
                    catch (...) {
                        if (! failed.exchange(true))
                            failure = std::current_exception();
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0 ; t < std::min<std::size_t>(cfg.threads, choices.size()) ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);

            for (std::size_t b = 0 ; b < choices.size() ; ++b)
                if (! merge(b))
                    break;
        }

        result.nodes_explored = used;
        result.complete = complete;
        std::sort(result.solutions.begin(), result.solutions.end());
        return result;
    }

    auto exists(const SearchConfig & cfg) -> bool
    {
        auto single = cfg;
        single.max_solutions = 1;
        return ! search_all(single).solutions.empty();
    }

    auto cross_check(const CrossCheckBounds & bounds) -> CrossCheckReport
    {
        CrossCheckReport report;

        auto check = [&] (ConstructionFamily family, int param, int d) {
            auto built = construct(ConstructionRequest{ family, param, d });
            CrossCheckRow row{ construction_family_name(family), param, d };

            SearchConfig cfg{ built.graph, d };
            cfg.threads = bounds.threads;
            auto found = search_all(cfg);
            row.solutions = found.solutions.size();
            row.complete = found.complete;
            row.contains_construction = std::binary_search(found.solutions.begin(), found.solutions.end(), built.labels);

            row.complement_closed = true;
            row.all_verify = true;
            for (std::size_t i = 0 ; i < found.solutions.size() ; ++i) {
                auto l = found.labeling(i);
                if (! verify_d_graceful(l))
                    row.all_verify = false;
                if (! std::binary_search(found.solutions.begin(), found.solutions.end(), complement(l).labels))
                    row.complement_closed = false;
            }

            if (claims_alpha(family)) {
                cfg.require_alpha = true;
                auto alpha = search_all(cfg);
                row.contains_construction_alpha = alpha.complete
                    && std::binary_search(alpha.solutions.begin(), alpha.solutions.end(), built.labels);
            }

            report.ok = report.ok && row.ok();
            report.rows.push_back(std::move(row));
        };

        for (int e = 1 ; e <= bounds.max_e ; ++e)
            for (int d : divisors(e))
                check(ConstructionFamily::Path, e, d);
        for (int e = 1 ; e <= std::min(bounds.max_e, bounds.max_star_e) ; ++e)
            for (int d : divisors(e))
                check(ConstructionFamily::Star, e, d);
        for (int k = 1 ; 4 * k <= bounds.max_e ; ++k) {
            check(ConstructionFamily::Cycle4kD2, k, 2);
            check(ConstructionFamily::Cycle4kD4, k, 4);
        }
        for (int k = 3 ; 2 * k <= bounds.max_e ; k += 2)
            check(ConstructionFamily::Cycle2kOddD2, k, 2);
        for (int k = 2 ; 3 * k - 2 <= bounds.max_e ; k += 2)
            check(ConstructionFamily::LadderD2, k, 2);

        return report;
    }
}
