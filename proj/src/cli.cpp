#include <dgraceful/cli.hpp>
#include <dgraceful/constructions.hpp>
#include <dgraceful/dot.hpp>
#include <dgraceful/errors.hpp>
#include <dgraceful/json_io.hpp>
#include <dgraceful/search.hpp>
#include <dgraceful/sweep.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace dgraceful
{
    namespace
    {
        constexpr int exit_ok = 0;
        constexpr int exit_failed = 1;
        constexpr int exit_usage = 2;

        class UsageError : public std::runtime_error
        {
            public:
                explicit UsageError(const std::string & what) : std::runtime_error(what) { }
        };

        struct Settings
        {
            SweepBounds sweep;
            std::uint64_t budget = 1'000'000'000;
        };

        auto trim(std::string s) -> std::string
        {
            auto not_space = [] (unsigned char c) { return ! std::isspace(c); };
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
            s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
            return s;
        }

        /// key=value lines; blank lines and lines starting with # are ignored.
        auto load_config(const std::string & path, Settings & settings) -> void
        {
            std::ifstream in(path);
            if (! in)
                throw UsageError("cannot read config file " + path);

            std::map<std::string, std::function<void (long long)>> setters{
                { "max_e", [&] (long long v) { settings.sweep.max_e = static_cast<int>(v); } },
                { "max_k_cycle4k", [&] (long long v) { settings.sweep.max_k_cycle4k = static_cast<int>(v); } },
                { "max_k_cycle2k_odd", [&] (long long v) { settings.sweep.max_k_cycle2k_odd = static_cast<int>(v); } },
                { "max_k_ladder", [&] (long long v) { settings.sweep.max_k_ladder = static_cast<int>(v); } },
                { "df_max_v", [&] (long long v) { settings.sweep.df_max_v = v; } },
                { "materialize_cap", [&] (long long v) { settings.sweep.verify.materialize_cap = v; } },
                { "budget", [&] (long long v) { settings.budget = static_cast<std::uint64_t>(v); } },
            };

            std::string line;
            for (int number = 1 ; std::getline(in, line) ; ++number) {
                line = trim(line);
                if (line.empty() || line.front() == '#')
                    continue;
                auto eq = line.find('=');
                if (eq == std::string::npos)
                    throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
                auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
                auto setter = setters.find(key);
                if (setter == setters.end())
                    throw UsageError(path + ":" + std::to_string(number) + ": unknown key " + key);
                try {
                    std::size_t used = 0;
                    auto parsed = std::stoll(value, &used);
                    if (used != value.size() || parsed < 0)
                        throw std::invalid_argument(value);
                    setter->second(parsed);
                }
                catch (const std::logic_error &) {
                    throw UsageError(path + ":" + std::to_string(number) + ": bad value for " + key);
                }
            }
        }

        auto emit(std::ostream & out, const std::string & path, const std::string & text) -> void
        {
            if (path.empty())
                out << text;
            else
                write_text_file(path, text);
        }

        auto tuple_string(const std::vector<Label> & labels) -> std::string
        {
            std::ostringstream s;
            s << "(";
            for (std::size_t i = 0 ; i < labels.size() ; ++i)
                s << (i ? "," : "") << labels[i];
            s << ")";
            return s.str();
        }

        auto error_json(const std::string & kind, const std::string & detail) -> std::string
        {
            return Json{ { "error", kind }, { "detail", detail } }.dump() + "\n";
        }

        auto workers() -> unsigned
        {
            return std::max(1u, std::thread::hardware_concurrency());
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Construct and verify d-graceful labellings, difference families and cyclic decompositions",
            "dgraceful" };
        app.require_subcommand(1);
        app.fallthrough();

        bool pretty = false, show_version = false;
        std::string config;
        app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
        app.add_option("--config", config, "key=value file overriding sweep bounds and verification settings");
        app.add_flag("--version", show_version, "Print the version on standard error");

        // construct
        auto * construct_cmd = app.add_subcommand("construct", "Build a labelling from a closed-form construction");
        std::string family, out_path;
        int size_e = 0, size_k = 0, d = 0;
        construct_cmd->add_option("--family", family, "path, star, cycle4k-d2, cycle4k-d4, cycle2k-odd, ladder-d2")
            ->required()
            ->check(CLI::IsMember({ "path", "star", "cycle4k-d2", "cycle4k-d4", "cycle2k-odd", "ladder-d2" }));
        auto * e_opt = construct_cmd->add_option("--e", size_e, "Size of the path or star");
        auto * k_opt = construct_cmd->add_option("--k", size_k, "Cycle or ladder parameter");
        e_opt->excludes(k_opt);
        auto * construct_d_opt = construct_cmd->add_option("--d", d, "The divisor d of e");
        construct_cmd->add_option("--out", out_path, "Write the labelling here");

        // verify
        auto * verify_cmd = app.add_subcommand("verify", "Check that a labelling is d-graceful");
        std::string labeling_path;
        bool want_alpha = false;
        verify_cmd->add_option("--labeling", labeling_path)->required();
        verify_cmd->add_flag("--alpha", want_alpha, "Also require an alpha-labelling");

        // df
        auto * df_cmd = app.add_subcommand("df", "Difference family from a labelling");
        int n = 1;
        df_cmd->add_option("--labeling", labeling_path)->required();
        auto * df_n_opt = df_cmd->add_option("--n", n, "n-fold family from an alpha-labelling")->check(CLI::PositiveNumber);
        df_cmd->add_option("--out", out_path);

        // expand
        auto * expand_cmd = app.add_subcommand("expand", "Expand into a cyclic decomposition of K_{p x q}");
        std::string df_path;
        bool verify_flag = false;
        auto * expand_labeling_opt = expand_cmd->add_option("--labeling", labeling_path);
        auto * expand_df_opt = expand_cmd->add_option("--df", df_path);
        expand_labeling_opt->excludes(expand_df_opt);
        auto * expand_n_opt = expand_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
        expand_n_opt->excludes(expand_df_opt);
        expand_cmd->add_flag("--verify", verify_flag, "Check the edge partition and the cyclic automorphism");
        expand_cmd->add_option("--out", out_path, "Write the decomposition here");

        // search
        auto * search_cmd = app.add_subcommand("search", "Exhaustive search for d-graceful labellings");
        std::string graph_path;
        bool all = false;
        std::size_t max_solutions = 0;
        std::uint64_t budget = 0;
        search_cmd->add_option("--graph", graph_path)->required();
        search_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        search_cmd->add_flag("--alpha", want_alpha);
        search_cmd->add_flag("--all", all, "Enumerate every solution instead of stopping at the first");
        auto * max_solutions_opt = search_cmd->add_option("--max-solutions", max_solutions);
        auto * budget_opt = search_cmd->add_option("--budget", budget, "Node budget");

        // sweep
        auto * sweep_cmd = app.add_subcommand("sweep", "Run every construction through the full pipeline");
        int max_e = 0, max_k = 0;
        auto * max_e_opt = sweep_cmd->add_option("--max-e", max_e)->check(CLI::NonNegativeNumber);
        auto * max_k_opt = sweep_cmd->add_option("--max-k", max_k, "Bound for every cycle and ladder parameter")
            ->check(CLI::NonNegativeNumber);

        // export-dot
        auto * dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a labelling or a block orbit");
        std::string decomposition_path;
        auto * dot_labeling_opt = dot_cmd->add_option("--labeling", labeling_path);
        auto * dot_dec_opt = dot_cmd->add_option("--decomposition", decomposition_path);
        dot_labeling_opt->excludes(dot_dec_opt);
        dot_cmd->add_option("--out", out_path);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << error_json("usage", e.what());
            return exit_usage;
        }

        if (show_version)
            err << "dgraceful " << version << "\n";

        try {
            Settings settings;
            if (! config.empty())
                load_config(config, settings);

            if (construct_cmd->parsed()) {
                auto which = *construction_family_from_name(family);
                auto fixed = fixed_d(which);
                ConstructionRequest req{ which, 0, 0 };
                if (fixed) {
                    if (! k_opt->count())
                        throw UsageError(family + " needs --k");
                    req.size_param = size_k;
                    req.d = construct_d_opt->count() ? d : *fixed;
                }
                else {
                    if (! e_opt->count() || ! construct_d_opt->count())
                        throw UsageError(family + " needs --e and --d");
                    req.size_param = size_e;
                    req.d = d;
                }

                auto l = construct(req);
                if (pretty) {
                    out << family << " " << (fixed ? "k=" : "e=") << req.size_param << " d=" << l.d << " m=" << l.m
                        << ": " << tuple_string(l.labels) << "\n";
                    if (! out_path.empty())
                        write_text_file(out_path, to_json(l).dump() + "\n");
                }
                else
                    emit(out, out_path, to_json(l).dump() + "\n");
                return exit_ok;
            }

            if (verify_cmd->parsed()) {
                auto l = labeling_from_json(read_json_file(labeling_path));
                auto report = verify_d_graceful(l);
                auto j = to_json(report);
                j["d"] = l.d;
                j["m"] = l.m;
                if (l.d >= 1 && l.m >= 1)
                    j["spectrum_summary"] = spectrum_string(l.d, l.m);
                if (l.graph.complete() && report.ok)
                    j["rds"] = to_json(verify_rds_view(l));

                bool ok = report.ok;
                if (want_alpha) {
                    bool alpha = false;
                    try {
                        alpha = report.ok && verify_alpha(l);
                    }
                    catch (const PreconditionFailed & e) {
                        j["alpha_error"] = e.what();
                    }
                    j["alpha"] = alpha;
                    ok = ok && alpha;
                }

                if (pretty) {
                    std::ostringstream line;
                    line << (report.ok ? "d-graceful" : "not d-graceful") << " (d=" << l.d << ", m=" << l.m << ")";
                    if (report.ok)
                        line << ", spectrum " << spectrum_string(l.d, l.m);
                    if (want_alpha)
                        line << (j["alpha"].get<bool>() ? ", alpha" : ", not alpha");
                    for (auto & v : report.violations)
                        line << "\n  " << violation_kind_name(v.kind) << ": " << v.detail;
                    (ok ? out : err) << line.str() << "\n";
                }
                else
                    (ok ? out : err) << j.dump() << "\n";
                return ok ? exit_ok : exit_failed;
            }

            if (df_cmd->parsed()) {
                auto l = labeling_from_json(read_json_file(labeling_path));
                auto df = df_n_opt->count() ? df_from_alpha(l, n) : df_from_labeling(l);
                emit(out, out_path, to_json(df).dump() + "\n");
                return exit_ok;
            }

            if (expand_cmd->parsed()) {
                if (labeling_path.empty() == df_path.empty())
                    throw UsageError("expand needs exactly one of --labeling and --df");

                DifferenceFamily df = df_path.empty()
                    ? [&] {
                        auto l = labeling_from_json(read_json_file(labeling_path));
                        return n == 1 ? df_from_labeling(l) : df_from_alpha(l, n);
                    }()
                    : difference_family_from_json(read_json_file(df_path));

                auto dec = expand(df);
                auto summary = decomposition_summary(dec);

                std::ostringstream message;
                message << "K_{" << dec.spec.parts << "×" << dec.spec.part_size << "}: " << dec.blocks.size()
                    << " blocks, " << dec.blocks.size() * static_cast<std::size_t>(dec.graph.size()) << " edges";

                Json j;
                if (out_path.empty())
                    j["decomposition"] = to_json(dec);
                else
                    write_text_file(out_path, to_json(dec).dump() + "\n");
                j["summary"] = to_json(summary);

                bool ok = true;
                if (verify_flag) {
                    auto report = verify_decomposition(dec, settings.sweep.verify);
                    ok = report.ok;
                    j["verification"] = to_json(report);
                    message << (ok ? ", partition OK" : ", partition FAILED");
                }
                j["message"] = message.str();

                if (pretty)
                    (ok ? out : err) << message.str() << "\n";
                else
                    (ok ? out : err) << j.dump() << "\n";
                return ok ? exit_ok : exit_failed;
            }

            if (search_cmd->parsed()) {
                SearchConfig cfg{ graph_from_json(read_json_file(graph_path)), d };
                cfg.require_alpha = want_alpha;
                cfg.node_budget = budget_opt->count() ? budget : settings.budget;
                if (all)
                    cfg.max_solutions = max_solutions_opt->count() ? std::optional<std::size_t>(max_solutions) : std::nullopt;
                else
                    cfg.max_solutions = 1;
                cfg.threads = workers();

                auto result = search_all(cfg);
                for (auto & s : result.solutions) {
                    if (pretty)
                        out << tuple_string(s) << "\n";
                    else
                        out << Json{ { "labels", s } }.dump() << "\n";
                }
                Json summary{ { "d", result.d }, { "m", result.m }, { "solutions", result.solutions.size() },
                    { "nodes_explored", result.nodes_explored }, { "complete", result.complete } };
                if (pretty)
                    out << result.solutions.size() << " solution(s), " << result.nodes_explored << " nodes, "
                        << (result.complete ? "complete" : "incomplete") << "\n";
                else
                    out << Json{ { "summary", summary } }.dump() << "\n";
                return exit_ok;
            }

            if (sweep_cmd->parsed()) {
                auto bounds = settings.sweep;
                if (max_e_opt->count())
                    bounds.max_e = max_e;
                if (max_k_opt->count())
                    bounds.max_k_cycle4k = bounds.max_k_cycle2k_odd = bounds.max_k_ladder = max_k;

                auto report = run_sweep(bounds, workers());
                if (pretty) {
                    out << std::left << std::setw(13) << "family" << std::setw(6) << "param" << std::setw(5) << "d"
                        << std::setw(5) << "m" << std::setw(10) << "graceful" << std::setw(7) << "alpha"
                        << std::setw(10) << "pipeline" << "result\n";
                    for (auto & row : report.rows) {
                        std::size_t good = std::count_if(row.pipeline.begin(), row.pipeline.end(),
                                [] (auto & p) { return p.ok(); });
                        out << std::left << std::setw(13) << construction_family_name(row.request.family)
                            << std::setw(6) << row.request.size_param << std::setw(5) << row.request.d
                            << std::setw(5) << row.m << std::setw(10) << (row.graceful ? "yes" : "NO")
                            << std::setw(7) << (row.alpha ? "yes" : (row.alpha_claimed ? "NO" : "no"))
                            << std::setw(10) << (std::to_string(good) + "/" + std::to_string(row.pipeline.size()))
                            << (row.ok() ? "pass" : "FAIL") << "\n";
                    }
                    out << report.rows.size() << " constructions, " << report.pipeline_checks << " pipeline checks, "
                        << report.failures << " failures\n";
                }
                else {
                    Json rows = Json::array();
                    for (auto & row : report.rows) {
                        Json pipeline = Json::array();
                        for (auto & p : row.pipeline)
                            pipeline.push_back({ { "n", p.n }, { "v", p.modulus }, { "blocks", p.blocks },
                                    { "edges", p.covered_edges }, { "ok", p.ok() } });
                        rows.push_back({ { "family", construction_family_name(row.request.family) },
                                { "param", row.request.size_param }, { "d", row.request.d }, { "m", row.m },
                                { "graceful", row.graceful }, { "alpha_claimed", row.alpha_claimed },
                                { "alpha", row.alpha }, { "pipeline", pipeline }, { "ok", row.ok() },
                                { "error", row.error } });
                    }
                    out << Json{ { "rows", rows }, { "failures", report.failures }, { "ok", report.ok() } }.dump() << "\n";
                }
                return report.ok() ? exit_ok : exit_failed;
            }

            if (dot_cmd->parsed()) {
                if (labeling_path.empty() == decomposition_path.empty())
                    throw UsageError("export-dot needs exactly one of --labeling and --decomposition");
                auto text = labeling_path.empty()
                    ? orbit_to_dot(decomposition_from_json(read_json_file(decomposition_path)))
                    : labeling_to_dot(labeling_from_json(read_json_file(labeling_path)));
                emit(out, out_path, text);
                return exit_ok;
            }
        }
        catch (const UsageError & e) {
            err << error_json("usage", e.what());
            return exit_usage;
        }
        catch (const FormatError & e) {
            err << error_json("format", e.what());
            return exit_usage;
        }
        catch (const NotAdmissible & e) {
            err << error_json("not_admissible", e.what());
            return exit_failed;
        }
        catch (const InvalidParameter & e) {
            err << error_json("invalid_parameter", e.what());
            return exit_failed;
        }
        catch (const PreconditionFailed & e) {
            err << error_json("precondition_failed", e.what());
            return exit_failed;
        }

        return exit_usage;
    }
}
