/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/cli.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>
#include <ramsey/graph6.hh>

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using nlohmann::json;
using std::function;
using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace ramsey::cli
{
    namespace
    {
        auto parse_int(string_view text, const string & what) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw ParseError{ "expected an integer for " + what + ", got '" + string(text) + "'" };
            return value;
        }

        auto split(string_view text, char sep) -> vector<string>
        {
            vector<string> parts;
            if (text.empty())
                return parts;
            std::size_t start = 0;
            while (true) {
                auto pos = text.find(sep, start);
                parts.emplace_back(text.substr(start, pos == string_view::npos ? string_view::npos : pos - start));
                if (pos == string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        auto parse_index_list(string_view text) -> vector<int>
        {
            vector<int> result;
            for (auto & part : split(text, ','))
                result.push_back(parse_int(part, "attachment index"));
            return result;
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in{ path };
            if (! in)
                throw ParseError{ "cannot read graph file '" + path + "'" };
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto parse_graph_file(const string & contents) -> Graph
        {
            std::istringstream in{ contents };
            string line;
            while (std::getline(in, line)) {
                auto first = line.find_first_not_of(" \t\r");
                if (first == string::npos || line[first] == '#')
                    continue;
                if (line.find_first_of(" \t", first) != string::npos && line.substr(0, 10) != ">>graph6<<")
                    return parse_edge_list(contents);
                return parse_graph6(line);
            }
            throw ParseError{ "graph file is empty" };
        }

        auto named_size(string_view text, string_view prefix) -> optional<int>
        {
            if (! text.starts_with(prefix) || text.size() == prefix.size())
                return std::nullopt;
            auto digits = text.substr(prefix.size());
            for (char c : digits)
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    return std::nullopt;
            return parse_int(digits, string(prefix) + " size");
        }
    }

    auto parse_graph_argument(string_view text) -> Graph
    {
        if (text.starts_with("@"))
            return parse_graph_file(read_file(string(text.substr(1))));

        if (text == "petersen")
            return petersen_graph();
        if (auto n = named_size(text, "K"))
            return complete_graph(*n);
        if (auto n = named_size(text, "C"))
            return cycle_graph(*n);
        if (auto n = named_size(text, "P"))
            return path_graph(*n);
        if (auto n = named_size(text, "E"))
            return empty_graph(*n);

        if (text.starts_with("turan:")) {
            auto parts = split(text.substr(6), ':');
            if (parts.size() != 2)
                throw ParseError{ "expected turan:<n>:<r>, got '" + string(text) + "'" };
            return turan_graph(parse_int(parts[0], "turan n"), parse_int(parts[1], "turan r"));
        }

        if (text.starts_with("hairy:")) {
            auto rest = text.substr(6);
            auto colon = rest.rfind(':');
            if (colon == string_view::npos)
                throw ParseError{ "expected hairy:<base>:<indices>, got '" + string(text) + "'" };
            return make_hairy(HairySpec{ parse_graph_argument(rest.substr(0, colon)), parse_index_list(rest.substr(colon + 1)) });
        }

        return parse_graph6(text);
    }

    auto to_json(const PairContext & ctx) -> json
    {
        return json{
            { "h1", write_graph6(ctx.h1) }, { "h2", write_graph6(ctx.h2) },
            { "v1", ctx.v1 }, { "v2", ctx.v2 }, { "e1", ctx.e1 }, { "e2", ctx.e2 },
            { "k1", ctx.k1 }, { "k2", ctx.k2 }, { "chi1", ctx.chi1 }, { "chi2", ctx.chi2 },
            { "rho1", count_string(ctx.rho1) }, { "rho2", count_string(ctx.rho2) } };
    }

    auto to_json(const ObjectiveValue & value) -> json
    {
        return json{ { "value", fraction_string(value.value) }, { "red_term", fraction_string(value.red_term) },
            { "blue_term", fraction_string(value.blue_term) } };
    }

    namespace
    {
        auto to_json(const TuranBaseline & b) -> json
        {
            return json{ { "value", fraction_string(b.value) }, { "side", side_name(b.side) },
                { "red_value", fraction_string(b.red_value) }, { "blue_value", fraction_string(b.blue_value) } };
        }
    }

    auto to_json(const SearchReport & report) -> json
    {
        json minimizers = json::array();
        for (auto & m : report.minimizers)
            minimizers.push_back(m.code);
        return json{
            { "n", report.n },
            { "mode", mode_name(report.mode) },
            { "min_value", fraction_string(report.min_value) },
            { "minimizers", minimizers },
            { "turan_verdict", verdict_name(report.turan_verdict) },
            { "graphs_examined", report.graphs_examined },
            { "turan_baseline", to_json(report.baseline) },
            { "turan_attains_minimum", report.turan_attains_minimum } };
    }

    auto to_json(const PerturbReport & report) -> json
    {
        json points = json::array();
        for (auto & p : report.points)
            points.push_back(json{ { "epsilon", fraction_string(p.epsilon) }, { "value", fraction_string(p.value) },
                    { "below_baseline", p.below_baseline } });

        json result{
            { "n", report.n },
            { "points", points },
            { "verdict", verdict_name(report.verdict) },
            { "turan_baseline", to_json(report.baseline) },
            { "linear_coefficient", nullptr },
            { "threshold", nullptr } };
        if (report.linear_coefficient)
            result["linear_coefficient"] = fraction_string(*report.linear_coefficient);
        if (report.threshold)
            result["threshold"] = fraction_string(*report.threshold);
        return result;
    }

    auto sweep_csv(const PerturbReport & report) -> string
    {
        string csv = "epsilon,value_num,value_den,below_baseline\n";
        for (auto & p : report.points)
            csv += fraction_string(p.epsilon) + "," + boost::multiprecision::numerator(p.value).str() + ","
                + boost::multiprecision::denominator(p.value).str() + "," + (p.below_baseline ? "true" : "false") + "\n";
        return csv;
    }

    namespace
    {
        constexpr const char * schema_prefix = "ramsey-forge/";

        /// Options shared by several subcommands. Values given as flags win over
        /// the config file, which wins over the defaults.
        struct RunConfig
        {
            string h1, h2, g, h, base, attach, mode = "exhaustive", grid, out, config, moves = "both";
            int n = 0;
            std::uint64_t seed = 0;
            unsigned jobs = 1;
            int max_n_override = 0;
            int restarts = 16;
            int max_steps = 10000;
        };

        struct Binding
        {
            CLI::Option * option;
            string key;
            function<void (const json &)> assign;
            function<json ()> read;
        };

        template <typename T_>
        auto bind_option(CLI::App * app, vector<Binding> & bindings, const string & name, T_ & target, const string & help) -> CLI::Option *
        {
            auto * option = app->add_option("--" + name, target, help);
            string key = name;
            std::replace(key.begin(), key.end(), '-', '_');
            bindings.push_back(Binding{ option, key,
                    [&target] (const json & j) { target = j.get<T_>(); },
                    [&target] () { return json(target); } });
            return option;
        }

        void apply_config_file(const string & path, vector<Binding> & bindings)
        {
            std::ifstream in{ path };
            if (! in)
                throw ParseError{ "cannot read config file '" + path + "'" };
            json config;
            try {
                in >> config;
            }
            catch (const json::exception & e) {
                throw ParseError{ "config file '" + path + "': " + e.what() };
            }
            if (! config.is_object())
                throw ParseError{ "config file '" + path + "' must hold a JSON object" };

            for (auto & [key, value] : config.items()) {
                auto b = std::find_if(bindings.begin(), bindings.end(), [&] (const Binding & x) { return x.key == key; });
                if (b == bindings.end())
                    throw InvalidArgument{ "config file '" + path + "': unknown key '" + key + "'" };
                if (b->option->count() > 0)
                    continue;
                try {
                    b->assign(value);
                }
                catch (const json::exception & e) {
                    throw ParseError{ "config file '" + path + "': bad value for '" + key + "'" };
                }
            }
        }

        /// The resolved configuration echoed into every report. The thread count
        /// is left out because it never changes a result.
        auto resolved_config(const vector<Binding> & bindings) -> json
        {
            json config = json::object();
            for (auto & b : bindings)
                if (b.key != "jobs" && b.key != "config")
                    config[b.key] = b.read();
            return config;
        }

        auto default_jobs() -> unsigned
        {
            if (const char * env = std::getenv("RAMSEY_FORGE_JOBS")) {
                int jobs = 0;
                auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), jobs);
                if (ec == std::errc{} && *ptr == '\0' && jobs > 0)
                    return static_cast<unsigned>(jobs);
            }
            return 1;
        }

        auto parse_grid(const string & text) -> vector<Ratio>
        {
            if (text.empty())
                return default_grid();
            vector<Ratio> grid;
            for (auto & part : split(text, ','))
                grid.push_back(parse_ratio(part));
            return grid;
        }

        void write_text_file(const string & path, const string & contents)
        {
            std::ofstream file{ path };
            if (! file)
                throw InvalidArgument{ "cannot write '" + path + "'" };
            file << contents;
        }

        auto parse_moves(const string & moves) -> MoveSet
        {
            if (moves == "flips")
                return MoveSet::flips;
            if (moves == "clones")
                return MoveSet::clones;
            if (moves == "both")
                return MoveSet::both;
            throw InvalidArgument{ "--moves must be flips, clones or both" };
        }

        auto graph_summary(const Graph & g) -> string
        {
            auto profile = critical_edges(g);
            return "v=" + to_string(g.order()) + " e=" + to_string(g.edge_count()) + " chi=" + to_string(profile.chi)
                + " k=" + to_string(component_count(g)) + " crit=" + to_string(profile.crit);
        }

        auto document(const string & command, const vector<Binding> & bindings) -> json
        {
            return json{ { "schema", string(schema_prefix) + command + "/1" }, { "config", resolved_config(bindings) } };
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Exact Ramsey multiplicity objectives, minimisation and Turán perturbations", "ramsey-forge" };
        app.require_subcommand(1);

        RunConfig cfg;
        cfg.jobs = default_jobs();

        auto * hairy = app.add_subcommand("hairy", "Attach pendant edges to a base graph");
        auto * objective = app.add_subcommand("objective", "Evaluate the weighted monochromatic objective of one colouring");
        auto * search = app.add_subcommand("search", "Minimise the objective over all n-vertex colourings");
        auto * perturb = app.add_subcommand("perturb", "Expected objective of the randomly thinned Turán colouring");
        auto * bounds = app.add_subcommand("bounds", "Colouring counts and the Tomescu / nearly proper bounds");

        for (auto * sub : { hairy, objective, search, perturb, bounds })
            sub->add_option("--config", cfg.config, "JSON file with default values for the flags");

        vector<Binding> hairy_b, objective_b, search_b, perturb_b, bounds_b;

        bind_option(hairy, hairy_b, "base", cfg.base, "Base graph");
        bind_option(hairy, hairy_b, "attach", cfg.attach, "Comma separated base vertices receiving a pendant edge");
        bind_option(hairy, hairy_b, "out", cfg.out, "Write the hairy graph in graph6 to this file");

        bind_option(objective, objective_b, "h1", cfg.h1, "Pattern counted in the red graph");
        bind_option(objective, objective_b, "h2", cfg.h2, "Pattern counted in the blue graph");
        bind_option(objective, objective_b, "g", cfg.g, "Red graph of the colouring");

        bind_option(search, search_b, "h1", cfg.h1, "Pattern counted in the red graph");
        bind_option(search, search_b, "h2", cfg.h2, "Pattern counted in the blue graph");
        bind_option(search, search_b, "n", cfg.n, "Number of vertices");
        bind_option(search, search_b, "mode", cfg.mode, "exhaustive or local");
        bind_option(search, search_b, "seed", cfg.seed, "Seed for local search restarts");
        bind_option(search, search_b, "jobs", cfg.jobs, "Worker threads (default: RAMSEY_FORGE_JOBS or 1)");
        bind_option(search, search_b, "out", cfg.out, "Write minimizers in graph6, one per line");
        bind_option(search, search_b, "max-n-override", cfg.max_n_override, "Raise the exhaustive vertex cap (at most 8)");
        bind_option(search, search_b, "restarts", cfg.restarts, "Local search restarts, including the two Turán seeds");
        bind_option(search, search_b, "max-steps", cfg.max_steps, "Descent steps per restart");
        bind_option(search, search_b, "moves", cfg.moves, "flips, clones or both");

        bind_option(perturb, perturb_b, "h1", cfg.h1, "Pattern counted in the red graph");
        bind_option(perturb, perturb_b, "h2", cfg.h2, "Pattern counted in the blue graph");
        bind_option(perturb, perturb_b, "n", cfg.n, "Number of vertices");
        bind_option(perturb, perturb_b, "grid", cfg.grid, "Comma separated deletion probabilities (default 0,1/100,...,10/100)");
        bind_option(perturb, perturb_b, "jobs", cfg.jobs, "Worker threads (default: RAMSEY_FORGE_JOBS or 1)");
        bind_option(perturb, perturb_b, "out", cfg.out, "Write the sweep as CSV to this file");

        bounds->set_help_flag("--help", "Print this help message and exit");
        bind_option(bounds, bounds_b, "h", cfg.h, "Graph to analyse");

        try {
            try {
                app.parse(argc, argv);
            }
            catch (const CLI::ParseError & e) {
                int code = app.exit(e, out, err);
                return code == 0 ? exit_ok : exit_invalid_argument;
            }

            auto & active = hairy->parsed() ? hairy_b : objective->parsed() ? objective_b : search->parsed() ? search_b
                : perturb->parsed() ? perturb_b : bounds_b;
            auto & bindings = active;
            if (! cfg.config.empty())
                apply_config_file(cfg.config, bindings);

            auto require = [] (const string & value, const string & flag) -> const string & {
                if (value.empty())
                    throw InvalidArgument{ flag + " is required" };
                return value;
            };

            if (hairy->parsed()) {
                auto base = parse_graph_argument(require(cfg.base, "--base"));
                auto g = make_hairy(HairySpec{ base, parse_index_list(cfg.attach) });
                out << graph_summary(g) << "\n";
                if (cfg.out.empty())
                    out << write_graph6(g) << "\n";
                else
                    write_text_file(cfg.out, write_graph6(g) + "\n");
                return exit_ok;
            }

            if (objective->parsed()) {
                auto ctx = make_context(parse_graph_argument(require(cfg.h1, "--h1")), parse_graph_argument(require(cfg.h2, "--h2")));
                auto g = parse_graph_argument(require(cfg.g, "--g"));
                auto doc = document("objective", bindings);
                doc["context"] = to_json(ctx);
                doc["objective"] = to_json(m_objective(ctx, g));
                out << doc.dump(2) << "\n";
                return exit_ok;
            }

            if (search->parsed()) {
                auto ctx = make_context(parse_graph_argument(require(cfg.h1, "--h1")), parse_graph_argument(require(cfg.h2, "--h2")));
                if (cfg.jobs < 1)
                    throw InvalidArgument{ "--jobs must be at least 1" };

                SearchReport report;
                if (cfg.mode == "exhaustive") {
                    ExhaustiveOptions options;
                    options.jobs = cfg.jobs;
                    if (cfg.max_n_override > 0)
                        options.max_n = cfg.max_n_override;
                    report = exhaustive_minimize(ctx, cfg.n, options);
                }
                else if (cfg.mode == "local") {
                    LocalSearchOptions options;
                    options.jobs = cfg.jobs;
                    options.restarts = cfg.restarts;
                    options.max_steps = cfg.max_steps;
                    options.move_set = parse_moves(cfg.moves);
                    report = local_search(ctx, cfg.n, cfg.seed, options);
                }
                else
                    throw InvalidArgument{ "--mode must be exhaustive or local" };

                if (! cfg.out.empty()) {
                    string dump;
                    for (auto & m : report.minimizers)
                        dump += m.code + "\n";
                    write_text_file(cfg.out, dump);
                }

                auto doc = document("search", bindings);
                doc["context"] = to_json(ctx);
                doc["report"] = to_json(report);
                out << doc.dump(2) << "\n";
                return exit_ok;
            }

            if (perturb->parsed()) {
                auto ctx = make_context(parse_graph_argument(require(cfg.h1, "--h1")), parse_graph_argument(require(cfg.h2, "--h2")));
                if (cfg.jobs < 1)
                    throw InvalidArgument{ "--jobs must be at least 1" };
                auto report = sweep(ctx, cfg.n, parse_grid(cfg.grid), cfg.jobs);
                if (! cfg.out.empty())
                    write_text_file(cfg.out, sweep_csv(report));

                auto doc = document("perturb", bindings);
                doc["context"] = to_json(ctx);
                doc["report"] = to_json(report);
                out << doc.dump(2) << "\n";
                return exit_ok;
            }

            auto h = parse_graph_argument(require(cfg.h, "--h"));
            auto profile = critical_edges(h);
            int chi = profile.chi, v = h.order(), k = component_count(h);
            auto proper = count_proper_colourings(h, chi);
            auto tomescu = tomescu_bound(chi, v);

            auto doc = document("bounds", bindings);
            doc["graph"] = write_graph6(h);
            doc["v"] = v;
            doc["e"] = h.edge_count();
            doc["chi"] = chi;
            doc["k"] = k;
            doc["crit"] = profile.crit;
            doc["proper_colourings"] = count_string(proper);
            doc["tomescu_bound"] = count_string(tomescu);
            doc["tomescu_applies"] = k == 1 && chi != 3;
            doc["exceeds_tomescu"] = proper > tomescu;
            if (chi >= 2)
                doc["nearly_proper_count"] = count_string(nearly_proper_count(h));
            if (chi >= 3)
                doc["nearly_proper_bound"] = count_string(nearly_proper_bound(h));
            else
                err << "warning: chi(h) = " << chi << " < 3, the nearly proper bound is omitted\n";
            out << doc.dump(2) << "\n";
            return exit_ok;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_parse;
        }
        catch (const InvalidArgument & e) {
            err << "error: " << e.what() << "\n";
            return exit_invalid_argument;
        }
        catch (const SizeError & e) {
            err << "error: " << e.what() << "\n";
            return exit_size;
        }
        catch (const BudgetExceeded & e) {
            err << "error: " << e.what() << "\n";
            return exit_budget;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
}
