/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_CLI_HH
#define RAMSEY_GUARD_CLI_HH 1

#include <ramsey/graph.hh>
#include <ramsey/perturbation.hh>
#include <ramsey/search.hh>

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ramsey::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_parse = 2,
        exit_invalid_argument = 3,
        exit_size = 4,
        exit_budget = 5
    };

    /**
     * Resolves a graph argument. Accepted forms:
     *   - a graph6 string;
     *   - @path, a file holding a graph6 line or an edge list;
     *   - K<n>, C<n>, P<n>, E<n> (edgeless), petersen;
     *   - turan:<n>:<r>;
     *   - hairy:<base>:<i>,<j>,... where <base> is any of the forms above.
     */
    auto parse_graph_argument(std::string_view text) -> Graph;

    auto to_json(const PairContext & ctx) -> nlohmann::json;
    auto to_json(const ObjectiveValue & value) -> nlohmann::json;
    auto to_json(const SearchReport & report) -> nlohmann::json;
    auto to_json(const PerturbReport & report) -> nlohmann::json;

    /// Columns epsilon,value_num,value_den,below_baseline; one row per grid point.
    auto sweep_csv(const PerturbReport & report) -> std::string;

    /// Entry point of the ramsey-forge tool; returns the process exit code.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
