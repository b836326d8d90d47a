// twistlab command-line front end.  Every command prints one JSON report.
// Exit codes: 0 success, 1 domain error, 2 malformed input.

#include "twistlab/acceptance.hpp"
#include "twistlab/catalog.hpp"
#include "twistlab/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace twistlab;
using twistlab::json::to_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// Argument is inline JSON when it starts with '{' or '['; "-" is stdin;
// anything else is a file path.
Json load(const std::string& arg)
{
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot read input file '" + arg + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

// Scalar list from a JSON array or a single literal.
ScalarVector load_angles(const std::string& arg, const char* name)
{
    if (!arg.empty() && arg.front() == '[') return json::read_vector(load(arg), std::string("/") + name);
    return {json::read_scalar(Json(arg), std::string("/") + name)};
}

Json report(const std::string& command, Json input, Json result)
{
    return Json{{"command", command}, {"version", kVersion}, {"input", std::move(input)}, {"result", std::move(result)}};
}

Json cocycle_command(const std::string& command, const std::string& arg)
{
    const Json in = load(arg);
    const Cocycle w = json::read_cocycle(in);
    Json result;
    if (command == "symmetry") {
        result = to_json(symmetry_group(w));
    } else if (command == "simple") {
        result = Json{{"simple", is_simple(w)}};
    } else if (command == "lift") {
        const FieldStructure f = field_structure(w);
        result = to_json(f.lift);
        result["field"] = to_json(f);
    } else if (command == "prim") {
        result = to_json(dual_action_orbit(w));
        result["field"] = to_json(field_structure(w));
    } else if (command == "reduce") {
        result = to_json(reduce(w));
    } else if (command == "finite-blocks") {
        result = to_json(block_decomposition(build_algebra(w)));
    }
    return report(command, to_json(w), std::move(result));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"twistlab: twisted group algebras of abelian groups"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    std::string cocycle_arg;
    std::vector<CLI::App*> cocycle_cmds;
    for (const char* name : {"symmetry", "simple", "lift", "prim", "reduce", "finite-blocks"}) {
        auto* c = app.add_subcommand(name, std::string("cocycle report: ") + name);
        c->add_option("cocycle", cocycle_arg, "cocycle JSON: file, '-' for stdin, or inline")->required();
        cocycle_cmds.push_back(c);
    }
    std::string matrix_arg;
    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("matrix", matrix_arg, "matrix JSON: [[...]] or {\"matrix\": [[...]]}")->required();

    std::string co1, co2;
    auto* cob = app.add_subcommand("coboundary", "explicit coboundary between two cocycles on a finite group");
    cob->add_option("first", co1)->required();
    cob->add_option("second", co2)->required();

    int max_size = 6;
    auto* poset = app.add_subcommand("poset-check", "exhaustive orbit and local closedness checks on small posets");
    poset->add_option("--max-size", max_size, "largest poset size")->check(CLI::Range(0, 6));

    std::string theta = "t1";
    auto* mautner = app.add_subcommand("mautner", "strata of the Mautner group");
    mautner->add_option("--theta", theta, "rotation angle literal");

    std::string group_arg, chi_arg, mu_arg;
    auto* mcm = app.add_subcommand("mcm", "strata of the variation M_{chi,mu}");
    mcm->add_option("--group", group_arg, "group JSON")->required();
    mcm->add_option("--chi", chi_arg, "angles of chi: JSON array or one literal")->required();
    mcm->add_option("--mu", mu_arg, "angles of mu: JSON array or one literal")->required();

    int n_primes = 3;
    auto* primes = app.add_subcommand("primes", "prime example truncated to n primes");
    primes->add_option("--n", n_primes, "number of primes");

    auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");

    std::string command;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", Json{{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 2;
    }
    command = app.get_subcommands().front()->get_name();

    try {
        Json out;
        int code = 0;
        if (std::find(cocycle_cmds.begin(), cocycle_cmds.end(), app.get_subcommands().front()) != cocycle_cmds.end()) {
            out = cocycle_command(command, cocycle_arg);
        } else if (snf->parsed()) {
            Json in = load(matrix_arg);
            const Json& m = in.is_object() ? json::field(in, "", "matrix") : in;
            const IntMatrix M = json::read_int_matrix(m, in.is_object() ? "/matrix" : "");
            out = report(command, to_json(M), to_json(smith_normal_form(M)));
        } else if (cob->parsed()) {
            const Cocycle w1 = json::read_cocycle(load(co1));
            const Cocycle w2 = json::read_cocycle(load(co2));
            out = report(command, Json{{"first", to_json(w1)}, {"second", to_json(w2)}}, to_json(solve_coboundary(w1, w2)));
        } else if (poset->parsed()) {
            const PosetSweep s = poset_sweep(max_size);
            out = report(command, Json{{"max_size", max_size}}, to_json(s));
            if (!s.counterexamples.empty()) code = 1;
        } else if (mautner->parsed()) {
            const Scalar th = json::read_scalar(Json(theta), "/theta");
            Json strata = Json::array();
            for (const auto& s : mautner_catalog(th)) strata.push_back(to_json(s));
            out = report(command, Json{{"theta", to_json(th)}}, Json{{"strata", strata}});
        } else if (mcm->parsed()) {
            const Group G = json::read_group(load(group_arg), "/group");
            const ScalarVector chi = load_angles(chi_arg, "chi");
            const ScalarVector mu = load_angles(mu_arg, "mu");
            Json strata = Json::array();
            for (const auto& s : m_chi_mu_catalog(G, chi, mu)) strata.push_back(to_json(s));
            out = report(command, Json{{"group", to_json(G)}, {"chi", to_json(chi)}, {"mu", to_json(mu)}}, Json{{"strata", strata}});
        } else if (primes->parsed()) {
            if (n_primes < 1) throw DomainError("n must be between 1 and 8");
            out = report(command, Json{{"n", n_primes}}, to_json(prime_example(static_cast<std::size_t>(n_primes))));
        } else if (verify->parsed()) {
            const auto results = acceptance::run_all();
            bool all = true;
            for (const auto& r : results) all = all && r.passed;
            out = report(command, Json::object(), Json{{"criteria", acceptance::to_json(results)}, {"passed", all}});
            if (!all) code = 1;
        }
        std::cout << out.dump(2) << '\n';
        return code;
    } catch (const ParseError& e) {
        std::cout << Json{{"command", command}, {"error", Json{{"kind", "parse"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cout << Json{{"command", command}, {"error", Json{{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
}
