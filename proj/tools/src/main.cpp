#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "sgm/cli/cli.hpp"

namespace {

struct VerbSpec {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, const char*>> options;
    std::vector<std::pair<const char*, const char*>> flags;
    const char* positional = nullptr;
};

const std::vector<VerbSpec>& verb_specs()
{
    static const std::vector<VerbSpec> specs{
        {"eval", "homology and connectivity of a term", {}, {}, "term"},
        {"ring",
         "cohomology ring from a file, an exterior algebra, a simplicial complex or the hole formula",
         {{"ring", "ring JSON file"},
          {"exterior", "number of generators"},
          {"degree", "generator degree for --exterior"},
          {"simplicial", "ordered simplicial complex JSON"},
          {"n", "ambient dimension"},
          {"k", "connectivity parameter"},
          {"ranks", "ranks d:r,..."},
          {"a", "coefficients a_i, comma separated"},
          {"a0", "middle coefficients, comma separated"}},
         {{"thm3", "build the ring from --n --k --ranks --a --a0"}}},
        {"holes",
         "homology of a disc with holes, formula against the chain oracle",
         {{"n", "disc dimension"}, {"k", "connectivity parameter (default 2)"}, {"holes", "hole spec JSON or file"}},
         {{"with-ring", "also emit the ring read off the linking numbers"}}},
        {"realize",
         "hole spec realizing a rank vector",
         {{"n", "disc dimension"}, {"k", "connectivity parameter (default 2)"}, {"ranks", "ranks d:r,..."}},
         {}},
        {"massey",
         "triple Massey product on the Borromean fixture or a DGA file",
         {{"dga", "DGA JSON file"},
          {"u", "first class"},
          {"v", "second class"},
          {"w", "third class"},
          {"convention", "standard or kraines"},
          {"seed", "perturb the primitives with this seed"}},
         {},
         "fixture"},
        {"sgm",
         "homology of the source manifold of a special generic map",
         {{"image", "image JSON or file"}, {"handles", "handle indices l1,l2,.."}, {"n", "target dimension"},
          {"m", "source dimension"}},
         {}},
        {"check-root",
         "normal form and atom whitelist checks for a term",
         {{"n", "ambient dimension"}, {"k", "connectivity parameter"}, {"mode", "SEE or SIE"}},
         {},
         "term"},
        {"check-thm1",
         "vanishing of products of low-degree classes",
         {{"ring", "ring JSON file"}, {"exterior", "number of generators"}, {"degree", "generator degree"},
          {"m", "source dimension"}, {"n", "target dimension"}},
         {}},
        {"pipeline", "the Borromean construction end to end", {}, {}, "name"},
        {"oracle",
         "closed form against chain-level homology",
         {{"holes", "hole spec JSON or file"}, {"n", "disc dimension"}, {"k", "connectivity parameter"},
          {"complex", "chain complex JSON"}, {"simplicial", "ordered simplicial complex JSON"}},
         {},
         "term"},
    };
    return specs;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sgmtool: homology, rings and Massey products for special generic map images"};
    app.require_subcommand(1);
    app.fallthrough();

    sgm::cli::Command cmd;
    int max_factors = 0;
    app.add_option("--coeff", cmd.coeff, "coefficients: Z, Q or Zp:<p>")->capture_default_str();
    app.add_flag("--json", cmd.json, "emit the report as JSON");
    app.add_option("--index-mode", cmd.index_mode, "literal or triangular")->check(CLI::IsMember({"literal", "triangular"}));
    auto* mf = app.add_option("--max-factors", max_factors, "factor cap for check-thm1")->check(CLI::PositiveNumber);
    std::string atoms;
    auto* at = app.add_option("--atoms", atoms, "atom table JSON added to the built-in atoms");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> flags;
    std::map<std::string, std::vector<std::string>> positionals;
    for (const auto& v : verb_specs()) {
        auto* sub = app.add_subcommand(v.name, v.help);
        for (const auto& [name, help] : v.options) sub->add_option(std::string("--") + name, values[v.name][name], help);
        for (const auto& [name, help] : v.flags) sub->add_flag(std::string("--") + name, flags[v.name][name], help);
        if (v.positional) sub->add_option(v.positional, positionals[v.name], v.positional);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sgm::cli::kExitInputError;
    }

    for (const auto& v : verb_specs()) {
        auto* sub = app.get_subcommand(v.name);
        if (!sub->parsed()) continue;
        cmd.verb = v.name;
        for (const auto& [name, help] : v.options)
            if (sub->count(std::string("--") + name) > 0) cmd.options[name] = values[v.name][name];
        for (const auto& [name, help] : v.flags)
            if (flags[v.name][name]) cmd.options[name] = "1";
        cmd.args = positionals[v.name];
    }
    if (mf->count() > 0) cmd.max_factors = max_factors;
    if (at->count() > 0) cmd.atoms = atoms;

    const auto result = sgm::cli::run(cmd);
    if (result.exit_code == sgm::cli::kExitInputError && !cmd.json) std::cerr << result.output;
    else std::cout << result.output;
    return result.exit_code;
}
