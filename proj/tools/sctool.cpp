// sctool: compute invariants, generate instances, verify inequalities and
// search for complexes separating M_k from M_{k-1}.
//
// Exit codes: 0 all pass, 1 counterexample, 2 usage error, 3 budget exhausted.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sc/report.hpp"
#include "sc/theorems.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const sc::json& j, const std::string& out)
{
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        sc::write_json_file(out, j);
}

std::vector<int> parse_int_list(const std::string& csv)
{
    std::vector<int> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            v.push_back(std::stoi(item));
    return v;
}

struct GenArgs {
    std::string kind = "random-complex";
    int n = 6, m = 0, max_size = 0, k = 1;
    std::string leaves, name;
    std::uint64_t seed = 0;

    sc::GeneratorSpec spec() const
    {
        sc::GeneratorSpec s;
        s.kind = kind;
        s.n = n;
        s.m = m;
        s.max_size = max_size;
        s.k = k;
        s.leaves = parse_int_list(leaves);
        s.name = name;
        s.seed = seed;
        return s;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Collapsibility, M_k, Leray and domination invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_name = "rational";
    std::uint64_t budget = sc::kDefaultNodeBudget;
    std::string out;
    app.add_option("--field", field_name, "coefficient field: rational, gf2, gfP")->capture_default_str();
    app.add_option("--budget", budget, "search node budget per invariant")->capture_default_str();
    app.add_option("--out", out, "write JSON here instead of stdout");

    auto* compute = app.add_subcommand("compute", "evaluate invariants of an instance file");
    std::string file, invariants = "all";
    std::uint64_t compute_seed = 0;
    compute->add_option("file", file, "complex or hypergraph JSON file")->required();
    compute->add_option("--invariants", invariants, "comma-separated names, or all")->capture_default_str();
    compute->add_option("--seed", compute_seed, "recorded in the report");

    auto* generate = app.add_subcommand("generate", "write a generated instance");
    GenArgs gen;
    auto add_gen = [](CLI::App* c, GenArgs& g) {
        c->add_option("--kind", g.kind,
                      "random-complex | random-pure | random-kvd | random-hypergraph | random-graph | star-family | "
                      "named-example")
            ->capture_default_str();
        c->add_option("--n,--max-vertices", g.n, "vertex count or upper bound")->capture_default_str();
        c->add_option("--m", g.m, "facets or edges (0 = sampled)");
        c->add_option("--max-size", g.max_size, "largest facet or edge (0 = sampled)");
        c->add_option("--k", g.k, "k for random-kvd")->capture_default_str();
        c->add_option("--leaves", g.leaves, "star-family leaf counts, e.g. 1,1,1");
        c->add_option("--name", g.name, "named example, e.g. v6f10-6");
        c->add_option("--seed", g.seed, "generator seed")->capture_default_str();
    };
    add_gen(generate, gen);

    auto* verify = app.add_subcommand("verify", "check a registered theorem on generated instances");
    std::string theorem;
    int trials = 100;
    std::string dump_dir = ".";
    GenArgs vgen;
    vgen.kind.clear();
    vgen.n = 0;
    verify->add_option("--theorem", theorem, "theorem name (see 'list')")->required();
    verify->add_option("--trials", trials)->capture_default_str();
    verify->add_option("--seed", vgen.seed)->capture_default_str();
    verify->add_option("--max-vertices", vgen.n, "instance size cap (default per theorem)");
    verify->add_option("--kind", vgen.kind, "override the theorem's generator kind");
    verify->add_option("--max-size", vgen.max_size);
    verify->add_option("--k", vgen.k)->capture_default_str();
    verify->add_option("--dump-dir", dump_dir, "where counterexample instances are written")->capture_default_str();

    auto* search = app.add_subcommand("search", "look for M_k(X) < M_{k-1}(X)");
    int search_k = 2, search_trials = 100;
    bool named = false;
    GenArgs sgen;
    sgen.kind = "random-complex";
    search->add_option("--k", search_k)->capture_default_str();
    search->add_option("--trials", search_trials)->capture_default_str();
    search->add_option("--seed", sgen.seed)->capture_default_str();
    search->add_option("--max-vertices", sgen.n)->capture_default_str();
    search->add_option("--kind", sgen.kind)->capture_default_str();
    search->add_flag("--named", named, "scan the named examples instead of random complexes");

    auto* list = app.add_subcommand("list", "print theorem names and invariant names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        const sc::Field field = sc::Field::parse(field_name);

        if (*compute) {
            const sc::json raw = sc::read_json_file(file);
            const sc::Instance inst = sc::instance_from_json(raw);
            const auto names = sc::parse_invariant_list(invariants, inst);
            auto res = sc::compute(inst, names, {field, budget, compute_seed});
            emit(res.report, out);
            return res.budget_exhausted ? kExitBudget : kExitPass;
        }

        if (*generate) {
            const auto spec = gen.spec();
            emit(sc::to_json(sc::generate(spec)), out);
            return kExitPass;
        }

        if (*verify) {
            const auto& thm = sc::find_theorem(theorem);
            auto spec = vgen.spec();
            if (spec.kind.empty())
                spec.kind = thm.default_kind;
            if (spec.n == 0)
                spec.n = thm.default_n;
            sc::VerifyOptions opt;
            opt.field = field;
            opt.node_budget = budget;
            const auto summary = sc::verify(thm, spec, trials, vgen.seed, opt);
            for (const auto& c : summary.counterexamples) {
                const auto path = std::filesystem::path(dump_dir) /
                                  ("counterexample-" + thm.name + "-" + std::to_string(c.trial) + ".json");
                sc::write_json_file(path.string(), sc::to_json(c.instance));
                std::cerr << thm.name << ": trial " << c.trial << " failed (" << c.detail << "), wrote " << path.string()
                          << '\n';
            }
            emit(sc::to_json(summary), out);
            if (summary.fail)
                return kExitCounterexample;
            return summary.budget ? kExitBudget : kExitPass;
        }

        if (*search) {
            auto spec = sgen.spec();
            const auto found = sc::conjecture_search(search_k, spec, search_trials, sgen.seed, budget, named);
            sc::json cands = sc::json::array();
            for (const auto& c : found)
                cands.push_back({{"origin", c.origin},
                                 {"mk", c.mk},
                                 {"mk_prev", c.mk_prev},
                                 {"instance", sc::to_json(c.complex)}});
            emit({{"schema", "sc-search/1"},
                  {"k", search_k},
                  {"trials", named ? static_cast<int>(sc::named_complexes().size()) : search_trials},
                  {"seed", sgen.seed},
                  {"candidates", cands}},
                 out);
            return kExitPass;
        }

        if (*list) {
            for (const auto& t : sc::theorem_registry())
                std::cout << t.name << "\t" << t.statement << "\n";
            std::cout << "\ncomplex invariants: C M<k> Mp<k> d leray betti dim pure cm shellable kvd<k> all\n"
                      << "hypergraph invariants: gamma_i gamma_si gamma_tilde gamma_E nc C_nc d_nc M0_nc leray_nc "
                         "nc_bound all\n";
            return kExitPass;
        }
    } catch (const sc::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const sc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
