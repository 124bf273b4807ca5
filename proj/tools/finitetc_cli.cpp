#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "finitetc/complexity.hpp"
#include "finitetc/homotopy.hpp"
#include "finitetc/io.hpp"
#include "finitetc/simplicial.hpp"
#include "finitetc/subdivision.hpp"
#include "finitetc/verify.hpp"
#include "finitetc/zoo.hpp"
#include "json.hpp"

namespace ftc = finitetc;

namespace {

struct CommonOpts {
    std::string input;
    int n = 2;
    int m = -1;
    int k = 0;
    int k_max = 2;
    std::string variant = "wedge";
    std::string format = "text";
    bool emit_witness = false;
    bool timing = false;
    int jobs = 1;
    std::size_t budget_nodes = 0;
    double budget_seconds = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    if (needs_input)
        cmd->add_option("input", o.input, "zoo name (sphere:1, fence:m, ...) or file path")
            ->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--emit-witness", o.emit_witness, "attach section witnesses to the report");
    cmd->add_flag("--timing", o.timing, "include elapsed_ms in JSON output");
    cmd->add_option("--jobs", o.jobs, "worker count (reserved; computations are serial)");
    cmd->add_option("--budget-nodes", o.budget_nodes, "override all search node budgets");
    cmd->add_option("--budget-seconds", o.budget_seconds,
                    "wall-clock cap for multi-level runs (0 = none)");
}

ftc::ComputeConfig make_config(const CommonOpts& o) {
    ftc::ComputeConfig cfg;
    if (o.budget_nodes > 0) {
        cfg.budgets.homotopy_nodes = o.budget_nodes;
        cfg.budgets.csp_nodes = o.budget_nodes;
        cfg.budgets.enumeration_evals = o.budget_nodes;
        cfg.budgets.cover_nodes = o.budget_nodes;
        cfg.budgets.contiguity_maps = o.budget_nodes;
    }
    cfg.emit_witness = o.emit_witness;
    cfg.jobs = o.jobs;
    cfg.time_budget_seconds = o.budget_seconds;
    return cfg;
}

int report_exit(const ftc::ComplexityReport& r) {
    if (r.value_kind == ftc::ComplexityReport::ValueKind::Unknown) return 2;
    return r.exact ? 0 : 2;
}

void print_report(const ftc::ComplexityReport& r, const CommonOpts& o) {
    if (o.format == "json")
        std::cout << ftc::report_to_json(r, o.timing) << "\n";
    else
        std::cout << ftc::report_to_text(r);
}

// `sc` accepts a complex file, or a poset source whose order complex is used.
ftc::ComplexPtr load_complex_like(const std::string& source) {
    if (ftc::is_builtin_space(source)) return ftc::order_complex(*ftc::builtin_space(source));
    try {
        return ftc::load_complex(source);
    } catch (const ftc::ParseError&) {
        return ftc::order_complex(*ftc::load_space(source));
    }
}

int run_info(const CommonOpts& o) {
    auto p = ftc::load_space(o.input);
    auto core_data = ftc::compute_core(*p);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["elements"] = p->size();
        j["hasse_edges"] = p->hasse().size();
        j["connected"] = p->is_connected();
        j["core_size"] = core_data.core->size();
        j["contractible"] = ftc::is_contractible(*p);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << o.input << ": " << p->size() << " elements, " << p->hasse().size()
                  << " Hasse edges, " << (p->is_connected() ? "connected" : "disconnected")
                  << ", core size " << core_data.core->size() << ", "
                  << (ftc::is_contractible(*p) ? "contractible" : "not contractible") << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int random_count, int max_size, std::uint64_t seed,
               const CommonOpts& o) {
    auto checks = ftc::verify_suite(suite, random_count, max_size, seed, make_config(o));
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << c.name << ": " << (c.passed() ? "pass" : "FAIL") << " (" << c.checked
                  << " checks, " << c.violations << " violations)\n";
        for (const auto& msg : c.messages) std::cout << "  " << msg << "\n";
        ok = ok && c.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of finite topological spaces"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string suite = "all";
    int random_count = 0;
    int max_size = 5;
    std::uint64_t seed = 0;

    auto* info = app.add_subcommand("info", "element count, connectivity, core, contractibility");
    add_common(info, o);

    auto* cat_cmd = app.add_subcommand("cat", "minimum cover by open sets contractible in the space");
    add_common(cat_cmd, o);

    auto* cc_cmd = app.add_subcommand(
        "cc", "higher complexity cc_n; with --m, the bounded variant cc_{n,m}");
    add_common(cc_cmd, o);
    cc_cmd->add_option("--n", o.n, "number of factors (default 2)");
    cc_cmd->add_option("--m", o.m, "fence length for the bounded variant");
    cc_cmd->add_option("--variant", o.variant, "bounded variant shape")
        ->check(CLI::IsMember({"wedge", "linear"}));

    auto* cck_cmd = app.add_subcommand("cck", "cc^k_n on the k-th barycentric subdivision");
    add_common(cck_cmd, o);
    cck_cmd->add_option("--n", o.n, "number of factors (default 2)");
    cck_cmd->add_option("--k", o.k, "subdivision depth")->required();

    auto* ccinf_cmd = app.add_subcommand("ccinf", "cc^inf_n = min over k <= k-max of cc^k_n");
    add_common(ccinf_cmd, o);
    ccinf_cmd->add_option("--n", o.n, "number of factors (default 2)");
    ccinf_cmd->add_option("--k-max", o.k_max, "subdivision depth bound (default 2)");

    auto* sc_cmd = app.add_subcommand("sc", "simplicial complexity via the face poset");
    add_common(sc_cmd, o);
    sc_cmd->add_option("--n", o.n, "number of factors (default 2)");
    sc_cmd->add_option("--k-max", o.k_max, "subdivision depth bound (default 2)");

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("suite", suite, "lemmas | corollaries | transfer | all")
        ->check(CLI::IsMember({"lemmas", "corollaries", "transfer", "all"}));
    verify_cmd->add_option("--random", random_count, "number of random posets to add");
    verify_cmd->add_option("--max-size", max_size, "max random poset size");
    verify_cmd->add_option("--seed", seed, "random seed");
    add_common(verify_cmd, o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return run_info(o);
        if (verify_cmd->parsed()) return run_verify(suite, random_count, max_size, seed, o);
        ftc::ComputeConfig cfg = make_config(o);
        ftc::ComplexityReport r;
        if (cat_cmd->parsed()) {
            r = ftc::cat(ftc::load_space(o.input), cfg);
        } else if (cc_cmd->parsed()) {
            auto p = ftc::load_space(o.input);
            if (o.m >= 0)
                r = ftc::cc_nm(p, o.n, o.m,
                               o.variant == "linear" ? ftc::Variant::Linear
                                                     : ftc::Variant::Wedge,
                               cfg);
            else
                r = ftc::cc_n(p, o.n, cfg);
        } else if (cck_cmd->parsed()) {
            r = ftc::cc_k_n(ftc::load_space(o.input), o.n, o.k, cfg);
        } else if (ccinf_cmd->parsed()) {
            r = ftc::cc_inf_n(ftc::load_space(o.input), o.n, o.k_max, cfg);
        } else if (sc_cmd->parsed()) {
            r = ftc::sc_n_of_complex(load_complex_like(o.input), o.n, o.k_max, cfg);
        }
        print_report(r, o);
        return report_exit(r);
    } catch (const ftc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
