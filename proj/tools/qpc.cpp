// qpc: build, switch and verify q-ary covering-radius-2 codes from the
// command line. See README.md for the file format and examples.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qpc/commands.hpp"

namespace {

unsigned env_workers() {
    const char* env = std::getenv("QPC_WORKERS");
    if (!env) return 0;
    return unsigned(std::strtoul(env, nullptr, 10));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Reed-Muller quasi-perfect code toolkit"};
    app.require_subcommand(1);

    qpc::RunConfig config;
    config.budgets.workers = env_workers();
    app.add_option("--seed", config.seed, "RNG seed")->each([&](const std::string&) {
        config.seed_given = true;
    });
    app.add_option("--workers", config.budgets.workers, "worker threads (0 = auto)");
    app.add_option("--budget-pairs", config.budgets.pair_ops, "codeword-pair scan cap");
    app.add_option("--budget-ambient", config.budgets.ambient_ops, "distance-evaluation cap");
    app.add_option("--out", config.out_path, "output path");

    unsigned q = 0, m = 0;
    std::optional<unsigned> order;
    std::size_t coord = 0;
    std::string in_path, lambda_spec = "random", count_spec = "1";
    bool exhaustive = false;
    std::optional<double> epsilon;

    auto* build = app.add_subcommand("build", "construct RM_q(r, m), default r = (q-1)m - 2");
    build->fallthrough();
    build->add_option("q", q, "field size (prime power)")->required();
    build->add_option("m", m, "affine dimension")->required();
    unsigned order_val = 0;
    auto* order_opt = build->add_option("--order", order_val, "code order r");

    auto* swc = app.add_subcommand("switch", "apply a switch vector to a target-code file");
    swc->fallthrough();
    swc->add_option("in", in_path, "linear QPC file")->required();
    swc->add_option("--coord", coord, "switch coordinate i (0-based)");
    swc->add_option("--lambda", lambda_spec, "digit string | random | single:t,v");

    auto* verify = app.add_subcommand("verify", "measure a QPC file and check its parameters");
    verify->fallthrough();
    verify->add_option("in", in_path, "QPC file")->required();
    verify->add_flag("--exhaustive", exhaustive, "cross-check with brute-force oracles");

    auto* family = app.add_subcommand("family", "survey switch vectors at one coordinate");
    family->fallthrough();
    family->add_option("q", q, "field size (prime power)")->required();
    family->add_option("m", m, "affine dimension")->required();
    family->add_option("i", coord, "switch coordinate (0-based)")->required();
    family->add_option("count", count_spec, "number of codes or \"all\"")->required();

    auto* bound = app.add_subcommand("bound", "exact counting-bound quantities");
    bound->fallthrough();
    bound->add_option("q", q, "field size (prime power)")->required();
    bound->add_option("m", m, "affine dimension")->required();
    double eps_val = 0.0;
    auto* eps_opt = bound->add_option("--epsilon", eps_val, "margin for c = 1/q - epsilon");

    auto* exp = app.add_subcommand("export", "re-serialize a QPC file canonically");
    exp->fallthrough();
    exp->add_option("in", in_path, "QPC file")->required();

    auto* imp = app.add_subcommand("import", "parse, validate and summarize a QPC file");
    imp->fallthrough();
    imp->add_option("in", in_path, "QPC file")->required();

    CLI11_PARSE(app, argc, argv);
    if (order_opt->count() > 0) order = order_val;
    if (eps_opt->count() > 0) epsilon = eps_val;

    try {
        qpc::CommandResult result;
        if (build->parsed())
            result = qpc::cmd_build(q, m, order, config);
        else if (swc->parsed())
            result = qpc::cmd_switch(in_path, coord, lambda_spec, config);
        else if (verify->parsed())
            result = qpc::cmd_verify(in_path, exhaustive, config);
        else if (family->parsed())
            result = qpc::cmd_family(q, m, coord, count_spec, config);
        else if (bound->parsed())
            result = qpc::cmd_bound(q, m, epsilon, config);
        else if (exp->parsed())
            result = qpc::cmd_export(in_path, config);
        else if (imp->parsed())
            result = qpc::cmd_import(in_path, config);
        std::cout << result.output;
        return result.exit_code;
    } catch (const qpc::BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return 2;
    } catch (const qpc::ParseError& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
