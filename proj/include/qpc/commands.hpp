#pragma once

#include <optional>
#include <string>

#include "qpc/qpcfile.hpp"
#include "qpc/verify.hpp"

namespace qpc {

// Shared run configuration. Identical config and seed must give byte-identical
// outputs.
struct RunConfig {
    VerifyBudgets budgets;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;  // empty = command default
};

// Exit codes: 0 verified/ok, 1 verification failed (a claimed parameter does
// not hold), 2 budget refusal, 3 malformed input.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

// build q m [--order r]: construct RM_q(r, m), default r = (q-1)m - 2, and
// write it as a linear QPC file.
CommandResult cmd_build(unsigned q, unsigned m, std::optional<unsigned> order,
                        const RunConfig& config);

// switch: apply a switch vector to a target-code file. lambda_spec is an
// explicit digit string, "random", or "single:t,v" (switch one coset, the
// single-coset construction).
CommandResult cmd_switch(const std::string& in_path, std::size_t coord,
                         const std::string& lambda_spec, const RunConfig& config);

// verify: measure a QPC file and check its claimed parameters; with
// exhaustive set, also cross-check the structured oracles against brute
// force where the budgets allow it.
CommandResult cmd_verify(const std::string& in_path, bool exhaustive, const RunConfig& config);

// family q m i count: survey switch vectors. count is "all" (enumerate, only
// when q^T fits), or a number: with a seed, seeded random sampling; without,
// the first count vectors in enumeration order.
CommandResult cmd_family(unsigned q, unsigned m, std::size_t coord, const std::string& count_spec,
                         const RunConfig& config);

// bound q m [--epsilon e]: exact counting-bound quantities; with epsilon,
// also the smallest m where the bound exceeds q^(cn), c = 1/q - e.
CommandResult cmd_bound(unsigned q, unsigned m, std::optional<double> epsilon,
                        const RunConfig& config);

// export: parse, validate and re-serialize canonically.
CommandResult cmd_export(const std::string& in_path, const RunConfig& config);

// import: parse, validate and summarize in one line.
CommandResult cmd_import(const std::string& in_path, const RunConfig& config);

// Seeded switch-vector sampler shared by switch and family.
std::vector<Elem> random_lambdas(std::uint64_t seed, std::size_t count, unsigned q);

}  // namespace qpc
