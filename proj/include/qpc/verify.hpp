#pragma once

#include <optional>
#include <string>

#include "qpc/bigint.hpp"
#include "qpc/switching.hpp"

namespace qpc {

// Resource caps for the oracle scans. A scan that cannot fit refuses with
// BudgetError; nothing is ever truncated silently.
struct VerifyBudgets {
    std::uint64_t pair_ops = kDefaultPairBudget;        // codeword pairs
    std::uint64_t ambient_ops = kDefaultAmbientBudget;  // distance evaluations
    std::uint64_t leader_entries = kDefaultLeaderCap;   // syndrome table entries
    std::uint64_t enum_words = kDefaultEnumCap;         // enumerated codewords
    unsigned workers = 1;
};

// Exact minimum pairwise Hamming distance of a word set (duplicate rows are
// ignored, set semantics). Requires at least two distinct words.
unsigned min_distance_exhaustive(const FqMatrix& words, const VerifyBudgets& budgets = {});

// Exact covering radius: max over all q^n ambient vectors of the distance to
// the nearest word.
unsigned covering_radius_exhaustive(const FqMatrix& words, const VerifyBudgets& budgets = {});

// Minimum distance of a switched code from its structure: the minimum of the
// smallest nonzero weight of R_i and, over coset pairs, of the leader weight
// of the R_i-coset of (x_t1 + l_t1 e_i) - (x_t2 + l_t2 e_i).
unsigned min_distance_structured(const SwitchedCode& sw, const VerifyBudgets& budgets = {});

// Covering radius of a switched code from its structure. The distance from x
// to the code depends only on the parity_i syndrome of x, so the scan runs
// over the q^([m]_q+1) syndromes instead of the q^n ambient vectors.
unsigned covering_radius_structured(const SwitchedCode& sw, const VerifyBudgets& budgets = {});

// Exact minimum distance of a linear code: weights 1 and 2 are decided by
// parity-column analysis, weight 3 by a two-column combination scan, and
// anything beyond by codeword enumeration within the budget.
unsigned linear_min_distance(const LinearCode& code, const VerifyBudgets& budgets = {});

// Structural linearity of a switched code, decided on the switch vector:
// since x_t1 + x_t2 = x_t3 with digitwise-summed combination coefficients,
// the code is linear iff t -> lambda_t is F_q-linear in those digits, and a
// translate of a linear code iff lambda - lambda_0 is.
bool switched_is_linear(const SwitchedCode& sw);
bool switched_is_translate_linear(const SwitchedCode& sw);

// Set linearity: contains zero and is closed under the field operations,
// decided by comparing the span size with the set size.
bool is_linear(const FqMatrix& words);

// True iff some translate of the set is linear (equivalently, C - c0 is a
// subspace for the lexicographically smallest codeword c0).
bool is_translate_linear(const FqMatrix& words);

// Weight counts A_0..A_n of the set itself.
std::vector<std::uint64_t> weight_distribution(const FqMatrix& words);

// Equivalence-invariant fingerprint. Distinct fingerprints certify
// nonequivalence under translations composed with monomial maps; equal
// fingerprints certify nothing.
//
//  - weight_distribution: lexicographically smallest weight distribution of
//    C - c0 over all codewords c0 (monomial maps preserve weights and
//    translation permutes the candidates, so the minimum is invariant);
//  - rank: dimension of span(C - c0) for the lexicographically smallest
//    codeword c0;
//  - kernel_dim: dimension over the prime subfield of {v : v + C = C}.
struct Fingerprint {
    std::vector<std::uint64_t> weight_distribution;
    std::size_t rank = 0;
    unsigned kernel_dim = 0;
    std::uint64_t size = 0;
    unsigned min_distance = 0;
    unsigned covering_radius = 0;

    bool operator==(const Fingerprint& other) const = default;
    std::string to_string() const;
};

Fingerprint invariant_fingerprint(const FqMatrix& words, const VerifyBudgets& budgets = {});

// Exact counting data behind the nonequivalence bound: with T = [m]_q - m,
// there are q^(q^T) distinct switched codes, every equivalence class has at
// most (q-1)^n n! q^n members, and the lower bound on nonequivalent codes is
// q^(q^T - n(m+2)).
struct CountingBound {
    unsigned q = 0, m = 0;
    std::uint64_t n = 0;
    std::uint64_t q_analogue = 0;
    std::uint64_t t_exponent = 0;
    BigUint codes_total_exponent;  // q^([m]_q - m)
    BigInt bound_exponent;         // q^([m]_q - m) - n(m+2)
    BigUint class_cap;             // (q-1)^n * n! * q^n
};

CountingBound counting_bound(unsigned q, unsigned m);

// Flat measurement report for one code.
struct CodeReport {
    std::size_t n = 0;
    BigUint size;
    std::optional<std::size_t> dim;  // linear codes only
    unsigned min_distance = 0;
    unsigned packing_radius = 0;
    unsigned covering_radius = 0;
    bool linear_set = false;
    std::optional<bool> translate_linear;
    bool quasi_perfect = false;
    bool perfect = false;
    std::optional<std::vector<std::uint64_t>> weights;
    std::optional<std::size_t> rank;
    std::optional<unsigned> kernel_dim;
    std::string checks;  // which oracle routes ran

    void finish_radii();  // derives packing radius and the two predicates
    std::string to_text() const;
};

}  // namespace qpc
