#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "qpc/grm.hpp"

namespace qpc {

// A weight-3 codeword of the target code. Its support is collinear and the
// corresponding parity-check columns are linearly dependent with the
// triple's coefficients.
struct Triple {
    FqVector vector;
    std::array<std::size_t, 3> support;  // ascending
    Line line;
};

// The unique triple supported on three distinct points of a line, scaled to
// coefficient 1 at the smallest support index. Throws if the points are not
// distinct or not on the line.
Triple triple_on_line(const LinearCode& code, const Line& line, std::size_t a, std::size_t b,
                      std::size_t c);

// The subspace spanned by all triples with coefficient 1 at coordinate i.
// Its dimension is n - [m]_q - 1; its parity check has [m]_q + 1 rows.
// The coset-leader table and the minimum nonzero weight are computed on
// first use and cached.
class RiSubspace {
  public:
    RiSubspace(std::size_t coord, FqMatrix basis, FqMatrix parity);

    std::size_t coord() const { return coord_; }
    const FqMatrix& basis() const { return basis_; }
    const FqMatrix& parity() const { return parity_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t n() const { return basis_.cols(); }

    const CosetLeaderTable& leader_table(std::uint64_t max_entries = kDefaultLeaderCap) const;
    unsigned min_weight(std::uint64_t max_words = kDefaultEnumCap) const;

  private:
    std::size_t coord_;
    FqMatrix basis_, parity_;
    mutable std::mutex mu_;
    mutable std::optional<CosetLeaderTable> table_;
    mutable std::optional<unsigned> min_weight_;
};

using RiPtr = std::shared_ptr<const RiSubspace>;

// Builds R_i constructively: for each of the [m]_q lines through P_i, with
// the non-P_i points p_1..p_{q-1} in ascending index order, the q-2 triples
// supported on {P_i, p_1, p_j}, j = 2..q-1, scaled to coefficient 1 at
// coordinate i. A rank other than n - [m]_q - 1 is an internal-consistency
// failure.
RiPtr build_ri(const LinearCode& code, const AffineSpace& space, std::size_t i);

// Extension of the R_i basis to a basis of the whole code, plus the full
// list of coset representatives. Representative t is the linear combination
// of the extension rows whose coefficients are the base-q digits of t,
// first row least significant; so reps.row(0) is the zero vector.
struct CosetPartition {
    FqMatrix extension;
    FqMatrix reps;
};

CosetPartition coset_partition(const LinearCode& code, const RiSubspace& ri);

// The switched code: the union over t of (R_i + x_t + lambda_t e_i). Held
// structurally; codewords are never materialized unless asked for.
class SwitchedCode {
  public:
    SwitchedCode(LinearCode base, RiPtr ri, FqMatrix extension, FqMatrix reps,
                 std::vector<Elem> lambdas);

    const LinearCode& base() const { return base_; }
    const RiPtr& ri() const { return ri_; }
    const FqMatrix& extension() const { return extension_; }
    const FqMatrix& reps() const { return reps_; }
    const std::vector<Elem>& lambdas() const { return lambdas_; }
    std::size_t coord() const { return ri_->coord(); }
    std::size_t n() const { return base_.n; }
    const FieldPtr& field() const { return base_.field; }
    std::size_t coset_count() const { return reps_.rows(); }

    // Encoded parity_i syndromes of the representatives and of e_i; the map
    // (t, lambda) -> syn(x_t) + lambda*syn(e_i) is injective because the
    // base code has no words of weight 1 or 2.
    std::uint64_t rep_syndrome(std::size_t t) const { return rep_syn_[t]; }
    std::uint64_t ei_syndrome() const { return ei_syn_; }

    // Index of the representative with the given parity_i syndrome, if any.
    std::optional<std::size_t> coset_of_syndrome(std::uint64_t syn) const;

    bool member(std::span<const Elem> y) const;
    bool member(const FqVector& y) const;

  private:
    LinearCode base_;
    RiPtr ri_;
    FqMatrix extension_;
    FqMatrix reps_;
    std::vector<Elem> lambdas_;
    std::vector<std::uint64_t> rep_syn_;
    std::uint64_t ei_syn_ = 0;
    std::unordered_map<std::uint64_t, std::size_t> rep_by_syn_;
};

// Assembles the structural code value; lambdas must have one entry per
// coset. An all-zero switch vector reproduces the base code exactly.
SwitchedCode apply_switch(const LinearCode& code, RiPtr ri, const CosetPartition& part,
                          std::vector<Elem> lambdas);

// All q^(n-m-1) codewords, coset by coset in t order, span order within a
// coset. Throws BudgetError when the word count exceeds max_words.
FqMatrix materialize(const SwitchedCode& sw, std::uint64_t max_words = kDefaultEnumCap);

// Inverse of apply_switch on a materialized word set: decodes every word's
// coset and shift, checks consistency, and returns the switch vector.
// Throws std::invalid_argument when the set is not a switch of this
// partition.
std::vector<Elem> recover_lambdas(const FqMatrix& words, const RiSubspace& ri,
                                  const FqMatrix& reps);

// Everything fixed once (q, m, i) are chosen; the usual entry point for
// building switched codes.
struct SwitchContext {
    FieldPtr field;
    std::shared_ptr<const AffineSpace> space;
    LinearCode code;
    RiPtr ri;
    CosetPartition partition;

    std::size_t coset_count() const { return partition.reps.rows(); }
    SwitchedCode switched(std::vector<Elem> lambdas) const {
        return apply_switch(code, ri, partition, std::move(lambdas));
    }
};

SwitchContext make_switch_context(unsigned q, unsigned m, std::size_t i);

}  // namespace qpc
