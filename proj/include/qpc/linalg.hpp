#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpc/field.hpp"

namespace qpc {

// Dense vector over GF(q). Length is fixed at creation.
struct FqVector {
    FieldPtr field;
    std::vector<Elem> coords;

    std::size_t size() const { return coords.size(); }
    unsigned weight() const;  // Hamming weight
    bool operator==(const FqVector& other) const = default;
};

// Dense row-major matrix over GF(q).
class FqMatrix {
  public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static FqMatrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const Elem> flat() const { return a_; }

    void set_row(std::size_t r, std::span<const Elem> v);
    void append_row(std::span<const Elem> v);

    bool operator==(const FqMatrix& other) const;

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

unsigned hamming_weight(std::span<const Elem> v);
unsigned hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

struct RrefResult {
    FqMatrix mat;                     // same shape, reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank;
};

// Reduced row-echelon form with deterministic pivoting: leftmost column,
// topmost nonzero row.
RrefResult rref(const FqMatrix& m);

// Basis of {x : M x^T = 0}, one row per free column in ascending column
// order. Row count is cols - rank.
FqMatrix nullspace(const FqMatrix& m);

// True iff v lies in the row space of basis, decided by rank comparison.
bool span_contains(const FqMatrix& basis, const FqVector& v);
bool span_contains(const FqMatrix& basis, std::span<const Elem> v);

// Incrementally maintained reduced echelon basis of a growing row set.
// to_matrix() yields the unique RREF of the span.
class EchelonBasis {
  public:
    EchelonBasis(FieldPtr field, std::size_t n);
    explicit EchelonBasis(const FqMatrix& rows);

    // Adds v to the span; returns true if the rank increased.
    bool insert(std::span<const Elem> v);
    bool contains(std::span<const Elem> v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return n_; }
    FqMatrix to_matrix() const;

  private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<std::vector<Elem>> rows_;  // kept fully reduced
    std::vector<std::size_t> pivot_;       // pivot column of each row
};

// Syndromes are encoded as base-q integers, row 0 least significant, so that
// exported tables are reproducible bit for bit.
std::uint64_t syndrome_count(const Field& f, std::size_t rows);
std::uint64_t encode_syndrome(const Field& f, std::span<const Elem> digits);
void decode_syndrome(const Field& f, std::uint64_t idx, std::span<Elem> out);

// parity * v^T as an encoded syndrome index.
std::uint64_t syndrome(const FqMatrix& parity, std::span<const Elem> v);
std::uint64_t syndrome(const FqMatrix& parity, const FqVector& v);  // rejects mixed fields
void syndrome_digits(const FqMatrix& parity, std::span<const Elem> v, std::span<Elem> out);

// Coset-leader weights of the code {x : parity x^T = 0}, indexed by encoded
// syndrome. leader_weight[0] == 0 and the maximum over all reachable
// syndromes is the covering radius of that code.
struct CosetLeaderTable {
    FqMatrix parity;
    std::vector<std::uint8_t> leader_weight;  // kUnreachable where no vector maps there
    bool full_rank = false;
    unsigned max_weight = 0;

    static constexpr std::uint8_t kUnreachable = 0xff;
};

// Breadth-first ball growth from syndrome 0: the weight-w layer is generated
// by all (q-1)*n single-coordinate modifications of the weight-(w-1) layer,
// and each syndrome keeps the weight of its first visit. When parity is not
// full row rank the table covers only the image subgroup (full_rank reports
// this). Throws BudgetError when q^rows exceeds max_entries.
CosetLeaderTable build_coset_leader_table(const FqMatrix& parity,
                                          std::uint64_t max_entries = kDefaultLeaderCap);

// Visits every vector of the row span of basis exactly once, starting from
// the zero vector, in the base-q counter order of combination coefficients
// (coefficient of row 0 least significant). The word is updated in place by
// the single digit that changes per step, carries included.
template <typename Visitor>
void for_each_in_span(const FqMatrix& basis, Visitor&& visit) {
    const Field& fld = *basis.field();
    const unsigned q = fld.q();
    const std::size_t k = basis.rows(), n = basis.cols();
    std::vector<Elem> word(n, 0);
    visit(std::span<const Elem>(word));
    if (k == 0) return;
    const std::uint64_t total = ipow_checked(q, k);
    std::vector<unsigned> digit(k, 0);
    for (std::uint64_t c = 1; c < total; ++c) {
        std::size_t j = 0;
        while (true) {
            unsigned old = digit[j];
            unsigned next = (old + 1 == q) ? 0 : old + 1;
            digit[j] = next;
            Elem delta = fld.sub(Elem(next), Elem(old));
            auto row = basis.row(j);
            for (std::size_t t = 0; t < n; ++t) word[t] = fld.add(word[t], fld.mul(delta, row[t]));
            if (next != 0) break;
            ++j;
        }
        visit(std::span<const Elem>(word));
    }
}

}  // namespace qpc
