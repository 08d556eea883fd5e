#include "qpc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpc {

unsigned FqVector::weight() const { return hamming_weight(coords); }

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void FqMatrix::set_row(std::size_t r, std::span<const Elem> v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

void FqMatrix::append_row(std::span<const Elem> v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

unsigned hamming_weight(std::span<const Elem> v) {
    unsigned w = 0;
    for (Elem x : v) w += (x != 0);
    return w;
}

unsigned hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

RrefResult rref(const FqMatrix& m) {
    const Field& f = *m.field();
    FqMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < r.rows() && r.at(sel, c) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pr, j));
        Elem s = f.inv(r.at(pr, c));
        for (std::size_t j = c; j < r.cols(); ++j) r.at(pr, j) = f.mul(s, r.at(pr, j));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr) continue;
            Elem factor = r.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < r.cols(); ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(r), std::move(pivots), pr};
}

FqMatrix nullspace(const FqMatrix& m) {
    const Field& f = *m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    FqMatrix basis(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free_col] = 1;
        for (std::size_t j = 0; j < rr.pivots.size(); ++j)
            v[rr.pivots[j]] = f.neg(rr.mat.at(j, free_col));
        basis.append_row(v);
    }
    return basis;
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

EchelonBasis::EchelonBasis(const FqMatrix& rows) : field_(rows.field()), n_(rows.cols()) {
    for (std::size_t i = 0; i < rows.rows(); ++i) insert(rows.row(i));
}

bool EchelonBasis::insert(std::span<const Elem> v) {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    const Field& f = *field_;
    std::vector<Elem> w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Elem c = w[pivot_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(c, rows_[r][j]));
    }
    std::size_t p = 0;
    while (p < n_ && w[p] == 0) ++p;
    if (p == n_) return false;
    Elem s = f.inv(w[p]);
    for (std::size_t j = 0; j < n_; ++j) w[j] = f.mul(s, w[j]);
    // eliminate the new pivot from the existing rows to stay fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Elem c = rows_[r][p];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = f.sub(rows_[r][j], f.mul(c, w[j]));
    }
    auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), p);
    std::size_t idx = std::size_t(pos - pivot_.begin());
    pivot_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
}

bool EchelonBasis::contains(std::span<const Elem> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    const Field& f = *field_;
    std::vector<Elem> w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Elem c = w[pivot_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(c, rows_[r][j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

FqMatrix EchelonBasis::to_matrix() const {
    FqMatrix m(field_, 0, n_);
    for (const auto& r : rows_) m.append_row(r);
    return m;
}

bool span_contains(const FqMatrix& basis, std::span<const Elem> v) {
    if (v.size() != basis.cols()) throw std::invalid_argument("vector length mismatch");
    EchelonBasis eb(basis);
    return eb.contains(v);
}

bool span_contains(const FqMatrix& basis, const FqVector& v) {
    if (v.field != basis.field()) throw std::invalid_argument("mixed fields");
    return span_contains(basis, std::span<const Elem>(v.coords));
}

std::uint64_t syndrome_count(const Field& f, std::size_t rows) {
    return ipow_checked(f.q(), rows);
}

std::uint64_t encode_syndrome(const Field& f, std::span<const Elem> digits) {
    std::uint64_t idx = 0, pw = 1;
    for (Elem d : digits) {
        idx += pw * d;
        pw *= f.q();
    }
    return idx;
}

void decode_syndrome(const Field& f, std::uint64_t idx, std::span<Elem> out) {
    for (auto& d : out) {
        d = Elem(idx % f.q());
        idx /= f.q();
    }
}

void syndrome_digits(const FqMatrix& parity, std::span<const Elem> v, std::span<Elem> out) {
    if (v.size() != parity.cols()) throw std::invalid_argument("vector length mismatch");
    const Field& f = *parity.field();
    for (std::size_t r = 0; r < parity.rows(); ++r) {
        Elem acc = 0;
        auto row = parity.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) acc = f.add(acc, f.mul(row[c], v[c]));
        out[r] = acc;
    }
}

std::uint64_t syndrome(const FqMatrix& parity, std::span<const Elem> v) {
    std::vector<Elem> digits(parity.rows());
    syndrome_digits(parity, v, digits);
    return encode_syndrome(*parity.field(), digits);
}

std::uint64_t syndrome(const FqMatrix& parity, const FqVector& v) {
    if (v.field != parity.field()) throw std::invalid_argument("mixed fields");
    return syndrome(parity, std::span<const Elem>(v.coords));
}

CosetLeaderTable build_coset_leader_table(const FqMatrix& parity, std::uint64_t max_entries) {
    const Field& f = *parity.field();
    const unsigned q = f.q();
    const std::size_t s = parity.rows(), n = parity.cols();
    std::uint64_t entries;
    try {
        entries = syndrome_count(f, s);
    } catch (const std::overflow_error&) {
        throw BudgetError("syndrome space too large for a coset-leader table");
    }
    if (entries > max_entries)
        throw BudgetError("coset-leader table would need " + std::to_string(entries) +
                          " entries, cap is " + std::to_string(max_entries));
    if (n >= CosetLeaderTable::kUnreachable)
        throw BudgetError("code length too large for 8-bit leader weights");

    CosetLeaderTable table{parity, std::vector<std::uint8_t>(entries, CosetLeaderTable::kUnreachable),
                           rref(parity).rank == s, 0};

    // digit deltas of adding c * column j
    std::vector<Elem> col_delta(n * q * s);
    for (std::size_t j = 0; j < n; ++j)
        for (unsigned c = 1; c < q; ++c)
            for (std::size_t r = 0; r < s; ++r)
                col_delta[(j * q + c) * s + r] = f.mul(Elem(c), parity.at(r, j));

    std::vector<std::uint64_t> frontier{0}, next;
    table.leader_weight[0] = 0;
    std::vector<Elem> digits(s), nb(s);
    unsigned w = 0;
    while (!frontier.empty()) {
        ++w;
        next.clear();
        for (std::uint64_t idx : frontier) {
            decode_syndrome(f, idx, digits);
            for (std::size_t j = 0; j < n; ++j)
                for (unsigned c = 1; c < q; ++c) {
                    const Elem* delta = &col_delta[(j * q + c) * s];
                    for (std::size_t r = 0; r < s; ++r) nb[r] = f.add(digits[r], delta[r]);
                    std::uint64_t nidx = encode_syndrome(f, nb);
                    if (table.leader_weight[nidx] == CosetLeaderTable::kUnreachable) {
                        table.leader_weight[nidx] = std::uint8_t(w);
                        next.push_back(nidx);
                    }
                }
        }
        if (!next.empty()) table.max_weight = w;
        frontier.swap(next);
    }
    return table;
}

}  // namespace qpc
