#include "qpc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace qpc {

namespace {

// Distinct rows in lexicographic order.
std::vector<std::vector<Elem>> sorted_unique_rows(const FqMatrix& words) {
    std::vector<std::vector<Elem>> rows;
    rows.reserve(words.rows());
    for (std::size_t i = 0; i < words.rows(); ++i) {
        auto r = words.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

unsigned min_distance_exhaustive(const FqMatrix& words, const VerifyBudgets& budgets) {
    // budget the raw input before any per-row allocation
    std::uint64_t pairs = std::uint64_t(words.rows()) * (words.rows() - 1) / 2;
    if (pairs > budgets.pair_ops)
        throw BudgetError("pair scan of " + std::to_string(pairs) + " exceeds the budget of " +
                          std::to_string(budgets.pair_ops));
    auto rows = sorted_unique_rows(words);
    if (rows.size() < 2)
        throw std::invalid_argument("minimum distance needs at least two distinct words");
    unsigned best = unsigned(rows[0].size()) + 1;
    for (std::size_t i = 0; i < rows.size() && best > 1; ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            unsigned d = hamming_distance(rows[i], rows[j]);
            if (d < best) {
                best = d;
                if (best == 1) break;
            }
        }
    return best;
}

unsigned covering_radius_exhaustive(const FqMatrix& words, const VerifyBudgets& budgets) {
    if (words.rows() == 0) throw std::invalid_argument("covering radius of an empty set");
    const Field& f = *words.field();
    const std::size_t n = words.cols();
    std::uint64_t ambient;
    try {
        ambient = ipow_checked(f.q(), n);
        if (ambient > budgets.ambient_ops / words.rows()) throw std::overflow_error("");
    } catch (const std::overflow_error&) {
        throw BudgetError("ambient scan exceeds the distance-evaluation budget");
    }

    const unsigned workers =
        unsigned(std::min<std::uint64_t>(resolve_workers(budgets.workers), ambient));
    std::atomic<unsigned> global_max{0};

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Elem> x(n);
        decode_syndrome(f, lo, x);  // ambient vectors count in the same base-q order
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx != lo) {
                // odometer step
                for (std::size_t j = 0; j < n; ++j) {
                    if (x[j] + 1u < f.q()) {
                        x[j] = Elem(x[j] + 1);
                        break;
                    }
                    x[j] = 0;
                }
            }
            unsigned skip_at = global_max.load(std::memory_order_relaxed);
            unsigned best = unsigned(n) + 1;
            for (std::size_t w = 0; w < words.rows(); ++w) {
                unsigned d = hamming_distance(x, words.row(w));
                if (d < best) {
                    best = d;
                    if (best <= skip_at) break;  // cannot raise the maximum
                }
            }
            unsigned cur = global_max.load(std::memory_order_relaxed);
            while (best > cur &&
                   !global_max.compare_exchange_weak(cur, best, std::memory_order_relaxed)) {
            }
        }
    };

    if (workers <= 1) {
        scan(0, ambient);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (ambient + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk, hi = std::min(ambient, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(scan, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return global_max.load();
}

unsigned min_distance_structured(const SwitchedCode& sw, const VerifyBudgets& budgets) {
    const Field& f = *sw.field();
    unsigned best;
    try {
        best = sw.ri()->min_weight(budgets.enum_words);
    } catch (const BudgetError&) {
        // R_i is spanned by weight-3 codewords of the base code (each one
        // checked at construction), so when the base minimum distance is 3
        // the subspace minimum is exactly 3 without enumerating it.
        if (linear_min_distance(sw.base(), budgets) != 3) throw;
        best = 3;
    }
    const std::size_t T = sw.coset_count();
    if (T > 1) {
        std::uint64_t pairs = std::uint64_t(T) * (T - 1) / 2;
        if (pairs > budgets.pair_ops) throw BudgetError("coset pair scan exceeds the pair budget");
        const CosetLeaderTable& lt = sw.ri()->leader_table(budgets.leader_entries);
        const std::size_t s = sw.ri()->parity().rows();
        // shifted representative syndromes c_t = syn(x_t) + lambda_t syn(e_i)
        std::vector<Elem> se(s);
        decode_syndrome(f, sw.ei_syndrome(), se);
        std::vector<std::vector<Elem>> shifted(T, std::vector<Elem>(s));
        for (std::size_t t = 0; t < T; ++t) {
            decode_syndrome(f, sw.rep_syndrome(t), shifted[t]);
            for (std::size_t r = 0; r < s; ++r)
                shifted[t][r] = f.add(shifted[t][r], f.mul(sw.lambdas()[t], se[r]));
        }
        std::vector<Elem> diff(s);
        for (std::size_t t1 = 0; t1 < T && best > 1; ++t1)
            for (std::size_t t2 = t1 + 1; t2 < T; ++t2) {
                for (std::size_t r = 0; r < s; ++r)
                    diff[r] = f.sub(shifted[t1][r], shifted[t2][r]);
                unsigned lw = lt.leader_weight[encode_syndrome(f, diff)];
                if (lw < best) best = lw;
            }
    }
    return best;
}

unsigned covering_radius_structured(const SwitchedCode& sw, const VerifyBudgets& budgets) {
    const Field& f = *sw.field();
    const CosetLeaderTable& lt = sw.ri()->leader_table(budgets.leader_entries);
    const std::size_t s = sw.ri()->parity().rows();
    const std::size_t T = sw.coset_count();
    const std::uint64_t space = syndrome_count(f, s);
    if (T != 0 && space > budgets.ambient_ops / T)
        throw BudgetError("syndrome-space scan exceeds the budget");

    std::vector<Elem> se(s);
    decode_syndrome(f, sw.ei_syndrome(), se);
    std::vector<std::vector<Elem>> shifted(T, std::vector<Elem>(s));
    for (std::size_t t = 0; t < T; ++t) {
        decode_syndrome(f, sw.rep_syndrome(t), shifted[t]);
        for (std::size_t r = 0; r < s; ++r)
            shifted[t][r] = f.add(shifted[t][r], f.mul(sw.lambdas()[t], se[r]));
    }

    // distance to the code is constant on parity_i cosets of the ambient
    // space, so max over syndromes of min over cosets is exact
    unsigned rho = 0;
    std::vector<Elem> digits(s), diff(s);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        decode_syndrome(f, idx, digits);
        unsigned best = CosetLeaderTable::kUnreachable;
        for (std::size_t t = 0; t < T; ++t) {
            for (std::size_t r = 0; r < s; ++r) diff[r] = f.sub(digits[r], shifted[t][r]);
            unsigned lw = lt.leader_weight[encode_syndrome(f, diff)];
            if (lw < best) {
                best = lw;
                if (best <= rho) break;
            }
        }
        if (best > rho) rho = best;
    }
    return rho;
}

namespace {

// q^rank == size, evaluated without overflow.
bool span_size_matches(unsigned q, std::size_t rank, std::uint64_t size) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        if (total > size / q) return false;
        total *= q;
    }
    return total == size;
}

}  // namespace

unsigned linear_min_distance(const LinearCode& code, const VerifyBudgets& budgets) {
    const Field& f = *code.field;
    const FqMatrix& parity = code.parity;
    const std::size_t n = code.n, s = parity.rows();
    if (code.dim == 0) throw std::invalid_argument("minimum distance of the zero code");
    if (s == 0) return 1;  // the full space

    // weight 1: a zero parity column
    std::vector<Elem> col(s);
    auto column = [&](std::size_t j, std::span<Elem> out) {
        for (std::size_t r = 0; r < s; ++r) out[r] = parity.at(r, j);
    };
    for (std::size_t j = 0; j < n; ++j) {
        column(j, col);
        if (hamming_weight(col) == 0) return 1;
    }

    // weight 2: two linearly dependent columns, i.e. equal after scaling the
    // last nonzero entry to 1
    auto normalize = [&](std::span<Elem> v) {
        std::size_t last = s;
        for (std::size_t r = s; r-- > 0;)
            if (v[r] != 0) {
                last = r;
                break;
            }
        Elem inv = f.inv(v[last]);
        for (std::size_t r = 0; r < s; ++r) v[r] = f.mul(inv, v[r]);
    };
    std::map<std::vector<Elem>, std::vector<std::size_t>> classes;
    for (std::size_t j = 0; j < n; ++j) {
        column(j, col);
        normalize(col);
        auto& members = classes[std::vector<Elem>(col.begin(), col.end())];
        members.push_back(j);
        if (members.size() > 1) return 2;
    }

    // weight 3: alpha h_a + beta h_b proportional to a third column
    std::vector<Elem> ca(s), cb(s), v(s);
    for (std::size_t a = 0; a < n; ++a) {
        column(a, ca);
        for (std::size_t b = a + 1; b < n; ++b) {
            column(b, cb);
            for (unsigned alpha = 1; alpha < f.q(); ++alpha)
                for (unsigned beta = 1; beta < f.q(); ++beta) {
                    for (std::size_t r = 0; r < s; ++r)
                        v[r] = f.add(f.mul(Elem(alpha), ca[r]), f.mul(Elem(beta), cb[r]));
                    if (hamming_weight(v) == 0) continue;  // the weight-2 case, ruled out
                    normalize(v);
                    auto it = classes.find(v);
                    if (it == classes.end()) continue;
                    for (std::size_t c : it->second)
                        if (c != a && c != b) return 3;
                }
        }
    }

    // beyond 3: enumerate the code
    std::uint64_t words;
    try {
        words = ipow_checked(f.q(), code.dim);
    } catch (const std::overflow_error&) {
        throw BudgetError("codeword enumeration too large");
    }
    if (words > budgets.enum_words)
        throw BudgetError("codeword enumeration of " + std::to_string(words) +
                          " exceeds the cap of " + std::to_string(budgets.enum_words));
    unsigned best = unsigned(n) + 1;
    for_each_in_span(code.generator, [&](std::span<const Elem> w) {
        unsigned wt = hamming_weight(w);
        if (wt != 0 && wt < best) best = wt;
    });
    return best;
}

namespace {

// lambda_t == sum_j digit_j(t) * lambda(basis vector j) for all t
bool lambda_map_is_linear(const SwitchedCode& sw, std::span<const Elem> lam) {
    const Field& f = *sw.field();
    const std::size_t ext = sw.extension().rows();
    std::vector<Elem> digits(ext);
    for (std::size_t t = 0; t < lam.size(); ++t) {
        decode_syndrome(f, t, digits);  // combination digits of representative t
        Elem expect = 0;
        std::uint64_t basis_index = 1;
        for (std::size_t j = 0; j < ext; ++j) {
            expect = f.add(expect, f.mul(digits[j], lam[basis_index]));
            basis_index *= f.q();
        }
        if (lam[t] != expect) return false;
    }
    return true;
}

}  // namespace

bool switched_is_linear(const SwitchedCode& sw) {
    if (sw.extension().rows() == 0) return sw.lambdas()[0] == 0;
    return sw.lambdas()[0] == 0 && lambda_map_is_linear(sw, sw.lambdas());
}

bool switched_is_translate_linear(const SwitchedCode& sw) {
    if (sw.extension().rows() == 0) return true;
    const Field& f = *sw.field();
    std::vector<Elem> shifted(sw.lambdas());
    Elem l0 = shifted[0];
    for (auto& l : shifted) l = f.sub(l, l0);
    return lambda_map_is_linear(sw, shifted);
}

bool is_linear(const FqMatrix& words) {
    auto rows = sorted_unique_rows(words);
    if (rows.empty()) return false;
    bool has_zero = std::all_of(rows[0].begin(), rows[0].end(), [](Elem x) { return x == 0; });
    if (!has_zero) return false;
    EchelonBasis eb(words.field(), words.cols());
    for (const auto& r : rows) eb.insert(r);
    return span_size_matches(words.field()->q(), eb.rank(), rows.size());
}

bool is_translate_linear(const FqMatrix& words) {
    auto rows = sorted_unique_rows(words);
    if (rows.empty()) return false;
    const Field& f = *words.field();
    const auto& c0 = rows[0];
    EchelonBasis eb(words.field(), words.cols());
    std::vector<Elem> diff(words.cols());
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = f.sub(r[j], c0[j]);
        eb.insert(diff);
    }
    return span_size_matches(f.q(), eb.rank(), rows.size());
}

std::vector<std::uint64_t> weight_distribution(const FqMatrix& words) {
    std::vector<std::uint64_t> counts(words.cols() + 1, 0);
    for (std::size_t i = 0; i < words.rows(); ++i) ++counts[hamming_weight(words.row(i))];
    return counts;
}

Fingerprint invariant_fingerprint(const FqMatrix& words, const VerifyBudgets& budgets) {
    auto rows = sorted_unique_rows(words);
    if (rows.empty()) throw std::invalid_argument("fingerprint of an empty set");
    const Field& f = *words.field();
    const std::size_t n = words.cols(), sz = rows.size();
    if (std::uint64_t(sz) * sz > 2 * budgets.pair_ops)
        throw BudgetError("fingerprint pair scans exceed the budget");

    Fingerprint fp;
    fp.size = sz;

    // lexicographically smallest translate weight distribution
    std::vector<std::uint64_t> best_dist, cur(n + 1);
    for (const auto& c0 : rows) {
        std::fill(cur.begin(), cur.end(), 0);
        for (const auto& c : rows) ++cur[hamming_distance(c, c0)];
        if (best_dist.empty() || cur < best_dist) best_dist = cur;
    }
    fp.weight_distribution = best_dist;

    // rank about the lexicographically smallest codeword
    {
        const auto& c0 = rows[0];
        EchelonBasis eb(words.field(), n);
        std::vector<Elem> diff(n);
        for (const auto& r : rows) {
            for (std::size_t j = 0; j < n; ++j) diff[j] = f.sub(r[j], c0[j]);
            eb.insert(diff);
        }
        fp.rank = eb.rank();
    }

    // kernel {v : v + C = C}; candidates are C - c0, membership checked
    // against the sorted set
    {
        const auto& c0 = rows[0];
        std::vector<Elem> v(n), w(n);
        std::uint64_t kernel_size = 0;
        for (const auto& c : rows) {
            for (std::size_t j = 0; j < n; ++j) v[j] = f.sub(c[j], c0[j]);
            bool period = true;
            for (const auto& r : rows) {
                for (std::size_t j = 0; j < n; ++j) w[j] = f.add(r[j], v[j]);
                if (!std::binary_search(rows.begin(), rows.end(), w)) {
                    period = false;
                    break;
                }
            }
            if (period) ++kernel_size;
        }
        unsigned dim = 0;
        std::uint64_t s = kernel_size;
        while (s > 1 && s % f.p() == 0) {
            s /= f.p();
            ++dim;
        }
        if (s != 1) throw std::logic_error("kernel size is not a power of the characteristic");
        fp.kernel_dim = dim;
    }

    fp.min_distance = min_distance_exhaustive(words, budgets);
    fp.covering_radius = covering_radius_exhaustive(words, budgets);
    return fp;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "size=" << size << ";d=" << min_distance << ";rho=" << covering_radius
       << ";rank=" << rank << ";ker=" << kernel_dim << ";wd=";
    for (std::size_t i = 0; i < weight_distribution.size(); ++i) {
        if (i) os << ',';
        os << weight_distribution[i];
    }
    return os.str();
}

CountingBound counting_bound(unsigned q, unsigned m) {
    if (q < 3 || m < 2) throw std::invalid_argument("counting bound needs q >= 3, m >= 2");
    CountingBound cb;
    cb.q = q;
    cb.m = m;
    cb.n = ipow_checked(q, m);
    cb.q_analogue = (cb.n - 1) / (q - 1);
    cb.t_exponent = cb.q_analogue - m;
    if (cb.t_exponent > (1u << 14))
        throw BudgetError("counting-bound exponent too large to materialize exactly");
    if (cb.n > 4096) throw BudgetError("factorial cap exceeded for the class bound");
    cb.codes_total_exponent = BigUint::power(q, cb.t_exponent);
    cb.bound_exponent =
        BigInt::difference(cb.codes_total_exponent, BigUint(cb.n * (m + 2)));
    cb.class_cap =
        BigUint::power(q - 1, cb.n) * BigUint::factorial(cb.n) * BigUint::power(q, cb.n);
    return cb;
}

void CodeReport::finish_radii() {
    packing_radius = (min_distance - 1) / 2;
    quasi_perfect = covering_radius == packing_radius + 1;
    perfect = covering_radius == packing_radius;
}

std::string CodeReport::to_text() const {
    std::ostringstream os;
    os << "n=" << n << '\n';
    os << "size=" << size.to_string() << '\n';
    if (dim) os << "dim=" << *dim << '\n';
    os << "d=" << min_distance << '\n';
    os << "packing_radius=" << packing_radius << '\n';
    os << "covering_radius=" << covering_radius << '\n';
    os << "linear=" << (linear_set ? "yes" : "no") << '\n';
    if (translate_linear) os << "translate_linear=" << (*translate_linear ? "yes" : "no") << '\n';
    os << "quasi_perfect=" << (quasi_perfect ? "yes" : "no") << '\n';
    os << "perfect=" << (perfect ? "yes" : "no") << '\n';
    if (weights) {
        os << "weight_distribution=";
        for (std::size_t i = 0; i < weights->size(); ++i) {
            if (i) os << ',';
            os << (*weights)[i];
        }
        os << '\n';
    }
    if (rank) os << "rank=" << *rank << '\n';
    if (kernel_dim) os << "kernel_dim=" << *kernel_dim << '\n';
    os << "checks=" << checks << '\n';
    return os.str();
}

}  // namespace qpc
