#include "qpc/switching.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpc {

Triple triple_on_line(const LinearCode& code, const Line& line, std::size_t a, std::size_t b,
                      std::size_t c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triple support points must be distinct");
    const Field& f = *code.field;
    auto param_of = [&](std::size_t p) -> Elem {
        for (std::size_t t = 0; t < line.points.size(); ++t)
            if (line.points[t] == p) return Elem(t);
        throw std::invalid_argument("support point is not on the line");
    };
    Elem ta = param_of(a), tb = param_of(b), tc = param_of(c);

    // With the points written base + t*d, the coefficients
    // (t_b - t_c, t_c - t_a, t_a - t_b) sum to zero and kill the coordinate
    // rows, so they span the nullspace of the 2 x 3 system.
    Elem ca = f.sub(tb, tc), cb = f.sub(tc, ta), cc = f.sub(ta, tb);

    std::array<std::size_t, 3> support{a, b, c};
    std::array<Elem, 3> coeff{ca, cb, cc};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = i + 1; j < 3; ++j)
            if (support[j] < support[i]) {
                std::swap(support[i], support[j]);
                std::swap(coeff[i], coeff[j]);
            }
    Elem scale = f.inv(coeff[0]);
    for (auto& x : coeff) x = f.mul(scale, x);

    FqVector v{code.field, std::vector<Elem>(code.n, 0)};
    for (unsigned i = 0; i < 3; ++i) v.coords[support[i]] = coeff[i];

    std::vector<Elem> syn(code.parity.rows());
    syndrome_digits(code.parity, v.coords, syn);
    if (hamming_weight(syn) != 0) throw std::logic_error("triple is not a codeword");
    return Triple{std::move(v), support, line};
}

RiSubspace::RiSubspace(std::size_t coord, FqMatrix basis, FqMatrix parity)
    : coord_(coord), basis_(std::move(basis)), parity_(std::move(parity)) {}

const CosetLeaderTable& RiSubspace::leader_table(std::uint64_t max_entries) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!table_) table_ = build_coset_leader_table(parity_, max_entries);
    return *table_;
}

unsigned RiSubspace::min_weight(std::uint64_t max_words) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!min_weight_) {
        std::uint64_t words;
        try {
            words = ipow_checked(basis_.field()->q(), basis_.rows());
        } catch (const std::overflow_error&) {
            throw BudgetError("subspace too large to enumerate");
        }
        if (words > max_words)
            throw BudgetError("subspace enumeration of " + std::to_string(words) +
                              " words exceeds the cap of " + std::to_string(max_words));
        unsigned best = unsigned(basis_.cols()) + 1;
        for_each_in_span(basis_, [&](std::span<const Elem> w) {
            unsigned wt = hamming_weight(w);
            if (wt != 0 && wt < best) best = wt;
        });
        min_weight_ = best;
    }
    return *min_weight_;
}

RiPtr build_ri(const LinearCode& code, const AffineSpace& space, std::size_t i) {
    const Field& f = *code.field;
    const unsigned q = f.q();
    if (q < 3) throw std::invalid_argument("triples need q >= 3");
    if (i >= space.n()) throw std::invalid_argument("coordinate index out of range");
    if (code.n != space.n()) throw std::invalid_argument("code length does not match the space");

    EchelonBasis eb(code.field, code.n);
    for (const Line& line : space.lines_through_point(i)) {
        std::vector<std::size_t> others;
        for (std::size_t p : line.points)
            if (p != i) others.push_back(p);
        std::sort(others.begin(), others.end());
        for (std::size_t j = 1; j < others.size(); ++j) {
            Triple t = triple_on_line(code, line, i, others[0], others[j]);
            // rescale to coefficient 1 at coordinate i
            Elem scale = f.inv(t.vector.coords[i]);
            for (auto& x : t.vector.coords) x = f.mul(scale, x);
            eb.insert(t.vector.coords);
        }
    }

    std::uint64_t expect = code.n - space.q_analogue() - 1;
    if (eb.rank() != expect)
        throw std::logic_error("triple span rank " + std::to_string(eb.rank()) +
                               " != n - [m]_q - 1 = " + std::to_string(expect));
    FqMatrix basis = eb.to_matrix();
    FqMatrix parity = nullspace(basis);
    return std::make_shared<const RiSubspace>(i, std::move(basis), std::move(parity));
}

CosetPartition coset_partition(const LinearCode& code, const RiSubspace& ri) {
    EchelonBasis eb(ri.basis());
    EchelonBasis code_span(code.generator);
    for (std::size_t r = 0; r < ri.basis().rows(); ++r)
        if (!code_span.contains(ri.basis().row(r)))
            throw std::invalid_argument("R_i basis is not contained in the code");

    FqMatrix extension(code.field, 0, code.n);
    for (std::size_t r = 0; r < code.generator.rows(); ++r)
        if (eb.insert(code.generator.row(r))) extension.append_row(code.generator.row(r));
    if (eb.rank() != code.dim) throw std::logic_error("basis extension failed to reach the code");

    std::uint64_t reps_count = ipow_checked(code.field->q(), extension.rows());
    if (reps_count > kDefaultEnumCap)
        throw BudgetError("coset representative list too large to materialize");
    FqMatrix reps(code.field, 0, code.n);
    for_each_in_span(extension, [&](std::span<const Elem> w) { reps.append_row(w); });

    // distinct cosets means distinct parity_i syndromes
    std::vector<std::uint64_t> syns(reps.rows());
    for (std::size_t t = 0; t < reps.rows(); ++t) syns[t] = syndrome(ri.parity(), reps.row(t));
    std::vector<std::uint64_t> sorted = syns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("coset representatives do not have distinct syndromes");

    return CosetPartition{std::move(extension), std::move(reps)};
}

SwitchedCode::SwitchedCode(LinearCode base, RiPtr ri, FqMatrix extension, FqMatrix reps,
                           std::vector<Elem> lambdas)
    : base_(std::move(base)),
      ri_(std::move(ri)),
      extension_(std::move(extension)),
      reps_(std::move(reps)),
      lambdas_(std::move(lambdas)) {
    if (lambdas_.size() != reps_.rows())
        throw std::invalid_argument("switch vector length must equal the coset count");
    for (Elem l : lambdas_)
        if (l >= base_.field->q()) throw std::invalid_argument("switch value out of range");

    const FqMatrix& parity = ri_->parity();
    rep_syn_.resize(reps_.rows());
    for (std::size_t t = 0; t < reps_.rows(); ++t) {
        rep_syn_[t] = syndrome(parity, reps_.row(t));
        rep_by_syn_.emplace(rep_syn_[t], t);
    }
    std::vector<Elem> ei(base_.n, 0);
    ei[ri_->coord()] = 1;
    ei_syn_ = syndrome(parity, ei);
}

std::optional<std::size_t> SwitchedCode::coset_of_syndrome(std::uint64_t syn) const {
    auto it = rep_by_syn_.find(syn);
    if (it == rep_by_syn_.end()) return std::nullopt;
    return it->second;
}

bool SwitchedCode::member(std::span<const Elem> y) const {
    if (y.size() != base_.n) throw std::invalid_argument("vector length mismatch");
    const Field& f = *base_.field;
    const FqMatrix& parity = ri_->parity();
    std::vector<Elem> sy(parity.rows()), se(parity.rows()), diff(parity.rows());
    syndrome_digits(parity, y, sy);
    decode_syndrome(f, ei_syn_, se);
    // at most one (t, lambda) can match
    for (unsigned lam = 0; lam < f.q(); ++lam) {
        for (std::size_t r = 0; r < diff.size(); ++r)
            diff[r] = f.sub(sy[r], f.mul(Elem(lam), se[r]));
        auto t = coset_of_syndrome(encode_syndrome(f, diff));
        if (t) return lambdas_[*t] == Elem(lam);
    }
    return false;
}

bool SwitchedCode::member(const FqVector& y) const {
    if (y.field != base_.field) throw std::invalid_argument("mixed fields");
    return member(std::span<const Elem>(y.coords));
}

SwitchedCode apply_switch(const LinearCode& code, RiPtr ri, const CosetPartition& part,
                          std::vector<Elem> lambdas) {
    return SwitchedCode(code, std::move(ri), part.extension, part.reps, std::move(lambdas));
}

FqMatrix materialize(const SwitchedCode& sw, std::uint64_t max_words) {
    const Field& f = *sw.field();
    std::uint64_t per_coset;
    try {
        per_coset = ipow_checked(f.q(), sw.ri()->dim());
        if (per_coset > max_words / std::max<std::uint64_t>(sw.coset_count(), 1))
            throw std::overflow_error("");
    } catch (const std::overflow_error&) {
        throw BudgetError("switched code too large to materialize");
    }
    FqMatrix words(sw.field(), 0, sw.n());
    std::vector<Elem> w(sw.n());
    for (std::size_t t = 0; t < sw.coset_count(); ++t) {
        auto rep = sw.reps().row(t);
        Elem lam = sw.lambdas()[t];
        for_each_in_span(sw.ri()->basis(), [&](std::span<const Elem> u) {
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(u[j], rep[j]);
            w[sw.coord()] = f.add(w[sw.coord()], lam);
            words.append_row(w);
        });
    }
    return words;
}

std::vector<Elem> recover_lambdas(const FqMatrix& words, const RiSubspace& ri,
                                  const FqMatrix& reps) {
    const Field& f = *ri.parity().field();
    const unsigned q = f.q();
    const std::size_t T = reps.rows();

    // decode map: syn(x_t) + lambda*syn(e_i) -> (t, lambda)
    std::unordered_map<std::uint64_t, std::pair<std::size_t, Elem>> decode;
    decode.reserve(T * q);
    std::vector<Elem> ei(ri.n(), 0);
    ei[ri.coord()] = 1;
    std::vector<Elem> se(ri.parity().rows()), st(ri.parity().rows()), d(ri.parity().rows());
    syndrome_digits(ri.parity(), ei, se);
    for (std::size_t t = 0; t < T; ++t) {
        syndrome_digits(ri.parity(), reps.row(t), st);
        for (unsigned lam = 0; lam < q; ++lam) {
            for (std::size_t r = 0; r < d.size(); ++r)
                d[r] = f.add(st[r], f.mul(Elem(lam), se[r]));
            auto [it, fresh] = decode.emplace(encode_syndrome(f, d), std::make_pair(t, Elem(lam)));
            if (!fresh) throw std::logic_error("coset/shift syndromes collide");
        }
    }

    std::vector<int> found(T, -1);
    std::vector<Elem> sy(ri.parity().rows());
    for (std::size_t w = 0; w < words.rows(); ++w) {
        syndrome_digits(ri.parity(), words.row(w), sy);
        auto it = decode.find(encode_syndrome(f, sy));
        if (it == decode.end())
            throw std::invalid_argument("word set is not a switch of this partition");
        auto [t, lam] = it->second;
        if (found[t] == -1)
            found[t] = lam;
        else if (found[t] != int(lam))
            throw std::invalid_argument("word set mixes shifts within one coset");
    }
    std::vector<Elem> lambdas(T);
    for (std::size_t t = 0; t < T; ++t) {
        if (found[t] == -1) throw std::invalid_argument("word set misses a coset entirely");
        lambdas[t] = Elem(found[t]);
    }
    return lambdas;
}

SwitchContext make_switch_context(unsigned q, unsigned m, std::size_t i) {
    auto [p, k] = Field::factor_prime_power(q);
    FieldPtr field = Field::get(p, k);
    auto space = std::make_shared<const AffineSpace>(field, m);
    LinearCode code = build_target_code(*space);
    RiPtr ri = build_ri(code, *space, i);
    CosetPartition part = coset_partition(code, *ri);
    return SwitchContext{field, space, std::move(code), std::move(ri), std::move(part)};
}

}  // namespace qpc
