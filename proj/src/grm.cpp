#include "qpc/grm.hpp"

#include <stdexcept>

namespace qpc {

namespace {

// C(a, b) for a, b >= 0, exact; the stepwise division is always exact.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

void check_order(unsigned q, unsigned m, unsigned r) {
    if (r > (q - 1) * m)
        throw std::invalid_argument("order r out of range [0, (q-1)m]");
}

}  // namespace

std::uint64_t grm_dimension(unsigned q, unsigned m, unsigned r) {
    check_order(q, m, r);
    std::int64_t sum = 0;
    for (unsigned k = 0; k <= m; ++k) {
        if (std::int64_t(r) - std::int64_t(k) * q < 0) break;  // later terms vanish too
        std::uint64_t term = binomial(m, k) * binomial(m + r - k * q, r - k * q);
        sum += (k % 2 == 0) ? std::int64_t(term) : -std::int64_t(term);
    }
    if (sum < 0) throw std::logic_error("dimension formula produced a negative value");
    return std::uint64_t(sum);
}

std::uint64_t grm_min_distance(unsigned q, unsigned m, unsigned r) {
    check_order(q, m, r);
    unsigned a = r / (q - 1), b = r % (q - 1);
    if (a == m) return 1;  // r == (q-1)m, the full space
    return std::uint64_t(q - b) * ipow_checked(q, m - a - 1);
}

unsigned dual_order(unsigned q, unsigned m, unsigned r) {
    if (r >= (q - 1) * m) throw std::invalid_argument("dual order requires r < (q-1)m");
    return (q - 1) * m - 1 - r;
}

LinearCode build_grm(const AffineSpace& space, unsigned r) {
    const Field& f = *space.field();
    const unsigned q = f.q(), m = space.m();
    check_order(q, m, r);
    const std::size_t n = space.n();

    // Evaluate every reduced monomial X_1^a_1 ... X_m^a_m with a_j <= q-1
    // and total degree <= r. X^q equals X pointwise, so reduced exponents
    // lose nothing, and their count independently matches the dimension
    // formula.
    FqMatrix eval_rows(space.field(), 0, n);
    std::vector<unsigned> exps(m, 0);
    std::vector<Elem> row(n);
    while (true) {
        unsigned total = 0;
        for (unsigned e : exps) total += e;
        if (total <= r) {
            for (std::size_t i = 0; i < n; ++i) {
                auto pt = space.point(i);
                Elem v = 1;
                for (unsigned j = 0; j < m; ++j) v = f.mul(v, f.pow(pt[j], exps[j]));
                row[i] = v;
            }
            eval_rows.append_row(row);
        }
        unsigned j = 0;
        while (j < m && exps[j] == q - 1) exps[j++] = 0;
        if (j == m) break;
        ++exps[j];
    }

    RrefResult rr = rref(eval_rows);
    std::uint64_t want_dim = grm_dimension(q, m, r);
    if (rr.rank != want_dim)
        throw std::logic_error("evaluation rank disagrees with the dimension formula");

    FqMatrix generator(space.field(), 0, n);
    for (std::size_t i = 0; i < rr.rank; ++i) generator.append_row(rr.mat.row(i));

    LinearCode code{space.field(), n, generator, nullspace(generator), rr.rank,
                    LinearCode::GrmTag{r, m}};
    return code;
}

LinearCode build_target_code(const AffineSpace& space) {
    const Field& f = *space.field();
    const unsigned q = f.q(), m = space.m();
    if (q < 3) throw std::invalid_argument("the covering-radius-2 construction needs q >= 3");
    const unsigned r = (q - 1) * m - 2;
    LinearCode code = build_grm(space, r);

    // explicit parity check: all-ones row, then the point coordinates
    FqMatrix parity(space.field(), m + 1, space.n());
    for (std::size_t i = 0; i < space.n(); ++i) {
        parity.at(0, i) = 1;
        auto pt = space.point(i);
        for (unsigned j = 0; j < m; ++j) parity.at(1 + j, i) = pt[j];
    }
    if (rref(parity).rank != m + 1)
        throw std::logic_error("explicit parity check is not full rank");
    if (code.dim != space.n() - m - 1)
        throw std::logic_error("target code dimension is not n - m - 1");
    for (std::size_t i = 0; i < code.generator.rows(); ++i) {
        std::vector<Elem> s(parity.rows());
        syndrome_digits(parity, code.generator.row(i), s);
        if (hamming_weight(s) != 0)
            throw std::logic_error("generator is not orthogonal to the explicit parity check");
    }
    code.parity = parity;
    return code;
}

}  // namespace qpc
