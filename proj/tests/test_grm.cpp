#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpc/grm.hpp"

using namespace qpc;

namespace {

AffineSpace space_of(unsigned q, unsigned m) {
    auto [p, k] = Field::factor_prime_power(q);
    return AffineSpace(Field::get(p, k), m);
}

// smallest nonzero codeword weight by full enumeration
unsigned oracle_min_weight(const LinearCode& code) {
    unsigned best = unsigned(code.n) + 1;
    for_each_in_span(code.generator, [&](std::span<const Elem> w) {
        unsigned wt = hamming_weight(w);
        if (wt != 0 && wt < best) best = wt;
    });
    return best;
}

}  // namespace

TEST_CASE("dimension formula values") {
    CHECK(grm_dimension(3, 2, 2) == 6);
    CHECK(grm_dimension(3, 2, 0) == 1);
    CHECK(grm_dimension(5, 2, 0) == 1);
    CHECK(grm_dimension(3, 2, 4) == 9);  // full space at r = (q-1)m
    CHECK(grm_dimension(4, 2, 4) == 13);
    CHECK(grm_dimension(5, 2, 6) == 22);
    CHECK(grm_dimension(3, 3, 4) == 23);
    CHECK(grm_dimension(3, 1, 0) == 1);
    CHECK_THROWS_AS(grm_dimension(3, 2, 5), std::invalid_argument);
}

TEST_CASE("minimum distance formula values") {
    CHECK(grm_min_distance(3, 2, 2) == 3);
    CHECK(grm_min_distance(5, 2, 6) == 3);
    CHECK(grm_min_distance(3, 2, 0) == 9);  // constants: d = n
    CHECK(grm_min_distance(3, 2, 4) == 1);  // full space
    // order (q-1)m - 2 gives 3 for every q >= 3
    for (unsigned q : {3u, 4u, 5u, 7u, 9u})
        for (unsigned m = 1; m <= 3; ++m) CHECK(grm_min_distance(q, m, (q - 1) * m - 2) == 3);
    CHECK_THROWS_AS(grm_min_distance(3, 2, 5), std::invalid_argument);
}

TEST_CASE("dual order and dimension duality") {
    CHECK(dual_order(3, 2, 2) == 1);
    CHECK(dual_order(5, 2, 0) == 7);
    CHECK_THROWS_AS(dual_order(3, 2, 4), std::invalid_argument);
    for (auto [q, m] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}})
        for (unsigned r = 0; r < (q - 1) * m; ++r) {
            CAPTURE(q); CAPTURE(m); CAPTURE(r);
            CHECK(grm_dimension(q, m, r) + grm_dimension(q, m, dual_order(q, m, r)) ==
                  ipow_checked(q, m));
        }
}

TEST_CASE("evaluation rank equals the dimension formula for every order") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
        AffineSpace space = space_of(q, m);
        for (unsigned r = 0; r <= (q - 1) * m; ++r) {
            CAPTURE(q); CAPTURE(m); CAPTURE(r);
            LinearCode code = build_grm(space, r);
            CHECK(code.dim == grm_dimension(q, m, r));
            CHECK(code.parity.rows() == code.n - code.dim);
            // generator orthogonal to parity
            for (std::size_t i = 0; i < code.generator.rows(); ++i)
                CHECK(syndrome(code.parity, code.generator.row(i)) == 0);
        }
    }
}

TEST_CASE("exhaustive minimum weight equals the distance formula at desk scale") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
        AffineSpace space = space_of(q, m);
        for (unsigned r = 0; r <= (q - 1) * m; ++r) {
            LinearCode code = build_grm(space, r);
            if (code.dim == 0) continue;
            std::uint64_t words = ipow_checked(q, code.dim);
            if (words > (1u << 21)) continue;  // enumeration cap for this test
            CAPTURE(q); CAPTURE(m); CAPTURE(r);
            CHECK(oracle_min_weight(code) == grm_min_distance(q, m, r));
        }
    }
}

TEST_CASE("full-order code is the whole space") {
    LinearCode code = build_grm(space_of(3, 2), 4);
    CHECK(code.dim == 9);
    CHECK(code.parity.rows() == 0);
}

TEST_CASE("order-2 code over GF(3): weights live in {0} and [3, 9]") {
    LinearCode code = build_grm(space_of(3, 2), 2);
    CHECK(code.dim == 6);
    for_each_in_span(code.generator, [&](std::span<const Elem> w) {
        unsigned wt = hamming_weight(w);
        CHECK((wt == 0 || (wt >= 3 && wt <= 9)));
    });
}

TEST_CASE("m=1 gives extended Reed-Solomon codes") {
    LinearCode code = build_grm(space_of(5, 1), 2);
    CHECK(code.dim == 3);
    CHECK(code.n == 5);
    // MDS at this size: d = n - k + 1
    CHECK(oracle_min_weight(code) == 3);
}

TEST_CASE("target code construction") {
    AffineSpace s32 = space_of(3, 2);
    LinearCode c32 = build_target_code(s32);
    CHECK(c32.n == 9);
    CHECK(c32.dim == 6);
    CHECK(c32.parity.rows() == 3);
    CHECK(grm_min_distance(3, 2, 2) == 3);

    LinearCode c42 = build_target_code(space_of(4, 2));
    CHECK(c42.dim == 13);
    CHECK(c42.parity.rows() == 3);
    CHECK(c42.parity.cols() == 16);

    LinearCode c31 = build_target_code(space_of(3, 1));
    CHECK(c31.dim == 1);  // q - 2 for m = 1

    auto [p2, k2] = Field::factor_prime_power(2);
    AffineSpace s22(Field::get(p2, k2), 2);
    CHECK_THROWS_AS(build_target_code(s22), std::invalid_argument);
}

TEST_CASE("explicit parity rows are the all-ones vector and the coordinates") {
    AffineSpace space = space_of(4, 2);
    LinearCode code = build_target_code(space);
    for (std::size_t i = 0; i < code.n; ++i) {
        CHECK(code.parity.at(0, i) == 1);
        CHECK(code.parity.at(1, i) == space.point(i)[0]);
        CHECK(code.parity.at(2, i) == space.point(i)[1]);
    }
}

TEST_CASE("the all-ones vector is a codeword of every order") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{3, 2}, {4, 2}, {3, 1}}) {
        AffineSpace space = space_of(q, m);
        std::vector<Elem> ones(space.n(), 1);
        for (unsigned r = 0; r <= (q - 1) * m; ++r)
            CHECK(span_contains(build_grm(space, r).generator, std::span<const Elem>(ones)));
    }
}

TEST_CASE("the dual of the target code is the first-order code") {
    AffineSpace space = space_of(3, 2);
    LinearCode target = build_target_code(space);
    LinearCode first = build_grm(space, 1);
    // same row space: RREF of the explicit parity equals the first-order
    // generator
    RrefResult rr = rref(target.parity);
    REQUIRE(rr.rank == first.dim);
    FqMatrix reduced(space.field(), 0, target.n);
    for (std::size_t i = 0; i < rr.rank; ++i) reduced.append_row(rr.mat.row(i));
    CHECK(reduced == first.generator);
}
