#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpc/field.hpp"

using namespace qpc;

namespace {

// Test-side polynomial oracle, independent of the library's modulus search:
// multiply two polynomials over GF(p) and compare against every candidate.
std::vector<unsigned> oracle_poly_mul(const std::vector<unsigned>& a,
                                      const std::vector<unsigned>& b, unsigned p) {
    std::vector<unsigned> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// All monic irreducibles of degree k over GF(p), found by crossing out every
// product of two lower-degree monic polynomials.
std::vector<std::vector<unsigned>> oracle_irreducibles(unsigned p, unsigned k) {
    auto monics = [&](unsigned d) {
        std::vector<std::vector<unsigned>> out;
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned e = 0; e < count; ++e) {
            std::vector<unsigned> f(d + 1, 0);
            unsigned v = e;
            for (unsigned j = 0; j < d; ++j) {
                f[j] = v % p;
                v /= p;
            }
            f[d] = 1;
            out.push_back(f);
        }
        return out;
    };
    auto candidates = monics(k);
    std::vector<bool> reducible(candidates.size(), false);
    for (unsigned d1 = 1; d1 < k; ++d1) {
        unsigned d2 = k - d1;
        if (d2 < d1) break;
        for (const auto& f1 : monics(d1))
            for (const auto& f2 : monics(d2)) {
                auto prod = oracle_poly_mul(f1, f2, p);
                for (std::size_t i = 0; i < candidates.size(); ++i)
                    if (candidates[i] == prod) reducible[i] = true;
            }
    }
    std::vector<std::vector<unsigned>> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!reducible[i]) out.push_back(candidates[i]);
    return out;
}

std::vector<unsigned> lex_smallest_from_constant_term(std::vector<std::vector<unsigned>> polys) {
    // compare coefficient lists from the constant term upward
    return *std::min_element(polys.begin(), polys.end());
}

}  // namespace

TEST_CASE("prime field basics") {
    FieldPtr f3 = Field::get(3, 1);
    CHECK(f3->q() == 3);
    CHECK(f3->modulus().empty());
    CHECK(f3->add(1, 2) == 0);
    CHECK(f3->neg(1) == 2);
    CHECK(f3->mul(2, 2) == 1);
}

TEST_CASE("GF(4) uses the unique monic irreducible quadratic") {
    auto irr = oracle_irreducibles(2, 2);
    REQUIRE(irr.size() == 1);
    CHECK(irr[0] == std::vector<unsigned>{1, 1, 1});

    FieldPtr f4 = Field::get(2, 2);
    REQUIRE(f4->modulus().size() == 3);
    CHECK(f4->modulus()[0] == 1);
    CHECK(f4->modulus()[1] == 1);
    CHECK(f4->modulus()[2] == 1);

    // x * x = x + 1 mod x^2+x+1: index 2 is x, index 3 is x+1
    CHECK(f4->mul(2, 2) == 3);
}

TEST_CASE("canonical moduli for GF(8) and GF(9) are the lex-first irreducibles") {
    auto want8 = lex_smallest_from_constant_term(oracle_irreducibles(2, 3));
    FieldPtr f8 = Field::get(2, 3);
    std::vector<unsigned> got8(f8->modulus().begin(), f8->modulus().end());
    CHECK(got8 == want8);
    CHECK(got8 == std::vector<unsigned>{1, 0, 1, 1});  // x^3 + x^2 + 1

    auto want9 = lex_smallest_from_constant_term(oracle_irreducibles(3, 2));
    FieldPtr f9 = Field::get(3, 2);
    std::vector<unsigned> got9(f9->modulus().begin(), f9->modulus().end());
    CHECK(got9 == want9);
    CHECK(got9 == std::vector<unsigned>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("GF(5) inverses agree with an exhaustive oracle") {
    FieldPtr f5 = Field::get(5, 1);
    CHECK(f5->inv(2) == 3);  // 2*3 = 6 = 1 mod 5
    for (Elem a = 1; a < 5; ++a) {
        Elem found = 0;
        for (Elem b = 1; b < 5; ++b)
            if (f5->mul(a, b) == 1) found = b;
        CHECK(f5->inv(a) == found);
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::get(4, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(Field::get(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::get(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::get(2, 17), std::invalid_argument);  // 2^17 > 2^16
}

TEST_CASE("field axioms hold exhaustively for every q <= 9") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}}) {
        FieldPtr f = Field::get(p, k);
        const unsigned q = f->q();
        CAPTURE(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->mul(a, 0) == 0);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, q - 1) == 1);
            }
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
        CHECK_THROWS_AS(f->inv(0), std::invalid_argument);
    }
}

TEST_CASE("element enumeration is stable across constructions") {
    FieldPtr a = Field::get(3, 2);
    FieldPtr b = Field::get(3, 2);
    CHECK(a == b);  // cached, one identity per (p, k)
    CHECK(a->spec_string() == "3^2;mod=1,0,1");
}

TEST_CASE("spec strings round-trip") {
    CHECK(Field::get(3, 1)->spec_string() == "3^1");
    CHECK(Field::get(2, 2)->spec_string() == "2^2;mod=1,1,1");
    CHECK(Field::parse_spec("3^1") == Field::get(3, 1));
    CHECK(Field::parse_spec("2^2;mod=1,1,1") == Field::get(2, 2));
    CHECK_THROWS_AS(Field::parse_spec("2^2;mod=1,0,1"), ParseError);  // wrong modulus
    CHECK_THROWS_AS(Field::parse_spec("2^2"), ParseError);            // modulus required
    CHECK_THROWS_AS(Field::parse_spec("6^1"), ParseError);
    CHECK_THROWS_AS(Field::parse_spec("banana"), ParseError);
}

TEST_CASE("prime power factoring") {
    CHECK(Field::factor_prime_power(9) == std::pair<unsigned, unsigned>{3, 2});
    CHECK(Field::factor_prime_power(7) == std::pair<unsigned, unsigned>{7, 1});
    CHECK_THROWS_AS(Field::factor_prime_power(12), std::invalid_argument);
    CHECK_THROWS_AS(Field::factor_prime_power(1), std::invalid_argument);
}

TEST_CASE("formula-based arithmetic above the table threshold") {
    FieldPtr big = Field::get(2, 9);  // q = 512, no tables
    CHECK(big->q() == 512);
    Elem x = 300, y = 451;
    CHECK(big->mul(x, y) == big->mul(y, x));
    CHECK(big->mul(x, big->inv(x)) == 1);
    CHECK(big->pow(x, 511) == 1);
    CHECK(big->add(x, big->neg(x)) == 0);
}
