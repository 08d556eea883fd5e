#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "qpc/qpcfile.hpp"

using namespace qpc;

namespace {

std::vector<Elem> random_lambda(std::uint64_t seed, std::size_t T, unsigned q) {
    std::mt19937_64 rng(seed);
    std::vector<Elem> l(T);
    for (auto& x : l) x = Elem(rng() % q);
    return l;
}

}  // namespace

TEST_CASE("the (3,1) target code serializes to a frozen golden file") {
    AffineSpace space(Field::get(3, 1), 1);
    LinearCode code = build_target_code(space);
    CHECK(serialize_linear(code, 1) ==
          "QPC v1\n"
          "q=3^1\n"
          "m=1\n"
          "kind=linear\n"
          "dim=1\n"
          "1 1 1\n");
}

TEST_CASE("linear files round-trip bit for bit") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{3, 2}, {4, 2}, {5, 1}}) {
        auto [p, k] = Field::factor_prime_power(q);
        AffineSpace space(Field::get(p, k), m);
        LinearCode code = build_target_code(space);
        std::string text = serialize_linear(code, m);
        QpcFile file = parse_qpc(text);
        CHECK(file.kind == QpcFile::Kind::Linear);
        CHECK(file.m == m);
        LinearCode back = realize_linear(file);
        CHECK(back.generator == code.generator);
        CHECK(back.dim == code.dim);
        CHECK(serialize_linear(back, m) == text);
        CHECK(is_target_code(file));
    }
}

TEST_CASE("switched files round-trip bit for bit") {
    SwitchContext ctx = make_switch_context(3, 2, 4);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SwitchedCode sw = ctx.switched(random_lambda(seed, 9, 3));
        std::string text = serialize_switched(sw);
        QpcFile file = parse_qpc(text);
        CHECK(file.kind == QpcFile::Kind::Switched);
        CHECK(file.coord == 4);
        SwitchedCode back = realize_switched(file);
        CHECK(back.lambdas() == sw.lambdas());
        CHECK(back.ri()->basis() == sw.ri()->basis());
        CHECK(back.extension() == sw.extension());
        CHECK(serialize_switched(back) == text);
    }
}

TEST_CASE("switched serialization for an extension field") {
    SwitchContext ctx = make_switch_context(4, 2, 0);
    SwitchedCode sw = ctx.switched(random_lambda(3, 64, 4));
    std::string text = serialize_switched(sw);
    CHECK(text.find("q=2^2;mod=1,1,1\n") != std::string::npos);
    SwitchedCode back = realize_switched(parse_qpc(text));
    CHECK(back.lambdas() == sw.lambdas());
    CHECK(serialize_switched(back) == text);
}

TEST_CASE("non-target linear codes are recognized as such") {
    AffineSpace space(Field::get(3, 1), 2);
    LinearCode full = build_grm(space, 4);
    QpcFile file = parse_qpc(serialize_linear(full, 2));
    CHECK_FALSE(is_target_code(file));
    CHECK(realize_linear(file).dim == 9);
}

TEST_CASE("malformed files are rejected") {
    SwitchContext ctx = make_switch_context(3, 2, 0);
    std::string good = serialize_switched(ctx.switched(std::vector<Elem>(9, 0)));

    CHECK_THROWS_AS(parse_qpc("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_qpc(""), ParseError);

    // wrong header
    {
        std::string bad = good;
        bad.replace(0, 6, "QPC v2");
        CHECK_THROWS_AS(parse_qpc(bad), ParseError);
    }
    // bad field line
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=6^1\nm=2\nkind=linear\ndim=0\n"), ParseError);
    // entry out of range
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 3\n"), ParseError);
    // short row
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1\n"), ParseError);
    // over-long row
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 1 1\n"), ParseError);
    // unknown kind
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=banana\n"), ParseError);
    // lambda too short
    {
        std::string bad = good;
        auto pos = bad.find("lambda=");
        bad = bad.substr(0, pos) + "lambda=00000000\n";
        CHECK_THROWS_AS(parse_qpc(bad), ParseError);
    }
    // lambda digit out of range
    {
        std::string bad = good;
        auto pos = bad.find("lambda=");
        bad = bad.substr(0, pos) + "lambda=000000004\n";
        CHECK_THROWS_AS(parse_qpc(bad), ParseError);
    }
    // trailing garbage
    CHECK_THROWS_AS(parse_qpc(good + "extra\n"), ParseError);
}

TEST_CASE("a tampered basis row is caught at realization") {
    SwitchContext ctx = make_switch_context(3, 2, 0);
    std::string good = serialize_switched(ctx.switched(std::vector<Elem>(9, 0)));
    // flip the first entry of the first basis row (line 6: header..i= then rows)
    std::istringstream is(good);
    std::string line, bad;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (lineno == 6) line[0] = (line[0] == '0') ? '1' : '0';
        bad += line + "\n";
    }
    CHECK_THROWS_AS(realize_switched(parse_qpc(bad)), ParseError);
}

TEST_CASE("lambda digits cover alphanumeric bases") {
    CHECK(lambda_digit_char(0) == '0');
    CHECK(lambda_digit_char(9) == '9');
    CHECK(lambda_digit_char(10) == 'a');
    CHECK(lambda_digit_value('7', 9) == 7);
    CHECK(lambda_digit_value('b', 16) == 11);
    CHECK_THROWS_AS(lambda_digit_value('9', 8), ParseError);
    CHECK_THROWS_AS(lambda_digit_value('!', 8), ParseError);
}

TEST_CASE("rows with trailing junk are rejected") {
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 1x\n"), ParseError);
    CHECK_THROWS_AS(parse_qpc("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 banana\n"), ParseError);
}
