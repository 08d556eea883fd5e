#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "qpc/commands.hpp"

using namespace qpc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qpc_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunConfig config_with(std::string out) {
    RunConfig c;
    c.out_path = std::move(out);
    return c;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("build writes the target code and prints its parameters") {
    TempDir tmp;
    auto res = cmd_build(3, 2, std::nullopt, config_with(tmp.file("base.qpc")));
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "n=9 dim=6 d=3"));
    CHECK(contains(slurp(tmp.file("base.qpc")), "kind=linear"));

    auto full = cmd_build(3, 2, 4, config_with(tmp.file("full.qpc")));
    CHECK(full.exit_code == 0);
    CHECK(contains(full.output, "dim=9"));

    CHECK_THROWS_AS(cmd_build(2, 2, std::nullopt, config_with(tmp.file("x.qpc"))),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmd_build(6, 2, std::nullopt, config_with(tmp.file("y.qpc"))),
                    std::invalid_argument);
}

TEST_CASE("switch produces files and is deterministic under a seed") {
    TempDir tmp;
    cmd_build(3, 2, std::nullopt, config_with(tmp.file("base.qpc")));

    RunConfig seeded = config_with(tmp.file("s1.qpc"));
    seeded.seed = 7;
    seeded.seed_given = true;
    auto r1 = cmd_switch(tmp.file("base.qpc"), 0, "random", seeded);
    CHECK(r1.exit_code == 0);
    seeded.out_path = tmp.file("s2.qpc");
    cmd_switch(tmp.file("base.qpc"), 0, "random", seeded);
    CHECK(slurp(tmp.file("s1.qpc")) == slurp(tmp.file("s2.qpc")));

    auto single = cmd_switch(tmp.file("base.qpc"), 0, "single:0,1",
                             config_with(tmp.file("thm6.qpc")));
    CHECK(single.exit_code == 0);
    CHECK(contains(single.output, "lambda=100000000"));

    auto zero = cmd_switch(tmp.file("base.qpc"), 0, "000000000",
                           config_with(tmp.file("zero.qpc")));
    CHECK(zero.exit_code == 0);

    CHECK_THROWS_AS(
        cmd_switch(tmp.file("base.qpc"), 0, "00000000", config_with(tmp.file("bad.qpc"))),
        ParseError);
    CHECK_THROWS_AS(
        cmd_switch(tmp.file("full.qpc"), 0, "random", config_with(tmp.file("bad.qpc"))),
        ParseError);  // missing file also rejects
}

TEST_CASE("switch refuses a non-target base code") {
    TempDir tmp;
    cmd_build(3, 2, 4, config_with(tmp.file("full.qpc")));
    CHECK_THROWS_AS(
        cmd_switch(tmp.file("full.qpc"), 0, "random", config_with(tmp.file("out.qpc"))),
        ParseError);
}

TEST_CASE("verify reports the base code parameters") {
    TempDir tmp;
    cmd_build(3, 2, std::nullopt, config_with(tmp.file("base.qpc")));
    auto res = cmd_verify(tmp.file("base.qpc"), false, RunConfig{});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "n=9\n"));
    CHECK(contains(res.output, "size=729\n"));
    CHECK(contains(res.output, "d=3\n"));
    CHECK(contains(res.output, "covering_radius=2\n"));
    CHECK(contains(res.output, "linear=yes\n"));
    CHECK(contains(res.output, "quasi_perfect=yes\n"));
    CHECK(contains(res.output, "perfect=no\n"));
    CHECK(contains(res.output, "verdict=ok"));
}

TEST_CASE("verify cross-checks a switched code exhaustively") {
    TempDir tmp;
    cmd_build(3, 2, std::nullopt, config_with(tmp.file("base.qpc")));
    cmd_switch(tmp.file("base.qpc"), 0, "single:0,1", config_with(tmp.file("thm6.qpc")));
    auto res = cmd_verify(tmp.file("thm6.qpc"), true, RunConfig{});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "size=729\n"));
    CHECK(contains(res.output, "d=3\n"));
    CHECK(contains(res.output, "covering_radius=2\n"));
    CHECK(contains(res.output, "linear=no\n"));
    CHECK(contains(res.output, "quasi_perfect=yes\n"));
    CHECK(contains(res.output, "checks=structured+exhaustive"));
    CHECK(contains(res.output, "verdict=ok"));
}

TEST_CASE("verify refuses the exhaustive scan at (4,2) but still reports") {
    TempDir tmp;
    cmd_build(4, 2, std::nullopt, config_with(tmp.file("base42.qpc")));
    RunConfig cfg = config_with(tmp.file("sw42.qpc"));
    cfg.seed = 1;
    cfg.seed_given = true;
    cmd_switch(tmp.file("base42.qpc"), 0, "random", cfg);
    auto res = cmd_verify(tmp.file("sw42.qpc"), true, RunConfig{});
    CHECK(res.exit_code == 2);
    CHECK(contains(res.output, "exhaustive=refused"));
    CHECK(contains(res.output, "d=3\n"));
    CHECK(contains(res.output, "covering_radius=2\n"));
    CHECK(contains(res.output, "verdict=budget-refused"));
}

TEST_CASE("family surveys switch vectors deterministically") {
    TempDir tmp;
    RunConfig cfg = config_with(tmp.file("fam1.txt"));
    cfg.seed = 1;
    cfg.seed_given = true;
    auto r1 = cmd_family(3, 2, 0, "20", cfg);
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.output, "codes=20"));
    CHECK(contains(r1.output, "(certified by switch-vector recovery)"));

    cfg.out_path = tmp.file("fam2.txt");
    auto r2 = cmd_family(3, 2, 0, "20", cfg);
    CHECK(r1.output == r2.output);
    CHECK(slurp(tmp.file("fam1.txt")) == slurp(tmp.file("fam2.txt")));
}

TEST_CASE("family prefix mode starts at the all-zero switch vector") {
    auto res = cmd_family(3, 2, 0, "1", RunConfig{});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "mode=prefix"));
    CHECK(contains(res.output, "0 000000000 3 2 yes yes yes"));
    CHECK(contains(res.output, "distinct_lambdas=1"));
}

TEST_CASE("family rejects bad counts") {
    CHECK_THROWS_AS(cmd_family(3, 2, 0, "banana", RunConfig{}), ParseError);
    CHECK_THROWS_AS(cmd_family(3, 2, 0, "0", RunConfig{}), ParseError);
    CHECK_THROWS_AS(cmd_family(3, 2, 0, "30000", RunConfig{}), ParseError);  // > 3^9
}

TEST_CASE("bound prints the exact exponents") {
    auto res = cmd_bound(3, 2, std::nullopt, RunConfig{});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "q_analogue=4"));
    CHECK(contains(res.output, "t_exponent=2"));
    CHECK(contains(res.output, "codes_total_exponent=9"));
    CHECK(contains(res.output, "bound_exponent=-27"));
    CHECK(contains(res.output, "vacuous"));

    auto eps = cmd_bound(3, 2, 0.01, RunConfig{});
    CHECK(contains(eps.output, "smallest_m_with_bound_exceeding_q^(c*n)="));
}

TEST_CASE("export re-serializes canonically and import summarizes") {
    TempDir tmp;
    cmd_build(3, 2, std::nullopt, config_with(tmp.file("base.qpc")));
    auto exp = cmd_export(tmp.file("base.qpc"), RunConfig{});
    CHECK(exp.exit_code == 0);
    CHECK(exp.output == slurp(tmp.file("base.qpc")));

    auto exp2 = cmd_export(tmp.file("base.qpc"), config_with(tmp.file("copy.qpc")));
    CHECK(exp2.exit_code == 0);
    CHECK(slurp(tmp.file("copy.qpc")) == slurp(tmp.file("base.qpc")));

    auto imp = cmd_import(tmp.file("base.qpc"), RunConfig{});
    CHECK(imp.exit_code == 0);
    CHECK(contains(imp.output, "kind=linear"));
    CHECK(contains(imp.output, "target=yes"));

    CHECK_THROWS_AS(cmd_import(tmp.file("missing.qpc"), RunConfig{}), ParseError);
}
