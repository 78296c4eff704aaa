#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "twd/cli.hpp"
#include "twd/rules.hpp"
#include "twd/similarity_twd.hpp"

using namespace twd;
using namespace twd::test;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const oracle::Hooks* hooks = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err, hooks);
    return {code, out.str(), err.str()};
}

std::string complete() { return fixture("complete.itab"); }
std::string incomplete() { return fixture("incomplete.itab"); }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("twd_cli_" + name);
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("similarity matrices render at three decimals") {
    auto r = run({"similarity", "--table", incomplete(), "--tnorm", "min"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("x4     0      0      0      1      0.333  0.333  0      0") != std::string::npos);
    auto p = run({"similarity", "--table", incomplete(), "--tnorm", "prod"});
    CHECK(p.out.find("x5     0      0      0      0.167  1      0.25   0      0") != std::string::npos);

    auto j = run({"similarity", "--table", incomplete(), "--tnorm", "prod", "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["matrix"][3][5] == "1/6");
    CHECK(doc["tnorm"] == "prod");

    auto c = run({"similarity", "--table", complete()});
    CHECK(c.out.find("0.5") == std::string::npos);
}

TEST_CASE("regions and rules") {
    auto r = run({"regions", "--table", incomplete(), "--method", "alpha-sim", "--tnorm", "min", "--alpha", "0.3",
                  "--class", "x1,x2,x3,x4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("dpos (2):") != std::string::npos);
    CHECK(r.out.find("(R) (a1=NA)&(a2=3)&(a3=0) -> reject") != std::string::npos);

    auto rules = run({"rules", "--table", complete(), "--method", "cdl-complete", "--class", "x1,x2,x3,x4"});
    REQUIRE(rules.code == 0);
    std::istringstream lines(rules.out);
    std::string line;
    int a = 0, rj = 0;
    while (std::getline(lines, line)) {
        a += line.rfind("(A)", 0) == 0;
        rj += line.rfind("(R)", 0) == 0;
    }
    CHECK(a == 7);
    CHECK(rj == 3);
    CHECK(rules.err.empty());

    auto conf = run({"regions", "--table", incomplete(), "--method", "confidence", "--tnorm", "prod", "--alpha", "0.6",
                     "--class", "x1,x2,x3,x4", "--format", "json"});
    REQUIRE(conf.code == 0);
    auto doc = nlohmann::json::parse(conf.out);
    CHECK(doc["dpos"].size() == 8);
    CHECK(doc["dneg"].size() == 7);

    auto eq = run({"regions", "--table", complete(), "--method", "eq-complete", "--class", "x1,x2,x3,x4"});
    CHECK(eq.out.find("bnd: {x4,x5}") != std::string::npos);
}

TEST_CASE("complete-table methods warn about ignored thresholds") {
    auto r = run({"rules", "--table", complete(), "--method", "cdl-complete", "--class", "x1", "--alpha", "0.5",
                  "--tnorm", "prod"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("class column form") {
    auto path = scratch("decision.itab",
                        "@attributes a1 a2 a3 d\n@domain a1 0 1\n@domain a2 1 2\n@domain a3 3 1\n@objects\n"
                        "x1 1 2 3 yes\nx2 1 2 3 yes\nx3 0 1 1 yes\nx4 0 2 1 yes\nx5 0 2 1 no\nx6 1 1 1 no\n");
    auto a = run({"rules", "--table", path.string(), "--method", "cdl-complete", "--class-column", "d",
                  "--class-value", "yes"});
    auto b = run({"rules", "--table", complete(), "--method", "cdl-complete", "--class", "x1,x2,x3,x4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::filesystem::remove(path);
}

TEST_CASE("json rules round trip through the library schema") {
    auto r = run({"rules", "--table", incomplete(), "--method", "alpha-sim", "--tnorm", "prod", "--alpha", "0.3",
                  "--class", "x1,x2,x3,x4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto st = load_set_valued("incomplete.itab");
    auto doc = nlohmann::json::parse(r.out);
    auto rs = rules_from_json(st.schema(), doc);
    CHECK(rs.count(Decision::NonCommit) == 2);
    CHECK(render_json(st.schema(), rs) == doc);
}

TEST_CASE("strip NA atoms") {
    auto r = run({"rules", "--table", incomplete(), "--method", "alpha-sim", "--tnorm", "min", "--alpha", "0.3",
                  "--class", "x1,x2,x3,x4", "--strip-na-atoms"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("NA") == std::string::npos);
    CHECK(r.out.find("(R) (a2=1)&(a3=0) -> reject") != std::string::npos);
}

TEST_CASE("satisfiability listing") {
    auto r = run({"satisfiability", "--table", incomplete(), "--formula", "(a1=0)&(a3=1)"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("p13") != std::string::npos);
    CHECK(r.out.find("prod: 0.333/x4, 0.5/x5, 0.25/x6") != std::string::npos);
    auto c = run({"satisfiability", "--table", incomplete(), "--tnorm", "prod", "--class", "x1,x2,x3,x4",
                  "--formula", "a1=0&a3=1", "--exact"});
    CHECK(c.out.find("AC[prod]=1/8 RC[prod]=5/12") != std::string::npos);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
    std::vector<std::string> args{"regions", "--table", incomplete(), "--method", "alpha-meaning", "--tnorm", "prod",
                                  "--alpha", "1/2", "--class", "x1,x2,x3,x4", "--format", "json"};
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    auto path = std::filesystem::temp_directory_path() / "twd_cli_out.json";
    args.push_back("--out");
    args.push_back(path.string());
    auto c = run(args);
    CHECK(c.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kInvalidConfig);
    CHECK(run({"regions", "--table", complete()}).code == cli::kInvalidConfig);
    CHECK(run({"regions", "--table", complete(), "--method", "cdl-complete"}).code == cli::kInvalidConfig);
    CHECK(run({"regions", "--table", incomplete(), "--method", "cdl-complete", "--class", "x1"}).code ==
          cli::kInvalidConfig);
    CHECK(run({"regions", "--table", incomplete(), "--method", "approx", "--class", "x1"}).code ==
          cli::kInvalidConfig);
    CHECK(run({"regions", "--table", incomplete(), "--method", "approx", "--class", "x1", "--alpha", "2"}).code ==
          cli::kInvalidConfig);
    CHECK(run({"similarity", "--table", "/nonexistent.itab"}).code == cli::kInvalidConfig);

    auto bad = scratch("bad.itab", "@attributes a\n@objects\nx1 {1}\n");
    auto parse = run({"similarity", "--table", bad.string()});
    CHECK(parse.code == cli::kParseError);
    CHECK(parse.err.find("line 3") != std::string::npos);
    std::filesystem::remove(bad);

    auto unresolved = scratch("unresolved.itab", "@attributes a b\n@domain a 0 1\n@objects\nx1 ^(b) 1\n");
    CHECK(run({"similarity", "--table", unresolved.string()}).code == cli::kParseError);
    std::filesystem::remove(unresolved);

    CHECK(run({"oracle-check", "--table", incomplete(), "--max-worlds", "4"}).code == cli::kGuardExceeded);
    CHECK(run({"rules", "--table", incomplete(), "--method", "confidence", "--alpha", "0.5", "--class", "x1",
               "--max-formulas", "10"})
              .code == cli::kGuardExceeded);
}

TEST_CASE("oracle-check") {
    auto ok = run({"oracle-check", "--table", incomplete()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("similarity-prod: 28/28 passed") != std::string::npos);
    CHECK(ok.out.find("sat-degree-prod: 376/376 passed") != std::string::npos);

    auto t1 = run({"oracle-check", "--table", complete(), "--class", "x1,x2,x3,x4"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("definable_closure: 1/1 passed") != std::string::npos);
    CHECK(t1.out.find("classical-reduction: 1/1 passed") != std::string::npos);

    auto hooks = oracle::Hooks::library();
    hooks.similarity = [](const SetValuedTable& st, const AttrSet& a, ObjectId x, ObjectId y) {
        return similarity(st, a, fuzzy::TNormKind::Min, x, y);
    };
    auto broken = run({"oracle-check", "--table", incomplete()}, &hooks);
    CHECK(broken.code == cli::kOracleFailure);
    CHECK(broken.out.find("FAIL similarity-prod") != std::string::npos);

    auto j = run({"oracle-check", "--table", incomplete(), "--format", "json"});
    CHECK(nlohmann::json::parse(j.out).size() == 28 + 376);
}
