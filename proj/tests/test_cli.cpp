#include "shtrace/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>

using namespace shtrace;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json parsed(const Outcome& o) { return json::parse(o.out); }

std::string shell(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

}  // namespace

TEST(Cli, BGmuGL2) {
    auto o = run({"bgmu", "--group", "GL2", "--mu", "1,0"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["schema"], json_schema_version);
    ASSERT_EQ(j["elements"].size(), 2u);
    EXPECT_EQ(kottwitz_point_from_json(j["elements"][0]), basic_element(RootDatum::GL(2), 1));
    auto dot = run({"bgmu", "--group", "GL3", "--mu", "1,0,0", "--dot"});
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(Cli, Weights) {
    auto o = run({"weights", "--group", "GL2", "--mu", "1,0"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto table = weight_table_from_json(parsed(o));
    EXPECT_EQ(table.entries().size(), 1u);
    EXPECT_EQ(table.multiplicity(RootDatum::GL(2), Cochar{0, 1}), 1);
    auto single = run({"weights", "--group", "GL3", "--mu", "1,0,-1", "--lambda", "0,0,0"});
    EXPECT_EQ(parsed(single)["multiplicity"], 2);
}

TEST(Cli, ReproDrinfeld) {
    auto o = run({"repro", "drinfeld", "--p", "5", "--eigenvalues", "3,5"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["status"], "MATCH");
    EXPECT_EQ(j["value"], "-4/5");
    auto q = run({"repro", "drinfeld", "--p", "3", "--quadratic", "0,1,2"});
    EXPECT_EQ(parsed(q)["value"], "-2");
}

TEST(Cli, ThetaTheoremAndHypothesisFailure) {
    auto ok = run({"theta", "--group", "GL2", "--b", "basic", "--mu", "1,0", "--quadratic", "1,1,2", "--p", "5"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    auto j = parsed(ok);
    EXPECT_EQ(j["value"], "-2");
    EXPECT_EQ(theta_result_from_json(j, FieldParams(5, 1, 1)).terms.size(), 2u);

    auto bad = run({"theta", "--group", "GL2", "--b", "basic", "--mu", "1,0", "--rho", "trivial", "--g", "3,5", "--p", "5"});
    EXPECT_EQ(bad.code, 1);
    auto e = json::parse(bad.err);
    EXPECT_EQ(e["error"], "domain");
    EXPECT_EQ(kottwitz_point_from_json(e["witness"]), gl_point(RootDatum::GL(2), RationalCochar(std::vector<Rational>{1, 0})));

    auto cc = run({"theta", "--group", "GL2", "--mu", "1,0", "--g", "3,5", "--p", "5", "--method", "cc"});
    EXPECT_EQ(parsed(cc)["value"], "-4/5");
}

TEST(Cli, CcAndVanDijk) {
    auto cc = run({"cc", "--group", "GL2", "--bprime", "1,0", "--t", "5,1", "--p", "5"});
    ASSERT_EQ(cc.code, 0) << cc.err;
    EXPECT_EQ(parsed(cc)["value"], "4");
    auto gl3 = run({"cc", "--group", "GL3", "--bprime", "1/2,1/2,0", "--mu", "1,0,0", "--t", "5,1:1:2,1:-1:2", "--p", "3"});
    ASSERT_EQ(gl3.code, 0) << gl3.err;
    auto vd = run({"vandijk", "--group", "GL2", "--g", "5,1", "--p", "5"});
    EXPECT_EQ(parsed(vd)["value"], "6/5");
    auto r = run({"repro", "vandijk", "--group", "GL3", "--chars", "2,3,5", "--eigenvalues", "1,5,25", "--p", "5"});
    EXPECT_EQ(parsed(r)["constant"], "1");
}

TEST(Cli, ValidationErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bgmu", "--group", "GL2", "--mu", "0,1"},
             {"bgmu", "--group", "XX2", "--mu", "1,0"},
             {"theta", "--group", "GL2", "--mu", "1,0", "--g", "3,3", "--p", "5"},
             {"theta", "--group", "GL2", "--mu", "1,0", "--g", "3,5", "--p", "4"},
             {"theta", "--group", "GL2", "--mu", "1,0", "--quadratic", "1,1,11", "--p", "5"},
             {"relb", "--group", "GL2", "--mu", "1,0", "--b", "1/3,2/3", "--g", "3,5", "--p", "5"},
             {"nonsense"},
             {"weights", "--group", "GL2", "--mu", "1,0", "--format", "dot"}}) {
        auto o = run(args);
        EXPECT_EQ(o.code, 2) << args[0] << " " << o.err;
        EXPECT_EQ(json::parse(o.err)["error"], "validation");
    }
}

TEST(Cli, DomainErrors) {
    auto o = run({"cc", "--group", "GL3", "--bprime", "1,0,0", "--t", "2,3,7", "--p", "5"});
    EXPECT_EQ(o.code, 1);
    EXPECT_EQ(json::parse(o.err)["error"], "domain");
}

TEST(Cli, RoundTripOutputs) {
    auto relb = run({"relb", "--group", "GL3", "--mu", "1,0,0", "--b", "1,0,0", "--g", "2,3,7", "--p", "5"});
    ASSERT_EQ(relb.code, 0) << relb.err;
    auto j = parsed(relb);
    FieldParams F = field_params_from_json(j["field"]);
    ASSERT_EQ(j["triples"].size(), 3u);
    for (const auto& t : j["triples"]) {
        auto triple = rel_triple_from_json(t, F);
        EXPECT_NO_THROW(validate(RootDatum::GL(3), triple, Cochar{1, 0, 0}));
        EXPECT_EQ(to_json(triple).dump(), t.dump());
    }
}

TEST(Cli, TableFormat) {
    auto o = run({"repro", "drinfeld", "--p", "5", "--eigenvalues", "3,5", "--format", "table"});
    EXPECT_NE(o.out.find("status MATCH"), std::string::npos);
    auto w = run({"weights", "--group", "GL3", "--mu", "2,1,0", "--format", "table"});
    EXPECT_NE(w.out.find("dimension 8"), std::string::npos);
}

TEST(Cli, BinaryIsDeterministicAndReadsFieldFromEnvironment) {
    const std::string bin = SHTRACE_CLI_PATH;
    const std::string cmd = bin + " theta --group GL3 --mu 1,0,0 --b 1,0,0 --rho ups:2,3,5 --g 2,3,7";
    auto first = shell("SHTRACE_FIELD=5,1,1 " + cmd);
    auto second = shell("SHTRACE_FIELD=5,1,1 " + cmd);
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, second);
    auto explicit_field = shell(cmd + " --p 5");
    EXPECT_EQ(first, explicit_field);
    EXPECT_EQ(json::parse(first)["field"]["p"], 5);
    auto missing = run({"theta", "--group", "GL2", "--mu", "1,0", "--g", "3,5"});
    if (!std::getenv("SHTRACE_FIELD")) EXPECT_EQ(missing.code, 2);
}
