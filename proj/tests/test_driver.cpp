#include <gtest/gtest.h>

#include <random>

#include "canbase/canbase.hpp"

using namespace canbase;

namespace {

int_laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), exp(-6, 6), coeff(-9, 9);
    int_laurent f;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) f += int_laurent::monomial(bigint(coeff(rng)), exp(rng));
    return f;
}

run_config config(const char* dimvec, command_kind cmd, const char* emit, output_format fmt) {
    run_config cfg;
    cfg.dimvec = dim_vector::parse(dimvec);
    cfg.command = cmd;
    if (emit) cfg.emit = parse_emit(emit);
    cfg.format = fmt;
    return cfg;
}

} // namespace

TEST(Json, LaurentRoundTrip) {
    std::mt19937 rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        const int_laurent f = random_laurent(rng);
        EXPECT_EQ(laurent_from_json(laurent_to_json(f)), f);
    }
    // Keys are sorted ascending by exponent.
    const ordered_json j = laurent_to_json(parse_laurent("v^3-2+v^-5"));
    std::vector<std::string> keys;
    for (const auto& [k, value] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"-5", "0", "3"}));
}

TEST(Json, BigCoefficientsSurviveAsStrings) {
    const bigint big = bigint("123456789012345678901234567890");
    const int_laurent f = int_laurent::monomial(big, 2) + int_laurent::monomial(-big, -2);
    const ordered_json j = laurent_to_json(f);
    EXPECT_TRUE(j.at("2").is_string());
    EXPECT_EQ(laurent_from_json(j), f);
}

TEST(Json, RatFuncRoundTrip) {
    std::mt19937 rng(2);
    for (int iter = 0; iter < 100; ++iter) {
        int_laurent den = random_laurent(rng);
        if (den.is_zero()) den = parse_laurent("1+v");
        const rat_func r(random_laurent(rng), den);
        EXPECT_EQ(rat_from_json(rat_to_json(r)), r);
    }
}

TEST(Json, PatternAndPartitionRoundTrip) {
    const auto ctx = pairing_context::build(dim_vector({1, 2, 1}));
    for (const auto& p : ctx.patterns) EXPECT_EQ(pattern_from_json(pattern_to_json(p)), p);
    for (const auto& c : ctx.order) EXPECT_EQ(kp_from_json(kp_to_json(c)), c);
    // Zero-dimensional vertices need the shape-aware parser: an empty row
    // list cannot carry its column count.
    const dim_vector degenerate({2, 0, 3});
    const auto dctx = pairing_context::build(degenerate);
    for (const auto& p : dctx.patterns)
        EXPECT_EQ(pattern_from_json(pattern_to_json(p), degenerate), p);
}

TEST(Driver, CanbaseJsonReport) {
    const run_report report =
        run_canbase(config("1,2,1", command_kind::canbase, "p,q,psi,l,d,orbits,patterns", output_format::json));
    EXPECT_EQ(report.exit_code, 0);
    const ordered_json& j = report.json;
    EXPECT_EQ(j.at("schema"), std::string(report_schema));
    EXPECT_EQ(j.at("command"), "canbase");
    EXPECT_EQ(j.at("dimvec"), (std::vector<int>{1, 2, 1}));
    ASSERT_TRUE(j.contains("kostant_partitions"));
    EXPECT_EQ(j.at("kostant_partitions").size(), 5u);
    EXPECT_EQ(laurent_matrix_from_json(j.at("p")), fixtures::expected::p_1_2_1());
    EXPECT_EQ(laurent_matrix_from_json(j.at("q")), fixtures::expected::q_1_2_1());
    EXPECT_EQ(laurent_matrix_from_json(j.at("l")), fixtures::expected::l_1_2_1());
    EXPECT_EQ(rat_matrix_from_json(j.at("psi")), fixtures::expected::psi_1_2_1());
    EXPECT_EQ(j.at("orbits"), (std::vector<long long>{0, 2, 2, 3, 4}));
    // Output parses back to the same JSON.
    EXPECT_EQ(ordered_json::parse(report.output), j);
}

TEST(Driver, CanbaseDefaultEmit) {
    const run_report report = run_canbase(config("1", command_kind::canbase, nullptr, output_format::json));
    EXPECT_TRUE(report.json.contains("p"));
    EXPECT_TRUE(report.json.contains("q"));
    EXPECT_FALSE(report.json.contains("psi"));
}

TEST(Driver, CanbaseSmallestInstance) {
    const run_report report =
        run_canbase(config("1", command_kind::canbase, "psi,p", output_format::json));
    EXPECT_EQ(rat_matrix_from_json(report.json.at("psi")), fixtures::expected::psi_1());
    EXPECT_EQ(laurent_matrix_from_json(report.json.at("p")), matrix<int_laurent>::identity(1));
}

TEST(Driver, CanbaseRejectsHeckeArtifacts) {
    EXPECT_THROW(run_canbase(config("1", command_kind::canbase, "dims", output_format::json)),
                 std::invalid_argument);
    EXPECT_THROW(run_canbase(config("1", command_kind::canbase, "h", output_format::json)),
                 std::invalid_argument);
}

TEST(Driver, HeckeJsonReport) {
    const run_report report = run_hecke(
        config("1,2,1", command_kind::hecke, "multiplicities,h,f,dims", output_format::json));
    const ordered_json& j = report.json;
    EXPECT_EQ(j.at("dims"), (std::vector<int>{4, 6, 6, 2, 4}));
    const auto expected_mult = fixtures::expected::multiplicities_1_2_1();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t c = 0; c < 5; ++c)
            EXPECT_EQ(j.at("multiplicities").at(i).at(c), expected_mult[i][c]);
    const auto expected_f = fixtures::expected::f_1_2_1();
    for (std::size_t i = 0; i < 5; ++i)
        EXPECT_EQ(laurent_from_json(j.at("f").at(i)), expected_f[i]);
    const auto expected_h = fixtures::expected::h_1_2_1();
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(rat_from_json(j.at("h").at(i)), expected_h[i]);
}

TEST(Driver, HeckeDefaultEmitIsDims) {
    const run_report report = run_hecke(config("1", command_kind::hecke, nullptr, output_format::json));
    EXPECT_EQ(report.json.at("dims"), (std::vector<int>{1}));
}

TEST(Driver, PrettyAndLatexFormats) {
    {
        const run_report report =
            run_canbase(config("2,2", command_kind::canbase, "psi,p,q", output_format::pretty));
        EXPECT_NE(report.output.find("Psi ="), std::string::npos);
        EXPECT_NE(report.output.find("1/( (1-v^-2)^2(1-v^-4)^2 )"), std::string::npos);
        EXPECT_NE(report.output.find("c1 = (2,0,2)"), std::string::npos);
    }
    {
        const run_report report =
            run_canbase(config("2,2", command_kind::canbase, "psi", output_format::latex));
        EXPECT_NE(report.output.find("\\begin{pmatrix}"), std::string::npos);
        EXPECT_NE(report.output.find("\\frac{1}{(1-v^{-2})^{2}(1-v^{-4})^{2}}"), std::string::npos);
    }
    {
        const run_report report =
            run_hecke(config("1,2,1", command_kind::hecke, "h,dims", output_format::pretty));
        EXPECT_NE(report.output.find("H ="), std::string::npos);
        EXPECT_NE(report.output.find("simple module dimensions: 4 6 6 2 4"), std::string::npos);
    }
}

TEST(Driver, EmitParsing) {
    EXPECT_EQ(parse_emit("p,q").size(), 2u);
    EXPECT_THROW(parse_emit(""), std::invalid_argument);
    EXPECT_THROW(parse_emit("p,,q"), std::invalid_argument);
    EXPECT_THROW(parse_emit("bogus"), std::invalid_argument);
    EXPECT_EQ(emit_name(emit_kind::multiplicities), "multiplicities");
}

TEST(Driver, ResourceLimit) {
    run_config cfg = config("3,3", command_kind::canbase, "p", output_format::json);
    cfg.max_summands = 10;
    EXPECT_THROW(run_canbase(cfg), resource_limit);
}

TEST(Driver, SelftestPasses) {
    const run_report report = run_selftest();
    EXPECT_EQ(report.exit_code, 0) << report.output;
    EXPECT_NE(report.output.find("[PASS] psi/1,2,1"), std::string::npos);
    EXPECT_EQ(report.output.find("[FAIL]"), std::string::npos);
}

TEST(Driver, SelftestList) {
    const run_report report = run_selftest(true);
    EXPECT_EQ(report.exit_code, 0);
    EXPECT_NE(report.output.find("psi/2,2"), std::string::npos);
    EXPECT_NE(report.output.find("hecke/dims-1,2,1"), std::string::npos);
    EXPECT_EQ(report.output.find("[PASS]"), std::string::npos);
}

TEST(Driver, CorruptedFixtureFailsWithDiff) {
    fixtures::fixture broken{"broken/example", [] { return std::string("expected text"); },
                             [] { return std::string("actual text"); }};
    const fixtures::fixture_outcome outcome = fixtures::run_fixture(broken);
    EXPECT_FALSE(outcome.passed);
    EXPECT_EQ(outcome.name, "broken/example");
    EXPECT_EQ(outcome.expected, "expected text");
    EXPECT_EQ(outcome.actual, "actual text");
}

TEST(Driver, WorkersMatchSequential) {
    run_config cfg = config("2,2", command_kind::canbase, "psi,p,q", output_format::json);
    const run_report seq = run_canbase(cfg);
    cfg.workers = 4;
    const run_report par = run_canbase(cfg);
    EXPECT_EQ(seq.json, par.json);
}
