#include "aao/io.hpp"
#include "aao/presets.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace aao;
using namespace aao::io;
using ising::Configuration;
using ising::Evidence;
using ising::InverseTemperature;
using ising::SpinGraph;
using testsupport::thrown_code;

TEST_SUITE("io") {

TEST_CASE("graph documents: golden parse") {
    const auto doc = parse_graph_document(R"({
        "sites": [1, 2, 3],
        "edges": [[1, 2], [1, 3]],
        "clamps": {"1": 1},
        "beta": "ln_sqrt2"
    })");
    CHECK(doc.graph == presets::fig1a_graph());
    CHECK(doc.clamps == presets::fig1_evidence());
    REQUIRE(doc.beta.has_value());
    CHECK(doc.beta->is_ln_sqrt2());

    const auto numeric = parse_graph_document(R"({"sites":[1,2],"edges":[],"beta":0.25})");
    CHECK(numeric.beta->value() == 0.25);
    const auto decimal_string = parse_graph_document(R"({"sites":[1],"edges":[],"beta":"0.5"})");
    CHECK(decimal_string.beta->value() == 0.5);
    const auto bare = parse_graph_document(R"({"sites":[4],"edges":[]})");
    CHECK_FALSE(bare.beta.has_value());
    CHECK(bare.clamps.empty());
}

TEST_CASE("graph documents: round trip") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        GraphDocument doc{oracle::random_graph(rng, 9), {}, {}};
        doc.clamps = oracle::random_evidence(rng, doc.graph, 30);
        switch (trial % 3) {
        case 0:
            doc.beta = InverseTemperature::ln_sqrt2();
            break;
        case 1:
            doc.beta = InverseTemperature(0.125 * (trial % 7));
            break;
        default:
            break; // no beta
        }
        const GraphDocument back = parse_graph_document(write_graph_document(doc));
        CHECK(back.graph == doc.graph);
        CHECK(back.clamps == doc.clamps);
        CHECK(back.beta == doc.beta);
    }
}

TEST_CASE("graph documents: diagnostics name the offending field") {
    auto code_and_message = [](const std::string& text) {
        try {
            parse_graph_document(text);
        } catch (const Error& e) {
            return std::pair<ErrorCode, std::string>(e.code(), e.what());
        }
        return std::pair<ErrorCode, std::string>(ErrorCode::validation_error, "no error");
    };

    auto [c1, m1] = code_and_message(R"({"edges": []})");
    CHECK(c1 == ErrorCode::parse_error);
    CHECK(m1.find("sites") != std::string::npos);

    auto [c2, m2] = code_and_message(R"({"sites": [1], "edges": [[1]]})");
    CHECK(c2 == ErrorCode::parse_error);
    CHECK(m2.find("edges") != std::string::npos);

    auto [c3, m3] = code_and_message(R"({"sites": [1, 2], "edges": [], "clamps": {"1": 2}})");
    CHECK(c3 == ErrorCode::validation_error);
    CHECK(m3.find("clamps") != std::string::npos);

    auto [c4, m4] = code_and_message(R"({"sites": [1], "edges": [], "clamps": {"x": 1}})");
    CHECK(c4 == ErrorCode::parse_error);
    CHECK(m4.find("clamps") != std::string::npos);

    auto [c5, m5] = code_and_message(R"({"sites": [1], "edges": [], "typo": true})");
    CHECK(c5 == ErrorCode::parse_error);
    CHECK(m5.find("typo") != std::string::npos);

    auto [c6, m6] = code_and_message(R"({"sites": [1], "edges": [], "beta": "warm"})");
    CHECK(c6 == ErrorCode::parse_error);
    CHECK(m6.find("beta") != std::string::npos);

    CHECK(code_and_message("{ not json").first == ErrorCode::parse_error);
    CHECK(code_and_message(R"({"sites":[1],"edges":[],"beta":-1})").first ==
          ErrorCode::invalid_argument);
    CHECK(code_and_message(R"({"sites":[1,2],"edges":[],"clamps":{"7":1}})").first ==
          ErrorCode::validation_error);
    CHECK(thrown_code([] { load_graph_document("/nonexistent/path.json"); }) ==
          ErrorCode::io_error);
}

TEST_CASE("ensemble documents: round trip and validation") {
    const EnsembleDocument doc{presets::fig1_ensemble(), InverseTemperature::ln_sqrt2()};
    const std::string text = write_ensemble_document(doc);
    const EnsembleDocument back = parse_ensemble_document(text);
    CHECK(back.ensemble == doc.ensemble);
    CHECK(back.beta == doc.beta);

    CHECK(thrown_code([] {
              parse_ensemble_document(R"({"geometries": {}, "shared_subsystem": [1]})");
          }) == ErrorCode::validation_error); // no geometries
    CHECK(thrown_code([] {
              parse_ensemble_document(R"({"shared_subsystem": [1]})");
          }) == ErrorCode::parse_error);

    // member graphs must not smuggle in their own clamps or beta
    const auto code = thrown_code([] {
        parse_ensemble_document(R"({
            "geometries": {"g": {"sites": [1, 2], "edges": [], "clamps": {"1": 1}}},
            "shared_subsystem": [2]
        })");
    });
    CHECK(code == ErrorCode::validation_error);

    // subsystem site missing from a member
    CHECK(thrown_code([] {
              parse_ensemble_document(R"({
                  "geometries": {"g": {"sites": [1], "edges": []}},
                  "shared_subsystem": [2]
              })");
          }) == ErrorCode::unknown_site);
}

TEST_CASE("distribution CSV: schema, order, and 12-digit round trip") {
    const auto table = ising::joint_distribution(presets::fig1a_graph(), {},
                                                 presets::fig1_evidence());
    const std::string csv = distribution_to_csv(table);
    CHECK(csv == "config,probability\n"
                 "-1 -1,0.111111111111\n"
                 "+1 -1,0.222222222222\n"
                 "-1 +1,0.222222222222\n"
                 "+1 +1,0.444444444444\n");

    // parsing the emitted numbers back reproduces the table at 12 digits
    std::size_t pos = csv.find('\n') + 1;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::size_t comma = csv.find(',', pos);
        const std::size_t eol = csv.find('\n', comma);
        const double value = std::strtod(csv.substr(comma + 1, eol - comma - 1).c_str(), nullptr);
        CHECK(std::abs(value - table.probability(i)) <= 5e-12 * table.probability(i) + 1e-15);
        CHECK(format_double(value) == format_double(table.probability(i)));
        pos = eol + 1;
    }
}

TEST_CASE("distribution JSON renders exact fractions") {
    const auto table = ising::joint_distribution(presets::fig1a_graph(), {},
                                                 presets::fig1_evidence());
    const std::string text = distribution_to_json(table);
    CHECK(text.find("\"4/9\"") != std::string::npos);
    CHECK(text.find("\"1/9\"") != std::string::npos);
    CHECK(text.find("exact-rational") != std::string::npos);

    const auto floating = ising::joint_distribution(presets::fig1a_graph(),
                                                    InverseTemperature(0.25),
                                                    presets::fig1_evidence());
    const std::string ftext = distribution_to_json(floating);
    CHECK(ftext.find("\"floating\"") != std::string::npos);
    CHECK(ftext.find('/') == std::string::npos);
}

TEST_CASE("audit report serializations") {
    const auto report = knowledge::independence_audit(presets::fig1_ensemble(), {});
    CHECK(audit_report_to_csv(report) == "labelA,labelB,max_diff,tv_distance,entry\n"
                                         "1a,1b,16/369,20/369,+1 +1\n");
    const std::string json = audit_report_to_json(report);
    CHECK(json.find("\"16/369\"") != std::string::npos);
    CHECK(json.find("\"geometry_dependent\": true") != std::string::npos);
}

TEST_CASE("fraction and float formatting") {
    CHECK(to_fraction_string(Rational(16, 369)) == "16/369");
    CHECK(to_fraction_string(Rational(4, 2)) == "2");
    CHECK(to_fraction_string(Rational(0)) == "0");
    CHECK(to_fraction_string(Rational(-3, 9)) == "-1/3");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.0 / 3.0) == "0.666666666667");
    CHECK(format_config(Configuration{{2, +1}, {3, -1}}) == "+1 -1");

    // %.12g is idempotent through a parse cycle
    std::mt19937_64 rng(12);
    for (int k = 0; k < 200; ++k) {
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const std::string text = format_double(x);
        const double back = std::strtod(text.c_str(), nullptr);
        CHECK(format_double(back) == text);
        CHECK(std::abs(back - x) <= 5e-12 * std::max(x, 1e-300));
    }
}

} // TEST_SUITE("io")
