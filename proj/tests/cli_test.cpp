#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypspec/complex_parse.hpp"

using namespace hypspec;
using nlohmann::json;

namespace {

const std::string cli = HYPSPEC_CLI_PATH;
const std::string source_dir = HYPSPEC_SOURCE_DIR;

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    const std::string out_file = "cli_test_stdout.tmp";
    const std::string err_file = "cli_test_stderr.tmp";
    const std::string cmd = cli + " " + args + " > " + out_file + " 2> " + err_file;
    const int rc = std::system(cmd.c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    return {WEXITSTATUS(rc), slurp(out_file), slurp(err_file)};
}

json fixture(const std::string& name) {
    std::ifstream in(source_dir + "/fixtures/" + name);
    REQUIRE(in);
    json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("complex literal grammar") {
    CHECK(parse_complex("1.2+3.4i") == cplx(1.2, 3.4));
    CHECK(parse_complex("-0.5-2i") == cplx(-0.5, -2.0));
    CHECK(parse_complex("3i") == cplx(0.0, 3.0));
    CHECK(parse_complex("2") == cplx(2.0, 0.0));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("1e-3-0.25i") == cplx(1e-3, -0.25));
    CHECK_THROWS_AS(parse_complex(""), precondition_error);
    CHECK_THROWS_AS(parse_complex("1.2+"), precondition_error);
    CHECK_THROWS_AS(parse_complex("1.2+3.4j"), precondition_error);
    CHECK_THROWS_AS(parse_complex("foo"), precondition_error);
}

TEST_CASE("cfun subcommand matches the n=3 closed form") {
    const auto r = run("cfun --n 3 --tau-range 0.1:100:200");
    REQUIRE(r.status == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == fixture("csv_headers.json").at("cfun").get<std::string>());
    std::string line;
    int rows = 0;
    double worst = 0.0;
    while (std::getline(is, line)) {
        double tau, cre, cim, den;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &tau, &cre, &cim,
                            &den) == 4);
        const cplx closed = 1.0 / (2.0 * cplx(0.5, tau) - 1.0);
        worst = std::max(worst, std::abs(cplx(cre, cim) - closed) / std::abs(closed));
        worst = std::max(worst, std::abs(den - 4.0 * tau * tau) / (4.0 * tau * tau));
        ++rows;
    }
    CHECK(rows == 200);
    CHECK(worst < 1e-11);
}

TEST_CASE("cfun output is byte-identical across runs") {
    const auto a = run("cfun --n 2 --tau-range 0.5:20:64");
    const auto b = run("cfun --n 2 --tau-range 0.5:20:64");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("regularize subcommand emits the paper case as JSON") {
    const auto r = run("regularize --a 1.2 --b 0.5+3i");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    const json schema = fixture("regularize.schema.json");
    for (const auto& key : schema.at("required"))
        CHECK(j.contains(key.get<std::string>()));
    REQUIRE(j.at("subtractions").size() == 2);
    for (const auto& sub : j.at("subtractions"))
        for (const auto& key : schema.at("subtraction_required"))
            CHECK(sub.contains(key.get<std::string>()));
    CHECK(j["subtractions"][0]["coeff_tag"] == "1");
    CHECK(j["subtractions"][1]["coeff_tag"] == "c_b");
    CHECK(j["certificate"]["classification"] == "square_integrable");
}

TEST_CASE("finite-verify subcommand reports all-pass on the dihedral model") {
    const auto r = run("finite-verify --model " + source_dir +
                       "/models/dihedral12.json --pairs 6");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    const json schema = fixture("finite_verify.schema.json");
    for (const auto& key : schema.at("required"))
        CHECK(j.contains(key.get<std::string>()));
    for (const auto& key : schema.at("exact_required"))
        CHECK(j.contains(key.get<std::string>()));
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("exact_mode").get<bool>());
}

TEST_CASE("spherical subcommand produces the radial header") {
    const auto r = run("spherical --n 2 --s 0.5+1i --t-range 0:2:5");
    REQUIRE(r.status == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == fixture("csv_headers.json").at("spherical").get<std::string>());
    // first row is t = 0 with psi = 1 exactly
    std::string row;
    std::getline(is, row);
    CHECK(row.substr(0, 4) == "0,1,");
}

TEST_CASE("cli errors carry the violated precondition") {
    const auto r = run("transform --bump nope");
    CHECK(r.status == 1);
    const json err = json::parse(r.err);
    CHECK(err.at("error") == "precondition");
    CHECK(err.at("message").get<std::string>().find("known bump name") !=
          std::string::npos);

    const auto r2 = run("eisenstein --s 1.001 --mode values");
    CHECK(r2.status == 1);
    CHECK(json::parse(r2.err).at("error") == "pole");
}
