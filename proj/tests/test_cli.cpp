#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pod2/qseries.hpp"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef POD2_CLI_PATH
#error "POD2_CLI_PATH must point at the pod2 executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(POD2_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("count") {
    auto r = run("count 0 6");
    CHECK(r.status == 0);
    CHECK(r.out == "0 1\n1 0\n2 1\n3 1\n4 3\n5 2\n6 5\n");
    CHECK(run("count 0 0").out == "0 1\n");
    const auto ten = run("count 10 10 --csv");
    CHECK(ten.out == "n,pod2\n10," + pod2::qseries::pod2_series_identity(10)[10].str() + "\n");
    const auto js = run("count 3 4 --json");
    const auto rows = lines(js.out);
    REQUIRE(rows.size() == 2);
    CHECK(nlohmann::json::parse(rows[1])["pod2"] == "3");
    CHECK(run("count 5 2").status != 0);
}

TEST_CASE("exact") {
    const auto six = run("exact 6 --check");
    CHECK(six.status == 0);
    CHECK(six.out.find("rounded=5") != std::string::npos);
    const auto zero = run("exact 0 --check --json");
    CHECK(zero.status == 0);
    CHECK(nlohmann::json::parse(zero.out)["rounded"] == 1);
    const auto big = run("exact 25 --kmax 150 --json");
    CHECK(big.status == 0);
    const auto j = nlohmann::json::parse(big.out);
    CHECK(j["per_family"].size() == 4);
    CHECK(j["k_max"] == 150);
    CHECK(j["rounded"] == j["oracle"]);
    CHECK(run("exact 3 --kmax 3 --check").status == 2);
    CHECK(run("exact 3 --kmax 0").status != 0);
    CHECK(run("exact 3 --quad-tol -1").status != 0);
    CHECK(run("exact 3 --precision quad").status != 0);
    CHECK(run("exact 3 --json --csv").status != 0);
}

TEST_CASE("exact output is deterministic") {
    const auto a = run("exact 17 --json --no-timing");
    const auto b = run("exact 17 --json --no-timing");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["ms"] == 0.0);
}

TEST_CASE("extended precision mode") {
    const auto r = run("exact 10 --kmax 40 --precision extended:25 --quad-tol 1e-14 --json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rounded"] == pod2::qseries::pod2_count_oracle(10).convert_to<int>());
    CHECK(j["imag_residual"].get<double>() < 1e-12);
}

TEST_CASE("verify") {
    const auto all = run("verify 0 40 --csv --no-timing");
    CHECK(all.status == 0);
    const auto rows = lines(all.out);
    REQUIRE(rows.size() == 42);
    CHECK(rows[0].rfind("n,oracle,estimate", 0) == 0);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find(",true,") != std::string::npos);
    const auto starved = run("verify 0 5 --kmax 3 --csv");
    CHECK(starved.status == 2);
    CHECK(starved.out.find(",false,") != std::string::npos);
    CHECK(run("verify 0 3 --json").status == 0);
}

TEST_CASE("kloosterman") {
    const auto single = run("kloosterman 121 1 0 --both");
    CHECK(single.status == 0);
    CHECK(single.out.find("definition: -1 + 0i") != std::string::npos);
    CHECK(single.out.find("closed:     -1 + 0i") != std::string::npos);
    CHECK(single.out.find("diff:       0.000e+00") != std::string::npos);
    const auto six = run("kloosterman 611 6 0 --both --json");
    CHECK(six.status == 0);
    CHECK(nlohmann::json::parse(six.out)["diff"].get<double>() < 1e-10);
    const auto mismatch = run("kloosterman 231 3 0");
    CHECK(mismatch.status != 0);
    CHECK(mismatch.out.empty());
    CHECK(run("kloosterman 621 12 1 0 9").status != 0);
    CHECK(run("kloosterman 611 6 0 0 1").status != 0);
    const auto closed = run("kloosterman 221 10 3 0 2 --closed");
    CHECK(closed.out.find("closed:") != std::string::npos);
    CHECK(closed.out.find("definition:") == std::string::npos);
    CHECK(closed.out.find("bound ratio") != std::string::npos);
}

TEST_CASE("checks") {
    for (const char* suite : {"identities", "multipliers", "kloosterman", "transforms"}) {
        const auto r = run(std::string("checks --suite ") + suite + " --json --no-timing");
        CAPTURE(suite);
        CHECK(r.status == 0);
        for (const auto& line : lines(r.out)) CHECK(nlohmann::json::parse(line)["passed"] == true);
    }
    CHECK(run("checks --suite bogus").status != 0);
}
