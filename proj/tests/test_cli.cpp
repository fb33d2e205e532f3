#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "specturan/enumerate.hpp"
#include "specturan/hypergraph.hpp"

using namespace specturan;

namespace {

std::string cli(const std::string& args, int* exit_code = nullptr) {
    const char* bin = std::getenv("SPECTURAN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

}  // namespace

TEST_CASE("cli gen emits canonical HGR and is byte-stable" * doctest::skip(false)) {
    if (!std::getenv("SPECTURAN_BIN")) return;  // only meaningful under ctest
    std::string first = cli("gen --kind c5-blowup --n 10");
    std::string second = cli("gen --kind c5-blowup --n 10");
    CHECK(first == second);
    CHECK(from_hgr(first) == c5_blowup(10));

    std::string turan = cli("gen --kind turan --n 10 --l 5 --r 5");
    CHECK(from_hgr(turan).edges.size() == 32);
}

TEST_CASE("cli count pipeline round trip") {
    if (!std::getenv("SPECTURAN_BIN")) return;
    cli("gen --kind cycle --n 5 -o /tmp/specturan_cli_c5.hgr");
    cli("gen --kind complete --n 5 --r 2 -o /tmp/specturan_cli_k5.hgr");
    int code = -1;
    std::string out =
        cli("count --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_k5.hgr", &code);
    CHECK(code == 0);
    CHECK(out.find("\"copies\": 12") != std::string::npos);

    std::string csv = cli(
        "count --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_k5.hgr --format csv");
    CHECK(csv.find("embeddings,aut,copies\n120,10,12") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    if (!std::getenv("SPECTURAN_BIN")) return;
    int code = -1;
    cli("count --q /nonexistent.hgr --h /nonexistent.hgr", &code);
    CHECK(code == 2);
    cli("gen --kind unknown-kind --n 4", &code);
    CHECK(code == 2);
    cli("", &code);
    CHECK(code == 2);
    // a verify that holds exits 0
    cli("verify blowup --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_c5.hgr "
        "--sizes 2,2,2,2,2",
        &code);
    CHECK(code == 0);
}

TEST_CASE("cli specrad and derive") {
    if (!std::getenv("SPECTURAN_BIN")) return;
    cli("gen --kind cycle --n 5 -o /tmp/specturan_cli_c5.hgr");
    std::string json =
        cli("specrad --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_c5.hgr --p 2");
    CHECK(json.find("\"lambda\"") != std::string::npos);
    CHECK(json.find("\"converged\":true") != std::string::npos);

    int code = -1;
    std::string wsg =
        cli("derive --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_c5.hgr", &code);
    CHECK(code == 0);
    WeightedSGraph d = from_wsg(wsg);
    CHECK(d.total_weight() == 1);
}

TEST_CASE("cli sweep and density") {
    if (!std::getenv("SPECTURAN_BIN")) return;
    cli("gen --kind cycle --n 5 -o /tmp/specturan_cli_c5.hgr");
    int code = -1;
    std::string sweep =
        cli("sweep --q /tmp/specturan_cli_c5.hgr --h /tmp/specturan_cli_c5.hgr --p-list 1,2,4",
            &code);
    CHECK(code == 0);
    CHECK(sweep.rfind("p,lambda,f,scaled,residual,converged", 0) == 0);
    CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 4);

    std::string density = cli(
        "density --q /tmp/specturan_cli_c5.hgr --family triangle-free --n-min 5 --n-max 6 --p 2 "
        "--plot /tmp/specturan_cli_plot.tsv",
        &code);
    CHECK(code == 0);
    CHECK(density.find("5,1,1,") != std::string::npos);  // ex(C5,5)=1, ratio 1
    std::ifstream plot("/tmp/specturan_cli_plot.tsv");
    CHECK(plot.good());
}

TEST_CASE("cli enumerate respects checkpoints and limits") {
    if (!std::getenv("SPECTURAN_BIN")) return;
    std::string all = cli("enumerate --n 4 --r 2");
    // records are separated by blank lines
    CHECK(std::count(all.begin(), all.end(), '\n') >= 11);

    std::string first = cli("enumerate --n 4 --r 2 --limit 3 --emit-checkpoints");
    auto pos = first.rfind("# checkpoint: ");
    REQUIRE(pos != std::string::npos);
    std::string token = first.substr(pos + 14);
    token = token.substr(0, token.find('\n'));

    std::string rest = cli("enumerate --n 4 --r 2 --resume " + token);
    std::string joined = first;
    // strip checkpoint comments from the first part
    std::string cleaned;
    std::istringstream is(first);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("# checkpoint", 0) != 0) cleaned += line + "\n";
    CHECK(cleaned + rest == all);
}
