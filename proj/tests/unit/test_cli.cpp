#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oddgray/cli.hpp"

using namespace oddgray;

#ifndef ODDGRAY_GOLDEN_DIR
#error "ODDGRAY_GOLDEN_DIR must be defined"
#endif

namespace {
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("gen --k 3 --format subsets matches the frozen golden") {
    const Result r = call({"gen", "--k", "3", "--format", "subsets"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 35);
    CHECK(lines(r.out).front() == "{1,2,3}");
    CHECK(r.out == slurp(std::string(ODDGRAY_GOLDEN_DIR) + "/gen_k3_subsets.txt"));
    CHECK(call({"gen", "--k", "3", "--format", "subsets"}).out == r.out);
}

TEST_CASE("gen --k 2 explains the Petersen exception") {
    const Result r = call({"gen", "--k", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Petersen") != std::string::npos);
}

TEST_CASE("bad arguments exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"gen"}).code == 2);
    CHECK(call({"gen", "--k", "x"}).code == 2);
    CHECK(call({"gen", "--k", "1"}).code == 2);
    CHECK(call({"gen", "--k", "31"}).code == 2);
    CHECK(call({"gen", "--k", "3", "--format", "hex"}).code == 2);
    CHECK(call({"gen", "--k", "5", "--family", "1"}).code == 2);
    CHECK(call({"gen", "--k", "6", "--family", "2"}).code == 2);
    CHECK(call({"gen", "--k", "6", "--family", "one"}).code == 2);
    CHECK(call({"middle", "--k", "0"}).code == 2);
    CHECK(call({"tree", "--k", "2"}).code == 2);
    CHECK(call({"verify", "--k", "3", "--input", "/nonexistent/file", "--target", "odd"}).code == 2);
    CHECK(call({"verify", "--k", "3", "--input", "x", "--target", "kneser"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("gen formats") {
    const auto bits = lines(call({"gen", "--k", "3"}).out);
    const auto delta = lines(call({"gen", "--k", "3", "--format", "delta"}).out);
    REQUIRE(bits.size() == 35);
    REQUIRE(delta.size() == 35);
    CHECK(bits.front() == "1110000");
    // Decode the delta stream from the canonical start {1,...,k}.
    std::string cur = "1110000";
    for (std::size_t i = 0; i < delta.size(); ++i) {
        CHECK(cur == bits[i]);
        const int keep = std::stoi(delta[i]) - 1;
        std::string next = cur;
        for (std::size_t j = 0; j < next.size(); ++j) {
            next[j] = (static_cast<int>(j) == keep) ? '0' : (cur[j] == '1' ? '0' : '1');
        }
        CHECK(cur[keep] == '0');
        cur = next;
    }
    CHECK(cur == bits.front());
    CHECK(call({"gen", "--k", "6", "--family", "1"}).out != call({"gen", "--k", "6"}).out);
    CHECK(call({"gen", "--k", "6", "--family", "0x1"}).code == 0);
}

TEST_CASE("middle and factor") {
    const Result m = call({"middle", "--k", "1"});
    CHECK(m.code == 0);
    CHECK(lines(m.out).size() == 6);
    CHECK(lines(call({"middle", "--k", "3", "--format", "subsets"}).out).size() == 70);
    const auto f = lines(call({"factor", "--k", "1"}).out);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == "10,11,01");
    CHECK(lines(call({"factor", "--k", "3"}).out).size() == 5);
}

TEST_CASE("tree json") {
    const Result r = call({"tree", "--k", "3", "--emit", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["k"] == 3);
    CHECK(doc["X"].size() == 5);
    REQUIRE(doc["tuples"].size() == 2);
    CHECK(doc["tuples"][0]["members"].size() == 3);
    CHECK(doc["tuples"][0]["witness"].size() == 6);
    CHECK(doc["tuples"][0]["derivation"].contains("pattern"));
    const auto counting = nlohmann::json::parse(call({"tree", "--k", "6", "--family", "1"}).out);
    CHECK(counting["family"] == 1);

    const std::string t = tuple_json(pattern(Pattern::beta()));
    CHECK(t == R"({"members":[{"word":"111000","mark":6},{"word":"101100","mark":5},{"word":"101010","mark":1}]})");
}

TEST_CASE("verify round trip") {
    const std::string path = "oddgray_cli_test_cert.txt";
    {
        std::ofstream f(path);
        f << call({"gen", "--k", "4"}).out;
    }
    CHECK(call({"verify", "--k", "4", "--input", path, "--target", "odd"}).code == 0);
    CHECK(call({"verify", "--k", "4", "--input", path, "--target", "middle"}).code == 1);
    {
        std::ofstream f(path);
        f << call({"middle", "--k", "2"}).out;
    }
    CHECK(call({"verify", "--k", "2", "--input", path, "--target", "middle"}).code == 0);
    {
        std::ofstream f(path);
        f << "1100\nnot-bits\n";
    }
    const Result bad = call({"verify", "--k", "2", "--input", path, "--target", "gplus"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("parse") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("selfcheck and ceilings") {
    const Result r = call({"selfcheck", "--max-k", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    setenv("ODDGRAY_MAX_K", "4", 1);
    CHECK(resource_ceiling(14) == 4);
    CHECK(call({"gen", "--k", "5"}).code == 2);
    CHECK(call({"gen", "--k", "4"}).code == 0);
    setenv("ODDGRAY_MAX_K", "junk", 1);
    CHECK(resource_ceiling(14) == 14);
    unsetenv("ODDGRAY_MAX_K");
    CHECK(resource_ceiling(14) == 14);
}

TEST_CASE("bench prints a row per k") {
    const Result r = call({"bench", "--max-k", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 3);
}
