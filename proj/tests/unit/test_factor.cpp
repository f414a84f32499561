#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oddgray/factor.hpp"
#include "oddgray/verify.hpp"

using namespace oddgray;

namespace {
Bitstring bs(const char* s) { return Bitstring::parse(s); }
DyckWord dw(const char* s) { return DyckWord::parse(s); }

std::vector<std::string> texts(const std::vector<Bitstring>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}
}  // namespace

TEST_CASE("pi examples") {
    CHECK(pi(dw("10")) == FlipSequence{2, 1});
    CHECK(pi(dw("111000")) == FlipSequence{6, 2, 4, 3, 5, 1});
    CHECK(pi(dw("110100")) == FlipSequence{6, 4, 5, 2, 3, 1});
    CHECK(pi(DyckWord()).empty());
}

TEST_CASE("path examples") {
    CHECK(texts(path(dw("10")).vertices) == std::vector<std::string>{"10", "11", "01"});
    CHECK(texts(path(dw("110010")).vertices) ==
          std::vector<std::string>{"110010", "110110", "100110", "101110", "001110", "001111",
                                   "001101"});
    CHECK(texts(path(dw("101100")).vertices) ==
          std::vector<std::string>{"101100", "111100", "011100", "011101", "011001", "011011",
                                   "010011"});
}

TEST_CASE("flip_edge examples") {
    CHECK(flip_edge(dw("111000"), 3) == make_edge(bs("101101"), bs("100101")));
    CHECK(flip_edge(dw("111000"), 1) == make_edge(bs("100111"), bs("000111")));
    CHECK(flip_edge(dw("10"), 2) == make_edge(bs("10"), bs("11")));
    CHECK(make_edge(bs("11"), bs("10")) == make_edge(bs("10"), bs("11")));
    CHECK_THROWS_AS(flip_edge(dw("10"), 3), std::out_of_range);
    CHECK_THROWS_AS(flip_edge(dw("10"), 0), std::out_of_range);
}

TEST_CASE("factor examples") {
    auto f1 = factor(1);
    REQUIRE(f1.size() == 1);
    CHECK(texts(f1[0].vertices) == std::vector<std::string>{"10", "11", "01"});

    for (int k : {3, 4}) {
        const auto f = factor(k);
        CHECK(f.size() == catalan(k));
        std::set<std::uint64_t> seen;
        for (const auto& p : f) {
            CHECK(p.vertices.size() == static_cast<std::size_t>(2 * k + 1));
            for (const auto& y : p.vertices) seen.insert(y.bits());
        }
        CHECK(seen.size() == binomial(2 * k + 1, k));
    }
    CHECK_THROWS_AS(factor(0), std::out_of_range);
}

TEST_CASE("locate examples") {
    CHECK(locate(bs("110010")) == Location{dw("110010"), 0});
    CHECK(locate(bs("011011")) == Location{dw("101100"), 5});
    CHECK(locate(bs("001011")) == Location{dw("110100"), 6});
    CHECK_THROWS_AS(locate(bs("111111")), std::invalid_argument);
    CHECK_THROWS_AS(locate(bs("11100")), std::invalid_argument);
}

TEST_CASE("locate inverts path lookup") {
    for (int k = 1; k <= 11; ++k) {
        const PathLocator table(k);
        for (const DyckWord& x : enumerate_dyck(k)) {
            const auto vs = path(x).vertices;
            for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
                const Location want{x, i};
                if (k <= 8 && locate(vs[i]) != want) FAIL("locate " << vs[i].to_string());
                if (table.locate(vs[i]) != want) FAIL("table " << vs[i].to_string());
            }
        }
    }
}

TEST_CASE("vertex index is a bijection") {
    for (int k = 1; k <= 6; ++k) {
        const VertexIndex index(k);
        CHECK(index.size() == binomial(2 * k + 1, k));
        for (std::uint64_t r = 0; r < index.size(); ++r) {
            const Bitstring y = index.unrank(r);
            if (!index.contains(y) || index.rank(y) != r) FAIL("rank " << r);
        }
        CHECK_FALSE(index.contains(Bitstring(0, 2 * k)));
    }
}

TEST_CASE("pi properties and factor paths against the recursive oracle") {
    for (int k = 1; k <= 11; ++k) {
        CAPTURE(k);
        CHECK(verify_pi_properties(k).passed());
        CHECK(verify_factor(k).passed());
    }
    CHECK(verify_pi_concatenation(8).passed());
}

TEST_CASE("path_by_recursion on small words") {
    CHECK(texts(path_by_recursion(bs("10"))) == std::vector<std::string>{"10", "11", "01"});
    CHECK(path_by_recursion(bs("111000")) == path(dw("111000")).vertices);
}
