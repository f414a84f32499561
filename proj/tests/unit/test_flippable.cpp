#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oddgray/flippable.hpp"
#include "oddgray/verify.hpp"

using namespace oddgray;

namespace {
Bitstring bs(const char* s) { return Bitstring::parse(s); }
DyckWord dw(const char* s) { return DyckWord::parse(s); }
MarkedDyckWord md(const char* s, int m) { return {dw(s), m}; }

FlippableTuple tuple(std::vector<MarkedDyckWord> ms) { return FlippableTuple(std::move(ms)); }

WitnessCycle cycle(std::initializer_list<const char*> vs) {
    WitnessCycle out;
    for (const char* v : vs) out.push_back(bs(v));
    return out;
}

bool contains(const std::vector<PsiEntry>& psi, const FlippableTuple& t) {
    return std::any_of(psi.begin(), psi.end(), [&](const PsiEntry& e) { return e.tuple == t; });
}
}  // namespace

TEST_CASE("marked words: wrap and mirror") {
    CHECK(wrap(md("101100", 5), bs("1"), bs("010")) == md("1101100010", 6));
    CHECK(mirror(md("101100", 5)) == md("110010", 2));
    CHECK(wrap(md("101100", 5), bs(""), bs("")) == md("101100", 5));
    CHECK_THROWS_AS(MarkedDyckWord(dw("10"), 3), std::invalid_argument);
    CHECK_THROWS_AS(wrap(md("10", 1), bs("1"), bs("1")), std::invalid_argument);
}

TEST_CASE("tuple invariants") {
    CHECK_THROWS_AS(tuple({md("111000", 1), md("110100", 1)}), std::invalid_argument);
    CHECK_THROWS_AS(tuple({md("111000", 1), md("111000", 2), md("110100", 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(tuple({md("111000", 1), md("1100", 2), md("110100", 1)}), std::invalid_argument);
    CHECK(tuple({md("101010", 1), md("111000", 6), md("101100", 5)}) ==
          tuple({md("111000", 6), md("101100", 5), md("101010", 1)}));
}

TEST_CASE("patterns") {
    CHECK(pattern(Pattern::beta()) == tuple({md("111000", 6), md("101100", 5), md("101010", 1)}));
    CHECK(pattern(Pattern::delta()) ==
          tuple({md("111000", 6), md("110100", 5), md("101100", 3), md("101010", 1)}));
    CHECK(pattern(Pattern::alpha({})) ==
          tuple({md("111000", 5), md("110100", 6), md("110010", 2)}));
    CHECK(pattern(Pattern::gamma()) ==
          tuple({md("11001100", 2), md("11011000", 8), md("11101000", 6)}));
    CHECK(pattern(Pattern::alpha(dw("10"))) ==
          tuple({md("11011000", 7), md("11010100", 8), md("11010010", 4)}));
    CHECK(Pattern::parse("alpha(10)") == Pattern::alpha(dw("10")));
    CHECK(Pattern::parse("alpha") == Pattern::alpha({}));
    CHECK_THROWS_AS(Pattern::parse("epsilon"), std::invalid_argument);
}

TEST_CASE("base witnesses") {
    CHECK(base_witness(Pattern::beta()) ==
          cycle({"111000", "111001", "011001", "011011", "011010", "111010"}));
    CHECK(base_witness(Pattern::alpha({})) ==
          cycle({"100101", "100111", "100110", "110110", "110100", "110101"}));
    CHECK(base_witness(Pattern::gamma()) ==
          cycle({"11011100", "10011100", "10011101", "10011001", "11011001", "11011000"}));
    CHECK(base_witness(Pattern::alpha(dw("10"))) ==
          cycle({"11000101", "11000111", "11000110", "11010110", "11010100", "11010101"}));
    CHECK(verify_base_witnesses().passed());
}

TEST_CASE("apply_context") {
    const FlippableTuple beta = pattern(Pattern::beta());
    CHECK(apply_context(beta, {bs(""), bs("10")}) ==
          tuple({md("11100010", 6), md("10110010", 5), md("10101010", 1)}));
    CHECK(apply_context(beta, {bs("1"), bs("0")}) ==
          tuple({md("11110000", 2), md("11100100", 3), md("11010100", 7)}));
    CHECK(apply_context(beta, {}) == beta);
    CHECK_THROWS_AS(apply_context(beta, {bs("0"), bs("1")}), std::invalid_argument);
}

TEST_CASE("odd prefixes mirror member-wise") {
    const Pattern patterns[] = {Pattern::alpha({}), Pattern::beta(), Pattern::gamma(),
                                Pattern::delta()};
    for (int s = 1; s <= 3; ++s) {
        for (const DyckWord& c : enumerate_dyck(s)) {
            for (int cut = 1; cut < c.length(); cut += 2) {
                const Context ctx{c.word().prefix(cut), c.word().suffix_from(cut + 1)};
                for (const Pattern& p : patterns) {
                    const FlippableTuple base = pattern(p);
                    std::vector<MarkedDyckWord> ms;
                    for (const auto& m : base.members()) ms.push_back(wrap(mirror(m), ctx.u, ctx.v));
                    CHECK(apply_context(pattern(p), ctx) == FlippableTuple(ms));
                }
            }
        }
    }
}

TEST_CASE("transported witnesses") {
    const WitnessCycle appended = witness(Pattern::alpha({}), {bs(""), bs("10")});
    const WitnessCycle base = base_witness(Pattern::alpha({}));
    REQUIRE(appended.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(appended[i] == base[i] + bs("10"));

    const WitnessCycle wrapped = witness(Pattern::beta(), {bs("1"), bs("0")});
    const WitnessCycle beta = base_witness(Pattern::beta());
    REQUIRE(wrapped.size() == beta.size());
    CHECK(wrapped.front() == bs("11110001"));
    for (std::size_t i = 0; i < beta.size(); ++i) CHECK(wrapped[i] == bs("1") + mirror(beta[i]) + bs("1"));
    CHECK(is_witness(apply_context(pattern(Pattern::beta()), {bs("1"), bs("0")}), wrapped));

    CHECK(witness(Pattern::alpha(dw("10")), {}) == base_witness(Pattern::alpha(dw("10"))));
}

TEST_CASE("is_witness") {
    const WitnessCycle w = cycle({"100101", "100111", "100110", "110110", "110100", "110101"});
    const WitnessCycle c_delta =
        cycle({"111000", "111001", "110001", "110011", "010011", "011011", "011010", "111010"});
    CHECK(is_witness(pattern(Pattern::alpha({})), w));
    CHECK_FALSE(is_witness(pattern(Pattern::beta()), c_delta));
    CHECK(is_witness(pattern(Pattern::delta()), c_delta));
    CHECK_FALSE(is_witness(pattern(Pattern::beta()), w));
    WitnessCycle broken = w;
    std::swap(broken[0], broken[1]);
    CHECK_FALSE(is_witness(pattern(Pattern::alpha({})), broken));
}

TEST_CASE("enumerate_psi") {
    CHECK(enumerate_psi(2).empty());

    const auto psi3 = enumerate_psi(3);
    CHECK(psi3.size() == 3);
    CHECK(contains(psi3, pattern(Pattern::alpha({}))));
    CHECK(contains(psi3, pattern(Pattern::beta())));
    CHECK(contains(psi3, pattern(Pattern::delta())));

    const auto psi4 = enumerate_psi(4);
    const Bitstring e, ten = bs("10"), one = bs("1"), zero = bs("0");
    const FlippableTuple a = pattern(Pattern::alpha({}));
    const FlippableTuple b = pattern(Pattern::beta());
    const FlippableTuple d = pattern(Pattern::delta());
    CHECK(contains(psi4, pattern(Pattern::gamma())));
    CHECK(contains(psi4, pattern(Pattern::alpha(dw("10")))));
    CHECK(contains(psi4, apply_context(a, {e, ten})));
    CHECK(contains(psi4, apply_context(a, {ten, e})));
    CHECK(contains(psi4, apply_context(b, {e, ten})));
    CHECK(contains(psi4, apply_context(b, {ten, e})));
    CHECK(contains(psi4, apply_context(b, {one, zero})));
    CHECK(contains(psi4, apply_context(d, {one, zero})));
    CHECK(contains(psi4, apply_context(d, {ten, e})));
    CHECK(contains(psi4, apply_context(d, {e, ten})));
    CHECK(contains(psi4, apply_context(a, {one, zero})));
}

TEST_CASE("closure tuples are witnessed and conflict-free") {
    for (int k = 3; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(verify_psi(k).passed());
    }
}

TEST_CASE("derivations") {
    const FlippableTuple t = apply_context(pattern(Pattern::beta()), {bs("1"), bs("0")});
    const auto all = derivations_of(t);
    REQUIRE_FALSE(all.empty());
    CHECK(canonical_derivation(t) == all.front());
    CHECK(canonical_derivation(t).tuple() == t);
    CHECK(canonical_derivation(pattern(Pattern::gamma())).pattern == Pattern::gamma());
    const FlippableTuple bogus = tuple({md("111000", 1), md("110100", 1), md("110010", 1)});
    CHECK(derivations_of(bogus).empty());
    CHECK_THROWS_AS(canonical_derivation(bogus), std::invalid_argument);
}

TEST_CASE("check_conflict_free") {
    const auto psi3 = enumerate_psi(3);
    std::vector<FlippableTuple> tuples;
    for (const auto& e : psi3) tuples.push_back(e.tuple);
    CHECK(check_conflict_free(tuples).empty());

    const std::vector<FlippableTuple> ab = {pattern(Pattern::alpha({})), pattern(Pattern::beta())};
    CHECK(check_conflict_free(ab).empty());
    CHECK(ab[0].mark_of(dw("111000")) == 5);
    CHECK(ab[1].mark_of(dw("111000")) == 6);

    const std::vector<FlippableTuple> clash = {
        tuple({md("111000", 1), md("110100", 1), md("110010", 1)}),
        tuple({md("111000", 1), md("101100", 1), md("101010", 1)})};
    const auto conflicts = check_conflict_free(clash);
    REQUIRE(conflicts.size() == 1);
    CHECK(conflicts[0].shared == dw("111000"));
    CHECK(conflicts[0].mark == 1);
}
