#include <doctest.h>

#include <bit>
#include <set>
#include <stdexcept>

#include "oddgray/assembly.hpp"
#include "oddgray/factor.hpp"
#include "oddgray/verify.hpp"

using namespace oddgray;

namespace {
Bitstring bs(const char* s) { return Bitstring::parse(s); }
}  // namespace

TEST_CASE("hamilton_gplus") {
    TreeBuilder b;
    const CycleCertificate c3 = hamilton_gplus(3, b.T(3));
    CHECK(c3.vertices.size() == 35);
    CHECK(c3.target == Target::GPlus);
    CHECK(verify_certificate(c3).passed());
    const CycleCertificate c4 = hamilton_gplus(4, b.T(4));
    CHECK(c4.vertices.size() == 126);
    CHECK(verify_certificate(c4).passed());

    SpanningTree broken;
    broken.base = enumerate_dyck(3);
    broken.tuples.push_back({pattern(Pattern::alpha({})), canonical_derivation(pattern(Pattern::alpha({})))});
    CHECK_THROWS_AS(hamilton_gplus(3, broken), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_gplus(4, b.T(3)), std::invalid_argument);
}

TEST_CASE("to_odd_vertex") {
    CHECK(to_subset(to_odd_vertex(bs("111000"))) == std::vector<int>{1, 2, 3});
    CHECK(to_subset(to_odd_vertex(bs("111001"))) == std::vector<int>{4, 5, 7});
    const Bitstring a = to_odd_vertex(bs("110010"));
    const Bitstring b = to_odd_vertex(bs("001101"));
    CHECK((a.bits() & b.bits()) == 0);
    CHECK_THROWS_AS(to_odd_vertex(bs("111111")), std::invalid_argument);
    CHECK_THROWS_AS(to_odd_vertex(bs("11100")), std::invalid_argument);
}

TEST_CASE("hamilton_odd") {
    const CycleCertificate c = hamilton_odd(3);
    REQUIRE(c.vertices.size() == 35);
    CHECK(verify_certificate(c).passed());
    for (const auto& v : c.vertices) CHECK(v.weight() == 3);
    CHECK(c.vertices.front() == bs("1110000"));
    CHECK_THROWS_AS(hamilton_odd(2), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_odd(1), std::out_of_range);
    CHECK_THROWS_AS(hamilton_odd(31), std::out_of_range);
    CHECK_THROWS_AS(hamilton_odd(5, 0), std::out_of_range);

    CHECK(canonical_edge_set(hamilton_odd(6, 0).vertices) !=
          canonical_edge_set(hamilton_odd(6, 1).vertices));
}

TEST_CASE("Gray property: consecutive odd-graph vertices differ in all but one position") {
    for (int k = 3; k <= 8; ++k) {
        const auto vs = hamilton_odd(k).vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto d = std::popcount(vs[i].bits() ^ vs[(i + 1) % vs.size()].bits());
            if (d != 2 * k) FAIL("k=" << k << " step " << i);
        }
    }
}

TEST_CASE("canonical rotation") {
    for (int k = 3; k <= 6; ++k) {
        const auto vs = hamilton_odd(k).vertices;
        for (const auto& v : vs) CHECK(vs.front().bits() <= v.bits());
        CHECK(vs[1].bits() < vs.back().bits());
    }
    std::vector<Bitstring> cyc = {bs("011"), bs("001"), bs("101"), bs("100"), bs("110"), bs("010")};
    canonicalize(cyc);
    CHECK(cyc.front() == bs("100"));
    CHECK(cyc[1] == bs("110"));
}

TEST_CASE("middle levels") {
    for (int k = 1; k <= 7; ++k) {
        CAPTURE(k);
        const CycleCertificate c = hamilton_middle_levels(k);
        CHECK(c.vertices.size() == 2 * binomial(2 * k + 1, k));
        CHECK(verify_certificate(c).passed());
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            const auto& a = c.vertices[i];
            const auto& b = c.vertices[(i + 1) % c.vertices.size()];
            const bool nested = (a.bits() & b.bits()) == a.bits() || (a.bits() & b.bits()) == b.bits();
            if (!nested) FAIL("not nested at " << i);
        }
    }
    CHECK(hamilton_middle_levels(3).vertices.size() == 70);
    CHECK(canonical_edge_set(hamilton_middle_levels(6, 0).vertices) !=
          canonical_edge_set(hamilton_middle_levels(6, 1).vertices));
    CHECK_THROWS_AS(hamilton_middle_levels(0), std::out_of_range);
}

TEST_CASE("embedded middle-levels cycles agree with brute force") {
    for (int k = 1; k <= 2; ++k) {
        const auto found = brute_force_hamilton(k, Target::MiddleLevels);
        REQUIRE(found.has_value());
        CHECK(verify_certificate({k, Target::MiddleLevels, *found}).passed());
        CHECK(verify_certificate({k, Target::MiddleLevels, middle_levels_small(k)}).passed());
    }
    CHECK_THROWS_AS(middle_levels_small(3), std::out_of_range);
}

TEST_CASE("degree invariant holds through k = 9") {
    TreeBuilder b;
    for (int k = 3; k <= 9; ++k) CHECK_NOTHROW(hamilton_gplus(k, b.T(k)));
}

TEST_CASE("targets") {
    CHECK(parse_target("odd") == Target::OddGraph);
    CHECK(parse_target("gplus") == Target::GPlus);
    CHECK(parse_target("middle") == Target::MiddleLevels);
    CHECK(to_string(Target::OddGraph) == "odd");
    CHECK_THROWS_AS(parse_target("petersen"), std::invalid_argument);
}
