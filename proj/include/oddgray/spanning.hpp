#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oddgray/flippable.hpp"
#include "oddgray/report.hpp"
#include "oddgray/words.hpp"

namespace oddgray {

// Split of D_k used by the inductive tree construction. For k >= 4,
// E = 10·D_{k-1} and F is the rest.
struct Partition {
    std::vector<DyckWord> E;
    std::vector<DyckWord> F;
};

// Throws std::out_of_range for k < 2.
Partition partition_EF(int k);

struct DerivedTuple {
    FlippableTuple tuple;
    Derivation derivation;
};

// A set of flippable tuples over the base set `base`, each carrying the
// derivation its witness is built from.
struct SpanningTree {
    std::vector<DyckWord> base;
    std::vector<DerivedTuple> tuples;

    std::vector<FlippableTuple> tuple_set() const;
};

// Applies a context to every base word and every tuple (mirrored when |u| is
// odd).
SpanningTree within(const SpanningTree& tree, const Context& c);

// Checks that `tree` is a conflict-free spanning tree of the hypergraph on
// `tree.base`: supports inside the base, pairwise support intersections of
// size <= 1, sum of (l - 1) equal to |base| - 1, connected incidence
// structure, and distinct marks on shared words.
VerificationReport validate_tree(const SpanningTree& tree);

struct TreeSet {
    std::optional<SpanningTree> T;  // spanning tree of H_k, k >= 3
    SpanningTree E;                 // spanning tree of H_k[E_k]
    SpanningTree F;                 // spanning tree of H_k[F_k]
};

// Memoizing builder for the mutual induction T_k / E_k / F_k. Not thread-safe
// while building; the returned references stay valid for the builder's
// lifetime.
class TreeBuilder {
public:
    const SpanningTree& T(int k);
    const SpanningTree& E(int k);
    const SpanningTree& F(int k);

    // Variant spanning tree of H_k for k >= 6. Bit i of `family` selects the
    // alternative connector alpha(1100)v for the i-th word v of
    // enumerate_dyck(k - 5). family == 0 reproduces T(k).
    SpanningTree counting_tree(int k, std::uint64_t family);

private:
    SpanningTree build_F(int k, std::uint64_t family);
    SpanningTree build_T(int k, const SpanningTree& f);

    std::map<int, SpanningTree> t_, e_, f_;
};

// Trees for semilength k >= 2. T is present for k >= 3.
TreeSet build_trees(int k);

// Spanning tree of H_k from the counting construction. Throws
// std::out_of_range for k < 6 or a family mask with bits past |D_{k-5}|.
SpanningTree build_counting_tree(int k, std::uint64_t family);

// Number of family bits, |D_{k-5}|, for k >= 6.
std::uint64_t family_bits(int k);

// The alternative split E'_4 / F'_4 and its trees.
SpanningTree alt_E4_tree();
SpanningTree alt_F4_tree();

}  // namespace oddgray
