#pragma once

#include <cstdint>
#include <vector>

#include "oddgray/words.hpp"

namespace oddgray {

// Bit-flip sequence of a Dyck word: a permutation of [2k] (1-based positions).
using FlipSequence = std::vector<int>;

// pi(ε) = (), pi(1u0v) = (|u|+2, (|u|+2) - pi(mirror u), 1, (|u|+2) + pi(v)).
FlipSequence pi(const DyckWord& x);

// Path from x to its complement obtained by flipping the bits of x in the
// order given by pi(x). Adding the closing edge {x, complement(x)} turns it into
// the factor cycle C(x).
struct FactorPath {
    DyckWord origin;
    FlipSequence flips;
    std::vector<Bitstring> vertices;  // 2k+1 entries
};

FactorPath path(const DyckWord& x);

// Unordered vertex pair, stored with the smaller packing first.
struct Edge {
    Bitstring a;
    Bitstring b;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& l, const Edge& r) {
        if (l.a.bits() != r.a.bits()) return l.a.bits() <=> r.a.bits();
        return l.b.bits() <=> r.b.bits();
    }
};

Edge make_edge(const Bitstring& x, const Bitstring& y);

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return BitstringHash{}(e.a) * 31 + BitstringHash{}(e.b);
    }
};

// The edge of path(x) along which bit `position` flips. Throws
// std::out_of_range unless 1 <= position <= |x|.
Edge flip_edge(const DyckWord& x, int position);

// One path per Dyck word of D_k, in enumerate_dyck order. Requires
// 1 <= k <= kMaxSemilength.
std::vector<FactorPath> factor(int k);

struct Location {
    DyckWord origin;
    int index = 0;  // position on path(origin), 0..2k

    friend bool operator==(const Location&, const Location&) = default;
};

// The unique (x, i) with path(x).vertices[i] == y, computed by first-return
// decomposition of y. Throws std::invalid_argument unless y has even length
// 2k and weight k or k+1.
Location locate(const Bitstring& y);

// Dense ranking of B_k (length-2k strings of weight k or k+1) onto
// [0, binomial(2k+1, k)). Weight-k strings come first.
class VertexIndex {
public:
    explicit VertexIndex(int k);

    int k() const { return k_; }
    std::uint64_t size() const { return size_; }
    bool contains(const Bitstring& y) const;
    // Throws std::invalid_argument if y is not in B_k.
    std::uint64_t rank(const Bitstring& y) const;
    Bitstring unrank(std::uint64_t r) const;

private:
    int k_;
    std::uint64_t low_count_;  // binomial(2k, k)
    std::uint64_t size_;
};

// Precomputed vertex -> (origin index into enumerate_dyck(k), step) table for
// bulk lookups.
class PathLocator {
public:
    explicit PathLocator(int k);

    const VertexIndex& index() const { return index_; }
    const std::vector<DyckWord>& origins() const { return origins_; }

    std::uint32_t origin_of(const Bitstring& y) const { return origin_[index_.rank(y)]; }
    int step_of(const Bitstring& y) const { return step_[index_.rank(y)]; }
    Location locate(const Bitstring& y) const;

    // True iff {y, z} is an edge of some factor path.
    bool on_factor_path(const Bitstring& y, const Bitstring& z) const;

private:
    VertexIndex index_;
    std::vector<DyckWord> origins_;
    std::vector<std::uint32_t> origin_;
    std::vector<std::uint8_t> step_;
};

}  // namespace oddgray
