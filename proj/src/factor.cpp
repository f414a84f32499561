#include "oddgray/factor.hpp"

#include <bit>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace oddgray {

FlipSequence pi(const DyckWord& x) {
    if (x.empty()) return {};
    const auto [u, v] = decompose(x);
    const int pivot = u.length() + 2;
    FlipSequence out;
    out.reserve(static_cast<std::size_t>(x.length()));
    out.push_back(pivot);
    for (int a : pi(mirror(u))) out.push_back(pivot - a);
    out.push_back(1);
    for (int a : pi(v)) out.push_back(pivot + a);
    return out;
}

FactorPath path(const DyckWord& x) {
    FactorPath p{x, pi(x), {}};
    p.vertices.reserve(p.flips.size() + 1);
    Bitstring current = x.word();
    p.vertices.push_back(current);
    for (int a : p.flips) {
        current = current.flipped(a);
        p.vertices.push_back(current);
    }
    return p;
}

Edge make_edge(const Bitstring& x, const Bitstring& y) {
    return x.bits() <= y.bits() ? Edge{x, y} : Edge{y, x};
}

Edge flip_edge(const DyckWord& x, int position) {
    if (position < 1 || position > x.length()) {
        throw std::out_of_range("flip position " + std::to_string(position) + " outside [1, " +
                                std::to_string(x.length()) + "]");
    }
    const FactorPath p = path(x);
    for (std::size_t i = 0; i < p.flips.size(); ++i) {
        if (p.flips[i] == position) return make_edge(p.vertices[i], p.vertices[i + 1]);
    }
    throw std::logic_error("pi(x) is not a permutation");
}

std::vector<FactorPath> factor(int k) {
    if (k < 1 || k > kMaxSemilength) {
        throw std::out_of_range("factor requires 1 <= k <= 30");
    }
    std::vector<FactorPath> out;
    for (const DyckWord& x : enumerate_dyck(k)) out.push_back(path(x));
    return out;
}

namespace {

const Bitstring kOne = Bitstring::parse("1");
const Bitstring kZero = Bitstring::parse("0");

bool in_level_pair(const Bitstring& y) {
    if (y.length() % 2 != 0) return false;
    const int half = y.length() / 2;
    return y.weight() == half || y.weight() == half + 1;
}

// Follows the three-case decomposition of y: 1u0v (path origin), 1w1v (inside
// the mirrored-u part), or 0ū1w (inside the v part).
Location locate_rec(const Bitstring& y) {
    const int k = y.length() / 2;
    if (k == 0) return {DyckWord(), 0};
    if (is_dyck(y)) return {DyckWord(y), 0};

    std::optional<Location> found;
    for (int l = 1; l <= k; ++l) {
        if (!y.bit(2 * l)) continue;
        const Bitstring middle = y.slice(2, 2 * l - 1);
        const Bitstring tail = y.suffix_from(2 * l + 1);
        std::optional<Location> candidate;
        if (y.bit(1)) {
            const Bitstring w_mirror = mirror(middle);
            if (!is_dyck(tail) || !in_level_pair(w_mirror)) continue;
            const Location inner = locate_rec(w_mirror);
            const DyckWord u = mirror(inner.origin);
            candidate = Location{DyckWord(kOne + u.word() + kZero + tail), inner.index + 1};
        } else {
            const Bitstring u = complement(middle);
            if (!is_dyck(u) || !in_level_pair(tail)) continue;
            const Location inner = locate_rec(tail);
            candidate = Location{DyckWord(kOne + u + kZero + inner.origin.word()),
                                 2 * l + inner.index};
        }
        if (found) throw std::logic_error("ambiguous decomposition of " + y.to_string());
        found = candidate;
    }
    if (!found) throw std::logic_error("no decomposition for " + y.to_string());
    return *found;
}

}  // namespace

Location locate(const Bitstring& y) {
    if (!in_level_pair(y)) {
        throw std::invalid_argument(y.to_string() + " is not a vertex of B_k");
    }
    return locate_rec(y);
}

VertexIndex::VertexIndex(int k)
    : k_(k), low_count_(binomial(2 * k, k)), size_(binomial(2 * k + 1, k)) {
    if (k < 0 || k > kMaxSemilength) throw std::out_of_range("VertexIndex requires 0 <= k <= 30");
}

bool VertexIndex::contains(const Bitstring& y) const {
    return y.length() == 2 * k_ && (y.weight() == k_ || y.weight() == k_ + 1);
}

std::uint64_t VertexIndex::rank(const Bitstring& y) const {
    if (!contains(y)) throw std::invalid_argument(y.to_string() + " is not in B_k");
    // Colex rank of the set-bit positions.
    std::uint64_t r = 0;
    std::uint64_t bits = y.bits();
    int i = 1;
    while (bits != 0) {
        const int p = std::countr_zero(bits);
        r += binomial(p, i);
        bits &= bits - 1;
        ++i;
    }
    return y.weight() == k_ ? r : low_count_ + r;
}

Bitstring VertexIndex::unrank(std::uint64_t r) const {
    if (r >= size_) throw std::out_of_range("vertex rank out of range");
    int weight = k_;
    if (r >= low_count_) {
        r -= low_count_;
        weight = k_ + 1;
    }
    std::uint64_t bits = 0;
    int p = 2 * k_ - 1;
    for (int i = weight; i >= 1; --i) {
        while (binomial(p, i) > r) --p;
        r -= binomial(p, i);
        bits |= std::uint64_t{1} << p;
        --p;
    }
    return Bitstring(bits, 2 * k_);
}

PathLocator::PathLocator(int k) : index_(k), origins_(enumerate_dyck(k)) {
    origin_.assign(index_.size(), UINT32_MAX);
    step_.assign(index_.size(), 0);
    for (std::uint32_t o = 0; o < origins_.size(); ++o) {
        const FactorPath p = path(origins_[o]);
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            const std::uint64_t r = index_.rank(p.vertices[i]);
            if (origin_[r] != UINT32_MAX) {
                throw std::logic_error("factor paths overlap at " + p.vertices[i].to_string());
            }
            origin_[r] = o;
            step_[r] = static_cast<std::uint8_t>(i);
        }
    }
}

Location PathLocator::locate(const Bitstring& y) const {
    const std::uint64_t r = index_.rank(y);
    return {origins_[origin_[r]], step_[r]};
}

bool PathLocator::on_factor_path(const Bitstring& y, const Bitstring& z) const {
    if (!index_.contains(y) || !index_.contains(z)) return false;
    const std::uint64_t ry = index_.rank(y);
    const std::uint64_t rz = index_.rank(z);
    if (origin_[ry] != origin_[rz]) return false;
    return std::abs(int{step_[ry]} - int{step_[rz]}) == 1;
}

}  // namespace oddgray
