#include "oddgray/assembly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "oddgray/factor.hpp"

namespace oddgray {

namespace {

// Vertex -> neighbours table over B_k. A vertex may transiently hold three
// neighbours while witness edges are toggled in.
class Adjacency {
public:
    explicit Adjacency(int k) : index_(k), slots_(index_.size()), degree_(index_.size(), 0) {}

    const VertexIndex& index() const { return index_; }

    void toggle(const Bitstring& a, const Bitstring& b) {
        const auto ra = static_cast<std::uint32_t>(index_.rank(a));
        const auto rb = static_cast<std::uint32_t>(index_.rank(b));
        if (!remove(ra, rb)) {
            insert(ra, rb);
            insert(rb, ra);
        } else if (!remove(rb, ra)) {
            throw std::logic_error("asymmetric adjacency");
        }
    }

    std::uint8_t degree(std::uint64_t r) const { return degree_[r]; }
    const std::array<std::uint32_t, 3>& neighbours(std::uint64_t r) const { return slots_[r]; }

private:
    bool remove(std::uint32_t from, std::uint32_t to) {
        auto& s = slots_[from];
        for (std::uint8_t i = 0; i < degree_[from]; ++i) {
            if (s[i] == to) {
                s[i] = s[--degree_[from]];
                return true;
            }
        }
        return false;
    }
    void insert(std::uint32_t from, std::uint32_t to) {
        if (degree_[from] == 3) {
            throw std::runtime_error("vertex " + index_.unrank(from).to_string() +
                                     " exceeds degree 3 during assembly (witness clash)");
        }
        slots_[from][degree_[from]++] = to;
    }

    VertexIndex index_;
    std::vector<std::array<std::uint32_t, 3>> slots_;
    std::vector<std::uint8_t> degree_;
};

}  // namespace

CycleCertificate hamilton_gplus(int k, const SpanningTree& tree) {
    if (k < 3) throw std::invalid_argument("hamilton_gplus requires k >= 3");
    const auto words = enumerate_dyck(k);
    {
        auto base = tree.base;
        std::sort(base.begin(), base.end());
        if (base != words) {
            throw std::invalid_argument("spanning tree base set is not D_" + std::to_string(k));
        }
        const VerificationReport report = validate_tree(tree);
        if (!report.passed()) {
            throw std::invalid_argument("invalid spanning tree: " + report.summary());
        }
    }

    Adjacency adjacency(k);
    for (const DyckWord& x : words) {
        const FactorPath p = path(x);
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            adjacency.toggle(p.vertices[i], p.vertices[i + 1]);
        }
        adjacency.toggle(p.vertices.front(), p.vertices.back());
    }
    for (const DerivedTuple& t : tree.tuples) {
        const WitnessCycle w = t.derivation.witness();
        for (std::size_t i = 0; i < w.size(); ++i) adjacency.toggle(w[i], w[(i + 1) % w.size()]);
    }

    const VertexIndex& index = adjacency.index();
    for (std::uint64_t r = 0; r < index.size(); ++r) {
        if (adjacency.degree(r) != 2) {
            throw std::runtime_error("vertex " + index.unrank(r).to_string() + " has degree " +
                                     std::to_string(adjacency.degree(r)) + " after assembly");
        }
    }

    // Numerically smallest vertex of B_k: positions 1..k set.
    const Bitstring start(low_mask(k), 2 * k);
    const std::uint64_t start_rank = index.rank(start);
    const auto& first = adjacency.neighbours(start_rank);
    std::uint64_t next = index.unrank(first[0]).bits() < index.unrank(first[1]).bits() ? first[0]
                                                                                        : first[1];
    CycleCertificate cert{k, Target::GPlus, {}};
    cert.vertices.reserve(index.size());
    cert.vertices.push_back(start);
    std::uint64_t previous = start_rank;
    while (next != start_rank) {
        cert.vertices.push_back(index.unrank(next));
        if (cert.vertices.size() > index.size()) throw std::logic_error("traversal overran");
        const auto& n = adjacency.neighbours(next);
        const std::uint64_t following = n[0] == previous ? n[1] : n[0];
        previous = next;
        next = following;
    }
    if (cert.vertices.size() != index.size()) {
        throw std::runtime_error("symmetric difference is disconnected: cycle closes after " +
                                 std::to_string(cert.vertices.size()) + " of " +
                                 std::to_string(index.size()) + " vertices");
    }
    return cert;
}

Bitstring to_odd_vertex(const Bitstring& y) {
    if (y.length() % 2 != 0) throw std::invalid_argument("odd-length vertex " + y.to_string());
    const int k = y.length() / 2;
    if (y.weight() == k) return y + Bitstring(0, 1);
    if (y.weight() == k + 1) return complement(y) + Bitstring(1, 1);
    throw std::invalid_argument(y.to_string() + " is not in B_k");
}

std::vector<int> to_subset(const Bitstring& x) {
    std::vector<int> out;
    for (int i = 1; i <= x.length(); ++i) {
        if (x.bit(i)) out.push_back(i);
    }
    return out;
}

namespace {

SpanningTree tree_for(int k, std::optional<std::uint64_t> family) {
    TreeBuilder builder;
    if (family) {
        if (k < 6) throw std::out_of_range("family masks require k >= 6");
        return builder.counting_tree(k, *family);
    }
    return builder.T(k);
}

}  // namespace

CycleCertificate hamilton_odd(int k, std::optional<std::uint64_t> family) {
    if (k == 2) {
        throw std::invalid_argument(
            "k = 2 is the Petersen graph K(5,2), which has no Hamilton cycle");
    }
    if (k < 3 || k > kMaxSemilength) throw std::out_of_range("hamilton_odd requires 3 <= k <= 30");
    CycleCertificate cert = hamilton_gplus(k, tree_for(k, family));
    for (auto& y : cert.vertices) y = to_odd_vertex(y);
    cert.target = Target::OddGraph;
    canonicalize(cert.vertices);
    return cert;
}

std::vector<Bitstring> middle_levels_small(int k) {
    std::vector<std::string_view> text;
    if (k == 1) {
        text = {"100", "110", "010", "011", "001", "101"};
    } else if (k == 2) {
        text = {"11000", "11100", "10100", "10110", "10010", "11010", "01010",
                "01011", "00011", "10011", "10001", "10101", "00101", "00111",
                "00110", "01110", "01100", "01101", "01001", "11001"};
    } else {
        throw std::out_of_range("embedded middle-levels cycles exist for k = 1, 2 only");
    }
    std::vector<Bitstring> out;
    for (auto s : text) out.push_back(Bitstring::parse(s));
    return out;
}

// Walks the G_k^+ cycle with a 0 appended. Each closing edge {x, x̄}, x in D_k,
// is replaced by the detour x̄0, x̄1, complement(P(x))·1, x1, x0 (or its reverse).
CycleCertificate hamilton_middle_levels(int k, std::optional<std::uint64_t> family) {
    if (k < 1 || k > kMaxSemilength) throw std::out_of_range("middle levels require 1 <= k <= 30");
    CycleCertificate cert{k, Target::MiddleLevels, {}};
    if (k <= 2) {
        if (family) throw std::out_of_range("family masks require k >= 6");
        cert.vertices = middle_levels_small(k);
        return cert;
    }
    const CycleCertificate base = hamilton_gplus(k, tree_for(k, family));
    const Bitstring zero(0, 1);
    const Bitstring one(1, 1);
    const std::size_t n = base.vertices.size();
    cert.vertices.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Bitstring& a = base.vertices[i];
        const Bitstring& b = base.vertices[(i + 1) % n];
        cert.vertices.push_back(a + zero);
        if (std::popcount(a.bits() ^ b.bits()) != 2 * k) continue;
        const bool a_is_origin = is_dyck(a);
        const DyckWord x(a_is_origin ? a : b);
        std::vector<Bitstring> detour;
        for (const Bitstring& y : path(x).vertices) detour.push_back(complement(y) + one);
        if (a_is_origin) std::reverse(detour.begin(), detour.end());
        cert.vertices.insert(cert.vertices.end(), detour.begin(), detour.end());
    }
    canonicalize(cert.vertices);
    return cert;
}

}  // namespace oddgray
