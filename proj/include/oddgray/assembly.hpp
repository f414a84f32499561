#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddgray/certificate.hpp"
#include "oddgray/spanning.hpp"
#include "oddgray/words.hpp"

namespace oddgray {

// Joins the factor cycles C(x), x in D_k, into one cycle of G_k^+ by taking the
// symmetric difference with the fixed witness of every tuple in `tree`.
// Throws std::invalid_argument if the tree is not a valid conflict-free
// spanning tree on D_k, std::runtime_error if a vertex ends with degree != 2 or
// the traversal closes early.
CycleCertificate hamilton_gplus(int k, const SpanningTree& tree);

// Isomorphism G_k^+ -> O_k: weight-k strings get a 0 appended, weight-(k+1)
// strings are complemented and get a 1 appended.
Bitstring to_odd_vertex(const Bitstring& y);

// Elements (1-based) of the set with characteristic vector x.
std::vector<int> to_subset(const Bitstring& x);

// Hamilton cycle of the odd graph K(2k+1, k) for k >= 3. A family mask (k >= 6
// only) selects one of the counting-variant trees.
CycleCertificate hamilton_odd(int k, std::optional<std::uint64_t> family = std::nullopt);

// Hamilton cycle of the middle levels graph H(2k+1, k) for k >= 1.
CycleCertificate hamilton_middle_levels(int k,
                                        std::optional<std::uint64_t> family = std::nullopt);

// The embedded cycles used for k = 1 and k = 2.
std::vector<Bitstring> middle_levels_small(int k);

}  // namespace oddgray
