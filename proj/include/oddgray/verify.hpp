#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddgray/assembly.hpp"
#include "oddgray/report.hpp"
#include "oddgray/words.hpp"

namespace oddgray {

// Per-check feasibility bounds used by selfcheck.
inline constexpr int kFactorCheckMaxK = 11;
inline constexpr int kPsiCheckMaxK = 6;
inline constexpr int kTreeCheckMaxK = 9;
inline constexpr int kCertificateCheckMaxK = 12;
inline constexpr int kBruteForceMaxVertices = 40;

// Checks vertex count, distinctness, vertex shape and cyclic adjacency of a
// certificate using only raw bit operations:
//   odd:    consecutive subsets disjoint
//   gplus:  one-bit difference, or complementary weight-k pair
//   middle: one contains the other (one-bit difference)
VerificationReport verify_certificate(const CycleCertificate& c);

// Some Hamilton cycle of the target graph for semilength k, or nullopt if none
// exists. Throws std::length_error if the graph has more than
// kBruteForceMaxVertices vertices.
std::optional<std::vector<Bitstring>> brute_force_hamilton(int k, Target target);

// Factor paths: Catalan(k) paths of 2k+1 vertices, one-bit steps with
// alternating weights, ending at the complement, pairwise vertex-disjoint and
// covering B_k; each path also matches the first-return recursion.
VerificationReport verify_factor(int k);

// pi(x) is a permutation of [2k] and bit a_i of x is 0 for odd i, 1 for even i.
VerificationReport verify_pi_properties(int k);

// pi(xy) = (pi(x), |x| + pi(y)) for all Dyck x, y with total semilength <= max_sum.
VerificationReport verify_pi_concatenation(int max_sum);

// The literal cycles witness the patterns alpha(ε), alpha(10), beta, gamma, delta.
VerificationReport verify_base_witnesses();

// Every tuple of the closure on D_k is witnessed by its fixed witness, and no
// two tuples conflict.
VerificationReport verify_psi(int k);

// The tree T_k (or the counting tree for `family`) is a valid conflict-free
// spanning tree on D_k, every tuple is derivable from a pattern, every fixed
// witness is valid, and the witnesses are pairwise edge-disjoint.
VerificationReport verify_tree(int k, std::optional<std::uint64_t> family = std::nullopt);

// Path P(x) built from the first-return recursion instead of pi(x).
std::vector<Bitstring> path_by_recursion(const Bitstring& x);

}  // namespace oddgray
