#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddgray/words.hpp"

namespace oddgray {

enum class Target { GPlus, OddGraph, MiddleLevels };

std::string to_string(Target t);
// Accepts "gplus", "odd", "middle".
Target parse_target(std::string_view name);

// A claimed Hamilton cycle.
//   GPlus:        length-2k strings of weight k or k+1 (binomial(2k+1,k) vertices)
//   OddGraph:     length-(2k+1) strings of weight k (binomial(2k+1,k) vertices)
//   MiddleLevels: length-(2k+1) strings of weight k or k+1 (twice as many)
struct CycleCertificate {
    int k = 0;
    Target target = Target::OddGraph;
    std::vector<Bitstring> vertices;
};

// Rotates the cycle to start at its numerically smallest vertex and orients it
// toward the smaller of that vertex's two neighbours.
void canonicalize(std::vector<Bitstring>& cycle);

// Edge set of a cycle as sorted (min, max) packings; equal iff the cycles are
// the same as graphs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> canonical_edge_set(
    const std::vector<Bitstring>& cycle);

}  // namespace oddgray
