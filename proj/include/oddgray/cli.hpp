#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "oddgray/flippable.hpp"
#include "oddgray/spanning.hpp"

namespace oddgray {

// Default resource ceilings per command. ODDGRAY_MAX_K may lower them.
inline constexpr int kDefaultGenMaxK = 14;
inline constexpr int kDefaultTreeMaxK = 12;
inline constexpr int kDefaultFactorMaxK = 12;

// min(fallback, ODDGRAY_MAX_K) when the variable holds a positive integer.
int resource_ceiling(int fallback);

// {"members":[{"word":"111000","mark":5},...]}
std::string tuple_json(const FlippableTuple& t);

// {"k":K,"family":MASK|null,"X":[...],"tuples":[{"members":[...],
//  "derivation":{"pattern":..,"u":..,"v":..},"witness":[...]},...]}
std::string tree_json(int k, std::optional<std::uint64_t> family, const SpanningTree& tree);

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 verification failure, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddgray
