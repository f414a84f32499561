#include "oddgray/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddgray {

std::string to_string(Target t) {
    switch (t) {
        case Target::GPlus: return "gplus";
        case Target::OddGraph: return "odd";
        case Target::MiddleLevels: return "middle";
    }
    return {};
}

Target parse_target(std::string_view name) {
    if (name == "gplus") return Target::GPlus;
    if (name == "odd") return Target::OddGraph;
    if (name == "middle") return Target::MiddleLevels;
    throw std::invalid_argument("unknown target: " + std::string(name));
}

void canonicalize(std::vector<Bitstring>& cycle) {
    if (cycle.size() < 3) return;
    auto smallest = std::min_element(cycle.begin(), cycle.end(), [](const auto& a, const auto& b) {
        return a.bits() < b.bits();
    });
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.back().bits() < cycle[1].bits()) std::reverse(cycle.begin() + 1, cycle.end());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> canonical_edge_set(
    const std::vector<Bitstring>& cycle) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const std::uint64_t a = cycle[i].bits();
        const std::uint64_t b = cycle[(i + 1) % cycle.size()].bits();
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace oddgray
