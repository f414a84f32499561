#include "oddgray/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "oddgray/factor.hpp"
#include "oddgray/flippable.hpp"
#include "oddgray/spanning.hpp"

namespace oddgray {

namespace {

int vertex_length(int k, Target t) { return t == Target::GPlus ? 2 * k : 2 * k + 1; }

std::uint64_t vertex_count(int k, Target t) {
    const std::uint64_t n = binomial(2 * k + 1, k);
    return t == Target::MiddleLevels ? 2 * n : n;
}

bool vertex_ok(int k, Target t, std::uint64_t bits) {
    const int w = std::popcount(bits);
    if (t == Target::OddGraph) return w == k;
    return w == k || w == k + 1;
}

bool adjacent(int k, Target t, std::uint64_t a, std::uint64_t b) {
    switch (t) {
        case Target::OddGraph:
            return (a & b) == 0;
        case Target::MiddleLevels:
            return std::popcount(a ^ b) == 1;
        case Target::GPlus:
            if (std::popcount(a ^ b) == 1) return true;
            return (a ^ b) == low_mask(2 * k) && (std::popcount(a) == k || std::popcount(b) == k);
    }
    return false;
}

}  // namespace

VerificationReport verify_certificate(const CycleCertificate& c) {
    VerificationReport report;
    if (c.k < 1 || c.k > kMaxSemilength) {
        report.fail("k", "k = " + std::to_string(c.k) + " out of range");
        return report;
    }
    const int len = vertex_length(c.k, c.target);
    const std::uint64_t expected = vertex_count(c.k, c.target);
    if (c.vertices.size() != expected) {
        report.fail("count", std::to_string(c.vertices.size()) + " vertices, expected " +
                                 std::to_string(expected));
    }
    std::vector<std::uint64_t> packed;
    packed.reserve(c.vertices.size());
    for (const Bitstring& x : c.vertices) {
        if (x.length() != len || !vertex_ok(c.k, c.target, x.bits())) {
            report.fail("vertex", x.to_string() + " is not a vertex");
        }
        packed.push_back(x.bits());
    }
    std::sort(packed.begin(), packed.end());
    if (auto it = std::adjacent_find(packed.begin(), packed.end()); it != packed.end()) {
        report.fail("distinct", Bitstring(*it, len).to_string() + " repeats");
    }
    const std::size_t n = c.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Bitstring& a = c.vertices[i];
        const Bitstring& b = c.vertices[(i + 1) % n];
        if (!adjacent(c.k, c.target, a.bits(), b.bits())) {
            report.fail("adjacency", a.to_string() + " -> " + b.to_string());
        }
    }
    return report;
}

std::optional<std::vector<Bitstring>> brute_force_hamilton(int k, Target target) {
    if (k < 1) throw std::out_of_range("brute force requires k >= 1");
    const std::uint64_t count = vertex_count(k, target);
    if (count > static_cast<std::uint64_t>(kBruteForceMaxVertices)) {
        throw std::length_error("graph has " + std::to_string(count) +
                                " vertices, brute force is limited to " +
                                std::to_string(kBruteForceMaxVertices));
    }
    const int len = vertex_length(k, target);
    std::vector<std::uint64_t> vertex;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
        if (vertex_ok(k, target, b)) vertex.push_back(b);
    }
    const std::size_t n = vertex.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && adjacent(k, target, vertex[i], vertex[j])) adj[i].push_back(j);
        }
    }

    std::vector<bool> used(n, false);
    std::vector<std::size_t> order{0};
    used[0] = true;
    auto free_degree = [&](std::size_t v) {
        std::size_t d = 0;
        for (std::size_t w : adj[v]) d += used[w] ? 0 : 1;
        return d;
    };
    std::function<bool()> extend = [&]() -> bool {
        const std::size_t last = order.back();
        if (order.size() == n) {
            return std::find(adj[last].begin(), adj[last].end(), std::size_t{0}) != adj[last].end();
        }
        // Unvisited vertices must keep two usable neighbours (the start and the
        // current end count as usable).
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::size_t d = free_degree(v);
            for (std::size_t w : adj[v]) d += (w == 0 || w == last) ? 1 : 0;
            if (d < 2) return false;
        }
        std::vector<std::size_t> next;
        for (std::size_t w : adj[last]) {
            if (!used[w]) next.push_back(w);
        }
        std::stable_sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
            return free_degree(a) < free_degree(b);
        });
        for (std::size_t w : next) {
            used[w] = true;
            order.push_back(w);
            if (extend()) return true;
            order.pop_back();
            used[w] = false;
        }
        return false;
    };
    if (n < 3 || !extend()) return std::nullopt;
    std::vector<Bitstring> out;
    for (std::size_t i : order) out.emplace_back(vertex[i], len);
    return out;
}

std::vector<Bitstring> path_by_recursion(const Bitstring& x) {
    if (x.empty()) return {x};
    const FirstReturn fr = decompose(DyckWord(x));
    const Bitstring& u = fr.inner.word();
    const Bitstring& v = fr.rest.word();
    const Bitstring one(1, 1);
    const Bitstring zero(0, 1);
    std::vector<Bitstring> out{x};
    for (const Bitstring& y : path_by_recursion(mirror(u))) out.push_back(one + mirror(y) + one + v);
    for (const Bitstring& y : path_by_recursion(v)) out.push_back(zero + complement(u) + one + y);
    return out;
}

VerificationReport verify_factor(int k) {
    VerificationReport report;
    const auto paths = factor(k);
    if (paths.size() != catalan(k)) {
        report.fail("count", std::to_string(paths.size()) + " paths");
    }
    std::unordered_set<Bitstring, BitstringHash> seen;
    for (const FactorPath& p : paths) {
        const Bitstring& x = p.origin.word();
        const auto& vs = p.vertices;
        if (vs.size() != static_cast<std::size_t>(2 * k + 1)) {
            report.fail("length", x.to_string());
            continue;
        }
        if (vs.front() != x || vs.back() != complement(x)) {
            report.fail("endpoints", x.to_string());
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const int want = (i % 2 == 0) ? k : k + 1;
            if (vs[i].length() != 2 * k || vs[i].weight() != want) {
                report.fail("weight", vs[i].to_string() + " on path of " + x.to_string());
            }
            if (i > 0 && std::popcount(vs[i].bits() ^ vs[i - 1].bits()) != 1) {
                report.fail("step", vs[i - 1].to_string() + " -> " + vs[i].to_string());
            }
            if (!seen.insert(vs[i]).second) report.fail("disjoint", vs[i].to_string());
        }
        if (path_by_recursion(x) != vs) report.fail("recursion", x.to_string());
    }
    if (seen.size() != binomial(2 * k + 1, k)) {
        report.fail("cover", std::to_string(seen.size()) + " vertices covered");
    }
    return report;
}

VerificationReport verify_pi_properties(int k) {
    VerificationReport report;
    for (const DyckWord& x : enumerate_dyck(k)) {
        const FlipSequence s = pi(x);
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        bool perm = static_cast<int>(sorted.size()) == 2 * k;
        for (int i = 0; perm && i < 2 * k; ++i) perm = sorted[i] == i + 1;
        if (!perm) {
            report.fail("permutation", x.to_string());
            continue;
        }
        for (int i = 1; i <= 2 * k; ++i) {
            if (x.word().bit(s[i - 1]) != (i % 2 == 0)) {
                report.fail("parity", x.to_string() + " step " + std::to_string(i));
                break;
            }
        }
    }
    return report;
}

VerificationReport verify_pi_concatenation(int max_sum) {
    VerificationReport report;
    for (int a = 0; a <= max_sum; ++a) {
        for (int b = 0; a + b <= max_sum; ++b) {
            for (const DyckWord& x : enumerate_dyck(a)) {
                const FlipSequence px = pi(x);
                for (const DyckWord& y : enumerate_dyck(b)) {
                    FlipSequence want = px;
                    for (int p : pi(y)) want.push_back(x.length() + p);
                    if (pi(DyckWord(x.word() + y.word())) != want) {
                        report.fail("concatenation", x.to_string() + " . " + y.to_string());
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport verify_base_witnesses() {
    VerificationReport report;
    const Pattern patterns[] = {Pattern::alpha({}), Pattern::alpha(DyckWord::parse("10")),
                                Pattern::beta(), Pattern::gamma(), Pattern::delta()};
    for (const Pattern& p : patterns) {
        if (!is_witness(pattern(p), base_witness(p))) report.fail("witness", p.name());
    }
    return report;
}

VerificationReport verify_psi(int k) {
    VerificationReport report;
    const auto entries = enumerate_psi(k);
    const PathLocator locator(k);
    std::vector<FlippableTuple> tuples;
    tuples.reserve(entries.size());
    for (const PsiEntry& e : entries) {
        tuples.push_back(e.tuple);
        if (e.derivation.tuple() != e.tuple) {
            report.fail("derivation", e.tuple.to_string() + " vs " + e.derivation.to_string());
        }
        if (!is_witness(e.tuple, e.derivation.witness(), locator)) {
            report.fail("witness", e.tuple.to_string());
        }
    }
    for (const Conflict& c : check_conflict_free(tuples)) {
        report.fail("conflict", c.first.to_string() + " / " + c.second.to_string() + " at " +
                                    c.shared.to_string());
    }
    return report;
}

VerificationReport verify_tree(int k, std::optional<std::uint64_t> family) {
    VerificationReport report;
    TreeBuilder builder;
    const SpanningTree tree = family ? builder.counting_tree(k, *family) : builder.T(k);
    auto base = tree.base;
    std::sort(base.begin(), base.end());
    if (base != enumerate_dyck(k)) report.fail("base", "base set is not all Dyck words");
    report.merge(validate_tree(tree));

    const PathLocator locator(k);
    std::unordered_set<Edge, EdgeHash> edges;
    for (const DerivedTuple& t : tree.tuples) {
        if (t.derivation.tuple() != t.tuple) {
            report.fail("derivation", t.tuple.to_string() + " vs " + t.derivation.to_string());
            continue;
        }
        const auto all = derivations_of(t.tuple);
        if (std::find(all.begin(), all.end(), t.derivation) == all.end()) {
            report.fail("derivable", t.tuple.to_string());
        }
        const WitnessCycle w = t.derivation.witness();
        if (!is_witness(t.tuple, w, locator)) report.fail("witness", t.tuple.to_string());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!edges.insert(make_edge(w[i], w[(i + 1) % w.size()])).second) {
                report.fail("edge-disjoint", w[i].to_string() + " in " + t.tuple.to_string());
            }
        }
    }
    return report;
}

}  // namespace oddgray
