#include "oddgray/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace oddgray {

namespace {

Bitstring bs(std::string_view s) { return Bitstring::parse(s); }

DerivedTuple derived(const Pattern& p, const Context& c = {}) {
    Derivation d{p, c};
    return {d.tuple(), d};
}

DyckWord dyck(std::string_view s) { return DyckWord::parse(s); }

void append(SpanningTree& into, const SpanningTree& part) {
    into.base.insert(into.base.end(), part.base.begin(), part.base.end());
    into.tuples.insert(into.tuples.end(), part.tuples.begin(), part.tuples.end());
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

Partition partition_EF(int k) {
    if (k < 2) throw std::out_of_range("partition_EF requires k >= 2");
    Partition p;
    for (const DyckWord& x : enumerate_dyck(k)) {
        bool in_e = false;
        if (k == 2) {
            in_e = x.to_string() == "1010";
        } else if (k == 3) {
            in_e = x.to_string() != "110010";
        } else {
            in_e = x.word().prefix(2) == bs("10");
        }
        (in_e ? p.E : p.F).push_back(x);
    }
    return p;
}

std::vector<FlippableTuple> SpanningTree::tuple_set() const {
    std::vector<FlippableTuple> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) out.push_back(t.tuple);
    return out;
}

SpanningTree within(const SpanningTree& tree, const Context& c) {
    if (!c.valid()) throw std::invalid_argument("context is not a Dyck word");
    const bool flip = c.u.length() % 2 == 1;
    SpanningTree out;
    out.base.reserve(tree.base.size());
    for (const DyckWord& x : tree.base) {
        out.base.emplace_back(c.u + (flip ? mirror(x.word()) : x.word()) + c.v);
    }
    out.tuples.reserve(tree.tuples.size());
    for (const DerivedTuple& t : tree.tuples) {
        out.tuples.push_back({apply_context(t.tuple, c), t.derivation.within(c)});
    }
    return out;
}

// The recursive definition (peel one tuple, split the base into parts that
// each meet its support once, recurse) is equivalent to the incidence graph
// (words + tuples, word-tuple edges) being a tree. That graph has
// |base| + |tuples| nodes and sum(l) edges, so it is a tree iff it is
// connected and sum(l - 1) = |base| - 1. Two tuples sharing two words would
// close a 4-cycle in it, which the intersection check reports separately.
VerificationReport validate_tree(const SpanningTree& tree) {
    VerificationReport report;
    std::unordered_map<Bitstring, std::size_t, BitstringHash> position;
    for (std::size_t i = 0; i < tree.base.size(); ++i) {
        if (!position.emplace(tree.base[i].word(), i).second) {
            report.fail("base", "duplicate word " + tree.base[i].to_string());
        }
        if (tree.base[i].length() != tree.base.front().length()) {
            report.fail("base", "mixed lengths at " + tree.base[i].to_string());
        }
    }
    if (tree.base.empty()) {
        report.fail("base", "empty base set");
        return report;
    }

    std::unordered_map<Bitstring, std::vector<std::size_t>, BitstringHash> holders;
    std::size_t accounted = 0;
    DisjointSets components(tree.base.size());
    std::size_t merges = 0;
    for (std::size_t t = 0; t < tree.tuples.size(); ++t) {
        const FlippableTuple& tuple = tree.tuples[t].tuple;
        accounted += tuple.size() - 1;
        std::optional<std::size_t> anchor;
        for (const auto& m : tuple.members()) {
            holders[m.word.word()].push_back(t);
            auto it = position.find(m.word.word());
            if (it == position.end()) {
                report.fail("support", m.word.to_string() + " of " + tuple.to_string() +
                                           " is outside the base set");
                continue;
            }
            if (anchor && components.unite(*anchor, it->second)) ++merges;
            anchor = it->second;
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Bitstring>> shared;
    for (const auto& [word, ids] : holders) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                shared[{std::min(ids[a], ids[b]), std::max(ids[a], ids[b])}].push_back(word);
            }
        }
    }
    for (const auto& [key, words] : shared) {
        const auto& first = tree.tuples[key.first].tuple;
        const auto& second = tree.tuples[key.second].tuple;
        if (words.size() > 1) {
            report.fail("intersection", first.to_string() + " and " + second.to_string() +
                                            " share " + std::to_string(words.size()) + " words");
            continue;
        }
        const DyckWord x(words.front());
        if (first.mark_of(x) == second.mark_of(x)) {
            report.fail("conflict", x.to_string() + " has mark " +
                                        std::to_string(*first.mark_of(x)) + " in " +
                                        first.to_string() + " and " + second.to_string());
        }
    }

    if (accounted + 1 != tree.base.size()) {
        report.fail("accounting", "sum(l - 1) = " + std::to_string(accounted) + " but |X| - 1 = " +
                                      std::to_string(tree.base.size() - 1));
    }
    if (merges + 1 != tree.base.size()) {
        report.fail("connectivity", std::to_string(tree.base.size() - merges) +
                                        " components over the base set");
    }
    return report;
}

SpanningTree alt_E4_tree() {
    SpanningTree t;
    for (const DyckWord& x : enumerate_dyck(4)) {
        if (x.to_string() != "11001100") t.base.push_back(x);
    }
    t.tuples = {derived(Pattern::delta(), {bs("1"), bs("0")}),
                derived(Pattern::alpha(dyck("10"))),
                derived(Pattern::alpha({}), {{}, bs("10")}),
                derived(Pattern::beta(), {{}, bs("10")}),
                derived(Pattern::delta(), {bs("10"), {}})};
    return t;
}

SpanningTree alt_F4_tree() { return {{dyck("11001100")}, {}}; }

const SpanningTree& TreeBuilder::E(int k) {
    if (auto it = e_.find(k); it != e_.end()) return it->second;
    if (k < 2) throw std::out_of_range("E_k requires k >= 2");
    SpanningTree t;
    if (k == 2) {
        t.base = partition_EF(2).E;
    } else if (k == 3) {
        t.base = partition_EF(3).E;
        t.tuples = {derived(Pattern::delta())};
    } else {
        t = within(T(k - 1), {bs("10"), {}});
    }
    return e_.emplace(k, std::move(t)).first->second;
}

const SpanningTree& TreeBuilder::F(int k) {
    if (auto it = f_.find(k); it != f_.end()) return it->second;
    if (k < 2) throw std::out_of_range("F_k requires k >= 2");
    SpanningTree t;
    if (k <= 3) {
        t.base = partition_EF(k).F;
    } else if (k == 4) {
        t.tuples = {derived(Pattern::alpha(dyck("10"))), derived(Pattern::gamma()),
                    derived(Pattern::beta(), {bs("1"), bs("0")}),
                    derived(Pattern::alpha({}), {{}, bs("10")})};
        t.base = partition_EF(4).F;
    } else {
        t = build_F(k, 0);
    }
    return f_.emplace(k, std::move(t)).first->second;
}

const SpanningTree& TreeBuilder::T(int k) {
    if (auto it = t_.find(k); it != t_.end()) return it->second;
    if (k < 3) throw std::out_of_range("T_k requires k >= 3");
    SpanningTree t;
    if (k == 3) {
        t.base = enumerate_dyck(3);
        t.tuples = {derived(Pattern::alpha({})), derived(Pattern::beta())};
    } else {
        t = build_T(k, F(k));
    }
    return t_.emplace(k, std::move(t)).first->second;
}

// F_{k,2} = 1100·T_{k-2}; step j adds, for each v in D_{k-j}, the connector
// alpha((10)^{j-3})·v and the subtrees 1·mirror(E_{j-1})·0v, 1·mirror(F_{j-1})·0v.
// With a family mask, step 5 uses alpha(1100)·v and the E'_4/F'_4 subtrees for
// the selected v.
SpanningTree TreeBuilder::build_F(int k, std::uint64_t family) {
    SpanningTree out = within(T(k - 2), {bs("1100"), {}});
    for (int j = 3; j <= k; ++j) {
        const Bitstring inner = Bitstring::repeat(bs("10"), j - 3);
        const auto tails = enumerate_dyck(k - j);
        for (std::size_t i = 0; i < tails.size(); ++i) {
            const Bitstring& v = tails[i].word();
            const Context wrap_ctx{bs("1"), bs("0") + v};
            const bool alternative = j == 5 && i < 64 && ((family >> i) & 1U);
            if (alternative) {
                out.tuples.push_back(derived(Pattern::alpha(dyck("1100")), {{}, v}));
                append(out, within(alt_E4_tree(), wrap_ctx));
                append(out, within(alt_F4_tree(), wrap_ctx));
            } else {
                out.tuples.push_back(derived(Pattern::alpha(DyckWord(inner)), {{}, v}));
                append(out, within(E(j - 1), wrap_ctx));
                append(out, within(F(j - 1), wrap_ctx));
            }
        }
    }
    return out;
}

// T_k = F_k ∪ {beta·(10)^{k-3}} ∪ 10·E_{k-1} ∪ 10·F_{k-1}.
SpanningTree TreeBuilder::build_T(int k, const SpanningTree& f) {
    SpanningTree out = f;
    out.tuples.push_back(derived(Pattern::beta(), {{}, Bitstring::repeat(bs("10"), k - 3)}));
    append(out, within(E(k - 1), {bs("10"), {}}));
    append(out, within(F(k - 1), {bs("10"), {}}));
    return out;
}

SpanningTree TreeBuilder::counting_tree(int k, std::uint64_t family) {
    if (k < 6) throw std::out_of_range("counting trees require k >= 6");
    const std::uint64_t bits = family_bits(k);
    if (bits < 64 && (family >> bits) != 0) {
        throw std::out_of_range("family mask " + std::to_string(family) + " needs more than " +
                                std::to_string(bits) + " bits");
    }
    if (family == 0) return T(k);
    return build_T(k, build_F(k, family));
}

TreeSet build_trees(int k) {
    TreeBuilder builder;
    TreeSet out{std::nullopt, builder.E(k), builder.F(k)};
    if (k >= 3) out.T = builder.T(k);
    return out;
}

SpanningTree build_counting_tree(int k, std::uint64_t family) {
    TreeBuilder builder;
    return builder.counting_tree(k, family);
}

std::uint64_t family_bits(int k) {
    if (k < 6) throw std::out_of_range("family masks require k >= 6");
    return catalan(k - 5);
}

}  // namespace oddgray
