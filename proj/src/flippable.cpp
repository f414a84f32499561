#include "oddgray/flippable.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace oddgray {

namespace {

Bitstring bs(std::string_view s) { return Bitstring::parse(s); }

MarkedDyckWord marked(const Bitstring& word, int mark) { return {DyckWord(word), mark}; }

}  // namespace

MarkedDyckWord::MarkedDyckWord(DyckWord w, int m) : word(std::move(w)), mark(m) {
    if (mark < 1 || mark > word.length()) {
        throw std::invalid_argument("mark " + std::to_string(mark) + " outside [1, " +
                                    std::to_string(word.length()) + "]");
    }
}

std::string MarkedDyckWord::to_string() const {
    return "(" + word.to_string() + "," + std::to_string(mark) + ")";
}

MarkedDyckWord wrap(const MarkedDyckWord& m, const Bitstring& u, const Bitstring& v) {
    if (!is_dyck(u + v)) {
        throw std::invalid_argument("context " + u.to_string() + "|" + v.to_string() +
                                    " is not a Dyck word");
    }
    return {DyckWord(u + m.word.word() + v), u.length() + m.mark};
}

MarkedDyckWord mirror(const MarkedDyckWord& m) {
    return {mirror(m.word), m.word.length() + 1 - m.mark};
}

FlippableTuple::FlippableTuple(std::vector<MarkedDyckWord> members) : members_(std::move(members)) {
    if (members_.size() < 3) throw std::invalid_argument("flippable tuple needs >= 3 members");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].word.length() != members_.front().word.length()) {
            throw std::invalid_argument("tuple members differ in length");
        }
        if (i > 0 && members_[i].word == members_[i - 1].word) {
            throw std::invalid_argument("tuple support is not distinct: " +
                                        members_[i].word.to_string());
        }
    }
}

std::vector<DyckWord> FlippableTuple::support() const {
    std::vector<DyckWord> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.word);
    return out;
}

std::optional<int> FlippableTuple::mark_of(const DyckWord& x) const {
    for (const auto& m : members_) {
        if (m.word == x) return m.mark;
    }
    return std::nullopt;
}

std::string FlippableTuple::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ",";
        s += members_[i].to_string();
    }
    return s + "}";
}

std::strong_ordering operator<=>(const FlippableTuple& a, const FlippableTuple& b) {
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
}

FlippableTuple wrap(const FlippableTuple& t, const Bitstring& u, const Bitstring& v) {
    std::vector<MarkedDyckWord> out;
    for (const auto& m : t.members()) out.push_back(wrap(m, u, v));
    return FlippableTuple(std::move(out));
}

FlippableTuple mirror(const FlippableTuple& t) {
    std::vector<MarkedDyckWord> out;
    for (const auto& m : t.members()) out.push_back(mirror(m));
    return FlippableTuple(std::move(out));
}

Pattern Pattern::parse(std::string_view name) {
    if (name == "alpha") return alpha({});
    if (name == "beta") return beta();
    if (name == "gamma") return gamma();
    if (name == "delta") return delta();
    if (name.starts_with("alpha(") && name.ends_with(")")) {
        return alpha(DyckWord::parse(name.substr(6, name.size() - 7)));
    }
    throw std::invalid_argument("unknown pattern: " + std::string(name));
}

int Pattern::length() const {
    switch (kind) {
        case PatternKind::Alpha: return w.length() + 6;
        case PatternKind::Beta:
        case PatternKind::Delta: return 6;
        case PatternKind::Gamma: return 8;
    }
    return 0;
}

std::string Pattern::name() const {
    switch (kind) {
        case PatternKind::Alpha: return "alpha(" + w.to_string() + ")";
        case PatternKind::Beta: return "beta";
        case PatternKind::Gamma: return "gamma";
        case PatternKind::Delta: return "delta";
    }
    return {};
}

FlippableTuple pattern(const Pattern& p) {
    switch (p.kind) {
        case PatternKind::Alpha: {
            const Bitstring head = bs("1") + p.w.word();
            const int n = p.w.length();
            return FlippableTuple({marked(head + bs("11000"), n + 5),
                                   marked(head + bs("10100"), n + 6),
                                   marked(head + bs("10010"), n + 2)});
        }
        case PatternKind::Beta:
            return FlippableTuple(
                {marked(bs("111000"), 6), marked(bs("101100"), 5), marked(bs("101010"), 1)});
        case PatternKind::Gamma:
            return FlippableTuple({marked(bs("11001100"), 2), marked(bs("11011000"), 8),
                                   marked(bs("11101000"), 6)});
        case PatternKind::Delta:
            return FlippableTuple({marked(bs("111000"), 6), marked(bs("110100"), 5),
                                   marked(bs("101100"), 3), marked(bs("101010"), 1)});
    }
    throw std::logic_error("unreachable pattern kind");
}

WitnessCycle base_witness(const Pattern& p) {
    auto cycle = [](std::initializer_list<std::string_view> vs) {
        WitnessCycle out;
        for (auto v : vs) out.push_back(bs(v));
        return out;
    };
    switch (p.kind) {
        case PatternKind::Alpha: {
            const Bitstring head = bs("1") + p.w.word();
            WitnessCycle out;
            for (auto tail : {"00101", "00111", "00110", "10110", "10100", "10101"}) {
                out.push_back(head + bs(tail));
            }
            return out;
        }
        case PatternKind::Beta:
            return cycle({"111000", "111001", "011001", "011011", "011010", "111010"});
        case PatternKind::Gamma:
            return cycle(
                {"11011100", "10011100", "10011101", "10011001", "11011001", "11011000"});
        case PatternKind::Delta:
            return cycle({"111000", "111001", "110001", "110011", "010011", "011011", "011010",
                          "111010"});
    }
    throw std::logic_error("unreachable pattern kind");
}

FlippableTuple apply_context(const FlippableTuple& t, const Context& c) {
    if (!c.valid()) {
        throw std::invalid_argument("context " + c.u.to_string() + "|" + c.v.to_string() +
                                    " is not a Dyck word");
    }
    return c.u.length() % 2 == 0 ? wrap(t, c.u, c.v) : wrap(mirror(t), c.u, c.v);
}

namespace {

WitnessCycle prepend_dyck(const WitnessCycle& w, const Bitstring& p) {
    const Bitstring head = complement(p);
    WitnessCycle out;
    out.reserve(w.size());
    for (const auto& y : w) out.push_back(head + y);
    return out;
}

WitnessCycle append_dyck(const WitnessCycle& w, const Bitstring& d) {
    WitnessCycle out;
    out.reserve(w.size());
    for (const auto& y : w) out.push_back(y + d);
    return out;
}

WitnessCycle mirror_wrap(const WitnessCycle& w) {
    const Bitstring one = bs("1");
    WitnessCycle out;
    out.reserve(w.size());
    for (const auto& y : w) out.push_back(one + mirror(y) + one);
    return out;
}

}  // namespace

WitnessCycle transport_witness(const WitnessCycle& w, int word_length, const Context& c) {
    if (!c.valid()) {
        throw std::invalid_argument("context " + c.u.to_string() + "|" + c.v.to_string() +
                                    " is not a Dyck word");
    }
    const Bitstring& u = c.u;
    const Bitstring& v = c.v;
    if (u.empty()) return v.empty() ? w : append_dyck(w, v);

    // u starts with 1; find the 0 matching it in u·x·v. The Dyck word x in the
    // middle never takes the height below its starting level, so the match is
    // in u or in v.
    int height = 0;
    for (int i = 1; i <= u.length(); ++i) {
        height += u.bit(i) ? 1 : -1;
        if (height == 0) {
            const Bitstring head = u.prefix(i);
            const WitnessCycle inner =
                transport_witness(w, word_length, {u.suffix_from(i + 1), v});
            return prepend_dyck(inner, head);
        }
    }
    for (int j = 1; j <= v.length(); ++j) {
        height += v.bit(j) ? 1 : -1;
        if (height == 0) {
            // u·x·v = 1·(u'·x·v')·0·d, rewritten as a mirror-wrap of the context
            // (mirror v', mirror u') followed by appending d.
            const Bitstring u_rest = u.suffix_from(2);
            const Bitstring v_head = v.prefix(j - 1);
            const Bitstring d = v.suffix_from(j + 1);
            const WitnessCycle inner =
                transport_witness(w, word_length, {mirror(v_head), mirror(u_rest)});
            const WitnessCycle wrapped = mirror_wrap(inner);
            return d.empty() ? wrapped : append_dyck(wrapped, d);
        }
    }
    throw std::logic_error("unbalanced context");
}

WitnessCycle witness(const Pattern& p, const Context& c) {
    return transport_witness(base_witness(p), p.length(), c);
}

namespace {

template <typename LocateFn>
bool is_witness_impl(const FlippableTuple& t, const WitnessCycle& w, LocateFn&& locate_fn) {
    const std::size_t l = t.size();
    if (l < 3 || w.size() != 2 * l) return false;
    const int length = 2 * t.semilength();
    for (const auto& y : w) {
        if (y.length() != length) return false;
        if (y.weight() != length / 2 && y.weight() != length / 2 + 1) return false;
    }
    {
        std::vector<std::uint64_t> packed;
        for (const auto& y : w) packed.push_back(y.bits());
        std::sort(packed.begin(), packed.end());
        if (std::adjacent_find(packed.begin(), packed.end()) != packed.end()) return false;
    }
    std::vector<MarkedDyckWord> shared;
    std::optional<std::size_t> parity;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Bitstring& a = w[i];
        const Bitstring& b = w[(i + 1) % w.size()];
        const std::uint64_t diff = a.bits() ^ b.bits();
        if (std::popcount(diff) != 1) return false;
        const Location la = locate_fn(a);
        const Location lb = locate_fn(b);
        if (la.origin != lb.origin || std::abs(la.index - lb.index) != 1) continue;
        if (parity && *parity != i % 2) return false;
        parity = i % 2;
        shared.push_back({la.origin, std::countr_zero(diff) + 1});
    }
    if (shared.size() != l) return false;
    std::sort(shared.begin(), shared.end());
    return shared == t.members();
}

}  // namespace

bool is_witness(const FlippableTuple& t, const WitnessCycle& w) {
    return is_witness_impl(t, w, [](const Bitstring& y) { return locate(y); });
}

bool is_witness(const FlippableTuple& t, const WitnessCycle& w, const PathLocator& locator) {
    if (locator.index().k() != t.semilength()) {
        throw std::invalid_argument("locator built for a different k");
    }
    return is_witness_impl(t, w, [&](const Bitstring& y) {
        if (!locator.index().contains(y)) return Location{};
        return locator.locate(y);
    });
}

std::string Derivation::to_string() const {
    return context.u.to_string() + "[" + pattern.name() + "]" + context.v.to_string();
}

Derivation Derivation::within(const Context& outer) const {
    if (!outer.valid()) throw std::invalid_argument("outer context is not a Dyck word");
    if (outer.u.length() % 2 == 0) {
        return {pattern, {outer.u + context.u, context.v + outer.v}};
    }
    return {pattern, {outer.u + mirror(context.v), mirror(context.u) + outer.v}};
}

std::vector<Derivation> derivations_of(const FlippableTuple& t) {
    std::vector<Derivation> out;
    if (t.size() < 3) return out;
    const Bitstring& x = t.members().front().word.word();
    const int n = x.length();
    for (int length = 6; length <= n; length += 2) {
        for (int s = 0; s + length <= n; ++s) {
            const Context c{x.prefix(s), x.suffix_from(s + length + 1)};
            if (!c.valid()) continue;
            std::vector<Pattern> candidates;
            if (length == 6) {
                candidates = {Pattern::beta(), Pattern::delta()};
            } else if (length == 8) {
                candidates = {Pattern::gamma()};
            }
            const int wlen = length - 6;
            // alpha(w) members read 1·w·(5 bits); mirrored ones read (5 bits)·mirror(w)·0.
            const Bitstring w_image = s % 2 == 0 ? x.slice(s + 2, s + 1 + wlen)
                                                 : mirror(x.slice(s + 6, s + 5 + wlen));
            if (is_dyck(w_image)) candidates.push_back(Pattern::alpha(DyckWord(w_image)));
            for (const Pattern& p : candidates) {
                if (static_cast<std::size_t>(p.kind == PatternKind::Delta ? 4 : 3) != t.size()) {
                    continue;
                }
                Derivation d{p, c};
                if (d.tuple() == t) out.push_back(std::move(d));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Derivation canonical_derivation(const FlippableTuple& t) {
    auto all = derivations_of(t);
    if (all.empty()) {
        throw std::invalid_argument("tuple " + t.to_string() + " has no pattern derivation");
    }
    return all.front();
}

std::vector<PsiEntry> enumerate_psi(int k) {
    if (k < 3) return {};
    if (k > kMaxSemilength) throw std::out_of_range("enumerate_psi requires k <= 30");
    std::map<FlippableTuple, Derivation> found;
    for (int length = 6; length <= 2 * k; length += 2) {
        std::vector<Pattern> patterns;
        if (length == 6) patterns = {Pattern::beta(), Pattern::delta()};
        if (length == 8) patterns.push_back(Pattern::gamma());
        for (const DyckWord& w : enumerate_dyck((length - 6) / 2)) {
            patterns.push_back(Pattern::alpha(w));
        }
        for (const DyckWord& z : enumerate_dyck(k - length / 2)) {
            for (int s = 0; s <= z.length(); ++s) {
                const Context c{z.word().prefix(s), z.word().suffix_from(s + 1)};
                for (const Pattern& p : patterns) {
                    Derivation d{p, c};
                    FlippableTuple t = d.tuple();
                    auto it = found.find(t);
                    if (it == found.end()) {
                        found.emplace(std::move(t), std::move(d));
                    } else if (d < it->second) {
                        it->second = std::move(d);
                    }
                }
            }
        }
    }
    std::vector<PsiEntry> out;
    out.reserve(found.size());
    for (auto& [t, d] : found) out.push_back({t, d});
    return out;
}

std::vector<Conflict> check_conflict_free(std::span<const FlippableTuple> tuples) {
    std::unordered_map<Bitstring, std::vector<std::size_t>, BitstringHash> holders;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (const auto& m : tuples[i].members()) holders[m.word.word()].push_back(i);
    }
    struct Shared {
        int count = 0;
        DyckWord word;
    };
    std::map<std::pair<std::size_t, std::size_t>, Shared> pairs;
    for (const auto& [word, ids] : holders) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                auto& s = pairs[{std::min(ids[a], ids[b]), std::max(ids[a], ids[b])}];
                ++s.count;
                s.word = DyckWord(word);
            }
        }
    }
    std::vector<Conflict> out;
    for (const auto& [key, s] : pairs) {
        if (s.count != 1) continue;
        const auto& first = tuples[key.first];
        const auto& second = tuples[key.second];
        const int mark = *first.mark_of(s.word);
        if (mark == *second.mark_of(s.word)) out.push_back({first, second, s.word, mark});
    }
    return out;
}

}  // namespace oddgray
