#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddgray/factor.hpp"
#include "oddgray/words.hpp"

namespace oddgray {

// A Dyck word with one marked position (1-based).
struct MarkedDyckWord {
    DyckWord word;
    int mark = 1;

    MarkedDyckWord() = default;
    // Throws std::invalid_argument unless 1 <= mark <= |word|.
    MarkedDyckWord(DyckWord w, int m);

    std::string to_string() const;

    friend bool operator==(const MarkedDyckWord&, const MarkedDyckWord&) = default;
    friend std::strong_ordering operator<=>(const MarkedDyckWord& a, const MarkedDyckWord& b) {
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.mark <=> b.mark;
    }
};

// u(x,m)v = (uxv, |u|+m). Throws std::invalid_argument unless uv is Dyck.
MarkedDyckWord wrap(const MarkedDyckWord& m, const Bitstring& u, const Bitstring& v);
// mirror(x,m) = (mirror x, |x|+1-m)
MarkedDyckWord mirror(const MarkedDyckWord& m);

// Unordered set of >= 3 marked Dyck words of equal length with pairwise
// distinct words. Members are kept sorted, so equality is set equality.
class FlippableTuple {
public:
    FlippableTuple() = default;
    explicit FlippableTuple(std::vector<MarkedDyckWord> members);

    const std::vector<MarkedDyckWord>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    int semilength() const { return members_.empty() ? 0 : members_.front().word.semilength(); }
    std::vector<DyckWord> support() const;
    std::optional<int> mark_of(const DyckWord& x) const;
    std::string to_string() const;

    friend bool operator==(const FlippableTuple&, const FlippableTuple&) = default;
    friend std::strong_ordering operator<=>(const FlippableTuple& a, const FlippableTuple& b);

private:
    std::vector<MarkedDyckWord> members_;
};

FlippableTuple wrap(const FlippableTuple& t, const Bitstring& u, const Bitstring& v);
FlippableTuple mirror(const FlippableTuple& t);

enum class PatternKind { Alpha, Beta, Gamma, Delta };

// A member of the base pattern set: alpha(w) for a Dyck word w, beta, gamma
// or delta.
struct Pattern {
    PatternKind kind = PatternKind::Beta;
    DyckWord w;  // used by Alpha only

    static Pattern alpha(DyckWord w) { return {PatternKind::Alpha, std::move(w)}; }
    static Pattern beta() { return {PatternKind::Beta, {}}; }
    static Pattern gamma() { return {PatternKind::Gamma, {}}; }
    static Pattern delta() { return {PatternKind::Delta, {}}; }
    // Accepts "alpha", "alpha(<dyck>)", "beta", "gamma", "delta".
    static Pattern parse(std::string_view name);

    int length() const;
    std::string name() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.w <=> b.w;
    }
};

FlippableTuple pattern(const Pattern& p);

// Cyclic vertex sequence of a flipping cycle.
using WitnessCycle = std::vector<Bitstring>;

// The literal flipping cycle that witnesses a pattern.
WitnessCycle base_witness(const Pattern& p);

// Prefix/suffix pair (u, v) with uv a Dyck word.
struct Context {
    Bitstring u;
    Bitstring v;

    bool valid() const { return is_dyck(u + v); }

    friend bool operator==(const Context&, const Context&) = default;
    friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

// u·t·v when |u| is even, u·mirror(t)·v when |u| is odd. Throws
// std::invalid_argument for an invalid context.
FlippableTuple apply_context(const FlippableTuple& t, const Context& c);

// Given a cycle `w` witnessing some tuple t on words of length `word_length`,
// returns a cycle witnessing apply_context(t, c). Built from the three atomic
// moves: prepend a Dyck word p (vertices p̄·y), append a Dyck word d (y·d), and
// mirror-wrap (1·mirror(y)·1 witnessing 1·mirror(t)·0).
WitnessCycle transport_witness(const WitnessCycle& w, int word_length, const Context& c);

WitnessCycle witness(const Pattern& p, const Context& c);

// True iff `w` is a 2l-cycle in G_k whose edges shared with factor paths are
// exactly the edges e(x_i, m_i) of the members of t, one per member, and
// alternate along the cycle.
bool is_witness(const FlippableTuple& t, const WitnessCycle& w);
bool is_witness(const FlippableTuple& t, const WitnessCycle& w, const PathLocator& locator);

// A pattern placed in a context: names a member of the closure of the base
// patterns.
struct Derivation {
    Pattern pattern;
    Context context;

    FlippableTuple tuple() const { return apply_context(oddgray::pattern(pattern), context); }
    WitnessCycle witness() const { return oddgray::witness(pattern, context); }
    std::string to_string() const;

    // Derivation of apply_context(tuple(), outer).
    Derivation within(const Context& outer) const;

    friend bool operator==(const Derivation&, const Derivation&) = default;
    friend std::strong_ordering operator<=>(const Derivation& a, const Derivation& b) {
        if (auto c = a.pattern <=> b.pattern; c != 0) return c;
        return a.context <=> b.context;
    }
};

// Every derivation producing exactly `t`, in increasing order. Empty iff t is
// not in the closure.
std::vector<Derivation> derivations_of(const FlippableTuple& t);

// The least derivation of t. Its witness is the fixed witness W(t). Throws
// std::invalid_argument if t has no derivation.
Derivation canonical_derivation(const FlippableTuple& t);

struct PsiEntry {
    FlippableTuple tuple;
    Derivation derivation;  // least derivation
};

// All distinct tuples of the closure on D_k, sorted by tuple. Empty for k < 3.
std::vector<PsiEntry> enumerate_psi(int k);

struct Conflict {
    FlippableTuple first;
    FlippableTuple second;
    DyckWord shared;
    int mark = 0;
};

// Pairs of tuples whose supports meet in exactly one word carrying the same
// mark in both.
std::vector<Conflict> check_conflict_free(std::span<const FlippableTuple> tuples);

}  // namespace oddgray
