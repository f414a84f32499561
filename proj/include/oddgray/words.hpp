#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddgray {

// Packed bitstring of at most kMaxLength bits.
//
// Positions are 1-based. Position i lives in bit (i - 1) of the packing, so
// position 1 is the least significant bit. Text rendering prints position 1
// first. Bits at positions beyond `length()` are always zero.
class Bitstring {
public:
    static constexpr int kMaxLength = 62;

    constexpr Bitstring() = default;

    // Throws std::invalid_argument if `length` is out of range or `bits` has
    // set bits past `length`.
    Bitstring(std::uint64_t bits, int length);

    // Parses '0'/'1' characters, position 1 first.
    static Bitstring parse(std::string_view text);

    // x^n
    static Bitstring repeat(const Bitstring& x, int n);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int length() const { return length_; }
    constexpr bool empty() const { return length_ == 0; }
    int weight() const { return std::popcount(bits_); }

    bool bit(int position) const;
    Bitstring flipped(int position) const;

    // Positions first..last inclusive (1-based). An empty range yields ε.
    Bitstring slice(int first, int last) const;
    Bitstring prefix(int n) const { return slice(1, n); }
    Bitstring suffix_from(int position) const { return slice(position, length_); }

    std::string to_string() const;

    friend Bitstring operator+(const Bitstring& a, const Bitstring& b);

    friend constexpr bool operator==(const Bitstring&, const Bitstring&) = default;

    // Shorter strings first; equal lengths compare lexicographically from
    // position 1 with '1' ordered before '0'. Sorting D_3 with this order gives
    // 111000, 110100, 110010, 101100, 101010.
    friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b);

private:
    std::uint64_t bits_ = 0;
    int length_ = 0;
};

struct BitstringHash {
    std::size_t operator()(const Bitstring& x) const noexcept {
        return std::hash<std::uint64_t>{}(x.bits() * 0x9E3779B97F4A7C15ULL ^
                                          static_cast<std::uint64_t>(x.length()));
    }
};

inline std::uint64_t low_mask(int length) {
    return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

Bitstring complement(const Bitstring& x);

// Complement of the reverse ("rev-inv"). An involution that maps Dyck words to
// Dyck words.
Bitstring mirror(const Bitstring& x);

bool is_dyck(const Bitstring& x);

// A Dyck word, i.e. a bitstring of even length whose every prefix has at least
// as many 1-bits as 0-bits and whose weight is half its length.
class DyckWord {
public:
    DyckWord() = default;
    // Throws std::invalid_argument unless is_dyck(word).
    explicit DyckWord(const Bitstring& word);
    static DyckWord parse(std::string_view text) { return DyckWord(Bitstring::parse(text)); }

    const Bitstring& word() const { return word_; }
    int semilength() const { return word_.length() / 2; }
    int length() const { return word_.length(); }
    bool empty() const { return word_.empty(); }
    std::string to_string() const { return word_.to_string(); }

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) {
        return a.word_ <=> b.word_;
    }

private:
    Bitstring word_;
};

DyckWord mirror(const DyckWord& x);

// x = 1·u·0·v where the separating 0 is the first return of the Dyck path to
// height zero. Throws std::invalid_argument for ε.
struct FirstReturn {
    DyckWord inner;  // u
    DyckWord rest;   // v
};
FirstReturn decompose(const DyckWord& x);
DyckWord recompose(const DyckWord& inner, const DyckWord& rest);

// Largest supported semilength; odd-graph vertices need 2k+1 bits.
inline constexpr int kMaxSemilength = 30;

// All Dyck words of semilength k in descending lexicographic order ('1' first).
// Throws std::out_of_range for k outside [0, kMaxSemilength].
std::vector<DyckWord> enumerate_dyck(int k);

std::uint64_t binomial(int n, int r);
std::uint64_t catalan(int k);

}  // namespace oddgray
