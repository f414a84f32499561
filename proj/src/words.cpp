#include "oddgray/words.hpp"

#include <array>
#include <stdexcept>

namespace oddgray {

Bitstring::Bitstring(std::uint64_t bits, int length) : bits_(bits), length_(length) {
    if (length < 0 || length > kMaxLength) {
        throw std::invalid_argument("bitstring length " + std::to_string(length) +
                                    " outside [0, 62]");
    }
    if ((bits & ~low_mask(length)) != 0) {
        throw std::invalid_argument("bits set beyond bitstring length");
    }
}

Bitstring Bitstring::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength)) {
        throw std::invalid_argument("bitstring too long: " + std::string(text));
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("not a bitstring: " + std::string(text));
        }
    }
    return Bitstring(bits, static_cast<int>(text.size()));
}

Bitstring Bitstring::repeat(const Bitstring& x, int n) {
    Bitstring out;
    for (int i = 0; i < n; ++i) out = out + x;
    return out;
}

bool Bitstring::bit(int position) const {
    if (position < 1 || position > length_) {
        throw std::out_of_range("bit position " + std::to_string(position) +
                                " outside [1, " + std::to_string(length_) + "]");
    }
    return (bits_ >> (position - 1)) & 1U;
}

Bitstring Bitstring::flipped(int position) const {
    if (position < 1 || position > length_) {
        throw std::out_of_range("flip position " + std::to_string(position) +
                                " outside [1, " + std::to_string(length_) + "]");
    }
    Bitstring out = *this;
    out.bits_ ^= std::uint64_t{1} << (position - 1);
    return out;
}

Bitstring Bitstring::slice(int first, int last) const {
    if (last < first) return {};
    if (first < 1 || last > length_) {
        throw std::out_of_range("slice outside bitstring");
    }
    const int n = last - first + 1;
    Bitstring out;
    out.bits_ = (bits_ >> (first - 1)) & low_mask(n);
    out.length_ = n;
    return out;
}

std::string Bitstring::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

Bitstring operator+(const Bitstring& a, const Bitstring& b) {
    if (a.length_ + b.length_ > Bitstring::kMaxLength) {
        throw std::length_error("concatenation exceeds 62 bits");
    }
    Bitstring out;
    out.bits_ = a.bits_ | (b.bits_ << a.length_);
    out.length_ = a.length_ + b.length_;
    return out;
}

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // First differing position; the string holding '1' there sorts first.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Bitstring complement(const Bitstring& x) {
    return Bitstring(~x.bits() & low_mask(x.length()), x.length());
}

Bitstring mirror(const Bitstring& x) {
    std::uint64_t reversed = 0;
    const int n = x.length();
    for (int i = 0; i < n; ++i) {
        if ((x.bits() >> i) & 1U) reversed |= std::uint64_t{1} << (n - 1 - i);
    }
    return Bitstring(~reversed & low_mask(n), n);
}

bool is_dyck(const Bitstring& x) {
    if (x.length() % 2 != 0) return false;
    int height = 0;
    for (int i = 0; i < x.length(); ++i) {
        height += ((x.bits() >> i) & 1U) ? 1 : -1;
        if (height < 0) return false;
    }
    return height == 0;
}

DyckWord::DyckWord(const Bitstring& word) : word_(word) {
    if (!is_dyck(word)) {
        throw std::invalid_argument("not a Dyck word: " + word.to_string());
    }
}

DyckWord mirror(const DyckWord& x) { return DyckWord(mirror(x.word())); }

FirstReturn decompose(const DyckWord& x) {
    if (x.empty()) throw std::invalid_argument("cannot decompose the empty Dyck word");
    const Bitstring& w = x.word();
    int height = 0;
    int position = 0;
    for (int i = 1; i <= w.length(); ++i) {
        height += w.bit(i) ? 1 : -1;
        if (height == 0) {
            position = i;
            break;
        }
    }
    return {DyckWord(w.slice(2, position - 1)), DyckWord(w.suffix_from(position + 1))};
}

DyckWord recompose(const DyckWord& inner, const DyckWord& rest) {
    return DyckWord(Bitstring::parse("1") + inner.word() + Bitstring::parse("0") + rest.word());
}

namespace {

void extend_dyck(int k, int length, int ones, std::uint64_t bits, std::vector<DyckWord>& out) {
    if (length == 2 * k) {
        out.emplace_back(Bitstring(bits, length));
        return;
    }
    const int zeros = length - ones;
    if (ones < k) extend_dyck(k, length + 1, ones + 1, bits | (std::uint64_t{1} << length), out);
    if (zeros < ones) extend_dyck(k, length + 1, ones, bits, out);
}

}  // namespace

std::vector<DyckWord> enumerate_dyck(int k) {
    if (k < 0 || k > kMaxSemilength) {
        throw std::out_of_range("semilength " + std::to_string(k) + " outside [0, 30]");
    }
    std::vector<DyckWord> out;
    if (k <= 16) out.reserve(static_cast<std::size_t>(catalan(k)));
    extend_dyck(k, 0, 0, 0, out);
    return out;
}

std::uint64_t binomial(int n, int r) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 64>, 64> t{};
        for (int i = 0; i < 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (n < 0 || r < 0 || r > n) return 0;
    if (n >= 64) throw std::out_of_range("binomial table limited to n < 64");
    return table[n][r];
}

std::uint64_t catalan(int k) { return binomial(2 * k, k) / static_cast<std::uint64_t>(k + 1); }

}  // namespace oddgray
