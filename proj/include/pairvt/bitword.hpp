#pragma once

// Binary words, padding, adjacent-pair counts and profiles.
//
// Indexing convention: BitWord and Profile are 0-based containers. Every
// position that crosses a public boundary of the error-model and analysis
// code (ErrorPattern, Alignment, classification reports, CLI output) is
// 1-based, so symbol x_i of a word is word[i - 1].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pairvt {

/// Signed integer sequence: adjacency profiles, VT weight vectors and their
/// differences.
using Profile = std::vector<std::int64_t>;

/// Finite binary sequence. Words of at most 64 symbols live in a single
/// inline limb; longer words spill into a packed heap buffer.
class BitWord {
public:
    static constexpr std::size_t kInlineBits = 64;

    BitWord() = default;
    explicit BitWord(std::size_t length);

    /// Parses '0'/'1' characters. Throws std::invalid_argument on anything else.
    static BitWord from_string(std::string_view text);

    /// The length-n word whose first symbol is the most significant bit of value.
    /// This maps integer order onto lexicographic order.
    static BitWord from_integer(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    int operator[](std::size_t i) const noexcept {
        return static_cast<int>((limb(i / 64) >> (i % 64)) & 1u);
    }
    void set(std::size_t i, int bit) noexcept;
    void push_back(int bit);

    /// Inverse of from_integer; requires size() <= 64.
    std::uint64_t to_integer() const;

    std::string to_string() const;

    /// Symbols [first, first + count).
    BitWord slice(std::size_t first, std::size_t count) const;
    BitWord concat(const BitWord& tail) const;

    friend bool operator==(const BitWord& a, const BitWord& b) noexcept;
    /// Shorter words first, then lexicographic with 0 < 1.
    friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::uint64_t limb(std::size_t k) const noexcept {
        return size_ <= kInlineBits ? inline_ : heap_[k];
    }
    std::uint64_t& limb_ref(std::size_t k) noexcept {
        return size_ <= kInlineBits ? inline_ : heap_[k];
    }
    std::size_t limb_count() const noexcept { return (size_ + 63) / 64; }

    std::size_t size_ = 0;
    std::uint64_t inline_ = 0;
    std::vector<std::uint64_t> heap_;
};

std::ostream& operator<<(std::ostream& os, const BitWord& w);

/// 0 x 0: the word with a 0 added at both ends.
BitWord pad(const BitWord& x);

/// Number of adjacent pairs 01 or 10.
std::size_t adjacency_count(const BitWord& x);

/// Entry i is adjacency_count of the first i+1 symbols. Rejects the empty word.
Profile adjacency_profile(const BitWord& x);

BitWord invert(const BitWord& x);
Profile invert(const Profile& z);

/// Element-wise a - b; lengths must match.
Profile profile_difference(const Profile& a, const Profile& b);

std::string profile_to_string(const Profile& z);

}  // namespace pairvt

template <>
struct std::hash<pairvt::BitWord> {
    std::size_t operator()(const pairvt::BitWord& w) const noexcept { return w.hash(); }
};
