#include "pairvt/bitword.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace pairvt {

BitWord::BitWord(std::size_t length) : size_(length) {
    if (size_ > kInlineBits) heap_.assign(limb_count(), 0);
}

BitWord BitWord::from_string(std::string_view text) {
    BitWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("invalid symbol '" + std::string(1, c) + "' at offset " +
                                        std::to_string(i) + " (expected 0 or 1)");
        }
        w.set(i, c - '0');
    }
    return w;
}

BitWord BitWord::from_integer(std::uint64_t value, std::size_t length) {
    if (length > 64) throw std::invalid_argument("from_integer: length exceeds 64");
    BitWord w(length);
    for (std::size_t i = 0; i < length; ++i) w.set(i, static_cast<int>((value >> (length - 1 - i)) & 1u));
    return w;
}

void BitWord::set(std::size_t i, int bit) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    auto& l = limb_ref(i / 64);
    if (bit) l |= mask;
    else l &= ~mask;
}

void BitWord::push_back(int bit) {
    if (size_ == kInlineBits) {
        heap_.assign(2, 0);
        heap_[0] = inline_;
        inline_ = 0;
    } else if (size_ > kInlineBits && size_ % 64 == 0) {
        heap_.push_back(0);
    }
    ++size_;
    set(size_ - 1, bit);
}

std::uint64_t BitWord::to_integer() const {
    if (size_ > 64) throw std::invalid_argument("to_integer: word longer than 64 symbols");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < size_; ++i) v = (v << 1) | static_cast<std::uint64_t>((*this)[i]);
    return v;
}

std::string BitWord::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

BitWord BitWord::slice(std::size_t first, std::size_t count) const {
    if (first > size_ || count > size_ - first) throw std::out_of_range("BitWord::slice out of range");
    BitWord w(count);
    for (std::size_t i = 0; i < count; ++i) w.set(i, (*this)[first + i]);
    return w;
}

BitWord BitWord::concat(const BitWord& tail) const {
    BitWord w(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) w.set(i, (*this)[i]);
    for (std::size_t i = 0; i < tail.size_; ++i) w.set(size_ + i, tail[i]);
    return w;
}

bool operator==(const BitWord& a, const BitWord& b) noexcept {
    if (a.size_ != b.size_) return false;
    if (a.size_ <= BitWord::kInlineBits) return a.inline_ == b.inline_;
    return a.heap_ == b.heap_;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::size_t BitWord::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (std::size_t k = 0; k < limb_count(); ++k) {
        h ^= limb(k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.to_string(); }

BitWord pad(const BitWord& x) {
    BitWord out(x.size() + 2);
    for (std::size_t i = 0; i < x.size(); ++i) out.set(i + 1, x[i]);
    return out;
}

std::size_t adjacency_count(const BitWord& x) {
    std::size_t count = 0;
    for (std::size_t i = 1; i < x.size(); ++i) count += static_cast<std::size_t>(x[i] != x[i - 1]);
    return count;
}

Profile adjacency_profile(const BitWord& x) {
    if (x.empty()) throw std::invalid_argument("adjacency_profile: empty word");
    Profile out(x.size());
    out[0] = 0;
    for (std::size_t i = 1; i < x.size(); ++i) out[i] = out[i - 1] + (x[i] != x[i - 1] ? 1 : 0);
    return out;
}

BitWord invert(const BitWord& x) {
    BitWord out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.set(i, x[x.size() - 1 - i]);
    return out;
}

Profile invert(const Profile& z) { return Profile(z.rbegin(), z.rend()); }

Profile profile_difference(const Profile& a, const Profile& b) {
    if (a.size() != b.size()) throw std::invalid_argument("profile_difference: length mismatch");
    Profile d(a.size());
    std::transform(a.begin(), a.end(), b.begin(), d.begin(), std::minus<>{});
    return d;
}

std::string profile_to_string(const Profile& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(z[i]);
    }
    return s + ")";
}

}  // namespace pairvt
