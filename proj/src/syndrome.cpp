#include "pairvt/syndrome.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pairvt {

namespace {

std::uint64_t reduce(std::int64_t value, std::uint64_t modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

void require_code_length(std::uint32_t n) {
    if (n < kMinCodeLength) {
        throw std::invalid_argument("code length " + std::to_string(n) + " is below the minimum of 7");
    }
    if (n > kMaxSyndromeLength) {
        throw std::invalid_argument("code length " + std::to_string(n) + " exceeds 2^15");
    }
}

}  // namespace

Moduli syndrome_moduli(std::uint32_t n) {
    const std::uint64_t w = n;
    return {4 * w, 2 * w * w, 2 * w * w * w, 9};
}

SyndromeTuple SyndromeTuple::canonical(std::uint32_t n, std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                       std::int64_t k4) {
    require_code_length(n);
    const Moduli m = syndrome_moduli(n);
    return {n, reduce(k1, m.m0), reduce(k2, m.m1), reduce(k3, m.m2), reduce(k4, m.m3)};
}

bool SyndromeTuple::is_canonical() const {
    if (n < kMinCodeLength || n > kMaxSyndromeLength) return false;
    const Moduli m = syndrome_moduli(n);
    return s0 < m.m0 && s1 < m.m1 && s2 < m.m2 && s3 < m.m3;
}

std::string SyndromeTuple::to_key_value() const {
    std::ostringstream os;
    os << "n=" << n << " s0=" << s0 << " s1=" << s1 << " s2=" << s2 << " s3=" << s3;
    return os.str();
}

SyndromeTuple SyndromeTuple::from_key_value(const std::string& line) {
    std::istringstream is(line);
    std::string token;
    SyndromeTuple t;
    unsigned seen = 0;
    while (is >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::uint64_t value = std::stoull(token.substr(eq + 1));
        if (key == "n") t.n = static_cast<std::uint32_t>(value), seen |= 1;
        else if (key == "s0") t.s0 = value, seen |= 2;
        else if (key == "s1") t.s1 = value, seen |= 4;
        else if (key == "s2") t.s2 = value, seen |= 8;
        else if (key == "s3") t.s3 = value, seen |= 16;
        else throw std::invalid_argument("unknown syndrome key '" + key + "'");
    }
    if (seen != 31) throw std::invalid_argument("syndrome record needs n, s0, s1, s2 and s3");
    if (!t.is_canonical()) throw std::invalid_argument("syndrome residues are not canonical: " + line);
    return t;
}

std::size_t SyndromeTupleHash::operator()(const SyndromeTuple& t) const noexcept {
    std::uint64_t h = t.n;
    for (std::uint64_t v : {t.s0, t.s1, t.s2, t.s3}) h = h * 0x100000001b3ull ^ (v + 0x9e3779b97f4a7c15ull);
    return static_cast<std::size_t>(h ^ (h >> 29));
}

Profile vt_weight_vector(int order, std::size_t n) {
    if (order < 0 || order > 2) throw std::invalid_argument("VT order must be 0, 1 or 2");
    if (n < 1) throw std::invalid_argument("VT weight vector needs n >= 1");
    Profile w(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const auto v = static_cast<std::int64_t>(j);
        w[j - 1] = order == 0 ? 1 : order == 1 ? v : v * v;
    }
    return w;
}

std::int64_t vt_moment(const Profile& z, int order) {
    if (order < 0 || order > 2) throw std::invalid_argument("VT order must be 0, 1 or 2");
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        const auto w = static_cast<std::int64_t>(j + 1);
        acc += z[j] * (order == 0 ? 1 : order == 1 ? w : w * w);
    }
    return acc;
}

ProfileMoments profile_moments(const BitWord& x) {
    if (x.size() > kMaxSyndromeLength) throw std::invalid_argument("word exceeds 2^15 symbols");
    // Walk pad(x) = 0 x 0 without materializing it; F_1 = 0 contributes nothing.
    ProfileMoments m;
    int prev = 0;
    std::int64_t f = 0;
    const std::size_t padded = x.size() + 2;
    for (std::size_t k = 2; k <= padded; ++k) {
        const int cur = k == padded ? 0 : x[k - 2];
        f += cur != prev ? 1 : 0;
        prev = cur;
        const auto w = static_cast<std::int64_t>(k);
        m.d0 += f;
        m.d1 += f * w;
        m.d2 += f * w * w;
    }
    m.f = f;
    return m;
}

SyndromeTuple reduce_moments(const ProfileMoments& m, std::uint32_t n) {
    return SyndromeTuple::canonical(n, m.d0, m.d1, m.d2, m.f);
}

SyndromeTuple syndrome_tuple(const BitWord& x) {
    const auto n = static_cast<std::uint32_t>(std::min<std::size_t>(x.size(), kMaxSyndromeLength + 1));
    require_code_length(n);
    return reduce_moments(profile_moments(x), n);
}

std::size_t sign_preserving_number(const Profile& z) {
    if (z.empty()) throw std::invalid_argument("sign_preserving_number: empty sequence");
    enum class Polarity { Unset, NonNegative, NonPositive };
    std::size_t segments = 1;
    Polarity state = Polarity::Unset;
    for (const std::int64_t v : z) {
        if (v == 0) continue;
        const Polarity want = v > 0 ? Polarity::NonNegative : Polarity::NonPositive;
        if (state == Polarity::Unset) {
            state = want;
        } else if (state != want) {
            ++segments;
            state = want;
        }
    }
    return segments;
}

bool zero_syndrome_forces_zero(const Profile& z) {
    if (z.empty()) throw std::invalid_argument("zero_syndrome_forces_zero: empty sequence");
    const bool is_zero = std::all_of(z.begin(), z.end(), [](std::int64_t v) { return v == 0; });
    if (is_zero) return true;
    const std::size_t sigma = sign_preserving_number(z);
    // Orders beyond 2 are never needed by the construction but the implication
    // is stated for all of them; evaluate higher orders directly here.
    for (std::size_t order = 0; order < sigma; ++order) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            std::int64_t w = 1;
            for (std::size_t e = 0; e < order; ++e) w *= static_cast<std::int64_t>(j + 1);
            acc += z[j] * w;
        }
        if (acc != 0) return true;
    }
    return false;
}

}  // namespace pairvt
