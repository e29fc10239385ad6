#include "pairvt/decoder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pairvt/channel.hpp"

namespace pairvt {

std::vector<BitWord> candidate_preimages(const BitWord& received, std::size_t n) {
    const auto m = static_cast<long long>(received.size());
    const auto target = static_cast<long long>(n);
    if (m < target - 2 || m > target + 2) {
        throw std::invalid_argument("received length " + std::to_string(m) + " is not within 2 of " +
                                    std::to_string(n));
    }
    // The channel applied t insertions and s deletions with t - s = m - n; undo
    // them with s insertions and t deletions, and undo r substitutions.
    std::set<BitWord> out;
    const long long shift = m - target;
    for (long long t = 0; t <= 2; ++t) {
        const long long s = t - shift;
        if (s < 0 || t + s > 2 || t > m) continue;
        const auto r = static_cast<std::size_t>(std::min<long long>(2 - t - s, m - t));
        for (const auto& w : error_ball(received, static_cast<std::size_t>(s), static_cast<std::size_t>(t), r)) {
            out.insert(w);
        }
    }
    return {out.begin(), out.end()};
}

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Ok: return "Ok";
        case DecodeStatus::NoCandidate: return "NoCandidate";
        case DecodeStatus::Ambiguous: return "Ambiguous";
    }
    return "Unknown";
}

DecodeResult decode(const BitWord& received, const CodeParams& p) {
    DecodeResult result;
    if (received.size() == p.n() && is_codeword(received, p)) {
        result.status = DecodeStatus::Ok;
        result.codeword = received;
        result.matches = {received};
        return result;
    }
    for (auto& c : candidate_preimages(received, p.n())) {
        if (is_codeword(c, p)) result.matches.push_back(std::move(c));
    }
    if (result.matches.size() == 1) {
        result.status = DecodeStatus::Ok;
        result.codeword = result.matches.front();
    } else {
        result.status = result.matches.empty() ? DecodeStatus::NoCandidate : DecodeStatus::Ambiguous;
    }
    return result;
}

}  // namespace pairvt
