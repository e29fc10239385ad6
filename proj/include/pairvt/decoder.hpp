#pragma once

// Unique decoding of a word received after at most two insertions,
// deletions or substitutions.

#include <optional>
#include <string>
#include <vector>

#include "pairvt/bitword.hpp"
#include "pairvt/code.hpp"

namespace pairvt {

inline constexpr std::size_t kCorrectionBudget = 2;

/// All length-n words x with received in B_{t,s,r}(x) for some t + s + r <= 2
/// and t - s = |received| - n. Sorted. Throws std::invalid_argument when
/// |received| is outside [n - 2, n + 2].
std::vector<BitWord> candidate_preimages(const BitWord& received, std::size_t n);

enum class DecodeStatus { Ok, NoCandidate, Ambiguous };

std::string to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::NoCandidate;
    std::optional<BitWord> codeword;
    /// Candidate preimages that are codewords (more than one only when Ambiguous).
    std::vector<BitWord> matches;

    bool ok() const { return status == DecodeStatus::Ok; }
};

/// Returns the unique codeword within two edits of received.
DecodeResult decode(const BitWord& received, const CodeParams& p);

}  // namespace pairvt
