#pragma once

// Edit operations on binary words, exact error balls B_{t,s,r}, and the
// unit-cost edit distance.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pairvt/bitword.hpp"

namespace pairvt {

struct Substitution {
    std::size_t position;  // 1-based, original frame
    int symbol;            // may equal the original symbol (trivial substitution)
    friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct Insertion {
    std::size_t gap;  // 0..n; gap g sits between x_g and x_{g+1}
    int symbol;
    friend bool operator==(const Insertion&, const Insertion&) = default;
};

/// A concrete set of edits expressed in the original word's frame. Applied
/// in the fixed order: substitute, delete, insert.
struct ErrorPattern {
    std::vector<Substitution> substitutions;
    std::vector<std::size_t> deletions;  // 1-based
    std::vector<Insertion> insertions;

    std::size_t insertion_count() const { return insertions.size(); }
    std::size_t deletion_count() const { return deletions.size(); }
    std::size_t substitution_count() const { return substitutions.size(); }
    std::size_t total() const { return insertions.size() + deletions.size() + substitutions.size(); }

    /// Throws std::invalid_argument when the pattern does not fit a word of length n.
    void validate(std::size_t n) const;

    /// Compact form, e.g. "sub@4=1,del@2,ins@0=1". The empty pattern is "none".
    std::string to_string() const;
    static ErrorPattern parse(std::string_view text);

    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

BitWord apply_errors(const BitWord& x, const ErrorPattern& p);

/// Largest t + s + r accepted by error_ball and pattern enumeration.
inline constexpr std::size_t kMaxBallEdits = 4;

/// Calls visit for every exact-(t, s, r) pattern on a word of length n.
/// Deletions and substitutions use disjoint positions; insertion gaps are
/// non-decreasing.
void for_each_pattern(std::size_t n, std::size_t t, std::size_t s, std::size_t r,
                      const std::function<void(const ErrorPattern&)>& visit);

/// All words reachable by exactly t insertions, s deletions and r substitutions
/// (trivial substitutions allowed), sorted and deduplicated.
std::vector<BitWord> error_ball(const BitWord& x, std::size_t t, std::size_t s, std::size_t r);

/// Union of error_ball(x, t, s, r) over t + s + r <= radius.
std::vector<BitWord> edit_ball(const BitWord& x, std::size_t radius);

/// Unit-cost Levenshtein distance.
std::size_t edit_distance(const BitWord& x, const BitWord& y);

/// min(edit_distance(x, y), limit + 1), restricted to the diagonal band of
/// width limit.
std::size_t bounded_edit_distance(const BitWord& x, const BitWord& y, std::size_t limit);

/// True iff L*(x, y) <= 2 * budget, i.e. the two words cannot both belong to
/// a budget-ins/del/sub correcting code.
bool confusable_within(const BitWord& x, const BitWord& y, std::size_t budget);

/// Same question answered through the balls: some word lies within budget
/// edits of both x and y.
bool balls_intersect(const BitWord& x, const BitWord& y, std::size_t budget);

/// A random valid pattern with exactly `edits` operations; each edit's kind
/// is drawn independently.
ErrorPattern random_pattern(std::size_t n, std::size_t edits, std::mt19937_64& rng);

}  // namespace pairvt
