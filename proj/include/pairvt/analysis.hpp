#pragma once

// Error classification for del/sub good pairs and the segmentation transform
// that pulls the errors of a confusable pair apart.
//
// U and V (or X and Y) are padded words of equal length. All positions in
// this header are 1-based.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairvt/bitword.hpp"

namespace pairvt {

enum class AlignOpKind { Match, SubstUV, DeleteU, DeleteV };

/// One step of a monotone matching between U and V. The index of a side the
/// step does not consume is 0.
struct AlignOp {
    AlignOpKind kind;
    std::size_t u = 0;
    std::size_t v = 0;
    friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

struct Alignment {
    std::vector<AlignOp> ops;

    std::size_t count(AlignOpKind kind) const;
    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Throws std::invalid_argument unless every position of U and V is consumed
/// exactly once, in increasing order, and every Match pairs equal symbols.
void validate_alignment(const BitWord& u, const BitWord& v, const Alignment& a);

/// Minimum-cost alignment. Ties prefer Match, then SubstUV, then DeleteU,
/// then DeleteV, deciding from the left end. SubstUV only pairs unequal symbols.
Alignment canonical_alignment(const BitWord& u, const BitWord& v);

/// canonical_alignment(x, y) embedded between matched padding zeros, i.e. an
/// alignment of pad(x) with pad(y).
Alignment padded_alignment(const BitWord& x, const BitWord& y);

/// Alignment of a del/sub relation given as 2s+2r positions: s deletions in
/// U, 2r substitutions in U, s deletions in V. Throws when the relation does
/// not hold.
Alignment alignment_from_positions(const BitWord& u, const BitWord& v, const std::vector<std::size_t>& positions,
                                   std::size_t s, std::size_t r);

enum class ErrorKind { Sub, DelOver, DelUnder };

std::string to_string(ErrorKind k);

/// An error of the alignment located in its own sequence: U for Sub and
/// DelOver, V for DelUnder.
struct ErrorSite {
    ErrorKind kind;
    std::size_t position;
    std::size_t op_index;  // index into Alignment::ops
    friend bool operator==(const ErrorSite&, const ErrorSite&) = default;
};

/// Errors in alignment order. Every SubstUV counts, trivial or not.
std::vector<ErrorSite> error_sites(const Alignment& a);

/// The 2s+2r positions in good-pair order: U deletions, U substitutions, V deletions.
std::vector<std::size_t> good_pair_positions(const Alignment& a);

/// True iff positions lie in [2, m+1], have pairwise distance >= 2s+1, and
/// deleting/substituting U there yields V with its deletions removed.
/// Throws std::invalid_argument for a malformed position list.
bool is_good_pair(const BitWord& u, const BitWord& v, const std::vector<std::size_t>& positions, std::size_t s,
                  std::size_t r);

struct ErrorTypeValue {
    ErrorKind kind;
    int value;             // Sub: 2, 0, -2. DelOver: 2, 0. DelUnder: 0, -2.
    std::size_t position;  // in U for Sub and DelOver, in V for DelUnder
    friend bool operator==(const ErrorTypeValue&, const ErrorTypeValue&) = default;
};

/// Type and type value of every error, in alignment order. Throws
/// std::invalid_argument when the errors are not separated enough for the
/// local windows to be well defined.
std::vector<ErrorTypeValue> classify_errors(const BitWord& u, const BitWord& v, const Alignment& a);

struct PairType {
    std::vector<ErrorKind> types;
    std::vector<int> values;
    std::vector<std::size_t> positions;

    /// e.g. "(del-over,sub,del-under,sub)" and "(^2,-2,_-2,2)" where ^ marks
    /// a U-side deletion value and _ a V-side one.
    std::string types_string() const;
    std::string values_string() const;
};

/// classify_errors ordered by each error's own-sequence position.
PairType pair_type(const BitWord& u, const BitWord& v, const Alignment& a);

struct Cut {
    std::size_t i;  // insert after X_i
    std::size_t j;  // insert after Y_j
    friend bool operator==(const Cut&, const Cut&) = default;
};

/// The filler inserted after X_i and after Y_j.
BitWord segmentation_filler(const BitWord& x, const BitWord& y, Cut cut);

struct SegmentRound {
    Cut cut;
    BitWord filler;
    BitWord x, y;  // after insertion
    Alignment alignment;
};

/// Inserts the filler at a cut that no matched pair crosses. Throws
/// std::invalid_argument when the cut is out of range or crossed.
SegmentRound segment_once(const BitWord& x, const BitWord& y, const Alignment& a, Cut cut);

struct Separation {
    BitWord u, v;
    Alignment alignment;
    std::vector<ErrorSite> errors;
    std::vector<SegmentRound> rounds;
};

struct SeparationOptions {
    std::size_t max_cost = 4;     // largest edit distance accepted from x to y
    std::size_t round_budget = 0; // 0 selects 4k
};

/// Thrown when the inputs admit no qualifying edit relation or the round
/// budget runs out.
class SeparationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Repeatedly segments pad(x), pad(y) along their canonical alignment until
/// all error positions are pairwise at least k apart.
Separation separate_errors(const BitWord& x, const BitWord& y, std::size_t k, SeparationOptions opts = {});

/// Same, starting from padded words and a caller-chosen alignment.
Separation separate_errors(const BitWord& x_padded, const BitWord& y_padded, const Alignment& a, std::size_t k,
                           SeparationOptions opts = {});

/// True iff the sequence `part` can be obtained from `whole` by deleting entries.
bool is_subsequence(const Profile& part, const Profile& whole);

/// Exhaustive check over length-n pairs x != y with L* <= 4 and f(X) = f(Y):
/// separation never lowers sigma of the profile difference, and the three
/// VT moments of F(X) - F(Y) never vanish together.
struct SigmaSweep {
    std::uint32_t n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t sigma_at_most_3 = 0;
    std::size_t max_sigma = 0;
    std::uint64_t sigma_drops = 0;      // sigma(F(U)-F(V)) < sigma(F(X)-F(Y))
    std::uint64_t f_mismatches = 0;     // f(U)-f(V) != f(X)-f(Y)
    std::uint64_t moment_collisions = 0;
    bool ok() const { return sigma_drops == 0 && f_mismatches == 0 && moment_collisions == 0; }
};

SigmaSweep sigma_bound_sweep(std::uint32_t n, std::size_t k = 5);

}  // namespace pairvt
