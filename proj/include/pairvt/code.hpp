#pragma once

// The code family C_{k1,k2,k3,k4}: all length-n words whose padded adjacency
// profile has a prescribed syndrome.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairvt/bitword.hpp"
#include "pairvt/syndrome.hpp"

namespace pairvt {

/// Raised when an exhaustive operation would exceed its configured size cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultEnumerationCap = 24;

/// Code length plus the four residues selecting one code of the family.
class CodeParams {
public:
    explicit CodeParams(const SyndromeTuple& residues);
    static CodeParams make(std::uint32_t n, std::int64_t k1, std::int64_t k2, std::int64_t k3, std::int64_t k4);
    /// Parameters of the unique code containing x.
    static CodeParams of_word(const BitWord& x);
    /// "k1,k2,k3,k4"
    static CodeParams parse(std::uint32_t n, const std::string& residues);

    std::uint32_t n() const noexcept { return residues_.n; }
    const SyndromeTuple& residues() const noexcept { return residues_; }
    std::string to_string() const;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;

private:
    SyndromeTuple residues_;
};

/// Throws std::invalid_argument when |x| != p.n().
bool is_codeword(const BitWord& x, const CodeParams& p);

/// Throws ResourceLimitError when n > cap.
void check_enumeration_cap(std::uint32_t n, std::uint32_t cap);

/// Every codeword, in lexicographic order.
std::vector<BitWord> enumerate_codewords(const CodeParams& p, std::uint32_t cap = kDefaultEnumerationCap);

struct Bucket {
    SyndromeTuple residues;
    std::uint64_t count = 0;
    friend bool operator==(const Bucket&, const Bucket&) = default;
};

struct Census {
    std::uint32_t n = 0;
    std::vector<Bucket> buckets;  // nonempty classes, ordered by residues
    std::uint64_t total = 0;
    std::size_t best = 0;         // largest bucket; ties go to the smallest residues

    const Bucket& best_bucket() const { return buckets.at(best); }
    /// The k largest buckets, count descending then residues ascending.
    std::vector<Bucket> top(std::size_t k) const;
};

Census bucket_census(std::uint32_t n, std::uint32_t cap = kDefaultEnumerationCap, unsigned workers = 1);

/// ceil(2^n / (144 n^6)): the size some class must reach by pigeonhole.
std::uint64_t pigeonhole_floor(std::uint32_t n);

/// 6 log2(n) + 8
double redundancy_bound(std::uint32_t n);

/// n - log2(code_size). Throws std::domain_error for an empty code.
double redundancy(std::uint64_t code_size, std::uint32_t n);
double redundancy(const CodeParams& p, std::uint32_t cap = kDefaultEnumerationCap);

/// Sorted codeword table supporting rank/unrank.
class Codebook {
public:
    explicit Codebook(const CodeParams& p, std::uint32_t cap = kDefaultEnumerationCap);

    const CodeParams& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<BitWord>& words() const noexcept { return words_; }

    /// The m-th codeword in lexicographic order; throws std::out_of_range.
    const BitWord& encode(std::uint64_t m) const;
    /// Inverse of encode; throws std::invalid_argument for non-codewords.
    std::uint64_t rank(const BitWord& x) const;

private:
    CodeParams params_;
    std::vector<BitWord> words_;
};

BitWord encode_index(std::uint64_t m, const CodeParams& p, std::uint32_t cap = kDefaultEnumerationCap);
std::uint64_t decode_index(const BitWord& x, const CodeParams& p, std::uint32_t cap = kDefaultEnumerationCap);

}  // namespace pairvt
