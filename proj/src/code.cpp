#include "pairvt/code.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "pairvt/parallel.hpp"

namespace pairvt {

CodeParams::CodeParams(const SyndromeTuple& residues) : residues_(residues) {
    if (!residues_.is_canonical()) throw std::invalid_argument("code parameters are not canonical residues");
}

CodeParams CodeParams::make(std::uint32_t n, std::int64_t k1, std::int64_t k2, std::int64_t k3, std::int64_t k4) {
    return CodeParams(SyndromeTuple::canonical(n, k1, k2, k3, k4));
}

CodeParams CodeParams::of_word(const BitWord& x) { return CodeParams(syndrome_tuple(x)); }

CodeParams CodeParams::parse(std::uint32_t n, const std::string& residues) {
    std::vector<std::int64_t> k;
    std::stringstream ss(residues);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            k.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad residue '" + item + "'");
        }
    }
    if (k.size() != 4) throw std::invalid_argument("expected four residues k1,k2,k3,k4");
    return make(n, k[0], k[1], k[2], k[3]);
}

std::string CodeParams::to_string() const {
    std::ostringstream os;
    os << residues_.s0 << ',' << residues_.s1 << ',' << residues_.s2 << ',' << residues_.s3;
    return os.str();
}

bool is_codeword(const BitWord& x, const CodeParams& p) {
    if (x.size() != p.n()) {
        throw std::invalid_argument("word length " + std::to_string(x.size()) + " does not match code length " +
                                    std::to_string(p.n()));
    }
    return syndrome_tuple(x) == p.residues();
}

void check_enumeration_cap(std::uint32_t n, std::uint32_t cap) {
    if (n > cap || n > 63) {
        throw ResourceLimitError("length " + std::to_string(n) + " exceeds the enumeration cap of " +
                                 std::to_string(std::min<std::uint32_t>(cap, 63)));
    }
}

std::vector<BitWord> enumerate_codewords(const CodeParams& p, std::uint32_t cap) {
    check_enumeration_cap(p.n(), cap);
    std::vector<BitWord> out;
    const std::uint64_t total = std::uint64_t{1} << p.n();
    for (std::uint64_t v = 0; v < total; ++v) {
        BitWord x = BitWord::from_integer(v, p.n());
        if (syndrome_tuple(x) == p.residues()) out.push_back(std::move(x));
    }
    return out;
}

std::vector<Bucket> Census::top(std::size_t k) const {
    std::vector<Bucket> sorted = buckets;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Bucket& a, const Bucket& b) { return a.count > b.count; });
    if (sorted.size() > k) sorted.resize(k);
    return sorted;
}

Census bucket_census(std::uint32_t n, std::uint32_t cap, unsigned workers) {
    if (n < kMinCodeLength) throw std::invalid_argument("code length must be at least 7");
    check_enumeration_cap(n, cap);
    using Counts = std::unordered_map<SyndromeTuple, std::uint64_t, SyndromeTupleHash>;
    const std::uint64_t total = std::uint64_t{1} << n;
    auto partial = run_sharded<Counts>(total, workers, [n](std::uint64_t lo, std::uint64_t hi) {
        Counts c;
        for (std::uint64_t v = lo; v < hi; ++v) ++c[syndrome_tuple(BitWord::from_integer(v, n))];
        return c;
    });
    Counts merged;
    for (const auto& c : partial) {
        for (const auto& [key, count] : c) merged[key] += count;
    }

    Census census;
    census.n = n;
    census.total = total;
    census.buckets.reserve(merged.size());
    for (const auto& [key, count] : merged) census.buckets.push_back({key, count});
    std::sort(census.buckets.begin(), census.buckets.end(),
              [](const Bucket& a, const Bucket& b) { return a.residues < b.residues; });
    for (std::size_t i = 1; i < census.buckets.size(); ++i) {
        if (census.buckets[i].count > census.buckets[census.best].count) census.best = i;
    }
    return census;
}

std::uint64_t pigeonhole_floor(std::uint32_t n) {
    const Moduli m = syndrome_moduli(n);
    const long double classes = static_cast<long double>(m.m0) * m.m1 * m.m2 * m.m3;
    return static_cast<std::uint64_t>(std::ceil(std::ldexp(1.0L, static_cast<int>(n)) / classes));
}

double redundancy_bound(std::uint32_t n) { return 6.0 * std::log2(static_cast<double>(n)) + 8.0; }

double redundancy(std::uint64_t code_size, std::uint32_t n) {
    if (code_size == 0) throw std::domain_error("redundancy is undefined for an empty code");
    return static_cast<double>(n) - std::log2(static_cast<double>(code_size));
}

double redundancy(const CodeParams& p, std::uint32_t cap) {
    return redundancy(enumerate_codewords(p, cap).size(), p.n());
}

Codebook::Codebook(const CodeParams& p, std::uint32_t cap) : params_(p), words_(enumerate_codewords(p, cap)) {}

const BitWord& Codebook::encode(std::uint64_t m) const {
    if (m >= words_.size()) {
        throw std::out_of_range("message index " + std::to_string(m) + " out of range for a code of size " +
                                std::to_string(words_.size()));
    }
    return words_[m];
}

std::uint64_t Codebook::rank(const BitWord& x) const {
    const auto it = std::lower_bound(words_.begin(), words_.end(), x);
    if (it == words_.end() || *it != x) throw std::invalid_argument(x.to_string() + " is not a codeword");
    return static_cast<std::uint64_t>(it - words_.begin());
}

BitWord encode_index(std::uint64_t m, const CodeParams& p, std::uint32_t cap) { return Codebook(p, cap).encode(m); }

std::uint64_t decode_index(const BitWord& x, const CodeParams& p, std::uint32_t cap) {
    if (x.size() != p.n()) throw std::invalid_argument("word length does not match code length");
    return Codebook(p, cap).rank(x);
}

}  // namespace pairvt
