#include "pairvt/channel.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace pairvt {

namespace {

std::size_t parse_index(std::string_view text, std::string_view item) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("bad index in edit '" + std::string(item) + "'");
    }
    return value;
}

int parse_symbol(std::string_view text, std::string_view item) {
    if (text != "0" && text != "1") {
        throw std::invalid_argument("bad symbol in edit '" + std::string(item) + "'");
    }
    return text[0] - '0';
}

// Calls visit(chosen) for every k-subset of candidates, in lexicographic order.
void for_each_subset(const std::vector<std::size_t>& candidates, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > candidates.size()) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::size_t> chosen(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) chosen[i] = candidates[idx[i]];
        visit(chosen);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == candidates.size() - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Non-decreasing k-tuples over [0, upper].
void for_each_multiset(std::size_t upper, std::size_t k,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> g(k, 0);
    while (true) {
        visit(g);
        std::size_t i = k;
        while (i > 0 && g[i - 1] == upper) --i;
        if (i == 0) return;
        ++g[i - 1];
        for (std::size_t j = i; j < k; ++j) g[j] = g[i - 1];
    }
}

}  // namespace

void ErrorPattern::validate(std::size_t n) const {
    std::vector<char> used(n + 1, 0);
    for (const std::size_t d : deletions) {
        if (d < 1 || d > n) throw std::invalid_argument("deletion position " + std::to_string(d) + " out of range");
        if (used[d]) throw std::invalid_argument("position " + std::to_string(d) + " edited twice");
        used[d] = 1;
    }
    for (const auto& sub : substitutions) {
        if (sub.position < 1 || sub.position > n) {
            throw std::invalid_argument("substitution position " + std::to_string(sub.position) + " out of range");
        }
        if (used[sub.position]) throw std::invalid_argument("position " + std::to_string(sub.position) + " edited twice");
        if (sub.symbol != 0 && sub.symbol != 1) throw std::invalid_argument("substitution symbol must be 0 or 1");
        used[sub.position] = 1;
    }
    for (const auto& ins : insertions) {
        if (ins.gap > n) throw std::invalid_argument("insertion gap " + std::to_string(ins.gap) + " out of range");
        if (ins.symbol != 0 && ins.symbol != 1) throw std::invalid_argument("insertion symbol must be 0 or 1");
    }
}

std::string ErrorPattern::to_string() const {
    std::string out;
    auto add = [&out](const std::string& item) {
        if (!out.empty()) out += ',';
        out += item;
    };
    for (const auto& s : substitutions) add("sub@" + std::to_string(s.position) + "=" + std::to_string(s.symbol));
    for (const auto d : deletions) add("del@" + std::to_string(d));
    for (const auto& i : insertions) add("ins@" + std::to_string(i.gap) + "=" + std::to_string(i.symbol));
    return out.empty() ? "none" : out;
}

ErrorPattern ErrorPattern::parse(std::string_view text) {
    ErrorPattern p;
    if (text.empty() || text == "none") return p;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        const std::size_t at = item.find('@');
        if (at == std::string_view::npos) throw std::invalid_argument("edit '" + std::string(item) + "' lacks '@'");
        const std::string_view kind = item.substr(0, at);
        std::string_view rest = item.substr(at + 1);
        if (kind == "del") {
            p.deletions.push_back(parse_index(rest, item));
        } else if (kind == "sub" || kind == "ins") {
            const std::size_t eq = rest.find('=');
            if (eq == std::string_view::npos) throw std::invalid_argument("edit '" + std::string(item) + "' lacks '='");
            const std::size_t index = parse_index(rest.substr(0, eq), item);
            const int symbol = parse_symbol(rest.substr(eq + 1), item);
            if (kind == "sub") p.substitutions.push_back({index, symbol});
            else p.insertions.push_back({index, symbol});
        } else {
            throw std::invalid_argument("unknown edit kind '" + std::string(kind) + "'");
        }
        start = comma + 1;
    }
    return p;
}

BitWord apply_errors(const BitWord& x, const ErrorPattern& p) {
    const std::size_t n = x.size();
    p.validate(n);
    BitWord work = x;
    std::vector<char> deleted(n + 1, 0);
    for (const auto& s : p.substitutions) work.set(s.position - 1, s.symbol);
    for (const auto d : p.deletions) deleted[d] = 1;
    // Stable by gap so several insertions into one gap keep their listed order.
    std::vector<Insertion> ins = p.insertions;
    std::stable_sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) { return a.gap < b.gap; });

    BitWord out;
    std::size_t next = 0;
    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
        while (next < ins.size() && ins[next].gap == pos - 1) out.push_back(ins[next++].symbol);
        if (pos <= n && !deleted[pos]) out.push_back(work[pos - 1]);
    }
    return out;
}

void for_each_pattern(std::size_t n, std::size_t t, std::size_t s, std::size_t r,
                      const std::function<void(const ErrorPattern&)>& visit) {
    if (t + s + r > kMaxBallEdits) throw std::invalid_argument("at most 4 edits are supported");
    if (s + r > n) return;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;

    ErrorPattern p;
    for_each_subset(all, s, [&](const std::vector<std::size_t>& dels) {
        p.deletions = dels;
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!std::binary_search(dels.begin(), dels.end(), i)) rest.push_back(i);
        }
        for_each_subset(rest, r, [&](const std::vector<std::size_t>& subs) {
            for (std::uint32_t sub_bits = 0; sub_bits < (1u << r); ++sub_bits) {
                p.substitutions.clear();
                for (std::size_t i = 0; i < r; ++i) {
                    p.substitutions.push_back({subs[i], static_cast<int>((sub_bits >> i) & 1u)});
                }
                for_each_multiset(n, t, [&](const std::vector<std::size_t>& gaps) {
                    for (std::uint32_t ins_bits = 0; ins_bits < (1u << t); ++ins_bits) {
                        p.insertions.clear();
                        for (std::size_t i = 0; i < t; ++i) {
                            p.insertions.push_back({gaps[i], static_cast<int>((ins_bits >> i) & 1u)});
                        }
                        visit(p);
                    }
                });
            }
        });
    });
}

std::vector<BitWord> error_ball(const BitWord& x, std::size_t t, std::size_t s, std::size_t r) {
    if (s > x.size()) throw std::invalid_argument("more deletions than symbols");
    std::set<BitWord> out;
    for_each_pattern(x.size(), t, s, r, [&](const ErrorPattern& p) { out.insert(apply_errors(x, p)); });
    return {out.begin(), out.end()};
}

std::vector<BitWord> edit_ball(const BitWord& x, std::size_t radius) {
    if (radius > kMaxBallEdits) throw std::invalid_argument("at most 4 edits are supported");
    std::set<BitWord> out;
    for (std::size_t t = 0; t <= radius; ++t) {
        for (std::size_t s = 0; s + t <= radius && s <= x.size(); ++s) {
            // Exact r covers every smaller r through trivial substitutions.
            const std::size_t r = std::min(radius - t - s, x.size() - s);
            for_each_pattern(x.size(), t, s, r, [&](const ErrorPattern& p) { out.insert(apply_errors(x, p)); });
        }
    }
    return {out.begin(), out.end()};
}

std::size_t edit_distance(const BitWord& x, const BitWord& y) {
    const std::size_t m = y.size();
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t diag = prev[j - 1] + (x[i - 1] != y[j - 1] ? 1 : 0);
            cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::size_t bounded_edit_distance(const BitWord& x, const BitWord& y, std::size_t limit) {
    const std::size_t n = x.size(), m = y.size();
    const std::size_t over = limit + 1;
    if ((n > m ? n - m : m - n) > limit) return over;
    // Cells outside |i - j| <= limit hold at least limit + 1; cap everything there.
    std::vector<std::size_t> prev(m + 1, over), cur(m + 1, over);
    for (std::size_t j = 0; j <= std::min(m, limit); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > limit ? i - limit : 0;
        const std::size_t hi = std::min(m, i + limit);
        std::fill(cur.begin(), cur.end(), over);
        std::size_t row_min = over;
        if (lo == 0) cur[0] = std::min(i, over), row_min = cur[0];
        for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
            const std::size_t diag = prev[j - 1] + (x[i - 1] != y[j - 1] ? 1 : 0);
            cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1, over});
            row_min = std::min(row_min, cur[j]);
        }
        if (row_min >= over) return over;
        std::swap(prev, cur);
    }
    return std::min(prev[m], over);
}

bool confusable_within(const BitWord& x, const BitWord& y, std::size_t budget) {
    if (budget < 1) throw std::invalid_argument("confusability budget must be at least 1");
    return bounded_edit_distance(x, y, 2 * budget) <= 2 * budget;
}

bool balls_intersect(const BitWord& x, const BitWord& y, std::size_t budget) {
    const auto a = edit_ball(x, budget);
    const auto b = edit_ball(y, budget);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

ErrorPattern random_pattern(std::size_t n, std::size_t edits, std::mt19937_64& rng) {
    ErrorPattern p;
    std::vector<std::size_t> free_positions(n);
    for (std::size_t i = 0; i < n; ++i) free_positions[i] = i + 1;
    std::shuffle(free_positions.begin(), free_positions.end(), rng);
    std::uniform_int_distribution<int> kind_dist(0, 2), bit(0, 1);
    std::uniform_int_distribution<std::size_t> gap_dist(0, n);
    for (std::size_t e = 0; e < edits; ++e) {
        int kind = kind_dist(rng);
        if (kind != 0 && free_positions.empty()) kind = 0;  // only insertions remain possible
        if (kind == 0) {
            p.insertions.push_back({gap_dist(rng), bit(rng)});
        } else {
            const std::size_t pos = free_positions.back();
            free_positions.pop_back();
            if (kind == 1) p.deletions.push_back(pos);
            else p.substitutions.push_back({pos, bit(rng)});
        }
    }
    std::sort(p.deletions.begin(), p.deletions.end());
    std::sort(p.substitutions.begin(), p.substitutions.end(),
              [](const Substitution& a, const Substitution& b) { return a.position < b.position; });
    std::stable_sort(p.insertions.begin(), p.insertions.end(),
                     [](const Insertion& a, const Insertion& b) { return a.gap < b.gap; });
    return p;
}

}  // namespace pairvt
