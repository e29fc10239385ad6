#include "pairvt/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "pairvt/channel.hpp"
#include "pairvt/syndrome.hpp"

namespace pairvt {

namespace {

int sym(const BitWord& w, std::size_t pos) { return w[pos - 1]; }

int f3(int a, int b, int c) { return (a != b) + (b != c); }
int f2(int a, int b) { return a != b; }

bool is_matched(AlignOpKind k) { return k == AlignOpKind::Match || k == AlignOpKind::SubstUV; }

// The last U and V indices consumed by ops[0..end).
Cut consumed_before(const Alignment& a, std::size_t end) {
    Cut c{0, 0};
    for (std::size_t t = 0; t < end; ++t) {
        if (a.ops[t].u) c.i = a.ops[t].u;
        if (a.ops[t].v) c.j = a.ops[t].v;
    }
    return c;
}

std::size_t separation_needed(const Alignment& a) { return 2 * a.count(AlignOpKind::DeleteU) + 1; }

}  // namespace

std::size_t Alignment::count(AlignOpKind kind) const {
    return static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [kind](const AlignOp& op) { return op.kind == kind; }));
}

void validate_alignment(const BitWord& u, const BitWord& v, const Alignment& a) {
    std::size_t next_u = 1, next_v = 1;
    for (const auto& op : a.ops) {
        const bool uses_u = op.kind != AlignOpKind::DeleteV;
        const bool uses_v = op.kind != AlignOpKind::DeleteU;
        if (uses_u != (op.u != 0) || uses_v != (op.v != 0)) throw std::invalid_argument("alignment op has wrong sides");
        if (uses_u && op.u != next_u++) throw std::invalid_argument("alignment skips or repeats a U position");
        if (uses_v && op.v != next_v++) throw std::invalid_argument("alignment skips or repeats a V position");
        if (op.kind == AlignOpKind::Match && sym(u, op.u) != sym(v, op.v)) {
            throw std::invalid_argument("alignment matches unequal symbols at U_" + std::to_string(op.u));
        }
    }
    if (next_u != u.size() + 1 || next_v != v.size() + 1) throw std::invalid_argument("alignment does not cover both words");
}

Alignment canonical_alignment(const BitWord& u, const BitWord& v) {
    const std::size_t n = u.size(), m = v.size();
    // cost[i][j]: cheapest alignment of the suffixes u[i..], v[j..].
    std::vector<std::vector<std::size_t>> cost(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t i = n + 1; i-- > 0;) {
        for (std::size_t j = m + 1; j-- > 0;) {
            if (i == n) cost[i][j] = m - j;
            else if (j == m) cost[i][j] = n - i;
            else {
                cost[i][j] = std::min({cost[i + 1][j + 1] + (u[i] != v[j] ? 1 : 0), cost[i + 1][j] + 1, cost[i][j + 1] + 1});
            }
        }
    }
    Alignment a;
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && u[i] == v[j] && cost[i][j] == cost[i + 1][j + 1]) {
            a.ops.push_back({AlignOpKind::Match, i + 1, j + 1});
            ++i, ++j;
        } else if (i < n && j < m && u[i] != v[j] && cost[i][j] == cost[i + 1][j + 1] + 1) {
            a.ops.push_back({AlignOpKind::SubstUV, i + 1, j + 1});
            ++i, ++j;
        } else if (i < n && cost[i][j] == cost[i + 1][j] + 1) {
            a.ops.push_back({AlignOpKind::DeleteU, i + 1, 0});
            ++i;
        } else {
            a.ops.push_back({AlignOpKind::DeleteV, 0, j + 1});
            ++j;
        }
    }
    return a;
}

Alignment padded_alignment(const BitWord& x, const BitWord& y) {
    Alignment a;
    a.ops.push_back({AlignOpKind::Match, 1, 1});
    for (auto op : canonical_alignment(x, y).ops) {
        if (op.u) ++op.u;
        if (op.v) ++op.v;
        a.ops.push_back(op);
    }
    a.ops.push_back({AlignOpKind::Match, x.size() + 2, y.size() + 2});
    return a;
}

Alignment alignment_from_positions(const BitWord& u, const BitWord& v, const std::vector<std::size_t>& positions,
                                   std::size_t s, std::size_t r) {
    if (positions.size() != 2 * s + 2 * r) throw std::invalid_argument("expected 2s+2r positions");
    std::vector<char> del_u(u.size() + 1, 0), sub_u(u.size() + 1, 0), del_v(v.size() + 1, 0);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const std::size_t p = positions[k];
        const bool on_v = k >= s + 2 * r;
        const std::size_t len = on_v ? v.size() : u.size();
        if (p < 1 || p > len) throw std::invalid_argument("position " + std::to_string(p) + " out of range");
        auto& mark = k < s ? del_u : (on_v ? del_v : sub_u);
        if (mark[p] || (!on_v && (del_u[p] || sub_u[p]))) throw std::invalid_argument("position listed twice");
        mark[p] = 1;
    }
    Alignment a;
    std::size_t i = 1, j = 1;
    while (i <= u.size() || j <= v.size()) {
        if (i <= u.size() && del_u[i]) {
            a.ops.push_back({AlignOpKind::DeleteU, i++, 0});
        } else if (j <= v.size() && del_v[j]) {
            a.ops.push_back({AlignOpKind::DeleteV, 0, j++});
        } else if (i <= u.size() && j <= v.size()) {
            a.ops.push_back({sub_u[i] ? AlignOpKind::SubstUV : AlignOpKind::Match, i, j});
            ++i, ++j;
        } else {
            throw std::invalid_argument("positions leave U and V with different lengths");
        }
    }
    validate_alignment(u, v, a);
    return a;
}

std::string to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Sub: return "sub";
        case ErrorKind::DelOver: return "del-over";
        case ErrorKind::DelUnder: return "del-under";
    }
    return "?";
}

std::vector<ErrorSite> error_sites(const Alignment& a) {
    std::vector<ErrorSite> out;
    for (std::size_t t = 0; t < a.ops.size(); ++t) {
        const auto& op = a.ops[t];
        switch (op.kind) {
            case AlignOpKind::Match: break;
            case AlignOpKind::SubstUV: out.push_back({ErrorKind::Sub, op.u, t}); break;
            case AlignOpKind::DeleteU: out.push_back({ErrorKind::DelOver, op.u, t}); break;
            case AlignOpKind::DeleteV: out.push_back({ErrorKind::DelUnder, op.v, t}); break;
        }
    }
    return out;
}

std::vector<std::size_t> good_pair_positions(const Alignment& a) {
    std::vector<std::size_t> out;
    for (const ErrorKind kind : {ErrorKind::DelOver, ErrorKind::Sub, ErrorKind::DelUnder}) {
        for (const auto& e : error_sites(a)) {
            if (e.kind == kind) out.push_back(e.position);
        }
    }
    return out;
}

bool is_good_pair(const BitWord& u, const BitWord& v, const std::vector<std::size_t>& positions, std::size_t s,
                  std::size_t r) {
    if (u.size() != v.size() || u.size() < 2) throw std::invalid_argument("good pairs need equal lengths of at least 2");
    if (positions.size() != 2 * s + 2 * r) throw std::invalid_argument("expected 2s+2r positions");
    const std::size_t m = u.size() - 2;
    for (const auto p : positions) {
        if (p < 2 || p > m + 1) return false;
    }
    for (std::size_t a = 0; a < positions.size(); ++a) {
        for (std::size_t b = a + 1; b < positions.size(); ++b) {
            const std::size_t d = positions[a] > positions[b] ? positions[a] - positions[b] : positions[b] - positions[a];
            if (d < 2 * s + 1) return false;
        }
    }
    try {
        alignment_from_positions(u, v, positions, s, r);
    } catch (const std::invalid_argument&) {
        return false;  // positions collide or a forced match pairs unequal symbols
    }
    return true;
}

std::vector<ErrorTypeValue> classify_errors(const BitWord& u, const BitWord& v, const Alignment& a) {
    validate_alignment(u, v, a);
    const auto sites = error_sites(a);
    const std::size_t gap = separation_needed(a);
    for (std::size_t p = 0; p < sites.size(); ++p) {
        const std::size_t len = sites[p].kind == ErrorKind::DelUnder ? v.size() : u.size();
        if (sites[p].position < 2 || sites[p].position + 1 > len) {
            throw std::invalid_argument("error at position " + std::to_string(sites[p].position) + " touches the padding");
        }
        for (std::size_t q = p + 1; q < sites.size(); ++q) {
            const auto d = static_cast<std::size_t>(
                std::llabs(static_cast<long long>(sites[p].position) - static_cast<long long>(sites[q].position)));
            if (d < gap) {
                throw std::invalid_argument("errors at " + std::to_string(sites[p].position) + " and " +
                                            std::to_string(sites[q].position) + " are closer than " + std::to_string(gap));
            }
        }
    }
    std::vector<std::size_t> tau_u(u.size() + 1, 0);
    for (const auto& op : a.ops) {
        if (is_matched(op.kind)) tau_u[op.u] = op.v;
    }

    std::vector<ErrorTypeValue> out;
    for (const auto& e : sites) {
        const std::size_t i = e.position;
        int value = 0;
        if (e.kind == ErrorKind::Sub) {
            const std::size_t left = tau_u[i - 1];
            if (left == 0) throw std::invalid_argument("substitution at U_" + std::to_string(i) + " follows a deletion");
            const int l = sym(v, left);
            value = f3(l, sym(u, i), sym(u, i + 1)) - f3(l, sym(v, tau_u[i]), sym(u, i + 1));
        } else if (e.kind == ErrorKind::DelOver) {
            value = f3(sym(u, i - 1), sym(u, i), sym(u, i + 1)) - f2(sym(u, i - 1), sym(u, i + 1));
        } else {
            value = f2(sym(v, i - 1), sym(v, i + 1)) - f3(sym(v, i - 1), sym(v, i), sym(v, i + 1));
        }
        out.push_back({e.kind, value, i});
    }
    return out;
}

std::string PairType::types_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < types.size(); ++k) s += (k ? "," : "") + to_string(types[k]);
    return s + ")";
}

std::string PairType::values_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) s += ',';
        if (types[k] == ErrorKind::DelOver) s += '^';
        if (types[k] == ErrorKind::DelUnder) s += '_';
        s += std::to_string(values[k]);
    }
    return s + ")";
}

PairType pair_type(const BitWord& u, const BitWord& v, const Alignment& a) {
    auto errs = classify_errors(u, v, a);
    std::stable_sort(errs.begin(), errs.end(),
                     [](const ErrorTypeValue& p, const ErrorTypeValue& q) { return p.position < q.position; });
    PairType t;
    for (const auto& e : errs) {
        t.types.push_back(e.kind);
        t.values.push_back(e.value);
        t.positions.push_back(e.position);
    }
    return t;
}

BitWord segmentation_filler(const BitWord& x, const BitWord& y, Cut cut) {
    const auto [i, j] = cut;
    if (x.size() != y.size()) throw std::invalid_argument("segmentation needs equal-length words");
    if (i < 1 || j < 1 || i + 1 > x.size() || j + 1 > y.size()) throw std::invalid_argument("cut out of range");
    if (i == j) {
        const int xi = sym(x, i), xn = sym(x, i + 1), yi = sym(y, i), yn = sym(y, i + 1);
        BitWord z(2);
        if (xi == yi) {
            z.set(0, xi), z.set(1, xi);
        } else if (xn == yn) {
            z.set(0, xn), z.set(1, xn);
        } else if (xi != xn) {  // X_i = Y_{i+1} = a, Y_i = X_{i+1} = b
            z.set(0, xi), z.set(1, xi);
        } else {  // X_i = X_{i+1} = a, Y_i = Y_{i+1} = b
            z.set(0, xi), z.set(1, 1 - xi);
        }
        return z;
    }
    if (i < j) {
        BitWord z = x.slice(i, j - i);  // X_{[i+1, j]}
        z.push_back(sym(y, j));
        return z;
    }
    BitWord z = y.slice(j, i - j);  // Y_{[j+1, i]}
    z.push_back(sym(x, i));
    return z;
}

SegmentRound segment_once(const BitWord& x, const BitWord& y, const Alignment& a, Cut cut) {
    validate_alignment(x, y, a);
    const BitWord z = segmentation_filler(x, y, cut);
    for (const auto& op : a.ops) {
        if (!is_matched(op.kind)) continue;
        const bool left = op.u <= cut.i && op.v <= cut.j;
        const bool right = op.u >= cut.i + 1 && op.v >= cut.j + 1;
        if (!left && !right) {
            throw std::invalid_argument("cut (" + std::to_string(cut.i) + "," + std::to_string(cut.j) +
                                        ") crosses the matched pair (" + std::to_string(op.u) + "," +
                                        std::to_string(op.v) + ")");
        }
    }
    const std::size_t len = z.size();
    SegmentRound round{cut, z, x.slice(0, cut.i).concat(z).concat(x.slice(cut.i, x.size() - cut.i)),
                       y.slice(0, cut.j).concat(z).concat(y.slice(cut.j, y.size() - cut.j)), {}};

    std::vector<AlignOp> right;
    for (auto op : a.ops) {
        const bool is_left = op.kind == AlignOpKind::DeleteV ? op.v <= cut.j : op.u <= cut.i;
        if (is_left) {
            round.alignment.ops.push_back(op);
        } else {
            if (op.u) op.u += len;
            if (op.v) op.v += len;
            right.push_back(op);
        }
    }
    for (std::size_t t = 1; t <= len; ++t) round.alignment.ops.push_back({AlignOpKind::Match, cut.i + t, cut.j + t});
    round.alignment.ops.insert(round.alignment.ops.end(), right.begin(), right.end());
    validate_alignment(round.x, round.y, round.alignment);
    return round;
}

Separation separate_errors(const BitWord& x, const BitWord& y, std::size_t k, SeparationOptions opts) {
    if (x.size() != y.size()) throw SeparationError("separation needs equal-length words");
    const std::size_t d = bounded_edit_distance(x, y, opts.max_cost);
    if (d > opts.max_cost) {
        throw SeparationError("no del/sub relation within " + std::to_string(opts.max_cost) + " edits");
    }
    return separate_errors(pad(x), pad(y), padded_alignment(x, y), k, opts);
}

Separation separate_errors(const BitWord& x_padded, const BitWord& y_padded, const Alignment& a, std::size_t k,
                           SeparationOptions opts) {
    if (k < 1) throw std::invalid_argument("separation distance must be at least 1");
    if (x_padded.size() != y_padded.size()) throw SeparationError("separation needs equal-length words");
    validate_alignment(x_padded, y_padded, a);
    const std::size_t budget = opts.round_budget ? opts.round_budget : 4 * k;

    Separation out{x_padded, y_padded, a, {}, {}};
    while (true) {
        out.errors = error_sites(out.alignment);
        const auto& e = out.errors;
        auto too_close = [&](std::size_t t) {
            return static_cast<long long>(e[t + 1].position) - static_cast<long long>(e[t].position) <
                   static_cast<long long>(k);
        };
        // Clusters first: a deficient gap with a matched pair strictly inside
        // is cut at the leftmost such pair.
        std::optional<Cut> cut;
        for (std::size_t t = 0; t + 1 < e.size() && !cut; ++t) {
            if (!too_close(t)) continue;
            for (std::size_t op = e[t].op_index + 1; op < e[t + 1].op_index; ++op) {
                if (is_matched(out.alignment.ops[op].kind)) {
                    cut = Cut{out.alignment.ops[op].u, out.alignment.ops[op].v};
                    break;
                }
            }
        }
        // Adjacent errors: cut the boundary right after the first one.
        for (std::size_t t = 0; t + 1 < e.size() && !cut; ++t) {
            if (too_close(t)) cut = consumed_before(out.alignment, e[t].op_index + 1);
        }
        if (!cut) return out;
        if (out.rounds.size() == budget) {
            throw SeparationError("errors still closer than " + std::to_string(k) + " after " + std::to_string(budget) +
                                  " segmentation rounds");
        }
        SegmentRound round = segment_once(out.u, out.v, out.alignment, *cut);
        out.u = round.x;
        out.v = round.y;
        out.alignment = round.alignment;
        out.rounds.push_back(std::move(round));
    }
}

bool is_subsequence(const Profile& part, const Profile& whole) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < whole.size() && i < part.size(); ++j) {
        if (whole[j] == part[i]) ++i;
    }
    return i == part.size();
}

SigmaSweep sigma_bound_sweep(std::uint32_t n, std::size_t k) {
    if (n < kMinCodeLength || n > 16) throw std::invalid_argument("sigma sweep supports 7 <= n <= 16");
    SigmaSweep out;
    out.n = n;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<BitWord> words;
    std::vector<Profile> profiles;
    std::vector<ProfileMoments> moments;
    for (std::uint64_t v = 0; v < total; ++v) {
        words.push_back(BitWord::from_integer(v, n));
        profiles.push_back(adjacency_profile(pad(words.back())));
        moments.push_back(profile_moments(words.back()));
    }
    for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = a + 1; b < total; ++b) {
            if (moments[a].f != moments[b].f) continue;
            if (bounded_edit_distance(words[a], words[b], 4) > 4) continue;
            ++out.pairs;
            const Profile diff = profile_difference(profiles[a], profiles[b]);
            const std::size_t sigma = sign_preserving_number(diff);
            out.max_sigma = std::max(out.max_sigma, sigma);
            if (sigma <= 3) ++out.sigma_at_most_3;
            if (moments[a] == moments[b]) ++out.moment_collisions;

            const Separation sep = separate_errors(words[a], words[b], k);
            const Profile sep_diff = profile_difference(adjacency_profile(sep.u), adjacency_profile(sep.v));
            if (sign_preserving_number(sep_diff) < sigma) ++out.sigma_drops;
            const auto fu = static_cast<long long>(adjacency_count(sep.u));
            const auto fv = static_cast<long long>(adjacency_count(sep.v));
            if (fu - fv != moments[a].f - moments[b].f) ++out.f_mismatches;
        }
    }
    return out;
}

}  // namespace pairvt
