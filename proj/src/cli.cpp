#include "pairvt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "pairvt/analysis.hpp"
#include "pairvt/bitword.hpp"
#include "pairvt/channel.hpp"
#include "pairvt/code.hpp"
#include "pairvt/decoder.hpp"
#include "pairvt/syndrome.hpp"
#include "pairvt/verify.hpp"

namespace pairvt::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string analyze_command;
    bool machine = false;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::uint32_t enumeration_cap = kDefaultEnumerationCap;
    std::size_t round_budget = 0;

    std::uint32_t n = 0;
    std::string residues;  // "k1,k2,k3,k4"; empty selects the largest census bucket
    std::vector<std::string> words;
    std::string input_path;

    std::size_t top = 10;
    std::uint64_t index = 0;
    std::string pattern;
    std::size_t edits = 0;
    std::string mode = "buckets";

    std::vector<long long> ints;
    std::string u, v;
    std::vector<std::size_t> positions;
    std::size_t s = 0, r = 0;
    std::string cut;
    std::size_t k = 5;
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw UsageError(std::string("environment variable ") + name + " is not a number");
    }
}

BitWord parse_word(const std::string& text, const std::string& where) {
    try {
        return BitWord::from_string(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(where + ": " + e.what());
    }
}

std::vector<BitWord> read_words(const RunConfig& cfg, std::istream& in) {
    std::vector<BitWord> out;
    for (std::size_t i = 0; i < cfg.words.size(); ++i) {
        out.push_back(parse_word(cfg.words[i], "argument " + std::to_string(i + 1)));
    }
    if (!out.empty()) return out;
    std::ifstream file;
    std::istream* src = &in;
    if (!cfg.input_path.empty()) {
        file.open(cfg.input_path);
        if (!file) throw UsageError("cannot open " + cfg.input_path);
        src = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*src, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_word(line, "line " + std::to_string(line_no)));
    }
    return out;
}

json syndrome_json(const SyndromeTuple& t) {
    return json{{"n", t.n}, {"s0", t.s0}, {"s1", t.s1}, {"s2", t.s2}, {"s3", t.s3}};
}

json witness_json(const PairWitness& w) {
    return json{{"x", w.x.to_string()}, {"y", w.y.to_string()}, {"distance", w.distance},
                {"syndrome_x", syndrome_json(w.residues)}};
}

void require_n(const RunConfig& cfg) {
    if (cfg.n < kMinCodeLength) throw UsageError("--n must be at least 7");
}

CodeParams resolve_params(const RunConfig& cfg) {
    require_n(cfg);
    if (!cfg.residues.empty()) {
        try {
            return CodeParams::parse(cfg.n, cfg.residues);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--k: ") + e.what());
        }
    }
    return CodeParams(bucket_census(cfg.n, cfg.enumeration_cap, cfg.workers).best_bucket().residues);
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

class Runner {
public:
    Runner(const RunConfig& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

    int dispatch() {
        const std::string& c = cfg_.command;
        if (c == "syndrome") return syndrome();
        if (c == "check") return check();
        if (c == "enumerate") return enumerate();
        if (c == "census") return census();
        if (c == "best-params") return best_params();
        if (c == "encode") return encode();
        if (c == "rank") return rank();
        if (c == "decode") return decode_words();
        if (c == "corrupt") return corrupt();
        if (c == "verify") return verify();
        if (c == "analyze") return analyze();
        throw UsageError("no command given; see --help");
    }

private:
    void emit(const json& record) { out_ << record.dump() << '\n'; }

    int syndrome() {
        for (const auto& w : read_words(cfg_, in_)) {
            if (w.size() < kMinCodeLength) throw UsageError("word " + w.to_string() + " is shorter than 7");
            const SyndromeTuple t = syndrome_tuple(w);
            if (cfg_.machine) {
                json rec{{"record", "syndrome"}, {"word", w.to_string()}};
                rec.update(syndrome_json(t));
                emit(rec);
            } else {
                out_ << w << ' ' << t.to_key_value() << '\n';
            }
        }
        return kSuccess;
    }

    int check() {
        const CodeParams p = resolve_params(cfg_);
        bool all = true;
        for (const auto& w : read_words(cfg_, in_)) {
            if (w.size() != p.n()) throw UsageError("word " + w.to_string() + " does not have length " + std::to_string(p.n()));
            const bool member = is_codeword(w, p);
            all = all && member;
            if (cfg_.machine) emit({{"record", "check"}, {"word", w.to_string()}, {"k", p.to_string()}, {"member", member}});
            else out_ << w << (member ? " member" : " not-member") << '\n';
        }
        return all ? kSuccess : kPropertyViolated;
    }

    int enumerate() {
        const CodeParams p = resolve_params(cfg_);
        const auto words = enumerate_codewords(p, cfg_.enumeration_cap);
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (cfg_.machine) emit({{"record", "codeword"}, {"index", i}, {"word", words[i].to_string()}});
            else out_ << words[i] << '\n';
        }
        if (cfg_.machine) emit({{"record", "enumerate"}, {"n", p.n()}, {"k", p.to_string()}, {"size", words.size()}});
        return kSuccess;
    }

    int census() {
        require_n(cfg_);
        const Census c = bucket_census(cfg_.n, cfg_.enumeration_cap, cfg_.workers);
        const auto& best = c.best_bucket();
        const double red = redundancy(best.count, c.n);
        const std::uint64_t floor = pigeonhole_floor(c.n);
        if (cfg_.machine) {
            for (const auto& b : c.top(cfg_.top)) {
                json rec{{"record", "bucket"}};
                rec.update(syndrome_json(b.residues));
                rec["count"] = b.count;
                emit(rec);
            }
            emit({{"record", "census"}, {"n", c.n}, {"total", c.total}, {"buckets", c.buckets.size()},
                  {"max_count", best.count}, {"pigeonhole_floor", floor}, {"redundancy", red},
                  {"redundancy_bound", redundancy_bound(c.n)}});
        } else {
            out_ << "n=" << c.n << " total=" << c.total << " buckets=" << c.buckets.size() << '\n';
            for (const auto& b : c.top(cfg_.top)) out_ << b.residues.to_key_value() << " count=" << b.count << '\n';
            out_ << "max_count=" << best.count << " pigeonhole_floor=" << floor << '\n';
            out_ << "redundancy=" << format_double(red) << " bound=" << format_double(redundancy_bound(c.n)) << '\n';
        }
        return best.count >= floor ? kSuccess : kPropertyViolated;
    }

    int best_params() {
        require_n(cfg_);
        const Census c = bucket_census(cfg_.n, cfg_.enumeration_cap, cfg_.workers);
        const auto& best = c.best_bucket();
        const CodeParams p(best.residues);
        const double red = redundancy(best.count, c.n);
        if (cfg_.machine) {
            emit({{"record", "best-params"}, {"n", c.n}, {"k", p.to_string()}, {"size", best.count},
                  {"redundancy", red}, {"redundancy_bound", redundancy_bound(c.n)}});
        } else {
            out_ << "n=" << c.n << " k=" << p.to_string() << " size=" << best.count
                 << " redundancy=" << format_double(red) << " bound=" << format_double(redundancy_bound(c.n)) << '\n';
        }
        return kSuccess;
    }

    int encode() {
        const Codebook book(resolve_params(cfg_), cfg_.enumeration_cap);
        if (cfg_.index >= book.size()) {
            throw UsageError("--index " + std::to_string(cfg_.index) + " out of range; code size is " +
                             std::to_string(book.size()));
        }
        const BitWord& w = book.encode(cfg_.index);
        if (cfg_.machine) emit({{"record", "encode"}, {"index", cfg_.index}, {"word", w.to_string()}});
        else out_ << w << '\n';
        return kSuccess;
    }

    int rank() {
        const Codebook book(resolve_params(cfg_), cfg_.enumeration_cap);
        int status = kSuccess;
        for (const auto& w : read_words(cfg_, in_)) {
            if (w.size() != book.params().n() || !is_codeword(w, book.params())) {
                status = kPropertyViolated;
                if (cfg_.machine) emit({{"record", "rank"}, {"word", w.to_string()}, {"error", "NotCodeword"}});
                else out_ << w << " error=NotCodeword\n";
                continue;
            }
            const auto idx = book.rank(w);
            if (cfg_.machine) emit({{"record", "rank"}, {"word", w.to_string()}, {"index", idx}});
            else out_ << idx << '\n';
        }
        return status;
    }

    int decode_words() {
        const CodeParams p = resolve_params(cfg_);
        int status = kSuccess;
        for (const auto& w : read_words(cfg_, in_)) {
            const auto diff = static_cast<long long>(w.size()) - static_cast<long long>(p.n());
            if (diff < -2 || diff > 2) {
                throw UsageError("received word " + w.to_string() + " is not within two symbols of length " +
                                 std::to_string(p.n()));
            }
            const DecodeResult res = decode(w, p);
            if (!res.ok()) status = kPropertyViolated;
            if (cfg_.machine) {
                json rec{{"record", "decode"}, {"received", w.to_string()}, {"n", p.n()}, {"k", p.to_string()},
                         {"status", to_string(res.status)}};
                if (res.ok()) rec["codeword"] = res.codeword->to_string();
                json matches = json::array();
                for (const auto& m : res.matches) matches.push_back(m.to_string());
                if (!res.ok()) rec["matches"] = matches;
                emit(rec);
            } else if (res.ok()) {
                out_ << *res.codeword << '\n';
            } else {
                out_ << "error=" << to_string(res.status) << " received=" << w << " n=" << p.n() << " k=" << p.to_string();
                for (const auto& m : res.matches) out_ << " match=" << m;
                out_ << '\n';
            }
        }
        return status;
    }

    int corrupt() {
        std::mt19937_64 rng(cfg_.seed);
        for (const auto& w : read_words(cfg_, in_)) {
            ErrorPattern pat;
            if (!cfg_.pattern.empty()) {
                try {
                    pat = ErrorPattern::parse(cfg_.pattern);
                    pat.validate(w.size());
                } catch (const std::invalid_argument& e) {
                    throw UsageError(std::string("--pattern: ") + e.what());
                }
            } else {
                if (cfg_.edits > kMaxBallEdits) throw UsageError("--edits must be at most 4");
                pat = random_pattern(w.size(), cfg_.edits, rng);
            }
            const BitWord received = apply_errors(w, pat);
            if (cfg_.machine) {
                emit({{"record", "corrupt"}, {"word", w.to_string()}, {"pattern", pat.to_string()},
                      {"received", received.to_string()}});
            } else {
                out_ << received << '\n';
            }
        }
        return kSuccess;
    }

    int verify() {
        require_n(cfg_);
        if (cfg_.mode == "buckets") {
            const auto res = verify_bucket_distances(cfg_.n, cfg_.workers, cfg_.enumeration_cap);
            if (cfg_.machine) {
                json rec{{"record", "verify"}, {"mode", "buckets"}, {"n", res.n}, {"buckets", res.buckets},
                         {"pairs_checked", res.pairs_checked}, {"violations", res.violations}, {"ok", res.ok()}};
                if (res.first_violation) rec["witness"] = witness_json(*res.first_violation);
                emit(rec);
            } else {
                out_ << "mode=buckets n=" << res.n << " buckets=" << res.buckets << " pairs_checked=" << res.pairs_checked
                     << " violations=" << res.violations << (res.ok() ? " ok" : " FAILED") << '\n';
                if (const auto& w = res.first_violation) {
                    out_ << "witness x=" << w->x << " y=" << w->y << " distance=" << w->distance << ' '
                         << w->residues.to_key_value() << '\n';
                }
            }
            return res.ok() ? kSuccess : kPropertyViolated;
        }
        if (cfg_.mode == "thm31" || cfg_.mode == "hamming") {
            const auto scope = cfg_.mode == "thm31" ? SweepScope::AllPairs : SweepScope::HammingWithin4;
            const auto res = sweep_moment_conditions(cfg_.n, cfg_.workers, scope, cfg_.enumeration_cap);
            if (cfg_.machine) {
                json rec{{"record", "verify"}, {"mode", cfg_.mode}, {"n", res.n}, {"pairs_examined", res.pairs_examined},
                         {"close_pairs", res.close_pairs}, {"violations", res.violations}, {"ok", res.ok()}};
                if (res.first_violation) rec["witness"] = witness_json(*res.first_violation);
                emit(rec);
            } else {
                out_ << "mode=" << cfg_.mode << " n=" << res.n << " pairs_examined=" << res.pairs_examined
                     << " close_pairs=" << res.close_pairs << " violations=" << res.violations
                     << (res.ok() ? " ok" : " FAILED") << '\n';
                if (const auto& w = res.first_violation) {
                    out_ << "witness x=" << w->x << " y=" << w->y << " distance=" << w->distance << '\n';
                }
            }
            return res.ok() ? kSuccess : kPropertyViolated;
        }
        throw UsageError("--mode must be buckets, thm31 or hamming");
    }

    int analyze() {
        const std::string& c = cfg_.analyze_command;
        if (c == "sigma") return analyze_sigma();
        if (c == "classify") return analyze_classify();
        if (c == "segment") return analyze_segment();
        if (c == "separate") return analyze_separate();
        throw UsageError("analyze needs one of: sigma, classify, segment, separate");
    }

    int analyze_sigma() {
        if (cfg_.ints.empty()) throw UsageError("analyze sigma needs at least one integer");
        const Profile z(cfg_.ints.begin(), cfg_.ints.end());
        const std::size_t sigma = sign_preserving_number(z);
        const bool lemma = zero_syndrome_forces_zero(z);
        if (cfg_.machine) {
            emit({{"record", "sigma"}, {"z", z}, {"sigma", sigma}, {"vt0", vt_moment(z, 0)}, {"vt1", vt_moment(z, 1)},
                  {"vt2", vt_moment(z, 2)}, {"zero_syndrome_lemma", lemma}});
        } else {
            out_ << "z=" << profile_to_string(z) << " sigma=" << sigma << " vt0=" << vt_moment(z, 0)
                 << " vt1=" << vt_moment(z, 1) << " vt2=" << vt_moment(z, 2)
                 << " zero_syndrome_lemma=" << (lemma ? "holds" : "VIOLATED") << '\n';
        }
        return lemma ? kSuccess : kPropertyViolated;
    }

    Alignment alignment_for(const BitWord& u, const BitWord& v) const {
        if (cfg_.positions.empty()) {
            if (u.size() < 2 || u[0] != 0 || v[0] != 0 || u[u.size() - 1] != 0 || v[v.size() - 1] != 0) {
                throw UsageError("without --positions both words must be padded (start and end with 0)");
            }
            return padded_alignment(u.slice(1, u.size() - 2), v.slice(1, v.size() - 2));
        }
        try {
            return alignment_from_positions(u, v, cfg_.positions, cfg_.s, cfg_.r);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--positions: ") + e.what());
        }
    }

    int analyze_classify() {
        const BitWord u = parse_word(cfg_.u, "--u"), v = parse_word(cfg_.v, "--v");
        if (u.size() != v.size()) throw UsageError("--u and --v must have equal length");
        const Alignment a = alignment_for(u, v);
        PairType t;
        try {
            t = pair_type(u, v, a);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const bool good = cfg_.positions.empty() || is_good_pair(u, v, cfg_.positions, cfg_.s, cfg_.r);
        long long sum = 0;
        for (int val : t.values) sum += val;
        const long long fdiff = static_cast<long long>(adjacency_count(u)) - static_cast<long long>(adjacency_count(v));
        if (cfg_.machine) {
            json errs = json::array();
            for (std::size_t i = 0; i < t.types.size(); ++i) {
                errs.push_back({{"position", t.positions[i]}, {"kind", to_string(t.types[i])}, {"value", t.values[i]}});
            }
            emit({{"record", "classify"}, {"u", cfg_.u}, {"v", cfg_.v}, {"good_pair", good}, {"errors", errs},
                  {"type", t.types_string()}, {"type_value", t.values_string()}, {"value_sum", sum}, {"f_difference", fdiff}});
        } else {
            for (std::size_t i = 0; i < t.types.size(); ++i) {
                out_ << "position=" << t.positions[i] << " kind=" << to_string(t.types[i]) << " value=" << t.values[i] << '\n';
            }
            out_ << "type=" << t.types_string() << " type_value=" << t.values_string() << " value_sum=" << sum
                 << " f_difference=" << fdiff << (good ? "" : " not-good-pair") << '\n';
        }
        return good && sum == fdiff ? kSuccess : kPropertyViolated;
    }

    int analyze_segment() {
        const BitWord x = parse_word(cfg_.u, "--x"), y = parse_word(cfg_.v, "--y");
        if (x.size() != y.size()) throw UsageError("--x and --y must have equal length");
        const auto comma = cfg_.cut.find(',');
        if (comma == std::string::npos) throw UsageError("--cut must be i,j");
        Cut cut{};
        try {
            cut = {std::stoul(cfg_.cut.substr(0, comma)), std::stoul(cfg_.cut.substr(comma + 1))};
        } catch (const std::exception&) {
            throw UsageError("--cut must be i,j");
        }
        SegmentRound round;
        try {
            round = segment_once(x, y, alignment_for(x, y), cut);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const Profile before = profile_difference(adjacency_profile(x), adjacency_profile(y));
        const Profile after = profile_difference(adjacency_profile(round.x), adjacency_profile(round.y));
        const bool f_kept = before.back() == after.back();
        const bool subseq = is_subsequence(before, after);
        if (cfg_.machine) {
            emit({{"record", "segment"}, {"x", x.to_string()}, {"y", y.to_string()}, {"cut", {cut.i, cut.j}},
                  {"filler", round.filler.to_string()}, {"x_out", round.x.to_string()}, {"y_out", round.y.to_string()},
                  {"f_difference_preserved", f_kept}, {"profile_subsequence", subseq}});
        } else {
            out_ << "filler=" << round.filler << " x'=" << round.x << " y'=" << round.y
                 << " f_difference_preserved=" << (f_kept ? "yes" : "no")
                 << " profile_subsequence=" << (subseq ? "yes" : "no") << '\n';
        }
        return f_kept && subseq ? kSuccess : kPropertyViolated;
    }

    int analyze_separate() {
        const BitWord x = parse_word(cfg_.u, "--x"), y = parse_word(cfg_.v, "--y");
        if (x.size() != y.size()) throw UsageError("--x and --y must have equal length");
        SeparationOptions opts;
        opts.round_budget = cfg_.round_budget;
        Separation sep;
        try {
            sep = separate_errors(x, y, cfg_.k, opts);
        } catch (const SeparationError& e) {
            if (cfg_.machine) emit({{"record", "separate"}, {"x", x.to_string()}, {"y", y.to_string()}, {"error", e.what()}});
            else out_ << "error=" << e.what() << '\n';
            return kPropertyViolated;
        }
        const auto sx = sign_preserving_number(profile_difference(adjacency_profile(pad(x)), adjacency_profile(pad(y))));
        const auto su = sign_preserving_number(profile_difference(adjacency_profile(sep.u), adjacency_profile(sep.v)));
        const auto positions = good_pair_positions(sep.alignment);
        if (cfg_.machine) {
            json rounds = json::array();
            for (const auto& r : sep.rounds) {
                rounds.push_back({{"cut", {r.cut.i, r.cut.j}}, {"filler", r.filler.to_string()}, {"x", r.x.to_string()},
                                  {"y", r.y.to_string()}});
            }
            emit({{"record", "separate"}, {"x", x.to_string()}, {"y", y.to_string()}, {"k", cfg_.k},
                  {"u", sep.u.to_string()}, {"v", sep.v.to_string()}, {"positions", positions},
                  {"s", sep.alignment.count(AlignOpKind::DeleteU)}, {"sigma_before", sx}, {"sigma_after", su},
                  {"rounds", rounds}});
        } else {
            for (const auto& r : sep.rounds) {
                out_ << "round cut=" << r.cut.i << ',' << r.cut.j << " filler=" << r.filler << " x=" << r.x
                     << " y=" << r.y << '\n';
            }
            out_ << "u=" << sep.u << " v=" << sep.v << " positions=";
            for (std::size_t i = 0; i < positions.size(); ++i) out_ << (i ? "," : "") << positions[i];
            out_ << " sigma_before=" << sx << " sigma_after=" << su << '\n';
        }
        return su >= sx ? kSuccess : kPropertyViolated;
    }

    const RunConfig& cfg_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"pairvt: two-edit correcting codes from VT syndromes of adjacent-pair profiles", "pairvt"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");
    app.add_flag("--machine", cfg.machine, "One JSON record per line");
    app.add_option("--workers", cfg.workers, "Worker threads for census and verify")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized commands");
    std::optional<std::uint32_t> cap_flag;
    std::optional<std::size_t> budget_flag;
    app.add_option("--cap", cap_flag, "Enumeration cap on n (env PAIRVT_ENUM_CAP)")->check(CLI::PositiveNumber);
    app.add_option("--round-budget", budget_flag, "Segmentation round budget (env PAIRVT_ROUND_BUDGET)")
        ->check(CLI::PositiveNumber);

    auto add_n = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--n", cfg.n, "Code length (>= 7)");
        if (required) opt->required();
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.residues, "Residues k1,k2,k3,k4 (default: largest census bucket)");
    };
    auto add_words = [&](CLI::App* sub) {
        sub->add_option("words", cfg.words, "Binary words (default: one per line from --input or stdin)");
        sub->add_option("--input", cfg.input_path, "File with one word per line");
    };

    auto* syn = app.add_subcommand("syndrome", "Syndrome tuple of each word");
    add_words(syn);
    auto* chk = app.add_subcommand("check", "Code membership");
    add_n(chk, true), add_k(chk), add_words(chk);
    auto* en = app.add_subcommand("enumerate", "List all codewords in lexicographic order");
    add_n(en, true), add_k(en);
    auto* cen = app.add_subcommand("census", "Syndrome class sizes over all words of length n");
    add_n(cen, true);
    cen->add_option("--top", cfg.top, "Number of largest buckets to print");
    auto* best = app.add_subcommand("best-params", "Residues of the largest code at length n");
    add_n(best, true);
    auto* enc = app.add_subcommand("encode", "Message index to codeword");
    add_n(enc, true), add_k(enc);
    enc->add_option("--index", cfg.index, "Message index")->required();
    auto* rk = app.add_subcommand("rank", "Codeword to message index");
    add_n(rk, true), add_k(rk), add_words(rk);
    auto* dec = app.add_subcommand("decode", "Correct up to two insertions, deletions or substitutions");
    add_n(dec, true), add_k(dec), add_words(dec);
    auto* cor = app.add_subcommand("corrupt", "Apply an error pattern");
    add_words(cor);
    cor->add_option("--pattern", cfg.pattern, "Edits, e.g. sub@4=1,del@2,ins@0=1");
    cor->add_option("--edits", cfg.edits, "Number of random edits (seeded)");
    auto* ver = app.add_subcommand("verify", "Exhaustive distance verification");
    add_n(ver, true);
    ver->add_option("--mode", cfg.mode, "buckets | thm31 | hamming");

    auto* ana = app.add_subcommand("analyze", "Error classification and segmentation");
    ana->require_subcommand(1);
    auto* sig = ana->add_subcommand("sigma", "Sign-preserving number of an integer sequence");
    sig->add_option("values", cfg.ints, "Integers")->required()->allow_extra_args();
    auto* cls = ana->add_subcommand("classify", "Type and type value of each error");
    cls->add_option("--u", cfg.u)->required();
    cls->add_option("--v", cfg.v)->required();
    auto* seg = ana->add_subcommand("segment", "One segmentation round at a cut");
    seg->add_option("--x", cfg.u)->required();
    seg->add_option("--y", cfg.v)->required();
    seg->add_option("--cut", cfg.cut, "i,j")->required();
    for (auto* sub : {cls, seg}) {
        sub->add_option("--positions", cfg.positions, "2s+2r positions: U deletions, U substitutions, V deletions")
            ->delimiter(',');
        sub->add_option("--s", cfg.s, "Deletions per side");
        sub->add_option("--r", cfg.r, "Substitution pairs");
    }
    auto* sepc = ana->add_subcommand("separate", "Segment until errors are k apart");
    sepc->add_option("--x", cfg.u)->required();
    sepc->add_option("--y", cfg.v)->required();
    sepc->add_option("--k", cfg.k, "Required pairwise distance")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        for (auto* inner : sub->get_subcommands()) cfg.analyze_command = inner->get_name();
    }

    try {
        cfg.enumeration_cap = cap_flag ? *cap_flag
                                       : static_cast<std::uint32_t>(env_or("PAIRVT_ENUM_CAP", kDefaultEnumerationCap));
        cfg.round_budget = budget_flag ? *budget_flag : static_cast<std::size_t>(env_or("PAIRVT_ROUND_BUDGET", 0));
        if (cfg.enumeration_cap == 0) throw UsageError("enumeration cap must be positive");
        Runner runner(cfg, in, out);
        return runner.dispatch();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ResourceLimitError& e) {
        err << "resource cap exceeded: " << e.what() << '\n';
        return kResourceCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace pairvt::cli
