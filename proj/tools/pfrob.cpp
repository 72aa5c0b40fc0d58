// Command-line front end: pfrob <subcommand> [options]
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pfrob/apery.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/error.hpp"
#include "pfrob/harness.hpp"
#include "pfrob/triangular.hpp"

namespace {

using pfrob::Errc;
using pfrob::Error;
using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};

Range parse_range(const std::string& text) {
    auto bad = [&] { return Error(Errc::domain_error, "bad range '" + text + "', expected lo..hi"); };
    auto parse = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse(text);
        return {v, v};
    }
    Range r{parse(std::string_view(text).substr(0, dots)),
            parse(std::string_view(text).substr(dots + 2))};
    if (r.hi < r.lo) throw Error(Errc::domain_error, "empty range '" + text + "'");
    return r;
}

// Generator input: --gens a,b,c or --triangular n.
struct Input {
    std::vector<std::int64_t> gens;
    std::optional<std::int64_t> triangular;

    void attach(CLI::App* cmd, bool allow_triangular) {
        auto* g = cmd->add_option("--gens", gens, "comma-separated generators")->delimiter(',');
        if (allow_triangular) {
            auto* t = cmd->add_option("--triangular", triangular,
                                      "index n; uses (t_n, t_{n+1}, t_{n+2})");
            g->excludes(t);
            t->excludes(g);
        } else {
            g->required();
        }
    }

    pfrob::GeneratorSet resolve() const {
        if (triangular) return pfrob::triangular_triple(*triangular);
        if (gens.empty()) throw Error(Errc::empty_input, "one of --gens or --triangular is required");
        return pfrob::GeneratorSet::normalize(gens);
    }
};

struct Output {
    std::string format = "plain";
    std::string path;

    void attach(CLI::App* cmd, std::vector<std::string> formats, std::string fallback) {
        format = fallback;
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(std::move(formats)));
        cmd->add_option("--out", path, "output file (default: stdout)");
    }
};

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(Errc::domain_error, "cannot open '" + path + "' for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

using Record = std::vector<std::pair<std::string, ojson>>;

std::string plain_value(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + plain_value(x);
        return s;
    }
    return v.dump();
}

void emit_record(const Record& rec, const Output& out) {
    Sink sink(out.path);
    auto& os = sink.os();
    if (out.format == "json") {
        ojson j = ojson::object();
        for (const auto& [k, v] : rec) j[k] = v;
        os << j.dump() << '\n';
    } else if (out.format == "csv") {
        for (std::size_t i = 0; i < rec.size(); ++i) os << (i ? "," : "") << rec[i].first;
        os << '\n';
        for (std::size_t i = 0; i < rec.size(); ++i) {
            auto v = plain_value(rec[i].second);
            if (v.find(',') != std::string::npos) v = '"' + v + '"';
            os << (i ? "," : "") << v;
        }
        os << '\n';
    } else {
        for (const auto& [k, v] : rec) os << k << '=' << plain_value(v) << '\n';
    }
}

ojson big_to_json(const pfrob::BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return pfrob::to_int64(v);
    return pfrob::to_string(v);
}

ojson gens_json(const pfrob::GeneratorSet& A) {
    return ojson(std::vector<std::int64_t>(A.gens().begin(), A.gens().end()));
}

std::string rep_text(const pfrob::Representation& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.coeffs[i]);
    return s + ")";
}

void print_representations(const pfrob::GeneratorSet& A, std::int64_t n, std::size_t limit) {
    auto reps = pfrob::enumerate_representations(A, n, limit);
    for (const auto& r : reps.items) std::cout << rep_text(r) << '\n';
    if (reps.truncated) std::cout << "... (truncated at " << limit << ")\n";
}

std::int64_t formula_value(const std::string& name, std::int64_t n, std::int64_t p, std::int64_t a,
                           std::int64_t b) {
    using namespace pfrob;
    if (name == "g0") return g_p0(n);
    if (name == "g1") return g_p1(n);
    if (name == "g2") return g_p2(n);
    if (name == "g3-10") {
        auto v = g_p3_to_10(n, p);
        if (!v) throw Error(Errc::domain_error, "(n, p) outside the validity set");
        return *v;
    }
    if (name == "two-var-g") return two_var_g(a, b, p);
    if (name == "two-var-n") return two_var_n(a, b, p);
    if (name == "two-var-s") return two_var_s(a, b, p);
    throw Error(Errc::domain_error, "unknown formula '" + name + "'");
}

Record tuple_record(const pfrob::PropTuple& t) {
    return {{"level", t.p_index}, {"g", t.g}, {"n", t.n_count}, {"s", t.s_sum}, {"m", t.m_values}};
}

int run(int argc, char** argv) {
    CLI::App app{"p-Frobenius numbers, p-Apéry sets and closed-form checks"};
    app.require_subcommand(1);

    // denumerant
    Input den_in;
    std::int64_t den_n = 0;
    bool den_verbose = false;
    auto* den = app.add_subcommand("denumerant", "number of representations d(n; A)");
    den_in.attach(den, true);
    den->add_option("--n", den_n, "target")->required();
    den->add_flag("--verbose,-v", den_verbose, "also list the representations");

    // representations
    Input rep_in;
    std::int64_t rep_n = 0;
    std::size_t rep_limit = 1000;
    auto* rep = app.add_subcommand("representations", "list representations of n");
    rep_in.attach(rep, true);
    rep->add_option("--n", rep_n, "target")->required();
    rep->add_option("--limit", rep_limit, "stop after this many")->check(CLI::PositiveNumber);

    // apery
    Input ap_in;
    std::int64_t ap_p = 0;
    auto* ap = app.add_subcommand("apery", "p-Apery set, one residue per line");
    ap_in.attach(ap, true);
    ap->add_option("--p", ap_p, "level")->required();

    // pfrobenius
    Input pf_in;
    std::int64_t pf_p = 0;
    std::vector<int> pf_mu;
    bool pf_positive = false;
    Output pf_out;
    auto* pf = app.add_subcommand("pfrobenius", "g(A;p), n(A;p), s(A;p)");
    pf_in.attach(pf, true);
    pf->add_option("--p", pf_p, "level")->required();
    pf->add_option("--mu", pf_mu, "extra power sums")->delimiter(',');
    pf->add_flag("--positive", pf_positive, "count positive integers only");
    pf_out.attach(pf, {"plain", "json", "csv"}, "plain");

    // powersum
    Input ps_in;
    std::int64_t ps_p = 0;
    int ps_mu = 0;
    auto* ps = app.add_subcommand("powersum", "sum of n^mu over n with d(n) <= p");
    ps_in.attach(ps, true);
    ps->add_option("--p", ps_p, "level")->required();
    ps->add_option("--mu", ps_mu, "exponent")->required()->check(CLI::NonNegativeNumber);

    // formula
    std::string fm_name;
    std::int64_t fm_n = 0, fm_p = 0, fm_j = 0, fm_a = 0, fm_b = 0;
    Output fm_out;
    auto* fm = app.add_subcommand("formula", "evaluate a closed form");
    fm->add_option("name", fm_name,
                   "g0 g1 g2 g3-10 thm1 prop1 prop2 prop3-re prop3-ro prop3-roo "
                   "two-var-g two-var-n two-var-s")
        ->required();
    fm->add_option("--n", fm_n);
    fm->add_option("--p", fm_p);
    fm->add_option("--j", fm_j);
    fm->add_option("--a", fm_a);
    fm->add_option("--b", fm_b);
    fm_out.attach(fm, {"plain", "json", "csv"}, "plain");

    // table
    std::string tb_nr, tb_pr = "0";
    Output tb_out;
    auto* tb = app.add_subcommand("table", "grid of g(t_n, t_{n+1}, t_{n+2}; p)");
    tb->add_option("--triangular-range", tb_nr, "n range lo..hi")->required();
    tb->add_option("--p-range", tb_pr, "p range lo..hi");
    tb_out.attach(tb, {"plain", "json", "csv"}, "csv");

    // verify
    std::string vf_suite = "all";
    bool vf_probe = false, vf_timing = false;
    Output vf_out;
    auto* vf = app.add_subcommand("verify", "check closed forms against engine and oracle");
    vf->add_option("--suite", vf_suite, "claim id prefix, or all");
    vf->add_flag("--probe", vf_probe, "evaluate skipped instances with the engine");
    vf->add_flag("--timing", vf_timing, "record per-instance milliseconds");
    vf_out.attach(vf, {"plain", "jsonl", "csv"}, "plain");

    // conjecture-scan
    std::string cs_nr = "2..30";
    std::int64_t cs_pmax = 4;
    Output cs_out;
    auto* cs = app.add_subcommand("conjecture-scan", "fit g = (q n + c)(n+1)(n+2)/4 - 1 per parity");
    cs->add_option("--n-range", cs_nr, "n range lo..hi");
    cs->add_option("--p-max", cs_pmax, "largest p");
    cs_out.attach(cs, {"plain", "json", "csv"}, "plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    if (den->parsed()) {
        auto A = den_in.resolve();
        std::cout << pfrob::denumerant(A, den_n) << '\n';
        if (den_verbose) print_representations(A, den_n, SIZE_MAX);
        return kOk;
    }
    if (rep->parsed()) {
        print_representations(rep_in.resolve(), rep_n, rep_limit);
        return kOk;
    }
    if (ap->parsed()) {
        auto set = pfrob::p_apery_set(ap_in.resolve(), ap_p);
        for (std::size_t i = 0; i < set.m.size(); ++i) std::cout << i << ": " << set.m[i] << '\n';
        return kOk;
    }
    if (pf->parsed()) {
        auto A = pf_in.resolve();
        auto domain = pf_positive ? pfrob::CountDomain::positive : pfrob::CountDomain::nonnegative;
        auto sum = pfrob::p_frobenius_summary(A, pf_p, pf_mu, domain);
        Record rec{{"gens", gens_json(A)}, {"p", pf_p}, {"g", sum.g}, {"n", sum.n_count}, {"s", sum.s_sum}};
        for (const auto& [mu, v] : sum.power_sums) rec.emplace_back("s_" + std::to_string(mu), big_to_json(v));
        emit_record(rec, pf_out);
        return kOk;
    }
    if (ps->parsed()) {
        std::cout << pfrob::to_string(pfrob::p_power_sum(ps_in.resolve(), ps_p, ps_mu)) << '\n';
        return kOk;
    }
    if (fm->parsed()) {
        Record rec{{"formula", fm_name}};
        if (fm_name == "thm1") {
            auto pt = pfrob::theorem1_point(fm_n, fm_p);
            rec.insert(rec.end(), {{"n", fm_n}, {"p", fm_p}, {"level", pt.p_index}, {"g", pt.g_value}});
        } else if (fm_name == "prop1") {
            auto t = tuple_record(pfrob::prop1_t345(fm_p));
            rec.emplace_back("p", fm_p);
            rec.insert(rec.end(), t.begin(), t.end());
        } else if (fm_name == "prop2" || fm_name.starts_with("prop3-")) {
            pfrob::PropTuple tuple;
            if (fm_name == "prop2") {
                tuple = pfrob::prop2_t234(fm_n, fm_j);
            } else {
                auto c = fm_name == "prop3-re"   ? pfrob::Prop3Case::even
                         : fm_name == "prop3-ro" ? pfrob::Prop3Case::odd
                         : fm_name == "prop3-roo"
                             ? pfrob::Prop3Case::odd_low
                             : throw Error(Errc::domain_error, "unknown formula '" + fm_name + "'");
                if (!pfrob::prop3_valid(fm_n, fm_j, c))
                    throw Error(Errc::domain_error, "(n, j) outside the validity set");
                tuple = pfrob::prop3_t456(fm_n, fm_j, c);
            }
            auto t = tuple_record(tuple);
            rec.insert(rec.end(), {{"n", fm_n}, {"j", fm_j}});
            rec.insert(rec.end(), t.begin(), t.end());
        } else {
            auto v = formula_value(fm_name, fm_n, fm_p, fm_a, fm_b);
            if (fm_name.starts_with("two-var"))
                rec.insert(rec.end(), {{"a", fm_a}, {"b", fm_b}, {"p", fm_p}});
            else
                rec.insert(rec.end(), {{"n", fm_n}, {"p", fm_p}});
            rec.emplace_back("value", v);
        }
        emit_record(rec, fm_out);
        return kOk;
    }
    if (tb->parsed()) {
        auto nr = parse_range(tb_nr), pr = parse_range(tb_pr);
        if (nr.lo < 1 || pr.lo < 0) throw Error(Errc::domain_error, "ranges need n >= 1 and p >= 0");
        std::vector<std::vector<std::int64_t>> grid;
        for (auto p = pr.lo; p <= pr.hi; ++p) {
            auto& row = grid.emplace_back();
            for (auto n = nr.lo; n <= nr.hi; ++n)
                row.push_back(pfrob::p_frobenius(pfrob::triangular_triple(n), p));
        }
        Sink sink(tb_out.path);
        auto& os = sink.os();
        if (tb_out.format == "json") {
            ojson j;
            std::vector<std::int64_t> ns;
            for (auto n = nr.lo; n <= nr.hi; ++n) ns.push_back(n);
            j["n"] = ns;
            j["rows"] = ojson::array();
            for (std::size_t r = 0; r < grid.size(); ++r)
                j["rows"].push_back(ojson{{"p", pr.lo + static_cast<std::int64_t>(r)}, {"g", grid[r]}});
            os << j.dump() << '\n';
        } else if (tb_out.format == "csv") {
            os << "p";
            for (auto n = nr.lo; n <= nr.hi; ++n) os << ",n=" << n;
            os << '\n';
            for (std::size_t r = 0; r < grid.size(); ++r) {
                os << pr.lo + static_cast<std::int64_t>(r);
                for (auto g : grid[r]) os << ',' << g;
                os << '\n';
            }
        } else {
            for (std::size_t r = 0; r < grid.size(); ++r) {
                os << "p=" << pr.lo + static_cast<std::int64_t>(r) << ':';
                for (auto g : grid[r]) os << ' ' << g;
                os << '\n';
            }
        }
        return kOk;
    }
    if (vf->parsed()) {
        if (pfrob::harness::matching_claims(vf_suite).empty())
            throw Error(Errc::unknown_claim, "no claim matches '" + vf_suite + "'");
        Sink sink(vf_out.path);
        std::unique_ptr<pfrob::harness::ReportSink> reports;
        if (vf_out.format == "jsonl")
            reports = std::make_unique<pfrob::harness::JsonLinesSink>(sink.os(), vf_timing);
        else if (vf_out.format == "csv")
            reports = std::make_unique<pfrob::harness::CsvSink>(sink.os(), vf_timing);
        else
            reports = std::make_unique<pfrob::harness::PlainSink>(sink.os());
        auto summary = pfrob::harness::run_suite(vf_suite, reports.get(), {vf_probe});
        // Keep machine-readable stdout clean.
        auto& summary_os = sink.to_file() || vf_out.format == "plain" ? std::cout : std::cerr;
        summary_os << "pass/fail/skip = " << summary.pass << '/' << summary.fail << '/' << summary.skip;
        if (vf_timing) summary_os << " (" << static_cast<std::int64_t>(summary.ms) << " ms)";
        summary_os << '\n';
        return summary.fail == 0 ? kOk : kVerifyFailed;
    }
    if (cs->parsed()) {
        auto nr = parse_range(cs_nr);
        auto patterns = pfrob::harness::conjecture_scan(nr.lo, nr.hi, cs_pmax);
        Sink sink(cs_out.path);
        auto& os = sink.os();
        if (cs_out.format == "csv") os << "p,parity,q,offset,from_n,to_n\n";
        for (const auto& pat : patterns) {
            const char* parity = pat.parity == pfrob::harness::Parity::odd ? "odd" : "even";
            if (cs_out.format == "json") {
                os << ojson{{"p", pat.p}, {"parity", parity}, {"q", pat.q}, {"offset", pat.offset},
                            {"from_n", pat.from_n}, {"to_n", pat.to_n}}
                          .dump()
                   << '\n';
            } else if (cs_out.format == "csv") {
                os << pat.p << ',' << parity << ',' << pat.q << ',' << pat.offset << ','
                   << pat.from_n << ',' << pat.to_n << '\n';
            } else {
                os << "p=" << pat.p << ' ' << parity << " n=" << pat.from_n << ".." << pat.to_n
                   << ": g = (" << pat.q << 'n';
                if (pat.offset != 0) os << (pat.offset < 0 ? " - " : " + ") << std::abs(pat.offset);
                os << ")(n+1)(n+2)/4 - 1\n";
            }
        }
        return kOk;
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
