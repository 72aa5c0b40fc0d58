#include "pfrob/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <ostream>

#include "json.hpp"

#include "pfrob/apery.hpp"
#include "pfrob/denumerant.hpp"
#include "pfrob/error.hpp"
#include "pfrob/oracle.hpp"
#include "pfrob/triangular.hpp"

namespace pfrob::harness {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

namespace {

const std::int64_t* lookup(const Values& vs, std::string_view key) {
    for (const auto& [k, v] : vs)
        if (k == key) return &v;
    return nullptr;
}

bool agree(const Values& a, const Values& b) {
    for (const auto& [k, v] : a)
        if (auto* w = lookup(b, k); w && *w != v) return false;
    return true;
}

} // namespace

Verdict judge(const ClaimReport& r) {
    for (const auto& [k, v] : r.expected)
        if (!lookup(r.engine, k)) return Verdict::fail;
    if (!agree(r.expected, r.engine)) return Verdict::fail;
    if (r.oracle && (!agree(r.expected, *r.oracle) || !agree(r.engine, *r.oracle)))
        return Verdict::fail;
    return Verdict::pass;
}

Param Param::range(std::string name, std::int64_t lo, std::int64_t hi) {
    Param p{std::move(name), {}};
    for (auto v = lo; v <= hi; ++v) p.values.push_back(v);
    return p;
}

Param Param::list(std::string name, std::vector<std::int64_t> values) {
    return Param{std::move(name), std::move(values)};
}

namespace {

struct Eval {
    Eval() = default;
    Eval(Values e, Values g, std::optional<Values> o)
        : expected(std::move(e)), engine(std::move(g)), oracle(std::move(o)) {}

    Values expected;
    Values engine;
    std::optional<Values> oracle;
    bool skipped = false;
    std::string note;
};

using Evaluator = std::function<Eval(const Values&, const VerifyOptions&)>;

std::int64_t arg(const Values& params, std::string_view key) {
    if (auto* v = lookup(params, key)) return *v;
    throw Error(Errc::domain_error, "missing claim parameter '" + std::string(key) + "'");
}

Eval skip(std::string note) {
    Eval e;
    e.skipped = true;
    e.note = std::move(note);
    return e;
}

Eval triple_g(std::int64_t n, std::int64_t p, std::int64_t expected) {
    auto T = triangular_triple(n);
    return {{{"g", expected}}, {{"g", p_frobenius(T, p)}}, Values{{"g", oracle::brute_force(T, p).g}}};
}

Eval printed_list(const std::map<std::int64_t, std::int64_t>& printed, std::int64_t n,
                  std::int64_t p) {
    auto it = printed.find(n);
    if (it == printed.end()) return skip("no printed value");
    return triple_g(n, p, it->second);
}

// g, positive-domain n, and s for a fixed generator set at one level.
Values engine_gns(const GeneratorSet& A, std::int64_t level, bool with_apery) {
    auto ap = p_apery_set(A, level);
    Values v{{"g", p_frobenius(ap)},
             {"n", p_sylvester_number(ap, CountDomain::positive)},
             {"s", p_sylvester_sum(ap)}};
    if (with_apery)
        for (std::size_t i = 0; i < ap.m.size(); ++i) v.emplace_back("m" + std::to_string(i), ap.m[i]);
    return v;
}

Values oracle_gns(const GeneratorSet& A, std::int64_t level) {
    auto b = oracle::brute_force(A, level);
    return {{"g", b.g}, {"n", b.count_pos}, {"s", b.sum}};
}

Eval prop_tuple(const GeneratorSet& A, const PropTuple& t) {
    Values expected{{"g", t.g}, {"n", t.n_count}, {"s", t.s_sum}};
    for (std::size_t i = 0; i < t.m_values.size(); ++i)
        expected.emplace_back("m" + std::to_string(i), t.m_values[i]);
    Eval e{std::move(expected), engine_gns(A, t.p_index, true), oracle_gns(A, t.p_index)};
    e.note = "level=" + std::to_string(t.p_index);
    return e;
}

Eval prop3(const Values& ps, const VerifyOptions& opts, Prop3Case c) {
    auto n = arg(ps, "n"), j = arg(ps, "j");
    static const auto A = GeneratorSet::normalize({10, 15, 21});
    if (!prop3_valid(n, j, c)) {
        auto e = skip("outside validity set");
        if (opts.probe) {
            try {
                auto level = prop3_level(n, j, c);
                if (level >= 0) {
                    e.engine = engine_gns(A, level, false);
                    e.note = "probe level=" + std::to_string(level);
                }
            } catch (const Error&) {
                e.note = "probe: level not integral";
            }
        }
        return e;
    }
    return prop_tuple(A, prop3_t456(n, j, c));
}

struct Decomposition {
    std::int64_t scale;  // h
    GeneratorSet pair;
};

Decomposition decomposition_for(std::int64_t n) {
    if (n < 2) throw Error(Errc::domain_error, "decomposition needs n >= 2");
    if (n % 2 == 0)
        return {(n + 2) / 2, GeneratorSet::normalize({n + 1, n + 3})};
    return {n + 2, GeneratorSet::normalize({(n + 1) / 2, (n + 3) / 2})};
}

std::int64_t decomposition_rhs(const DenumerantTable& pair_table, std::int64_t m,
                               std::int64_t tn) {
    std::int64_t sum = 0;
    for (std::int64_t j = 0; j * tn <= m; ++j)
        sum += static_cast<std::int64_t>(pair_table[m - j * tn]);
    return sum;
}

Eval two_var_sweep(std::int64_t p) {
    std::int64_t vs_engine = 0, vs_oracle = 0, pairs = 0;
    for (std::int64_t a = 2; a <= 40; ++a)
        for (std::int64_t b = a + 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++pairs;
            auto A = GeneratorSet::normalize({a, b});
            std::int64_t g = two_var_g(a, b, p), n = two_var_n(a, b, p), s = two_var_s(a, b, p);
            auto ap = p_apery_set(A, p);
            if (g != p_frobenius(ap) || n != p_sylvester_number(ap) || s != p_sylvester_sum(ap))
                ++vs_engine;
            auto o = oracle::brute_force(A, p);
            if (g != o.g || n != o.count || s != o.sum) ++vs_oracle;
        }
    return {{{"mismatches", 0}, {"pairs", pairs}},
            {{"mismatches", vs_engine}, {"pairs", pairs}},
            Values{{"mismatches", vs_oracle}, {"pairs", pairs}}};
}

Eval power_sum_sweep(std::int64_t mu) {
    static const std::vector<std::vector<std::int64_t>> corpus{
        {2, 3}, {3, 5}, {5, 7}, {6, 10, 15}, {3, 6, 10}, {10, 15, 21}, {4, 6, 9}, {7, 11, 13, 17}};
    std::int64_t bad = 0, cases = 0;
    for (const auto& gens : corpus) {
        auto A = GeneratorSet::normalize(gens);
        for (std::int64_t p = 0; p <= 4; ++p) {
            ++cases;
            if (p_power_sum(A, p, static_cast<int>(mu)) !=
                oracle::brute_force_power_sum(A, p, static_cast<int>(mu)))
                ++bad;
        }
    }
    return {{{"mismatches", 0}, {"cases", cases}}, {{"mismatches", bad}, {"cases", cases}}, {}};
}

struct Entry {
    Claim claim;
    Evaluator eval;
};

const std::map<std::int64_t, std::int64_t> kP0List{{2, 17}, {3, 29}, {4, 89}, {5, 125}, {6, 251}, {7, 323}};
const std::map<std::int64_t, std::int64_t> kP1List{{2, 23}, {3, 59}, {4, 119}, {5, 209}, {6, 335}, {7, 503}};
const std::map<std::int64_t, std::int64_t> kP2List{{2, 29}, {4, 149}, {5, 230}, {6, 419}, {7, 575}, {8, 899}};

struct TableRow {
    std::int64_t g, n, s;
};

// (10, 15, 21) by level.
const std::map<std::int64_t, TableRow> kT456Table{
    {0, {89, 45, 1455}},       {1, {119, 74, 3240}},      {2, {149, 104, 5925}},
    {3, {179, 134, 9510}},     {4, {194, 149, 11640}},    {5, {209, 164, 13995}},
    {6, {224, 179, 16575}},    {7, {239, 194, 19380}},    {8, {254, 209, 22410}},
    {9, {269, 224, 25665}},    {10, {284, 239, 29145}},   {11, {299, 254, 32850}},
    {13, {314, 269, 36780}},   {49, {584, 539, 145995}},  {51, {599, 554, 154200}},
    {54, {614, 569, 162630}},  {201, {1154, 1109, 615960}}, {206, {1169, 1124, 632715}},
    {212, {1184, 1139, 649695}}};

// (15, 21, 28) by level; level 15 never occurs so g_15 = g_14.
const std::vector<std::int64_t> kT567{125, 209, 230, 293, 314, 335, 377, 398, 419,
                                       440, 461, 482, 503, 524, 545, 545, 566};

std::vector<std::int64_t> keys_of(const std::map<std::int64_t, TableRow>& m) {
    std::vector<std::int64_t> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> v;
        auto add = [&v](std::string id, std::vector<Param> params, std::string desc, Evaluator ev) {
            v.push_back({Claim{std::move(id), std::move(params), std::move(desc)}, std::move(ev)});
        };

        add("p0-closed", {Param::range("n", 2, 30)},
            "g(t_n,t_{n+1},t_{n+2}) floor and parity forms vs engine",
            [](const Values& ps, const VerifyOptions&) {
                auto n = arg(ps, "n");
                return triple_g(n, 0, g_p0(n));
            });
        add("p0-list", {Param::range("n", 2, 7)}, "printed values g_0(2..7)",
            [](const Values& ps, const VerifyOptions&) { return printed_list(kP0List, arg(ps, "n"), 0); });
        add("p1-list", {Param::range("n", 2, 7)}, "printed values g_1(2..7)",
            [](const Values& ps, const VerifyOptions&) { return printed_list(kP1List, arg(ps, "n"), 1); });
        add("p2-list", {Param::list("n", {2, 4, 5, 6, 7, 8})}, "printed values g_2(n)",
            [](const Values& ps, const VerifyOptions&) { return printed_list(kP2List, arg(ps, "n"), 2); });

        add("thm1", {Param::range("n", 2, 11), Param::range("p", 0, 4)},
            "level/value pairs for general p: g(triple; P') = N' and d(N') = P'",
            [](const Values& ps, const VerifyOptions&) {
                auto n = arg(ps, "n"), p = arg(ps, "p");
                auto pt = theorem1_point(n, p);
                auto T = triangular_triple(n);
                auto d = static_cast<std::int64_t>(denumerant(T, pt.g_value));
                auto reps = enumerate_representations(T, pt.g_value, SIZE_MAX);
                Eval e{{{"g", pt.g_value}, {"level", pt.p_index}},
                       {{"g", p_frobenius(T, pt.p_index)}, {"level", d}},
                       Values{{"g", oracle::brute_force(T, pt.p_index).g},
                              {"level", static_cast<std::int64_t>(reps.items.size())}}};
                e.note = "level=" + std::to_string(pt.p_index);
                return e;
            });
        add("thm2", {Param::range("n", 2, 20)}, "g(triple; 1) = n(n+1)(n+2) - 1",
            [](const Values& ps, const VerifyOptions&) {
                auto n = arg(ps, "n");
                return triple_g(n, 1, g_p1(n));
            });
        add("thm3", {Param::range("n", 2, 16)}, "g(triple; 2), with n = 3 giving 59",
            [](const Values& ps, const VerifyOptions&) {
                auto n = arg(ps, "n");
                return triple_g(n, 2, g_p2(n));
            });
        add("thm4", {Param::range("p", 3, 10), Param::range("n", 2, 14)},
            "g(triple; p) for 3 <= p <= 10 on the stated validity sets",
            [](const Values& ps, const VerifyOptions& opts) {
                auto n = arg(ps, "n"), p = arg(ps, "p");
                auto closed = g_p3_to_10(n, p);
                if (!closed) {
                    auto e = skip("outside validity set");
                    if (opts.probe) {
                        e.engine = {{"g", p_frobenius(triangular_triple(n), p)}};
                        e.note = "probe";
                    }
                    return e;
                }
                return triple_g(n, p, *closed);
            });

        add("prop1", {Param::range("p", 1, 6)}, "(6,10,15) at level t_{p-1}",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({6, 10, 15});
                return prop_tuple(A, prop1_t345(arg(ps, "p")));
            });
        add("prop2", {Param::range("n", 0, 4), Param::range("j", 1, 5)},
            "(3,6,10) at level (n+1)(5n+2j)/2",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({3, 6, 10});
                return prop_tuple(A, prop2_t234(arg(ps, "n"), arg(ps, "j")));
            });
        add("prop3-re", {Param::range("n", 0, 5), Param::range("j", 0, 8)},
            "(10,15,21) at level r_e",
            [](const Values& ps, const VerifyOptions& o) { return prop3(ps, o, Prop3Case::even); });
        add("prop3-ro", {Param::range("n", 0, 5), Param::range("j", 0, 4)},
            "(10,15,21) at level r_o",
            [](const Values& ps, const VerifyOptions& o) { return prop3(ps, o, Prop3Case::odd); });
        add("prop3-roo", {Param::range("n", 0, 5), Param::range("j", 0, 1)},
            "(10,15,21) at level r_oo",
            [](const Values& ps, const VerifyOptions& o) { return prop3(ps, o, Prop3Case::odd_low); });

        add("remark4-table", {Param::list("p", keys_of(kT456Table))},
            "printed g_p, n_p, s_p for (10,15,21)",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({10, 15, 21});
                auto p = arg(ps, "p");
                auto it = kT456Table.find(p);
                if (it == kT456Table.end()) return skip("no printed value");
                return Eval{{{"g", it->second.g}, {"n", it->second.n}, {"s", it->second.s}},
                            engine_gns(A, p, false), oracle_gns(A, p)};
            });
        add("remark4-gaps",
            {Param::list("p", {12, 50, 52, 53, 202, 203, 204, 205, 207, 208, 209, 210, 211})},
            "printed representation counts that never occur for (10,15,21)",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({10, 15, 21});
                auto p = arg(ps, "p");
                return Eval{{{"exists", 0}},
                            {{"exists", exact_rep_frobenius(A, p).has_value() ? 1 : 0}},
                            Values{{"exists", oracle::brute_force_exact(A, p).has_value() ? 1 : 0}}};
            });
        add("remark4-plateau", {Param::range("p", 206, 211)}, "g_206 = ... = g_211 = 1169",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({10, 15, 21});
                auto p = arg(ps, "p");
                return Eval{{{"g", 1169}}, {{"g", p_frobenius(A, p)}},
                            Values{{"g", oracle::brute_force(A, p).g}}};
            });
        add("t567-list", {Param::range("p", 0, 16)}, "printed g_p for (15,21,28)",
            [](const Values& ps, const VerifyOptions&) {
                static const auto A = GeneratorSet::normalize({15, 21, 28});
                auto p = arg(ps, "p");
                Eval e{{{"g", kT567.at(static_cast<std::size_t>(p))}},
                       {{"g", p_frobenius(A, p)}},
                       Values{{"g", oracle::brute_force(A, p).g}}};
                if (p == 15) {
                    e.expected.emplace_back("exists", 0);
                    e.engine.emplace_back("exists", exact_rep_frobenius(A, p).has_value() ? 1 : 0);
                    e.oracle->emplace_back("exists", oracle::brute_force_exact(A, p).has_value() ? 1 : 0);
                }
                return e;
            });

        add("decomp", {Param::range("n", 2, 9), Param::list("m_max", {2000})},
            "three-generator count as a sum of two-generator counts, all m <= m_max",
            [](const Values& ps, const VerifyOptions&) {
                auto n = arg(ps, "n"), m_max = arg(ps, "m_max");
                auto [h, pair] = decomposition_for(n);
                auto big = denumerant_table(triangular_triple(n), h * m_max);
                auto small = denumerant_table(pair, m_max);
                auto tn = triangular(n);
                std::int64_t bad = 0;
                for (std::int64_t m = 0; m <= m_max; ++m)
                    if (static_cast<std::int64_t>(big[h * m]) != decomposition_rhs(small, m, tn)) ++bad;
                return Eval{{{"mismatches", 0}, {"checked", m_max + 1}},
                            {{"mismatches", bad}, {"checked", m_max + 1}},
                            {}};
            });
        add("zero-offres", {Param::range("n", 2, 9), Param::list("bound", {500})},
            "d(v; t_{n+1}, t_{n+2}) = 0 off multiples of their gcd",
            [](const Values& ps, const VerifyOptions&) {
                auto r = verify_zero_offres(arg(ps, "n"), arg(ps, "bound"));
                return Eval{r.expected, r.engine, r.oracle};
            });
        add("gcd-pair", {Param::list("n_max", {1000})}, "gcd(t_{n+1}, t_{n+2}) by parity",
            [](const Values& ps, const VerifyOptions&) {
                std::int64_t bad = 0, n_max = arg(ps, "n_max");
                for (std::int64_t n = 1; n <= n_max; ++n)
                    if (std::gcd(triangular(n + 1), triangular(n + 2)) != gcd_consecutive_triangular(n))
                        ++bad;
                return Eval{{{"mismatches", 0}}, {{"mismatches", bad}}, {}};
            });
        add("gcd-triple", {Param::list("n_max", {1000})}, "gcd(t_n, t_{n+1}, t_{n+2}) = 1",
            [](const Values& ps, const VerifyOptions&) {
                std::int64_t bad = 0, n_max = arg(ps, "n_max");
                for (std::int64_t n = 1; n <= n_max; ++n)
                    if (triangular_triple(n).gcd() != 1) ++bad;
                return Eval{{{"mismatches", 0}}, {{"mismatches", bad}}, {}};
            });
        add("d23", {Param::list("n_max", {1000})}, "d(n; 2, 3) = floor((n+2)/2) - floor((n+2)/3)",
            [](const Values& ps, const VerifyOptions&) {
                auto n_max = arg(ps, "n_max");
                auto t = denumerant_table(GeneratorSet::normalize({2, 3}), n_max);
                std::int64_t bad = 0;
                for (std::int64_t n = 0; n <= n_max; ++n)
                    if (static_cast<std::int64_t>(t[n]) != closed_form_d23(n)) ++bad;
                return Eval{{{"mismatches", 0}}, {{"mismatches", bad}}, {}};
            });
        add("two-var", {Param::range("p", 0, 5)},
            "two-generator g, n, s closed forms for coprime 2 <= a < b <= 40",
            [](const Values& ps, const VerifyOptions&) { return two_var_sweep(arg(ps, "p")); });
        add("power-sums", {Param::range("mu", 0, 3)},
            "Bernoulli-weighted power sums vs brute force over a fixed corpus, p <= 4",
            [](const Values& ps, const VerifyOptions&) { return power_sum_sweep(arg(ps, "mu")); });
        return v;
    }();
    return table;
}

const Entry* find_entry(std::string_view id) {
    for (const auto& e : entries())
        if (e.claim.id == id) return &e;
    return nullptr;
}

void for_each_instance(const std::vector<Param>& params, std::size_t depth, Values& cur,
                       const std::function<void(const Values&)>& fn) {
    if (depth == params.size()) {
        fn(cur);
        return;
    }
    for (auto v : params[depth].values) {
        cur.emplace_back(params[depth].name, v);
        for_each_instance(params, depth + 1, cur, fn);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> out;
        for (const auto& e : entries()) out.push_back(e.claim);
        return out;
    }();
    return claims;
}

const Claim& find_claim(std::string_view id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw Error(Errc::unknown_claim, "unknown claim '" + std::string(id) + "'");
}

std::vector<const Claim*> matching_claims(std::string_view filter) {
    std::vector<const Claim*> out;
    for (const auto& c : registry())
        if (filter.empty() || filter == "all" || std::string_view(c.id).starts_with(filter))
            out.push_back(&c);
    return out;
}

std::vector<ClaimReport> verify_claim(const Claim& claim, const VerifyOptions& opts) {
    const auto* entry = find_entry(claim.id);
    if (!entry) throw Error(Errc::unknown_claim, "unknown claim '" + claim.id + "'");
    std::vector<ClaimReport> out;
    Values cur;
    for_each_instance(claim.params, 0, cur, [&](const Values& params) {
        auto t0 = std::chrono::steady_clock::now();
        ClaimReport r;
        r.claim_id = claim.id;
        r.params = params;
        try {
            auto e = entry->eval(params, opts);
            r.expected = std::move(e.expected);
            r.engine = std::move(e.engine);
            r.oracle = std::move(e.oracle);
            r.note = std::move(e.note);
            r.verdict = e.skipped ? Verdict::skipped : judge(r);
        } catch (const Error& err) {
            r.verdict = Verdict::fail;
            r.note = std::string(to_string(err.code())) + ": " + err.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    });
    return out;
}

ClaimReport verify_decomposition(std::int64_t n, std::int64_t m) {
    if (m < 0) throw Error(Errc::domain_error, "m must be nonnegative");
    auto [h, pair] = decomposition_for(n);
    auto T = triangular_triple(n);
    auto lhs = static_cast<std::int64_t>(denumerant(T, h * m));
    auto rhs = decomposition_rhs(denumerant_table(pair, m), m, triangular(n));
    auto reps = enumerate_representations(T, h * m, SIZE_MAX);

    ClaimReport r;
    r.claim_id = "decomp";
    r.params = {{"n", n}, {"m", m}};
    r.expected = {{"d", lhs}};
    r.engine = {{"d", rhs}};
    r.oracle = Values{{"d", static_cast<std::int64_t>(reps.items.size())}};
    r.verdict = judge(r);
    return r;
}

ClaimReport verify_zero_offres(std::int64_t n, std::int64_t bound) {
    if (n < 2) throw Error(Errc::domain_error, "verify_zero_offres needs n >= 2");
    if (bound < 0) throw Error(Errc::domain_error, "bound must be nonnegative");
    const auto h = gcd_consecutive_triangular(n);
    auto t = denumerant_table(GeneratorSet::normalize({triangular(n + 1), triangular(n + 2)}), bound);
    std::int64_t violations = 0;
    for (std::int64_t v = 0; v <= bound; ++v)
        if (v % h != 0 && t[v] != 0) ++violations;

    ClaimReport r;
    r.claim_id = "zero-offres";
    r.params = {{"n", n}, {"bound", bound}};
    r.expected = {{"violations", 0}, {"gcd", h}};
    r.engine = {{"violations", violations}, {"gcd", std::gcd(triangular(n + 1), triangular(n + 2))}};
    r.verdict = judge(r);
    return r;
}

std::vector<ConjecturePattern> conjecture_scan(std::int64_t n_lo, std::int64_t n_hi,
                                               std::int64_t p_max) {
    if (n_lo < 2 || n_hi < n_lo || p_max < 0)
        throw Error(Errc::domain_error, "conjecture_scan needs 2 <= n_lo <= n_hi and p_max >= 0");
    std::vector<ConjecturePattern> out;
    for (std::int64_t p = 0; p <= p_max; ++p) {
        for (auto parity : {Parity::odd, Parity::even}) {
            // Q(n) = 4(g+1) / ((n+1)(n+2)) when integral.
            std::vector<std::pair<std::int64_t, std::optional<std::int64_t>>> samples;
            for (auto n = n_hi; n >= n_lo; --n) {
                if ((n % 2 != 0) != (parity == Parity::odd)) continue;
                if (parity == Parity::odd && n < 3) continue;
                auto g = p_frobenius(triangular_triple(n), p);
                auto num = 4 * (g + 1), den = (n + 1) * (n + 2);
                samples.emplace_back(n, num % den == 0 ? std::optional(num / den) : std::nullopt);
            }
            if (samples.size() < 2 || !samples[0].second || !samples[1].second) continue;
            auto [n2, q2] = samples[0];
            auto [n1, q1] = samples[1];
            if ((*q2 - *q1) % (n2 - n1) != 0) continue;
            auto q = (*q2 - *q1) / (n2 - n1);
            auto offset = *q2 - q * n2;
            auto from = n1;
            for (std::size_t k = 2; k < samples.size(); ++k) {
                auto [n, Q] = samples[k];
                if (!Q || *Q != q * n + offset) break;
                from = n;
            }
            out.push_back({p, parity, q, offset, from, n2});
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json to_json(const Values& vs) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : vs) j[k] = v;
    return j;
}

std::string to_kv(const Values& vs) {
    std::string s;
    for (const auto& [k, v] : vs) {
        if (!s.empty()) s += ';';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

} // namespace

void JsonLinesSink::emit(const ClaimReport& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["params"] = to_json(r.params);
    j["expected"] = to_json(r.expected);
    j["engine"] = to_json(r.engine);
    j["oracle"] = r.oracle ? to_json(*r.oracle) : nlohmann::ordered_json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["ms"] = timing_ ? nlohmann::ordered_json(r.ms) : nlohmann::ordered_json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    os_ << j.dump() << '\n';
}

CsvSink::CsvSink(std::ostream& os, bool timing) : os_(os), timing_(timing) {
    os_ << "claim_id,params,expected,engine,oracle,verdict,ms\n";
}

void CsvSink::emit(const ClaimReport& r) {
    os_ << r.claim_id << ',' << to_kv(r.params) << ',' << to_kv(r.expected) << ','
        << to_kv(r.engine) << ',' << (r.oracle ? to_kv(*r.oracle) : "") << ','
        << to_string(r.verdict) << ',';
    if (timing_) os_ << r.ms;
    os_ << '\n';
}

void PlainSink::emit(const ClaimReport& r) {
    os_ << r.claim_id << " [" << to_kv(r.params) << "] " << to_string(r.verdict);
    if (r.verdict == Verdict::fail)
        os_ << " expected{" << to_kv(r.expected) << "} engine{" << to_kv(r.engine) << "}"
            << (r.oracle ? " oracle{" + to_kv(*r.oracle) + "}" : "");
    if (!r.note.empty()) os_ << " (" << r.note << ")";
    os_ << '\n';
}

SuiteSummary run_suite(std::string_view filter, ReportSink* sink, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    auto claims = matching_claims(filter);
    std::vector<std::future<std::vector<ClaimReport>>> jobs;
    jobs.reserve(claims.size());
    for (const auto* c : claims)
        jobs.push_back(std::async(std::launch::async, [c, opts] { return verify_claim(*c, opts); }));

    SuiteSummary summary;
    for (auto& job : jobs) {
        for (const auto& r : job.get()) {
            switch (r.verdict) {
            case Verdict::pass: ++summary.pass; break;
            case Verdict::fail: ++summary.fail; break;
            case Verdict::skipped: ++summary.skip; break;
            }
            if (sink) sink->emit(r);
        }
    }
    summary.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

} // namespace pfrob::harness
