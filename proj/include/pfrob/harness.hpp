#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfrob::harness {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v) noexcept;

/// Named integer values in a fixed order; the order is part of the output.
using Values = std::vector<std::pair<std::string, std::int64_t>>;

/// One checked instance of a claim. `expected` carries the closed-form or
/// printed value, `engine` the generic Apéry-set engine, `oracle` the
/// brute-force table scan when it was computed.
struct ClaimReport {
    std::string claim_id;
    Values params;
    Values expected;
    Values engine;
    std::optional<Values> oracle;
    Verdict verdict = Verdict::skipped;
    std::string note;
    double ms = 0.0;
};

/// pass iff every key of `expected` is present in `engine` and all present
/// channels agree exactly on every key they share.
Verdict judge(const ClaimReport& r);

struct Param {
    std::string name;
    std::vector<std::int64_t> values;

    static Param range(std::string name, std::int64_t lo, std::int64_t hi);
    static Param list(std::string name, std::vector<std::int64_t> values);
};

struct Claim {
    std::string id;
    std::vector<Param> params;  // instances are the cartesian product, in order
    std::string description;
};

const std::vector<Claim>& registry();

/// Throws Error(unknown_claim) when `id` is not registered.
const Claim& find_claim(std::string_view id);

/// Claims whose id starts with `filter`; "all" or "" selects everything.
std::vector<const Claim*> matching_claims(std::string_view filter);

struct VerifyOptions {
    /// Evaluate instances outside a validity set with the engine and record
    /// the value without judging it.
    bool probe = false;
};

/// One report per parameter instance. The claim id must be registered; the
/// parameter ranges may be narrowed or widened by the caller.
std::vector<ClaimReport> verify_claim(const Claim& claim, const VerifyOptions& opts = {});

/// d(h m; t_n, t_{n+1}, t_{n+2}) against sum_j d(m - j t_n; pair), where
/// (h, pair) = ((n+2)/2, (n+1, n+3)) for even n and
/// (n+2, ((n+1)/2, (n+3)/2)) for odd n.
ClaimReport verify_decomposition(std::int64_t n, std::int64_t m);

/// d(v; t_{n+1}, t_{n+2}) = 0 for every v <= bound not divisible by
/// gcd(t_{n+1}, t_{n+2}).
ClaimReport verify_zero_offres(std::int64_t n, std::int64_t bound);

enum class Parity { odd, even };

/// g(triple(n); p) = (q n + offset)(n+1)(n+2)/4 - 1 for every sampled n of
/// the given parity in [from_n, to_n].
struct ConjecturePattern {
    std::int64_t p = 0;
    Parity parity = Parity::odd;
    std::int64_t q = 0;
    std::int64_t offset = 0;
    std::int64_t from_n = 0;
    std::int64_t to_n = 0;
};

/// Exploratory: fits the shape above to the engine's values for the tail of
/// each (p, parity) sample. Reports only; never judges.
std::vector<ConjecturePattern> conjecture_scan(std::int64_t n_lo, std::int64_t n_hi,
                                               std::int64_t p_max);

class ReportSink {
public:
    virtual ~ReportSink() = default;
    virtual void emit(const ClaimReport& r) = 0;
};

/// One JSON object per line: claim_id, params, expected, engine, oracle,
/// verdict, ms. `ms` is null unless timing is requested.
class JsonLinesSink : public ReportSink {
public:
    explicit JsonLinesSink(std::ostream& os, bool timing = false) : os_(os), timing_(timing) {}
    void emit(const ClaimReport& r) override;

private:
    std::ostream& os_;
    bool timing_;
};

/// Same columns as JSON Lines; value maps are written as k=v;k=v.
class CsvSink : public ReportSink {
public:
    explicit CsvSink(std::ostream& os, bool timing = false);
    void emit(const ClaimReport& r) override;

private:
    std::ostream& os_;
    bool timing_;
};

class PlainSink : public ReportSink {
public:
    explicit PlainSink(std::ostream& os) : os_(os) {}
    void emit(const ClaimReport& r) override;

private:
    std::ostream& os_;
};

struct SuiteSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    double ms = 0.0;
};

/// Runs every matching claim (concurrently) and emits the reports in
/// registry order. `sink` may be null.
SuiteSummary run_suite(std::string_view filter, ReportSink* sink,
                       const VerifyOptions& opts = {});

} // namespace pfrob::harness
