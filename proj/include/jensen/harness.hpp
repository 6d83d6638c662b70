#pragma once

// Seeded random instance generation and verification of every inequality,
// identity and certificate in the library. Randomness is keyed by
// (seed, trial index, stream), so a trial can be regenerated on its own and
// trials can run in any order or in parallel.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jensen/serialization.hpp"

namespace jensen {

/// SplitMix64 over a counter keyed by (seed, index, stream).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

    std::uint64_t next();
    /// Uniform on the open interval (0, 1).
    double unit();
    /// Uniform on the open interval (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi);

private:
    std::uint64_t state_;
};

struct ValueBox {
    double lo = 0.0;
    double hi = 1.0;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t dim_min = 1;
    std::size_t dim_max = 5;
    std::size_t points_min = 2;
    std::size_t points_max = 20;
    std::vector<std::string> functions = ConvexFunction::registry_names();
    /// Sampling interval per function; missing entries use built-in defaults.
    std::map<std::string, ValueBox> value_boxes;
    std::size_t outcomes_min = 2;
    std::size_t outcomes_max = 100;
    std::size_t means_max = 50;
    Tolerance tolerance{};
    /// Worker threads; the report does not depend on this.
    std::size_t threads = 1;
    /// Failure records kept in the report (counts are always complete).
    std::size_t max_failure_records = 100;

    /// Throws InputError on trials == 0, empty ranges or an empty/unknown function set.
    void validate() const;
    ValueBox box_for(const std::string& function) const;
};

struct ChainCase {
    ConvexFunction function;
    WeightedSample sample;
};

struct DistributionCase {
    DiscreteDistribution distribution;
    std::vector<double> orders;  // one below 1, one above
};

struct MeansCase {
    PositiveSample sample;
    double power = 2.0;
};

/// Everything one trial exercises.
struct Trial {
    std::size_t index = 0;
    std::vector<ChainCase> chains;  // one per configured function
    DistributionCase distribution;
    MeansCase means;
    std::pair<double, double> log_mean_pair;
};

/// Deterministic for fixed (seed, index). Samples lie strictly inside each
/// function's value box; distributions are strictly positive.
Trial generate_instance(const SuiteConfig& c, std::size_t index);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs for inequalities, -|lhs - rhs| for identities
};

struct Verdict {
    bool instance_valid = true;
    std::string error;
    std::vector<CheckOutcome> checks;

    bool passed() const;
    const CheckOutcome* find(const std::string& name) const;
};

/// Bound chain, coupling and variance identities, box/condition checks,
/// weight-scale and permutation invariance, gradient checks and the convexity
/// inequalities on one (function, sample) instance. Domain errors are
/// reported as an invalid instance rather than a failed check.
Verdict verify_instance(const ConvexFunction& f, const WeightedSample& s, const Tolerance& tol = {});

/// Entropy range, every entropy/Rényi certificate at each order, energy
/// identity, order continuity and permutation invariance.
Verdict verify_distribution(const DiscreteDistribution& d, const std::vector<double>& orders,
                            const Tolerance& tol = {});

/// Mean ordering and the four mean certificates, cross-checked against the
/// Jensen gap of -ln, plus permutation invariance.
Verdict verify_means(const PositiveSample& s, double power, const Tolerance& tol = {});

/// G <= L <= A for one positive pair.
Verdict verify_log_mean(double a, double b, const Tolerance& tol = {});

struct CheckCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct FailureRecord {
    std::size_t trial = 0;
    std::string check;
    Json instance;  // tagged with "kind"; replayable through replay_record
    double lhs = 0.0;
    double rhs = 0.0;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::map<std::string, CheckCounts> checks;
    std::size_t invalid_instances = 0;
    /// Smallest (rhs - lhs) / max(1, |lhs|, |rhs|) seen per chain stage.
    std::map<std::string, double> worst_relative_slack;
    std::vector<FailureRecord> failures;
    std::size_t total_failures = 0;

    /// Associative, commutative merge (failure records are kept sorted).
    void merge(const SuiteReport& other, std::size_t max_records);
};

SuiteReport run_suite(const SuiteConfig& c);

Json to_json(const SuiteReport& r);
Json to_json(const Verdict& v);

/// Instance payloads used in failure records.
Json chain_instance_json(const ConvexFunction& f, const WeightedSample& s);
Json distribution_instance_json(const DiscreteDistribution& d, const std::vector<double>& orders);
Json means_instance_json(const PositiveSample& s, double power);
Json log_mean_instance_json(double a, double b);

/// Re-verifies a failure record (or a bare instance payload).
Verdict replay_record(const Json& record, const Tolerance& tol = {});

}  // namespace jensen
