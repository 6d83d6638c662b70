#include "jensen/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <tuple>

namespace jensen {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// FNV-1a, stable across platforms
std::uint64_t stream_id(const std::string& name) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

constexpr std::uint64_t kDistributionStream = 1;
constexpr std::uint64_t kMeansStream = 2;
constexpr std::uint64_t kLogMeanStream = 3;

constexpr double kProbabilityFloor = 1e-6;
constexpr Tolerance kIdentityTolerance{1e-10, 1e-12};
constexpr Tolerance kInvarianceTolerance{1e-12, 1e-15};
constexpr Tolerance kLogMeanTolerance{1e-14, 0.0};
constexpr double kMidpointSlack = 1e-12;
constexpr double kGradientInequalitySlack = 1e-10;
constexpr double kGradientCheckTolerance = 1e-6;
constexpr double kRenyiContinuityStep = 1e-4;
constexpr double kRenyiContinuityTolerance = 1e-3;

const std::map<std::string, ValueBox>& default_boxes() {
    static const std::map<std::string, ValueBox> boxes = {
        {"neg_log", {0.1, 10.0}},      {"x_log_x", {0.1, 10.0}},      {"power_p", {0.05, 10.0}},
        {"neg_power_alpha", {0.1, 10.0}}, {"power_alpha", {0.05, 10.0}}, {"squared_norm", {-5.0, 5.0}},
        {"log_sum_exp", {-5.0, 5.0}},
    };
    return boxes;
}

std::vector<double> simplex_weights(CounterRng& rng, std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) {
        x = -std::log(rng.unit());
        total += x;
    }
    double clamped_total = 0.0;
    for (double& x : w) {
        x = std::max(x / total, kProbabilityFloor);
        clamped_total += x;
    }
    for (double& x : w) x /= clamped_total;
    return w;
}

ConvexFunction random_function(const std::string& name, CounterRng& rng) {
    if (name == "power_p") return ConvexFunction::make(name, {{"p", rng.uniform(1.0, 4.0)}});
    if (name == "neg_power_alpha") return ConvexFunction::make(name, {{"alpha", rng.uniform(0.05, 0.95)}});
    if (name == "power_alpha") return ConvexFunction::make(name, {{"alpha", rng.uniform(1.05, 4.0)}});
    return ConvexFunction::make(name);
}

CheckOutcome leq_check(std::string name, double lhs, double rhs, const Tolerance& tol) {
    return {std::move(name), tol.leq(lhs, rhs), lhs, rhs, rhs - lhs};
}

CheckOutcome eq_check(std::string name, double lhs, double rhs, const Tolerance& tol) {
    return {std::move(name), tol.eq(lhs, rhs), lhs, rhs, -std::abs(lhs - rhs)};
}

CheckOutcome flag_check(std::string name, bool ok) { return {std::move(name), ok, 0.0, 0.0, 0.0}; }

CheckOutcome certificate_check(std::string name, const Certificate& c) {
    const double lhs = c.log_lhs ? *c.log_lhs : c.lhs;
    const double rhs = c.log_bound ? *c.log_bound : c.bound;
    return {std::move(name), c.valid, lhs, rhs, rhs - lhs};
}

// Largest deviation between two value lists, relative to max(1, |a|, |b|).
CheckOutcome same_values(std::string name, const std::vector<double>& a, const std::vector<double>& b,
                         const Tolerance& tol) {
    CheckOutcome out{std::move(name), true, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool finite = std::isfinite(a[i]) && std::isfinite(b[i]);
        const bool ok = finite ? tol.eq(a[i], b[i]) : a[i] == b[i];
        const double dev = finite ? -std::abs(a[i] - b[i]) : 0.0;
        if (!ok || dev < out.slack) {
            out.lhs = a[i];
            out.rhs = b[i];
            out.slack = dev;
        }
        out.passed = out.passed && ok;
    }
    return out;
}

std::vector<double> chain_values(const BoundChainReport& r) { return {r.gap, r.dg_bound, r.cbs_bound, r.box_bound}; }

template <typename T>
std::vector<T> reversed(std::vector<T> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<double> certificate_values(const std::vector<Certificate>& cs) {
    std::vector<double> out;
    for (const auto& c : cs) {
        out.push_back(c.lhs);
        out.push_back(c.bound);
    }
    return out;
}

std::string regime_suffix(double alpha) { return alpha < 1.0 ? "[alpha<1]" : "[alpha>1]"; }

// Same scale as the tolerance policy.
double relative_slack(double lhs, double rhs) {
    return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void record(SuiteReport& report, const std::string& prefix, std::size_t trial, const Verdict& v,
            const std::function<Json()>& instance, std::size_t max_records) {
    auto add_failure = [&](const std::string& check, double lhs, double rhs) {
        ++report.total_failures;
        if (report.failures.size() < max_records) report.failures.push_back({trial, check, instance(), lhs, rhs});
    };
    if (!v.instance_valid) {
        ++report.invalid_instances;
        add_failure(prefix + "instance_invalid", 0.0, 0.0);
        return;
    }
    for (const auto& c : v.checks) {
        auto& counts = report.checks[prefix + c.name];
        if (c.passed) {
            ++counts.passed;
        } else {
            ++counts.failed;
            add_failure(prefix + c.name, c.lhs, c.rhs);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CounterRng

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    std::uint64_t s = mix64(seed + kGolden);
    s = mix64(s ^ (index + 0x632BE59BD9B4E019ULL));
    s = mix64(s ^ (stream * kGolden + 0x8CB92BA72F3D8DD7ULL));
    state_ = s;
}

std::uint64_t CounterRng::next() {
    state_ += kGolden;
    return mix64(state_);
}

double CounterRng::unit() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::size_t CounterRng::integer(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::size_t>(next() % span);
}

// ---------------------------------------------------------------------------
// Configuration and generation

void SuiteConfig::validate() const {
    if (trials == 0) throw InputError("trials must be at least 1");
    if (dim_min == 0 || dim_min > dim_max) throw InputError("dimension range is empty");
    if (points_min == 0 || points_min > points_max) throw InputError("point-count range is empty");
    if (outcomes_min < 2 || outcomes_min > outcomes_max) throw InputError("outcome range must lie in [2, max]");
    if (means_max == 0) throw InputError("means sample size must be positive");
    if (functions.empty()) throw InputError("function set is empty");
    for (const auto& name : functions) {
        const auto f = ConvexFunction::make(name);
        const ValueBox b = box_for(name);
        if (!(b.lo < b.hi)) throw InputError("value box for " + name + " is empty");
        if (!f.gradient_defined_at(b.lo) && !f.coordinate_domain().interior(b.lo))
            throw InputError("value box for " + name + " leaves the domain");
        if (!f.coordinate_domain().contains(b.hi)) throw InputError("value box for " + name + " leaves the domain");
    }
}

ValueBox SuiteConfig::box_for(const std::string& function) const {
    if (auto it = value_boxes.find(function); it != value_boxes.end()) return it->second;
    if (auto it = default_boxes().find(function); it != default_boxes().end()) return it->second;
    throw InputError("no value box for " + function);
}

Trial generate_instance(const SuiteConfig& c, std::size_t index) {
    if (c.functions.empty()) throw InputError("function set is empty");

    std::vector<ChainCase> chains;
    for (const auto& name : c.functions) {
        CounterRng rng(c.seed, index, stream_id(name));
        ConvexFunction f = random_function(name, rng);
        const std::size_t d = f.is_scalar() ? 1 : rng.integer(c.dim_min, c.dim_max);
        const std::size_t k = rng.integer(c.points_min, c.points_max);
        const ValueBox box = c.box_for(name);
        std::vector<Point> points(k, Point(d));
        for (auto& x : points)
            for (double& xj : x) xj = rng.uniform(box.lo, box.hi);
        std::vector<double> weights(k);
        for (double& w : weights) w = rng.unit() < 0.1 ? 0.0 : rng.unit();
        if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) weights.front() = 1.0;
        chains.push_back({std::move(f), WeightedSample(std::move(points), std::move(weights))});
    }

    CounterRng drng(c.seed, index, kDistributionStream);
    const std::size_t n = drng.integer(c.outcomes_min, c.outcomes_max);
    DiscreteDistribution dist(simplex_weights(drng, n));
    std::vector<double> orders = {drng.uniform(0.05, 0.95), drng.uniform(1.05, 5.0)};

    CounterRng mrng(c.seed, index, kMeansStream);
    const std::size_t nm = mrng.integer(1, c.means_max);
    std::vector<double> values(nm);
    for (double& v : values) v = std::exp(mrng.uniform(std::log(1e-3), std::log(1e3)));
    PositiveSample ps{std::move(values), simplex_weights(mrng, nm)};
    const double power = mrng.uniform(1.0, 4.0);

    CounterRng lrng(c.seed, index, kLogMeanStream);
    const double a = std::exp(lrng.uniform(std::log(1e-3), std::log(1e3)));
    const double b = lrng.unit() < 0.1 ? a : std::exp(lrng.uniform(std::log(1e-3), std::log(1e3)));

    return Trial{index, std::move(chains), DistributionCase{std::move(dist), std::move(orders)},
                 MeansCase{std::move(ps), power}, {a, b}};
}

// ---------------------------------------------------------------------------
// Verification

bool Verdict::passed() const {
    return instance_valid && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckOutcome* Verdict::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Verdict verify_instance(const ConvexFunction& f, const WeightedSample& s, const Tolerance& tol) {
    Verdict v;
    try {
        const BoundChainReport r = bound_chain(f, s, std::nullopt, std::nullopt, tol);
        v.checks.push_back(leq_check("gap_nonnegative", 0.0, r.gap, tol));
        v.checks.push_back(leq_check("gap_le_dg", r.gap, r.dg_bound, tol));
        v.checks.push_back(leq_check("dg_le_cbs", r.dg_bound, r.cbs_bound, tol));
        v.checks.push_back(leq_check("cbs_le_box", r.cbs_bound, r.box_bound, tol));

        std::vector<Point> grads;
        for (const auto& x : s.points()) grads.push_back(f.gradient(x));
        v.checks.push_back(
            eq_check("coupling_identity", r.dg_bound, pairwise_coupling(s.points(), grads, s.weights()),
                     kIdentityTolerance));
        const double var_x = weighted_variance(s.points(), s.weights());
        v.checks.push_back(eq_check("variance_identity", var_x,
                                    pairwise_coupling(s.points(), s.points(), s.weights()), kIdentityTolerance));
        v.checks.push_back(leq_check("variance_le_box", var_x, box_variance_bound(r.box), tol));

        // weight 1/2 on each corner attains the box variance bound
        const WeightedSample corners({r.box.lower, r.box.upper}, {0.5, 0.5});
        v.checks.push_back(eq_check("box_variance_attained", weighted_variance(corners.points(), corners.weights()),
                                    box_variance_bound(r.box), Tolerance{0.0, 1e-12}));

        const ConditionVerdict cond = r.conditions;
        v.checks.push_back(flag_check("conditions_strict", cond.strict()));
        v.checks.push_back(flag_check("conditions_generalized", cond.generalized()));
        v.checks.push_back(flag_check("strict_implies_generalized", !cond.strict() || cond.generalized()));

        if (f.is_scalar()) {
            const double lo = r.box.lower[0];
            const double hi = r.box.upper[0];
            const double scalar = scalar_converse_bound(f, lo, hi);
            const Bounds g{{f.derivative(lo)}, {f.derivative(hi)}};
            v.checks.push_back(eq_check("scalar_matches_vector", scalar, converse_bound(r.box, g), kIdentityTolerance));
            v.checks.push_back(leq_check("gap_le_scalar_bound", r.gap, scalar, tol));
        }

        std::vector<double> base = chain_values(r);
        bool scale_ok = true;
        CheckOutcome scale{"weight_scale", true, 0.0, 0.0, 0.0};
        for (double factor : {3.0, 1e-3}) {
            std::vector<double> w = s.weights();
            for (double& x : w) x *= factor;
            const auto scaled = bound_chain(f, WeightedSample(s.points(), std::move(w)), std::nullopt, std::nullopt, tol);
            const auto o = same_values("weight_scale", base, chain_values(scaled), kInvarianceTolerance);
            if (o.slack < scale.slack || !o.passed) scale = o;
            scale_ok = scale_ok && o.passed;
        }
        scale.passed = scale_ok;
        v.checks.push_back(scale);

        const auto permuted =
            bound_chain(f, WeightedSample(reversed(s.points()), reversed(s.weights())), std::nullopt, std::nullopt, tol);
        v.checks.push_back(same_values("permutation", base, chain_values(permuted), kInvarianceTolerance));

        CheckOutcome grad{"gradient_check", true, 0.0, kGradientCheckTolerance, kGradientCheckTolerance};
        for (const auto& x : s.points()) {
            GradientCheckReport gc;
            try {
                gc = gradient_check(f, x, kDefaultFiniteDifferenceStep, kGradientCheckTolerance);
            } catch (const DomainError&) {
                continue;  // probe would leave the domain
            }
            if (gc.max_deviation > grad.lhs) {
                grad.lhs = gc.max_deviation;
                grad.slack = kGradientCheckTolerance - gc.max_deviation;
            }
            grad.passed = grad.passed && gc.pass;
        }
        v.checks.push_back(grad);

        CheckOutcome midpoint{"midpoint_convexity", true, 0.0, 0.0, std::numeric_limits<double>::infinity()};
        CheckOutcome support{"gradient_inequality", true, 0.0, 0.0, std::numeric_limits<double>::infinity()};
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            const Point& x = s.points()[i];
            const Point& y = s.points()[i + 1];
            Point mid(x.size());
            Point diff(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) {
                mid[j] = 0.5 * (x[j] + y[j]);
                diff[j] = x[j] - y[j];
            }
            const double fx = f.value(x);
            const double fy = f.value(y);
            const double lhs = f.value(mid);
            const double rhs = 0.5 * (fx + fy);
            const bool mid_ok = lhs <= rhs + kMidpointSlack * (1.0 + std::abs(fx) + std::abs(fy));
            if (rhs - lhs < midpoint.slack) midpoint = {"midpoint_convexity", midpoint.passed, lhs, rhs, rhs - lhs};
            midpoint.passed = midpoint.passed && mid_ok;

            const double linear = dot(grads[i + 1], diff);
            const double rise = fx - fy;
            const double scale_factor = 1.0 + std::abs(fx) + std::abs(fy) + std::abs(linear);
            const bool sup_ok = rise >= linear - kGradientInequalitySlack * scale_factor;
            if (rise - linear < support.slack) support = {"gradient_inequality", support.passed, linear, rise, rise - linear};
            support.passed = support.passed && sup_ok;
        }
        if (std::isinf(midpoint.slack)) midpoint.slack = 0.0;
        if (std::isinf(support.slack)) support.slack = 0.0;
        v.checks.push_back(midpoint);
        v.checks.push_back(support);
    } catch (const DomainError& e) {
        v.instance_valid = false;
        v.error = e.what();
        v.checks.clear();
    }
    return v;
}

Verdict verify_distribution(const DiscreteDistribution& d, const std::vector<double>& orders, const Tolerance& tol) {
    Verdict v;
    try {
        const double n = static_cast<double>(d.size());
        const double h = shannon_entropy(d);
        v.checks.push_back(leq_check("entropy_nonnegative", 0.0, h, tol));
        v.checks.push_back(leq_check("entropy_le_log_n", h, std::log(n), tol));

        const double energy = informational_energy(d);
        v.checks.push_back(leq_check("energy_ge_inverse_n", 1.0 / n, energy, tol));
        v.checks.push_back(leq_check("energy_le_one", energy, 1.0, tol));
        v.checks.push_back(eq_check("energy_identity", energy, std::exp(-renyi_entropy(d, RenyiOrder(2.0))),
                                    Tolerance{1e-12, 0.0}));

        const double below = renyi_entropy(d, RenyiOrder(1.0 - kRenyiContinuityStep));
        const double above = renyi_entropy(d, RenyiOrder(1.0 + kRenyiContinuityStep));
        const double drift = std::max(std::abs(below - h), std::abs(above - h));
        v.checks.push_back(leq_check("renyi_continuity", drift, kRenyiContinuityTolerance, Tolerance{0.0, 0.0}));

        const DiscreteDistribution rev(reversed(d.probs()));
        auto certificates = [&](const DiscreteDistribution& dist) {
            std::vector<Certificate> cs = {dg_counterpart_bound(dist, tol)};
            if (dist.size() >= 2) {
                cs.push_back(t4_certificate(dist, tol));
                cs.push_back(t5_certificate(dist, tol));
                for (double a : orders) {
                    const RenyiOrder o(a);
                    cs.push_back(renyi_order_gap(dist, o, tol));
                    cs.push_back(t6_certificate(dist, o, tol));
                    cs.push_back(t7_certificate(dist, o, tol));
                    cs.push_back(t8_certificate(dist, o, tol));
                    cs.push_back(t9_certificate(dist, o, tol));
                }
            }
            return cs;
        };
        const auto cs = certificates(d);
        for (const auto& c : cs) {
            const auto alpha = c.detail("alpha");
            v.checks.push_back(certificate_check(c.name + (alpha ? regime_suffix(*alpha) : ""), c));
        }

        std::vector<double> base = certificate_values(cs);
        base.push_back(h);
        std::vector<double> other = certificate_values(certificates(rev));
        other.push_back(shannon_entropy(rev));
        v.checks.push_back(same_values("permutation", base, other, kInvarianceTolerance));
    } catch (const DomainError& e) {
        v.instance_valid = false;
        v.error = e.what();
        v.checks.clear();
    }
    return v;
}

Verdict verify_means(const PositiveSample& s, double power, const Tolerance& tol) {
    Verdict v;
    try {
        const WeightedMeans m = weighted_means(s);
        v.checks.push_back(leq_check("geometric_le_arithmetic", m.geometric, m.arithmetic, tol));
        v.checks.push_back(leq_check("harmonic_le_geometric", m.harmonic, m.geometric, tol));

        auto certificates = [&](const PositiveSample& ps) {
            return std::vector<Certificate>{ag_certificate(ps, std::nullopt, tol), gh_certificate(ps, std::nullopt, tol),
                                            power_mean_certificate(ps, power, std::nullopt, tol),
                                            self_power_certificate(ps, std::nullopt, tol)};
        };
        const auto cs = certificates(s);
        for (const auto& c : cs) v.checks.push_back(certificate_check(c.name, c));

        std::vector<Point> points;
        for (double x : s.values) points.push_back({x});
        const double gap = jensen_gap(ConvexFunction::make("neg_log"), WeightedSample(points, s.weights));
        v.checks.push_back(eq_check("ag_log_matches_gap", *cs[0].log_lhs, gap, Tolerance{1e-12, 0.0}));

        const PositiveSample rev{reversed(s.values), reversed(s.weights)};
        auto log_values = [](const std::vector<Certificate>& list) {
            std::vector<double> out;
            for (const auto& c : list) {
                out.push_back(c.log_lhs ? *c.log_lhs : c.lhs);
                out.push_back(c.log_bound ? *c.log_bound : c.bound);
            }
            return out;
        };
        v.checks.push_back(same_values("permutation", log_values(cs), log_values(certificates(rev)),
                                       kInvarianceTolerance));
    } catch (const DomainError& e) {
        v.instance_valid = false;
        v.error = e.what();
        v.checks.clear();
    }
    return v;
}

Verdict verify_log_mean(double a, double b, const Tolerance&) {
    Verdict v;
    try {
        const double l = logarithmic_mean(a, b);
        const double g = std::sqrt(a * b);
        const double arith = 0.5 * (a + b);
        v.checks.push_back(leq_check("geometric_le_logarithmic", g, l, kLogMeanTolerance));
        v.checks.push_back(leq_check("logarithmic_le_arithmetic", l, arith, kLogMeanTolerance));
        if (a == b) v.checks.push_back(flag_check("equal_arguments_exact", l == a));
    } catch (const DomainError& e) {
        v.instance_valid = false;
        v.error = e.what();
    }
    return v;
}

// ---------------------------------------------------------------------------
// Suite

void SuiteReport::merge(const SuiteReport& other, std::size_t max_records) {
    for (const auto& [name, counts] : other.checks) {
        auto& mine = checks[name];
        mine.passed += counts.passed;
        mine.failed += counts.failed;
    }
    invalid_instances += other.invalid_instances;
    total_failures += other.total_failures;
    trials += other.trials;
    for (const auto& [stage, slack] : other.worst_relative_slack) {
        auto it = worst_relative_slack.find(stage);
        if (it == worst_relative_slack.end())
            worst_relative_slack[stage] = slack;
        else
            it->second = std::min(it->second, slack);
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::sort(failures.begin(), failures.end(), [](const FailureRecord& x, const FailureRecord& y) {
        if (std::tie(x.trial, x.check) != std::tie(y.trial, y.check))
            return std::tie(x.trial, x.check) < std::tie(y.trial, y.check);
        // only reports from different runs can tie here
        return x.instance.dump() < y.instance.dump();
    });
    if (failures.size() > max_records) failures.resize(max_records);
}

namespace {

SuiteReport run_trials(const SuiteConfig& c, std::size_t begin, std::size_t end) {
    SuiteReport report;
    report.seed = c.seed;
    const std::size_t cap = c.max_failure_records;
    for (std::size_t t = begin; t < end; ++t) {
        const Trial trial = generate_instance(c, t);
        SuiteReport local;
        for (const auto& chain : trial.chains) {
            const Verdict v = verify_instance(chain.function, chain.sample, c.tolerance);
            record(local, "chain/" + chain.function.name() + "/", t, v,
                   [&] { return chain_instance_json(chain.function, chain.sample); }, cap);
            for (const char* stage : {"gap_le_dg", "dg_le_cbs", "cbs_le_box"}) {
                if (const auto* o = v.find(stage)) {
                    const double rel = relative_slack(o->lhs, o->rhs);
                    auto [it, inserted] = local.worst_relative_slack.emplace(stage, rel);
                    if (!inserted) it->second = std::min(it->second, rel);
                }
            }
        }
        const auto& dc = trial.distribution;
        record(local, "entropy/", t, verify_distribution(dc.distribution, dc.orders, c.tolerance),
               [&] { return distribution_instance_json(dc.distribution, dc.orders); }, cap);
        record(local, "means/", t, verify_means(trial.means.sample, trial.means.power, c.tolerance),
               [&] { return means_instance_json(trial.means.sample, trial.means.power); }, cap);
        const auto [a, b] = trial.log_mean_pair;
        record(local, "log_mean/", t, verify_log_mean(a, b, c.tolerance), [&] { return log_mean_instance_json(a, b); },
               cap);
        local.trials = 1;
        report.merge(local, cap);
    }
    return report;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& c) {
    c.validate();
    const std::size_t workers = std::max<std::size_t>(1, std::min(c.threads, c.trials));
    std::vector<SuiteReport> parts(workers);
    if (workers == 1) {
        parts[0] = run_trials(c, 0, c.trials);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (c.trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(c.trials, w * chunk);
            const std::size_t end = std::min(c.trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] { parts[w] = run_trials(c, begin, end); });
        }
        for (auto& th : pool) th.join();
    }
    SuiteReport report;
    report.seed = c.seed;
    for (const auto& part : parts) report.merge(part, c.max_failure_records);
    return report;
}

// ---------------------------------------------------------------------------
// Serialization and replay

Json chain_instance_json(const ConvexFunction& f, const WeightedSample& s) {
    return Json{{"kind", "chain"}, {"function", to_json(f)}, {"points", s.points()}, {"weights", s.weights()}};
}

Json distribution_instance_json(const DiscreteDistribution& d, const std::vector<double>& orders) {
    return Json{{"kind", "distribution"}, {"probs", d.probs()}, {"orders", orders}};
}

Json means_instance_json(const PositiveSample& s, double power) {
    return Json{{"kind", "means"}, {"values", s.values}, {"weights", s.weights}, {"power", power}};
}

Json log_mean_instance_json(double a, double b) { return Json{{"kind", "log_mean"}, {"a", a}, {"b", b}}; }

Json to_json(const Verdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}});
    Json j{{"instance_valid", v.instance_valid}};
    if (!v.error.empty()) j["error"] = v.error;
    j["checks"] = std::move(checks);
    j["passed"] = v.passed();
    return j;
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::object();
    for (const auto& [name, counts] : r.checks) checks[name] = Json{{"passed", counts.passed}, {"failed", counts.failed}};
    Json slack = Json::object();
    for (const auto& [stage, value] : r.worst_relative_slack) slack[stage] = value;
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            Json{{"trial", f.trial}, {"check", f.check}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"instance", f.instance}});
    return Json{{"seed", r.seed},
                {"trials", r.trials},
                {"total_failures", r.total_failures},
                {"invalid_instances", r.invalid_instances},
                {"worst_relative_slack", slack},
                {"checks", checks},
                {"failures", failures}};
}

Verdict replay_record(const Json& record, const Tolerance& tol) {
    const Json& inst = record.contains("instance") ? record["instance"] : record;
    if (!inst.is_object() || !inst.contains("kind") || !inst["kind"].is_string())
        throw InputError("replay input needs an instance with a 'kind' field");
    const auto kind = inst["kind"].get<std::string>();
    auto number_list = [&](const char* key) {
        if (!inst.contains(key) || !inst[key].is_array()) throw InputError(std::string("missing field '") + key + "'");
        return inst[key].get<std::vector<double>>();
    };
    auto scalar = [&](const char* key) {
        if (!inst.contains(key) || !inst[key].is_number()) throw InputError(std::string("missing field '") + key + "'");
        return inst[key].get<double>();
    };
    if (kind == "chain") {
        if (!inst.contains("function")) throw InputError("missing field 'function'");
        return verify_instance(function_from_json(inst["function"]), sample_from_json(inst), tol);
    }
    if (kind == "distribution") return verify_distribution(DiscreteDistribution(number_list("probs")), number_list("orders"), tol);
    if (kind == "means") return verify_means(PositiveSample{number_list("values"), number_list("weights")}, scalar("power"), tol);
    if (kind == "log_mean") return verify_log_mean(scalar("a"), scalar("b"), tol);
    throw InputError("unknown instance kind '" + kind + "'");
}

}  // namespace jensen
