#include <gtest/gtest.h>

#include <set>

#include "jensen/harness.hpp"

using namespace jensen;

namespace {

SuiteConfig small_config(std::size_t trials = 40) {
    SuiteConfig c;
    c.seed = 7;
    c.trials = trials;
    return c;
}

}  // namespace

TEST(CounterRng, DeterministicAndKeyed) {
    CounterRng a(1, 0, 5), b(1, 0, 5), c(1, 1, 5), d(2, 0, 5), e(1, 0, 6);
    const auto first = a.next();
    EXPECT_EQ(first, b.next());
    EXPECT_NE(first, c.next());
    EXPECT_NE(first, d.next());
    EXPECT_NE(first, e.next());
    CounterRng r(3, 4, 5);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.unit();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        const auto k = r.integer(2, 4);
        ASSERT_GE(k, 2u);
        ASSERT_LE(k, 4u);
    }
}

TEST(SuiteConfigType, Validation) {
    SuiteConfig c;
    EXPECT_NO_THROW(c.validate());
    c.trials = 0;
    EXPECT_THROW(c.validate(), InputError);
    EXPECT_THROW(run_suite(c), InputError);
    c = SuiteConfig{};
    c.functions.clear();
    EXPECT_THROW(c.validate(), InputError);
    c = SuiteConfig{};
    c.functions = {"nope"};
    EXPECT_THROW(c.validate(), InputError);
    c = SuiteConfig{};
    c.points_min = 5;
    c.points_max = 3;
    EXPECT_THROW(c.validate(), InputError);
    c = SuiteConfig{};
    c.dim_min = 0;
    EXPECT_THROW(c.validate(), InputError);
}

TEST(GenerateInstance, Deterministic) {
    SuiteConfig c;
    c.seed = 1;
    const auto a = generate_instance(c, 0);
    const auto b = generate_instance(c, 0);
    ASSERT_EQ(a.chains.size(), b.chains.size());
    for (std::size_t i = 0; i < a.chains.size(); ++i) {
        EXPECT_EQ(dump(chain_instance_json(a.chains[i].function, a.chains[i].sample)),
                  dump(chain_instance_json(b.chains[i].function, b.chains[i].sample)));
    }
    EXPECT_EQ(a.distribution.distribution.probs(), b.distribution.distribution.probs());
    EXPECT_EQ(a.means.sample.values, b.means.sample.values);
    EXPECT_EQ(a.log_mean_pair, b.log_mean_pair);
    EXPECT_NE(generate_instance(c, 1).means.sample.values, a.means.sample.values);
}

TEST(GenerateInstance, RangeContainmentAndPointCount) {
    SuiteConfig c;
    c.functions = {"neg_log"};
    c.dim_min = c.dim_max = 1;
    c.points_min = c.points_max = 2;
    c.value_boxes["neg_log"] = {0.1, 10.0};
    for (std::size_t i = 0; i < 500; ++i) {
        const auto t = generate_instance(c, i);
        ASSERT_EQ(t.chains.size(), 1u);
        const auto& s = t.chains[0].sample;
        EXPECT_EQ(s.size(), 2u);
        EXPECT_EQ(s.dim(), 1u);
        for (const auto& p : s.points()) {
            EXPECT_GT(p[0], 0.1);
            EXPECT_LT(p[0], 10.0);
        }
        for (double p : t.distribution.distribution.probs()) EXPECT_GT(p, 0.0);
        EXPECT_GE(t.distribution.distribution.size(), 2u);
        EXPECT_LE(t.distribution.distribution.size(), 100u);
        ASSERT_EQ(t.distribution.orders.size(), 2u);
        EXPECT_LT(t.distribution.orders[0], 1.0);
        EXPECT_GT(t.distribution.orders[1], 1.0);
    }
}

TEST(GenerateInstance, RespectsDimensionRange) {
    SuiteConfig c;
    c.functions = {"squared_norm", "log_sum_exp"};
    c.dim_min = 3;
    c.dim_max = 4;
    for (std::size_t i = 0; i < 200; ++i) {
        for (const auto& ch : generate_instance(c, i).chains) {
            EXPECT_GE(ch.sample.dim(), 3u);
            EXPECT_LE(ch.sample.dim(), 4u);
            EXPECT_GE(ch.sample.size(), 2u);
            EXPECT_LE(ch.sample.size(), 20u);
        }
    }
}

TEST(VerifyInstance, FixtureSlacks) {
    const WeightedSample s({{1.0}, {2.0}, {4.0}}, {0.2, 0.3, 0.5});
    const auto v = verify_instance(ConvexFunction::make("neg_log"), s);
    EXPECT_TRUE(v.instance_valid);
    EXPECT_TRUE(v.passed());
    EXPECT_NEAR(v.find("gap_le_dg")->slack, 0.33 - 0.12852808245322934, 1e-12);
    EXPECT_NEAR(v.find("dg_le_cbs")->slack, 0.35464771252610667 - 0.33, 1e-12);
    EXPECT_NEAR(v.find("cbs_le_box")->slack, 0.5625 - 0.35464771252610667, 1e-12);
}

TEST(VerifyInstance, EqualPointsHaveZeroSlack) {
    const WeightedSample s({{2.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}}, {1, 2, 3});
    const auto v = verify_instance(ConvexFunction::make("log_sum_exp"), s);
    EXPECT_TRUE(v.passed());
    for (const char* name : {"gap_nonnegative", "gap_le_dg", "dg_le_cbs", "cbs_le_box"}) {
        ASSERT_NE(v.find(name), nullptr) << name;
        EXPECT_EQ(v.find(name)->slack, 0.0) << name;
    }
}

TEST(VerifyInstance, DomainErrorIsInvalidNotFailure) {
    const WeightedSample s({{-1.0}, {2.0}}, {0.5, 0.5});
    const auto v = verify_instance(ConvexFunction::make("neg_log"), s);
    EXPECT_FALSE(v.instance_valid);
    EXPECT_FALSE(v.error.empty());
}

TEST(RunSuite, ByteIdenticalAndThreadIndependent) {
    auto c = small_config(60);
    const auto a = dump(to_json(run_suite(c)));
    EXPECT_EQ(a, dump(to_json(run_suite(c))));
    c.threads = 4;
    EXPECT_EQ(a, dump(to_json(run_suite(c))));
    c.threads = 7;
    EXPECT_EQ(a, dump(to_json(run_suite(c))));
}

TEST(RunSuite, CountsSumToTrialsAndCoverage) {
    const auto c = small_config(100);
    const auto r = run_suite(c);
    EXPECT_EQ(r.total_failures, 0u);
    EXPECT_EQ(r.invalid_instances, 0u);
    std::set<std::string> names;
    for (const auto& [name, counts] : r.checks) {
        names.insert(name);
        if (name.rfind("chain/", 0) == 0 && name.find("gradient_check") == std::string::npos &&
            name.find("scalar") == std::string::npos)
            EXPECT_EQ(counts.passed + counts.failed, c.trials) << name;
    }
    for (const char* cert : {"means/ag", "means/gh", "means/power_mean", "means/self_power", "entropy/dg_counterpart",
                             "entropy/t4", "entropy/t5", "entropy/renyi_order_gap[alpha<1]",
                             "entropy/renyi_order_gap[alpha>1]", "entropy/t6[alpha<1]", "entropy/t6[alpha>1]",
                             "entropy/t7[alpha<1]", "entropy/t7[alpha>1]", "entropy/t8[alpha<1]",
                             "entropy/t8[alpha>1]", "entropy/t9[alpha<1]", "entropy/t9[alpha>1]"}) {
        ASSERT_TRUE(names.count(cert)) << cert;
        EXPECT_EQ(r.checks.at(cert).passed, c.trials) << cert;
    }
    for (const auto& f : ConvexFunction::registry_names()) {
        EXPECT_TRUE(names.count("chain/" + f + "/gap_le_dg")) << f;
        EXPECT_TRUE(names.count("chain/" + f + "/coupling_identity")) << f;
        EXPECT_TRUE(names.count("chain/" + f + "/gradient_check")) << f;
    }
}

TEST(RunSuite, ForcedFailuresReplay) {
    // a negative absolute tolerance turns exact equalities into failures
    auto c = small_config(20);
    c.tolerance = Tolerance{0.0, -1e-3};
    c.max_failure_records = 1000000;
    const auto r = run_suite(c);
    ASSERT_GT(r.total_failures, 0u);
    EXPECT_EQ(r.failures.size(), r.total_failures);
    for (std::size_t i = 1; i < r.failures.size(); ++i) {
        const auto& p = r.failures[i - 1];
        const auto& q = r.failures[i];
        EXPECT_TRUE(p.trial < q.trial || (p.trial == q.trial && p.check <= q.check));
    }
    for (const auto& f : r.failures) {
        Json record = {{"trial", f.trial}, {"check", f.check}, {"instance", f.instance}};
        const auto v = replay_record(record, c.tolerance);
        EXPECT_FALSE(v.passed()) << f.check;
        const auto again = replay_record(record, c.tolerance);
        EXPECT_EQ(dump(to_json(v)), dump(to_json(again)));
    }
    // the same records pass under the default tolerance
    for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 50); ++i)
        EXPECT_TRUE(replay_record(r.failures[i].instance).passed()) << r.failures[i].check;
}

TEST(RunSuite, FailureRecordsTruncatedButCounted) {
    auto c = small_config(20);
    c.tolerance = Tolerance{0.0, -1e-3};
    c.max_failure_records = 5;
    const auto r = run_suite(c);
    EXPECT_EQ(r.failures.size(), 5u);
    EXPECT_GT(r.total_failures, 5u);
    c.threads = 3;
    EXPECT_EQ(dump(to_json(r)), dump(to_json(run_suite(c))));
}

TEST(SuiteReport, MergeIsAssociative) {
    auto c = small_config(30);
    c.tolerance = Tolerance{0.0, -1e-3};
    std::vector<SuiteReport> parts;
    for (std::uint64_t seed : {1, 2, 3}) {
        c.seed = seed;
        parts.push_back(run_suite(c));
    }
    SuiteReport left = parts[0];
    left.merge(parts[1], 50);
    left.merge(parts[2], 50);
    SuiteReport right_tail = parts[1];
    right_tail.merge(parts[2], 50);
    SuiteReport right = parts[0];
    right.merge(right_tail, 50);
    left.seed = right.seed = 0;
    EXPECT_EQ(dump(to_json(left)), dump(to_json(right)));
}
