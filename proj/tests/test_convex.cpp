#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "jensen/convex.hpp"
#include "jensen/serialization.hpp"

using namespace jensen;

namespace {

// Interior sampling interval per registry entry for the property tests.
std::pair<double, double> interior_range(const ConvexFunction& f) {
    if (f.is_scalar()) return {0.05, 20.0};
    return {-6.0, 6.0};
}

std::vector<ConvexFunction> registry_samples() {
    return {ConvexFunction::make("neg_log"),
            ConvexFunction::make("x_log_x"),
            ConvexFunction::make("power_p", {{"p", 1.0}}),
            ConvexFunction::make("power_p", {{"p", 3.5}}),
            ConvexFunction::make("neg_power_alpha", {{"alpha", 0.3}}),
            ConvexFunction::make("power_alpha", {{"alpha", 2.7}}),
            ConvexFunction::make("squared_norm"),
            ConvexFunction::make("log_sum_exp")};
}

Point random_point(const ConvexFunction& f, std::mt19937_64& rng) {
    const auto [lo, hi] = interior_range(f);
    std::uniform_real_distribution<double> u(lo, hi);
    const std::size_t d = f.is_scalar() ? 1 : std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    Point x(d);
    for (double& xj : x) xj = u(rng);
    return x;
}

}  // namespace

TEST(Evaluate, RegistryExamples) {
    EXPECT_EQ(evaluate(ConvexFunction::make("neg_log"), Point{1.0}), 0.0);
    EXPECT_EQ(evaluate(ConvexFunction::make("squared_norm"), Point{1.0, 2.0}), 5.0);
    EXPECT_NEAR(evaluate(ConvexFunction::make("x_log_x"), Point{2.0}), fixtures::kTwoLogTwo, 1e-15);
    EXPECT_NEAR(evaluate(ConvexFunction::make("log_sum_exp"), Point{0.0, 0.0}), std::log(2.0), 1e-15);
    EXPECT_EQ(evaluate(ConvexFunction::make("neg_power_alpha", {{"alpha", 0.5}}), Point{0.0}), 0.0);
}

TEST(Evaluate, DomainErrorNamesCoordinate) {
    const auto f = ConvexFunction::make("neg_log");
    try {
        evaluate(f, Point{0.0});
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.coordinate(), 0u);
        EXPECT_NE(std::string(e.what()).find("coordinate 0"), std::string::npos);
    }
    EXPECT_THROW(evaluate(f, Point{-1.0}), DomainError);
    EXPECT_THROW(evaluate(f, Point{1.0, 2.0}), InputError);
    EXPECT_THROW(evaluate(ConvexFunction::make("x_log_x"), Point{0.0}), DomainError);
    EXPECT_THROW(evaluate(ConvexFunction::make("squared_norm"), Point{}), InputError);
    EXPECT_THROW(evaluate(ConvexFunction::make("squared_norm"), Point{1.0, NAN}), DomainError);
}

TEST(Registry, ParameterValidation) {
    EXPECT_THROW(ConvexFunction::make("cosh"), InputError);
    EXPECT_THROW(ConvexFunction::make("power_p", {{"p", 0.5}}), InputError);
    EXPECT_THROW(ConvexFunction::make("neg_power_alpha", {{"alpha", 1.0}}), InputError);
    EXPECT_THROW(ConvexFunction::make("power_alpha", {{"alpha", 1.0}}), InputError);
    EXPECT_THROW(ConvexFunction::make("neg_log", {{"p", 2.0}}), InputError);
    EXPECT_EQ(ConvexFunction::make("power_p").params().at("p"), 2.0);
    EXPECT_EQ(ConvexFunction::registry_names().size(), 7u);
}

TEST(Registry, JsonRoundTrip) {
    for (const auto& f : registry_samples()) EXPECT_EQ(function_from_json(parse_json(dump(to_json(f)))), f);
    const auto f = function_from_json(parse_json(R"({"name":"power_p","params":{"p":3}})"));
    EXPECT_EQ(f.params().at("p"), 3.0);
    EXPECT_THROW(function_from_json(parse_json(R"({"params":{}})")), InputError);
    EXPECT_THROW(function_from_json(parse_json(R"({"name":"power_p","params":{"p":"x"}})")), InputError);
}

TEST(Gradient, Examples) {
    EXPECT_EQ(gradient(ConvexFunction::make("squared_norm"), Point{1.0, 2.0}), (Point{2.0, 4.0}));
    EXPECT_EQ(gradient(ConvexFunction::make("neg_log"), Point{2.0}), Point{-0.5});

    // central difference oracle, step 1e-6
    const auto cube = ConvexFunction::make("power_p", {{"p", 3.0}});
    const double h = 1e-6;
    const double oracle = (std::pow(2.0 + h, 3.0) - std::pow(2.0 - h, 3.0)) / (2 * h);
    EXPECT_NEAR(oracle, 12.0, 1e-6);
    EXPECT_NEAR(gradient(cube, Point{2.0})[0], oracle, 1e-6);
    EXPECT_EQ(gradient(cube, Point{2.0})[0], 12.0);
}

TEST(Gradient, BoundaryRules) {
    EXPECT_THROW(gradient(ConvexFunction::make("neg_log"), Point{0.0}), DomainError);
    EXPECT_THROW(gradient(ConvexFunction::make("neg_power_alpha"), Point{0.0}), DomainError);
    // x^p, p >= 1, keeps a finite one-sided derivative at 0
    EXPECT_EQ(gradient(ConvexFunction::make("power_p", {{"p", 2.0}}), Point{0.0})[0], 0.0);
    EXPECT_EQ(gradient(ConvexFunction::make("power_p", {{"p", 1.0}}), Point{0.0})[0], 1.0);
}

TEST(NumericGradient, Examples) {
    const Point g = numeric_gradient(ConvexFunction::make("squared_norm"), Point{1.0, 2.0}, 1e-5);
    EXPECT_NEAR(g[0], 2.0, 1e-9);
    EXPECT_NEAR(g[1], 4.0, 1e-9);
    EXPECT_NEAR(numeric_gradient(ConvexFunction::make("neg_log"), Point{2.0}, 1e-5)[0], -0.5, 1e-8);
    EXPECT_NEAR(numeric_gradient(ConvexFunction::make("x_log_x"), Point{1.0}, 1e-5)[0], 1.0, 1e-8);
    EXPECT_THROW(numeric_gradient(ConvexFunction::make("neg_log"), Point{1.0}, 0.0), InputError);
}

TEST(GradientCheck, Examples) {
    EXPECT_TRUE(gradient_check(ConvexFunction::make("squared_norm"), Point{1.0, 2.0}, 1e-5, 1e-6).pass);
    const auto r = gradient_check(ConvexFunction::make("neg_power_alpha", {{"alpha", 0.5}}), Point{4.0}, 1e-6, 1e-6);
    EXPECT_TRUE(r.pass);
    EXPECT_DOUBLE_EQ(r.analytic[0], -0.25);
    EXPECT_THROW(gradient_check(ConvexFunction::make("neg_log"), Point{1e-8}, 1e-5, 1e-6), DomainError);
}

TEST(ConvexityProperties, MidpointAndGradientInequality) {
    std::mt19937_64 rng(20240611);
    for (const auto& f : registry_samples()) {
        for (int trial = 0; trial < 300; ++trial) {
            Point x = random_point(f, rng);
            Point y = random_point(f, rng);
            y.resize(x.size(), 0.5);
            Point mid(x.size()), diff(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) {
                mid[j] = 0.5 * (x[j] + y[j]);
                diff[j] = x[j] - y[j];
            }
            const double fx = f.value(x), fy = f.value(y);
            EXPECT_LE(f.value(mid), 0.5 * (fx + fy) + 1e-12 * (1 + std::abs(fx) + std::abs(fy))) << f.name();
            const double linear = dot(f.gradient(y), diff);
            const double scale = 1 + std::abs(fx) + std::abs(fy) + std::abs(linear);
            EXPECT_GE(fx - fy, linear - 1e-10 * scale) << f.name();
        }
    }
}

TEST(ConvexityProperties, AnalyticMatchesNumericGradient) {
    std::mt19937_64 rng(7);
    for (const auto& f : registry_samples()) {
        for (int trial = 0; trial < 200; ++trial) {
            const Point x = random_point(f, rng);
            const auto r = gradient_check(f, x, 1e-5, 1e-6);
            EXPECT_TRUE(r.pass) << f.name() << " max deviation " << r.max_deviation;
        }
    }
}
