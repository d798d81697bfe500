#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "speh/lfactor.hpp"
#include "speh/normalization.hpp"

using speh::HalfInt;
using speh::LFactorProduct;
using speh::PoleMultiset;

namespace {

HalfInt h(int doubled) { return HalfInt::from_doubled(doubled); }

LFactorProduct random_product(std::mt19937_64& rng, int max_factors = 20) {
    std::uniform_int_distribution<int> count(0, max_factors), shift(-20, 20), exp(-3, 3);
    LFactorProduct p;
    for (int i = count(rng); i > 0; --i) p.multiply_factor(h(shift(rng)), exp(rng));
    return p;
}

}  // namespace

TEST(LFactorProduct, MultiplicationExamples) {
    EXPECT_EQ(LFactorProduct({{0, 1}}) * LFactorProduct({{1, 1}}), LFactorProduct({{0, 1}, {1, 1}}));
    EXPECT_TRUE((LFactorProduct({{0, 1}}) * LFactorProduct({{0, -1}})).is_one());

    speh::InductionProblem p{1, 1, 1, 1};
    EXPECT_EQ(speh::alpha(p) * speh::beta(p).inverse(), LFactorProduct({{0, 1}, {1, -1}}));
}

TEST(LFactorProduct, DivisionExamples) {
    LFactorProduct x{{h(3), 2}, {h(-1), -1}};
    EXPECT_TRUE((x / x).is_one());
    EXPECT_EQ(LFactorProduct({{0, 2}}) / LFactorProduct({{0, 1}}), LFactorProduct({{0, 1}}));

    speh::InductionProblem p{1, 1, 1, 1};
    EXPECT_EQ(speh::beta(p), LFactorProduct({{1, 1}}));
    EXPECT_EQ(speh::alpha(p) / speh::beta(p), LFactorProduct({{0, 1}, {1, -1}}));
}

TEST(LFactorProduct, CanonicalFormDropsZeroExponents) {
    LFactorProduct x{{0, 2}, {0, -2}, {1, 1}};
    EXPECT_EQ(x.factors().size(), 1u);
    EXPECT_EQ(x.exponent(HalfInt(0)), 0);
}

TEST(LFactorProduct, PolePart) {
    EXPECT_EQ((LFactorProduct{{0, 1}, {1, -1}}).pole_part(), (PoleMultiset{{0, 1}}));
    EXPECT_EQ((LFactorProduct{{0, 1}, {1, -1}}).zero_part(), (PoleMultiset{{-1, 1}}));
    EXPECT_EQ((LFactorProduct{{h(3), 2}}).pole_part(), (PoleMultiset{{h(-3), 2}}));
}

TEST(LFactorProduct, CommonPolePart) {
    LFactorProduct x{{0, 2}, {1, 1}}, y{{0, 1}, {2, 3}};
    EXPECT_EQ(speh::common_pole_part(x, y), (PoleMultiset{{0, 1}}));
    EXPECT_TRUE(speh::common_pole_part(LFactorProduct{{0, 1}}, LFactorProduct{{1, 1}}).empty());
    EXPECT_EQ(speh::common_pole_part(x, x), x.pole_part());
}

TEST(LFactorProduct, EvaluateExamples) {
    EXPECT_DOUBLE_EQ(static_cast<double>(LFactorProduct({{0, 1}}).evaluate(2.0L, 1.0L)), 2.0);
    EXPECT_DOUBLE_EQ(static_cast<double>(LFactorProduct{}.evaluate(7.5L, -3.25L)), 1.0);
    // L(2)/L(3) at q = 3: (1 - 3^-3) / (1 - 3^-2) = 13/12
    long double g = LFactorProduct({{0, 1}, {1, -1}}).evaluate(3.0L, 2.0L);
    EXPECT_NEAR(static_cast<double>(g), 13.0 / 12.0, 1e-15);
}

TEST(LFactorProduct, EvaluateHalfShiftUsesSquareRoot) {
    // L(w + 1/2) at w = 0, q = 4: 1 / (1 - 4^{-1/2}) = 2
    EXPECT_NEAR(static_cast<double>(LFactorProduct({{h(1), 1}}).evaluate(4.0L, 0.0L)), 2.0, 1e-15);
}

TEST(LFactorProduct, EvaluateAtPoleThrows) {
    EXPECT_THROW(LFactorProduct({{0, 1}}).evaluate(2.0L, 0.0L), speh::EvaluationAtPole);
    EXPECT_THROW(LFactorProduct({{h(-3), 2}}).evaluate(5.0L, 1.5L), speh::EvaluationAtPole);
    // a zero there is fine
    EXPECT_EQ(LFactorProduct({{0, -1}}).evaluate(2.0L, 0.0L), 0.0L);
    EXPECT_THROW(LFactorProduct{}.evaluate(1.0L, 0.0L), std::invalid_argument);
}

TEST(LFactorProduct, TextRendering) {
    EXPECT_EQ(LFactorProduct{}.to_string(), "1");
    EXPECT_EQ(LFactorProduct({{0, 1}}).to_string(), "L(w)");
    EXPECT_EQ(LFactorProduct({{0, 1}, {1, -1}}).to_string(), "L(w)/L(w+1)");
    EXPECT_EQ(LFactorProduct({{h(-1), 2}, {1, -1}, {2, -1}}).to_string(), "L(w-1/2)^2/(L(w+1)*L(w+2))");
    EXPECT_EQ(LFactorProduct({{1, -3}}).to_string(), "1/L(w+1)^3");
}

TEST(LFactorProduct, RingLaws) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        LFactorProduct x = random_product(rng), y = random_product(rng), z = random_product(rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * LFactorProduct{}, x);
        EXPECT_EQ((x * y) / y, x);
    }
}

TEST(LFactorProduct, FactoredAndExpandedAgree) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> qdist(1.0, 100.0), wdist(-6.0, 6.0);
    int checked = 0;
    while (checked < 1000) {
        LFactorProduct x = random_product(rng), y = random_product(rng);
        long double q = qdist(rng);
        if (q <= 1.0L) continue;
        long double w = wdist(rng);
        // stay away from every shift so the values remain moderate
        bool near = false;
        for (const auto* p : {&x, &y})
            for (auto [n, e] : *p) near = near || std::fabs(w + n.to_long_double()) < 1e-3L;
        if (near) continue;
        long double lhs = (x * y).evaluate(q, w);
        long double rhs = x.evaluate(q, w) * y.evaluate(q, w);
        EXPECT_LE(std::fabs(lhs - rhs), 1e-10L * std::fabs(rhs));
        ++checked;
    }
}

TEST(LFactorProduct, PoleExtractionSoundness) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> qdist(1.5, 50.0);
    for (int i = 0; i < 200; ++i) {
        LFactorProduct x = random_product(rng, 8);
        long double q = qdist(rng);
        for (auto [n, e] : x) {
            if (e <= 0) continue;
            const long double pole = -n.to_long_double();
            for (long double delta : {1e-6L, -1e-6L}) {
                long double w = pole + delta;
                long double removed = std::pow(1.0L - std::pow(q, -(w + n.to_long_double())), e);
                long double regular = removed * x.evaluate(q, w);
                // shifts are distinct, so the rest of x is regular and nonzero here
                EXPECT_TRUE(std::isnormal(static_cast<double>(regular)));
                // growth rate: halving the distance multiplies |x| by ~2^e
                long double near = std::fabs(x.evaluate(q, pole + delta / 2));
                long double far = std::fabs(x.evaluate(q, w));
                EXPECT_NEAR(static_cast<double>(near / far), std::pow(2.0, e), 1e-3 * std::pow(2.0, e));
            }
        }
    }
}

TEST(LFactorProduct, DistinctShiftsNeverMerge) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        LFactorProduct x = random_product(rng);
        LFactorProduct y;
        for (auto [n, e] : random_product(rng))
            if (x.exponent(n) == 0) y.multiply_factor(n, e);
        EXPECT_EQ((x * y).factors().size(), x.factors().size() + y.factors().size());
    }
}

TEST(LFactorProduct, ShiftedMovesEveryFactor) {
    LFactorProduct x{{0, 1}, {h(3), -2}};
    EXPECT_EQ(x.shifted(h(-1)), (LFactorProduct{{h(-1), 1}, {1, -2}}));
}
