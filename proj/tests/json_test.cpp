#include <gtest/gtest.h>

#include "speh/json.hpp"

using speh::HalfInt;
using speh::InductionProblem;
using speh::Json;
using speh::LFactorProduct;

TEST(Json, ProductRendering) {
    Json j = LFactorProduct{{0, 1}, {HalfInt::half(3), -2}};
    EXPECT_EQ(j.dump(), R"([{"shift":"0","exp":1},{"shift":"3/2","exp":-2}])");
}

TEST(Json, ProblemRendering) {
    Json j = InductionProblem{2, 3, 4, 5, 7};
    EXPECT_EQ(j.dump(), R"({"a":2,"b":3,"c":4,"d":5,"tau_rank":7})");
}

TEST(Json, VerdictRendering) {
    speh::PointVerdict v{HalfInt::half(-3), 1, 0, 0, true, speh::Tier::gcd_trivial_i};
    Json j = v;
    EXPECT_EQ(j.dump(),
              R"({"w":"-3/2","s":"-3/4","beta_order":1,"alpha_order":0,"dual_alpha_order":0,"reducible":true,"tier":"GCD_TRIVIAL_I"})");
}

TEST(Json, FactorReport) {
    Json j = speh::factor_report({3, 3, 3, 3});
    EXPECT_EQ(j["poles"]["beta"].dump(), R"({"-5":1,"-4":2,"-3":3,"-2":2,"-1":1})");
    EXPECT_EQ(j["poles"]["common"].dump(), R"({"-2":1,"-1":1})");
    ASSERT_TRUE(j.contains("c_psi"));
    EXPECT_TRUE(j["c_psi"]["factors"][0]["mirrored"].get<bool>());
    EXPECT_FALSE(speh::factor_report({1, 1, 2, 1}).contains("c_psi"));
}

TEST(Json, RoundTrips) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    InductionProblem p{a, b, c, d};
                    auto reparse = [](const Json& j) { return Json::parse(j.dump()); };

                    EXPECT_EQ(reparse(Json(p)).get<InductionProblem>(), p);
                    EXPECT_EQ(reparse(Json(speh::gamma(p))).get<LFactorProduct>(), speh::gamma(p));
                    EXPECT_EQ(reparse(Json(speh::candidate_points(p))).get<speh::PoleMultiset>(),
                              speh::candidate_points(p));
                    auto verdicts = speh::classify(p);
                    EXPECT_EQ(reparse(Json(verdicts)).get<std::vector<speh::PointVerdict>>(), verdicts);
                    auto cert = speh::certify_discrete(p);
                    EXPECT_EQ(reparse(Json(cert)).get<speh::HolomorphyCertificate>(), cert);
                    if (c == d) {
                        auto cp = speh::c_psi(p);
                        auto back = reparse(Json(cp)).get<speh::LocalCoefficient>();
                        EXPECT_EQ(back.mirrored, cp.mirrored);
                        EXPECT_EQ(back.denominator, cp.denominator);
                    }
                }
}
