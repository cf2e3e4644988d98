#include <gtest/gtest.h>

#include "hd/forms.hpp"
#include "hd/wxpoly.hpp"
#include "random_forms.hpp"

using namespace hd;

namespace {

// x^{p-1} coefficient of the expanded cubic power
WPoly hasse_by_expansion(const PrimePower& pm) {
    return WXPoly::universal_cubic(pm).pow(unsigned(pm.p() - 1) / 2).coeff(pm.p() - 1);
}

WPoly wp(uint64_t p, std::vector<std::tuple<int, int, int64_t>> t) { return WPoly::from_terms(PrimePower(p, 1), t); }

}  // namespace

TEST(Hasse, MatchesExpansion) {
    for (uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 37u}) {
        for (unsigned m : {1u, 2u}) {
            PrimePower pm(p, m);
            EXPECT_EQ(hasse_poly(pm), hasse_by_expansion(pm)) << p;
        }
        EXPECT_TRUE(hasse_poly(PrimePower(p, 1)).is_homogeneous(int(p) - 1));
        EXPECT_EQ(hasse_poly_integer(p).reduce(PrimePower(p, 2)), hasse_poly(PrimePower(p, 2)));
    }
}

TEST(Hasse, PaperValues) {
    EXPECT_EQ(hasse_poly(PrimePower(5, 1)), wp(5, {{1, 0, 2}}));
    EXPECT_EQ(hasse_poly(PrimePower(11, 1)), wp(11, {{1, 1, -2}}));
    EXPECT_EQ(hasse_poly(PrimePower(13, 1)), wp(13, {{3, 0, 7}, {0, 2, -63}}));
    EXPECT_EQ(hasse_poly(PrimePower(17, 1)), wp(17, {{4, 0, 2}, {1, 2, -2}}));
    PrimePower pm(11, 1);
    EXPECT_EQ(hasse_poly(pm).evaluate(ResidueInt(pm, 1), ResidueInt(pm, 1)).value(), 9u);
}

TEST(Discriminant, PaperValues) {
    EXPECT_EQ(discriminant(PrimePower(11, 1)), wp(11, {{3, 0, 4}, {0, 2, 16}}));
    EXPECT_EQ(discriminant(PrimePower(13, 1)), wp(13, {{3, 0, 4}, {0, 2, -12}}));
    EXPECT_EQ(discriminant(PrimePower(17, 1)), wp(17, {{3, 0, 4}, {0, 2, -24}}));
    PrimePower pm(13, 2);
    EXPECT_EQ(j_invariant(ResidueInt(pm, 1), ResidueInt(pm, 0)), ResidueInt(pm, 1728));
    try {
        PrimePower p5(5, 1);
        // Δ(1, 1) = 31 ≡ 1 mod 5, Δ(2, 1) = 59 ≡ 4, Δ(3, 1) = 135 ≡ 0
        (void)j_invariant(ResidueInt(p5, 3), ResidueInt(p5, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularPair);
    }
}

TEST(ClassifyPair, Examples) {
    EXPECT_EQ(classify_pair(13, 0, 1).kind, PairKind::Ordinary);
    EXPECT_EQ(classify_pair(5, 0, 1).kind, PairKind::NonSingular);
    EXPECT_EQ(classify_pair(5, 3, 1).kind, PairKind::Singular);
    EXPECT_EQ(classify_pair(13, 0, 0).kind, PairKind::Singular);
    auto c = classify_pair(13, 1, 1, {WPoly::z6(PrimePower(13, 1))});
    EXPECT_EQ(c.kind, PairKind::SigmaNonSingular);
    EXPECT_EQ(classify_pair(13, 1, 0, {WPoly::z6(PrimePower(13, 1))}).kind, PairKind::Ordinary);
}

TEST(WeightCriterion, NamedForms) {
    for (uint64_t p : {13u, 17u}) {
        PrimePower pm(p, 2);
        EXPECT_TRUE(form_z4_tangent(pm).is_well_formed());
        EXPECT_TRUE(weight_check_mod_p2(form_z4_tangent(pm)));
        EXPECT_TRUE(weight_check_mod_p2(form_z6_tangent(pm)));
        EXPECT_TRUE(weight_check_mod_p2(form_delta_tangent(pm)));
        EXPECT_TRUE(weight_check_mod_p2(lambda1_form(pm)));
        EXPECT_TRUE(lambda1_form(pm).is_well_formed());
        PrimePower p1(p, 1);
        EXPECT_TRUE(form_f11(p1).is_well_formed());
        EXPECT_TRUE(weight_check_mod_p(form_f11(p1)));
        EXPECT_FALSE(form_f11_printed(p1).is_well_formed());
        EXPECT_FALSE(weight_check_mod_p(form_f11_printed(p1)));
        EXPECT_TRUE(weight_check_mod_p(hasse_form(p1)));
    }
}

TEST(WeightCriterion, TrivialCases) {
    PrimePower pm(13, 2);
    auto loc = standard_localizers(pm);
    auto loc1 = loc->reduced(1);
    auto one = QuasiLinearForm::make_tangential(0, LocFrac::constant(loc, 1), LocFrac::zero(loc1), LocFrac::zero(loc1));
    EXPECT_FALSE(weight_check_mod_p2(one));
    EXPECT_TRUE(weight_check_mod_p(one));
    try {
        (void)weight_check_mod_p2(form_f11(PrimePower(13, 1)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTangential);
    }
}

TEST(WeightProbe, NamedExamples) {
    std::mt19937_64 rng(21);
    for (uint64_t p : {13u, 17u}) {
        PrimePower pm(p, 2);
        auto loc = standard_localizers(pm);
        auto loc1 = loc->reduced(1);
        auto one = QuasiLinearForm::make_tangential(0, LocFrac::constant(loc, 1), LocFrac::zero(loc1), LocFrac::zero(loc1));
        auto l1 = lambda1_form(pm);
        auto h = hasse_form(pm);
        int done = 0;
        while (done < 20) {
            auto s = testkit::random_probe_sample(rng, pm, done % 2 == 0);
            if (!hasse_poly(PrimePower(p, 1)).evaluate(s.a.reduce_to(1), s.b.reduce_to(1)).is_unit()) continue;
            EXPECT_TRUE(weight_definition_probe(one, s.a, s.b, s.c, {0, 0}));
            EXPECT_TRUE(weight_definition_probe(l1, s.a, s.b, s.c, {1, -1}));
            EXPECT_TRUE(weight_definition_probe(h, s.a, s.b, s.c, {int64_t(p) - 1, 0}));
            ++done;
        }
    }
}

TEST(WeightProbe, Lambda1ReducesToInverseHasse) {
    PrimePower pm(13, 2);
    auto l1 = lambda1_form(pm);
    auto loc1 = l1.gamma_k.reduce_to(1).localizers();
    EXPECT_EQ(l1.gamma_k.reduce_to(1), LocFrac::inverse_power(loc1, Localizer::H, 1));
    EXPECT_TRUE(l1.gamma_4.reduce_to(1).is_zero());
    EXPECT_TRUE(l1.gamma_6.reduce_to(1).is_zero());
}

TEST(WeightProbe, CriterionAgreesWithDefinition) {
    std::mt19937_64 rng(22);
    for (uint64_t p : {13u, 17u}) {
        for (int t = 0; t < 10; ++t) {
            bool satisfy = t % 2 == 0;
            auto F = testkit::random_tangential_form(rng, p, satisfy);
            ASSERT_TRUE(F.is_well_formed());
            bool crit = weight_check_mod_p2(F);
            EXPECT_EQ(crit, satisfy);
            bool all = true;
            for (int s = 0; s < 20; ++s) {
                auto smp = testkit::random_probe_sample(rng, F.modulus(), s % 2 == 0);
                all = all && weight_definition_probe(F, smp.a, smp.b, smp.c, {F.k + int64_t(p), -1});
            }
            EXPECT_EQ(crit, all);

            auto G = testkit::random_form_mod_p(rng, p, satisfy);
            ASSERT_TRUE(G.is_well_formed());
            bool crit1 = weight_check_mod_p(G);
            EXPECT_EQ(crit1, satisfy);
            bool all1 = true;
            for (int s = 0; s < 20; ++s) {
                auto smp = testkit::random_probe_sample(rng, G.modulus(), s % 2 == 0);
                all1 = all1 && weight_definition_probe(G, smp.a, smp.b, smp.c, {G.k + int64_t(p), -1});
            }
            EXPECT_EQ(crit1, all1);
        }
    }
}

TEST(WeightProbe, F11Variants) {
    std::mt19937_64 rng(23);
    PrimePower pm(13, 1);
    auto good = form_f11(pm), bad = form_f11_printed(pm);
    bool all_good = true, all_bad = true;
    const int64_t p = 13;
    for (int s = 0; s < 20; ++s) {
        auto smp = testkit::random_probe_sample(rng, pm, s % 2 == 0);
        all_good = all_good && weight_definition_probe(good, smp.a, smp.b, smp.c, {-p, -1});
        all_bad = all_bad && weight_definition_probe(bad, smp.a, smp.b, smp.c, {-p, -1});
    }
    EXPECT_TRUE(all_good);
    EXPECT_FALSE(all_bad);
}
