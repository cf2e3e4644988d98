#include <gtest/gtest.h>

#include <random>

#include "hd/forms.hpp"
#include "hd/frob.hpp"

using namespace hd;

namespace {

FrobLift hand_lift(uint64_t p, unsigned m, int64_t a, int64_t b, const std::vector<int64_t>& z, int64_t lambda) {
    CurveContext c(p, m, a, b);
    return {c, FracPoly::polynomial(UPoly(c.modulus(), z), c.f()), ResidueInt(c.modulus(), lambda)};
}

std::vector<std::pair<int64_t, int64_t>> nonsingular_pairs(uint64_t p) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t a = 0; a < int64_t(p); ++a)
        for (int64_t b = 0; b < int64_t(p); ++b)
            if (classify_pair(p, a, b).kind != PairKind::Singular) out.push_back({a, b});
    return out;
}

}  // namespace

TEST(KPoly, Examples) {
    PrimePower pm(5, 1);
    EXPECT_TRUE(k0_poly(pm, 0, 0).is_zero());
    // (x^3 + 1)^5 = sum C(5, k) x^{3k}, so K0 = -(x^3 + 2x^6 + 2x^9 + x^12)
    EXPECT_EQ(k0_poly(pm, 0, 1), UPoly(pm, {0, 0, 0, -1, 0, 0, -2, 0, 0, -2, 0, 0, -1}));
}

TEST(KPoly, DifferenceIsDeltaTerms) {
    std::mt19937_64 rng(31);
    for (uint64_t p : {5u, 7u, 13u, 17u}) {
        for (int t = 0; t < 20; ++t) {
            int64_t a = int64_t(rng() % 10000) - 5000, b = int64_t(rng() % 10000) - 5000;
            if (classify_pair(p, a, b).kind == PairKind::Singular) continue;
            CurveContext c(p, 1, a, b);
            UPoly diff = k_poly(c) - k0_poly(c) - UPoly::constant(c.delta_b()) - UPoly::monomial(c.delta_a(), p);
            EXPECT_TRUE(diff.is_zero());
            EXPECT_LE(k_poly(c).degree(), int(3 * p - 2));
        }
    }
}

TEST(GCubic, ReductionsAndTruncation) {
    std::mt19937_64 rng(32);
    const uint64_t p = 7;
    CurveContext c(p, 2, 2, 3);
    const PrimePower& pm = c.modulus();
    FracPoly one = FracPoly::polynomial(UPoly::constant(ResidueInt::one(pm)), c.f());
    FracPoly zero = FracPoly::polynomial(UPoly(pm), c.f());
    EXPECT_EQ(g_cubic(c, zero), one + FracPoly::polynomial(k_poly(c) * ResidueInt(pm, 7), c.f()).over_f(7));
    for (int t = 0; t < 5; ++t) {
        std::vector<int64_t> z(12);
        for (auto& v : z) v = int64_t(rng() % 49);
        FracPoly Z(UPoly(pm, z), c.f(), unsigned(t % 3));
        FracPoly G = g_cubic(c, Z);
        EXPECT_EQ(G.reduce_to(1), one.reduce_to(1));
        // mod p^2 the cubic is linear in Z, with a^p in place of a
        UPoly lin = UPoly::monomial(ResidueInt(pm, 3), 2 * p) + UPoly::constant(c.a().pow(p));
        FracPoly expect = one + ((FracPoly::polynomial(k_poly(c), c.f()) + Z * lin) * ResidueInt(pm, 7)).over_f(7);
        EXPECT_EQ(G, expect);
    }
}

TEST(LieVerify, WorkedExample) {
    FrobLift good = hand_lift(5, 1, 1, 0, {0, 0, 0, 1, 0, 0, 0, 4}, 3);
    EXPECT_TRUE(lie_verify(good, 1));
    EXPECT_TRUE(lie_verify_commutator(good, 1));
    FrobLift bumped = hand_lift(5, 1, 1, 0, {0, 0, 0, 1, 0, 0, 0, 4}, 4);
    EXPECT_FALSE(lie_verify(bumped, 1));
    EXPECT_FALSE(lie_verify_commutator(bumped, 1));
    FrobLift zero = hand_lift(5, 1, 1, 0, {}, 0);
    EXPECT_FALSE(lie_verify(zero, 1));
    EXPECT_FALSE(lie_verify_commutator(zero, 1));
}

TEST(LieVerify, CommutatorOnPolynomials) {
    FrobLift good = hand_lift(5, 1, 1, 0, {0, 0, 0, 1, 0, 0, 0, 4}, 3);
    PrimePower pm(5, 1);
    EXPECT_TRUE(commutator_on_polynomial(good, UPoly(pm, {3}), 1).is_zero());
    EXPECT_TRUE(commutator_on_polynomial(good, UPoly(pm, {1, 2, 0, 4}), 1).is_zero());
    FrobLift bad = hand_lift(5, 1, 1, 0, {0, 1}, 2);
    EXPECT_TRUE(commutator_on_polynomial(bad, UPoly(pm, {2}), 1).is_zero());
    EXPECT_FALSE(commutator_on_polynomial(bad, UPoly(pm, {0, 1}), 1).is_zero());
}

TEST(LieVerify, AgreesWithCommutatorOnRandomLifts) {
    std::mt19937_64 rng(33);
    for (uint64_t p : {5u, 7u, 11u, 13u}) {
        for (unsigned m : {1u, 2u}) {
            for (int t = 0; t < 20; ++t) {
                int64_t a = int64_t(rng() % 500), b = int64_t(rng() % 500);
                if (classify_pair(p, a, b).kind == PairKind::Singular) continue;
                CurveContext c(p, m, a, b);
                const PrimePower& pm = c.modulus();
                auto make = [&]() -> FrobLift {
                    if (t % 2 == 0 && c.ordinary()) {
                        // a true lift mod p, lifted naively to higher precision
                        FrobLift base = build_lift_mod_p(c);
                        return {c, FracPoly::polynomial(base.Z.num().lift_to(m), c.f()), base.lambda.lift_to(m)};
                    }
                    std::vector<int64_t> z(3 * p / 2 + 2);
                    for (auto& v : z) v = int64_t(rng() % pm.modulus());
                    return {c, FracPoly(UPoly(pm, z), c.f(), unsigned(rng() % 2)),
                            ResidueInt::from_raw(pm, rng() % pm.modulus())};
                };
                FrobLift lift = make();
                EXPECT_EQ(lie_verify(lift, m), lie_verify_commutator(lift, m)) << p << " " << a << " " << b;
                auto rep = lambda_commutator(lift, m);
                EXPECT_EQ(rep.on_x, rep.on_y);
            }
        }
    }
}

TEST(BuildLiftModP, Examples) {
    FrobLift l = build_lift_mod_p(CurveContext(5, 1, 1, 0));
    EXPECT_EQ(l.Z.num(), UPoly(PrimePower(5, 1), {0, 0, 0, 1, 0, 0, 0, 4}));
    EXPECT_EQ(l.lambda.value(), 3u);
    FrobLift l13 = build_lift_mod_p(CurveContext(13, 1, 0, 1));
    EXPECT_TRUE(lie_verify(l13, 1));
    try {
        (void)build_lift_mod_p(CurveContext(5, 1, 0, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotOrdinary);
    }
}

TEST(BuildLiftModP, NotOrdinaryExactlyOnSupersingularLocus) {
    for (uint64_t p : {5u, 7u, 11u, 13u}) {
        for (auto [a, b] : nonsingular_pairs(p)) {
            CurveContext c(p, 1, a, b);
            bool threw = false;
            try {
                (void)build_lift_mod_p(c);
            } catch (const Error& e) {
                threw = e.code() == ErrorCode::NotOrdinary;
            }
            EXPECT_EQ(threw, hasse_poly(c.modulus()).evaluate(c.a(), c.b()).is_zero());
        }
    }
}

TEST(MuCorrection, WorkedExample) {
    FrobLift l = build_lift_mod_p(CurveContext(5, 1, 1, 0));
    MuCorrection mu = mu_correct(l);
    FrobLift lc = apply_mu(l, mu);
    const UPoly f = l.ctx.f();
    EXPECT_TRUE(y_poly(lc).rem(f).is_zero());
    EXPECT_TRUE(mu_correct(lc).is_zero());
    EXPECT_TRUE(lie_verify(lc, 1));
    auto cert = extendability_certificate(lc);
    ASSERT_TRUE(cert.ok);
    EXPECT_EQ(cert.cofactor * f.pow(3), y_poly(lc));
    // a generic shift breaks the divisibility
    MuCorrection off{mu.mu0 + ResidueInt::one(mu.mu0.modulus()), mu.mu1, mu.mu2};
    EXPECT_FALSE(extendability_certificate(apply_mu(l, off)).ok);
}

TEST(MuCorrection, ExhaustiveSmallPrimes) {
    for (uint64_t p : {5u, 7u, 11u}) {
        for (auto [a, b] : nonsingular_pairs(p)) {
            CurveContext c(p, 1, a, b);
            if (!c.ordinary()) continue;
            FrobLift l = build_lift_mod_p(c);
            ASSERT_TRUE(lie_verify(l, 1));
            ASSERT_TRUE(lie_verify_commutator(l, 1));
            ASSERT_TRUE(eigen_forcing_check(l));
            FrobLift lc = apply_mu(l, mu_correct(l));
            EXPECT_TRUE(lie_verify(lc, 1));
            EXPECT_EQ(lc.Z.num().derivative(), l.Z.num().derivative());
            EXPECT_TRUE(extendability_certificate(lc).ok) << p << " " << a << " " << b;
            EXPECT_TRUE(mu_correct(lc).is_zero());
        }
    }
}

TEST(EigenForcing, PerturbedEigenvalueFailsVerification) {
    for (uint64_t p : {7u, 13u}) {
        for (auto [a, b] : nonsingular_pairs(p)) {
            CurveContext c(p, 1, a, b);
            if (!c.ordinary()) continue;
            FrobLift l = build_lift_mod_p(c);
            for (int64_t d = 1; d < 3; ++d) {
                FrobLift bad{l.ctx, l.Z, l.lambda + ResidueInt(l.lambda.modulus(), d)};
                EXPECT_FALSE(eigen_forcing_check(bad));
                EXPECT_FALSE(lie_verify(bad, 1));
            }
        }
    }
}
