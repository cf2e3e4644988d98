#include <gmpxx.h>

#include "hd/frob.hpp"
#include "hd/qpoly.hpp"

namespace hd {

namespace {

// binom(1/2, k) mod p^m
ResidueInt half_binomial(const PrimePower& pm, unsigned k) {
    mpq_class c = 1;
    for (unsigned i = 0; i < k; ++i) c *= mpq_class(1, 2) - i;
    for (unsigned i = 2; i <= k; ++i) c /= i;
    return reduce_rational(c, pm);
}

struct Reduced {
    CurveContext ctx;
    FracPoly Z;
    ResidueInt lambda;
    UPoly f;
};

Reduced reduce_lift(const FrobLift& lift, unsigned m) {
    if (m < 1 || m > lift.ctx.modulus().m())
        throw Error(ErrorCode::InvalidArgument, "verification precision exceeds the lift's precision");
    CurveContext c = lift.ctx.with_precision(m);
    return {c, lift.Z.reduce_to(m), lift.lambda.reduce_to(m), c.f()};
}

}  // namespace

bool lie_verify(const FrobLift& lift, unsigned m) {
    Reduced r = reduce_lift(lift, m);
    const PrimePower& pm = r.ctx.modulus();
    const uint64_t p = pm.p();
    FracPoly lhs = r.Z.derivative() + FracPoly::polynomial(UPoly::monomial(ResidueInt::one(pm), p - 1), r.f);
    // G ≡ 1 mod p, so sqrt(G) = sum_k binom(1/2, k) (G-1)^k truncates at k = m-1
    FracPoly u = g_cubic(r.ctx, r.Z) - FracPoly::polynomial(UPoly::constant(ResidueInt::one(pm)), r.f);
    FracPoly root = FracPoly::polynomial(UPoly::constant(ResidueInt::one(pm)), r.f);
    FracPoly upow = root;
    for (unsigned k = 1; k < m; ++k) {
        upow = upow * u;
        root = root + upow * half_binomial(pm, k);
    }
    FracPoly rhs = root * (r.f.pow((p - 1) / 2) * r.lambda);
    return lhs == rhs;
}

namespace {

struct CommutatorData {
    FracPoly phix;  // φ(x) mod p^m
    FracPoly T;     // δy = y T
    FracPoly Q;     // φ(y)/y
};

CommutatorData commutator_data(const Reduced& r) {
    const PrimePower& pm = r.ctx.modulus();
    const PrimePower g = pm.guard();
    const uint64_t p = pm.p();
    const unsigned m = pm.m();
    const unsigned e = r.Z.f_exp();

    // φ(f) = f(x^p + pZ) over f^{3e}, computed mod p^{m+1}
    UPoly fg = r.ctx.f(g.m());
    UPoly fe = fg.pow(e);
    UPoly phix_num = UPoly::monomial(ResidueInt::one(g), p) * fe + r.Z.num().lift_to(g.m()) * ResidueInt(g, int64_t(p));
    UPoly phif = phix_num.pow(3) + phix_num * fe * fe * ResidueInt(g, r.ctx.a_int()) +
                 fe.pow(3) * ResidueInt(g, r.ctx.b_int());
    UPoly ynum = (phif - fg.pow(p) * fe.pow(3)).divide_by_p();
    FracPoly Y(ynum, r.f, 3 * e);

    // 2 f^{(p+1)/2} T + p f T^2 = Y, solved by fixed-point iteration
    const ResidueInt P(pm, int64_t(p));
    const ResidueInt half = ResidueInt(pm, 2).inverse();
    const unsigned h = unsigned(p + 1) / 2;
    FracPoly T = FracPoly::polynomial(UPoly(pm), r.f);
    for (unsigned it = 0; it < m; ++it) T = ((Y - T * T * r.f * P) * half).over_f(h);

    FracPoly Q = FracPoly::polynomial(r.f.pow((p - 1) / 2), r.f) + T * P;
    FracPoly phix(UPoly::monomial(ResidueInt::one(pm), p) * r.f.pow(e) + r.Z.num() * P, r.f, e);
    return {phix, T, Q};
}

}  // namespace

CommutatorReport lambda_commutator(const FrobLift& lift, unsigned m) {
    Reduced r = reduce_lift(lift, m);
    const PrimePower& pm = r.ctx.modulus();
    const uint64_t p = pm.p();
    CommutatorData d = commutator_data(r);
    const ResidueInt half = ResidueInt(pm, 2).inverse();
    CommutatorReport rep;

    // on x: (1/p) y d/dx(x^p + pZ) - λ φ(y)  =  y (x^{p-1} + Z' - λ Q)
    FracPoly xside = r.Z.derivative() + FracPoly::polynomial(UPoly::monomial(ResidueInt::one(pm), p - 1), r.f);
    rep.on_x = xside == d.Q * r.lambda;

    // on y: (1/p) ε(y Q') with φ(y) = y^p + p y T, against λ φ(f'/2)
    UPoly fp = r.f.derivative();
    FracPoly lhs = FracPoly::polynomial(r.f.pow((p - 1) / 2) * fp * half, r.f) + d.T * fp * half +
                   d.T.derivative() * r.f;
    FracPoly three_phix2_a = d.phix * d.phix * ResidueInt(pm, 3) +
                             FracPoly::polynomial(UPoly::constant(r.ctx.a()), r.f);
    rep.on_y = lhs == three_phix2_a * (r.lambda * half);
    return rep;
}

bool lie_verify_commutator(const FrobLift& lift, unsigned m) { return lambda_commutator(lift, m).ok(); }

FracPoly commutator_on_polynomial(const FrobLift& lift, const UPoly& u, unsigned m) {
    Reduced r = reduce_lift(lift, m);
    const PrimePower& pm = r.ctx.modulus();
    CommutatorData d = commutator_data(r);
    // [ε, φ]_λ u = u'(φ(x)) (y (x^{p-1} + Z') - λ φ(y)); report it divided by y
    UPoly du = u.reduce_to(m).derivative();
    FracPoly acc = FracPoly::polynomial(UPoly(pm), r.f);
    for (int i = du.degree(); i >= 0; --i)
        acc = acc * d.phix + FracPoly::polynomial(UPoly::constant(du.coeff(std::size_t(i))), r.f);
    FracPoly xside = r.Z.derivative() +
                     FracPoly::polynomial(UPoly::monomial(ResidueInt::one(pm), pm.p() - 1), r.f);
    return acc * (xside - d.Q * r.lambda);
}

}  // namespace hd
