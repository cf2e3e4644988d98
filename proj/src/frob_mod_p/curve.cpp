#include "hd/forms.hpp"
#include "hd/frob.hpp"

namespace hd {

CurveContext::CurveContext(uint64_t p, unsigned m, int64_t a, int64_t b) : pm_(p, m), a_(a), b_(b) {
    if (!disc().is_unit())
        throw Error(ErrorCode::SingularPair,
                    "discriminant of (" + std::to_string(a) + ", " + std::to_string(b) + ") vanishes mod p");
}

UPoly CurveContext::f(unsigned m) const {
    PrimePower q = m ? pm_.with_exponent(m) : pm_;
    return UPoly(q, {b_, a_, 0, 1});
}

ResidueInt CurveContext::disc() const { return discriminant(pm_).evaluate(a(), b()); }

ResidueInt CurveContext::hasse() const { return hasse_poly(pm_).evaluate(a(), b()); }

ResidueInt CurveContext::lambda0() const {
    ResidueInt h = hasse();
    if (!h.is_unit())
        throw Error(ErrorCode::NotOrdinary,
                    "H(" + std::to_string(a_) + ", " + std::to_string(b_) + ") ≡ 0 mod " + std::to_string(p()));
    return h.inverse();
}

namespace {

// (x^{3p} + A x^p + B - f^p)/p from a computation mod p^{m+1}
UPoly k_generic(const PrimePower& g, const UPoly& fg, const ResidueInt& A, const ResidueInt& B) {
    const uint64_t p = g.p();
    UPoly top = UPoly::monomial(ResidueInt::one(g), 3 * p) + UPoly::monomial(A, p) + UPoly::constant(B);
    return (top - fg.pow(p)).divide_by_p();
}

}  // namespace

UPoly k_poly(const CurveContext& ctx) {
    const PrimePower g = ctx.modulus().guard();
    return k_generic(g, ctx.f(g.m()), ResidueInt(g, ctx.a_int()), ResidueInt(g, ctx.b_int()));
}

UPoly k0_poly(const PrimePower& pm, int64_t a, int64_t b) {
    const PrimePower g = pm.guard();
    ResidueInt A(g, a), B(g, b);
    return k_generic(g, UPoly(g, {b, a, 0, 1}), A.pow(pm.p()), B.pow(pm.p()));
}

UPoly k0_poly(const CurveContext& ctx) { return k0_poly(ctx.modulus(), ctx.a_int(), ctx.b_int()); }

FracPoly g_cubic(const CurveContext& ctx, const FracPoly& Z) {
    const PrimePower& pm = ctx.modulus();
    const uint64_t p = pm.p();
    const UPoly f = ctx.f();
    require_same(pm, Z.modulus());
    const ResidueInt P(pm, int64_t(p));
    FracPoly one = FracPoly::polynomial(UPoly::constant(ResidueInt::one(pm)), f);
    UPoly lin = UPoly::monomial(ResidueInt(pm, 3), 2 * p) + UPoly::constant(ctx.a());
    FracPoly t1 = (FracPoly::polynomial(k_poly(ctx), f) + Z * lin) * P;
    FracPoly t2 = Z * Z * UPoly::monomial(ResidueInt(pm, 3), p) * P * P;
    FracPoly t3 = Z * Z * Z * P * P * P;
    return one + (t1 + t2 + t3).over_f(unsigned(p));
}

}  // namespace hd
