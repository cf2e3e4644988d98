#include <array>

#include "hd/frob.hpp"

namespace hd {

FrobLift build_lift_mod_p(const CurveContext& ctx) {
    CurveContext c = ctx.with_precision(1);
    const PrimePower& pm = c.modulus();
    const uint64_t p = pm.p();
    ResidueInt lambda = c.lambda0();
    UPoly integrand = c.f().pow((p - 1) / 2) * lambda - UPoly::monomial(ResidueInt::one(pm), p - 1);
    return {c, FracPoly::polynomial(antiderivative(integrand), c.f()), lambda};
}

UPoly y_poly(const FrobLift& lift) {
    CurveContext c = lift.ctx.with_precision(1);
    FracPoly Z = lift.Z.reduce_to(1);
    if (Z.f_exp() != 0) throw Error(ErrorCode::InvalidArgument, "Y is only formed for polynomial Z");
    const uint64_t p = c.p();
    UPoly g = UPoly(c.modulus(), {c.a_int(), 0, 3}).pow(p);
    return k_poly(c) + g * Z.num();
}

namespace {

// Solve M v = rhs over F_p, M given by columns.
std::array<ResidueInt, 3> solve3(const std::array<std::array<ResidueInt, 3>, 3>& cols,
                                 const std::array<ResidueInt, 3>& rhs) {
    // augmented rows
    std::array<std::array<ResidueInt, 4>, 3> A;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = cols[j][i];
        A[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int i = col; i < 3; ++i)
            if (!A[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error(ErrorCode::SingularSystem, "mu system is singular mod p");
        std::swap(A[col], A[piv]);
        ResidueInt inv = A[col][col].inverse();
        for (int j = col; j < 4; ++j) A[col][j] *= inv;
        for (int i = 0; i < 3; ++i) {
            if (i == col || A[i][col].is_zero()) continue;
            ResidueInt t = A[i][col];
            for (int j = col; j < 4; ++j) A[i][j] -= t * A[col][j];
        }
    }
    return {A[0][3], A[1][3], A[2][3]};
}

std::array<ResidueInt, 3> coords(const UPoly& v, const UPoly& f) {
    UPoly r = v.rem(f);
    return {r.coeff(0), r.coeff(1), r.coeff(2)};
}

}  // namespace

MuCorrection mu_correct(const FrobLift& lift) {
    CurveContext c = lift.ctx.with_precision(1);
    const PrimePower& pm = c.modulus();
    const uint64_t p = pm.p();
    const UPoly f = c.f();
    UPoly g = UPoly(pm, {c.a_int(), 0, 3}).pow(p);
    auto r = coords(y_poly(lift), f);
    std::array<std::array<ResidueInt, 3>, 3> cols = {coords(g, f), coords(g.shift(p), f), coords(g.shift(2 * p), f)};
    auto mu = solve3(cols, {-r[0], -r[1], -r[2]});
    return {mu[0], mu[1], mu[2]};
}

FrobLift apply_mu(const FrobLift& lift, const MuCorrection& mu) {
    CurveContext c = lift.ctx.with_precision(1);
    const uint64_t p = c.p();
    UPoly shift = UPoly::constant(mu.mu0) + UPoly::monomial(mu.mu1, p) + UPoly::monomial(mu.mu2, 2 * p);
    FracPoly Z = lift.Z.reduce_to(1) + FracPoly::polynomial(shift, c.f());
    return {c, Z, lift.lambda.reduce_to(1)};
}

ExtendabilityCertificate extendability_certificate(const FrobLift& lift) {
    CurveContext c = lift.ctx.with_precision(1);
    UPoly F = c.f().pow((c.p() + 1) / 2);
    auto [q, r] = y_poly(lift).divmod(F);
    ExtendabilityCertificate cert;
    cert.ok = r.is_zero();
    if (cert.ok) cert.cofactor = q;
    return cert;
}

bool eigen_forcing_check(const FrobLift& lift) {
    CurveContext c = lift.ctx.with_precision(1);
    return (lift.lambda.reduce_to(1) * c.hasse()).is_one();
}

}  // namespace hd
