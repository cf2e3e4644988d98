#pragma once

#include <optional>

#include "hd/fracpoly.hpp"
#include "hd/upoly.hpp"

namespace hd {

/// The curve y^2 = x^3 + a x + b over Z/p^m, a and b integers (elements of Z_p).
class CurveContext {
public:
    /// SingularPair if Δ(a, b) is not a unit.
    CurveContext(uint64_t p, unsigned m, int64_t a, int64_t b);

    const PrimePower& modulus() const { return pm_; }
    uint64_t p() const { return pm_.p(); }
    int64_t a_int() const { return a_; }
    int64_t b_int() const { return b_; }
    ResidueInt a() const { return ResidueInt(pm_, a_); }
    ResidueInt b() const { return ResidueInt(pm_, b_); }
    ResidueInt delta_a() const { return delta_scalar(a_, pm_); }
    ResidueInt delta_b() const { return delta_scalar(b_, pm_); }
    /// x^3 + a x + b at precision m (default: the context's).
    UPoly f(unsigned m = 0) const;
    ResidueInt disc() const;
    ResidueInt hasse() const;
    bool ordinary() const { return hasse().is_unit(); }
    /// H(a, b)^{-1}; NotOrdinary if H(a, b) ≡ 0.
    ResidueInt lambda0() const;
    CurveContext with_precision(unsigned m) const { return CurveContext(pm_.p(), m, a_, b_); }

private:
    PrimePower pm_;
    int64_t a_, b_;
};

/// φ(x) = x^p + p Z with eigenvalue λ, all mod p^m.
struct FrobLift {
    CurveContext ctx;
    FracPoly Z;
    ResidueInt lambda;
};

/// (x^{3p} + a x^p + b - f^p)/p mod p^m.
UPoly k_poly(const CurveContext& ctx);
/// Same with a^p, b^p in place of φ(a) = a, φ(b) = b.
UPoly k0_poly(const CurveContext& ctx);
/// K0 for any integer pair, singular or not.
UPoly k0_poly(const PrimePower& pm, int64_t a, int64_t b);
/// G(x, Z) = 1 + p(K + (3x^{2p} + a) Z)/f^p + 3p^2 x^p Z^2/f^p + p^3 Z^3/f^p mod p^m.
FracPoly g_cubic(const CurveContext& ctx, const FracPoly& Z);

/// dZ/dx + x^{p-1} ≡ λ f^{(p-1)/2} G(x, Z)^{1/2} mod p^m.
bool lie_verify(const FrobLift& lift, unsigned m);

struct CommutatorReport {
    bool on_x = false;
    bool on_y = false;
    bool ok() const { return on_x && on_y; }
};

/// The λ-commutator (1/p) ε∘φ - λ φ∘ε on x and y, with φ(y) built from
/// φ(f) = f(x^p + p Z) by solving φ(y)^2 = φ(f) directly.
CommutatorReport lambda_commutator(const FrobLift& lift, unsigned m);
bool lie_verify_commutator(const FrobLift& lift, unsigned m);
/// The commutator applied to a polynomial u(x) in S[x], divided by y.
FracPoly commutator_on_polynomial(const FrobLift& lift, const UPoly& u, unsigned m);

/// Z = ∫ (λ0 f^{(p-1)/2} - x^{p-1}) dx mod p with λ0 = H(a, b)^{-1}.
FrobLift build_lift_mod_p(const CurveContext& ctx);

struct MuCorrection {
    ResidueInt mu0, mu1, mu2;
    bool is_zero() const { return mu0.is_zero() && mu1.is_zero() && mu2.is_zero(); }
};

/// K + (3x^2 + a)^p Z mod p.
UPoly y_poly(const FrobLift& lift);
/// Solve Y^μ ≡ 0 mod (f, p) in the basis {1, x, x^2} of S[x]/(f).
MuCorrection mu_correct(const FrobLift& lift);
FrobLift apply_mu(const FrobLift& lift, const MuCorrection& mu);

struct ExtendabilityCertificate {
    bool ok = false;
    UPoly cofactor;  // Y^μ / f^{(p+1)/2} mod p when ok
};
ExtendabilityCertificate extendability_certificate(const FrobLift& lift);

/// λ H(a, b) ≡ 1 mod p.
bool eigen_forcing_check(const FrobLift& lift);

}  // namespace hd
