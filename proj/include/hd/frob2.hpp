#pragma once

#include <array>
#include <vector>

#include "hd/forms.hpp"
#include "hd/frob.hpp"
#include "hd/recursion.hpp"

namespace hd {

/// The pivot indices (p+5)/2 and (p+7)/2 and the truncation point (p+3)/2.
inline int pivot5(uint64_t p) { return int(p + 5) / 2; }
inline int pivot7(uint64_t p) { return int(p + 7) / 2; }
inline int support_end(uint64_t p) { return int(p + 3) / 2; }
/// Past this row every term of the system vanishes identically.
inline int verification_bound(uint64_t p) { return int(p + 13) / 2; }

/// c_s, d_s, e_s, f_s read off as the x^{sp-1} coefficients of C, D, E, F
/// (C, E, F divided by θ, δb, δa). Mod p; NotOrdinary if H(a, b) ≡ 0.
SystemData<ResidueInt> system_data(const CurveContext& ctx);
/// Same for the universal pair (z4, z6) with λ0 = 1/H, over the given mod-p localizers.
SystemData<LocFrac> system_data_symbolic(const LocalizerSetPtr& loc);

/// Concrete c_s, d_s, e_s, f_s for given θ, δa, δb, all mod p.
struct SystemCoeffs {
    PrimePower pm;
    ResidueInt ap, bp;
    std::vector<ResidueInt> c, d, e, f;
    ResidueInt source(int s) const;
};
SystemCoeffs system_coeffs(const CurveContext& ctx, const ResidueInt& theta, const ResidueInt& da,
                           const ResidueInt& db);
SystemCoeffs evaluate_coeffs(const SystemData<ResidueInt>& sd, const ResidueInt& theta, const ResidueInt& da,
                             const ResidueInt& db);

using SolutionVector = std::vector<ResidueInt>;

/// v_1..v_T by forward recursion; BNotUnit, TOutOfRange.
SolutionVector solve_truncated(const SystemCoeffs& coeffs, const ResidueInt& v0, int T);
/// Row s of the system holds for v (entries past the end are zero).
bool row_holds(const SystemCoeffs& coeffs, const SolutionVector& v, int s);
/**
 * NotStabilized unless v_{(p+5)/2} ≡ v_{(p+7)/2} ≡ 0. Otherwise truncate after
 * (p+3)/2 and check rows 1..(p+13)/2, which certifies the whole system.
 */
bool stabilization_check(const SolutionVector& v, const SystemCoeffs& coeffs);
SolutionVector truncate_support(const SolutionVector& v, uint64_t p);

struct EigenSolution {
    ResidueInt v0, theta, det;
    SolutionVector v;  // truncated solution
};
/// The (v0, θ) making both pivots vanish; SigmaSingular if ψ_{(p+5)/2} ≡ 0.
EigenSolution solve_eigen(const CurveContext& ctx);

enum class Branch { Auto, General, A0, B0 };
const char* branch_name(Branch b);

struct Lift2 {
    FrobLift lift;
    ResidueInt theta;
    SolutionVector v;
    Branch branch = Branch::General;
};

/// Z = W + V(x^p) + p U/f^p and λ = λ0 (1 + p θ) at precision p^2.
FrobLift assemble_lift_mod_p2(const CurveContext& ctx, const SolutionVector& v, const ResidueInt& theta);
Lift2 build_lift_mod_p2(const CurveContext& ctx, Branch branch = Branch::Auto);
Lift2 build_lift_a0(const CurveContext& ctx);
Lift2 build_lift_b0(const CurveContext& ctx);
Branch select_branch(const CurveContext& ctx);

/// β1, β4 with d1 ≡ β1 b^p, d4 ≡ β4 at a = 0, and β = β1/3 + 2β4/3.
struct A0Constants {
    ResidueInt beta1, beta4, beta;
};
A0Constants a0_constants(uint64_t p);
/// α2, α4 with d2 ≡ α2 a^p, d4 ≡ α4 at b = 0, and α = α2/2 + α4/2.
struct B0Constants {
    ResidueInt alpha2, alpha4, alpha;
};
B0Constants b0_constants(uint64_t p);

/// Affine form c_one + c_da δa + c_db δb.
struct Affine3 {
    LocFrac one, da, db;
};

struct SymbolicEigen {
    uint64_t p = 0;
    LocalizerSetPtr loc;  // mod p, Ψ slot filled
    WPoly psi;            // Ψ_{(p+5)/2} with monomial content removed
    LocFrac det;
    Affine3 v0, theta;
    std::vector<AffineExpr<LocFrac>> v;  // rows 0..(p+7)/2
};
/// The symbolic eigen-solve over M_Σ with (a, b) = (z4, z6); p >= 11.
SymbolicEigen solve_eigen_symbolic(uint64_t p);
/// Θ at a concrete pair, with δa, δb from the Z_p specialization.
ResidueInt evaluate_theta(const SymbolicEigen& s, int64_t a, int64_t b);

struct LambdaReport {
    bool quasi_linear = false;
    bool weak_weight = false;
    bool reduces_to_inverse_hasse = false;
    std::array<int, 3> degrees{};  // of the coefficients of 1, δa, δb
    /// Experimental: Λ against the weight criterion mod p^2 (not asserted).
    bool weight_criterion_mod_p2 = false;
};
/// Λ = H^{-1}(1 + pΘ) as a tangential form mod p^2.
QuasiLinearForm lambda_form(const SymbolicEigen& s);
/// PropertyViolation (detail = clause 1, 2 or 3) if a clause fails.
LambdaReport lambda_properties(const SymbolicEigen& s);

}  // namespace hd
