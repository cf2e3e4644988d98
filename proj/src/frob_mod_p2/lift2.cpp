#include "hd/frob2.hpp"

namespace hd {

const char* branch_name(Branch b) {
    switch (b) {
    case Branch::Auto: return "auto";
    case Branch::General: return "general";
    case Branch::A0: return "a0";
    case Branch::B0: return "b0";
    }
    return "?";
}

FrobLift assemble_lift_mod_p2(const CurveContext& ctx_in, const SolutionVector& v, const ResidueInt& theta) {
    const CurveContext ctx = ctx_in.with_precision(2);
    const PrimePower& pm2 = ctx.modulus();
    const PrimePower pm1 = pm2.with_exponent(1);
    const uint64_t p = pm2.p();
    const ResidueInt one1 = ResidueInt::one(pm1), one2 = ResidueInt::one(pm2);

    // λ = λ0 (1 + p θ) and W' = λ f^{(p-1)/2} - x^{p-1}; the x^{p-1} coefficient is p θ
    const ResidueInt th1 = theta.reduce_to(1);
    const ResidueInt lambda = ctx.lambda0() * (one2 + ResidueInt(pm2, int64_t(p)) * th1.lift_to(2));
    const UPoly f2 = ctx.f();
    const UPoly W = antiderivative(f2.pow((p - 1) / 2) * lambda - UPoly::monomial(one2, p - 1));

    // U' ≡ A + B + C + D + E + F mod p
    const UPoly f1 = f2.reduce_to(1);
    const UPoly fh = f1.pow((p - 1) / 2);
    const ResidueInt lambda0 = lambda.reduce_to(1);
    const UPoly base = fh * (lambda0 * half_integer(pm1, 1));
    UPoly V(pm1);
    for (std::size_t j = 0; j < v.size(); ++j) V.set_coeff(j, v[j].reduce_to(1));
    const UPoly Vxp = V.compose_xp();
    const UPoly xp = UPoly::monomial(one1, p);
    const UPoly lin = UPoly::monomial(ResidueInt(pm1, 3), 2 * p) + UPoly::constant(ctx.a().reduce_to(1).pow(p));
    const UPoly W0 = antiderivative(fh * lambda0 - UPoly::monomial(one1, p - 1));
    const UPoly K0 = k0_poly(pm1, ctx.a_int(), ctx.b_int());
    const ResidueInt da = ctx.delta_a().reduce_to(1), db = ctx.delta_b().reduce_to(1);

    UPoly rhs = -(UPoly::monomial(one1, p - 1) * f1.pow(p) * V.derivative().compose_xp());
    rhs += base * (lin * (Vxp + xp * th1) + K0 + lin * W0 + UPoly::constant(db) + xp * da);
    UPoly U(pm1);
    try {
        U = antiderivative(rhs);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotIntegrable) throw;
        throw Error(ErrorCode::InternalMismatch, "x^{sp-1} term survives in U'", e.detail());
    }

    const UPoly fp = f2.pow(p);
    const UPoly num = (W + Vxp.lift_to(2)) * fp + U.times_p_lifted();
    return FrobLift{ctx, FracPoly(num, f2, unsigned(p)), lambda};
}

Branch select_branch(const CurveContext& ctx) {
    if (ctx.b().reduce_to(1).is_zero()) return Branch::B0;
    if (ctx.a().reduce_to(1).is_zero()) return Branch::A0;
    return Branch::General;
}

Lift2 build_lift_mod_p2(const CurveContext& ctx, Branch branch) {
    if (branch == Branch::Auto) branch = select_branch(ctx);
    if (branch == Branch::A0) return build_lift_a0(ctx);
    if (branch == Branch::B0) return build_lift_b0(ctx);
    EigenSolution es = solve_eigen(ctx);
    return Lift2{assemble_lift_mod_p2(ctx, es.v, es.theta), es.theta, es.v, Branch::General};
}

A0Constants a0_constants(uint64_t p) {
    const SystemData<ResidueInt> sd = system_data(CurveContext(p, 1, 0, 1));
    A0Constants k{sd.at(sd.d, 1), sd.at(sd.d, 4), {}};
    const PrimePower& pm = sd.pm;
    k.beta = (k.beta1 + ResidueInt(pm, 2) * k.beta4) * ResidueInt(pm, 3).inverse();
    return k;
}

B0Constants b0_constants(uint64_t p) {
    const SystemData<ResidueInt> sd = system_data(CurveContext(p, 1, 1, 0));
    B0Constants k{sd.at(sd.d, 2), sd.at(sd.d, 4), {}};
    k.alpha = (k.alpha2 + k.alpha4) * half_integer(sd.pm, 1);
    return k;
}

Lift2 build_lift_a0(const CurveContext& ctx) {
    const uint64_t p = ctx.p();
    if (p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(p));
    if (p % 3 != 1) throw Error(ErrorCode::WrongResidueClass, "the a ≡ 0 branch needs p ≡ 1 mod 3", long(p));
    if (!ctx.a().reduce_to(1).is_zero()) throw Error(ErrorCode::InvalidArgument, "the a ≡ 0 branch needs a ≡ 0 mod p");
    const SystemData<ResidueInt> sd = system_data(ctx);
    if (!sd.bp.is_unit()) throw Error(ErrorCode::BNotUnit, "b ≡ 0 mod p");
    const PrimePower& pm = sd.pm;
    const ResidueInt da = ctx.delta_a().reduce_to(1), db = ctx.delta_b().reduce_to(1);
    // θ = -δb/(6 b^p) - β, v0 = 0
    const ResidueInt theta = -(db * (ResidueInt(pm, 6) * sd.bp).inverse()) - a0_constants(p).beta;
    const SystemCoeffs k = evaluate_coeffs(sd, theta, da, db);
    const SolutionVector v = solve_truncated(k, ResidueInt::zero(pm), pivot7(p));
    bool rows_ok = false;
    try {
        rows_ok = stabilization_check(v, k);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStabilized) throw;
        throw Error(ErrorCode::TheoremViolation, "v0 = 0 and θ = -δb/(6b^p) - β do not make the pivots vanish");
    }
    if (!rows_ok) throw Error(ErrorCode::InternalMismatch, "a ≡ 0 solution fails a row");
    SolutionVector w = truncate_support(v, p);
    return Lift2{assemble_lift_mod_p2(ctx, w, theta), theta, w, Branch::A0};
}

Lift2 build_lift_b0(const CurveContext& ctx) {
    const uint64_t p = ctx.p();
    if (p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(p));
    if (p % 4 != 1) throw Error(ErrorCode::WrongResidueClass, "the b ≡ 0 branch needs p ≡ 1 mod 4", long(p));
    if (!ctx.b().reduce_to(1).is_zero()) throw Error(ErrorCode::InvalidArgument, "the b ≡ 0 branch needs b ≡ 0 mod p");
    const SystemData<ResidueInt> sd = system_data(ctx);
    const PrimePower& pm = sd.pm;
    const ResidueInt da = ctx.delta_a().reduce_to(1), db = ctx.delta_b().reduce_to(1);
    const ResidueInt ap_inv = sd.ap.inverse();
    // θ = -δa/(4 a^p) - α
    const ResidueInt theta = -(da * ap_inv * ResidueInt(pm, 4).inverse()) - b0_constants(p).alpha;
    const SystemCoeffs k = evaluate_coeffs(sd, theta, da, db);

    // With b^p ≡ 0 row s reads (s - 3/2) a^p v_{s-1} ≡ (9/2 - s) v_{s-3} + sources, so it fixes v_{s-1}.
    const int k1 = int(p - 1) / 4 + 2;
    SolutionVector v;
    auto at = [&](int i) { return i >= 0 && i < int(v.size()) ? v[i] : ResidueInt::zero(pm); };
    for (int s = 1; s <= 2 * k1 + 1; ++s) {
        ResidueInt rhs = half_integer(pm, 9 - 2 * s) * at(s - 3) + k.source(s);
        ResidueInt lead = half_integer(pm, 2 * s - 3);
        if (lead.is_zero()) {
            if (!rhs.is_zero()) throw Error(ErrorCode::TheoremViolation, "degenerate row of the b ≡ 0 system fails", s);
            v.push_back(ResidueInt::zero(pm));
        } else {
            v.push_back(rhs * (lead * sd.ap).inverse());
        }
    }
    if (!v[3].is_zero()) throw Error(ErrorCode::TheoremViolation, "v_3 ≢ 0 for θ = -δa/(4a^p) - α");
    if (!v[2 * k1].is_zero()) throw Error(ErrorCode::TheoremViolation, "v_{2k1} ≢ 0", 2 * k1);
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    for (int s = 1; s <= int(v.size()) + 4; ++s)
        if (!row_holds(k, v, s)) throw Error(ErrorCode::InternalMismatch, "b ≡ 0 solution fails a row", s);
    return Lift2{assemble_lift_mod_p2(ctx, v, theta), theta, v, Branch::B0};
}

}  // namespace hd
