#include "hd/frob2.hpp"

namespace hd {

namespace {

// P(z4^p, z6^p) -> P(z4, z6); InternalMismatch if an exponent is not a multiple of p.
WPoly untwist(const WPoly& w, int p) {
    std::vector<std::tuple<int, int, int64_t>> t;
    for (const auto& term : w.terms()) {
        if (term.e4 % p || term.e6 % p) throw Error(ErrorCode::InternalMismatch, "determinant is not a p-th power form");
        t.emplace_back(term.e4 / p, term.e6 / p, int64_t(term.c));
    }
    return WPoly::from_terms(w.modulus(), t);
}

LocFrac rewrap(const LocalizerSetPtr& loc, const LocFrac& x) { return LocFrac(loc, x.num(), x.den()); }

AffineExpr<LocFrac> rewrap(const LocalizerSetPtr& loc, const AffineExpr<LocFrac>& e) {
    return {rewrap(loc, e.alpha), rewrap(loc, e.beta), rewrap(loc, e.mu), rewrap(loc, e.nu), rewrap(loc, e.eta)};
}

}  // namespace

SymbolicEigen solve_eigen_symbolic(uint64_t p) {
    if (p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(p));
    const PrimePower pm(p, 1);
    const LocalizerSetPtr loc0 = standard_localizers(pm);
    const auto aff0 = solve_affine(system_data_symbolic(loc0), pivot7(p));
    const auto& a5 = aff0[pivot5(p)];
    const auto& a7 = aff0[pivot7(p)];
    const LocFrac det0 = (a5.alpha * a7.beta - a7.alpha * a5.beta).normalized();
    if (det0.is_zero()) throw Error(ErrorCode::SigmaSingular, "ψ_{(p+5)/2} vanishes identically mod p");

    SymbolicEigen out;
    out.p = p;
    WPoly psi = untwist(det0.num(), int(p));
    auto [c4, c6] = psi.monomial_content();
    out.psi = psi.mul_monomial(-c4, -c6);
    out.loc = standard_localizers(pm, out.psi);
    for (const auto& e : aff0) out.v.push_back(rewrap(out.loc, e));
    out.det = rewrap(out.loc, det0);

    const LocFrac inv = out.det.inverse();
    const auto& r5 = out.v[pivot5(p)];
    const auto& r7 = out.v[pivot7(p)];
    // α5 v0 + β5 θ = -ρ5, α7 v0 + β7 θ = -ρ7, slot by slot in (δa, δb, 1)
    auto v0_of = [&](const LocFrac& x5, const LocFrac& x7) { return ((x7 * r5.beta - x5 * r7.beta) * inv).normalized(); };
    auto th_of = [&](const LocFrac& x5, const LocFrac& x7) { return ((x5 * r7.alpha - x7 * r5.alpha) * inv).normalized(); };
    out.v0 = {v0_of(r5.eta, r7.eta), v0_of(r5.mu, r7.mu), v0_of(r5.nu, r7.nu)};
    out.theta = {th_of(r5.eta, r7.eta), th_of(r5.mu, r7.mu), th_of(r5.nu, r7.nu)};
    return out;
}

ResidueInt evaluate_theta(const SymbolicEigen& s, int64_t a, int64_t b) {
    const PrimePower pm(s.p, 1);
    const ResidueInt A(pm, a), B(pm, b);
    return s.theta.one.evaluate(A, B) + s.theta.da.evaluate(A, B) * delta_scalar(a, pm) +
           s.theta.db.evaluate(A, B) * delta_scalar(b, pm);
}

QuasiLinearForm lambda_form(const SymbolicEigen& s) {
    const PrimePower pm2(s.p, 2);
    const LocalizerSetPtr loc2 = standard_localizers(pm2, s.psi.lift_to(2));
    const LocalizerSetPtr loc1 = loc2->reduced(1);
    const LocFrac hinv2 = LocFrac::inverse_power(loc2, Localizer::H, 1);
    const LocFrac hinv1 = LocFrac::inverse_power(loc1, Localizer::H, 1);
    const LocFrac p_theta(loc2, s.theta.one.num().lift_to(2) * ResidueInt(pm2, int64_t(s.p)), s.theta.one.den());
    const LocFrac gk = hinv2 * (LocFrac::constant(loc2, 1) + p_theta);
    return QuasiLinearForm::make_tangential(1 - int(s.p), gk, hinv1 * rewrap(loc1, s.theta.da),
                                            hinv1 * rewrap(loc1, s.theta.db));
}

LambdaReport lambda_properties(const SymbolicEigen& s) {
    const int p = int(s.p);
    LambdaReport r;
    // (i) Θ is an M_Σ-combination of 1, δa, δb: z4 may only appear in a denominator if it divides Σ
    const bool z4_in_sigma = (s.loc->poly(Localizer::H) * s.psi).restrict_z4_zero().is_zero();
    r.quasi_linear = true;
    for (const LocFrac* c : {&s.theta.one, &s.theta.da, &s.theta.db})
        if (c->den()[std::size_t(Localizer::Z4)] > 0 && !z4_in_sigma) r.quasi_linear = false;
    if (!r.quasi_linear) throw Error(ErrorCode::PropertyViolation, "Θ has a denominator outside M_Σ", 1);

    // (ii) degrees 0, -4p, -6p: weak weight 0 for Θ, so 1 - p for Λ
    const std::array<int, 3> want{0, -4 * p, -6 * p};
    const std::array<const LocFrac*, 3> cs{&s.theta.one, &s.theta.da, &s.theta.db};
    r.weak_weight = true;
    for (int i = 0; i < 3; ++i) {
        r.degrees[i] = cs[i]->is_zero() ? want[i] : cs[i]->weighted_degree().value_or(1);
        if (!cs[i]->is_homogeneous(want[i])) r.weak_weight = false;
    }
    if (!r.weak_weight) throw Error(ErrorCode::PropertyViolation, "Θ is not of weak weight 0", 2);

    // (iii) Λ ≡ H^{-1} mod p
    const QuasiLinearForm L = lambda_form(s);
    const LocalizerSetPtr loc1 = L.gamma_k.localizers()->reduced(1);
    r.reduces_to_inverse_hasse =
        L.is_well_formed() && L.gamma_k.reduce_to(1) == LocFrac::inverse_power(loc1, Localizer::H, 1);
    if (!r.reduces_to_inverse_hasse) throw Error(ErrorCode::PropertyViolation, "Λ is not H^{-1} mod p", 3);

    r.weight_criterion_mod_p2 = weight_check_mod_p2(L);
    return r;
}

}  // namespace hd
