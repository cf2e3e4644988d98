#include "hd/frob2.hpp"

#include "hd/wxpoly.hpp"

namespace hd {

namespace {

// Coefficients of x^{sp-1}, s = 1..deg/p + 1.
std::vector<ResidueInt> strided(const UPoly& P, uint64_t p) {
    std::vector<ResidueInt> out(1, ResidueInt::zero(P.modulus()));
    for (std::size_t s = 1; s * p - 1 <= std::size_t(std::max(P.degree(), 0)) + p; ++s)
        out.push_back(P.coeff(s * p - 1));
    return out;
}

// Sparsity of the source terms: c on {2, 4}, e on {1}, f on {2}, d on 1..4.
template <class T>
void check_sparsity(const SystemData<T>& sd) {
    auto bad = [](const std::vector<T>& v, auto allowed) {
        for (int s = 1; s < int(v.size()); ++s)
            if (!allowed(s) && !v[s].is_zero()) return s;
        return 0;
    };
    if (int s = bad(sd.c, [](int s) { return s == 2 || s == 4; }))
        throw Error(ErrorCode::InternalMismatch, "c_s nonzero off {2, 4}", s);
    if (int s = bad(sd.e, [](int s) { return s == 1; })) throw Error(ErrorCode::InternalMismatch, "e_s nonzero off 1", s);
    if (int s = bad(sd.f, [](int s) { return s == 2; })) throw Error(ErrorCode::InternalMismatch, "f_s nonzero off 2", s);
    if (int s = bad(sd.d, [](int s) { return s <= 4; })) throw Error(ErrorCode::InternalMismatch, "d_s nonzero for s >= 5", s);
}

}  // namespace

SystemData<ResidueInt> system_data(const CurveContext& ctx_in) {
    const CurveContext ctx = ctx_in.with_precision(1);
    const PrimePower& pm = ctx.modulus();
    const uint64_t p = pm.p();
    const ResidueInt one = ResidueInt::one(pm);
    const ResidueInt lambda0 = ctx.lambda0();
    const UPoly f = ctx.f();
    const UPoly fh = f.pow((p - 1) / 2);
    const UPoly base = fh * (lambda0 * half_integer(pm, 1));
    const UPoly xp = UPoly::monomial(one, p);
    const UPoly W0 = antiderivative(fh * lambda0 - UPoly::monomial(one, p - 1));
    const UPoly lin = UPoly::monomial(ResidueInt(pm, 3), 2 * p) + UPoly::constant(ctx.a().pow(p));

    SystemData<ResidueInt> sd;
    sd.pm = pm;
    sd.zero = ResidueInt::zero(pm);
    sd.one = one;
    sd.ap = ctx.a().pow(p);
    sd.bp = ctx.b().pow(p);
    sd.bp_inv = sd.bp.is_unit() ? sd.bp.inverse() : sd.zero;
    sd.c = strided(base * lin * xp, p);
    sd.d = strided(base * (k0_poly(pm, ctx.a_int(), ctx.b_int()) + lin * W0), p);
    sd.e = strided(base, p);
    sd.f = strided(base * xp, p);
    check_sparsity(sd);
    return sd;
}

SystemData<LocFrac> system_data_symbolic(const LocalizerSetPtr& loc) {
    const PrimePower& pm = loc->modulus();
    if (pm.m() != 1) throw Error(ErrorCode::InvalidArgument, "symbolic system lives mod p");
    const uint64_t p = pm.p();
    const PrimePower pm2 = pm.with_exponent(2);
    const ResidueInt one = ResidueInt::one(pm);
    const WPoly H = loc->poly(Localizer::H);
    const WPoly z4p = WPoly::monomial(one, int(p), 0), z6p = WPoly::monomial(one, 0, int(p));

    // K0 = (x^{3p} + z4^p x^p + z6^p - f^p)/p from a computation mod p^2
    const ResidueInt one2 = ResidueInt::one(pm2);
    WXPoly top = WXPoly::monomial(WPoly::constant(one2), 3 * p) +
                 WXPoly::monomial(WPoly::monomial(one2, int(p), 0), p) +
                 WXPoly::constant(WPoly::monomial(one2, 0, int(p)));
    const WXPoly K0 = (top - WXPoly::universal_cubic(pm2).pow(unsigned(p))).divide_by_p();

    const WXPoly fh = WXPoly::universal_cubic(pm).pow(unsigned((p - 1) / 2));
    if (fh.coeff(p - 1) != H) throw Error(ErrorCode::InternalMismatch, "x^{p-1} coefficient of f^{(p-1)/2} is not H");
    // H W0 = ∫ (f^{(p-1)/2} - H x^{p-1})
    const WXPoly HW0 = (fh - WXPoly::monomial(H, p - 1)).antiderivative();
    const WXPoly lin = WXPoly::monomial(WPoly::constant(ResidueInt(pm, 3)), 2 * p) + WXPoly::constant(z4p);
    const WXPoly xp = WXPoly::monomial(WPoly::constant(one), p);

    const ResidueInt half = half_integer(pm, 1);
    auto extract = [&](const WXPoly& P, int hpow) {
        std::vector<LocFrac> out(1, LocFrac::zero(loc));
        LocFrac::Exponents den{};
        den[std::size_t(Localizer::H)] = hpow;
        for (std::size_t s = 1; s * p - 1 <= std::size_t(std::max(P.degree(), 0)) + p; ++s)
            out.push_back(LocFrac(loc, P.coeff(s * p - 1) * half, den).normalized());
        return out;
    };

    SystemData<LocFrac> sd;
    sd.pm = pm;
    sd.zero = LocFrac::zero(loc);
    sd.one = LocFrac::constant(loc, 1);
    sd.ap = LocFrac(loc, z4p);
    sd.bp = LocFrac(loc, z6p);
    sd.bp_inv = LocFrac::inverse_power(loc, Localizer::Z6, int(p));
    sd.c = extract(fh * lin * xp, 1);
    sd.d = extract(fh * (K0 * H + lin * HW0), 2);
    sd.e = extract(fh, 1);
    sd.f = extract(fh * xp, 1);
    check_sparsity(sd);
    return sd;
}

ResidueInt SystemCoeffs::source(int s) const {
    auto at = [&](const std::vector<ResidueInt>& v) { return s >= 0 && s < int(v.size()) ? v[s] : ResidueInt::zero(pm); };
    return at(c) + at(d) + at(e) + at(f);
}

SystemCoeffs evaluate_coeffs(const SystemData<ResidueInt>& sd, const ResidueInt& theta, const ResidueInt& da,
                             const ResidueInt& db) {
    SystemCoeffs r{sd.pm, sd.ap, sd.bp, {}, sd.d, {}, {}};
    for (const auto& x : sd.c) r.c.push_back(x * theta.reduce_to(1));
    for (const auto& x : sd.e) r.e.push_back(x * db.reduce_to(1));
    for (const auto& x : sd.f) r.f.push_back(x * da.reduce_to(1));
    return r;
}

SystemCoeffs system_coeffs(const CurveContext& ctx, const ResidueInt& theta, const ResidueInt& da,
                           const ResidueInt& db) {
    return evaluate_coeffs(system_data(ctx), theta, da, db);
}

SolutionVector solve_truncated(const SystemCoeffs& k, const ResidueInt& v0, int T) {
    const PrimePower& pm = k.pm;
    if (!k.bp.is_unit()) throw Error(ErrorCode::BNotUnit, "b ≡ 0 mod p");
    if (T < 1 || uint64_t(T) > pm.p() - 1) throw Error(ErrorCode::TOutOfRange, "T outside 1..p-1", T);
    SolutionVector v{v0.reduce_to(1)};
    const ResidueInt bp_inv = k.bp.inverse();
    for (int s = 1; s <= T; ++s) {
        ResidueInt r = half_integer(pm, 3 - 2 * s) * k.ap * v[s - 1] + k.source(s);
        if (s >= 3) r += half_integer(pm, 9 - 2 * s) * v[s - 3];
        v.push_back(r * bp_inv * ResidueInt(pm, s).inverse());
    }
    return v;
}

bool row_holds(const SystemCoeffs& k, const SolutionVector& v, int s) {
    const PrimePower& pm = k.pm;
    auto at = [&](int i) { return i >= 0 && i < int(v.size()) ? v[i] : ResidueInt::zero(pm); };
    ResidueInt lhs = ResidueInt(pm, s) * k.bp * at(s);
    ResidueInt rhs = half_integer(pm, 3 - 2 * s) * k.ap * at(s - 1) + half_integer(pm, 9 - 2 * s) * at(s - 3) + k.source(s);
    return lhs == rhs;
}

SolutionVector truncate_support(const SolutionVector& v, uint64_t p) {
    SolutionVector w(v.begin(), v.begin() + std::min<std::ptrdiff_t>(v.size(), support_end(p) + 1));
    while (!w.empty() && w.back().is_zero()) w.pop_back();
    return w;
}

bool stabilization_check(const SolutionVector& v, const SystemCoeffs& k) {
    const uint64_t p = k.pm.p();
    if (int(v.size()) <= pivot7(p)) throw Error(ErrorCode::TOutOfRange, "solution shorter than (p+7)/2", int(v.size()));
    if (!v[pivot5(p)].is_zero() || !v[pivot7(p)].is_zero())
        throw Error(ErrorCode::NotStabilized, "pivot values v_{(p+5)/2}, v_{(p+7)/2} not both zero");
    // Rows past (p+13)/2 read 0 ≡ 0: v_s, v_{s-1}, v_{s-3} lie past the support and
    // every source term vanishes for s >= 5.
    if (k.c.size() > 5 || k.d.size() > 5)
        for (std::size_t s = 5; s < std::max(k.c.size(), k.d.size()); ++s)
            if (!k.source(int(s)).is_zero()) throw Error(ErrorCode::InternalMismatch, "source term past row 4", long(s));
    SolutionVector w = truncate_support(v, p);
    for (int s = 1; s <= verification_bound(p); ++s)
        if (!row_holds(k, w, s)) return false;
    return true;
}

EigenSolution solve_eigen(const CurveContext& ctx) {
    const uint64_t p = ctx.p();
    if (p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(p));
    const SystemData<ResidueInt> sd = system_data(ctx);
    if (!sd.bp.is_unit()) throw Error(ErrorCode::BNotUnit, "b ≡ 0 mod p");
    const auto aff = solve_affine(sd, pivot7(p));
    const auto& r5 = aff[pivot5(p)];
    const auto& r7 = aff[pivot7(p)];
    const ResidueInt det = r5.alpha * r7.beta - r7.alpha * r5.beta;
    if (det.is_zero()) throw Error(ErrorCode::SigmaSingular, "ψ_{(p+5)/2}(a^p, b^p) ≡ 0 mod p");
    const ResidueInt da = ctx.delta_a().reduce_to(1), db = ctx.delta_b().reduce_to(1);
    const ResidueInt rho5 = r5.mu * da + r5.nu * db + r5.eta;
    const ResidueInt rho7 = r7.mu * da + r7.nu * db + r7.eta;
    const ResidueInt inv = det.inverse();
    EigenSolution out;
    out.det = det;
    out.v0 = (rho7 * r5.beta - rho5 * r7.beta) * inv;
    out.theta = (rho5 * r7.alpha - rho7 * r5.alpha) * inv;
    SolutionVector v;
    for (const auto& e : aff) v.push_back(e.evaluate(out.v0, out.theta, da, db));
    SystemCoeffs k = evaluate_coeffs(sd, out.theta, da, db);
    if (!stabilization_check(v, k)) throw Error(ErrorCode::InternalMismatch, "eigen solution fails a row");
    out.v = truncate_support(v, p);
    return out;
}

}  // namespace hd
