#include "hd/forms.hpp"

namespace hd {

namespace {

// (j, k) with 2j + 3k = (p-1)/2: exponents of z4, z6 in H, with i = n - j - k copies of x^3
template <class F>
void for_each_hasse_term(uint64_t p, F&& fn) {
    const int n = int(p - 1) / 2;
    for (int k = 0; 3 * k <= n; ++k) {
        if ((n - 3 * k) % 2) continue;
        int j = (n - 3 * k) / 2;
        fn(n - j - k, j, k);
    }
}

}  // namespace

WPoly hasse_poly(const PrimePower& pm) {
    const int n = int(pm.p() - 1) / 2;
    std::vector<ResidueInt> fact(std::size_t(n) + 1, ResidueInt::one(pm));
    for (int i = 1; i <= n; ++i) fact[std::size_t(i)] = fact[std::size_t(i - 1)] * ResidueInt(pm, i);
    WPoly h(pm);
    for_each_hasse_term(pm.p(), [&](int i, int j, int k) {
        ResidueInt c = fact[std::size_t(n)] * (fact[std::size_t(i)] * fact[std::size_t(j)] * fact[std::size_t(k)]).inverse();
        h += WPoly::monomial(c, j, k);
    });
    return h;
}

QPoly hasse_poly_integer(uint64_t p) {
    const unsigned long n = (p - 1) / 2;
    QPoly h;
    for_each_hasse_term(p, [&](int i, int j, int k) {
        mpz_class fn, fi, fj, fk;
        mpz_fac_ui(fn.get_mpz_t(), n);
        mpz_fac_ui(fi.get_mpz_t(), (unsigned long)i);
        mpz_fac_ui(fj.get_mpz_t(), (unsigned long)j);
        mpz_fac_ui(fk.get_mpz_t(), (unsigned long)k);
        h += QPoly::monomial(mpq_class(fn / (fi * fj * fk)), j, k);
    });
    return h;
}

WPoly discriminant(const PrimePower& pm) { return WPoly::from_terms(pm, {{3, 0, 4}, {0, 2, 27}}); }

QPoly discriminant_integer() { return QPoly::monomial(4, 3, 0) + QPoly::monomial(27, 0, 2); }

ResidueInt j_invariant(const ResidueInt& a, const ResidueInt& b) {
    const PrimePower& pm = a.modulus();
    ResidueInt d = discriminant(pm).evaluate(a, b);
    if (!d.is_unit()) throw Error(ErrorCode::SingularPair, "discriminant vanishes mod p");
    return ResidueInt(pm, 1728 * 4) * a.pow(3) * d.inverse();
}

LocalizerSetPtr standard_localizers(const PrimePower& pm, const std::optional<WPoly>& psi) {
    return std::make_shared<const LocalizerSet>(
        pm, std::array<WPoly, kLocalizerCount>{WPoly::z4(pm), WPoly::z6(pm), discriminant(pm), hasse_poly(pm),
                                               psi ? *psi : WPoly(pm)});
}

const char* pair_kind_name(PairKind k) {
    switch (k) {
    case PairKind::Singular: return "singular";
    case PairKind::NonSingular: return "non-singular";
    case PairKind::Ordinary: return "ordinary";
    case PairKind::SigmaNonSingular: return "sigma-non-singular";
    }
    return "?";
}

PairClass classify_pair(uint64_t p, int64_t a, int64_t b, const std::vector<WPoly>& sigma) {
    PrimePower pm(p, 1);
    ResidueInt A(pm, a), B(pm, b);
    PairClass r;
    r.delta_unit = discriminant(pm).evaluate(A, B).is_unit();
    r.hasse_unit = hasse_poly(pm).evaluate(A, B).is_unit();
    bool all_sigma = true;
    for (const auto& s : sigma) {
        bool u = s.reduce_to(1).evaluate(A, B).is_unit();
        r.sigma_units.push_back(u);
        all_sigma = all_sigma && u;
    }
    if (!r.delta_unit) r.kind = PairKind::Singular;
    else if (!r.hasse_unit) r.kind = PairKind::NonSingular;
    else if (!sigma.empty() && all_sigma) r.kind = PairKind::SigmaNonSingular;
    else r.kind = PairKind::Ordinary;
    return r;
}

QuasiLinearForm QuasiLinearForm::make(int k, LocFrac gk, LocFrac g4, LocFrac g6) {
    QuasiLinearForm F;
    F.k = k;
    F.gamma_k = std::move(gk);
    F.gamma_4 = std::move(g4);
    F.gamma_6 = std::move(g6);
    return F;
}

namespace {

// p * x with x given mod p^{m-1}, as an element mod p^m
LocFrac times_p_up(const LocFrac& x, const LocalizerSetPtr& loc) {
    const PrimePower& pm = loc->modulus();
    return LocFrac(loc, x.num().lift_to(pm.m()) * ResidueInt(pm, int64_t(pm.p())), x.den());
}

}  // namespace

QuasiLinearForm QuasiLinearForm::make_tangential(int k, LocFrac gk, LocFrac star4, LocFrac star6) {
    const auto& loc = gk.localizers();
    if (gk.modulus().m() < 2 || star4.modulus().m() + 1 != gk.modulus().m() ||
        star6.modulus().m() + 1 != gk.modulus().m())
        throw Error(ErrorCode::InvalidArgument, "tangential form needs starred parts one digit shorter");
    QuasiLinearForm F;
    F.k = k;
    F.gamma_4 = times_p_up(star4, loc);
    F.gamma_6 = times_p_up(star6, loc);
    F.gamma_k = std::move(gk);
    F.tangential = true;
    F.star_4 = std::move(star4);
    F.star_6 = std::move(star6);
    return F;
}

bool QuasiLinearForm::is_well_formed() const {
    const int p = int(modulus().p());
    if (!gamma_k.is_homogeneous(k) || !gamma_4.is_homogeneous(k - 4 * p) || !gamma_6.is_homogeneous(k - 6 * p))
        return false;
    if (!tangential) return true;
    if (!star_4 || !star_6) return false;
    return times_p_up(*star_4, gamma_k.localizers()) == gamma_4 &&
           times_p_up(*star_6, gamma_k.localizers()) == gamma_6;
}

namespace {

LocFrac z_power_term(const LocalizerSetPtr& loc, int64_t c, int e4, int e6) {
    return LocFrac(loc, WPoly::monomial(ResidueInt(loc->modulus(), c), e4, e6));
}

}  // namespace

bool weight_check_mod_p(const QuasiLinearForm& F) {
    const int p = int(F.modulus().p());
    LocFrac g4 = F.gamma_4.reduce_to(1), g6 = F.gamma_6.reduce_to(1);
    const auto& loc = g4.localizers();
    LocFrac lhs = z_power_term(loc, 4, p, 0) * g4 + z_power_term(loc, 6, 0, p) * g6;
    return lhs == LocFrac::zero(loc);
}

bool weight_check_mod_p2(const QuasiLinearForm& F) {
    if (!F.tangential || !F.star_4 || !F.star_6)
        throw Error(ErrorCode::NotTangential, "mod p^2 criterion needs a tangential form");
    const int p = int(F.modulus().p());
    LocFrac gk = F.gamma_k.reduce_to(1);
    LocFrac s4 = F.star_4->reduce_to(1), s6 = F.star_6->reduce_to(1);
    const auto& loc = gk.localizers();
    LocFrac lhs = gk + z_power_term(loc, 4, p, 0) * s4 + z_power_term(loc, 6, 0, p) * s6;
    return lhs == LocFrac::zero(lhs.localizers());
}

ResidueInt form_evaluate(const QuasiLinearForm& F, const ResidueInt& a_guard, const ResidueInt& b_guard) {
    const PrimePower& pm = F.modulus();
    ResidueInt a = a_guard.reduce_to(pm.m()), b = b_guard.reduce_to(pm.m());
    ResidueInt da = delta_scalar(a_guard, pm), db = delta_scalar(b_guard, pm);
    return F.gamma_k.evaluate(a, b) + F.gamma_4.evaluate(a, b) * da + F.gamma_6.evaluate(a, b) * db;
}

ResidueInt form_evaluate(const QuasiLinearForm& F, int64_t a, int64_t b) {
    PrimePower g = F.modulus().guard();
    return form_evaluate(F, ResidueInt(g, a), ResidueInt(g, b));
}

ResidueInt weight_power(const ResidueInt& c, Weight w) {
    // φ(c) = c^p + p δc = c for c in Z_p
    int64_t e = w.a0 + w.a1;
    ResidueInt base = e < 0 ? c.inverse() : c;
    return base.pow(uint64_t(e < 0 ? -e : e));
}

bool weight_definition_probe(const QuasiLinearForm& F, const ResidueInt& a_guard, const ResidueInt& b_guard,
                             const ResidueInt& c_guard, Weight w) {
    const PrimePower& pm = F.modulus();
    if (!c_guard.is_unit()) throw Error(ErrorCode::NotAUnit, "scaling factor must be a unit");
    ResidueInt lhs = form_evaluate(F, c_guard.pow(4) * a_guard, c_guard.pow(6) * b_guard);
    ResidueInt rhs = weight_power(c_guard.reduce_to(pm.m()), w) * form_evaluate(F, a_guard, b_guard);
    return lhs == rhs;
}

namespace {

ResidueInt frac(const PrimePower& pm, int64_t num, int64_t den) {
    return ResidueInt(pm, num) * ResidueInt(pm, den).inverse();
}

LocFrac delta_pow_inv(const LocalizerSetPtr& loc, int k) {
    return LocFrac::inverse_power(loc, Localizer::Delta, k);
}

}  // namespace

QuasiLinearForm form_z4_tangent(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    auto loc1 = loc->reduced(pm.m() - 1);
    const int p = int(pm.p());
    LocFrac s4(loc1, WPoly::constant(frac(loc1->modulus(), -1, 4)), {p, 0, 0, 0, 0});
    return QuasiLinearForm::make_tangential(0, LocFrac::constant(loc, 1), s4, LocFrac::zero(loc1));
}

QuasiLinearForm form_z6_tangent(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    auto loc1 = loc->reduced(pm.m() - 1);
    const int p = int(pm.p());
    LocFrac s6(loc1, WPoly::constant(frac(loc1->modulus(), -1, 6)), {0, p, 0, 0, 0});
    return QuasiLinearForm::make_tangential(0, LocFrac::constant(loc, 1), LocFrac::zero(loc1), s6);
}

QuasiLinearForm form_delta_tangent(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    auto loc1 = loc->reduced(pm.m() - 1);
    const PrimePower& q = loc1->modulus();
    const int p = int(pm.p());
    LocFrac s4 = LocFrac(loc1, WPoly::monomial(ResidueInt(q, -1), 2 * p, 0)) * delta_pow_inv(loc1, p);
    LocFrac s6 = LocFrac(loc1, WPoly::monomial(frac(q, -9, 2), 0, p)) * delta_pow_inv(loc1, p);
    return QuasiLinearForm::make_tangential(0, LocFrac::constant(loc, 1), s4, s6);
}

QuasiLinearForm form_f11_printed(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    const int p = int(pm.p());
    WPoly top = WPoly::monomial(ResidueInt(pm, 2), p, 0) + WPoly::monomial(ResidueInt(pm, -3), 0, p);
    return QuasiLinearForm::make(-2 * p, LocFrac::zero(loc), LocFrac::zero(loc),
                                 LocFrac(loc, top) * delta_pow_inv(loc, p));
}

QuasiLinearForm form_f11(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    const int p = int(pm.p());
    LocFrac g4 = LocFrac(loc, WPoly::monomial(ResidueInt(pm, -3), 0, p)) * delta_pow_inv(loc, p);
    LocFrac g6 = LocFrac(loc, WPoly::monomial(ResidueInt(pm, 2), p, 0)) * delta_pow_inv(loc, p);
    return QuasiLinearForm::make(-2 * p, LocFrac::zero(loc), g4, g6);
}

QuasiLinearForm lambda1_form(const PrimePower& pm) {
    QuasiLinearForm base = form_delta_tangent(pm);
    const int p = int(pm.p());
    LocFrac hinv = LocFrac::inverse_power(base.gamma_k.localizers(), Localizer::H, 1);
    LocFrac hinv1 = LocFrac::inverse_power(base.star_4->localizers(), Localizer::H, 1);
    return QuasiLinearForm::make_tangential(1 - p, hinv, *base.star_4 * hinv1, *base.star_6 * hinv1);
}

QuasiLinearForm hasse_form(const PrimePower& pm) {
    auto loc = standard_localizers(pm);
    return QuasiLinearForm::make(int(pm.p()) - 1, LocFrac(loc, loc->poly(Localizer::H)), LocFrac::zero(loc),
                                 LocFrac::zero(loc));
}

}  // namespace hd
