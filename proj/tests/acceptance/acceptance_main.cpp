// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "hd/cli.hpp"
#include "random_forms.hpp"

using namespace hd;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

WPoly w(uint64_t p, std::vector<std::tuple<int, int, int64_t>> t) { return WPoly::from_terms(PrimePower(p, 1), t); }

QPoly m(long n, long d, int e4, int e6) {
    mpq_class c(n, d);
    c.canonicalize();
    return QPoly::monomial(c, e4, e6);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    for (uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

unsigned threads() { return cli::resolve_threads(0); }

// Run f(p) for every prime in parallel; results in prime order.
template <class R>
std::vector<R> par_map(const std::vector<uint64_t>& ps, std::function<R(uint64_t)> f) {
    std::vector<std::future<R>> fut;
    std::vector<R> out;
    const std::size_t batch = threads();
    for (std::size_t i = 0; i < ps.size(); i += batch) {
        for (std::size_t j = i; j < std::min(ps.size(), i + batch); ++j) fut.push_back(std::async(std::launch::async, f, ps[j]));
        for (auto& x : fut) out.push_back(x.get());
        fut.clear();
    }
    return out;
}

// H(a, b) mod p straight from the coefficient of x^{p-1} in (x^3 + a x + b)^{(p-1)/2}.
uint64_t hasse_direct(uint64_t p, uint64_t a, uint64_t b) {
    std::vector<uint64_t> poly{1}, f{b % p, a % p, 0, 1};
    for (uint64_t e = 0; e < (p - 1) / 2; ++e) {
        std::vector<uint64_t> r(poly.size() + 3, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < 4; ++j) r[i + j] = (r[i + j] + poly[i] * f[j]) % p;
        poly = r;
    }
    return poly[p - 1];
}

// ---------------------------------------------------------------------------

Check criterion1() {
    Check c;
    const PrimePower p11(11, 1), p13(13, 1), p17(17, 1);
    c.expect(hasse_poly(p11) == w(11, {{1, 1, -2}}), "H11");
    c.expect(hasse_poly(p13) == w(13, {{3, 0, 7}, {0, 2, -63}}), "H13");
    c.expect(hasse_poly(p17) == w(17, {{4, 0, 2}, {1, 2, -2}}), "H17");
    c.expect(hasse_poly(p11).evaluate(ResidueInt(p11, 1), ResidueInt(p11, 1)).value() == 9, "H11(1,1)");
    c.expect(discriminant(p11) == w(11, {{3, 0, 4}, {0, 2, 16}}), "Delta mod 11");
    c.expect(discriminant(p13) == w(13, {{3, 0, 4}, {0, 2, -12}}), "Delta mod 13");
    c.expect(discriminant(p17) == w(17, {{3, 0, 4}, {0, 2, -24}}), "Delta mod 17");

    const PsiTableQ t = psi_table_rational(11);
    c.expect(t.alpha[1] == m(1, 2, 1, -1), "alpha1");
    c.expect(t.alpha[2] == m(-1, 8, 2, -2), "alpha2");
    c.expect(t.alpha[3] == m(1, 16, 3, -3) + m(1, 2, 0, -1), "alpha3");
    c.expect(t.alpha[4] == m(-5, 128, 4, -4) + m(-1, 4, 1, -2), "alpha4");
    c.expect(t.beta[1].is_zero(), "beta1");
    c.expect(t.beta[2] == m(1, 4, 1, -1), "beta2");
    c.expect(t.beta[3] == m(-1, 8, 2, -2), "beta3");
    c.expect(t.beta[4] == m(5, 64, 3, -3) + m(3, 8, 0, -1), "beta4");
    // the same rows read off the symbolic system mod 13
    {
        const auto rows = solve_affine(system_data_symbolic(standard_localizers(p13)), 4);
        auto twisted = [&](const QPoly& q) {
            WPoly num(p13);
            int dmax = 0;
            for (const auto& [k, v] : q.terms()) dmax = std::max(dmax, -k.second);
            for (const auto& [k, v] : q.terms())
                num += WPoly::monomial(reduce_rational(v, p13), 13 * k.first, 13 * (k.second + dmax));
            LocFrac::Exponents den{};
            den[std::size_t(Localizer::Z6)] = 13 * dmax;
            return LocFrac(rows[0].alpha.localizers(), num, den);
        };
        for (int n = 1; n <= 4; ++n) {
            c.expect(rows[n].alpha == twisted(t.alpha[n]), "symbolic alpha" + std::to_string(n));
            c.expect(rows[n].beta == twisted(t.beta[n]), "symbolic beta" + std::to_string(n));
        }
    }

    c.expect(t.psi[1] == m(1, 8, 2, -2), "psi1");
    c.expect(t.psi[2] == m(-1, 8, 1, -2), "psi2");
    c.expect(t.psi[3] == m(1, 32, 3, -4) + m(3, 16, 0, -2), "psi3");
    c.expect(t.psi[4] == m(1, 640, 2, -4), "psi4");
    c.expect(t.psi[5] == m(-7, 1280, 4, -6) + m(-23, 640, 1, -4), "psi5");
    c.expect(t.psi[6] == m(17, 7168, 3, -6) + m(15, 896, 0, -4), "psi6");
    c.expect(t.psi[7] == m(77, 40960, 5, -8) + m(129, 10240, 2, -6), "psi7");
    c.expect(t.psi[8] == m(-2477, 32768 * 35, 4, -8) + m(-2102, 4096 * 35, 1, -6), "psi8");
    c.expect(t.psi[9] == m(-847, 65536 * 15, 6, -10) + m(-2937, 16384 * 35, 3, -8) + m(33, 7168, 0, -6), "psi9");

    c.expect(psi_poly(11) == w(11, {{4, 0, 1}, {1, 2, 4}}), "Psi8 mod 11");
    c.expect(psi_poly(13) == w(13, {{6, 0, 4}, {3, 2, 4}, {0, 4, 4}}), "Psi9 mod 13");
    c.expect(psi_poly(13) == w(13, {{3, 0, 4}, {0, 2, -36}}) * w(13, {{3, 0, 1}, {0, 2, -3}}), "Psi9 mod 13 factored");
    c.expect(psi_poly(17) == w(17, {{7, 0, -6}, {4, 2, 42}, {1, 4, -36}}), "Psi11 mod 17");
    c.expect(psi_poly(17) == w(17, {{1, 0, -6}}) * w(17, {{3, 0, 1}, {0, 2, -1}}) * w(17, {{3, 0, 1}, {0, 2, -6}}),
             "Psi11 mod 17 factored");

    // congruence constants as printed: z6 Ψ8 ≡ 3 ΔH11, Ψ9 ≡ 2 ΔH13, Ψ11 ≡ 10 ΔH17
    const std::vector<std::tuple<uint64_t, bool, uint64_t>> printed{{11, true, 3}, {13, false, 2}, {17, false, 10}};
    for (auto [p, z6, want] : printed) {
        const PrimePower pm(p, 1);
        const WPoly lhs = z6 ? psi_poly(p).mul_monomial(0, 1) : psi_poly(p);
        const auto pr = proportionality(lhs, discriminant(pm) * hasse_poly(pm));
        const uint64_t got = pr.proportional ? pr.c.value() : 0;
        c.expect(pr.proportional && got == want,
                 "c at p=" + std::to_string(p) + ": printed " + std::to_string(want) + ", computed " + std::to_string(got) +
                     (got ? ", 1/computed = " + std::to_string(ResidueInt(pm, int64_t(got)).inverse().value()) : ""));
    }

    c.expect(t.Psi[6].evaluate(0, 1) == mpq_class(15, 896), "Psi6(0,1)");
    c.expect(t.Psi[5].evaluate(1, 0) == mpq_class(-7, 1280), "Psi5(1,0)");
    for (uint64_t p : {13u, 17u, 19u}) {
        const PrimePower pm(p, 1);
        const auto tp = psi_table(p);
        c.expect(tp.Psi[6].evaluate(ResidueInt::zero(pm), ResidueInt::one(pm)) == reduce_rational(mpq_class(15, 896), pm),
                 "Psi6(0,1) mod " + std::to_string(p));
        c.expect(tp.Psi[5].evaluate(ResidueInt::one(pm), ResidueInt::zero(pm)) == reduce_rational(mpq_class(-7, 1280), pm),
                 "Psi5(1,0) mod " + std::to_string(p));
    }
    const GolemResult g13 = golem_check(13);
    c.expect(g13.nonzero_01() && g13.nonzero_10(), "golem p=13");
    c.expect(psi_poly(13).weighted_degree() == 24 && degree_audit(13), "deg Psi p=13");
    c.expect(psi_poly(17).weighted_degree() == 28 && degree_audit(17), "deg Psi p=17");

    // sources of the system
    for (uint64_t p : {11u, 13u, 17u}) {
        int64_t a = 1, b = 1;
        while (classify_pair(p, a, b).kind != PairKind::Ordinary) ++b;
        const auto sd = system_data(CurveContext(p, 1, a, b));
        for (int s = 1; s < int(sd.c.size()); ++s)
            if (s != 2 && s != 4) c.expect(sd.c[s].is_zero(), "c_s = 0 off {2,4}");
        for (int s = 5; s < int(sd.d.size()); ++s) c.expect(sd.d[s].is_zero(), "d_s = 0 for s >= 5");
    }
    // a ≡ 0: θ = -δb/(6 b^p) - β, v_{3k} = 0, v_{3k+1} = 0 (k >= 1: v1 = δb/(2 b^p) + β1 is generally nonzero)
    for (uint64_t p : {13u, 19u}) {
        for (int64_t b : {1, 2, 5}) {
            const CurveContext ctx(p, 2, 0, b);
            if (!ctx.ordinary()) continue;
            const Lift2 l = build_lift_a0(ctx);
            const PrimePower pm(p, 1);
            const auto sd = system_data(ctx);
            const ResidueInt db = ctx.delta_b().reduce_to(1);
            c.expect(l.theta == -(db * (ResidueInt(pm, 6) * sd.bp).inverse()) - a0_constants(p).beta, "a0 theta");
            c.expect(sd.d[1] == a0_constants(p).beta1 * sd.bp, "d1 = beta1 b^p");
            for (std::size_t k = 0; 3 * k < l.v.size(); ++k) c.expect(l.v[3 * k].is_zero(), "a0 v_{3k}");
            for (std::size_t k = 1; 3 * k + 1 < l.v.size(); ++k) c.expect(l.v[3 * k + 1].is_zero(), "a0 v_{3k+1}");
            const ResidueInt v1 = l.v.size() > 1 ? l.v[1] : ResidueInt::zero(pm);
            c.expect(v1 == db * (ResidueInt(pm, 2) * sd.bp).inverse() + a0_constants(p).beta1, "a0 v1 from row 1");
        }
    }
    c.note("v1 of the a=0 branch is nonzero as row 1 forces (printed claim covers k=0 too)");
    // b ≡ 0: v_{2k} = (-1)^{k+1} (5·9···(4k-7))/(7·11···(4k-1)) v2 / a^{(k-1)p}; printed exponent (k-3)p
    {
        bool printed_ok = true;
        for (uint64_t p : {13u, 17u}) {
            for (int64_t a : {1, 2, 3})
            for (int64_t b : {int64_t(0), int64_t(p)}) {
                const CurveContext ctx(p, 2, a, b);
                if (!ctx.ordinary()) continue;
                const Lift2 l = build_lift_b0(ctx);
                const PrimePower pm(p, 1);
                const ResidueInt ap = ResidueInt(pm, a).pow(p);
                auto at = [&](std::size_t i) { return i < l.v.size() ? l.v[i] : ResidueInt::zero(pm); };
                // b = 0 has db = 0 and v2 = 0, so only b = p exercises the formula
                if (b != 0) c.expect(!at(2).is_zero(), "b0 v2 nonzero for b = p");
                ResidueInt ratio = ResidueInt::one(pm);
                for (int k = 2; 2 * k < int(p); ++k) {
                    ratio = ratio * ResidueInt(pm, 4 * k - 7) * ResidueInt(pm, 4 * k - 1).inverse();
                    const ResidueInt sign = (k % 2 == 1) ? ResidueInt::one(pm) : -ResidueInt::one(pm);
                    const ResidueInt base = sign * ratio * at(2);
                    c.expect(at(2 * k) == base * ap.pow(k - 1).inverse(), "b0 v_{2k} with a^{(k-1)p}");
                    const ResidueInt printed = k >= 3 ? base * ap.pow(k - 3).inverse() : base * ap;
                    if (at(2 * k) != printed) printed_ok = false;
                }
                const int k1 = int(p - 1) / 4 + 2;
                c.expect(at(2 * k1).is_zero(), "b0 v_{2k1} = 0");
            }
        }
        c.note(std::string("b0 product formula with the printed exponent (k-3)p: ") + (printed_ok ? "holds" : "fails"));
    }
    return c;
}

Check criterion2() {
    Check c;
    for (uint64_t p : {5u, 7u, 11u, 13u, 17u, 29u, 37u}) {
        const std::size_t samples = p <= 13 ? 0 : 200;
        const auto s = cli::exhaustive_verify(p, 1, threads(), samples, 2024 + p);
        c.expect(s.failed == 0 && s.verified == s.eligible && s.eligible > 0, "mod p lifts at p=" + std::to_string(p));
        c.expect(p > 13 ? (!s.exhaustive && s.eligible == 200) : s.exhaustive, "coverage at p=" + std::to_string(p));
        std::ostringstream os;
        os << "p=" << p << ": " << s.verified << "/" << s.eligible;
        c.note(os.str());
    }
    return c;
}

Check criterion3() {
    Check c;
    for (uint64_t p : {5u, 7u, 11u, 13u}) {
        std::size_t raised = 0, supersingular = 0;
        for (int64_t a = 0; a < int64_t(p); ++a)
            for (int64_t b = 0; b < int64_t(p); ++b) {
                const uint64_t d = (4 * uint64_t(a) * a * a + 27 * uint64_t(b) * b) % p;
                if (d == 0) continue;
                const bool ss = hasse_direct(p, uint64_t(a), uint64_t(b)) == 0;
                bool not_ordinary = false;
                try {
                    (void)build_lift_mod_p(CurveContext(p, 1, a, b));
                } catch (const Error& e) {
                    not_ordinary = e.code() == ErrorCode::NotOrdinary;
                    if (!not_ordinary) c.expect(false, std::string("unexpected ") + e.what());
                }
                c.expect(ss == not_ordinary, "p=" + std::to_string(p) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
                raised += not_ordinary;
                supersingular += ss;
            }
        c.note("p=" + std::to_string(p) + ": " + std::to_string(raised) + " raised, " + std::to_string(supersingular) +
               " supersingular");
    }
    return c;
}

// Rows 1..(p+13)/2 of the system for a constructed lift.
bool stabilization_certified(const CurveContext& ctx, const Lift2& l) {
    const auto sd = system_data(ctx);
    const auto k = evaluate_coeffs(sd, l.theta, ctx.delta_a().reduce_to(1), ctx.delta_b().reduce_to(1));
    for (int s = 1; s <= verification_bound(ctx.p()); ++s)
        if (!row_holds(k, l.v, s)) return false;
    return true;
}

Check criterion4(std::size_t& certified) {
    Check c;
    for (auto [p, samples] : std::vector<std::pair<uint64_t, std::size_t>>{{11, 0}, {13, 0}, {17, 200}}) {
        const auto s = cli::exhaustive_verify(p, 2, threads(), samples, 77 + p);
        c.expect(s.failed == 0 && s.verified == s.eligible, "mod p^2 lifts at p=" + std::to_string(p));
        if (p == 17) c.expect(s.eligible >= 200, "p=17 sample size");
        std::size_t a0 = 0, b0 = 0;
        for (const auto& r : s.rows) {
            const CurveContext ctx(p, 2, r.a, r.b);
            const Lift2 l = build_lift_mod_p2(ctx);
            a0 += l.branch == Branch::A0;
            b0 += l.branch == Branch::B0;
            const bool cert = stabilization_certified(ctx, l);
            c.expect(cert, "stabilization at p=" + std::to_string(p));
            certified += cert;
        }
        std::ostringstream os;
        os << "p=" << p << ": " << s.verified << "/" << s.eligible << " (a0 " << a0 << ", b0 " << b0 << ")";
        c.note(os.str());
    }
    // special branches in further residue classes
    for (uint64_t p : {19u, 31u, 37u}) {
        int done = 0;
        for (int64_t b = 1; b < int64_t(p) && done < 5; ++b) {
            const CurveContext ctx(p, 2, 0, b);
            if (!ctx.ordinary()) continue;
            const Lift2 l = build_lift_a0(ctx);
            c.expect(lie_verify(l.lift, 2) && stabilization_certified(ctx, l), "a0 branch at p=" + std::to_string(p));
            ++done;
        }
    }
    for (uint64_t p : {29u, 37u, 41u}) {
        int done = 0;
        for (int64_t a = 1; a < int64_t(p) && done < 5; ++a) {
            const CurveContext ctx(p, 2, a, 0);
            if (!ctx.ordinary()) continue;
            const Lift2 l = build_lift_b0(ctx);
            c.expect(lie_verify(l.lift, 2) && stabilization_certified(ctx, l), "b0 branch at p=" + std::to_string(p));
            ++done;
        }
    }
    return c;
}

Check criterion5() {
    Check c;
    for (uint64_t p : {13u, 17u}) {
        const SymbolicEigen s = solve_eigen_symbolic(p);
        LambdaReport r;
        try {
            r = lambda_properties(s);
        } catch (const Error& e) {
            c.expect(false, e.what());
            continue;
        }
        const int ip = int(p);
        c.expect(r.quasi_linear, "quasi-linear at p=" + std::to_string(p));
        c.expect(r.weak_weight && r.degrees[0] == 0 && r.degrees[1] == -4 * ip && r.degrees[2] == -6 * ip,
                 "degrees (0, -4p, -6p) at p=" + std::to_string(p));
        c.expect(r.reduces_to_inverse_hasse, "Lambda = 1/H mod p at p=" + std::to_string(p));
        const QuasiLinearForm L = lambda_form(s);
        c.expect(L.tangential && L.k == 1 - ip && L.is_well_formed(), "Lambda tangential of weak weight 1-p");
        // a -> 0: Θ = -z6'/(6 z6^p) - β; a = 0 is ordinary only for p ≡ 1 mod 3
        if (p % 3 == 1) {
        const LocFrac db0 = s.theta.db.restrict_z4_zero();
        const auto loc1 = db0.localizers();
        const PrimePower pm(p, 1);
        LocFrac::Exponents den{};
        den[std::size_t(Localizer::Z6)] = ip;
        const ResidueInt m6 = -ResidueInt(pm, 6).inverse();
        c.expect(db0 == LocFrac(loc1, WPoly::constant(m6), den), "a->0 z6' coefficient");
        c.expect(s.theta.da.restrict_z4_zero().is_zero(), "a->0 z4' coefficient");
        c.expect(s.theta.one.restrict_z4_zero() == LocFrac::constant(loc1, -a0_constants(p).beta), "a->0 constant");
        }
        // numeric agreement with the eigen-solve
        std::mt19937_64 rng(5 + p);
        for (int t = 0; t < 20; ++t) {
            const int64_t a = int64_t(rng() % (p * p)), b = 1 + int64_t(rng() % (p * p - 1));
            if (b % int64_t(p) == 0 || classify_pair(p, a, b).kind != PairKind::Ordinary) continue;
            try {
                c.expect(evaluate_theta(s, a, b) == solve_eigen(CurveContext(p, 2, a, b)).theta, "Theta(a,b)");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SigmaSingular && e.code() != ErrorCode::DenominatorNotLocalizer &&
                    e.code() != ErrorCode::NotAUnit)
                    throw;
            }
        }
    }
    return c;
}

Check criterion6() {
    Check c;
    std::mt19937_64 rng(606);
    for (uint64_t p : {13u, 17u}) {
        const int64_t ip = int64_t(p);
        std::size_t agree = 0;
        for (int t = 0; t < 50; ++t) {
            const bool satisfy = t % 2 == 0;
            // alternate the mod p^2 criterion (tangential forms) and the mod p criterion
            const bool tangential = (t / 2) % 2 == 0;
            const QuasiLinearForm F =
                tangential ? testkit::random_tangential_form(rng, p, satisfy) : testkit::random_form_mod_p(rng, p, satisfy);
            const bool crit = tangential ? weight_check_mod_p2(F) : weight_check_mod_p(F);
            bool all = true;
            for (int s = 0; s < 20; ++s) {
                const auto smp = testkit::random_probe_sample(rng, F.modulus(), s % 2 == 0);
                all = all && weight_definition_probe(F, smp.a, smp.b, smp.c, {F.k + ip, -1});
            }
            c.expect(crit == all, "criterion vs probe at p=" + std::to_string(p));
            agree += crit == all;
        }
        c.note("p=" + std::to_string(p) + ": " + std::to_string(agree) + "/50 agree");

        const PrimePower pm2(p, 2), pm1(p, 1);
        // weak weight 0 tangential forms: weight p - φ mod p^2
        for (const auto& [name, F] : std::vector<std::pair<std::string, QuasiLinearForm>>{
                 {"z4 tangent", form_z4_tangent(pm2)}, {"z6 tangent", form_z6_tangent(pm2)}, {"Delta tangent", form_delta_tangent(pm2)}})
            c.expect(weight_check_mod_p2(F), name + " weight p-phi mod p^2");
        c.expect(weight_check_mod_p2(lambda1_form(pm2)), "Lambda1 weight 1-phi mod p^2");
        c.expect(form_f11(pm1).is_well_formed() && weight_check_mod_p(form_f11(pm1)), "f11 weight -p-phi mod p");
        const bool printed = form_f11_printed(pm1).is_well_formed() && weight_check_mod_p(form_f11_printed(pm1));
        if (p == 13) c.note(std::string("f11 with z6' twice as printed: ") + (printed ? "passes" : "not homogeneous, fails"));
        int done = 0;
        while (done < 20) {
            const auto smp = testkit::random_probe_sample(rng, pm2, done % 2 == 0);
            if (!hasse_poly(pm1).evaluate(smp.a.reduce_to(1), smp.b.reduce_to(1)).is_unit()) continue;
            c.expect(weight_definition_probe(lambda1_form(pm2), smp.a, smp.b, smp.c, {1, -1}), "Lambda1 probe");
            c.expect(weight_definition_probe(form_delta_tangent(pm2), smp.a, smp.b, smp.c, {ip, -1}), "Delta tangent probe");
            ++done;
        }
    }
    return c;
}

Check criterion7(std::size_t certified) {
    Check c;
    const auto ps = primes_in(11, 499);
    // degree_audit and golem_check rebuild the table, whose construction checks determinant = recurrence
    auto res = par_map<std::string>(ps, [](uint64_t p) -> std::string {
        try {
            if (!degree_audit(p)) return "degree_audit false";
            if (p >= 13) {
                const GolemResult g = golem_check(p);
                if (p % 3 == 1 && !g.nonzero_01()) return "golem (0,1)";
                if (p % 4 == 1 && !g.nonzero_10()) return "golem (1,0)";
            }
            const PsiTable t = psi_table(p);
            if (int(t.psi.size()) != int(p + 5) / 2 + 1) return "table length";
            for (int n = 1; n <= int(p + 5) / 2; ++n)
                if (t.psi[n] != t.alpha[n] * t.beta[n + 1] - t.alpha[n + 1] * t.beta[n]) return "psi definition";
            return "";
        } catch (const Error& e) {
            return e.what();
        }
    });
    for (std::size_t i = 0; i < ps.size(); ++i) c.expect(res[i].empty(), "p=" + std::to_string(ps[i]) + ": " + res[i]);
    c.note(std::to_string(ps.size()) + " primes");
    c.expect(certified > 0, "stabilization certificates");
    c.note(std::to_string(certified) + " mod p^2 lifts certified to (p+13)/2");
    return c;
}

Check criterion8() {
    Check c;
    const auto rows = conjecture_scan(11, 499, threads());
    const auto ps = primes_in(11, 499);
    c.expect(rows.size() == ps.size(), "row count");
    std::size_t prop = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size() && i < ps.size(); ++i) {
        const ScanRow& r = rows[i];
        const std::string tag = "p=" + std::to_string(r.p);
        c.expect(r.p == ps[i], tag + " order");
        c.expect(r.class_mod_12 == int(r.p % 12), tag + " class");
        c.expect(r.psi_degree == psi_expected_degree(int(r.p + 5) / 2), tag + " degree");
        c.expect(r.proportional == r.constant_c.has_value(), tag + " constant presence");
        c.expect(r.proportional == r.counterexample.empty(), tag + " counterexample presence");
        prop += r.proportional;
        arr.push_back(cli::scan_row_json(r));
    }
    const auto back = nlohmann::json::parse(cli::dump(arr));
    c.expect(back.size() == rows.size(), "json round trip");
    for (const auto& o : back) c.expect(o.size() == 9 && o.contains("constant_c") && o.contains("golem_10"), "json keys");
    const std::string csv = cli::scan_csv(rows);
    c.expect(std::size_t(std::count(csv.begin(), csv.end(), '\n')) == rows.size() + 1, "csv lines");
    c.note(std::to_string(prop) + "/" + std::to_string(rows.size()) + " proportional");
    return c;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    std::size_t certified = 0;
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"paper-value regression", criterion1},
        {"mod-p existence", criterion2},
        {"mod-p obstruction", criterion3},
        {"mod-p^2 existence", [&] { return criterion4(certified); }},
        {"eigenvalue structure", criterion5},
        {"weight-criterion equivalence", criterion6},
        {"internal-consistency oracles", [&] { return criterion7(certified); }},
        {"conjecture scan", criterion8},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::ostringstream line;
        line << "criterion " << i + 1 << " " << (c.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
        line << buf;
        for (const auto& n : c.notes) line << "; " << n;
        if (!c.ok) {
            line << "; failed:";
            for (std::size_t k = 0; k < c.failures.size() && k < 8; ++k) line << " [" << c.failures[k] << "]";
            if (c.failures.size() > 8) line << " +" << c.failures.size() - 8 << " more";
        }
        std::cout << line.str() << std::endl;
        all = all && c.ok;
    }
    return all ? 0 : 1;
}
