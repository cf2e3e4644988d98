#include "hd/psi.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace hd {

namespace {

// The recurrences written once for LocFrac (mod p) and QPoly (over Q).
template <class T>
struct Alg {
    std::function<T(const mpq_class&)> k;
    T U, Vinv;
};

mpq_class q(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

// Row s of the system with a^p -> U, b^p -> V, sources c_2 = U θ/2, c_4 = 3θ/2 only:
// s V v_s = (3/2 - s) U v_{s-1} + (9/2 - s) v_{s-3} + c_s. α is the v0-part, β the θ-part.
template <class T>
std::pair<std::vector<T>, std::vector<T>> rows_solve(const Alg<T>& A, int nmax) {
    std::vector<T> al{A.k(1)}, be{A.k(0)};
    for (int s = 1; s <= nmax; ++s) {
        for (auto* v : {&al, &be}) {
            T r = A.k(q(3 - 2 * s, 2)) * A.U * (*v)[s - 1];
            if (s >= 3) r = r + A.k(q(9 - 2 * s, 2)) * (*v)[s - 3];
            if (v == &be && s == 2) r = r + A.k(q(1, 2)) * A.U;
            if (v == &be && s == 4) r = r + A.k(q(3, 2));
            v->push_back(r * A.Vinv * A.k(q(1, s)));
        }
    }
    return {al, be};
}

// Literal table for n <= 4, then α_n = -((2n-3)/2n)(U/V)α_{n-1} - ((2n-9)/2n)(1/V)α_{n-3}.
template <class T>
std::pair<std::vector<T>, std::vector<T>> seeded(const Alg<T>& A, int nmax) {
    const T& U = A.U;
    const T& Vi = A.Vinv;
    const T U2 = U * U, U3 = U2 * U, Vi2 = Vi * Vi, Vi3 = Vi2 * Vi;
    std::vector<T> al{A.k(1), A.k(q(1, 2)) * U * Vi, A.k(q(-1, 8)) * U2 * Vi2,
                      A.k(q(1, 16)) * U3 * Vi3 + A.k(q(1, 2)) * Vi,
                      A.k(q(-5, 128)) * U3 * U * Vi3 * Vi + A.k(q(-1, 4)) * U * Vi2};
    std::vector<T> be{A.k(0), A.k(0), A.k(q(1, 4)) * U * Vi, A.k(q(-1, 8)) * U2 * Vi2,
                      A.k(q(5, 64)) * U3 * Vi3 + A.k(q(3, 8)) * Vi};
    al.resize(std::min<std::size_t>(al.size(), nmax + 1), A.k(0));
    be.resize(al.size(), A.k(0));
    for (int n = 5; n <= nmax; ++n)
        for (auto* v : {&al, &be})
            v->push_back(A.k(q(-(2 * n - 3), 2 * n)) * U * Vi * (*v)[n - 1] +
                         A.k(q(-(2 * n - 9), 2 * n)) * Vi * (*v)[n - 3]);
    return {al, be};
}

// ψ_1..ψ_nmax by determinant; then ψ_n for n >= 5 by
// ψ_n = ((2n-7)/(2n+2)) V^{-2} (-((2n-3)/2n) U ψ_{n-2} + ((2n-9)/2n) ψ_{n-3}).
template <class T, class Eq>
std::vector<T> psi_both(const Alg<T>& A, const std::vector<T>& al, const std::vector<T>& be, int nmax, Eq eq) {
    std::vector<T> psi{A.k(0)};
    for (int n = 1; n <= nmax; ++n) psi.push_back(al[n] * be[n + 1] - al[n + 1] * be[n]);
    const T Vi2 = A.Vinv * A.Vinv;
    for (int n = 5; n <= nmax; ++n) {
        T rec = (A.k(q(-(2 * n - 3), 2 * n)) * A.U * psi[n - 2] + A.k(q(2 * n - 9, 2 * n)) * psi[n - 3]) *
                A.k(q(2 * n - 7, 2 * n + 2)) * Vi2;
        if (!eq(rec, psi[n])) throw Error(ErrorCode::InternalMismatch, "ψ_n: determinant and recurrence disagree", n);
    }
    return psi;
}

int clearing_power(int n) { return n % 2 == 0 ? n : n + 1; }

Alg<LocFrac> alg_mod_p(const LocalizerSetPtr& loc) {
    const PrimePower pm = loc->modulus();
    return {[loc, pm](const mpq_class& r) { return LocFrac::constant(loc, reduce_rational(r, pm)); },
            LocFrac(loc, WPoly::z4(pm)), LocFrac::inverse_power(loc, Localizer::Z6, 1)};
}

Alg<QPoly> alg_q() { return {[](const mpq_class& r) { return QPoly::constant(r); }, QPoly::monomial(1, 1, 0), QPoly::monomial(1, 0, -1)}; }

bool loc_eq(const LocFrac& a, const LocFrac& b) { return a == b; }

void require_prime_11(uint64_t p) {
    if (p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p tables need p >= 11", long(p));
}

PrimePower field(uint64_t p) { return PrimePower(p, 1); }

}  // namespace

std::pair<std::vector<LocFrac>, std::vector<LocFrac>> alpha_beta_table(uint64_t p) {
    require_prime_11(p);
    const auto A = alg_mod_p(standard_localizers(field(p)));
    const int nmax = int(p + 7) / 2;
    auto direct = rows_solve(A, nmax);
    auto rec = seeded(A, nmax);
    for (int n = 0; n <= nmax; ++n)
        if (direct.first[n] != rec.first[n] || direct.second[n] != rec.second[n])
            throw Error(ErrorCode::InternalMismatch, "α_n, β_n: recurrence and direct solve disagree", n);
    for (auto* v : {&rec.first, &rec.second})
        for (auto& x : *v) x = x.normalized();
    return rec;
}

PsiTable psi_table(uint64_t p) {
    PsiTable t;
    t.p = p;
    auto [al, be] = alpha_beta_table(p);
    t.loc = al[0].localizers();
    const auto A = alg_mod_p(t.loc);
    const int nmax = int(p + 5) / 2;
    t.psi = psi_both(A, al, be, nmax, loc_eq);
    t.Psi.assign(1, WPoly(field(p)));
    for (int n = 1; n <= nmax; ++n) {
        t.psi[n] = t.psi[n].normalized();
        const LocFrac c = (t.psi[n] * WPoly::monomial(ResidueInt::one(field(p)), 0, clearing_power(n))).normalized();
        if (c.den() != LocFrac::Exponents{})
            throw Error(ErrorCode::InternalMismatch, "V-cleared ψ_n is not a polynomial", n);
        if (!c.num().is_zero() && !c.num().is_homogeneous(psi_expected_degree(n)))
            throw Error(ErrorCode::DegreeMismatch, "Ψ_n has the wrong weighted degree", n);
        t.Psi.push_back(c.num());
    }
    t.alpha = std::move(al);
    t.beta = std::move(be);
    return t;
}

PsiTableQ psi_table_rational(int nmax) {
    if (nmax < 1) throw Error(ErrorCode::InvalidArgument, "nmax must be positive", nmax);
    const auto A = alg_q();
    auto direct = rows_solve(A, nmax + 1);
    auto rec = seeded(A, nmax + 1);
    if (direct != rec) throw Error(ErrorCode::InternalMismatch, "α_n, β_n over Q: recurrence and direct solve disagree");
    PsiTableQ t;
    t.psi = psi_both(A, rec.first, rec.second, nmax, [](const QPoly& a, const QPoly& b) { return a == b; });
    t.Psi.assign(1, QPoly());
    for (int n = 1; n <= nmax; ++n) {
        QPoly c = t.psi[n].mul_monomial(0, clearing_power(n));
        if (!c.is_polynomial()) throw Error(ErrorCode::InternalMismatch, "V-cleared ψ_n is not a polynomial", n);
        if (!c.is_zero() && c.weighted_degree() != psi_expected_degree(n))
            throw Error(ErrorCode::DegreeMismatch, "Ψ_n has the wrong weighted degree", n);
        t.Psi.push_back(std::move(c));
    }
    t.alpha = std::move(rec.first);
    t.beta = std::move(rec.second);
    return t;
}

int psi_expected_degree(int n) { return n % 2 == 0 ? 2 * n : 2 * n + 6; }

WPoly psi_poly(uint64_t p) { return psi_table(p).Psi.back(); }

GolemResult golem_values(uint64_t p) {
    const WPoly P = psi_poly(p);
    const PrimePower pm = field(p);
    return {P.evaluate(ResidueInt::zero(pm), ResidueInt::one(pm)), P.evaluate(ResidueInt::one(pm), ResidueInt::zero(pm))};
}

GolemResult golem_check(uint64_t p) {
    if (p < 13) throw Error(ErrorCode::UnsupportedPrime, "the nonvanishing check needs p >= 13", long(p));
    GolemResult g = golem_values(p);
    if (p % 3 == 1 && !g.nonzero_01()) throw Error(ErrorCode::TheoremViolation, "Ψ_{(p+5)/2}(0, 1) ≡ 0 with p ≡ 1 mod 3", long(p));
    if (p % 4 == 1 && !g.nonzero_10()) throw Error(ErrorCode::TheoremViolation, "Ψ_{(p+5)/2}(1, 0) ≡ 0 with p ≡ 1 mod 4", long(p));
    return g;
}

bool degree_audit(uint64_t p) {
    if (p < 5 || p % 2 == 0) throw Error(ErrorCode::UnsupportedPrime, "degree audit needs an odd prime p >= 5", long(p));
    const int n = int(p + 5) / 2;
    const int want = (p % 12 == 1 || p % 12 == 5) ? int(p) + 11 : int(p) + 5;
    if (want != psi_expected_degree(n)) throw Error(ErrorCode::InternalMismatch, "degree table and parity rule disagree", long(p));
    // below 11 the universal Ψ_n carries p in its denominators, so the audit runs over Q
    if (p < 11) {
        const QPoly P = psi_table_rational(n).Psi.back();
        if (P.is_zero() || P.weighted_degree() != want)
            throw Error(ErrorCode::DegreeMismatch, "Ψ_{(p+5)/2} has the wrong weighted degree", want);
        return true;
    }
    const WPoly P = psi_poly(p);
    if (P.is_zero()) throw Error(ErrorCode::DegreeMismatch, "Ψ_{(p+5)/2} ≡ 0 mod p", long(p));
    if (!P.is_homogeneous(want)) throw Error(ErrorCode::DegreeMismatch, "Ψ_{(p+5)/2} has the wrong weighted degree", want);
    return true;
}

Proportionality proportionality(const WPoly& lhs, const WPoly& rhs) {
    Proportionality r;
    const PrimePower& pm = lhs.modulus();
    r.c = ResidueInt::zero(pm);
    if (lhs.is_zero() || rhs.is_zero()) {
        r.counterexample = lhs.is_zero() ? "lhs vanishes identically" : "rhs vanishes identically";
        return r;
    }
    const ResidueInt l0(pm, int64_t(lhs.terms().front().c));
    const ResidueInt r0(pm, int64_t(rhs.terms().front().c));
    const WPoly nl = lhs * l0.inverse(), nr = rhs * r0.inverse();
    if (nl == nr) {
        r.proportional = true;
        r.c = l0 * r0.inverse();
        return r;
    }
    // first monomial in (e4, e6) order where the normalized forms differ
    std::vector<std::pair<int, int>> keys;
    for (const auto* w : {&nl, &nr})
        for (const auto& t : w->terms()) keys.emplace_back(t.e4, t.e6);
    std::sort(keys.begin(), keys.end());
    for (auto [e4, e6] : keys) {
        if (nl.coeff(e4, e6) == nr.coeff(e4, e6)) continue;
        std::ostringstream os;
        os << "z4^" << e4 << " z6^" << e6 << ": " << nl.coeff(e4, e6).value() << " vs " << nr.coeff(e4, e6).value();
        r.counterexample = os.str();
        break;
    }
    return r;
}

bool q_linearly_independent(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto& [k, c] = *a.terms().begin();
    const mpq_class bk = b.coeff(k.first, k.second);
    if (bk == 0) return true;
    return a * bk != b * c;
}

ScanRow conjecture_row(uint64_t p) {
    require_prime_11(p);
    const PrimePower pm = field(p);
    ScanRow row;
    row.p = p;
    row.class_mod_12 = int(p % 12);
    const PsiTable t = psi_table(p);
    row.psi_recurrence_ok = true;  // psi_table throws on a determinant/recurrence disagreement
    const WPoly& P = t.Psi.back();
    row.psi_degree = P.weighted_degree().value_or(-1);
    row.degree_ok = !P.is_zero() && P.is_homogeneous((p % 12 == 1 || p % 12 == 5) ? int(p) + 11 : int(p) + 5);
    const ResidueInt zero = ResidueInt::zero(pm), one = ResidueInt::one(pm);
    row.golem_01 = !P.evaluate(zero, one).is_zero();
    row.golem_10 = !P.evaluate(one, zero).is_zero();
    const bool times_z6 = row.class_mod_12 == 7 || row.class_mod_12 == 11;
    const WPoly lhs = times_z6 ? P.mul_monomial(0, 1) : P;
    const Proportionality pr = proportionality(lhs, discriminant(pm) * hasse_poly(pm));
    row.proportional = pr.proportional;
    if (pr.proportional) row.constant_c = pr.c.value();
    row.counterexample = pr.counterexample;
    return row;
}

std::vector<ScanRow> conjecture_scan(uint64_t pmin, uint64_t pmax, unsigned threads) {
    std::vector<uint64_t> primes;
    for (uint64_t p = std::max<uint64_t>(pmin, 11); p <= pmax; ++p) {
        bool prime = true;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(p);
    }
    std::vector<ScanRow> rows(primes.size());
    std::vector<std::exception_ptr> errs(primes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
            try {
                rows[i] = conjecture_row(primes[i]);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(primes.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace hd
