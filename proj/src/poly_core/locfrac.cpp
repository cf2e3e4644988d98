#include "hd/locfrac.hpp"

#include <sstream>

namespace hd {

const char* localizer_name(Localizer l) {
    switch (l) {
    case Localizer::Z4: return "z4";
    case Localizer::Z6: return "z6";
    case Localizer::Delta: return "Delta";
    case Localizer::H: return "H";
    case Localizer::Psi: return "Psi";
    }
    return "?";
}

LocalizerSet::LocalizerSet(const PrimePower& pm, std::array<WPoly, kLocalizerCount> polys)
    : pm_(pm), polys_(std::move(polys)) {
    for (std::size_t i = 0; i < kLocalizerCount; ++i) {
        if (polys_[i].is_zero()) {
            polys_[i] = WPoly(pm);
            continue;
        }
        require_same(pm, polys_[i].modulus());
        auto d = polys_[i].weighted_degree();
        if (!d) throw Error(ErrorCode::InvalidArgument, "localizers must be homogeneous");
        degrees_[i] = *d;
    }
}

WPoly LocalizerSet::power(std::size_t i, int k) const {
    if (k == 0) return WPoly::constant(ResidueInt::one(pm_));
    if (i == std::size_t(Localizer::Z4)) return WPoly::constant(ResidueInt::one(pm_)).mul_monomial(k, 0);
    if (i == std::size_t(Localizer::Z6)) return WPoly::constant(ResidueInt::one(pm_)).mul_monomial(0, k);
    return polys_[i].pow(unsigned(k));
}

std::shared_ptr<const LocalizerSet> LocalizerSet::reduced(unsigned m) const {
    std::array<WPoly, kLocalizerCount> r;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) r[i] = polys_[i].reduce_to(m);
    return std::make_shared<const LocalizerSet>(pm_.with_exponent(m), std::move(r));
}

bool LocalizerSet::same_as(const LocalizerSet& o) const {
    if (this == &o) return true;
    if (pm_ != o.pm_) return false;
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (polys_[i] != o.polys_[i]) return false;
    return true;
}

namespace {

void require_compatible(const LocalizerSetPtr& a, const LocalizerSetPtr& b) {
    if (!a->same_as(*b)) throw Error(ErrorCode::ModulusMismatch, "LocFracs over different localizers");
}

}  // namespace

LocFrac::LocFrac(LocalizerSetPtr loc, WPoly num, Exponents den)
    : loc_(std::move(loc)), num_(std::move(num)), den_(den) {
    require_same(loc_->modulus(), num_.modulus());
    for (std::size_t i = 0; i < kLocalizerCount; ++i) {
        if (den_[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative denominator exponent");
        if (den_[i] > 0 && !loc_->available(i))
            throw Error(ErrorCode::DenominatorNotLocalizer,
                        std::string("localizer ") + localizer_name(Localizer(i)) + " not available");
    }
}

LocFrac LocFrac::constant(LocalizerSetPtr loc, const ResidueInt& c) {
    auto pm = loc->modulus();
    return LocFrac(std::move(loc), WPoly::constant(c.lift_to(pm.m())));
}

LocFrac LocFrac::constant(LocalizerSetPtr loc, int64_t c) {
    auto pm = loc->modulus();
    return LocFrac(std::move(loc), WPoly::constant(ResidueInt(pm, c)));
}

LocFrac LocFrac::inverse_power(LocalizerSetPtr loc, Localizer l, int k) {
    Exponents e{};
    e[std::size_t(l)] = k;
    auto pm = loc->modulus();
    return LocFrac(std::move(loc), WPoly::constant(ResidueInt::one(pm)), e);
}

WPoly LocFrac::numerator_over(const Exponents& target) const {
    WPoly r = num_;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) {
        int k = target[i] - den_[i];
        if (k < 0) throw Error(ErrorCode::InvalidArgument, "numerator_over: target too small");
        if (k == 0) continue;
        if (i == std::size_t(Localizer::Z4)) r = r.mul_monomial(k, 0);
        else if (i == std::size_t(Localizer::Z6)) r = r.mul_monomial(0, k);
        else r = r * loc_->power(i, k);
    }
    return r;
}

WPoly LocFrac::denominator() const {
    WPoly r = WPoly::constant(ResidueInt::one(modulus()));
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (den_[i]) r = r * loc_->power(i, den_[i]);
    return r;
}

LocFrac operator+(const LocFrac& a, const LocFrac& b) {
    require_compatible(a.loc_, b.loc_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LocFrac::Exponents e;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) e[i] = std::max(a.den_[i], b.den_[i]);
    return LocFrac(a.loc_, a.numerator_over(e) + b.numerator_over(e), e);
}

LocFrac operator*(const LocFrac& a, const LocFrac& b) {
    require_compatible(a.loc_, b.loc_);
    LocFrac::Exponents e;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) e[i] = a.den_[i] + b.den_[i];
    if (a.is_zero() || b.is_zero()) return LocFrac::zero(a.loc_);
    return LocFrac(a.loc_, a.num_ * b.num_, e);
}

bool operator==(const LocFrac& a, const LocFrac& b) {
    require_compatible(a.loc_, b.loc_);
    LocFrac::Exponents e;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) e[i] = std::max(a.den_[i], b.den_[i]);
    return a.numerator_over(e) == b.numerator_over(e);
}

LocFrac LocFrac::normalized() const {
    if (is_zero()) return zero(loc_);
    WPoly n = num_;
    Exponents d = den_;
    auto [c4, c6] = n.monomial_content();
    int k4 = std::min(c4, d[0]), k6 = std::min(c6, d[1]);
    n = n.mul_monomial(-k4, -k6);
    d[0] -= k4;
    d[1] -= k6;
    for (std::size_t i = 2; i < kLocalizerCount; ++i) {
        while (d[i] > 0) {
            auto q = n.exact_divide(loc_->poly(i));
            if (!q) break;
            n = *q;
            --d[i];
        }
    }
    return LocFrac(loc_, n, d);
}

LocFrac LocFrac::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DenominatorNotLocalizer, "inverse of zero");
    WPoly n = num_;
    Exponents factors{};
    auto [c4, c6] = n.monomial_content();
    n = n.mul_monomial(-c4, -c6);
    // A localizer L = z4^i z6^j L' is matched through its monomial-free part L':
    // 1/L' = z4^i z6^j / L.
    int m4 = 0, m6 = 0;
    for (std::size_t i = 2; i < kLocalizerCount; ++i) {
        if (!loc_->available(i) || loc_->poly(i).is_constant()) continue;
        auto [l4, l6] = loc_->poly(i).monomial_content();
        const WPoly core = loc_->poly(i).mul_monomial(-l4, -l6);
        while (!n.is_constant()) {
            auto q = n.exact_divide(core);
            if (!q) break;
            n = *q;
            ++factors[i];
            m4 += l4;
            m6 += l6;
        }
    }
    if (!n.is_constant() || !n.coeff(0, 0).is_unit())
        throw Error(ErrorCode::DenominatorNotLocalizer, "numerator is not a product of localizers");
    factors[0] = c4;
    factors[1] = c6;
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (factors[i] > 0 && !loc_->available(i))
            throw Error(ErrorCode::DenominatorNotLocalizer,
                        std::string("localizer ") + localizer_name(Localizer(i)) + " not available");
    WPoly top = WPoly::monomial(n.coeff(0, 0).inverse(), m4, m6);
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (den_[i]) top = top * loc_->power(i, den_[i]);
    return LocFrac(loc_, top, factors).normalized();
}

LocFrac LocFrac::pow(unsigned e) const {
    LocFrac r = constant(loc_, 1);
    LocFrac base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::optional<int> LocFrac::weighted_degree() const {
    auto d = num_.weighted_degree();
    if (!d) return std::nullopt;
    int deg = *d;
    for (std::size_t i = 0; i < kLocalizerCount; ++i) deg -= den_[i] * loc_->degree(i);
    return deg;
}

bool LocFrac::is_homogeneous(int d) const {
    if (is_zero()) return true;
    auto w = weighted_degree();
    return w && *w == d;
}

ResidueInt LocFrac::evaluate(const ResidueInt& a, const ResidueInt& b) const {
    ResidueInt den = ResidueInt::one(modulus());
    for (std::size_t i = 0; i < kLocalizerCount; ++i) {
        if (!den_[i]) continue;
        ResidueInt v = loc_->poly(i).evaluate(a, b);
        if (!v.is_unit())
            throw Error(ErrorCode::SingularPair,
                        std::string("localizer ") + localizer_name(Localizer(i)) + " vanishes at the pair");
        den *= v.pow(unsigned(den_[i]));
    }
    return num_.evaluate(a, b) * den.inverse();
}

LocFrac LocFrac::restrict_z4_zero() const {
    WPoly n = num_.restrict_z4_zero();
    Exponents d{};
    ResidueInt scale = ResidueInt::one(modulus());
    for (std::size_t i = 0; i < kLocalizerCount; ++i) {
        if (!den_[i]) continue;
        WPoly l = loc_->poly(i).restrict_z4_zero();
        if (l.size() != 1 || !l.terms()[0].c || l.terms()[0].c % modulus().p() == 0)
            throw Error(ErrorCode::SingularPair,
                        std::string("localizer ") + localizer_name(Localizer(i)) + " vanishes at z4 = 0");
        scale *= ResidueInt::from_raw(modulus(), l.terms()[0].c).pow(unsigned(den_[i]));
        d[1] += l.terms()[0].e6 * den_[i];
    }
    return LocFrac(loc_, n * scale.inverse(), d);
}

LocFrac LocFrac::reduce_to(unsigned m) const {
    return LocFrac(loc_->reduced(m), num_.reduce_to(m), den_);
}

LocFrac LocFrac::divide_by_p() const {
    return LocFrac(loc_->reduced(modulus().m() - 1), num_.divide_by_p(), den_);
}

std::string LocFrac::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& t : num_.terms()) {
        if (!first) os << " + ";
        first = false;
        os << t.c << "*z4^" << t.e4 << "*z6^" << t.e6;
    }
    if (first) os << "0";
    os << ")";
    for (std::size_t i = 0; i < kLocalizerCount; ++i)
        if (den_[i]) os << " / " << localizer_name(Localizer(i)) << "^" << den_[i];
    return os.str();
}

}  // namespace hd
