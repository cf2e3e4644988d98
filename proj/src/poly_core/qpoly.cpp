#include "hd/qpoly.hpp"

#include <sstream>

namespace hd {

QPoly QPoly::constant(const mpq_class& c) { return monomial(c, 0, 0); }

QPoly QPoly::monomial(const mpq_class& c, int e4, int e6) {
    QPoly r;
    if (c != 0) r.t_[{e4, e6}] = c;
    return r;
}

mpq_class QPoly::coeff(int e4, int e6) const {
    auto it = t_.find({e4, e6});
    return it == t_.end() ? mpq_class(0) : it->second;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r(a);
    for (const auto& [k, c] : b.t_) {
        mpq_class& s = r.t_[k];
        s += c;
        if (s == 0) r.t_.erase(k);
    }
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            QPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            r.t_[k] += ca * cb;
        }
    for (auto it = r.t_.begin(); it != r.t_.end();) it = it->second == 0 ? r.t_.erase(it) : std::next(it);
    return r;
}

QPoly operator*(const QPoly& a, const mpq_class& c) {
    if (c == 0) return QPoly();
    QPoly r(a);
    for (auto& [k, v] : r.t_) v *= c;
    return r;
}

QPoly QPoly::mul_monomial(int e4, int e6) const {
    QPoly r;
    for (const auto& [k, c] : t_) r.t_[{k.first + e4, k.second + e6}] = c;
    return r;
}

QPoly QPoly::pow(unsigned e) const {
    QPoly r = constant(1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::optional<int> QPoly::weighted_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = 4 * t_.begin()->first.first + 6 * t_.begin()->first.second;
    for (const auto& [k, c] : t_)
        if (4 * k.first + 6 * k.second != d) return std::nullopt;
    return d;
}

bool QPoly::is_polynomial() const {
    for (const auto& [k, c] : t_)
        if (k.first < 0 || k.second < 0) return false;
    return true;
}

namespace {

mpq_class qpow(const mpq_class& x, int e) {
    mpq_class r = 1, b = x;
    bool inv = e < 0;
    unsigned u = unsigned(inv ? -e : e);
    while (u) {
        if (u & 1) r *= b;
        u >>= 1;
        if (u) b *= b;
    }
    return inv ? mpq_class(1 / r) : r;
}

}  // namespace

mpq_class QPoly::evaluate(const mpq_class& u, const mpq_class& v) const {
    mpq_class acc = 0;
    for (const auto& [k, c] : t_) acc += c * qpow(u, k.first) * qpow(v, k.second);
    return acc;
}

ResidueInt reduce_rational(const mpq_class& r, const PrimePower& pm) {
    mpz_class n = pm.modulus();
    mpz_class num = r.get_num() % n, den = r.get_den() % n;
    if (num < 0) num += n;
    ResidueInt d = ResidueInt::from_raw(pm, den.get_ui());
    if (!d.is_unit()) throw Error(ErrorCode::NotAUnit, "denominator divisible by p: " + r.get_str());
    return ResidueInt::from_raw(pm, num.get_ui()) * d.inverse();
}

WPoly QPoly::reduce(const PrimePower& pm) const {
    WPoly r(pm);
    for (const auto& [k, c] : t_) {
        if (k.first < 0 || k.second < 0)
            throw Error(ErrorCode::InvalidArgument, "cannot reduce a Laurent term");
        r += WPoly::monomial(reduce_rational(c, pm), k.first, k.second);
    }
    return r;
}

std::string QPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*U^" << k.first << "*V^" << k.second;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hd
