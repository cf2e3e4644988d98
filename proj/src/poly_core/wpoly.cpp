#include "hd/wpoly.hpp"

#include <algorithm>
#include <tuple>

namespace hd {

namespace {

bool key_less(const WTerm& a, const WTerm& b) {
    return a.e4 != b.e4 ? a.e4 < b.e4 : a.e6 < b.e6;
}

}  // namespace

WPoly WPoly::constant(const ResidueInt& c) { return monomial(c, 0, 0); }

WPoly WPoly::monomial(const ResidueInt& c, int e4, int e6) {
    WPoly r(c.modulus());
    if (!c.is_zero()) r.t_.push_back({e4, e6, c.value()});
    return r;
}

WPoly WPoly::from_terms(const PrimePower& pm, const std::vector<std::tuple<int, int, int64_t>>& t) {
    WPoly r(pm);
    for (auto [e4, e6, c] : t) r.t_.push_back({e4, e6, reduce_signed(c, pm.modulus())});
    r.normalize();
    return r;
}

void WPoly::normalize() {
    std::sort(t_.begin(), t_.end(), key_less);
    std::vector<WTerm> out;
    out.reserve(t_.size());
    const uint64_t n = pm_.modulus();
    for (const auto& t : t_) {
        if (!out.empty() && out.back().e4 == t.e4 && out.back().e6 == t.e6) {
            out.back().c = (out.back().c + t.c) % n;
        } else {
            out.push_back(t);
            out.back().c %= n;
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const WTerm& t) { return t.c == 0; }),
              out.end());
    t_ = std::move(out);
}

ResidueInt WPoly::coeff(int e4, int e6) const {
    WTerm key{e4, e6, 0};
    auto it = std::lower_bound(t_.begin(), t_.end(), key, key_less);
    if (it != t_.end() && it->e4 == e4 && it->e6 == e6) return ResidueInt::from_raw(pm_, it->c);
    return ResidueInt::zero(pm_);
}

bool WPoly::is_homogeneous(int d) const {
    return std::all_of(t_.begin(), t_.end(), [d](const WTerm& t) { return 4 * t.e4 + 6 * t.e6 == d; });
}

std::optional<int> WPoly::weighted_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = 4 * t_[0].e4 + 6 * t_[0].e6;
    if (!is_homogeneous(d)) return std::nullopt;
    return d;
}

WPoly WPoly::operator-() const {
    WPoly r(*this);
    for (auto& t : r.t_) t.c = pm_.modulus() - t.c;
    return r;
}

WPoly operator+(const WPoly& a, const WPoly& b) {
    require_same(a.pm_, b.pm_);
    WPoly r(a.pm_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    const uint64_t n = a.pm_.modulus();
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
        if (j == b.t_.size() || (i < a.t_.size() && key_less(a.t_[i], b.t_[j]))) {
            r.t_.push_back(a.t_[i++]);
        } else if (i == a.t_.size() || key_less(b.t_[j], a.t_[i])) {
            r.t_.push_back(b.t_[j++]);
        } else {
            uint64_t c = a.t_[i].c + b.t_[j].c;
            if (c >= n) c -= n;
            if (c) r.t_.push_back({a.t_[i].e4, a.t_[i].e6, c});
            ++i;
            ++j;
        }
    }
    return r;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    require_same(a.pm_, b.pm_);
    WPoly r(a.pm_);
    if (a.is_zero() || b.is_zero()) return r;
    const uint64_t n = a.pm_.modulus();
    r.t_.reserve(a.t_.size() * b.t_.size());
    for (const auto& s : a.t_)
        for (const auto& t : b.t_) r.t_.push_back({s.e4 + t.e4, s.e6 + t.e6, mulmod(s.c, t.c, n)});
    r.normalize();
    return r;
}

WPoly operator*(const WPoly& a, const ResidueInt& c) {
    require_same(a.pm_, c.modulus());
    WPoly r(a);
    for (auto& t : r.t_) t.c = mulmod(t.c, c.value(), a.pm_.modulus());
    r.normalize();
    return r;
}

bool operator==(const WPoly& a, const WPoly& b) {
    require_same(a.pm_, b.pm_);
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].e4 != b.t_[i].e4 || a.t_[i].e6 != b.t_[i].e6 || a.t_[i].c != b.t_[i].c)
            return false;
    return true;
}

WPoly WPoly::pow(unsigned e) const {
    WPoly r = constant(ResidueInt::one(pm_));
    WPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

WPoly WPoly::mul_monomial(int e4, int e6) const {
    WPoly r(*this);
    for (auto& t : r.t_) {
        t.e4 += e4;
        t.e6 += e6;
    }
    return r;
}

WPoly WPoly::twist(int k) const {
    WPoly r(*this);
    for (auto& t : r.t_) {
        t.e4 *= k;
        t.e6 *= k;
    }
    return r;
}

ResidueInt WPoly::evaluate(const ResidueInt& a, const ResidueInt& b) const {
    require_same(pm_, a.modulus());
    require_same(pm_, b.modulus());
    ResidueInt acc = ResidueInt::zero(pm_);
    for (const auto& t : t_) acc += ResidueInt::from_raw(pm_, t.c) * a.pow(t.e4) * b.pow(t.e6);
    return acc;
}

WPoly WPoly::restrict_z4_zero() const {
    WPoly r(pm_);
    for (const auto& t : t_)
        if (t.e4 == 0) r.t_.push_back(t);
    return r;
}

WPoly WPoly::reduce_to(unsigned m) const {
    if (m > pm_.m()) throw Error(ErrorCode::ModulusMismatch, "reduce_to cannot raise precision");
    WPoly r(pm_.with_exponent(m));
    r.t_ = t_;
    r.normalize();
    return r;
}

WPoly WPoly::lift_to(unsigned m) const {
    if (m < pm_.m()) return reduce_to(m);
    WPoly r(pm_.with_exponent(m));
    r.t_ = t_;
    return r;
}

WPoly WPoly::divide_by_p() const {
    if (pm_.m() < 2) throw Error(ErrorCode::DivisionFailure, "cannot divide by p mod p");
    WPoly r(pm_.with_exponent(pm_.m() - 1));
    for (const auto& t : t_) {
        if (t.c % pm_.p() != 0) throw Error(ErrorCode::DivisionFailure, "WPoly not divisible by p");
        r.t_.push_back({t.e4, t.e6, t.c / pm_.p()});
    }
    r.normalize();
    return r;
}

std::pair<int, int> WPoly::monomial_content() const {
    if (t_.empty()) return {0, 0};
    int m4 = t_[0].e4, m6 = t_[0].e6;
    for (const auto& t : t_) {
        m4 = std::min(m4, t.e4);
        m6 = std::min(m6, t.e6);
    }
    return {m4, m6};
}

namespace {

// Division in the monomial order where `first` is the dominant variable.
std::optional<WPoly> divide_in_order(const WPoly& a, const WPoly& b, bool z4_first) {
    auto greater = [z4_first](const WTerm& s, const WTerm& t) {
        return z4_first ? std::tie(s.e4, s.e6) > std::tie(t.e4, t.e6)
                        : std::tie(s.e6, s.e4) > std::tie(t.e6, t.e4);
    };
    const PrimePower& pm = a.modulus();
    WTerm lb = b.terms()[0];
    for (const auto& t : b.terms())
        if (greater(t, lb)) lb = t;
    if (lb.c % pm.p() == 0) return std::nullopt;
    ResidueInt inv = ResidueInt::from_raw(pm, lb.c).inverse();
    WPoly rem = a, quo(pm);
    while (!rem.is_zero()) {
        WTerm lr = rem.terms()[0];
        for (const auto& t : rem.terms())
            if (greater(t, lr)) lr = t;
        if (lr.e4 < lb.e4 || lr.e6 < lb.e6) return std::nullopt;
        WPoly q = WPoly::monomial(ResidueInt::from_raw(pm, lr.c) * inv, lr.e4 - lb.e4, lr.e6 - lb.e6);
        quo += q;
        rem -= q * b;
    }
    return quo;
}

}  // namespace

std::optional<WPoly> WPoly::exact_divide(const WPoly& b) const {
    require_same(pm_, b.pm_);
    if (b.is_zero()) throw Error(ErrorCode::DivisionFailure, "division by zero polynomial");
    if (is_zero()) return WPoly(pm_);
    // the leading coefficient must be a unit in at least one of the two orders
    for (bool z4_first : {true, false})
        if (auto r = divide_in_order(*this, b, z4_first)) return r;
    return std::nullopt;
}

}  // namespace hd
