#include "hd/wxpoly.hpp"

namespace hd {

WXPoly WXPoly::constant(const WPoly& c) { return monomial(c, 0); }

WXPoly WXPoly::monomial(const WPoly& c, std::size_t deg) {
    WXPoly r(c.modulus());
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, WPoly(c.modulus()));
    r.c_[deg] = c;
    return r;
}

WXPoly WXPoly::universal_cubic(const PrimePower& pm) {
    WXPoly r(pm);
    ResidueInt one = ResidueInt::one(pm);
    r.c_ = {WPoly::z6(pm), WPoly::z4(pm), WPoly(pm), WPoly::constant(one)};
    return r;
}

void WXPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

WXPoly WXPoly::operator-() const {
    WXPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

WXPoly operator+(const WXPoly& a, const WXPoly& b) {
    require_same(a.pm_, b.pm_);
    WXPoly r(a);
    if (b.c_.size() > r.c_.size()) r.c_.resize(b.c_.size(), WPoly(a.pm_));
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

WXPoly operator*(const WXPoly& a, const WXPoly& b) {
    require_same(a.pm_, b.pm_);
    WXPoly r(a.pm_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, WPoly(a.pm_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

WXPoly operator*(const WXPoly& a, const WPoly& c) {
    WXPoly r(a);
    for (auto& x : r.c_) x = x * c;
    r.trim();
    return r;
}

bool operator==(const WXPoly& a, const WXPoly& b) {
    require_same(a.pm_, b.pm_);
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

WXPoly WXPoly::pow(unsigned e) const {
    WXPoly r = constant(WPoly::constant(ResidueInt::one(pm_)));
    WXPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

WXPoly WXPoly::compose_pow(std::size_t k) const {
    WXPoly r(pm_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, WPoly(pm_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

WXPoly WXPoly::derivative() const {
    WXPoly r(pm_);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * ResidueInt(pm_, int64_t(i)));
    r.trim();
    return r;
}

WXPoly WXPoly::antiderivative() const {
    WXPoly r(pm_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + 1, WPoly(pm_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        ResidueInt n(pm_, int64_t(i + 1));
        if (!n.is_unit())
            throw Error(ErrorCode::NotIntegrable, "nonzero coefficient of x^" + std::to_string(i),
                        long((i + 1) / pm_.p()));
        r.c_[i + 1] = c_[i] * n.inverse();
    }
    r.trim();
    return r;
}

WXPoly WXPoly::reduce_to(unsigned m) const {
    WXPoly r(pm_.with_exponent(m));
    for (const auto& c : c_) r.c_.push_back(c.reduce_to(m));
    r.trim();
    return r;
}

WXPoly WXPoly::divide_by_p() const {
    WXPoly r(pm_.with_exponent(pm_.m() - 1));
    for (const auto& c : c_) r.c_.push_back(c.divide_by_p());
    r.trim();
    return r;
}

WXPoly WXPoly::twist(int k) const {
    WXPoly r(*this);
    for (auto& c : r.c_) c = c.twist(k);
    return r;
}

}  // namespace hd
