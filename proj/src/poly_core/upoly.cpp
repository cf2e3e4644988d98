#include "hd/upoly.hpp"

namespace hd {

UPoly::UPoly(const PrimePower& pm, const std::vector<int64_t>& coeffs) : pm_(pm) {
    c_.reserve(coeffs.size());
    for (int64_t v : coeffs) c_.push_back(reduce_signed(v, pm.modulus()));
    trim();
}

UPoly UPoly::from_raw(const PrimePower& pm, std::vector<uint64_t> coeffs) {
    UPoly r(pm);
    for (auto& v : coeffs) v %= pm.modulus();
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

UPoly UPoly::constant(const ResidueInt& c) { return monomial(c, 0); }

UPoly UPoly::monomial(const ResidueInt& c, std::size_t deg) {
    UPoly r(c.modulus());
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, 0);
    r.c_[deg] = c.value();
    return r;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UPoly::set_coeff(std::size_t i, const ResidueInt& c) {
    require_same(pm_, c.modulus());
    if (i >= c_.size()) {
        if (c.is_zero()) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = c.value();
    trim();
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& v : r.c_) v = v == 0 ? 0 : pm_.modulus() - v;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    require_same(pm_, o.pm_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    const uint64_t n = pm_.modulus();
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
        if (c_[i] >= n) c_[i] -= n;
    }
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    require_same(pm_, o.pm_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    const uint64_t n = pm_.modulus();
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + n - o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    require_same(a.pm_, b.pm_);
    UPoly r(a.pm_);
    if (a.is_zero() || b.is_zero()) return r;
    const uint64_t n = a.pm_.modulus();
    // accumulate in 128 bits and reduce lazily
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    const unsigned __int128 cap = ~(unsigned __int128)0 >> 2;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            unsigned __int128& s = acc[i + j];
            s += (unsigned __int128)a.c_[i] * b.c_[j];
            if (s > cap) s %= n;
        }
    }
    r.c_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = uint64_t(acc[k] % n);
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const ResidueInt& c) {
    require_same(a.pm_, c.modulus());
    UPoly r(a);
    for (auto& v : r.c_) v = mulmod(v, c.value(), a.pm_.modulus());
    r.trim();
    return r;
}

bool operator==(const UPoly& a, const UPoly& b) {
    require_same(a.pm_, b.pm_);
    return a.c_ == b.c_;
}

UPoly UPoly::pow(uint64_t e) const {
    UPoly r = constant(ResidueInt::one(pm_));
    UPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

UPoly UPoly::compose_pow(std::size_t k) const {
    UPoly r(pm_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r(pm_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulmod(c_[i], i, pm_.modulus());
    r.trim();
    return r;
}

UPoly UPoly::shift(std::size_t k) const {
    UPoly r(*this);
    if (!r.is_zero()) r.c_.insert(r.c_.begin(), k, 0);
    return r;
}

ResidueInt UPoly::eval(const ResidueInt& x) const {
    require_same(pm_, x.modulus());
    ResidueInt acc = ResidueInt::zero(pm_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + ResidueInt::from_raw(pm_, c_[i]);
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    require_same(pm_, d.pm_);
    if (d.is_zero() || d.c_.back() != 1 % pm_.modulus())
        throw Error(ErrorCode::InvalidArgument, "divmod needs a monic divisor");
    const uint64_t n = pm_.modulus();
    UPoly q(pm_), r(*this);
    const std::size_t dd = d.c_.size() - 1;
    if (r.c_.size() <= dd) return {q, r};
    q.c_.assign(r.c_.size() - dd, 0);
    for (std::size_t i = r.c_.size(); i-- > dd;) {
        uint64_t lead = r.c_[i];
        if (lead == 0) continue;
        q.c_[i - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) {
            uint64_t t = mulmod(lead, d.c_[j], n);
            uint64_t& s = r.c_[i - dd + j];
            s = s >= t ? s - t : s + n - t;
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

UPoly UPoly::reduce_to(unsigned m) const {
    if (m > pm_.m()) throw Error(ErrorCode::ModulusMismatch, "reduce_to cannot raise precision");
    return from_raw(pm_.with_exponent(m), c_);
}

UPoly UPoly::lift_to(unsigned m) const {
    if (m < pm_.m()) return reduce_to(m);
    UPoly r(pm_.with_exponent(m));
    r.c_ = c_;
    return r;
}

UPoly UPoly::divide_by_p() const {
    if (pm_.m() < 2) throw Error(ErrorCode::DivisionFailure, "cannot divide by p mod p");
    UPoly r(pm_.with_exponent(pm_.m() - 1));
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] % pm_.p() != 0)
            throw Error(ErrorCode::DivisionFailure,
                        "coefficient of x^" + std::to_string(i) + " not divisible by p", long(i));
        r.c_[i] = c_[i] / pm_.p();
    }
    r.trim();
    return r;
}

UPoly UPoly::times_p_lifted() const {
    UPoly r(pm_.guard());
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * pm_.p();
    return r;
}

UPoly antiderivative(const UPoly& P) {
    const PrimePower& pm = P.modulus();
    const uint64_t p = pm.p();
    std::vector<uint64_t> out(P.raw().size() + 1, 0);
    for (std::size_t i = 0; i < P.raw().size(); ++i) {
        uint64_t c = P.raw()[i];
        if (c == 0) continue;
        uint64_t n = i + 1, unit = n;
        unsigned k = 0;
        while (unit % p == 0) {
            unit /= p;
            ++k;
        }
        if (k >= pm.m())
            throw Error(ErrorCode::NotIntegrable,
                        "nonzero coefficient of x^" + std::to_string(i), long(n / p));
        uint64_t pk = 1;
        for (unsigned t = 0; t < k; ++t) pk *= p;
        if (c % pk != 0)
            throw Error(ErrorCode::NotIntegrable,
                        "coefficient of x^" + std::to_string(i) + " not divisible by p^" +
                            std::to_string(k),
                        long(n / p));
        out[n] = mulmod(c / pk, invmod(unit % pm.modulus(), pm.modulus()), pm.modulus());
    }
    return UPoly::from_raw(pm, std::move(out));
}

}  // namespace hd
