#include "hd/residue.hpp"

#include <limits>

namespace hd {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower::PrimePower(uint64_t p, unsigned m) : p_(p), m_(m) {
    if (p < 5 || !is_prime(p))
        throw Error(ErrorCode::InvalidPrime, "p must be a prime >= 5, got " + std::to_string(p));
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "precision m must be >= 1");
    const uint64_t limit = uint64_t(1) << 62;
    uint64_t acc = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (acc > limit / p)
            throw Error(ErrorCode::PrecisionOverflow,
                        std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^62");
        acc *= p;
    }
    pm_ = acc;
}

void require_same(const PrimePower& a, const PrimePower& b) {
    if (a != b)
        throw Error(ErrorCode::ModulusMismatch,
                    std::to_string(a.p()) + "^" + std::to_string(a.m()) + " vs " +
                        std::to_string(b.p()) + "^" + std::to_string(b.m()));
}

uint64_t reduce_signed(int64_t v, uint64_t n) {
    if (v >= 0) return uint64_t(v) % n;
    // avoid overflow on INT64_MIN
    uint64_t mag = uint64_t(-(v + 1)) + 1;
    uint64_t r = mag % n;
    return r == 0 ? 0 : n - r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return uint64_t((unsigned __int128)a * b % n);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t n) {
    __int128 r0 = n, r1 = a % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " mod " + std::to_string(n));
    s0 %= (__int128)n;
    if (s0 < 0) s0 += n;
    return uint64_t(s0);
}

int64_t ResidueInt::centered() const {
    uint64_t n = pm_.modulus();
    return v_ > n / 2 ? -int64_t(n - v_) : int64_t(v_);
}

ResidueInt& ResidueInt::operator+=(const ResidueInt& o) {
    require_same(pm_, o.pm_);
    v_ += o.v_;
    if (v_ >= pm_.modulus()) v_ -= pm_.modulus();
    return *this;
}

ResidueInt& ResidueInt::operator-=(const ResidueInt& o) {
    require_same(pm_, o.pm_);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + pm_.modulus() - o.v_;
    return *this;
}

ResidueInt& ResidueInt::operator*=(const ResidueInt& o) {
    require_same(pm_, o.pm_);
    v_ = mulmod(v_, o.v_, pm_.modulus());
    return *this;
}

ResidueInt ResidueInt::inverse() const {
    if (!is_unit())
        throw Error(ErrorCode::NotAUnit, std::to_string(v_) + " is divisible by " +
                                             std::to_string(pm_.p()));
    return from_raw(pm_, invmod(v_, pm_.modulus()));
}

ResidueInt ResidueInt::sqrt_unit() const {
    if (v_ % pm_.p() != 1)
        throw Error(ErrorCode::NotCongruentOne, std::to_string(v_) + " is not 1 mod p");
    // Newton: r <- (r + u/r)/2, doubling p-adic precision each step
    ResidueInt r = one(pm_);
    ResidueInt half = ResidueInt(pm_, 2).inverse();
    for (unsigned prec = 1; prec < pm_.m(); prec *= 2) r = (r + *this * r.inverse()) * half;
    return r;
}

ResidueInt ResidueInt::lift_to(unsigned m) const {
    if (m < pm_.m()) return reduce_to(m);
    return from_raw(pm_.with_exponent(m), v_);
}

ResidueInt ResidueInt::divide_by_p() const {
    if (pm_.m() < 2) throw Error(ErrorCode::DivisionFailure, "cannot divide by p mod p");
    if (v_ % pm_.p() != 0)
        throw Error(ErrorCode::DivisionFailure, std::to_string(v_) + " not divisible by p");
    return from_raw(pm_.with_exponent(pm_.m() - 1), v_ / pm_.p());
}

ResidueInt delta_scalar(const ResidueInt& a_guard, const PrimePower& pm) {
    if (a_guard.modulus() != pm.guard())
        throw Error(ErrorCode::ModulusMismatch, "delta_scalar needs a representative mod p^{m+1}");
    return (a_guard - a_guard.pow(pm.p())).divide_by_p();
}

ResidueInt delta_scalar(int64_t a, const PrimePower& pm) {
    return delta_scalar(ResidueInt(pm.guard(), a), pm);
}

}  // namespace hd
