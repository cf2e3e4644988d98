#pragma once

#include <cstdint>
#include <string>

#include "hd/error.hpp"

namespace hd {

bool is_prime(uint64_t n);

/**
 * The ring Z/p^m for a prime p >= 5.
 *
 * p^m must stay below 2^62 so that sums of two residues never overflow and
 * one guard digit (p^{m+1}) is usually available for exact division by p.
 */
class PrimePower {
public:
    PrimePower() = default;
    PrimePower(uint64_t p, unsigned m);

    uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    uint64_t modulus() const { return pm_; }

    /// Same prime, different exponent.
    PrimePower with_exponent(unsigned m) const { return PrimePower(p_, m); }
    PrimePower guard() const { return with_exponent(m_ + 1); }

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }
    friend bool operator!=(const PrimePower& a, const PrimePower& b) { return !(a == b); }

private:
    uint64_t p_ = 0;
    unsigned m_ = 0;
    uint64_t pm_ = 0;
};

void require_same(const PrimePower& a, const PrimePower& b);

/// Reduce a signed integer into [0, n).
uint64_t reduce_signed(int64_t v, uint64_t n);
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t n);
/// Inverse of a mod n via extended Euclid; throws NotAUnit if gcd(a, n) != 1.
uint64_t invmod(uint64_t a, uint64_t n);

class ResidueInt {
public:
    ResidueInt() = default;
    ResidueInt(const PrimePower& pm, int64_t v) : v_(reduce_signed(v, pm.modulus())), pm_(pm) {}

    static ResidueInt from_raw(const PrimePower& pm, uint64_t v) {
        ResidueInt r;
        r.v_ = v % pm.modulus();
        r.pm_ = pm;
        return r;
    }
    static ResidueInt zero(const PrimePower& pm) { return from_raw(pm, 0); }
    static ResidueInt one(const PrimePower& pm) { return from_raw(pm, 1); }

    uint64_t value() const { return v_; }
    const PrimePower& modulus() const { return pm_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % pm_.modulus(); }
    bool is_unit() const { return v_ % pm_.p() != 0; }
    /// Signed representative in (-p^m/2, p^m/2].
    int64_t centered() const;

    ResidueInt operator-() const { return from_raw(pm_, v_ == 0 ? 0 : pm_.modulus() - v_); }
    ResidueInt& operator+=(const ResidueInt& o);
    ResidueInt& operator-=(const ResidueInt& o);
    ResidueInt& operator*=(const ResidueInt& o);
    ResidueInt& operator*=(int64_t k) { return *this *= ResidueInt(pm_, k); }

    friend ResidueInt operator+(ResidueInt a, const ResidueInt& b) { return a += b; }
    friend ResidueInt operator-(ResidueInt a, const ResidueInt& b) { return a -= b; }
    friend ResidueInt operator*(ResidueInt a, const ResidueInt& b) { return a *= b; }
    friend ResidueInt operator*(ResidueInt a, int64_t k) { return a *= k; }
    friend ResidueInt operator*(int64_t k, ResidueInt a) { return a *= k; }

    friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
        require_same(a.pm_, b.pm_);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ResidueInt& a, const ResidueInt& b) { return !(a == b); }

    ResidueInt pow(uint64_t e) const { return from_raw(pm_, powmod(v_, e, pm_.modulus())); }
    ResidueInt inverse() const;
    /// Square root congruent to 1 mod p of a unit congruent to 1 mod p.
    ResidueInt sqrt_unit() const;

    /// Reinterpret the representative at another precision of the same prime.
    /// Going down reduces; going up keeps the representative (a lift).
    ResidueInt reduce_to(unsigned m) const { return from_raw(pm_.with_exponent(m), v_); }
    ResidueInt lift_to(unsigned m) const;
    /// Exact division by p; the result lives mod p^{m-1}.
    ResidueInt divide_by_p() const;

    std::string to_string() const { return std::to_string(v_); }

private:
    uint64_t v_ = 0;
    PrimePower pm_;
};

inline ResidueInt inverse(const ResidueInt& u) { return u.inverse(); }
inline ResidueInt sqrt_unit(const ResidueInt& u) { return u.sqrt_unit(); }

/// The p-derivation on Z_p (Frobenius = identity): (a - a^p)/p mod p^m.
ResidueInt delta_scalar(int64_t a, const PrimePower& pm);
/// Same, from a representative a mod p^{m+1}; the result only depends on that.
ResidueInt delta_scalar(const ResidueInt& a_guard, const PrimePower& pm);

}  // namespace hd
