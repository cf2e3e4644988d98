#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hd/residue.hpp"

namespace hd {

/// Dense univariate polynomial over Z/p^m, trailing zeros trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const PrimePower& pm) : pm_(pm) {}
    UPoly(const PrimePower& pm, const std::vector<int64_t>& coeffs);

    static UPoly from_raw(const PrimePower& pm, std::vector<uint64_t> coeffs);
    static UPoly constant(const ResidueInt& c);
    static UPoly monomial(const ResidueInt& c, std::size_t deg);
    static UPoly x(const PrimePower& pm) { return monomial(ResidueInt::one(pm), 1); }

    const PrimePower& modulus() const { return pm_; }
    /// -1 for the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    ResidueInt coeff(std::size_t i) const {
        return ResidueInt::from_raw(pm_, i < c_.size() ? c_[i] : 0);
    }
    const std::vector<uint64_t>& raw() const { return c_; }
    void set_coeff(std::size_t i, const ResidueInt& c);

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const ResidueInt& c);
    friend UPoly operator*(const ResidueInt& c, const UPoly& a) { return a * c; }
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly pow(uint64_t e) const;
    /// P(x) -> P(x^k); with k = p this is compose_xp.
    UPoly compose_pow(std::size_t k) const;
    UPoly compose_xp() const { return compose_pow(pm_.p()); }
    UPoly derivative() const;
    /// Multiply by x^k.
    UPoly shift(std::size_t k) const;
    ResidueInt eval(const ResidueInt& x) const;

    /// Quotient and remainder by a monic divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& monic) const;
    UPoly rem(const UPoly& monic) const { return divmod(monic).second; }

    UPoly reduce_to(unsigned m) const;
    /// Same representatives at a higher precision.
    UPoly lift_to(unsigned m) const;
    /// Exact division of every coefficient by p (precision drops by one).
    UPoly divide_by_p() const;
    /// Multiply representatives by p, landing at precision m+1.
    UPoly times_p_lifted() const;

private:
    void trim();
    std::vector<uint64_t> c_;
    PrimePower pm_;
};

/**
 * The W with W' = P and W(0) = 0. A monomial c x^{n-1} with n = p^k n' needs
 * p^k | c; its primitive is (c/p^k) n'^{-1} x^n computed on the integer
 * representative, so the top k digits of that coefficient are not determined.
 * Throws NotIntegrable with detail() = n/p on the first offending monomial.
 */
UPoly antiderivative(const UPoly& P);

}  // namespace hd
