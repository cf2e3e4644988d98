#pragma once

#include <vector>

#include "hd/wpoly.hpp"

namespace hd {

/// Polynomial in x whose coefficients are WPolys in (z4, z6).
class WXPoly {
public:
    WXPoly() = default;
    explicit WXPoly(const PrimePower& pm) : pm_(pm) {}
    static WXPoly constant(const WPoly& c);
    static WXPoly monomial(const WPoly& c, std::size_t deg);
    /// x^3 + z4 x + z6.
    static WXPoly universal_cubic(const PrimePower& pm);

    const PrimePower& modulus() const { return pm_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    WPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : WPoly(pm_); }
    const std::vector<WPoly>& coeffs() const { return c_; }

    WXPoly operator-() const;
    friend WXPoly operator+(const WXPoly& a, const WXPoly& b);
    friend WXPoly operator-(const WXPoly& a, const WXPoly& b) { return a + (-b); }
    friend WXPoly operator*(const WXPoly& a, const WXPoly& b);
    friend WXPoly operator*(const WXPoly& a, const WPoly& c);
    friend bool operator==(const WXPoly& a, const WXPoly& b);

    WXPoly pow(unsigned e) const;
    WXPoly compose_pow(std::size_t k) const;
    WXPoly derivative() const;
    /// Primitive with zero constant term; every degree n must be a unit mod p
    /// where the coefficient of x^{n-1} is nonzero.
    WXPoly antiderivative() const;
    WXPoly reduce_to(unsigned m) const;
    WXPoly divide_by_p() const;
    /// Apply z4 -> z4^k, z6 -> z6^k to every coefficient.
    WXPoly twist(int k) const;

private:
    void trim();
    std::vector<WPoly> c_;
    PrimePower pm_;
};

}  // namespace hd
