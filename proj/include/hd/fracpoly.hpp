#pragma once

#include "hd/upoly.hpp"

namespace hd {

/// num / f^e in S[x]_f for a fixed polynomial f (the curve cubic).
class FracPoly {
public:
    FracPoly() = default;
    FracPoly(UPoly num, UPoly f, unsigned e = 0);
    static FracPoly polynomial(const UPoly& num, const UPoly& f) { return FracPoly(num, f, 0); }

    const UPoly& num() const { return num_; }
    const UPoly& f() const { return f_; }
    unsigned f_exp() const { return e_; }
    const PrimePower& modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }

    /// Same value written over f^e for e >= f_exp().
    UPoly numerator_over(unsigned e) const;

    FracPoly operator-() const { return FracPoly(-num_, f_, e_); }
    friend FracPoly operator+(const FracPoly& a, const FracPoly& b);
    friend FracPoly operator-(const FracPoly& a, const FracPoly& b) { return a + (-b); }
    friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
    friend FracPoly operator*(const FracPoly& a, const UPoly& b) { return FracPoly(a.num_ * b, a.f_, a.e_); }
    friend FracPoly operator*(const FracPoly& a, const ResidueInt& c) { return FracPoly(a.num_ * c, a.f_, a.e_); }
    friend bool operator==(const FracPoly& a, const FracPoly& b);
    friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

    FracPoly derivative() const;
    /// Divide by f^k.
    FracPoly over_f(unsigned k) const { return FracPoly(num_, f_, e_ + k); }
    FracPoly reduce_to(unsigned m) const;
    FracPoly lift_to(unsigned m) const;

private:
    UPoly num_;
    UPoly f_;
    unsigned e_ = 0;
};

}  // namespace hd
