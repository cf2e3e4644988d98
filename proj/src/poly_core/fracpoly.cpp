#include "hd/fracpoly.hpp"

namespace hd {

FracPoly::FracPoly(UPoly num, UPoly f, unsigned e) : num_(std::move(num)), f_(std::move(f)), e_(e) {
    require_same(num_.modulus(), f_.modulus());
}

UPoly FracPoly::numerator_over(unsigned e) const {
    if (e < e_) throw Error(ErrorCode::InvalidArgument, "numerator_over: exponent too small");
    return e == e_ ? num_ : num_ * f_.pow(e - e_);
}

FracPoly operator+(const FracPoly& a, const FracPoly& b) {
    if (a.f_ != b.f_) throw Error(ErrorCode::InvalidArgument, "FracPoly over different f");
    unsigned e = std::max(a.e_, b.e_);
    return FracPoly(a.numerator_over(e) + b.numerator_over(e), a.f_, e);
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
    if (a.f_ != b.f_) throw Error(ErrorCode::InvalidArgument, "FracPoly over different f");
    return FracPoly(a.num_ * b.num_, a.f_, a.e_ + b.e_);
}

bool operator==(const FracPoly& a, const FracPoly& b) {
    // f is monic, so it is not a zero divisor and clearing denominators is faithful
    unsigned e = std::max(a.e_, b.e_);
    return a.numerator_over(e) == b.numerator_over(e);
}

FracPoly FracPoly::derivative() const {
    // (N / f^e)' = (N' f - e N f') / f^{e+1}
    if (e_ == 0) return FracPoly(num_.derivative(), f_, 0);
    UPoly top = num_.derivative() * f_ - num_ * f_.derivative() * ResidueInt(modulus(), e_);
    return FracPoly(top, f_, e_ + 1);
}

FracPoly FracPoly::reduce_to(unsigned m) const {
    return FracPoly(num_.reduce_to(m), f_.reduce_to(m), e_);
}

FracPoly FracPoly::lift_to(unsigned m) const {
    return FracPoly(num_.lift_to(m), f_.lift_to(m), e_);
}

}  // namespace hd
