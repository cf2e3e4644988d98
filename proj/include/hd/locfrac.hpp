#pragma once

#include <array>
#include <memory>
#include <string>

#include "hd/wpoly.hpp"

namespace hd {

enum class Localizer { Z4 = 0, Z6 = 1, Delta = 2, H = 3, Psi = 4 };
constexpr std::size_t kLocalizerCount = 5;
const char* localizer_name(Localizer l);

/// The designated denominators {z4, z6, Δ, H, Ψ} at a fixed precision.
/// A slot holding the zero polynomial is unavailable.
class LocalizerSet {
public:
    LocalizerSet(const PrimePower& pm, std::array<WPoly, kLocalizerCount> polys);

    const PrimePower& modulus() const { return pm_; }
    const WPoly& poly(Localizer l) const { return polys_[std::size_t(l)]; }
    const WPoly& poly(std::size_t i) const { return polys_[i]; }
    bool available(std::size_t i) const { return !polys_[i].is_zero(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    /// L_i^k.
    WPoly power(std::size_t i, int k) const;

    std::shared_ptr<const LocalizerSet> reduced(unsigned m) const;
    bool same_as(const LocalizerSet& o) const;

private:
    PrimePower pm_;
    std::array<WPoly, kLocalizerCount> polys_;
    std::array<int, kLocalizerCount> degrees_{};
};

using LocalizerSetPtr = std::shared_ptr<const LocalizerSet>;

/// num / prod L_i^{den_i}: an element of M_Σ at finite precision.
class LocFrac {
public:
    using Exponents = std::array<int, kLocalizerCount>;

    LocFrac() = default;
    LocFrac(LocalizerSetPtr loc, WPoly num, Exponents den = {});
    static LocFrac constant(LocalizerSetPtr loc, const ResidueInt& c);
    static LocFrac constant(LocalizerSetPtr loc, int64_t c);
    static LocFrac zero(LocalizerSetPtr loc) { return constant(loc, 0); }
    /// 1 / L^k.
    static LocFrac inverse_power(LocalizerSetPtr loc, Localizer l, int k);

    const WPoly& num() const { return num_; }
    const Exponents& den() const { return den_; }
    const LocalizerSetPtr& localizers() const { return loc_; }
    const PrimePower& modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }
    /// Numerator of the same value written over prod L_i^{target_i}.
    WPoly numerator_over(const Exponents& target) const;
    WPoly denominator() const;

    LocFrac operator-() const { return LocFrac(loc_, -num_, den_); }
    friend LocFrac operator+(const LocFrac& a, const LocFrac& b);
    friend LocFrac operator-(const LocFrac& a, const LocFrac& b) { return a + (-b); }
    friend LocFrac operator*(const LocFrac& a, const LocFrac& b);
    friend LocFrac operator*(const LocFrac& a, const ResidueInt& c) { return LocFrac(a.loc_, a.num_ * c, a.den_); }
    friend LocFrac operator*(const ResidueInt& c, const LocFrac& a) { return a * c; }
    friend LocFrac operator*(const LocFrac& a, const WPoly& w) { return LocFrac(a.loc_, a.num_ * w, a.den_); }
    LocFrac& operator+=(const LocFrac& o) { return *this = *this + o; }
    LocFrac& operator-=(const LocFrac& o) { return *this = *this - o; }
    LocFrac& operator*=(const LocFrac& o) { return *this = *this * o; }
    /// Cross-multiplied equality.
    friend bool operator==(const LocFrac& a, const LocFrac& b);
    friend bool operator!=(const LocFrac& a, const LocFrac& b) { return !(a == b); }

    /// Cancel localizer factors shared by numerator and denominator.
    LocFrac normalized() const;
    /// Inverse of (unit constant) * (product of localizers); else DenominatorNotLocalizer.
    LocFrac inverse() const;
    LocFrac pow(unsigned e) const;

    std::optional<int> weighted_degree() const;
    bool is_homogeneous(int d) const;
    /// Value at z4 = a, z6 = b; SingularPair if a used localizer vanishes mod p there.
    ResidueInt evaluate(const ResidueInt& a, const ResidueInt& b) const;
    /// Set z4 = 0. The result only has z6 in the denominator.
    LocFrac restrict_z4_zero() const;

    LocFrac reduce_to(unsigned m) const;
    LocFrac divide_by_p() const;

    std::string to_string() const;

private:
    LocalizerSetPtr loc_;
    WPoly num_;
    Exponents den_{};
};

}  // namespace hd
