#pragma once

#include <optional>
#include <vector>

#include "hd/residue.hpp"

namespace hd {

struct WTerm {
    int e4 = 0;
    int e6 = 0;
    uint64_t c = 0;
};

/**
 * Sparse polynomial in z4, z6 (weights 4 and 6) over Z/p^m.
 * Terms are kept sorted by (e4, e6) with no zero coefficients.
 */
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(const PrimePower& pm) : pm_(pm) {}

    static WPoly constant(const ResidueInt& c);
    static WPoly monomial(const ResidueInt& c, int e4, int e6);
    static WPoly z4(const PrimePower& pm) { return monomial(ResidueInt::one(pm), 1, 0); }
    static WPoly z6(const PrimePower& pm) { return monomial(ResidueInt::one(pm), 0, 1); }
    /// Build from (e4, e6, signed coefficient) triples; repeated exponents add up.
    static WPoly from_terms(const PrimePower& pm, const std::vector<std::tuple<int, int, int64_t>>& t);

    const PrimePower& modulus() const { return pm_; }
    const std::vector<WTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].e4 == 0 && t_[0].e6 == 0); }
    ResidueInt coeff(int e4, int e6) const;
    std::size_t size() const { return t_.size(); }

    bool is_homogeneous(int d) const;
    /// Weighted degree if homogeneous and nonzero.
    std::optional<int> weighted_degree() const;

    WPoly operator-() const;
    friend WPoly operator+(const WPoly& a, const WPoly& b);
    friend WPoly operator-(const WPoly& a, const WPoly& b) { return a + (-b); }
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    friend WPoly operator*(const WPoly& a, const ResidueInt& c);
    friend WPoly operator*(const ResidueInt& c, const WPoly& a) { return a * c; }
    friend bool operator==(const WPoly& a, const WPoly& b);
    friend bool operator!=(const WPoly& a, const WPoly& b) { return !(a == b); }
    WPoly& operator+=(const WPoly& o) { return *this = *this + o; }
    WPoly& operator-=(const WPoly& o) { return *this = *this - o; }
    WPoly& operator*=(const WPoly& o) { return *this = *this * o; }

    WPoly pow(unsigned e) const;
    WPoly mul_monomial(int e4, int e6) const;
    /// Substitute z4 -> z4^k, z6 -> z6^k (the Frobenius twist when k = p).
    WPoly twist(int k) const;
    ResidueInt evaluate(const ResidueInt& a, const ResidueInt& b) const;
    /// Set z4 = 0.
    WPoly restrict_z4_zero() const;

    WPoly reduce_to(unsigned m) const;
    WPoly lift_to(unsigned m) const;
    WPoly divide_by_p() const;

    /// Exact quotient a/b if b divides a, else nullopt. Needs a unit leading
    /// coefficient of b in some monomial order (both are tried).
    std::optional<WPoly> exact_divide(const WPoly& b) const;

    /// Largest z4^i z6^j dividing every term.
    std::pair<int, int> monomial_content() const;

private:
    void normalize();
    std::vector<WTerm> t_;
    PrimePower pm_;
};

}  // namespace hd
