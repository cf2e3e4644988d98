#pragma once

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hd/wpoly.hpp"

namespace hd {

/// Laurent polynomial in two variables (U, V or z4, z6) with rational coefficients.
class QPoly {
public:
    using Key = std::pair<int, int>;

    QPoly() = default;
    static QPoly constant(const mpq_class& c);
    static QPoly monomial(const mpq_class& c, int e4, int e6);

    const std::map<Key, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpq_class coeff(int e4, int e6) const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const mpq_class& c);
    friend QPoly operator*(const mpq_class& c, const QPoly& a) { return a * c; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }

    QPoly mul_monomial(int e4, int e6) const;
    QPoly pow(unsigned e) const;
    /// Weighted degree (weights 4, 6) if homogeneous and nonzero.
    std::optional<int> weighted_degree() const;
    bool is_polynomial() const;
    mpq_class evaluate(const mpq_class& u, const mpq_class& v) const;

    /// Reduction to Z/p^m; needs non-negative exponents and p-integral coefficients.
    WPoly reduce(const PrimePower& pm) const;
    std::string to_string() const;

private:
    std::map<Key, mpq_class> t_;
};

/// r mod p^m for a p-integral rational r.
ResidueInt reduce_rational(const mpq_class& r, const PrimePower& pm);

}  // namespace hd
