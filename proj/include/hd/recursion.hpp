#pragma once

#include <algorithm>
#include <vector>

#include "hd/error.hpp"
#include "hd/residue.hpp"

namespace hd {

/// v_n = α v0 + β θ + μ δa + ν δb + η.
template <class T>
struct AffineExpr {
    T alpha, beta, mu, nu, eta;

    AffineExpr operator+(const AffineExpr& o) const {
        return {alpha + o.alpha, beta + o.beta, mu + o.mu, nu + o.nu, eta + o.eta};
    }
    AffineExpr operator*(const T& c) const { return {alpha * c, beta * c, mu * c, nu * c, eta * c}; }
    T evaluate(const T& v0, const T& theta, const T& da, const T& db) const {
        return alpha * v0 + beta * theta + mu * da + nu * db + eta;
    }
};

/**
 * The rows s >= 1 of
 *   s b^p v_s ≡ (3/2 - s) a^p v_{s-1} + (9/2 - s) v_{s-3} + c_s + d_s + e_s + f_s  mod p
 * with the sources stored as the coefficient of θ in c_s, d_s itself, the
 * coefficient of δb in e_s and the coefficient of δa in f_s. Index 0 is unused.
 */
template <class T>
struct SystemData {
    PrimePower pm;  // p^1
    T zero, one, ap, bp, bp_inv;
    std::vector<T> c, d, e, f;

    const T& at(const std::vector<T>& v, int s) const { return s >= 0 && s < int(v.size()) ? v[s] : zero; }
    /// Largest s with a nonzero source term.
    int last_source() const {
        int r = 0;
        for (const auto* v : {&c, &d, &e, &f})
            for (int s = 1; s < int(v->size()); ++s)
                if (!(*v)[s].is_zero()) r = std::max(r, s);
        return r;
    }
};

/// (k/2) mod p.
inline ResidueInt half_integer(const PrimePower& pm, int64_t k) { return ResidueInt(pm, k) * ResidueInt(pm, 2).inverse(); }

/**
 * Forward solve of rows 1..rows with v_0 free: every v_n as an AffineExpr in
 * (v0, θ, δa, δb, 1). Needs rows <= p - 1 so that each s is a unit.
 */
template <class T>
std::vector<AffineExpr<T>> solve_affine(const SystemData<T>& sd, int rows) {
    const PrimePower& pm = sd.pm;
    if (rows < 0 || uint64_t(rows) > pm.p() - 1) throw Error(ErrorCode::TOutOfRange, "truncation outside 1..p-1", rows);
    const T& z = sd.zero;
    std::vector<AffineExpr<T>> v;
    v.push_back({sd.one, z, z, z, z});
    for (int s = 1; s <= rows; ++s) {
        AffineExpr<T> r{z, z, z, z, z};
        if (s >= 1) r = r + v[s - 1] * (sd.ap * half_integer(pm, 3 - 2 * s));
        if (s >= 3) r = r + v[s - 3] * (sd.one * half_integer(pm, 9 - 2 * s));
        r.beta = r.beta + sd.at(sd.c, s);
        r.eta = r.eta + sd.at(sd.d, s);
        r.nu = r.nu + sd.at(sd.e, s);
        r.mu = r.mu + sd.at(sd.f, s);
        v.push_back(r * (sd.bp_inv * ResidueInt(pm, s).inverse()));
    }
    return v;
}

}  // namespace hd
