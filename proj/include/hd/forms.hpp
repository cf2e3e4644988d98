#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hd/locfrac.hpp"
#include "hd/qpoly.hpp"

namespace hd {

/// Coefficient of x^{p-1} in (x^3 + z4 x + z6)^{(p-1)/2}, reduced mod p^m.
WPoly hasse_poly(const PrimePower& pm);
/// The same polynomial with its integer coefficients.
QPoly hasse_poly_integer(uint64_t p);
/// 4 z4^3 + 27 z6^2.
WPoly discriminant(const PrimePower& pm);
QPoly discriminant_integer();
/// 1728 * 4 a^3 / Δ(a, b); SingularPair if Δ(a, b) is not a unit.
ResidueInt j_invariant(const ResidueInt& a, const ResidueInt& b);

/// {z4, z6, Δ, H} plus an optional Ψ, all at precision pm.
LocalizerSetPtr standard_localizers(const PrimePower& pm, const std::optional<WPoly>& psi = std::nullopt);

enum class PairKind { Singular, NonSingular, Ordinary, SigmaNonSingular };
const char* pair_kind_name(PairKind k);

struct PairClass {
    PairKind kind = PairKind::Singular;
    bool delta_unit = false;
    bool hasse_unit = false;
    std::vector<bool> sigma_units;
};

/// Unit-ness mod p of Δ, H and each Σ-factor at (a, b).
PairClass classify_pair(uint64_t p, int64_t a, int64_t b, const std::vector<WPoly>& sigma = {});

/// w = a0 + a1 φ.
struct Weight {
    int64_t a0 = 0;
    int64_t a1 = 0;
};

/**
 * Γ_k + Γ_{k-4p} z4' + Γ_{k-6p} z6'. For a tangential form the starred
 * coefficients Γ/p are kept at one digit less precision.
 */
struct QuasiLinearForm {
    int k = 0;
    LocFrac gamma_k, gamma_4, gamma_6;
    bool tangential = false;
    std::optional<LocFrac> star_4, star_6;

    static QuasiLinearForm make(int k, LocFrac gk, LocFrac g4, LocFrac g6);
    /// Γ_{k-4p} = p Γ*_4, Γ_{k-6p} = p Γ*_6; star parts given mod p^{m-1}.
    static QuasiLinearForm make_tangential(int k, LocFrac gk, LocFrac star4, LocFrac star6);

    const PrimePower& modulus() const { return gamma_k.modulus(); }
    /// Homogeneity of the three coefficients and consistency of the starred parts.
    bool is_well_formed() const;
};

/// 4 z4^p Γ_{k-4p} + 6 z6^p Γ_{k-6p} ≡ 0 mod p.
bool weight_check_mod_p(const QuasiLinearForm& F);
/// Γ_k + 4 z4^p Γ*_{k-4p} + 6 z6^p Γ*_{k-6p} ≡ 0 mod p; NotTangential otherwise.
bool weight_check_mod_p2(const QuasiLinearForm& F);

/// F(a, b, δa, δb) mod p^m; a, b are representatives mod p^{m+1}.
ResidueInt form_evaluate(const QuasiLinearForm& F, const ResidueInt& a_guard, const ResidueInt& b_guard);
ResidueInt form_evaluate(const QuasiLinearForm& F, int64_t a, int64_t b);
/// c^w with φ acting trivially on Z_p.
ResidueInt weight_power(const ResidueInt& c, Weight w);
/// F(c^4 a, c^6 b) ≡ c^w F(a, b) mod p^m, arguments mod p^{m+1}.
bool weight_definition_probe(const QuasiLinearForm& F, const ResidueInt& a_guard, const ResidueInt& b_guard,
                             const ResidueInt& c_guard, Weight w);

/// Sample forms at precision pm. The tangential ones have weak weight 0.
QuasiLinearForm form_z4_tangent(const PrimePower& pm);    // 1 - p z4'/(4 z4^p)
QuasiLinearForm form_z6_tangent(const PrimePower& pm);    // 1 - p z6'/(6 z6^p)
QuasiLinearForm form_delta_tangent(const PrimePower& pm); // 1 - p (2 z4^{2p} z4' + 9 z6^p z6')/(2 Δ^p)
/// (2 z4^p z6' - 3 z6^p z6')/Δ^p, not homogeneous; built without the well-formedness check.
QuasiLinearForm form_f11_printed(const PrimePower& pm);
/// (2 z4^p z6' - 3 z6^p z4')/Δ^p, weak weight -2p.
QuasiLinearForm form_f11(const PrimePower& pm);
/// Λ_1 = H^{-1} (1 - p (2 z4^{2p} z4' + 9 z6^p z6')/(2 Δ^p)), weak weight 1-p.
QuasiLinearForm lambda1_form(const PrimePower& pm);
/// H as a form of weight p-1.
QuasiLinearForm hasse_form(const PrimePower& pm);

}  // namespace hd
