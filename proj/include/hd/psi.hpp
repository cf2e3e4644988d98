#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hd/forms.hpp"

namespace hd {

/**
 * α_n, β_n, ψ_n in the slots U = a^p, V = b^p (weights 4, 6, written as z4, z6)
 * and the cleared Ψ_n. Index n runs from 0; ψ and Ψ start at 1.
 */
struct PsiTable {
    uint64_t p = 0;
    LocalizerSetPtr loc;
    std::vector<LocFrac> alpha, beta;  // 0..(p+7)/2
    std::vector<LocFrac> psi;          // 1..(p+5)/2, entry 0 unused
    std::vector<WPoly> Psi;            // 1..(p+5)/2, entry 0 unused
};

/// The same objects over Q; universal, so one table serves every prime.
struct PsiTableQ {
    std::vector<QPoly> alpha, beta;  // 0..nmax+1
    std::vector<QPoly> psi, Psi;     // 1..nmax
};

/// α_n, β_n mod p by the seeded recurrence and by a direct row solve; InternalMismatch if they differ.
std::pair<std::vector<LocFrac>, std::vector<LocFrac>> alpha_beta_table(uint64_t p);
/// ψ by determinant and by the three-term recurrence; InternalMismatch if they differ.
PsiTable psi_table(uint64_t p);
PsiTableQ psi_table_rational(int nmax);

/// Weighted degree of Ψ_n: 2n for even n, 2n + 6 for odd n.
int psi_expected_degree(int n);
/// Ψ_{(p+5)/2} mod p; p >= 11.
WPoly psi_poly(uint64_t p);

struct GolemResult {
    ResidueInt at_01, at_10;
    bool nonzero_01() const { return !at_01.is_zero(); }
    bool nonzero_10() const { return !at_10.is_zero(); }
};
/// Ψ_{(p+5)/2} at (0, 1) and (1, 0) mod p, no assertion.
GolemResult golem_values(uint64_t p);
/// Same, with TheoremViolation when a guaranteed nonvanishing fails; p >= 13.
GolemResult golem_check(uint64_t p);

/// The weighted degree of Ψ_{(p+5)/2} against p + 5 (p ≡ 7, 11 mod 12) or p + 11 (p ≡ 1, 5 mod 12).
/// DegreeMismatch on failure.
bool degree_audit(uint64_t p);

struct Proportionality {
    bool proportional = false;
    ResidueInt c;                // lhs = c rhs when proportional
    std::string counterexample;  // first monomial where the normalized forms differ
};
/// Compare after dividing each side by its first nonzero coefficient in (e4, e6) order.
Proportionality proportionality(const WPoly& lhs, const WPoly& rhs);
/// True if neither side is a rational multiple of the other.
bool q_linearly_independent(const QPoly& a, const QPoly& b);

struct ScanRow {
    uint64_t p = 0;
    int class_mod_12 = 0;
    int psi_degree = 0;
    bool degree_ok = false;
    bool golem_01 = false;  // Ψ(0, 1) ≢ 0
    bool golem_10 = false;  // Ψ(1, 0) ≢ 0
    bool proportional = false;
    std::optional<uint64_t> constant_c;
    std::string counterexample;
    bool psi_recurrence_ok = false;
};
/// Ψ (or z6 Ψ for p ≡ 7, 11 mod 12) against Δ H mod p, plus the audits.
ScanRow conjecture_row(uint64_t p);
/// Rows for the primes in [pmin, pmax] with p >= 11, in increasing p.
std::vector<ScanRow> conjecture_scan(uint64_t pmin, uint64_t pmax, unsigned threads = 1);

}  // namespace hd
