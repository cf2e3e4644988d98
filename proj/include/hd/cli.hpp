#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hd/frob2.hpp"
#include "hd/psi.hpp"

namespace hd::cli {

using Json = nlohmann::json;

struct RunConfig {
    std::string command;
    std::optional<uint64_t> p;
    uint64_t pmin = 11, pmax = 499;
    int64_t a = 0, b = 0;
    unsigned mod = 1;
    Branch branch = Branch::Auto;
    bool mu_correct = false;
    bool verify = false;
    bool symbolic = false;
    std::string out;            // empty: standard output
    std::string format;         // json or csv; empty: from the --out extension, else json
    unsigned threads = 0;       // 0: HD_THREADS, else hardware concurrency
    std::size_t samples = 0;    // verify-all: 0 means exhaustive for p <= 17, 200 above
    uint64_t seed = 1;
};

/// Parse argv into a RunConfig; InvalidArgument on bad usage.
RunConfig parse_args(int argc, const char* const* argv);
/// Command-specific checks; InvalidArgument, InvalidPrime, UnsupportedPrime or WrongResidueClass.
void validate(const RunConfig& cfg);
/// HD_THREADS overrides the requested count; at least 1.
unsigned resolve_threads(unsigned requested);

/// Run a validated config. Exit code 0, 1 (domain error) or 2 (internal failure).
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// parse + validate + dispatch with the same exit code convention.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Serialization: every number is a decimal string, objects have sorted keys.
std::string dec(uint64_t v);
std::string dec(int64_t v);
Json to_json(const ResidueInt& r);
Json to_json(const WPoly& w);   // [[e4, e6, c], ...] sorted by (e4, e6)
Json to_json(const UPoly& u);   // coefficients by ascending degree
Json to_json(const LocFrac& x); // {num, den: {localizer: exponent}}
Json to_json(const FracPoly& z);
std::string dump(const Json& j);

Json scan_row_json(const ScanRow& r);
std::string scan_csv(const std::vector<ScanRow>& rows);

struct LiftRow {
    uint64_t p = 0;
    int64_t a = 0, b = 0;
    unsigned mod = 1;
    bool verified = false;
    std::optional<ResidueInt> lambda;
    std::optional<bool> extendable;  // mod p lifts only
    std::string error;               // error name when construction failed
};

struct VerifySummary {
    uint64_t p = 0;
    unsigned mod = 1;
    bool exhaustive = true;
    std::size_t eligible = 0, constructed = 0, verified = 0, failed = 0;
    std::vector<LiftRow> rows;  // sorted by (a, b)
};

/**
 * Build and verify a lift for every eligible pair (or a sample of them).
 * mod 1: ordinary pairs; lift + μ-correction, checked by lie_verify, the commutator,
 * the extendability certificate and λ H ≡ 1.
 * mod 2: ordinary pairs with b ≡ 0, a ≡ 0 or Ψ(a, b) a unit; checked by lie_verify mod p^2.
 */
VerifySummary exhaustive_verify(uint64_t p, unsigned mod, unsigned threads = 1, std::size_t samples = 0,
                                uint64_t seed = 1);
Json lift_row_json(const LiftRow& r);
Json summary_json(const VerifySummary& s);
std::string lift_csv(const std::vector<LiftRow>& rows);

}  // namespace hd::cli
