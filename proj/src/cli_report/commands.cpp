#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "hd/cli.hpp"

namespace hd::cli {

namespace {

// Help requests short-circuit parsing.
struct HelpRequested {
    std::string text;
};

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t need_p(const RunConfig& c) {
    if (!c.p) throw Error(ErrorCode::InvalidArgument, c.command + " needs --p");
    return *c.p;
}

std::string output_format(const RunConfig& c) {
    if (!c.format.empty()) return c.format;
    if (c.out.size() >= 4 && c.out.compare(c.out.size() - 4, 4, ".csv") == 0) return "csv";
    return "json";
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + c.out);
    f << text;
}

Json cmd_hasse(const RunConfig& c) {
    const PrimePower pm(need_p(c), c.mod);
    return {{"p", dec(pm.p())}, {"mod", dec(uint64_t(c.mod))}, {"poly", to_json(hasse_poly(pm))}};
}

Json cmd_classify(const RunConfig& c) {
    const uint64_t p = need_p(c);
    const PairClass k = classify_pair(p, c.a, c.b);
    return {{"p", dec(p)},
            {"a", dec(c.a)},
            {"b", dec(c.b)},
            {"kind", pair_kind_name(k.kind)},
            {"delta_unit", k.delta_unit},
            {"hasse_unit", k.hasse_unit}};
}

Json cmd_lift(const RunConfig& c) {
    const CurveContext ctx(need_p(c), c.mod, c.a, c.b);
    Json j = {{"p", dec(ctx.p())}, {"a", dec(c.a)}, {"b", dec(c.b)}, {"mod", dec(uint64_t(c.mod))}};
    if (c.mod == 1) {
        FrobLift lift = build_lift_mod_p(ctx);
        if (c.mu_correct) {
            const MuCorrection mu = mu_correct(lift);
            lift = apply_mu(lift, mu);
            j["mu"] = {to_json(mu.mu0), to_json(mu.mu1), to_json(mu.mu2)};
        }
        j["Z"] = to_json(lift.Z);
        j["lambda"] = to_json(lift.lambda);
        j["extendable"] = extendability_certificate(lift).ok;
        if (c.verify) j["verified"] = lie_verify(lift, 1) && lie_verify_commutator(lift, 1);
        return j;
    }
    const Lift2 l = build_lift_mod_p2(ctx, c.branch);
    Json v = Json::array();
    for (const auto& x : l.v) v.push_back(to_json(x));
    j["Z"] = to_json(l.lift.Z);
    j["lambda"] = to_json(l.lift.lambda);
    j["theta"] = to_json(l.theta);
    j["v"] = v;
    j["branch"] = branch_name(l.branch);
    if (c.verify) j["verified"] = lie_verify(l.lift, 2);
    return j;
}

Json cmd_eigen(const RunConfig& c) {
    const uint64_t p = need_p(c);
    if (c.symbolic) {
        const SymbolicEigen s = solve_eigen_symbolic(p);
        const LambdaReport r = lambda_properties(s);
        return {{"p", dec(p)},
                {"psi", to_json(s.psi)},
                {"theta", {{"one", to_json(s.theta.one)}, {"da", to_json(s.theta.da)}, {"db", to_json(s.theta.db)}}},
                {"quasi_linear", r.quasi_linear},
                {"weak_weight", r.weak_weight},
                {"reduces_to_inverse_hasse", r.reduces_to_inverse_hasse}};
    }
    const EigenSolution e = solve_eigen(CurveContext(p, 2, c.a, c.b));
    Json v = Json::array();
    for (const auto& x : e.v) v.push_back(to_json(x));
    return {{"p", dec(p)}, {"a", dec(c.a)}, {"b", dec(c.b)}, {"det", to_json(e.det)},
            {"v0", to_json(e.v0)}, {"theta", to_json(e.theta)}, {"v", v}};
}

Json constants_for(uint64_t p) {
    Json j = {{"p", dec(p)}, {"a0", nullptr}, {"b0", nullptr}};
    if (p % 3 == 1) {
        const A0Constants k = a0_constants(p);
        j["a0"] = {{"beta1", to_json(k.beta1)}, {"beta4", to_json(k.beta4)}, {"beta", to_json(k.beta)}};
    }
    if (p % 4 == 1) {
        const B0Constants k = b0_constants(p);
        j["b0"] = {{"alpha2", to_json(k.alpha2)}, {"alpha4", to_json(k.alpha4)}, {"alpha", to_json(k.alpha)}};
    }
    return j;
}

Json cmd_constants(const RunConfig& c) {
    if (c.p) return constants_for(*c.p);
    Json rows = Json::array();
    for (uint64_t p = std::max<uint64_t>(c.pmin, 11); p <= c.pmax; ++p)
        if (is_prime(p)) rows.push_back(constants_for(p));
    return rows;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (const char* env = std::getenv("HD_THREADS")) {
        char* end = nullptr;
        const unsigned long n = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return unsigned(n);
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig c;
    CLI::App app{"Frobenius lifts on elliptic curves mod p and p^2"};
    app.require_subcommand(1);
    std::string branch = "auto";
    auto common = [&](CLI::App* s) {
        s->add_option("--p", c.p, "prime");
        s->add_option("--threads", c.threads, "worker threads (HD_THREADS overrides)");
        s->add_option("--out", c.out, "output file");
        s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto pair = [&](CLI::App* s) {
        s->add_option("--a", c.a, "a");
        s->add_option("--b", c.b, "b");
    };
    auto* hasse = app.add_subcommand("hasse", "Hasse polynomial mod p^m");
    common(hasse);
    hasse->add_option("--mod", c.mod, "precision m");
    auto* classify = app.add_subcommand("classify", "classify a pair (a, b) mod p");
    common(classify);
    pair(classify);
    auto* lift = app.add_subcommand("lift", "build a Lie invariant lift mod p or p^2");
    common(lift);
    pair(lift);
    lift->add_option("--mod", c.mod, "1 or 2");
    lift->add_option("--branch", branch, "auto, general, a0 or b0")
        ->check(CLI::IsMember({"auto", "general", "a0", "b0"}));
    lift->add_flag("--mu-correct", c.mu_correct, "apply the μ-correction (mod 1)");
    lift->add_flag("--verify", c.verify, "verify the lift");
    auto* eigen = app.add_subcommand("eigen", "eigen-solve of the mod p^2 system");
    common(eigen);
    pair(eigen);
    eigen->add_flag("--symbolic", c.symbolic, "universal Θ over the localized ring");
    auto* scan = app.add_subcommand("scan", "Ψ against Δ H over a prime range");
    common(scan);
    scan->add_option("--pmin", c.pmin, "smallest prime");
    scan->add_option("--pmax", c.pmax, "largest prime");
    auto* verify = app.add_subcommand("verify-all", "construct and verify lifts for all eligible pairs");
    common(verify);
    verify->add_option("--mod", c.mod, "1 or 2");
    verify->add_option("--samples", c.samples, "sample size (0: exhaustive up to p = 17)");
    verify->add_option("--seed", c.seed, "sampling seed");
    auto* constants = app.add_subcommand("constants", "the a ≡ 0 and b ≡ 0 branch constants");
    common(constants);
    constants->add_option("--pmin", c.pmin, "smallest prime");
    constants->add_option("--pmax", c.pmax, "largest prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::InvalidArgument, e.what());
    }
    for (auto* s : app.get_subcommands()) c.command = s->get_name();
    if (branch == "general") c.branch = Branch::General;
    if (branch == "a0") c.branch = Branch::A0;
    if (branch == "b0") c.branch = Branch::B0;
    return c;
}

void validate(const RunConfig& c) {
    auto check_prime = [](uint64_t p) {
        if (!is_prime(p) || p < 5) throw Error(ErrorCode::InvalidPrime, "p must be a prime >= 5, got " + std::to_string(p));
    };
    if (c.p) check_prime(*c.p);
    const std::string& k = c.command;
    if (k == "hasse" || k == "classify" || k == "lift" || k == "eigen" || k == "verify-all") need_p(c);
    if ((k == "lift" || k == "verify-all") && c.mod != 1 && c.mod != 2)
        throw Error(ErrorCode::InvalidArgument, "--mod must be 1 or 2", c.mod);
    if (k == "hasse" && c.mod < 1) throw Error(ErrorCode::InvalidArgument, "--mod must be positive");
    if (k == "lift" && c.mod == 1 && c.branch != Branch::Auto)
        throw Error(ErrorCode::InvalidArgument, "--branch applies to --mod 2");
    if (k == "lift" && c.mod == 2 && *c.p < 11)
        throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(*c.p));
    if (k == "lift" && c.branch == Branch::A0 && *c.p % 3 != 1)
        throw Error(ErrorCode::WrongResidueClass, "the a ≡ 0 branch needs p ≡ 1 mod 3", long(*c.p));
    if (k == "lift" && c.branch == Branch::B0 && *c.p % 4 != 1)
        throw Error(ErrorCode::WrongResidueClass, "the b ≡ 0 branch needs p ≡ 1 mod 4", long(*c.p));
    if ((k == "scan" || k == "constants") && c.pmin > c.pmax)
        throw Error(ErrorCode::InvalidArgument, "--pmin exceeds --pmax");
    if (k == "scan" && c.p) throw Error(ErrorCode::InvalidArgument, "scan takes --pmin/--pmax, not --p");
    if ((k == "scan" || k == "verify-all") || c.format.empty() || c.format == "json") return;
    throw Error(ErrorCode::InvalidArgument, "csv output is available for scan and verify-all only");
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        const std::string& k = c.command;
        const bool csv = output_format(c) == "csv";
        if (k == "scan") {
            const auto rows = conjecture_scan(c.pmin, c.pmax, resolve_threads(c.threads));
            if (csv) {
                emit(c, scan_csv(rows), out);
            } else {
                Json a = Json::array();
                for (const auto& r : rows) a.push_back(scan_row_json(r));
                emit(c, dump(a), out);
            }
        } else if (k == "verify-all") {
            const VerifySummary s = exhaustive_verify(*c.p, c.mod, resolve_threads(c.threads), c.samples, c.seed);
            emit(c, csv ? lift_csv(s.rows) : dump(summary_json(s)), out);
            if (s.failed > 0) {
                err << "TheoremViolation: " << s.failed << " of " << s.eligible << " lifts failed verification\n";
                return 2;
            }
        } else {
            Json j;
            if (k == "hasse") j = cmd_hasse(c);
            else if (k == "classify") j = cmd_classify(c);
            else if (k == "lift") j = cmd_lift(c);
            else if (k == "eigen") j = cmd_eigen(c);
            else if (k == "constants") j = cmd_constants(c);
            else throw Error(ErrorCode::InvalidArgument, "unknown command " + k);
            emit(c, dump(j), out);
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return is_internal(e.code()) ? 2 : 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c = parse_args(argc, argv);
        validate(c);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return is_internal(e.code()) ? 2 : 1;
    }
    return dispatch(c, out, err);
}

}  // namespace hd::cli
