#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "hd/cli.hpp"

namespace hd::cli {

namespace {

LiftRow verify_pair(uint64_t p, unsigned mod, int64_t a, int64_t b) {
    LiftRow r{p, a, b, mod, false, std::nullopt, std::nullopt, {}};
    try {
        const CurveContext ctx(p, mod, a, b);
        if (mod == 1) {
            const FrobLift base = build_lift_mod_p(ctx);
            const FrobLift lift = apply_mu(base, mu_correct(base));
            r.lambda = lift.lambda;
            r.extendable = extendability_certificate(lift).ok;
            r.verified = lie_verify(lift, 1) && lie_verify_commutator(lift, 1) && *r.extendable &&
                         eigen_forcing_check(lift);
        } else {
            const Lift2 l = build_lift_mod_p2(ctx);
            r.lambda = l.lift.lambda;
            r.verified = lie_verify(l.lift, 2);
        }
    } catch (const Error& e) {
        r.error = error_name(e.code());
    }
    return r;
}

}  // namespace

VerifySummary exhaustive_verify(uint64_t p, unsigned mod, unsigned threads, std::size_t samples, uint64_t seed) {
    if (mod != 1 && mod != 2) throw Error(ErrorCode::InvalidArgument, "verify-all supports mod 1 and mod 2", mod);
    const PrimePower pm(p, 1);
    if (mod == 2 && p < 11) throw Error(ErrorCode::UnsupportedPrime, "the mod p^2 construction needs p >= 11", long(p));
    const WPoly H = hasse_poly(pm), D = discriminant(pm);
    const std::optional<WPoly> psi = mod == 2 ? std::optional<WPoly>(psi_poly(p)) : std::nullopt;

    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int64_t a = 0; a < int64_t(p); ++a)
        for (int64_t b = 0; b < int64_t(p); ++b) {
            const ResidueInt A(pm, a), B(pm, b);
            if (!D.evaluate(A, B).is_unit() || !H.evaluate(A, B).is_unit()) continue;
            if (psi && a != 0 && b != 0 && !psi->evaluate(A, B).is_unit()) continue;
            pairs.emplace_back(a, b);
        }

    VerifySummary s;
    s.p = p;
    s.mod = mod;
    if (samples == 0 && p > 17) samples = 200;
    if (samples > 0 && samples < pairs.size()) {
        s.exhaustive = false;
        std::mt19937_64 rng(seed);
        // partial Fisher-Yates with explicit index draws keeps the sample reproducible across standard libraries
        for (std::size_t i = 0; i < samples; ++i) std::swap(pairs[i], pairs[i + rng() % (pairs.size() - i)]);
        pairs.resize(samples);
        std::sort(pairs.begin(), pairs.end());
    }
    s.eligible = pairs.size();
    s.rows.resize(pairs.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
            s.rows[i] = verify_pair(p, mod, pairs[i].first, pairs[i].second);
    };
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(pairs.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (const auto& r : s.rows) {
        if (r.lambda) ++s.constructed;
        if (r.verified) ++s.verified;
        else ++s.failed;
    }
    return s;
}

}  // namespace hd::cli
