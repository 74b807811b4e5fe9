#include "cct/comparison.hpp"

#include "cct/hochschild.hpp"

#include <cassert>
#include <vector>

namespace cct {

namespace {

// stable per-verifier stream salts
constexpr std::uint64_t kChainSalt = 0x636861696e6d6170ULL;
constexpr std::uint64_t kCupSalt = 0x6375706d61702020ULL;
constexpr std::uint64_t kBraceSalt = 0x62726163656d6170ULL;

void record(CheckReport& report, const Cochain& discrepancy,
            std::optional<Cochain>* first_failure) {
    if (discrepancy.is_zero()) return;
    report.pass = false;
    report.max_support = std::max(report.max_support, discrepancy.support_size());
    if (first_failure && !first_failure->has_value()) *first_failure = discrepancy;
}

}  // namespace

Cochain random_cochain(const SimplicialComplex& K, const Field& F, Side side,
                       int degree, SplitMix64& rng) {
    Cochain out(K, F, side, degree);
    const bool rationals = F.spec().kind == FieldKind::rationals;
    const std::uint64_t p =
        rationals ? 0 : static_cast<std::uint64_t>(F.spec().characteristic);
    for (const Chain& c : enumerate_chains(K, degree, false)) {
        Scalar v = rationals
                       ? F.from_int(static_cast<std::int64_t>(rng.below(19)) - 9)
                       : F.from_int(static_cast<std::int64_t>(rng.below(p)));
        out.set(c, v);
    }
    return out;
}

Cochain iota(const Cochain& f) {
    assert(f.side() == Side::simplicial);
    return f.reinterpreted(Side::hochschild);
}

Cochain iota_inverse(const Cochain& f) {
    assert(f.side() == Side::hochschild);
    return f.reinterpreted(Side::simplicial);
}

std::string CheckReport::render() const {
    return "CHECK " + name + (pass ? " PASS" : " FAIL") +
           " max_support=" + std::to_string(max_support) +
           " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
}

CheckReport verify_chain_map(const SimplicialComplex& K, const Field& F,
                             int max_degree, std::uint64_t seed, int trials,
                             std::optional<Cochain>* first_failure) {
    CheckReport report{"cct-chain", true, 0, trials, seed};
    SplitMix64 rng(seed ^ kChainSalt);
    for (int t = 0; t < trials; ++t) {
        const int deg = t % (max_degree + 1);
        Cochain f = random_cochain(K, F, Side::simplicial, deg, rng);
        Cochain lhs = iota(simplicial_coboundary(f));
        Cochain rhs = hochschild_coboundary(iota(f));
        record(report, sub(lhs, rhs), first_failure);
    }
    return report;
}

CheckReport verify_cup_map(const SimplicialComplex& K, const Field& F,
                           int max_degree, std::uint64_t seed, int trials,
                           std::optional<Cochain>* first_failure) {
    CheckReport report{"cct-cup", true, 0, trials, seed};
    SplitMix64 rng(seed ^ kCupSalt);
    for (int t = 0; t < trials; ++t) {
        const int p = (t / (max_degree + 1)) % (max_degree + 1);
        const int q = t % (max_degree + 1);
        Cochain f = random_cochain(K, F, Side::simplicial, p, rng);
        Cochain g = random_cochain(K, F, Side::simplicial, q, rng);
        Cochain lhs = iota(simplicial_cup(f, g));
        Cochain rhs = hochschild_cup(iota(f), iota(g));
        record(report, sub(lhs, rhs), first_failure);
    }
    return report;
}

CheckReport verify_brace_map(const SimplicialComplex& K, const Field& F,
                             int max_degree, std::uint64_t seed, int trials,
                             int max_args, BraceSign sign,
                             std::optional<Cochain>* first_failure) {
    CheckReport report{"cct-brace", true, 0, trials, seed};
    SplitMix64 rng(seed ^ kBraceSalt);
    for (int t = 0; t < trials; ++t) {
        const int k = 1 + static_cast<int>(rng.below(max_args));
        const int deg_f = static_cast<int>(rng.below(max_degree + 1));
        Cochain f = random_cochain(K, F, Side::simplicial, deg_f, rng);
        std::vector<Cochain> args;
        std::vector<Cochain> hargs;
        for (int i = 0; i < k; ++i) {
            const int d = static_cast<int>(rng.below(max_degree + 1));
            args.push_back(random_cochain(K, F, Side::simplicial, d, rng));
            hargs.push_back(iota(args.back()));
        }
        Cochain lhs = iota(simplicial_brace_signed(f, args, sign));
        Cochain rhs = hochschild_brace(iota(f), hargs);
        record(report, sub(lhs, rhs), first_failure);
    }
    return report;
}

}  // namespace cct
