#pragma once

#include "cct/cochain.hpp"
#include "cct/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cct {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that output
/// streams are identical across platforms and standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); deterministic, bias irrelevant here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

/// Dense random cochain: every degree-n basis chain receives a draw
/// (uniform residue over Z/p; uniform integer in [-9, 9] over Q).
Cochain random_cochain(const SimplicialComplex& K, const Field& F, Side side,
                       int degree, SplitMix64& rng);

/// The comparison map: reads a simplicial cochain's coefficients on the
/// Hochschild path basis. Degree-preserving linear bijection.
Cochain iota(const Cochain& f);
Cochain iota_inverse(const Cochain& f);

struct CheckReport {
    std::string name;
    bool pass = true;
    std::size_t max_support = 0;  // largest discrepancy support seen
    int trials = 0;
    std::uint64_t seed = 0;

    /// "CHECK <name> <PASS|FAIL> max_support=<n> trials=<n> seed=<n>"
    std::string render() const;
};

/// iota . d == d . iota on random cochains of degrees 0..max_degree.
CheckReport verify_chain_map(const SimplicialComplex& K, const Field& F,
                             int max_degree, std::uint64_t seed, int trials,
                             std::optional<Cochain>* first_failure = nullptr);

/// iota(f cup g) == iota(f) . iota(g) on random cochains.
CheckReport verify_cup_map(const SimplicialComplex& K, const Field& F,
                           int max_degree, std::uint64_t seed, int trials,
                           std::optional<Cochain>* first_failure = nullptr);

/// iota(f{f_1..f_k}) == iota(f){iota(f_1)..iota(f_k)} for k <= max_args.
/// `sign` selects the simplicial brace sign rule; BraceSign::flipped is the
/// mutation fixture and is expected to FAIL.
CheckReport verify_brace_map(const SimplicialComplex& K, const Field& F,
                             int max_degree, std::uint64_t seed, int trials,
                             int max_args, BraceSign sign = BraceSign::standard,
                             std::optional<Cochain>* first_failure = nullptr);

}  // namespace cct
