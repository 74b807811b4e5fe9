// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include "cct/cochain.hpp"
#include "cct/cohomology.hpp"
#include "cct/hochschild.hpp"

#include <span>
#include <vector>

namespace cct::oracle {

/// Simplicial brace by full tuple enumeration: all 0 <= b_1' <= b_1 <= ...
/// <= b_r' <= b_r <= n, with no pinning of b_k - b_k' to the argument
/// degrees (arguments vanish off their degree instead).
Cochain naive_simplicial_brace(const Cochain& f, std::span<const Cochain> args);

/// Hochschild brace through bimodule-map semantics: enumerates all weakly
/// increasing insertion tuples, inserts each argument's value as an actual
/// incidence-algebra element, and applies the outer cochain multilinearly.
Cochain bimodule_hochschild_brace(const Cochain& x, std::span<const Cochain> args);

/// Hochschild cup through bimodule-map semantics: multiplies the two output
/// elements in the incidence algebra.
Cochain bimodule_hochschild_cup(const Cochain& f, const Cochain& g);

/// The delete-one-entry alternating sum that the bimodule coboundary is
/// expected to reduce to on the path basis.
Cochain delete_one_coboundary(const Cochain& f);

/// Coboundary matrix assembled directly from the alternating-sum formula,
/// bypassing the cochain operations.
CoboundaryMatrix direct_coboundary_matrix(const SimplicialComplex& K, const Field& F,
                                          int degree, bool normalized);

/// Rank by full reduced row echelon form (normalizes pivots, eliminates in
/// both directions).
std::size_t rref_rank(const Field& F, const CoboundaryMatrix& m);

/// Betti numbers from the direct matrices and the RREF rank.
std::vector<long> betti_by_rref(const SimplicialComplex& K, const Field& F,
                                int max_degree, bool normalized);

/// Connected components of the vertex set under the 1-skeleton (union-find).
std::size_t component_count(const SimplicialComplex& K);

}  // namespace cct::oracle
