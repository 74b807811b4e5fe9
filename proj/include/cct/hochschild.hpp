#pragma once

#include "cct/cochain.hpp"

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace cct {

/// A generator (src, dst) of the incidence algebra, with src <= dst.
struct IncidencePair {
    SimplexId src;
    SimplexId dst;
    auto operator<=>(const IncidencePair&) const = default;
};

/// An element of the incidence algebra: a finite scalar combination of
/// generator pairs. No zero coefficients stored.
class IncidenceElement {
  public:
    IncidenceElement(const SimplicialComplex& K, const Field& F)
        : complex_(&K), field_(&F) {}

    const std::map<IncidencePair, Scalar>& terms() const { return terms_; }
    void accumulate(const IncidencePair& p, const Scalar& v);
    Scalar at(const IncidencePair& p) const;
    bool is_zero() const { return terms_.empty(); }

    const SimplicialComplex& complex() const { return *complex_; }
    const Field& field() const { return *field_; }

  private:
    const SimplicialComplex* complex_;
    const Field* field_;
    std::map<IncidencePair, Scalar> terms_;
};

/// Bilinear extension of (a,b)(c,d) = (a,d) if b == c else 0.
IncidenceElement incidence_multiply(const IncidenceElement& x, const IncidenceElement& y);

/// The unit: the sum of all diagonal pairs (s, s).
IncidenceElement incidence_unit(const SimplicialComplex& K, const Field& F);

/// All composable degree-n sequences of generator pairs, enumerated over the
/// generators themselves and returned as the chains they trace out. Equals
/// enumerate_chains (the path basis is the chain basis) but computed
/// independently. Degree 0 yields the diagonal basis, one path per simplex.
std::vector<Chain> enumerate_paths(const SimplicialComplex& K, int degree,
                                   bool normalized);

/// Applies a Hochschild cochain (as an S-bimodule map) to a sequence of
/// generator pairs. Zero unless the pairs are composable and their count is
/// the cochain degree; an empty sequence applies a degree-0 cochain to the
/// unit, yielding its diagonal element.
IncidenceElement apply_on_generators(const Cochain& f,
                                     std::span<const IncidencePair> pairs);

/// The Hochschild coboundary, computed through the bimodule formula
///   (dF)(a_1,...,a_{n+1}) = a_1 F(a_2,...) + sum_i (-1)^i F(..., a_i a_{i+1}, ...)
///                           + (-1)^{n+1} F(...) a_{n+1}
/// with incidence-algebra products. On the path basis this reduces to the
/// delete-one-entry alternating sum.
Cochain hochschild_coboundary(const Cochain& f);

/// Concatenation product, no sign: the output pairs of the two factors
/// compose across the shared middle simplex.
Cochain hochschild_cup(const Cochain& f, const Cochain& g);

/// The brace x{x_1,...,x_n}: on a path of degree m it sums over insertion
/// positions 0 <= i_1, i_k + deg x_k <= i_{k+1}, i_n + deg x_n <= m, with
/// sign (-1)^{sum_k i_k (deg x_k - 1)}, the summand being x evaluated on the
/// path with every segment [i_k .. i_k + deg x_k] collapsed to its endpoint
/// pair, times prod_k x_k(segment k). Throws std::invalid_argument when args
/// is empty.
Cochain hochschild_brace(const Cochain& x, std::span<const Cochain> args);

}  // namespace cct
