#pragma once

#include "cct/chain.hpp"
#include "cct/complex.hpp"
#include "cct/field.hpp"

#include <map>
#include <string>

namespace cct {

enum class Side { simplicial, hochschild };

inline const char* side_name(Side s) {
    return s == Side::simplicial ? "simplicial" : "hochschild";
}

/// A homogeneous cochain: a finitely supported map from degree-n chains to
/// field scalars. Zero coefficients are never stored. The same representation
/// carries simplicial cochains on the subdivision and Hochschild cochains in
/// the path basis; the `side` tag records the intended interpretation.
///
/// The degree may be negative only for identically zero cochains (such
/// cochains arise as formal results of brace operations of negative degree).
class Cochain {
  public:
    Cochain(const SimplicialComplex& K, const Field& F, Side side, int degree)
        : complex_(&K), field_(&F), side_(side), degree_(degree) {}

    static Cochain indicator(const SimplicialComplex& K, const Field& F, Side side,
                             const Chain& c) {
        Cochain f(K, F, side, c.degree());
        f.coeffs_.emplace(c, F.one());
        return f;
    }

    /// The degree-0 cochain that is 1 on every 0-chain (the cup unit).
    static Cochain unit(const SimplicialComplex& K, const Field& F, Side side);

    int degree() const { return degree_; }
    Side side() const { return side_; }
    const SimplicialComplex& complex() const { return *complex_; }
    const Field& field() const { return *field_; }

    const std::map<Chain, Scalar>& coefficients() const { return coeffs_; }

    Scalar at(const Chain& c) const {
        auto it = coeffs_.find(c);
        return it == coeffs_.end() ? field_->zero() : it->second;
    }

    /// Adds `v` to the coefficient of `c`, dropping it if the sum is zero.
    void accumulate(const Chain& c, const Scalar& v);

    /// Sets the coefficient of `c` (erases on zero).
    void set(const Chain& c, const Scalar& v);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    /// Same coefficients read on the other side's basis.
    Cochain reinterpreted(Side side) const;

    /// One line per coefficient: "CHAIN <s0>|<s1>|... = <scalar>".
    std::string dump() const;

    bool operator==(const Cochain& other) const {
        return side_ == other.side_ && degree_ == other.degree_ &&
               coeffs_ == other.coeffs_;
    }

  private:
    const SimplicialComplex* complex_;
    const Field* field_;
    Side side_;
    int degree_;
    std::map<Chain, Scalar> coeffs_;
};

/// Sum; degrees must agree unless one operand is identically zero, in which
/// case the other's degree wins.
Cochain add(const Cochain& a, const Cochain& b);
Cochain sub(const Cochain& a, const Cochain& b);
Cochain negated(const Cochain& a);
Cochain scaled(const Cochain& a, const Scalar& s);

}  // namespace cct
