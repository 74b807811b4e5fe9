#pragma once

#include "cct/complex.hpp"

#include <compare>
#include <span>
#include <vector>

namespace cct {

/// A weakly increasing sequence of simplices sigma_0 <= ... <= sigma_n,
/// stored as poset indices. Degree n chains are the n-simplices of the
/// barycentric subdivision; the same data indexes the Hochschild path basis.
class Chain {
  public:
    explicit Chain(std::vector<SimplexId> entries) : entries_(std::move(entries)) {}

    int degree() const { return static_cast<int>(entries_.size()) - 1; }
    std::span<const SimplexId> entries() const { return entries_; }
    SimplexId at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    SimplexId front() const { return entries_.front(); }
    SimplexId back() const { return entries_.back(); }

    /// No repeated entry, i.e. all inclusions strict.
    bool nondegenerate() const;

    /// Subsequence at the given positions. Indices must be weakly increasing
    /// and in range; repeated indices yield degenerate chains.
    Chain restricted(std::span<const int> indices) const;

    /// The chain with entry i deleted.
    Chain without(int i) const;

    auto operator<=>(const Chain&) const = default;

  private:
    std::vector<SimplexId> entries_;
};

/// True iff every consecutive pair satisfies face_leq in K and all ids are
/// in range.
bool is_valid_chain(const SimplicialComplex& K, const Chain& c);

/// All degree-n chains of K, in lexicographic order on their index tuples
/// (the order induced by poset_elements). With normalized = true, only the
/// strictly increasing ones.
std::vector<Chain> enumerate_chains(const SimplicialComplex& K, int degree,
                                    bool normalized);

}  // namespace cct
