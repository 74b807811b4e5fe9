#pragma once

#include "cct/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cct {

/// The matrix of the degree-n coboundary in the chain bases: rows indexed by
/// degree-(n+1) chains, columns by degree-n chains.
struct CoboundaryMatrix {
    int degree = 0;
    Side side = Side::simplicial;
    bool normalized = true;
    std::vector<Chain> rows;
    std::vector<Chain> cols;
    std::vector<Scalar> entries;  // row-major, rows.size() * cols.size()

    const Scalar& at(std::size_t r, std::size_t c) const {
        return entries[r * cols.size() + c];
    }
};

/// Entries read off by applying the side's coboundary to basis indicators.
CoboundaryMatrix coboundary_matrix(const SimplicialComplex& K, const Field& F,
                                   Side side, int degree, bool normalized);

/// Exact rank by Gaussian elimination, pivoting on the first nonzero row.
std::size_t matrix_rank(const Field& F, CoboundaryMatrix m);

struct BettiTable {
    FieldSpec field;
    Side side = Side::simplicial;
    bool normalized = true;
    std::vector<long> values;  // b_0 .. b_max

    /// "BETTI side=<s> field=<f> normalized=<bool> : b0=.. b1=.. ..."
    std::string render() const;

    bool operator==(const BettiTable&) const = default;
};

/// b_n = dim ker d_n - rank d_{n-1}, for n = 0..max_degree. When max_degree
/// is not given it defaults to dim(subdivision) + 1.
BettiTable betti(const SimplicialComplex& K, const Field& F, Side side,
                 std::optional<int> max_degree, bool normalized);

}  // namespace cct
