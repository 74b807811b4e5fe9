#include "cct/cohomology.hpp"

#include "cct/hochschild.hpp"
#include "cct/simplicial.hpp"

#include <cassert>

namespace cct {

CoboundaryMatrix coboundary_matrix(const SimplicialComplex& K, const Field& F,
                                   Side side, int degree, bool normalized) {
    assert(degree >= 0);
    CoboundaryMatrix m;
    m.degree = degree;
    m.side = side;
    m.normalized = normalized;
    m.cols = side == Side::simplicial ? enumerate_chains(K, degree, normalized)
                                      : enumerate_paths(K, degree, normalized);
    m.rows = side == Side::simplicial ? enumerate_chains(K, degree + 1, normalized)
                                      : enumerate_paths(K, degree + 1, normalized);
    m.entries.assign(m.rows.size() * m.cols.size(), F.zero());
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
        Cochain indicator = Cochain::indicator(K, F, side, m.cols[c]);
        Cochain image = side == Side::simplicial ? simplicial_coboundary(indicator)
                                                 : hochschild_coboundary(indicator);
        for (std::size_t r = 0; r < m.rows.size(); ++r)
            m.entries[r * m.cols.size() + c] = image.at(m.rows[r]);
    }
    return m;
}

std::size_t matrix_rank(const Field& F, CoboundaryMatrix m) {
    const std::size_t nrows = m.rows.size();
    const std::size_t ncols = m.cols.size();
    auto& a = m.entries;
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * ncols + c]; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t r = rank; r < nrows; ++r) {
            if (!F.is_zero(at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < ncols; ++c) std::swap(at(pivot, c), at(rank, c));
        const Scalar inv = F.invert(at(rank, col));
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            if (F.is_zero(at(r, col))) continue;
            const Scalar factor = F.mul(at(r, col), inv);
            for (std::size_t c = col; c < ncols; ++c)
                at(r, c) = F.sub(at(r, c), F.mul(factor, at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::string BettiTable::render() const {
    std::string out = "BETTI side=";
    out += side_name(side);
    out += " field=" + field.str();
    out += std::string(" normalized=") + (normalized ? "true" : "false") + " :";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += " b" + std::to_string(i) + "=" + std::to_string(values[i]);
    return out;
}

BettiTable betti(const SimplicialComplex& K, const Field& F, Side side,
                 std::optional<int> max_degree, bool normalized) {
    const int maxd = max_degree.value_or(K.dimension() + 1);
    BettiTable table{F.spec(), side, normalized, {}};
    std::size_t prev_rank = 0;
    for (int n = 0; n <= maxd; ++n) {
        CoboundaryMatrix m = coboundary_matrix(K, F, side, n, normalized);
        const std::size_t dim_n = m.cols.size();
        const std::size_t r = matrix_rank(F, std::move(m));
        table.values.push_back(static_cast<long>(dim_n) - static_cast<long>(r) -
                               static_cast<long>(prev_rank));
        prev_rank = r;
    }
    return table;
}

}  // namespace cct
