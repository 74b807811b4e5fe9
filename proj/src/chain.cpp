#include "cct/chain.hpp"

#include <stdexcept>

namespace cct {

bool Chain::nondegenerate() const {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] == entries_[i + 1]) return false;
    return true;
}

Chain Chain::restricted(std::span<const int> indices) const {
    std::vector<SimplexId> out;
    out.reserve(indices.size());
    int prev = -1;
    for (int i : indices) {
        if (i < 0 || i > degree()) throw std::out_of_range("restrict index out of range");
        if (i < prev) throw std::invalid_argument("restrict indices must be increasing");
        prev = i;
        out.push_back(entries_[static_cast<std::size_t>(i)]);
    }
    return Chain(std::move(out));
}

Chain Chain::without(int i) const {
    std::vector<SimplexId> out;
    out.reserve(entries_.size() - 1);
    for (int j = 0; j <= degree(); ++j)
        if (j != i) out.push_back(entries_[static_cast<std::size_t>(j)]);
    return Chain(std::move(out));
}

bool is_valid_chain(const SimplicialComplex& K, const Chain& c) {
    if (c.degree() < 0) return false;
    for (SimplexId id : c.entries())
        if (id >= K.size()) return false;
    for (int i = 0; i < c.degree(); ++i)
        if (!K.face_leq(c.at(i), c.at(i + 1))) return false;
    return true;
}

std::vector<Chain> enumerate_chains(const SimplicialComplex& K, int degree,
                                    bool normalized) {
    std::vector<Chain> out;
    if (degree < 0) return out;
    const SimplexId n = static_cast<SimplexId>(K.size());
    std::vector<SimplexId> prefix;
    prefix.reserve(degree + 1);

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == degree + 1) {
            out.emplace_back(prefix);
            return;
        }
        if (prefix.empty()) {
            for (SimplexId i = 0; i < n; ++i) {
                prefix.push_back(i);
                self(self);
                prefix.pop_back();
            }
        } else {
            const SimplexId last = prefix.back();
            for (SimplexId i = 0; i < n; ++i) {
                if (!K.face_leq(last, i)) continue;
                if (normalized && i == last) continue;
                prefix.push_back(i);
                self(self);
                prefix.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

}  // namespace cct
