#include "cct/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cct {

Simplex::Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw std::invalid_argument("empty simplex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex in simplex");
}

std::string Simplex::str() const {
    std::string out;
    for (const auto& v : vertices_) {
        if (!out.empty()) out += ',';
        out += v;
    }
    return out;
}

bool Simplex::subset_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
    if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
    return vertices_ <=> other.vertices_;
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> elements)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (SimplexId i = 0; i < elements_.size(); ++i)
        index_.emplace(elements_[i], i);
    const std::size_t n = elements_.size();
    leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            leq_[a * n + b] = elements_[a].subset_of(elements_[b]);
}

SimplicialComplex SimplicialComplex::parse_facets(std::string_view text) {
    std::set<Simplex> closure;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool saw_facet = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream tokens(line);
        std::vector<std::string> labels;
        std::string tok;
        while (tokens >> tok) labels.push_back(tok);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw ParseError(lineno, "duplicate vertex in facet");
        saw_facet = true;

        // downward closure: every nonempty subset, by bitmask over the facet
        const std::size_t k = labels.size();
        if (k > 24) throw ParseError(lineno, "facet too large");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<std::string> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(labels[i]);
            closure.insert(Simplex(std::move(sub)));
        }
    }
    if (!saw_facet) throw ParseError(lineno, "no facets found");
    return SimplicialComplex(std::vector<Simplex>(closure.begin(), closure.end()));
}

int SimplicialComplex::dimension() const {
    return elements_.back().dim();  // elements sorted by dimension first
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialComplex::counts_by_dimension() const {
    std::vector<std::size_t> counts(dimension() + 1, 0);
    for (const auto& s : elements_) ++counts[s.dim()];
    return counts;
}

}  // namespace cct
