#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cct {

using SimplexId = std::uint32_t;

/// A nonempty set of vertex labels, stored strictly sorted.
/// Ordering is by (dimension, then lexicographic on labels); this is the
/// order used for poset element enumeration throughout.
class Simplex {
  public:
    /// Throws std::invalid_argument on an empty vertex list or duplicates.
    explicit Simplex(std::vector<std::string> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    /// "a,b,c"
    std::string str() const;

    /// Subset test on vertex sets.
    bool subset_of(const Simplex& other) const;

    std::strong_ordering operator<=>(const Simplex& other) const;
    bool operator==(const Simplex& other) const { return vertices_ == other.vertices_; }

  private:
    std::vector<std::string> vertices_;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// A finite simplicial complex, closed under nonempty subsets, doubling as
/// its face poset. Immutable after construction.
class SimplicialComplex {
  public:
    /// Builds the downward closure of the facets listed in `text`.
    /// Format: one simplex per line as whitespace-separated vertex labels;
    /// '#' lines and blank lines are ignored. Throws ParseError.
    static SimplicialComplex parse_facets(std::string_view text);

    std::size_t size() const { return elements_.size(); }
    int dimension() const;

    const Simplex& simplex(SimplexId id) const { return elements_[id]; }
    std::optional<SimplexId> find(const Simplex& s) const;

    /// All simplices ordered by (dimension, lexicographic); index == SimplexId.
    const std::vector<Simplex>& poset_elements() const { return elements_; }

    bool face_leq(SimplexId a, SimplexId b) const {
        return leq_[a * elements_.size() + b];
    }

    /// counts[d] = number of d-simplices
    std::vector<std::size_t> counts_by_dimension() const;

  private:
    explicit SimplicialComplex(std::vector<Simplex> elements);

    std::vector<Simplex> elements_;
    std::map<Simplex, SimplexId> index_;
    std::vector<bool> leq_;
};

inline bool face_leq(const Simplex& a, const Simplex& b) { return a.subset_of(b); }

}  // namespace cct
