#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tautilt/linalg.hpp"

namespace tautilt {

struct Arrow {
    std::string name;
    int source = 0;  // vertex index, 0-based
    int target = 0;
};

/// Path as a list of arrow indices in the order they are traversed, so the
/// DSL path "b*a" is stored as {a, b}. A trivial path has no arrows.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    [[nodiscard]] std::size_t length() const { return arrows.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

struct RelationTerm {
    Rational coeff;
    std::vector<int> arrows;  // traversal order, length >= 2
};

struct Relation {
    int source = 0;
    int target = 0;
    std::vector<RelationTerm> terms;
};

/// Quiver with relations as written by the user, before any basis work.
struct AlgebraSource {
    std::string name;
    std::vector<int> vertex_labels;  // display labels, index = vertex
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    [[nodiscard]] int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    /// Canonical text (no name), the input of the structural fingerprint.
    [[nodiscard]] std::string canonical_text() const;
    [[nodiscard]] std::string path_text(const std::vector<int>& arrows) const;
};

/// Parses the algebra DSL. Throws ParseError with line/column.
AlgebraSource parse_algebra(const std::string& text);

constexpr std::size_t kDefaultLengthCap = 24;

/// Sparse combination of basis elements.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional algebra KQ/I with a residue-path basis.
class Algebra {
public:
    /// Degreewise basis computation. Throws DomainError when the ideal is not
    /// admissible or the algebra is not finite-dimensional within `cap`.
    static std::shared_ptr<const Algebra> build(AlgebraSource source, std::size_t cap = kDefaultLengthCap);

    [[nodiscard]] const AlgebraSource& source() const { return source_; }
    [[nodiscard]] const std::string& name() const { return source_.name; }
    [[nodiscard]] int vertex_count() const { return source_.vertex_count(); }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return source_.arrows; }
    [[nodiscard]] std::size_t arrow_count() const { return source_.arrows.size(); }
    [[nodiscard]] int arrow_index(const std::string& name) const;
    [[nodiscard]] std::size_t length_cap() const { return cap_; }
    /// Length at which every path lies in the ideal.
    [[nodiscard]] std::size_t termination_length() const { return termination_; }

    [[nodiscard]] bool is_zero() const { return vertex_count() == 0; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
    /// Basis indices of residue paths from i to j.
    [[nodiscard]] const std::vector<std::size_t>& paths_between(int i, int j) const {
        return by_endpoints_[static_cast<std::size_t>(i * vertex_count() + j)];
    }
    [[nodiscard]] std::size_t trivial_path(int i) const { return trivial_[static_cast<std::size_t>(i)]; }

    /// Reduces an arbitrary path (traversal order) to the residue basis.
    [[nodiscard]] SparseVec normal_form(const std::vector<int>& arrows) const;
    /// Product x*y of basis elements ("first y, then x"); empty if not composable.
    [[nodiscard]] const SparseVec& multiply(std::size_t x, std::size_t y) const {
        return mult_[x * basis_.size() + y];
    }

    /// Structural identity: equal fingerprints iff same quiver and relations.
    [[nodiscard]] std::uint64_t fingerprint() const { return fingerprint_; }
    [[nodiscard]] std::string fingerprint_hex() const;

    /// For a quotient by vertices: original vertex index of each vertex.
    [[nodiscard]] const std::vector<int>& vertex_origin() const { return vertex_origin_; }
    [[nodiscard]] const std::vector<int>& arrow_origin() const { return arrow_origin_; }

    [[nodiscard]] std::string dim_vector_label(const std::vector<std::size_t>& dims) const;
    [[nodiscard]] std::string path_text(const Path& p) const;

private:
    friend std::shared_ptr<const Algebra> quotient_by_vertices(const Algebra& a, const std::vector<int>& kill);

    AlgebraSource source_;
    std::size_t cap_ = kDefaultLengthCap;
    std::size_t termination_ = 0;
    std::vector<Path> basis_;
    std::vector<std::vector<std::size_t>> by_endpoints_;
    std::vector<std::size_t> trivial_;
    std::map<std::vector<int>, SparseVec> reduced_;  // every path of length < termination
    std::vector<SparseVec> mult_;
    std::uint64_t fingerprint_ = 0;
    std::vector<int> vertex_origin_;
    std::vector<int> arrow_origin_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Convenience: parse + build.
AlgebraPtr load_algebra(const std::string& text, std::size_t cap = kDefaultLengthCap);

/// Arrows reversed (same names), relation paths reversed.
AlgebraPtr opposite(const Algebra& a);

/// A / <e> where e is the sum of the trivial paths at the killed vertices.
AlgebraPtr quotient_by_vertices(const Algebra& a, const std::vector<int>& kill);

/// Display dimension vector: digits concatenated, or "[a,b,...]" if any > 9.
std::string dim_vector_string(const std::vector<std::size_t>& dims);

}  // namespace tautilt
