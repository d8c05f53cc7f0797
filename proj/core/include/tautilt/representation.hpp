#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

/// A left module over an Algebra given as a quiver representation: one
/// vector space per vertex and one dims[target] x dims[source] matrix per
/// arrow.
class Representation {
public:
    Representation() = default;
    /// Checks shapes (not relations; see validate()).
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

    static Representation zero(AlgebraPtr algebra);

    [[nodiscard]] const AlgebraPtr& algebra() const { return algebra_; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    [[nodiscard]] std::size_t dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex)]; }
    [[nodiscard]] std::size_t total_dim() const;
    [[nodiscard]] const std::vector<Matrix>& maps() const { return maps_; }
    [[nodiscard]] const Matrix& map(int arrow) const { return maps_[static_cast<std::size_t>(arrow)]; }
    [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
    [[nodiscard]] std::string label() const { return dim_vector_string(dims_); }

    /// Matrix by which a path (traversal order) acts from its source to its target.
    [[nodiscard]] Matrix path_action(const Path& p) const;

    friend bool operator==(const Representation& a, const Representation& b);

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
};

/// True when both live over structurally identical algebras.
bool same_algebra(const Algebra& a, const Algebra& b);

struct ValidationReport {
    bool ok = true;
    std::string message;
};

ValidationReport validate(const Representation& m);

/// A module map given by one matrix per vertex (target.dim(i) x source.dim(i)).
struct Morphism {
    std::vector<Matrix> maps;

    [[nodiscard]] const Matrix& at(int vertex) const { return maps[static_cast<std::size_t>(vertex)]; }
    [[nodiscard]] bool is_zero() const;
    friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism zero_morphism(const Representation& from, const Representation& to);
Morphism identity_morphism(const Representation& m);
/// g o f
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Rational& c, const Morphism& f);
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs, const Representation& from,
                 const Representation& to);
bool is_morphism(const Representation& from, const Representation& to, const Morphism& f);
bool is_isomorphism(const Morphism& f);
/// Trace of the total linear map of an endomorphism.
Rational trace(const Morphism& f);

/// Basis of Hom(m, n) from the intertwiner equations f_j M_a = N_a f_i.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);
/// Coordinates of f with respect to hom_basis(m, n) (f must be a morphism).
Vector hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f);

/// Coordinates against a fixed linearly independent list of morphisms, with
/// the elimination done once up front.
class HomCoordinates {
public:
    HomCoordinates() = default;
    explicit HomCoordinates(const std::vector<Morphism>& basis);

    [[nodiscard]] std::size_t size() const { return rows_.rows(); }
    /// Throws ContractViolation when f is outside the span.
    [[nodiscard]] Vector operator()(const Morphism& f) const;

private:
    Matrix rows_;                       // flattened basis, one per row
    std::vector<std::size_t> columns_;  // columns where rows_ restricts to an invertible block
    Matrix solve_;                      // inverse of that block
};

struct DirectSum {
    Representation sum;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts);
/// Direct sum without the structure maps.
Representation direct_sum_module(const std::vector<Representation>& parts);

/// Per-vertex subspaces of a parent representation, closed under the arrows.
struct SubRep {
    std::vector<Subspace> spaces;

    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] std::size_t total_dim() const;
    friend bool operator==(const SubRep&, const SubRep&) = default;
};

SubRep zero_subrep(const Representation& m);
SubRep full_subrep(const Representation& m);
bool is_subrep(const Representation& m, const SubRep& s);
SubRep subrep_sum(const SubRep& a, const SubRep& b);
SubRep subrep_intersection(const SubRep& a, const SubRep& b);
bool subrep_contains(const SubRep& a, const SubRep& b);
SubRep image(const Morphism& f, const Representation& to);
SubRep kernel(const Morphism& f, const Representation& from);
/// Smallest subrep containing the given per-vertex subspaces.
SubRep generated_subrep(const Representation& m, std::vector<Subspace> seeds);

struct SubModule {
    Representation module;
    Morphism inclusion;
};

struct QuotientModule {
    Representation module;
    Morphism projection;
};

SubModule sub_representation(const Representation& m, const SubRep& s);
QuotientModule quotient_representation(const Representation& m, const SubRep& s);
SubModule kernel_module(const Morphism& f, const Representation& from);
QuotientModule cokernel_module(const Morphism& f, const Representation& to);

/// Sum of the images of all maps from the generators into y.
SubRep trace(const std::vector<Representation>& generators, const Representation& y);
/// Intersection of the kernels of all maps from y into the generators.
SubRep reject(const Representation& y, const std::vector<Representation>& generators);

SubRep radical(const Representation& m);
SubRep socle(const Representation& m);
QuotientModule top(const Representation& m);

std::size_t support_rank(const Representation& m);
std::size_t support_rank(const std::vector<Representation>& ms);
std::vector<int> support(const Representation& m);

Representation projective(const AlgebraPtr& a, int vertex);
Representation injective(const AlgebraPtr& a, int vertex);
Representation simple(const AlgebraPtr& a, int vertex);
/// Regular module A = sum of all P(i).
Representation regular(const AlgebraPtr& a);

/// Transports m along per-vertex invertible matrices g: M'_a = g_t M_a g_s^-1.
Representation conjugate(const Representation& m, const std::vector<Matrix>& g);
/// Seeded random invertible per-vertex base change.
std::vector<Matrix> random_base_change(const Representation& m, std::uint64_t seed);

/// Module over A/<e> viewed as an A-module (zero at killed vertices).
Representation inflate(const Representation& m, const AlgebraPtr& parent);
/// A-module vanishing at the killed vertices viewed over the quotient.
Representation deflate(const Representation& m, const AlgebraPtr& quotient);

}  // namespace tautilt
