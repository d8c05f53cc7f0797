#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tautilt/decompose.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// The opposite algebra, cached so that opposite_of(opposite_of(a)) == a.
AlgebraPtr opposite_of(const AlgebraPtr& a);

/// P(tops[0]) + P(tops[1]) + ... in that order.
Representation projective_sum(const AlgebraPtr& a, const std::vector<int>& tops);

/// The map P(tops[0]) + ... -> n sending the s-th generator to images[s]
/// (a vector in n at vertex tops[s]).
Morphism from_projective_sum(const std::vector<int>& tops, const Representation& p, const Representation& n,
                             const std::vector<Vector>& images);

struct ProjectiveCover {
    Representation p;
    Morphism eps;  // p -> m, surjective
    std::vector<int> tops;
};

ProjectiveCover projective_cover(const Representation& m);

struct InjectiveEnvelope {
    Representation i;
    Morphism iota;  // m -> i, injective
};

InjectiveEnvelope injective_envelope(const Representation& m);

/// Minimal projective presentation p1 -d-> p0 -eps-> m -> 0.
struct Presentation {
    Representation m;
    Representation p0;
    Representation p1;
    Morphism eps;
    Morphism d;
    std::vector<int> top0;
    std::vector<int> top1;
    SubModule syzygy;  // kernel of eps with its inclusion into p0
};

Presentation minimal_presentation(const Representation& m);

/// Lift f: p -> y through a surjection s: e -> y when p = projective_sum(tops).
Morphism lift_from_projective(const std::vector<int>& tops, const Representation& p, const Representation& e,
                              const Morphism& s, const Morphism& f);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// D: vector space dual, a module over the opposite algebra.
Representation dual(const Representation& m);
/// D(f): D(to) -> D(from).
Morphism dual(const Morphism& f);

/// M* = Hom(M, A) over the opposite algebra; basis[i] spans Hom(M, P(i)).
struct StarModule {
    Representation module;
    std::vector<std::vector<Morphism>> basis;
};

StarModule star(const Representation& m);
/// f*: N* -> M* for f: M -> N.
Morphism star(const Morphism& f, const StarModule& from_star, const StarModule& to_star);

Representation transpose(const Representation& m);
Representation nakayama(const Representation& p);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);

bool proj_dim_le1(const Representation& m);

/// Ext^1(m, n) = Hom(syzygy m, n) modulo restrictions of Hom(p0, n).
struct ExtSpace {
    Representation m;
    Representation n;
    Presentation pres;
    std::vector<Morphism> hom_syzygy;    // basis of Hom(syzygy, n)
    Subspace restrictions;               // in hom_syzygy coordinates
    Matrix complement;                   // rows: coordinates of class representatives
    std::vector<Morphism> classes;       // representatives of a basis of Ext^1
    HomCoordinates syzygy_coords;        // against hom_syzygy
    Matrix class_projection;             // hom_syzygy coordinates -> class coordinates

    [[nodiscard]] std::size_t dim() const { return classes.size(); }
    /// Class of a representative syzygy -> n in the basis `classes`.
    [[nodiscard]] Vector class_of(const Morphism& rep) const;
    [[nodiscard]] Morphism representative(const Vector& coords) const;
};

ExtSpace ext1(const Representation& m, const Representation& n);
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// dim Hom(x, y) modulo maps factoring through an injective.
std::size_t stable_hom_dim_injective(const Representation& x, const Representation& y);
/// dim Hom(x, y) modulo maps factoring through a projective.
std::size_t stable_hom_dim_projective(const Representation& x, const Representation& y);

/// 0 -> n -inclusion-> e -projection-> m -> 0.
struct Extension {
    Representation e;
    Morphism inclusion;
    Morphism projection;
};

Extension realize_extension(const ExtSpace& s, const Vector& coords);
/// The class of a short exact sequence 0 -> s.n -> e -> s.m -> 0.
Vector extension_class(const ExtSpace& s, const Extension& seq);

struct ARSequence {
    Representation left;
    Extension sequence;
    DecompositionResult middle;
};

/// Almost split sequence ending at an indecomposable non-projective m.
ARSequence ar_sequence(const Representation& m, std::uint64_t seed = 0);
/// Same, with tau(m) already known.
ARSequence ar_sequence(const Representation& m, const Representation& tau_m, std::uint64_t seed = 0);

struct ARQuiverData {
    AlgebraPtr algebra;
    std::vector<Representation> indecomposables;
    std::vector<bool> projective;
    std::vector<bool> injective;
    std::vector<std::optional<std::size_t>> tau;
    std::vector<std::optional<std::size_t>> tau_inverse;
    /// middle[x]: summand indices (with repetition) of the AR sequence ending at x,
    /// or of rad x when x is projective.
    std::vector<std::vector<std::size_t>> middle;
    std::vector<std::optional<ARSequence>> sequences;

    [[nodiscard]] std::size_t size() const { return indecomposables.size(); }
    /// Index of the indecomposable isomorphic to x.
    [[nodiscard]] std::optional<std::size_t> find(const Representation& x) const;
    /// Irreducible maps (from, to), one entry per multiplicity.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
    /// Display label: dim vector plus one ' per earlier indecomposable with the same dims.
    [[nodiscard]] std::string label(std::size_t k) const;
};

constexpr std::size_t kDefaultCountCap = 256;
constexpr std::size_t kDefaultDimCap = 64;

ARQuiverData enumerate_indecomposables(const AlgebraPtr& a, std::size_t count_cap = kDefaultCountCap,
                                       std::size_t dim_cap = kDefaultDimCap, std::uint64_t seed = 0);

/// g(m) = [P0] - [P1] from the minimal presentation.
std::vector<long long> g_vector(const Representation& m);
long long bracket(const std::vector<long long>& g, const std::vector<std::size_t>& dims);

}  // namespace tautilt
