#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tautilt/representation.hpp"

namespace tautilt {

/// End(m) with its Jacobson radical, the latter found as the kernel of the
/// trace form (x, y) -> tr(xy).
struct EndRing {
    std::vector<Morphism> basis;
    std::vector<Morphism> radical;  // basis of rad End(m)

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    [[nodiscard]] std::size_t top_dim() const { return basis.size() - radical.size(); }
};

EndRing endomorphism_ring(const Representation& m);

/// dim End(m)/rad End(m) == 1. Zero is not indecomposable.
bool is_indecomposable(const Representation& m);

struct Summand {
    Representation module;
    Morphism inclusion;   // summand -> m
    Morphism projection;  // m -> summand
};

struct IsoClass {
    Representation module;  // first summand found in this class
    std::size_t multiplicity = 0;
    std::vector<std::size_t> parts;  // indices into DecompositionResult::parts
};

struct DecompositionResult {
    std::vector<Summand> parts;  // sum of inclusion o projection is the identity
    std::vector<IsoClass> classes;

    [[nodiscard]] std::size_t distinct() const { return classes.size(); }
};

/// Krull-Schmidt decomposition. Throws DomainError("non-split endomorphism
/// ring") when a summand cannot be certified absolutely indecomposable.
DecompositionResult decompose(const Representation& m, std::uint64_t seed = 0);

/// Isomorphism between two certified indecomposables, found through the
/// trace pairing Hom(x, y) x Hom(y, x) -> Q.
std::optional<Morphism> iso_indecomposable(const Representation& x, const Representation& y);

/// An isomorphism m -> n, or nullopt when none exists.
std::optional<Morphism> iso_test(const Representation& m, const Representation& n, std::uint64_t seed = 0);
bool isomorphic(const Representation& m, const Representation& n);

}  // namespace tautilt
