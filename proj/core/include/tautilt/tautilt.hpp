#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/decompose.hpp"
#include "tautilt/homological.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

bool is_tau_rigid(const Representation& t);
/// Pair form: additionally Hom(p, t) = 0.
bool is_tau_rigid(const Representation& t, const Representation& p);

/// A set of indecomposables, standing for add of their sum.
struct ModuleClass {
    std::vector<std::size_t> members;  // sorted, no repeats

    ModuleClass() = default;
    explicit ModuleClass(std::vector<std::size_t> ids);

    [[nodiscard]] bool contains(std::size_t k) const;
    [[nodiscard]] std::size_t size() const { return members.size(); }
    [[nodiscard]] bool empty() const { return members.empty(); }
    /// Inclusion of sets.
    [[nodiscard]] bool subset_of(const ModuleClass& other) const;

    friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
    friend auto operator<=>(const ModuleClass&, const ModuleClass&) = default;
};

ModuleClass class_intersection(const ModuleClass& a, const ModuleClass& b);

/// Enumerated indecomposables with the Hom tables every class-level test uses.
class ARIndex {
public:
    explicit ARIndex(ARQuiverData data);
    static ARIndex of(const AlgebraPtr& a, std::uint64_t seed = 0);

    [[nodiscard]] const ARQuiverData& data() const { return data_; }
    [[nodiscard]] const AlgebraPtr& algebra() const { return data_.algebra; }
    [[nodiscard]] std::size_t size() const { return data_.size(); }
    [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(data_.algebra->vertex_count()); }
    [[nodiscard]] const Representation& module(std::size_t k) const { return data_.indecomposables[k]; }
    [[nodiscard]] std::string label(std::size_t k) const { return data_.label(k); }
    [[nodiscard]] std::string label(const ModuleClass& c) const;

    [[nodiscard]] std::size_t hom(std::size_t x, std::size_t y) const { return hom_[x][y]; }
    /// dim Hom(x, tau y); zero when y is projective.
    [[nodiscard]] std::size_t hom_tau(std::size_t x, std::size_t y) const;
    /// dim Hom(tau^- x, y); zero when x is injective.
    [[nodiscard]] std::size_t hom_tau_inverse(std::size_t x, std::size_t y) const;
    /// dim Ext^1(x, y), computed on first use.
    [[nodiscard]] std::size_t ext(std::size_t x, std::size_t y) const;

    [[nodiscard]] std::size_t projective_at(int vertex) const { return projective_[static_cast<std::size_t>(vertex)]; }
    [[nodiscard]] std::size_t injective_at(int vertex) const { return injective_[static_cast<std::size_t>(vertex)]; }
    [[nodiscard]] const std::vector<long long>& g_vector(std::size_t k) const { return g_[k]; }

    [[nodiscard]] std::size_t find(const Representation& x) const;
    /// Summand indices of m with multiplicity.
    [[nodiscard]] std::vector<std::size_t> locate(const Representation& m) const;
    /// Distinct summand classes of m.
    [[nodiscard]] ModuleClass summands(const Representation& m) const;
    [[nodiscard]] Representation sum(const ModuleClass& c) const;

    /// gen of a class, cached.
    [[nodiscard]] const ModuleClass& gen(const ModuleClass& m) const;

    [[nodiscard]] ModuleClass all() const;
    [[nodiscard]] ModuleClass projectives() const;

private:
    ARQuiverData data_;
    std::vector<std::vector<std::size_t>> hom_;
    std::vector<std::size_t> projective_;
    std::vector<std::size_t> injective_;
    std::vector<std::vector<long long>> g_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> ext_;
    mutable std::map<ModuleClass, ModuleClass> gen_;
};

/// s^perp: Y with Hom(s, Y) = 0.
ModuleClass right_perp(const ARIndex& ix, const ModuleClass& s);
/// perp s: X with Hom(X, s) = 0.
ModuleClass left_perp(const ARIndex& ix, const ModuleClass& s);

/// Y in gen(m) iff the trace of m in Y is Y; Y in cogen(m) iff the reject of m in Y is 0.
ModuleClass gen_class(const ARIndex& ix, const ModuleClass& m);
ModuleClass cogen_class(const ARIndex& ix, const ModuleClass& m);
std::pair<ModuleClass, ModuleClass> gen_cogen_class(const ARIndex& ix, const Representation& m);

struct ClassCheck {
    bool ok = false;
    std::optional<std::size_t> witness;  // an indecomposable where the class and its double perp differ
};

ClassCheck is_torsion_class(const ARIndex& ix, const ModuleClass& s);
ClassCheck is_torsion_free_class(const ARIndex& ix, const ModuleClass& f);

struct TorsionPairData {
    ModuleClass torsion;
    ModuleClass torsion_free;
};

TorsionPairData torsion_pair(const ARIndex& ix, const ModuleClass& torsion);

constexpr std::size_t kOracleLimit = 20;

/// Every subset that is a double-perp fixpoint, by brute force; sorted by size, then members.
std::vector<ModuleClass> enumerate_torsion_classes_oracle(const ARIndex& ix);
/// Cover relations (larger, smaller) of the inclusion order on the given classes.
std::vector<std::pair<std::size_t, std::size_t>> inclusion_covers(const std::vector<ModuleClass>& classes);

struct TorsionDecomposition {
    SubModule torsion_part;  // tX
    QuotientModule free_part;  // X / tX
};

TorsionDecomposition torsion_theory_of(const ARIndex& ix, const ModuleClass& s, const Representation& x);

/// Ext-projectives of a torsion class: X with Hom(Y, tau X) = 0 for all Y in s.
ModuleClass ext_projectives(const ARIndex& ix, const ModuleClass& s);
/// Ext-injectives of a torsion-free class: X with Hom(tau^- X, Y) = 0 for all Y in f.
ModuleClass ext_injectives(const ARIndex& ix, const ModuleClass& f);
/// Any class, straight from Ext^1: Ext^1(X, c) = 0, resp. Ext^1(c, X) = 0.
ModuleClass ext_projectives_exact(const ARIndex& ix, const ModuleClass& c);
ModuleClass ext_injectives_exact(const ARIndex& ix, const ModuleClass& c);

struct TiltingChecks {
    bool partial_tilting = false;
    bool tilting = false;
};

TiltingChecks tilting_checks(const Representation& t, std::uint64_t seed = 0);
/// E + m with E the universal extension of m^n by A.
Representation bongartz_tilting(const Representation& m, std::uint64_t seed = 0);

/// The class perp(tau u), checked to be a sincere torsion class.
ModuleClass bongartz_class(const ARIndex& ix, const ModuleClass& u);
ModuleClass bongartz_tau(const ARIndex& ix, const ModuleClass& u);

bool is_tau_rigid(const ARIndex& ix, const ModuleClass& t);
std::size_t support_rank(const ARIndex& ix, const ModuleClass& c);
/// Vertices where every member vanishes.
std::vector<int> vanishing_vertices(const ARIndex& ix, const ModuleClass& c);

/// (T, P) with P the sum of P(i) over killed vertices.
struct SupportTauTiltingPair {
    ModuleClass summands;
    std::vector<int> killed;  // sorted

    friend bool operator==(const SupportTauTiltingPair&, const SupportTauTiltingPair&) = default;
    friend auto operator<=>(const SupportTauTiltingPair&, const SupportTauTiltingPair&) = default;
};

bool support_tau_tilting_check(const ARIndex& ix, const ModuleClass& t);
/// Throws DomainError unless t is support tau-tilting.
SupportTauTiltingPair complete_pair(const ARIndex& ix, const ModuleClass& t);
bool is_valid_pair(const ARIndex& ix, const SupportTauTiltingPair& p);
/// The pair whose module is P(c) and whose killed set is where c vanishes.
SupportTauTiltingPair pair_of_class(const ARIndex& ix, const ModuleClass& c);
std::string pair_label(const ARIndex& ix, const SupportTauTiltingPair& p);

enum class Direction { left, right };

struct Mutation {
    SupportTauTiltingPair result;
    Direction direction = Direction::left;
    std::size_t exchanged = 0;  // position in the input: summands first, then killed vertices
};

/// k < #summands removes that summand, otherwise the killed vertex at k - #summands.
Mutation mutate(const ARIndex& ix, const SupportTauTiltingPair& pair, std::size_t k);

/// Codomain-minimal left add(u)-approximation f: x -> u'.
struct LeftApproximation {
    Representation target;
    Morphism f;
    std::vector<std::size_t> parts;  // indices into u, one per summand of target
};

LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& u);

/// Domain-minimal right add(u)-approximation g: u' -> x.
struct RightApproximation {
    Representation source;
    Morphism g;
    std::vector<std::size_t> parts;
};

RightApproximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& u);

/// Whether every map x -> u_j factors through f.
bool is_left_approximation(const LeftApproximation& a, const Representation& x, const std::vector<Representation>& u);
bool is_right_approximation(const RightApproximation& a, const Representation& x, const std::vector<Representation>& u);

struct ExchangeSequence {
    LeftApproximation approximation;
    Representation y;          // cokernel of f; zero when u is not sincere
    std::optional<int> killed;  // the vertex outside supp u when y = 0
};

/// x -> u' -> y -> 0 for t = x + u tau-tilting over its support algebra.
ExchangeSequence exchange_sequence(const Representation& x, const std::vector<Representation>& u);
/// The left mutation of a tau-tilting pair at summand position k through its exchange sequence.
SupportTauTiltingPair exchange_mutation(const ARIndex& ix, const SupportTauTiltingPair& pair, std::size_t k);

struct HasseEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t exchanged = 0;  // indecomposable removed from `from`, or the killed vertex when `killed`
    bool killed = false;
};

struct HasseQuiver {
    std::vector<SupportTauTiltingPair> vertices;
    std::vector<HasseEdge> edges;  // from the larger torsion class to the smaller
    std::vector<ModuleClass> torsion;  // gen of each vertex

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edge_pairs() const;
    [[nodiscard]] std::optional<std::size_t> index_of(const SupportTauTiltingPair& p) const;
};

constexpr std::size_t kDefaultVertexCap = 4096;

/// Mutation closure from (A, 0). Throws DomainError past the cap.
HasseQuiver hasse(const ARIndex& ix, std::size_t vertex_cap = kDefaultVertexCap);
/// Cover relations among the torsion classes of the vertices.
std::vector<std::pair<std::size_t, std::size_t>> maximal_inclusion_edges(const HasseQuiver& h);

struct HasseReport {
    bool regular = false;  // every undirected degree equals #A
    bool edges_match = false;  // mutation edges equal maximal inclusion edges
    std::optional<std::size_t> source;
    std::optional<std::size_t> sink;
};

HasseReport check_hasse(const ARIndex& ix, const HasseQuiver& h);

/// (Tr T_np + P*, T_pr*) over the opposite algebra, located in op.
SupportTauTiltingPair dagger(const ARIndex& ix, const ARIndex& op, const SupportTauTiltingPair& pair);

struct BrickRecord {
    Representation module;
    bool is_brick = false;
    Representation fbrick_image;
};

/// x modulo the sum of the images of its radical endomorphisms.
Representation fbrick_of(const Representation& x);
std::vector<BrickRecord> bricks(const ARIndex& ix);

enum class Finiteness { finite, unknown };

struct ProbeResult {
    Finiteness verdict = Finiteness::unknown;
    std::size_t pairs = 0;  // support tau-tilting pairs found (all of them when finite)
    std::size_t modules = 0;  // indecomposables met along the way
    std::optional<std::size_t> oracle;  // torsion class count, when enumeration also succeeds
    std::string evidence;
};

struct ProbeCaps {
    std::size_t vertex_cap = kDefaultVertexCap;
    std::size_t dim_cap = kDefaultDimCap;
    std::size_t count_cap = kDefaultCountCap;
};

/// Left mutation closure through exchange sequences; needs no enumeration.
ProbeResult finiteness_probe(const AlgebraPtr& a, const ProbeCaps& caps = {}, std::uint64_t seed = 0);

/// tau-rigid subsets of the indecomposables (including the empty one).
std::vector<ModuleClass> tau_rigid_classes(const ARIndex& ix);
/// Rank of the summand g-vectors equals the number of summands.
bool g_vectors_independent(const ARIndex& ix, const ModuleClass& t);

}  // namespace tautilt
