#include "tautilt/tautilt.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "tautilt/error.hpp"

namespace tautilt {

bool is_tau_rigid(const Representation& t) {
    if (t.is_zero()) return true;
    return hom_dim(t, tau(t)) == 0;
}

bool is_tau_rigid(const Representation& t, const Representation& p) { return is_tau_rigid(t) && hom_dim(p, t) == 0; }

ModuleClass::ModuleClass(std::vector<std::size_t> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ModuleClass::contains(std::size_t k) const { return std::binary_search(members.begin(), members.end(), k); }

bool ModuleClass::subset_of(const ModuleClass& other) const {
    return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

ModuleClass class_intersection(const ModuleClass& a, const ModuleClass& b) {
    ModuleClass out;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
}

// ---------------------------------------------------------------- index

ARIndex::ARIndex(ARQuiverData data) : data_(std::move(data)) {
    const std::size_t n = data_.size();
    hom_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) hom_[x][y] = hom_dim(data_.indecomposables[x], data_.indecomposables[y]);
    }
    const auto& a = data_.algebra;
    for (int v = 0; v < a->vertex_count(); ++v) {
        projective_.push_back(find(projective(a, v)));
        injective_.push_back(find(injective(a, v)));
    }
    for (const auto& m : data_.indecomposables) g_.push_back(tautilt::g_vector(m));
}

ARIndex ARIndex::of(const AlgebraPtr& a, std::uint64_t seed) {
    return ARIndex(enumerate_indecomposables(a, kDefaultCountCap, kDefaultDimCap, seed));
}

std::string ARIndex::label(const ModuleClass& c) const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t k : c.members) {
        if (!s.empty()) s += "+";
        s += label(k);
    }
    return s;
}

std::size_t ARIndex::hom_tau(std::size_t x, std::size_t y) const {
    const auto t = data_.tau[y];
    return t ? hom_[x][*t] : 0;
}

std::size_t ARIndex::hom_tau_inverse(std::size_t x, std::size_t y) const {
    const auto t = data_.tau_inverse[x];
    return t ? hom_[*t][y] : 0;
}

std::size_t ARIndex::ext(std::size_t x, std::size_t y) const {
    const auto key = std::make_pair(x, y);
    if (auto it = ext_.find(key); it != ext_.end()) return it->second;
    const std::size_t d = ext1_dim(data_.indecomposables[x], data_.indecomposables[y]);
    ext_.emplace(key, d);
    return d;
}

std::size_t ARIndex::find(const Representation& x) const {
    const auto k = data_.find(x);
    if (!k) throw DomainError("tautilt", "module " + x.label() + " is not among the enumerated indecomposables");
    return *k;
}

std::vector<std::size_t> ARIndex::locate(const Representation& m) const {
    std::vector<std::size_t> out;
    if (m.is_zero()) return out;
    for (const auto& part : decompose(m).parts) out.push_back(find(part.module));
    std::sort(out.begin(), out.end());
    return out;
}

ModuleClass ARIndex::summands(const Representation& m) const { return ModuleClass(locate(m)); }

Representation ARIndex::sum(const ModuleClass& c) const {
    if (c.empty()) return Representation::zero(data_.algebra);
    std::vector<Representation> parts;
    for (std::size_t k : c.members) parts.push_back(data_.indecomposables[k]);
    return direct_sum_module(parts);
}

const ModuleClass& ARIndex::gen(const ModuleClass& m) const {
    if (auto it = gen_.find(m); it != gen_.end()) return it->second;
    std::vector<Representation> gens;
    for (std::size_t k : m.members) gens.push_back(data_.indecomposables[k]);
    ModuleClass out;
    if (!gens.empty()) {
        for (std::size_t y = 0; y < size(); ++y) {
            const bool reachable = std::any_of(m.members.begin(), m.members.end(), [&](std::size_t x) { return hom_[x][y] != 0; });
            if (reachable && trace(gens, data_.indecomposables[y]).total_dim() == data_.indecomposables[y].total_dim()) {
                out.members.push_back(y);
            }
        }
    }
    return gen_.emplace(m, std::move(out)).first->second;
}

ModuleClass ARIndex::all() const {
    ModuleClass out;
    out.members.resize(size());
    std::iota(out.members.begin(), out.members.end(), std::size_t{0});
    return out;
}

ModuleClass ARIndex::projectives() const { return ModuleClass(projective_); }

// ---------------------------------------------------------------- classes

ModuleClass right_perp(const ARIndex& ix, const ModuleClass& s) {
    ModuleClass out;
    for (std::size_t y = 0; y < ix.size(); ++y) {
        if (std::all_of(s.members.begin(), s.members.end(), [&](std::size_t x) { return ix.hom(x, y) == 0; })) {
            out.members.push_back(y);
        }
    }
    return out;
}

ModuleClass left_perp(const ARIndex& ix, const ModuleClass& s) {
    ModuleClass out;
    for (std::size_t x = 0; x < ix.size(); ++x) {
        if (std::all_of(s.members.begin(), s.members.end(), [&](std::size_t y) { return ix.hom(x, y) == 0; })) {
            out.members.push_back(x);
        }
    }
    return out;
}

ModuleClass gen_class(const ARIndex& ix, const ModuleClass& m) { return ix.gen(m); }

ModuleClass cogen_class(const ARIndex& ix, const ModuleClass& m) {
    std::vector<Representation> gens;
    for (std::size_t k : m.members) gens.push_back(ix.module(k));
    ModuleClass out;
    if (gens.empty()) return out;
    for (std::size_t y = 0; y < ix.size(); ++y) {
        if (reject(ix.module(y), gens).total_dim() == 0) out.members.push_back(y);
    }
    return out;
}

std::pair<ModuleClass, ModuleClass> gen_cogen_class(const ARIndex& ix, const Representation& m) {
    const ModuleClass s = ix.summands(m);
    return {gen_class(ix, s), cogen_class(ix, s)};
}

namespace {

ClassCheck compare(const ModuleClass& s, const ModuleClass& closure) {
    ClassCheck out;
    out.ok = s == closure;
    if (!out.ok) {
        std::vector<std::size_t> diff;
        std::set_symmetric_difference(s.members.begin(), s.members.end(), closure.members.begin(),
                                      closure.members.end(), std::back_inserter(diff));
        out.witness = diff.front();
    }
    return out;
}

}  // namespace

ClassCheck is_torsion_class(const ARIndex& ix, const ModuleClass& s) {
    return compare(s, left_perp(ix, right_perp(ix, s)));
}

ClassCheck is_torsion_free_class(const ARIndex& ix, const ModuleClass& f) {
    return compare(f, right_perp(ix, left_perp(ix, f)));
}

TorsionPairData torsion_pair(const ARIndex& ix, const ModuleClass& torsion) {
    return {torsion, right_perp(ix, torsion)};
}

std::vector<ModuleClass> enumerate_torsion_classes_oracle(const ARIndex& ix) {
    const std::size_t n = ix.size();
    if (n > kOracleLimit) {
        throw DomainError("tautilt", "torsion class oracle refuses " + std::to_string(n) + " indecomposables (limit " +
                                         std::to_string(kOracleLimit) + ")");
    }
    using Mask = std::uint32_t;
    const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    std::vector<Mask> out_nz(n, 0), in_nz(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (ix.hom(x, y) == 0) continue;
            out_nz[x] |= Mask{1} << y;
            in_nz[y] |= Mask{1} << x;
        }
    }
    std::vector<ModuleClass> found;
    for (Mask s = 0;; ++s) {
        Mask hit = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (s >> x & 1U) hit |= out_nz[x];
        }
        const Mask f = ~hit & full;
        Mask back = 0;
        for (std::size_t y = 0; y < n; ++y) {
            if (f >> y & 1U) back |= in_nz[y];
        }
        if ((~back & full) == s) {
            ModuleClass c;
            for (std::size_t x = 0; x < n; ++x) {
                if (s >> x & 1U) c.members.push_back(x);
            }
            found.push_back(std::move(c));
        }
        if (s == full) break;
    }
    std::sort(found.begin(), found.end(), [](const ModuleClass& a, const ModuleClass& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return found;
}

std::vector<std::pair<std::size_t, std::size_t>> inclusion_covers(const std::vector<ModuleClass>& classes) {
    const std::size_t m = classes.size();
    auto strictly = [&](std::size_t small, std::size_t big) {
        return classes[small].size() < classes[big].size() && classes[small].subset_of(classes[big]);
    };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t big = 0; big < m; ++big) {
        for (std::size_t small = 0; small < m; ++small) {
            if (!strictly(small, big)) continue;
            bool cover = true;
            for (std::size_t mid = 0; mid < m && cover; ++mid) {
                if (strictly(small, mid) && strictly(mid, big)) cover = false;
            }
            if (cover) out.emplace_back(big, small);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsionDecomposition torsion_theory_of(const ARIndex& ix, const ModuleClass& s, const Representation& x) {
    std::vector<Representation> gens;
    for (std::size_t k : s.members) gens.push_back(ix.module(k));
    const SubRep t = gens.empty() ? zero_subrep(x) : trace(gens, x);
    return {sub_representation(x, t), quotient_representation(x, t)};
}

ModuleClass ext_projectives(const ARIndex& ix, const ModuleClass& s) {
    ModuleClass out;
    for (std::size_t x : s.members) {
        if (std::all_of(s.members.begin(), s.members.end(), [&](std::size_t y) { return ix.hom_tau(y, x) == 0; })) {
            out.members.push_back(x);
        }
    }
    return out;
}

ModuleClass ext_injectives(const ARIndex& ix, const ModuleClass& f) {
    ModuleClass out;
    for (std::size_t x : f.members) {
        if (std::all_of(f.members.begin(), f.members.end(), [&](std::size_t y) { return ix.hom_tau_inverse(x, y) == 0; })) {
            out.members.push_back(x);
        }
    }
    return out;
}

ModuleClass ext_projectives_exact(const ARIndex& ix, const ModuleClass& c) {
    ModuleClass out;
    for (std::size_t x : c.members) {
        if (std::all_of(c.members.begin(), c.members.end(), [&](std::size_t y) { return ix.ext(x, y) == 0; })) {
            out.members.push_back(x);
        }
    }
    return out;
}

ModuleClass ext_injectives_exact(const ARIndex& ix, const ModuleClass& c) {
    ModuleClass out;
    for (std::size_t x : c.members) {
        if (std::all_of(c.members.begin(), c.members.end(), [&](std::size_t y) { return ix.ext(y, x) == 0; })) {
            out.members.push_back(x);
        }
    }
    return out;
}

// ---------------------------------------------------------------- tilting

TiltingChecks tilting_checks(const Representation& t, std::uint64_t seed) {
    TiltingChecks out;
    if (t.is_zero()) return out;
    out.partial_tilting = proj_dim_le1(t) && ext1_dim(t, t) == 0;
    out.tilting = out.partial_tilting &&
                  decompose(t, seed).distinct() == static_cast<std::size_t>(t.algebra()->vertex_count());
    return out;
}

Representation bongartz_tilting(const Representation& m, std::uint64_t seed) {
    if (!tilting_checks(m, seed).partial_tilting) throw ContractViolation("tautilt", "bongartz_tilting needs a partial tilting module");
    const Representation a = regular(m.algebra());
    const ExtSpace s = ext1(m, a);
    const std::size_t n = s.dim();
    if (n == 0) return direct_sum_module({a, m});
    const Representation& omega = s.pres.syzygy.module;
    const auto ks = direct_sum(std::vector<Representation>(n, omega));
    const auto ps = direct_sum(std::vector<Representation>(n, s.pres.p0));
    Morphism incl = zero_morphism(ks.sum, ps.sum);
    Morphism phi = zero_morphism(ks.sum, a);
    for (std::size_t j = 0; j < n; ++j) {
        incl = add(incl, compose(ps.inclusions[j], compose(s.pres.syzygy.inclusion, ks.projections[j])));
        phi = add(phi, compose(s.classes[j], ks.projections[j]));
    }
    // pushout of omega^n -> p0^n along phi
    const auto ds = direct_sum({a, ps.sum});
    const Morphism u = add(compose(ds.inclusions[0], phi), scale(-1, compose(ds.inclusions[1], incl)));
    const Representation e = cokernel_module(u, ds.sum).module;
    return direct_sum_module({e, m});
}

bool is_tau_rigid(const ARIndex& ix, const ModuleClass& t) {
    for (std::size_t x : t.members) {
        for (std::size_t y : t.members) {
            if (ix.hom_tau(x, y) != 0) return false;
        }
    }
    return true;
}

std::size_t support_rank(const ARIndex& ix, const ModuleClass& c) {
    return ix.rank() - vanishing_vertices(ix, c).size();
}

std::vector<int> vanishing_vertices(const ARIndex& ix, const ModuleClass& c) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(ix.rank()); ++v) {
        if (std::all_of(c.members.begin(), c.members.end(), [&](std::size_t k) { return ix.module(k).dim(v) == 0; })) {
            out.push_back(v);
        }
    }
    return out;
}

ModuleClass bongartz_class(const ARIndex& ix, const ModuleClass& u) {
    if (!is_tau_rigid(ix, u)) throw DomainError("tautilt", "module " + ix.label(u) + " is not tau-rigid");
    ModuleClass taus;
    for (std::size_t k : u.members) {
        if (const auto t = ix.data().tau[k]) taus.members.push_back(*t);
    }
    taus = ModuleClass(taus.members);
    ModuleClass c = left_perp(ix, taus);
    if (!is_torsion_class(ix, c).ok) throw DomainError("tautilt", "perp(tau " + ix.label(u) + ") is not a torsion class");
    if (support_rank(ix, c) != ix.rank()) throw DomainError("tautilt", "perp(tau " + ix.label(u) + ") is not sincere");
    return c;
}

ModuleClass bongartz_tau(const ARIndex& ix, const ModuleClass& u) {
    const ModuleClass out = ext_projectives(ix, bongartz_class(ix, u));
    if (!u.subset_of(out) || out.size() != ix.rank()) {
        throw DomainError("tautilt", "Bongartz completion of " + ix.label(u) + " came out as " + ix.label(out));
    }
    return out;
}

// ---------------------------------------------------------------- pairs

bool support_tau_tilting_check(const ARIndex& ix, const ModuleClass& t) {
    return is_tau_rigid(ix, t) && t.size() == support_rank(ix, t);
}

SupportTauTiltingPair complete_pair(const ARIndex& ix, const ModuleClass& t) {
    if (!support_tau_tilting_check(ix, t)) throw DomainError("tautilt", ix.label(t) + " is not support tau-tilting");
    return {t, vanishing_vertices(ix, t)};
}

bool is_valid_pair(const ARIndex& ix, const SupportTauTiltingPair& p) {
    if (!is_tau_rigid(ix, p.summands)) return false;
    for (int v : p.killed) {
        for (std::size_t k : p.summands.members) {
            if (ix.module(k).dim(v) != 0) return false;
        }
    }
    return p.summands.size() + p.killed.size() == ix.rank();
}

SupportTauTiltingPair pair_of_class(const ARIndex& ix, const ModuleClass& c) {
    return {ext_projectives(ix, c), vanishing_vertices(ix, c)};
}

std::string pair_label(const ARIndex& ix, const SupportTauTiltingPair& p) {
    std::string s = "(" + ix.label(p.summands) + ", ";
    if (p.killed.empty()) return s + "0)";
    const auto& labels = ix.algebra()->source().vertex_labels;
    for (std::size_t k = 0; k < p.killed.size(); ++k) {
        if (k > 0) s += "+";
        s += "P" + std::to_string(labels[static_cast<std::size_t>(p.killed[k])]);
    }
    return s + ")";
}

Mutation mutate(const ARIndex& ix, const SupportTauTiltingPair& pair, std::size_t k) {
    const std::size_t nt = pair.summands.size();
    if (k >= nt + pair.killed.size()) throw ContractViolation("tautilt", "mutation index out of range");
    ModuleClass u = pair.summands;
    std::vector<int> q = pair.killed;
    std::optional<std::size_t> removed;
    if (k < nt) {
        removed = u.members[k];
        u.members.erase(u.members.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(k - nt));
    }
    const ModuleClass c1 = ix.gen(u);
    ModuleClass taus;
    for (std::size_t x : u.members) {
        if (const auto t = ix.data().tau[x]) taus.members.push_back(*t);
    }
    ModuleClass c2 = left_perp(ix, ModuleClass(taus.members));
    std::erase_if(c2.members, [&](std::size_t y) {
        return std::any_of(q.begin(), q.end(), [&](int v) { return ix.module(y).dim(v) != 0; });
    });
    const SupportTauTiltingPair p1 = pair_of_class(ix, c1);
    const SupportTauTiltingPair p2 = pair_of_class(ix, c2);
    Mutation out;
    out.exchanged = k;
    if (p1 == pair && p2 != pair) {
        out.result = p2;
        out.direction = Direction::right;
    } else if (p2 == pair && p1 != pair) {
        out.result = p1;
        out.direction = Direction::left;
    } else {
        throw DomainError("tautilt", "the completions of the almost complete pair do not match " + pair_label(ix, pair));
    }
    if (removed && (out.direction == Direction::left) == c1.contains(*removed)) {
        throw DomainError("tautilt", "mutation direction disagrees with gen U at " + pair_label(ix, pair));
    }
    return out;
}

// ---------------------------------------------------------------- approximations

namespace {

std::vector<Morphism> radical_maps(const Representation& from, const Representation& to, bool same) {
    if (same) return endomorphism_ring(from).radical;
    return hom_basis(from, to);
}

// Rows spanning a complement of `inner` in Q^n, as morphisms in `basis`.
std::vector<Morphism> complement_maps(const std::vector<Morphism>& basis, const std::vector<Morphism>& inner,
                                      const Representation& from, const Representation& to) {
    const std::size_t n = basis.size();
    std::vector<Morphism> out;
    if (n == 0) return out;
    const HomCoordinates coords(basis);
    Matrix rows(0, n);
    for (const auto& g : inner) rows = vstack(rows, Matrix::from_rows({coords(g)}, n));
    const Matrix c = complement_rows(Subspace::span_of_rows(rows), Subspace::full(n));
    for (std::size_t r = 0; r < c.rows(); ++r) out.push_back(combine(basis, c.row_vector(r), from, to));
    return out;
}

}  // namespace

LeftApproximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& u) {
    std::vector<std::vector<Morphism>> homs;
    for (const auto& uj : u) homs.push_back(hom_basis(x, uj));
    std::vector<Representation> parts;
    std::vector<Morphism> components;
    LeftApproximation out;
    for (std::size_t j = 0; j < u.size(); ++j) {
        // maps x -> u_j that factor through a radical map out of add u
        std::vector<Morphism> inner;
        for (std::size_t k = 0; k < u.size(); ++k) {
            const auto rad = radical_maps(u[k], u[j], k == j);
            for (const auto& h : homs[k]) {
                for (const auto& g : rad) inner.push_back(compose(g, h));
            }
        }
        for (auto& c : complement_maps(homs[j], inner, x, u[j])) {
            parts.push_back(u[j]);
            components.push_back(std::move(c));
            out.parts.push_back(j);
        }
    }
    if (parts.empty()) {
        out.target = Representation::zero(x.algebra());
        out.f = zero_morphism(x, out.target);
        return out;
    }
    const auto ds = direct_sum(parts);
    out.target = ds.sum;
    out.f = zero_morphism(x, ds.sum);
    for (std::size_t s = 0; s < components.size(); ++s) out.f = add(out.f, compose(ds.inclusions[s], components[s]));
    return out;
}

RightApproximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& u) {
    std::vector<std::vector<Morphism>> homs;
    for (const auto& uj : u) homs.push_back(hom_basis(uj, x));
    std::vector<Representation> parts;
    std::vector<Morphism> components;
    RightApproximation out;
    for (std::size_t j = 0; j < u.size(); ++j) {
        std::vector<Morphism> inner;
        for (std::size_t k = 0; k < u.size(); ++k) {
            const auto rad = radical_maps(u[j], u[k], k == j);
            for (const auto& h : homs[k]) {
                for (const auto& g : rad) inner.push_back(compose(h, g));
            }
        }
        for (auto& c : complement_maps(homs[j], inner, u[j], x)) {
            parts.push_back(u[j]);
            components.push_back(std::move(c));
            out.parts.push_back(j);
        }
    }
    if (parts.empty()) {
        out.source = Representation::zero(x.algebra());
        out.g = zero_morphism(out.source, x);
        return out;
    }
    const auto ds = direct_sum(parts);
    out.source = ds.sum;
    out.g = zero_morphism(ds.sum, x);
    for (std::size_t s = 0; s < components.size(); ++s) out.g = add(out.g, compose(components[s], ds.projections[s]));
    return out;
}

namespace {

bool spans(const std::vector<Morphism>& target_basis, const std::vector<Morphism>& gens) {
    if (target_basis.empty()) return true;
    const HomCoordinates coords(target_basis);
    Matrix rows(0, target_basis.size());
    for (const auto& g : gens) rows = vstack(rows, Matrix::from_rows({coords(g)}, target_basis.size()));
    return rank(rows) == target_basis.size();
}

}  // namespace

bool is_left_approximation(const LeftApproximation& a, const Representation& x, const std::vector<Representation>& u) {
    for (const auto& uj : u) {
        std::vector<Morphism> through;
        for (const auto& s : hom_basis(a.target, uj)) through.push_back(compose(s, a.f));
        if (!spans(hom_basis(x, uj), through)) return false;
    }
    return true;
}

bool is_right_approximation(const RightApproximation& a, const Representation& x, const std::vector<Representation>& u) {
    for (const auto& uj : u) {
        std::vector<Morphism> through;
        for (const auto& s : hom_basis(uj, a.source)) through.push_back(compose(a.g, s));
        if (!spans(hom_basis(uj, x), through)) return false;
    }
    return true;
}

ExchangeSequence exchange_sequence(const Representation& x, const std::vector<Representation>& u) {
    ExchangeSequence out;
    out.approximation = minimal_left_approximation(x, u);
    out.y = cokernel_module(out.approximation.f, out.approximation.target).module;
    if (out.y.is_zero()) {
        std::vector<int> missing;
        for (int v = 0; v < x.algebra()->vertex_count(); ++v) {
            if (x.dim(v) != 0 && std::all_of(u.begin(), u.end(), [&](const Representation& m) { return m.dim(v) == 0; })) {
                missing.push_back(v);
            }
        }
        if (missing.size() != 1) throw DomainError("tautilt", "exchange sequence at " + x.label() + " loses " + std::to_string(missing.size()) + " vertices");
        out.killed = missing.front();
    }
    return out;
}

SupportTauTiltingPair exchange_mutation(const ARIndex& ix, const SupportTauTiltingPair& pair, std::size_t k) {
    if (k >= pair.summands.size()) throw ContractViolation("tautilt", "exchange sequences start at a summand");
    ModuleClass u = pair.summands;
    const std::size_t x = u.members[k];
    u.members.erase(u.members.begin() + static_cast<std::ptrdiff_t>(k));
    if (ix.gen(u).contains(x)) throw DomainError("tautilt", ix.label(x) + " lies in gen U, so the mutation is not left");
    std::vector<Representation> us;
    for (std::size_t j : u.members) us.push_back(ix.module(j));
    const ExchangeSequence es = exchange_sequence(ix.module(x), us);
    SupportTauTiltingPair out{u, pair.killed};
    if (es.killed) {
        out.killed.push_back(*es.killed);
        std::sort(out.killed.begin(), out.killed.end());
    } else {
        const auto parts = ix.locate(es.y);
        if (parts.size() != 1) throw DomainError("tautilt", "cokernel " + es.y.label() + " of the exchange sequence is decomposable");
        out.summands = ModuleClass([&] {
            auto m = u.members;
            m.push_back(parts.front());
            return m;
        }());
    }
    return out;
}

// ---------------------------------------------------------------- Hasse quiver

std::vector<std::pair<std::size_t, std::size_t>> HasseQuiver::edge_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : edges) out.emplace_back(e.from, e.to);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> HasseQuiver::index_of(const SupportTauTiltingPair& p) const {
    const auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

HasseQuiver hasse(const ARIndex& ix, std::size_t vertex_cap) {
    HasseQuiver h;
    std::map<SupportTauTiltingPair, std::size_t> seen;
    auto visit = [&](const SupportTauTiltingPair& p) {
        if (auto it = seen.find(p); it != seen.end()) return it->second;
        if (h.vertices.size() >= vertex_cap) {
            throw DomainError("tautilt", "possibly tau-tilting infinite: more than " + std::to_string(vertex_cap) +
                                             " support tau-tilting pairs");
        }
        seen.emplace(p, h.vertices.size());
        h.vertices.push_back(p);
        h.torsion.push_back(ix.gen(p.summands));
        return h.vertices.size() - 1;
    };
    visit({ix.projectives(), {}});
    for (std::size_t cur = 0; cur < h.vertices.size(); ++cur) {
        const SupportTauTiltingPair p = h.vertices[cur];
        for (std::size_t k = 0; k < ix.rank(); ++k) {
            const Mutation m = mutate(ix, p, k);
            const std::size_t next = visit(m.result);
            if (m.direction != Direction::left) continue;
            HasseEdge e{cur, next, 0, k >= p.summands.size()};
            e.exchanged = e.killed ? static_cast<std::size_t>(p.killed[k - p.summands.size()]) : p.summands.members[k];
            h.edges.push_back(e);
        }
    }
    return h;
}

std::vector<std::pair<std::size_t, std::size_t>> maximal_inclusion_edges(const HasseQuiver& h) {
    return inclusion_covers(h.torsion);
}

HasseReport check_hasse(const ARIndex& ix, const HasseQuiver& h) {
    HasseReport r;
    const std::size_t n = h.vertices.size();
    std::vector<std::size_t> degree(n, 0), in(n, 0), out(n, 0);
    for (const auto& e : h.edges) {
        ++degree[e.from];
        ++degree[e.to];
        ++out[e.from];
        ++in[e.to];
    }
    r.regular = std::all_of(degree.begin(), degree.end(), [&](std::size_t d) { return d == ix.rank(); });
    r.edges_match = h.edge_pairs() == maximal_inclusion_edges(h);
    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v] == 0) sources.push_back(v);
        if (out[v] == 0) sinks.push_back(v);
    }
    if (sources.size() == 1) r.source = sources.front();
    if (sinks.size() == 1) r.sink = sinks.front();
    return r;
}

// ---------------------------------------------------------------- dagger

SupportTauTiltingPair dagger(const ARIndex& ix, const ARIndex& op, const SupportTauTiltingPair& pair) {
    if (op.algebra() != opposite_of(ix.algebra())) throw ContractViolation("tautilt", "dagger needs the index of the opposite algebra");
    SupportTauTiltingPair out;
    for (std::size_t k : pair.summands.members) {
        if (ix.data().projective[k]) {
            for (int v = 0; v < static_cast<int>(ix.rank()); ++v) {
                if (ix.projective_at(v) == k) out.killed.push_back(v);
            }
        } else {
            out.summands.members.push_back(op.find(transpose(ix.module(k))));
        }
    }
    for (int v : pair.killed) out.summands.members.push_back(op.projective_at(v));
    out.summands = ModuleClass(out.summands.members);
    std::sort(out.killed.begin(), out.killed.end());
    return out;
}

// ---------------------------------------------------------------- bricks

Representation fbrick_of(const Representation& x) {
    SubRep s = zero_subrep(x);
    for (const auto& r : endomorphism_ring(x).radical) s = subrep_sum(s, image(r, x));
    return quotient_representation(x, s).module;
}

std::vector<BrickRecord> bricks(const ARIndex& ix) {
    std::vector<BrickRecord> out;
    for (std::size_t k = 0; k < ix.size(); ++k) {
        const Representation& x = ix.module(k);
        out.push_back({x, ix.hom(k, k) == 1, fbrick_of(x)});
    }
    return out;
}

// ---------------------------------------------------------------- finiteness probe

namespace {

// Indecomposables met during the probe, matched up to isomorphism.
class Registry {
public:
    std::size_t add(const Representation& m) {
        for (std::size_t k = 0; k < modules_.size(); ++k) {
            if (modules_[k].dims() == m.dims() && iso_indecomposable(modules_[k], m)) return k;
        }
        modules_.push_back(m);
        return modules_.size() - 1;
    }
    [[nodiscard]] const Representation& at(std::size_t k) const { return modules_[k]; }
    [[nodiscard]] std::size_t size() const { return modules_.size(); }

private:
    std::vector<Representation> modules_;
};

struct ProbeState {
    std::vector<std::size_t> summands;  // registry ids, sorted
    std::vector<int> killed;
    friend auto operator<=>(const ProbeState&, const ProbeState&) = default;
};

}  // namespace

ProbeResult finiteness_probe(const AlgebraPtr& a, const ProbeCaps& caps, std::uint64_t seed) {
    ProbeResult out;
    Registry reg;
    std::set<ProbeState> seen;
    std::deque<ProbeState> queue;
    ProbeState start;
    for (int v = 0; v < a->vertex_count(); ++v) start.summands.push_back(reg.add(projective(a, v)));
    std::sort(start.summands.begin(), start.summands.end());
    seen.insert(start);
    queue.push_back(start);
    auto stop = [&](const std::string& why) {
        out.verdict = Finiteness::unknown;
        out.pairs = seen.size();
        out.modules = reg.size();
        out.evidence = why;
        return out;
    };
    while (!queue.empty()) {
        const ProbeState s = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < s.summands.size(); ++k) {
            std::vector<Representation> u;
            for (std::size_t j = 0; j < s.summands.size(); ++j) {
                if (j != k) u.push_back(reg.at(s.summands[j]));
            }
            const Representation& x = reg.at(s.summands[k]);
            if (!u.empty() && trace(u, x).total_dim() == x.total_dim()) continue;  // right mutation
            const ExchangeSequence es = exchange_sequence(x, u);
            ProbeState next;
            next.killed = s.killed;
            for (std::size_t j = 0; j < s.summands.size(); ++j) {
                if (j != k) next.summands.push_back(s.summands[j]);
            }
            if (es.killed) {
                next.killed.push_back(*es.killed);
                std::sort(next.killed.begin(), next.killed.end());
            } else {
                if (es.y.total_dim() > caps.dim_cap) {
                    return stop("exchange at " + x.label() + " produced " + es.y.label() + ", past dimension cap " +
                                std::to_string(caps.dim_cap));
                }
                if (!is_indecomposable(es.y)) throw DomainError("tautilt", "exchange cokernel " + es.y.label() + " is decomposable");
                next.summands.push_back(reg.add(es.y));
                if (reg.size() > caps.count_cap) return stop("more than " + std::to_string(caps.count_cap) + " indecomposables met");
                std::sort(next.summands.begin(), next.summands.end());
            }
            if (seen.insert(next).second) {
                if (seen.size() > caps.vertex_cap) {
                    return stop("more than " + std::to_string(caps.vertex_cap) + " support tau-tilting pairs");
                }
                queue.push_back(std::move(next));
            }
        }
    }
    out.verdict = Finiteness::finite;
    out.pairs = seen.size();
    out.modules = reg.size();
    out.evidence = "left mutation closure from A closed with " + std::to_string(seen.size()) + " pairs";
    try {
        const ARIndex ix = ARIndex::of(a, seed);
        if (ix.size() <= kOracleLimit) out.oracle = enumerate_torsion_classes_oracle(ix).size();
    } catch (const DomainError&) {
    }
    if (out.oracle && *out.oracle != out.pairs) {
        out.evidence += "; oracle counts " + std::to_string(*out.oracle) + " torsion classes";
    }
    return out;
}

// ---------------------------------------------------------------- g-vectors

std::vector<ModuleClass> tau_rigid_classes(const ARIndex& ix) {
    const std::size_t n = ix.size();
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    std::vector<bool> rigid(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        rigid[x] = ix.hom_tau(x, x) == 0;
        for (std::size_t y = 0; y < n; ++y) compatible[x][y] = ix.hom_tau(x, y) == 0 && ix.hom_tau(y, x) == 0;
    }
    std::vector<ModuleClass> out;
    ModuleClass cur;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        out.push_back(cur);
        for (std::size_t x = from; x < n; ++x) {
            if (!rigid[x]) continue;
            if (!std::all_of(cur.members.begin(), cur.members.end(), [&](std::size_t y) { return compatible[x][y]; })) continue;
            cur.members.push_back(x);
            self(self, x + 1);
            cur.members.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

bool g_vectors_independent(const ARIndex& ix, const ModuleClass& t) {
    std::vector<std::vector<long long>> rows;
    for (std::size_t k : t.members) rows.push_back(ix.g_vector(k));
    if (rows.empty()) return true;
    return rank(Matrix::from_ints(rows)) == rows.size();
}

}  // namespace tautilt
