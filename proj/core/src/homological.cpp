#include "tautilt/homological.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "tautilt/error.hpp"

namespace tautilt {

AlgebraPtr opposite_of(const AlgebraPtr& a) {
    using Weak = std::weak_ptr<const Algebra>;
    static std::mutex mu;
    static std::map<const Algebra*, std::pair<Weak, Weak>> cache;  // algebra -> (itself, opposite)
    const std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(a.get()); it != cache.end()) {
        if (it->second.first.lock() == a) {
            if (AlgebraPtr op = it->second.second.lock()) return op;
        }
    }
    AlgebraPtr op = opposite(*a);
    cache[a.get()] = {a, op};
    cache[op.get()] = {op, a};
    return op;
}

namespace {

std::size_t local_position(const Algebra& a, int from, int to, std::size_t basis_index) {
    const auto& paths = a.paths_between(from, to);
    const auto it = std::find(paths.begin(), paths.end(), basis_index);
    if (it == paths.end()) throw ContractViolation("homological", "basis element outside e_to A e_from");
    return static_cast<std::size_t>(it - paths.begin());
}

// Column offsets of each summand of projective_sum(tops) at vertex v.
std::vector<std::size_t> offsets_at(const Algebra& a, const std::vector<int>& tops, int v) {
    std::vector<std::size_t> out;
    std::size_t off = 0;
    for (int t : tops) {
        out.push_back(off);
        off += a.paths_between(t, v).size();
    }
    return out;
}

Vector generator_of(const Algebra& a, const std::vector<int>& tops, const Representation& p, std::size_t s) {
    const int v = tops[s];
    Vector g(p.dim(v));
    g[offsets_at(a, tops, v)[s] + local_position(a, v, v, a.trivial_path(v))] = 1;
    return g;
}

Matrix right_inverse(const Matrix& a) {
    const auto sol = solve_linear(a, Matrix::identity(a.rows()));
    if (!sol) throw ContractViolation("homological", "map is not surjective");
    return sol->particular;
}

// h with i o h = f, for i injective and f landing in the image of i.
Morphism restrict_through(const Morphism& i, const Morphism& f) {
    Morphism h;
    for (std::size_t v = 0; v < i.maps.size(); ++v) {
        const Matrix& iv = i.maps[v];
        if (iv.cols() == 0) {
            h.maps.emplace_back(0, f.maps[v].cols());
            continue;
        }
        const auto sol = solve_linear(iv, f.maps[v]);
        if (!sol) throw ContractViolation("homological", "map does not factor through the subobject");
        h.maps.push_back(sol->particular);
    }
    return h;
}

// g o q^{-1} for a surjection q whose kernel g kills.
Morphism factor_through_quotient(const Morphism& q, const Morphism& g) {
    Morphism h;
    for (std::size_t v = 0; v < q.maps.size(); ++v) {
        const Matrix& qv = q.maps[v];
        if (qv.rows() == 0) {
            h.maps.emplace_back(g.maps[v].rows(), 0);
            continue;
        }
        h.maps.push_back(g.maps[v] * right_inverse(qv));
    }
    return h;
}

std::vector<Vector> top_lifts(const Representation& m, std::vector<int>& tops) {
    const SubRep rad = radical(m);
    std::vector<Vector> lifts;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        const std::size_t d = m.dim(v);
        if (d == 0) continue;
        const Matrix c = complement_rows(rad.spaces[static_cast<std::size_t>(v)], Subspace::full(d));
        for (std::size_t k = 0; k < c.rows(); ++k) {
            tops.push_back(v);
            lifts.push_back(c.row_vector(k));
        }
    }
    return lifts;
}

Subspace span_of_morphisms(const std::vector<Morphism>& basis, const std::vector<Morphism>& gens) {
    Matrix rows(gens.size(), basis.size());
    const HomCoordinates coords(basis);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Vector c = coords(gens[k]);
        for (std::size_t j = 0; j < c.size(); ++j) rows(k, j) = c[j];
    }
    if (gens.empty()) return Subspace(basis.size());
    return Subspace::span_of_rows(rows);
}

}  // namespace

Representation projective_sum(const AlgebraPtr& a, const std::vector<int>& tops) {
    if (tops.empty()) return Representation::zero(a);
    std::vector<Representation> parts;
    for (int t : tops) parts.push_back(projective(a, t));
    return parts.size() == 1 ? parts.front() : direct_sum_module(parts);
}

Morphism from_projective_sum(const std::vector<int>& tops, const Representation& p, const Representation& n,
                             const std::vector<Vector>& images) {
    const Algebra& a = *p.algebra();
    Morphism f = zero_morphism(p, n);
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (n.dim(v) == 0) continue;
        const auto off = offsets_at(a, tops, v);
        for (std::size_t s = 0; s < tops.size(); ++s) {
            const auto& paths = a.paths_between(tops[s], v);
            for (std::size_t c = 0; c < paths.size(); ++c) {
                const Vector col = n.path_action(a.basis()[paths[c]]).apply(images[s]);
                for (std::size_t r = 0; r < col.size(); ++r) f.maps[static_cast<std::size_t>(v)](r, off[s] + c) = col[r];
            }
        }
    }
    return f;
}

ProjectiveCover projective_cover(const Representation& m) {
    ProjectiveCover out;
    const auto lifts = top_lifts(m, out.tops);
    out.p = projective_sum(m.algebra(), out.tops);
    out.eps = from_projective_sum(out.tops, out.p, m, lifts);
    return out;
}

InjectiveEnvelope injective_envelope(const Representation& m) {
    const auto cover = projective_cover(dual(m));
    return {dual(cover.p), dual(cover.eps)};
}

Presentation minimal_presentation(const Representation& m) {
    Presentation pr;
    pr.m = m;
    auto c0 = projective_cover(m);
    pr.p0 = std::move(c0.p);
    pr.eps = std::move(c0.eps);
    pr.top0 = std::move(c0.tops);
    pr.syzygy = kernel_module(pr.eps, pr.p0);
    auto c1 = projective_cover(pr.syzygy.module);
    pr.p1 = std::move(c1.p);
    pr.top1 = std::move(c1.tops);
    pr.d = compose(pr.syzygy.inclusion, c1.eps);
    return pr;
}

Morphism lift_from_projective(const std::vector<int>& tops, const Representation& p, const Representation& e,
                              const Morphism& s, const Morphism& f) {
    const Algebra& a = *p.algebra();
    std::vector<Vector> images;
    for (std::size_t k = 0; k < tops.size(); ++k) {
        const int v = tops[k];
        const Vector target = f.at(v).apply(generator_of(a, tops, p, k));
        const auto sol = solve_linear(s.at(v), Matrix::from_rows({target}, target.size()).transpose());
        if (!sol) throw ContractViolation("homological", "lift through a non-surjective map");
        images.push_back(sol->particular.column(0));
    }
    return from_projective_sum(tops, p, e, images);
}

bool is_projective(const Representation& m) { return projective_cover(m).p.dims() == m.dims(); }

bool is_injective(const Representation& m) { return is_projective(dual(m)); }

Representation dual(const Representation& m) {
    std::vector<Matrix> maps;
    for (const auto& x : m.maps()) maps.push_back(x.transpose());
    return {opposite_of(m.algebra()), m.dims(), std::move(maps)};
}

Morphism dual(const Morphism& f) {
    Morphism g;
    for (const auto& x : f.maps) g.maps.push_back(x.transpose());
    return g;
}

StarModule star(const Representation& m) {
    const AlgebraPtr& a = m.algebra();
    const int n = a->vertex_count();
    StarModule out;
    std::vector<Representation> proj;
    std::vector<std::size_t> dims;
    for (int i = 0; i < n; ++i) {
        proj.push_back(projective(a, i));
        out.basis.push_back(hom_basis(m, proj.back()));
        dims.push_back(out.basis.back().size());
    }
    // arrow i -> j acts Hom(m, P(j)) -> Hom(m, P(i)) by right multiplication
    std::vector<HomCoordinates> coords;
    for (const auto& b : out.basis) coords.emplace_back(b);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < a->arrow_count(); ++k) {
        const Arrow& arr = a->arrows()[k];
        const auto i = static_cast<std::size_t>(arr.source);
        const auto j = static_cast<std::size_t>(arr.target);
        const auto nf = a->normal_form({static_cast<int>(k)});
        Vector elem(proj[i].dim(arr.target));
        for (const auto& [b, c] : nf) elem[local_position(*a, arr.source, arr.target, b)] += c;
        const Morphism rho = from_projective_sum({arr.target}, proj[j], proj[i], {elem});
        Matrix x(dims[i], dims[j]);
        for (std::size_t col = 0; col < dims[j]; ++col) {
            const Vector c = coords[i](compose(rho, out.basis[j][col]));
            for (std::size_t r = 0; r < c.size(); ++r) x(r, col) = c[r];
        }
        maps.push_back(std::move(x));
    }
    out.module = Representation(opposite_of(a), std::move(dims), std::move(maps));
    return out;
}

Morphism star(const Morphism& f, const StarModule& from_star, const StarModule& to_star) {
    Morphism g;
    for (std::size_t i = 0; i < to_star.basis.size(); ++i) {
        Matrix x(from_star.basis[i].size(), to_star.basis[i].size());
        const HomCoordinates coords(from_star.basis[i]);
        for (std::size_t col = 0; col < to_star.basis[i].size(); ++col) {
            const Vector c = coords(compose(to_star.basis[i][col], f));
            for (std::size_t r = 0; r < c.size(); ++r) x(r, col) = c[r];
        }
        g.maps.push_back(std::move(x));
    }
    return g;
}

Representation transpose(const Representation& m) {
    const auto pr = minimal_presentation(m);
    const auto s0 = star(pr.p0);
    const auto s1 = star(pr.p1);
    return cokernel_module(star(pr.d, s1, s0), s1.module).module;
}

Representation nakayama(const Representation& p) { return dual(star(p).module); }

Representation tau(const Representation& m) {
    const auto pr = minimal_presentation(m);
    const auto s0 = star(pr.p0);
    const auto s1 = star(pr.p1);
    // nu(d) = D(d*): nu p1 -> nu p0
    const Morphism nu_d = dual(star(pr.d, s1, s0));
    return kernel_module(nu_d, dual(s1.module)).module;
}

Representation tau_inverse(const Representation& m) { return transpose(dual(m)); }

bool proj_dim_le1(const Representation& m) {
    const auto pr = minimal_presentation(m);
    return kernel(pr.d, pr.p1).total_dim() == 0;
}

Vector ExtSpace::class_of(const Morphism& rep) const {
    const Vector c = syzygy_coords(rep);
    if (classes.empty()) return {};
    return class_projection.apply(c);
}

Morphism ExtSpace::representative(const Vector& coords) const {
    if (coords.size() != classes.size()) throw ContractViolation("homological", "Ext coordinates of the wrong length");
    if (classes.empty()) return zero_morphism(pres.syzygy.module, n);
    return combine(classes, coords, pres.syzygy.module, n);
}

ExtSpace ext1(const Representation& m, const Representation& n) {
    if (!same_algebra(*m.algebra(), *n.algebra())) throw ContractViolation("homological", "Ext across algebras");
    ExtSpace s;
    s.m = m;
    s.n = n;
    s.pres = minimal_presentation(m);
    const Representation& k = s.pres.syzygy.module;
    s.hom_syzygy = hom_basis(k, n);
    std::vector<Morphism> restricted;
    for (const auto& h : hom_basis(s.pres.p0, n)) restricted.push_back(compose(h, s.pres.syzygy.inclusion));
    s.restrictions = span_of_morphisms(s.hom_syzygy, restricted);
    s.complement = complement_rows(s.restrictions, Subspace::full(s.hom_syzygy.size()));
    s.syzygy_coords = HomCoordinates(s.hom_syzygy);
    if (s.complement.rows() > 0) {
        const Matrix b = vstack(s.restrictions.basis(), s.complement);
        s.class_projection = inverse(b.transpose())->block(s.restrictions.dim(), 0, s.complement.rows(), b.rows());
    }
    for (std::size_t r = 0; r < s.complement.rows(); ++r) {
        s.classes.push_back(combine(s.hom_syzygy, s.complement.row_vector(r), k, n));
    }
    return s;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
    const auto pr = minimal_presentation(m);
    const std::size_t h = hom_dim(pr.syzygy.module, n);
    if (h == 0) return 0;
    std::vector<Morphism> restricted;
    for (const auto& f : hom_basis(pr.p0, n)) restricted.push_back(compose(f, pr.syzygy.inclusion));
    return h - span_of_morphisms(hom_basis(pr.syzygy.module, n), restricted).dim();
}

std::size_t stable_hom_dim_injective(const Representation& x, const Representation& y) {
    const auto basis = hom_basis(x, y);
    if (basis.empty()) return 0;
    const auto env = injective_envelope(x);
    std::vector<Morphism> through;
    for (const auto& h : hom_basis(env.i, y)) through.push_back(compose(h, env.iota));
    return basis.size() - span_of_morphisms(basis, through).dim();
}

std::size_t stable_hom_dim_projective(const Representation& x, const Representation& y) {
    const auto basis = hom_basis(x, y);
    if (basis.empty()) return 0;
    const auto cover = projective_cover(y);
    std::vector<Morphism> through;
    for (const auto& h : hom_basis(x, cover.p)) through.push_back(compose(cover.eps, h));
    return basis.size() - span_of_morphisms(basis, through).dim();
}

Extension realize_extension(const ExtSpace& s, const Vector& coords) {
    const Morphism phi = s.representative(coords);
    const auto ds = direct_sum({s.n, s.pres.p0});
    // pushout of syzygy -> p0 along phi: (n + p0) / {(phi k, -k)}
    const Morphism u = add(compose(ds.inclusions[0], phi), scale(-1, compose(ds.inclusions[1], s.pres.syzygy.inclusion)));
    auto q = cokernel_module(u, ds.sum);
    Extension out;
    out.inclusion = compose(q.projection, ds.inclusions[0]);
    out.projection = factor_through_quotient(q.projection, compose(s.pres.eps, ds.projections[1]));
    out.e = std::move(q.module);
    return out;
}

Vector extension_class(const ExtSpace& s, const Extension& seq) {
    const Morphism h0 = lift_from_projective(s.pres.top0, s.pres.p0, seq.e, seq.projection, s.pres.eps);
    return s.class_of(restrict_through(seq.inclusion, compose(h0, s.pres.syzygy.inclusion)));
}

ARSequence ar_sequence(const Representation& m, std::uint64_t seed) { return ar_sequence(m, tau(m), seed); }

ARSequence ar_sequence(const Representation& m, const Representation& tau_m, std::uint64_t seed) {
    ARSequence out;
    out.left = tau_m;
    if (out.left.is_zero()) throw ContractViolation("homological", "AR sequence requested at a projective module");
    const ExtSpace s = ext1(m, out.left);
    const EndRing end = endomorphism_ring(m);
    // right End(m)-action on Ext^1(m, tau m): pull back along e
    Matrix conditions(0, s.dim());
    for (const auto& r : end.radical) {
        const Morphism h0 =
            lift_from_projective(s.pres.top0, s.pres.p0, s.pres.p0, s.pres.eps, compose(r, s.pres.eps));
        const Morphism hk = restrict_through(s.pres.syzygy.inclusion, compose(h0, s.pres.syzygy.inclusion));
        Matrix act(s.dim(), s.dim());
        for (std::size_t j = 0; j < s.dim(); ++j) {
            const Vector c = s.class_of(compose(s.classes[j], hk));
            for (std::size_t i = 0; i < c.size(); ++i) act(i, j) = c[i];
        }
        conditions = vstack(conditions, act);
    }
    const Matrix soc = conditions.rows() == 0 ? Matrix::identity(s.dim()) : null_space_rows(conditions);
    if (soc.rows() != 1) {
        throw DomainError("homological", "cannot certify almost split sequence at " + m.label() + ": socle of Ext^1(M, tau M) has dimension " +
                                             std::to_string(soc.rows()));
    }
    out.sequence = realize_extension(s, soc.row_vector(0));
    out.middle = decompose(out.sequence.e, seed);
    return out;
}

std::optional<std::size_t> ARQuiverData::find(const Representation& x) const {
    for (std::size_t k = 0; k < indecomposables.size(); ++k) {
        if (indecomposables[k].dims() == x.dims() && iso_indecomposable(indecomposables[k], x)) return k;
    }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> ARQuiverData::arrows() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < middle.size(); ++x) {
        for (std::size_t y : middle[x]) out.emplace_back(y, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ARQuiverData::label(std::size_t k) const {
    std::string s = indecomposables[k].label();
    for (std::size_t j = 0; j < k; ++j) {
        if (indecomposables[j].dims() == indecomposables[k].dims()) s += "'";
    }
    return s;
}

ARQuiverData enumerate_indecomposables(const AlgebraPtr& a, std::size_t count_cap, std::size_t dim_cap,
                                       std::uint64_t seed) {
    ARQuiverData out;
    out.algebra = a;
    std::deque<std::size_t> queue;
    const auto exceeded = [&](const std::string& why) {
        return DomainError("homological", "not representation-finite within caps (" + why + ")");
    };
    const auto insert = [&](const Representation& x) -> std::size_t {
        if (x.total_dim() > dim_cap) {
            throw exceeded("indecomposable " + x.label() + " exceeds dimension cap " + std::to_string(dim_cap));
        }
        if (auto k = out.find(x)) return *k;
        if (out.size() >= count_cap) throw exceeded("more than " + std::to_string(count_cap) + " indecomposables");
        out.indecomposables.push_back(x);
        out.projective.push_back(false);
        out.injective.push_back(false);
        out.tau.emplace_back();
        out.tau_inverse.emplace_back();
        out.middle.emplace_back();
        out.sequences.emplace_back();
        queue.push_back(out.size() - 1);
        return out.size() - 1;
    };
    const auto insert_summands = [&](const DecompositionResult& d) {
        std::vector<std::size_t> ids;
        for (const auto& p : d.parts) ids.push_back(insert(p.module));
        std::sort(ids.begin(), ids.end());
        return ids;
    };

    // tau-orbits and radical/socle neighbours first; AR middles (the expensive
    // part) only once those are exhausted
    std::deque<std::size_t> pending_sequences;
    for (int i = 0; i < a->vertex_count(); ++i) insert(projective(a, i));
    while (!queue.empty() || !pending_sequences.empty()) {
        if (queue.empty()) {
            const std::size_t k = pending_sequences.front();
            pending_sequences.pop_front();
            auto seq = ar_sequence(out.indecomposables[k], out.indecomposables[*out.tau[k]], seed);
            out.middle[k] = insert_summands(seq.middle);
            out.sequences[k] = std::move(seq);
            continue;
        }
        const std::size_t k = queue.front();
        queue.pop_front();
        const Representation x = out.indecomposables[k];
        out.projective[k] = is_projective(x);
        out.injective[k] = is_injective(x);
        if (!out.injective[k]) out.tau_inverse[k] = insert(tau_inverse(x));
        if (out.projective[k]) {
            const auto rad = sub_representation(x, radical(x)).module;
            if (!rad.is_zero()) out.middle[k] = insert_summands(decompose(rad, seed));
        } else {
            out.tau[k] = insert(tau(x));
            pending_sequences.push_back(k);
        }
        if (out.injective[k]) {
            const auto q = quotient_representation(x, socle(x)).module;
            if (!q.is_zero()) insert_summands(decompose(q, seed));
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out.tau_inverse[k] && out.tau[*out.tau_inverse[k]] != k) {
            throw DomainError("homological", "tau and tau inverse disagree at " + out.label(k));
        }
    }
    return out;
}

std::vector<long long> g_vector(const Representation& m) {
    const auto pr = minimal_presentation(m);
    std::vector<long long> g(static_cast<std::size_t>(m.algebra()->vertex_count()), 0);
    for (int t : pr.top0) ++g[static_cast<std::size_t>(t)];
    for (int t : pr.top1) --g[static_cast<std::size_t>(t)];
    return g;
}

long long bracket(const std::vector<long long>& g, const std::vector<std::size_t>& dims) {
    if (g.size() != dims.size()) throw ContractViolation("homological", "bracket of vectors of different lengths");
    long long s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * static_cast<long long>(dims[i]);
    return s;
}

}  // namespace tautilt
