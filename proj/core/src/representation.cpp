#include "tautilt/representation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tautilt/error.hpp"

namespace tautilt {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!algebra_) throw ContractViolation("rep", "representation without algebra");
    if (dims_.size() != static_cast<std::size_t>(algebra_->vertex_count())) {
        throw ContractViolation("rep", "dimension vector length does not match vertex count");
    }
    if (maps_.size() != algebra_->arrow_count()) throw ContractViolation("rep", "one matrix per arrow required");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Arrow& a = algebra_->arrows()[k];
        if (maps_[k].rows() != dim(a.target) || maps_[k].cols() != dim(a.source)) {
            throw ContractViolation("rep", "matrix for arrow '" + a.name + "' has wrong shape");
        }
    }
}

Representation Representation::zero(AlgebraPtr algebra) {
    const auto n = static_cast<std::size_t>(algebra->vertex_count());
    std::vector<Matrix> maps(algebra->arrow_count());
    return {std::move(algebra), std::vector<std::size_t>(n, 0), std::move(maps)};
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::path_action(const Path& p) const {
    Matrix m = Matrix::identity(dim(p.source));
    for (int a : p.arrows) m = map(a) * m;
    return m;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return &a == &b || a.fingerprint() == b.fingerprint(); }

bool operator==(const Representation& a, const Representation& b) {
    if (!a.algebra_ || !b.algebra_) return a.algebra_ == b.algebra_;
    return same_algebra(*a.algebra_, *b.algebra_) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

ValidationReport validate(const Representation& m) {
    const Algebra& alg = *m.algebra();
    const auto& src = alg.source();
    for (std::size_t r = 0; r < src.relations.size(); ++r) {
        const Relation& rel = src.relations[r];
        Matrix total(m.dim(rel.target), m.dim(rel.source));
        for (const auto& t : rel.terms) total += t.coeff * m.path_action({rel.source, rel.target, t.arrows});
        if (!total.is_zero()) {
            const auto label = [&](int v) { return std::to_string(src.vertex_labels[static_cast<std::size_t>(v)]); };
            return {false, "relation " + std::to_string(r + 1) + " (" + src.path_text(rel.terms.front().arrows) +
                               ") violated between vertices " + label(rel.source) + " and " + label(rel.target)};
        }
    }
    return {};
}

bool Morphism::is_zero() const {
    return std::all_of(maps.begin(), maps.end(), [](const Matrix& m) { return m.is_zero(); });
}

Morphism zero_morphism(const Representation& from, const Representation& to) {
    Morphism f;
    for (int v = 0; v < from.algebra()->vertex_count(); ++v) f.maps.emplace_back(to.dim(v), from.dim(v));
    return f;
}

Morphism identity_morphism(const Representation& m) {
    Morphism f;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) f.maps.push_back(Matrix::identity(m.dim(v)));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.maps.size() != f.maps.size()) throw ContractViolation("rep", "composing morphisms over different quivers");
    Morphism h;
    h.maps.reserve(f.maps.size());
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
    return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
    Morphism h = f;
    for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] += g.maps[v];
    return h;
}

Morphism scale(const Rational& c, const Morphism& f) {
    Morphism h;
    for (const auto& m : f.maps) h.maps.push_back(c * m);
    return h;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs, const Representation& from,
                 const Representation& to) {
    Morphism f = zero_morphism(from, to);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!coeffs[k].is_zero()) f = add(f, scale(coeffs[k], basis[k]));
    }
    return f;
}

bool is_morphism(const Representation& from, const Representation& to, const Morphism& f) {
    const Algebra& alg = *from.algebra();
    if (f.maps.size() != static_cast<std::size_t>(alg.vertex_count())) return false;
    for (int v = 0; v < alg.vertex_count(); ++v) {
        if (f.at(v).rows() != to.dim(v) || f.at(v).cols() != from.dim(v)) return false;
    }
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        if (!(f.at(a.target) * from.map(static_cast<int>(k)) == to.map(static_cast<int>(k)) * f.at(a.source))) {
            return false;
        }
    }
    return true;
}

bool is_isomorphism(const Morphism& f) {
    return std::all_of(f.maps.begin(), f.maps.end(), [](const Matrix& m) {
        return m.rows() == m.cols() && (m.rows() == 0 || inverse(m).has_value());
    });
}

Rational trace(const Morphism& f) {
    Rational t;
    for (const auto& m : f.maps) {
        for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) t += m(k, k);
    }
    return t;
}

namespace {

struct HomSystem {
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    Matrix equations;
};

HomSystem hom_system(const Representation& m, const Representation& n) {
    if (!same_algebra(*m.algebra(), *n.algebra())) throw ContractViolation("rep", "Hom between different algebras");
    const Algebra& alg = *m.algebra();
    HomSystem sys;
    for (int v = 0; v < alg.vertex_count(); ++v) {
        sys.offset.push_back(sys.unknowns);
        sys.unknowns += n.dim(v) * m.dim(v);
    }
    std::size_t eq_count = 0;
    for (const auto& a : alg.arrows()) eq_count += n.dim(a.target) * m.dim(a.source);
    sys.equations = Matrix(eq_count, sys.unknowns);
    std::size_t row = 0;
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        const Matrix& ma = m.map(static_cast<int>(k));
        const Matrix& na = n.map(static_cast<int>(k));
        const std::size_t ms = m.dim(a.source);
        const std::size_t mt = m.dim(a.target);
        const std::size_t ns = n.dim(a.source);
        const std::size_t nt = n.dim(a.target);
        const std::size_t off_s = sys.offset[static_cast<std::size_t>(a.source)];
        const std::size_t off_t = sys.offset[static_cast<std::size_t>(a.target)];
        // (f_t M_a - N_a f_s)[r][c] = 0
        for (std::size_t r = 0; r < nt; ++r) {
            for (std::size_t c = 0; c < ms; ++c, ++row) {
                for (std::size_t q = 0; q < mt; ++q) {
                    if (!ma(q, c).is_zero()) sys.equations(row, off_t + r * mt + q) += ma(q, c);
                }
                for (std::size_t q = 0; q < ns; ++q) {
                    if (!na(r, q).is_zero()) sys.equations(row, off_s + q * ms + c) -= na(r, q);
                }
            }
        }
    }
    return sys;
}

Morphism unflatten(const HomSystem& sys, std::span<const Scalar> x, const Representation& m, const Representation& n) {
    Morphism f;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        const std::size_t rows = n.dim(v);
        const std::size_t cols = m.dim(v);
        const std::size_t off = sys.offset[static_cast<std::size_t>(v)];
        f.maps.emplace_back(rows, cols, std::vector<Scalar>(x.begin() + static_cast<std::ptrdiff_t>(off),
                                                           x.begin() + static_cast<std::ptrdiff_t>(off + rows * cols)));
    }
    return f;
}

Vector flatten(const Morphism& f) {
    Vector x;
    for (const auto& m : f.maps) x.insert(x.end(), m.entries().begin(), m.entries().end());
    return x;
}

}  // namespace

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
    const HomSystem sys = hom_system(m, n);
    if (sys.unknowns == 0) return {};
    const Matrix null = null_space_rows(sys.equations);
    std::vector<Morphism> out;
    out.reserve(null.rows());
    for (std::size_t k = 0; k < null.rows(); ++k) out.push_back(unflatten(sys, null.row(k), m, n));
    return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
    const HomSystem sys = hom_system(m, n);
    if (sys.unknowns == 0) return 0;
    return sys.unknowns - rank(sys.equations);
}

Vector hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f) { return HomCoordinates(basis)(f); }

HomCoordinates::HomCoordinates(const std::vector<Morphism>& basis) {
    if (basis.empty()) return;
    std::vector<Vector> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    rows_ = Matrix::from_rows(flat, flat.front().size());
    const auto rr = rref(rows_);
    if (rr.rank != basis.size()) throw ContractViolation("rep", "coordinates against a dependent list");
    columns_ = rr.pivots;
    // c . rows_ restricted to the pivot columns recovers c
    solve_ = *inverse(rows_.select_cols(columns_));
}

Vector HomCoordinates::operator()(const Morphism& f) const {
    const Vector target = flatten(f);
    if (rows_.rows() == 0) {
        if (std::any_of(target.begin(), target.end(), [](const Scalar& s) { return !s.is_zero(); })) {
            throw ContractViolation("rep", "morphism outside the span of the basis");
        }
        return {};
    }
    if (target.size() != rows_.cols()) throw ContractViolation("rep", "morphism of the wrong shape");
    const std::size_t k = rows_.rows();
    Vector c(k);
    for (std::size_t j = 0; j < k; ++j) {
        const Scalar& t = target[columns_[j]];
        if (t.is_zero()) continue;
        for (std::size_t i = 0; i < k; ++i) {
            if (!solve_(j, i).is_zero()) c[i] += t * solve_(j, i);
        }
    }
    Vector residual = target;
    for (std::size_t i = 0; i < k; ++i) {
        if (c[i].is_zero()) continue;
        auto row = rows_.row(i);
        for (std::size_t col = 0; col < residual.size(); ++col) {
            if (!row[col].is_zero()) residual[col] -= c[i] * row[col];
        }
    }
    if (std::any_of(residual.begin(), residual.end(), [](const Scalar& s) { return !s.is_zero(); })) {
        throw ContractViolation("rep", "morphism outside the span of the basis");
    }
    return c;
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw ContractViolation("rep", "direct sum of an empty list needs an algebra");
    const AlgebraPtr& alg = parts.front().algebra();
    const auto n = static_cast<std::size_t>(alg->vertex_count());
    std::vector<std::size_t> dims(n, 0);
    for (const auto& p : parts) {
        if (!same_algebra(*p.algebra(), *alg)) throw ContractViolation("rep", "direct sum over different algebras");
        for (std::size_t v = 0; v < n; ++v) dims[v] += p.dims()[v];
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < alg->arrow_count(); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.map(static_cast<int>(k)));
        maps.push_back(block_diagonal(blocks));
    }
    DirectSum out{Representation(alg, dims, std::move(maps)), {}, {}};
    std::vector<std::size_t> offset(n, 0);
    for (const auto& p : parts) {
        Morphism inc;
        Morphism proj;
        for (std::size_t v = 0; v < n; ++v) {
            Matrix i(dims[v], p.dims()[v]);
            i.set_block(offset[v], 0, Matrix::identity(p.dims()[v]));
            proj.maps.push_back(i.transpose());
            inc.maps.push_back(std::move(i));
            offset[v] += p.dims()[v];
        }
        out.inclusions.push_back(std::move(inc));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

Representation direct_sum_module(const std::vector<Representation>& parts) { return direct_sum(parts).sum; }

std::vector<std::size_t> SubRep::dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
}

std::size_t SubRep::total_dim() const {
    std::size_t t = 0;
    for (const auto& s : spaces) t += s.dim();
    return t;
}

SubRep zero_subrep(const Representation& m) {
    SubRep s;
    for (auto d : m.dims()) s.spaces.emplace_back(d);
    return s;
}

SubRep full_subrep(const Representation& m) {
    SubRep s;
    for (auto d : m.dims()) s.spaces.push_back(Subspace::full(d));
    return s;
}

bool is_subrep(const Representation& m, const SubRep& s) {
    const Algebra& alg = *m.algebra();
    if (s.spaces.size() != static_cast<std::size_t>(alg.vertex_count())) return false;
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        const auto img = image_of(m.map(static_cast<int>(k)), s.spaces[static_cast<std::size_t>(a.source)]);
        if (!s.spaces[static_cast<std::size_t>(a.target)].contains(img)) return false;
    }
    return true;
}

SubRep subrep_sum(const SubRep& a, const SubRep& b) {
    SubRep s;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) s.spaces.push_back(sum(a.spaces[v], b.spaces[v]));
    return s;
}

SubRep subrep_intersection(const SubRep& a, const SubRep& b) {
    SubRep s;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) s.spaces.push_back(intersection(a.spaces[v], b.spaces[v]));
    return s;
}

bool subrep_contains(const SubRep& a, const SubRep& b) {
    for (std::size_t v = 0; v < a.spaces.size(); ++v) {
        if (!a.spaces[v].contains(b.spaces[v])) return false;
    }
    return true;
}

SubRep image(const Morphism& f, const Representation& to) {
    SubRep s;
    for (int v = 0; v < to.algebra()->vertex_count(); ++v) s.spaces.push_back(image_of(f.at(v)));
    return s;
}

SubRep kernel(const Morphism& f, const Representation& from) {
    SubRep s;
    for (int v = 0; v < from.algebra()->vertex_count(); ++v) {
        s.spaces.push_back(f.at(v).rows() == 0 ? Subspace::full(from.dim(v)) : kernel_basis(f.at(v)));
    }
    return s;
}

SubRep generated_subrep(const Representation& m, std::vector<Subspace> seeds) {
    const Algebra& alg = *m.algebra();
    SubRep s{std::move(seeds)};
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
            const Arrow& a = alg.arrows()[k];
            auto& tgt = s.spaces[static_cast<std::size_t>(a.target)];
            const auto img = image_of(m.map(static_cast<int>(k)), s.spaces[static_cast<std::size_t>(a.source)]);
            if (!tgt.contains(img)) {
                tgt = sum(tgt, img);
                changed = true;
            }
        }
    }
    return s;
}

SubModule sub_representation(const Representation& m, const SubRep& s) {
    const Algebra& alg = *m.algebra();
    std::vector<std::size_t> dims = s.dims();
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        const Subspace& src = s.spaces[static_cast<std::size_t>(a.source)];
        const Subspace& tgt = s.spaces[static_cast<std::size_t>(a.target)];
        const Matrix images = m.map(static_cast<int>(k)) * src.basis_columns();
        // coordinates in an rref basis are the entries at the pivot columns
        maps.push_back(images.select_rows(tgt.pivots()));
    }
    Morphism inc;
    for (const auto& sp : s.spaces) inc.maps.push_back(sp.basis_columns());
    return {Representation(m.algebra(), std::move(dims), std::move(maps)), std::move(inc)};
}

QuotientModule quotient_representation(const Representation& m, const SubRep& s) {
    const Algebra& alg = *m.algebra();
    const auto n = static_cast<std::size_t>(alg.vertex_count());
    std::vector<Matrix> comp(n);
    Morphism proj;
    std::vector<std::size_t> dims(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Subspace& sp = s.spaces[v];
        const std::size_t amb = sp.ambient_dim();
        comp[v] = complement_rows(sp, Subspace::full(amb));
        if (comp[v].rows() == 0) comp[v] = Matrix(0, amb);
        dims[v] = comp[v].rows();
        if (sp.is_zero()) {
            // complement rows are the standard basis in order
            proj.maps.push_back(Matrix::identity(amb));
            continue;
        }
        const Matrix b = vstack(sp.basis(), comp[v]);
        const Matrix inv_t = *inverse(b.transpose());
        proj.maps.push_back(inv_t.block(sp.dim(), 0, dims[v], amb));
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        maps.push_back(proj.maps[static_cast<std::size_t>(a.target)] * m.map(static_cast<int>(k)) *
                       comp[static_cast<std::size_t>(a.source)].transpose());
    }
    return {Representation(m.algebra(), std::move(dims), std::move(maps)), std::move(proj)};
}

SubModule kernel_module(const Morphism& f, const Representation& from) {
    return sub_representation(from, kernel(f, from));
}

QuotientModule cokernel_module(const Morphism& f, const Representation& to) {
    return quotient_representation(to, image(f, to));
}

SubRep trace(const std::vector<Representation>& generators, const Representation& y) {
    const auto n = static_cast<std::size_t>(y.algebra()->vertex_count());
    std::vector<std::vector<Vector>> cols(n);
    for (const auto& g : generators) {
        for (const auto& h : hom_basis(g, y)) {
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t c = 0; c < h.maps[v].cols(); ++c) cols[v].push_back(h.maps[v].column(c));
            }
        }
    }
    SubRep s;
    for (std::size_t v = 0; v < n; ++v) {
        s.spaces.push_back(cols[v].empty() ? Subspace(y.dims()[v])
                                           : Subspace::span_of_rows(Matrix::from_rows(cols[v], y.dims()[v])));
    }
    return s;
}

SubRep reject(const Representation& y, const std::vector<Representation>& generators) {
    const auto n = static_cast<std::size_t>(y.algebra()->vertex_count());
    std::vector<std::vector<Vector>> rows(n);
    for (const auto& g : generators) {
        for (const auto& h : hom_basis(y, g)) {
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t r = 0; r < h.maps[v].rows(); ++r) rows[v].push_back(h.maps[v].row_vector(r));
            }
        }
    }
    SubRep s;
    for (std::size_t v = 0; v < n; ++v) {
        s.spaces.push_back(rows[v].empty() ? Subspace::full(y.dims()[v])
                                           : kernel_basis(Matrix::from_rows(rows[v], y.dims()[v])));
    }
    return s;
}

SubRep radical(const Representation& m) {
    const Algebra& alg = *m.algebra();
    SubRep s = zero_subrep(m);
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        auto& tgt = s.spaces[static_cast<std::size_t>(alg.arrows()[k].target)];
        tgt = sum(tgt, image_of(m.map(static_cast<int>(k))));
    }
    return s;
}

SubRep socle(const Representation& m) {
    const Algebra& alg = *m.algebra();
    SubRep s = full_subrep(m);
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Matrix& a = m.map(static_cast<int>(k));
        if (a.rows() == 0) continue;
        auto& src = s.spaces[static_cast<std::size_t>(alg.arrows()[k].source)];
        src = intersection(src, kernel_basis(a));
    }
    return s;
}

QuotientModule top(const Representation& m) { return quotient_representation(m, radical(m)); }

std::size_t support_rank(const Representation& m) {
    return static_cast<std::size_t>(std::count_if(m.dims().begin(), m.dims().end(), [](std::size_t d) { return d > 0; }));
}

std::size_t support_rank(const std::vector<Representation>& ms) {
    if (ms.empty()) return 0;
    std::vector<bool> hit(ms.front().dims().size(), false);
    for (const auto& m : ms) {
        for (std::size_t v = 0; v < hit.size(); ++v) hit[v] = hit[v] || m.dims()[v] > 0;
    }
    return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

std::vector<int> support(const Representation& m) {
    std::vector<int> s;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        if (m.dims()[v] > 0) s.push_back(static_cast<int>(v));
    }
    return s;
}

namespace {

std::vector<std::size_t> local_index(const Algebra& a) {
    std::vector<std::size_t> idx(a.dim());
    for (int i = 0; i < a.vertex_count(); ++i) {
        for (int j = 0; j < a.vertex_count(); ++j) {
            const auto& ps = a.paths_between(i, j);
            for (std::size_t k = 0; k < ps.size(); ++k) idx[ps[k]] = k;
        }
    }
    return idx;
}

// normal form of "first p, then the arrow"
SparseVec then_arrow(const Algebra& a, const Path& p, int arrow) {
    std::vector<int> w = p.arrows;
    w.push_back(arrow);
    return a.normal_form(w);
}

// normal form of "first the arrow, then q"
SparseVec arrow_then(const Algebra& a, int arrow, const Path& q) {
    std::vector<int> w{arrow};
    w.insert(w.end(), q.arrows.begin(), q.arrows.end());
    return a.normal_form(w);
}

}  // namespace

Representation projective(const AlgebraPtr& a, int vertex) {
    const int n = a->vertex_count();
    if (vertex < 0 || vertex >= n) throw ContractViolation("quiver-algebra", "vertex out of range");
    const auto idx = local_index(*a);
    std::vector<std::size_t> dims;
    for (int j = 0; j < n; ++j) dims.push_back(a->paths_between(vertex, j).size());
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < a->arrow_count(); ++k) {
        const Arrow& arr = a->arrows()[k];
        Matrix m(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)]);
        const auto& from = a->paths_between(vertex, arr.source);
        for (std::size_t c = 0; c < from.size(); ++c) {
            for (const auto& [b, coeff] : then_arrow(*a, a->basis()[from[c]], static_cast<int>(k))) {
                m(idx[b], c) += coeff;
            }
        }
        maps.push_back(std::move(m));
    }
    return {a, std::move(dims), std::move(maps)};
}

Representation injective(const AlgebraPtr& a, int vertex) {
    const int n = a->vertex_count();
    if (vertex < 0 || vertex >= n) throw ContractViolation("quiver-algebra", "vertex out of range");
    const auto idx = local_index(*a);
    std::vector<std::size_t> dims;
    for (int j = 0; j < n; ++j) dims.push_back(a->paths_between(j, vertex).size());
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < a->arrow_count(); ++k) {
        const Arrow& arr = a->arrows()[k];
        // R: paths(t -> vertex) -> paths(s -> vertex), q |-> q after the arrow
        Matrix r(dims[static_cast<std::size_t>(arr.source)], dims[static_cast<std::size_t>(arr.target)]);
        const auto& from = a->paths_between(arr.target, vertex);
        for (std::size_t c = 0; c < from.size(); ++c) {
            for (const auto& [b, coeff] : arrow_then(*a, static_cast<int>(k), a->basis()[from[c]])) {
                r(idx[b], c) += coeff;
            }
        }
        maps.push_back(r.transpose());
    }
    return {a, std::move(dims), std::move(maps)};
}

Representation simple(const AlgebraPtr& a, int vertex) {
    const int n = a->vertex_count();
    if (vertex < 0 || vertex >= n) throw ContractViolation("quiver-algebra", "vertex out of range");
    std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
    dims[static_cast<std::size_t>(vertex)] = 1;
    std::vector<Matrix> maps;
    for (const auto& arr : a->arrows()) {
        maps.emplace_back(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)]);
    }
    return {a, std::move(dims), std::move(maps)};
}

Representation regular(const AlgebraPtr& a) {
    if (a->vertex_count() == 0) return Representation::zero(a);
    std::vector<Representation> ps;
    for (int i = 0; i < a->vertex_count(); ++i) ps.push_back(projective(a, i));
    return direct_sum_module(ps);
}

Representation conjugate(const Representation& m, const std::vector<Matrix>& g) {
    const Algebra& alg = *m.algebra();
    std::vector<Matrix> inv;
    for (const auto& x : g) {
        auto i = inverse(x);
        if (!i) throw ContractViolation("rep", "base change is not invertible");
        inv.push_back(std::move(*i));
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < alg.arrow_count(); ++k) {
        const Arrow& a = alg.arrows()[k];
        maps.push_back(g[static_cast<std::size_t>(a.target)] * m.map(static_cast<int>(k)) *
                       inv[static_cast<std::size_t>(a.source)]);
    }
    return {m.algebra(), m.dims(), std::move(maps)};
}

std::vector<Matrix> random_base_change(const Representation& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<Matrix> g;
    for (auto d : m.dims()) {
        for (;;) {
            Matrix x(d, d);
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) x(r, c) = dist(rng);
            }
            if (d == 0 || inverse(x)) {
                g.push_back(std::move(x));
                break;
            }
        }
    }
    return g;
}

Representation inflate(const Representation& m, const AlgebraPtr& parent) {
    const Algebra& q = *m.algebra();
    std::vector<std::size_t> dims(static_cast<std::size_t>(parent->vertex_count()), 0);
    for (int v = 0; v < q.vertex_count(); ++v) dims[static_cast<std::size_t>(q.vertex_origin()[static_cast<std::size_t>(v)])] = m.dim(v);
    std::vector<Matrix> maps;
    for (const auto& arr : parent->arrows()) {
        maps.emplace_back(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)]);
    }
    for (std::size_t k = 0; k < q.arrow_count(); ++k) maps[static_cast<std::size_t>(q.arrow_origin()[k])] = m.map(static_cast<int>(k));
    return {parent, std::move(dims), std::move(maps)};
}

Representation deflate(const Representation& m, const AlgebraPtr& quotient) {
    const Algebra& q = *quotient;
    std::vector<bool> kept(m.dims().size(), false);
    std::vector<std::size_t> dims;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const int o = q.vertex_origin()[static_cast<std::size_t>(v)];
        kept[static_cast<std::size_t>(o)] = true;
        dims.push_back(m.dim(o));
    }
    for (std::size_t v = 0; v < kept.size(); ++v) {
        if (!kept[v] && m.dims()[v] != 0) throw ContractViolation("rep", "module does not vanish at the killed vertices");
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) maps.push_back(m.map(q.arrow_origin()[k]));
    return {quotient, std::move(dims), std::move(maps)};
}

}  // namespace tautilt
