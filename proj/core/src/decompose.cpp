#include "tautilt/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "tautilt/error.hpp"

namespace tautilt {

EndRing endomorphism_ring(const Representation& m) {
    EndRing e;
    e.basis = hom_basis(m, m);
    const std::size_t d = e.basis.size();
    if (d == 0) return e;
    Matrix gram(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            const Rational t = trace(compose(e.basis[a], e.basis[b]));
            gram(a, b) = t;
            gram(b, a) = t;
        }
    }
    const Matrix rad = null_space_rows(gram);
    for (std::size_t k = 0; k < rad.rows(); ++k) {
        const Vector c = rad.row_vector(k);
        e.radical.push_back(combine(e.basis, c, m, m));
    }
    return e;
}

bool is_indecomposable(const Representation& m) {
    if (m.total_dim() == 0) return false;
    return endomorphism_ring(m).top_dim() == 1;
}

namespace {

// Coefficients c_0..c_k of det(t - a), c_k = 1 (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const Matrix& a) {
    const std::size_t k = a.rows();
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    Matrix m(k, k);
    for (std::size_t j = 1; j <= k; ++j) {
        m = a * m;
        for (std::size_t i = 0; i < k; ++i) m(i, i) += c[k - j + 1];
        const Matrix am = a * m;
        Rational tr;
        for (std::size_t i = 0; i < k; ++i) tr += am(i, i);
        c[k - j] = -tr / Rational(static_cast<long long>(j));
    }
    return c;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    n = std::llabs(n);
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    return out;
}

// Nonzero rational roots, found with the rational root theorem when the
// coefficients are small enough to factor by trial division.
std::vector<Rational> rational_roots(std::vector<Rational> c) {
    while (!c.empty() && c.front().is_zero()) c.erase(c.begin());
    if (c.size() < 2) return {};
    make_primitive(c.data(), c.size());
    const Rational& a0 = c.front();
    const Rational& an = c.back();
    constexpr long long kLimit = 1000000000000LL;
    if (!a0.is_small() || !an.is_small() || std::llabs(a0.small_num()) > kLimit || std::llabs(an.small_num()) > kLimit) {
        return {};
    }
    std::vector<Rational> roots;
    for (long long p : divisors(a0.small_num())) {
        for (long long q : divisors(an.small_num())) {
            for (long long sgn : {1LL, -1LL}) {
                const Rational x(sgn * p, q);
                if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
                Rational v;
                for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
                if (v.is_zero()) roots.push_back(x);
            }
        }
    }
    return roots;
}

struct SplitPlan {
    SubRep image;
    SubRep kernel;
};

// Fitting decomposition of a singular, non-nilpotent endomorphism.
std::optional<SplitPlan> fitting(const Representation& m, const Morphism& x) {
    SplitPlan plan;
    bool nilpotent = true;
    bool invertible = true;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        const std::size_t d = m.dim(v);
        Matrix p = Matrix::identity(d);
        for (std::size_t k = 0; k < d; ++k) p = x.at(v) * p;
        plan.image.spaces.push_back(d == 0 ? Subspace(0) : image_of(p));
        plan.kernel.spaces.push_back(d == 0 ? Subspace(0) : kernel_basis(p));
        if (!plan.image.spaces.back().is_zero()) nilpotent = false;
        if (!plan.kernel.spaces.back().is_zero()) invertible = false;
    }
    if (nilpotent || invertible) return std::nullopt;
    return plan;
}

class Splitter {
public:
    Splitter(const Representation& m, const EndRing& e, std::mt19937_64& rng) : m_(m), e_(e), rng_(rng) {}

    std::optional<SplitPlan> run() {
        for (const auto& x : e_.basis) {
            if (auto p = attempt_with_shifts(x)) return p;
        }
        for (int k = 0; k < 8; ++k) {
            if (auto p = attempt_with_shifts(random_combination(e_.basis))) return p;
        }
        return from_annihilators();
    }

private:
    Morphism random_combination(const std::vector<Morphism>& basis) {
        std::uniform_int_distribution<int> d(-3, 3);
        std::vector<Rational> c;
        for (std::size_t k = 0; k < basis.size(); ++k) c.emplace_back(d(rng_));
        return combine(basis, c, m_, m_);
    }

    std::optional<SplitPlan> attempt_with_shifts(const Morphism& x) {
        if (auto p = fitting(m_, x)) return p;
        std::vector<Rational> tried;
        for (int v = 0; v < m_.algebra()->vertex_count(); ++v) {
            if (m_.dim(v) == 0) continue;
            for (const auto& lambda : rational_roots(char_poly(x.at(v)))) {
                if (std::find(tried.begin(), tried.end(), lambda) != tried.end()) continue;
                tried.push_back(lambda);
                if (auto p = fitting(m_, add(x, scale(-lambda, identity_morphism(m_))))) return p;
            }
        }
        return std::nullopt;
    }

    // Elements x with x.w = 0 (or x.w in rad(E).M) are singular; a left ideal
    // of that shape not contained in rad E has non-nilpotent members.
    std::optional<SplitPlan> from_annihilators() {
        const auto soc = socle(m_);
        const auto rad = radical(m_);
        for (int v = 0; v < m_.algebra()->vertex_count(); ++v) {
            const std::size_t d = m_.dim(v);
            if (d == 0) continue;
            Subspace jm(d);
            for (const auto& r : e_.radical) jm = sum(jm, image_of(r.at(v)));
            const Matrix ann_jm = jm.is_zero() ? Matrix::identity(d) : null_space_rows(jm.basis());
            std::vector<Vector> ws;
            for (std::size_t k = 0; k < d; ++k) ws.push_back(Matrix::identity(d).row_vector(k));
            for (const auto* s : {&soc.spaces[static_cast<std::size_t>(v)], &rad.spaces[static_cast<std::size_t>(v)]}) {
                for (std::size_t k = 0; k < s->dim(); ++k) ws.push_back(s->basis().row_vector(k));
            }
            for (const auto& w : ws) {
                Matrix act(d, e_.dim());
                for (std::size_t a = 0; a < e_.dim(); ++a) {
                    const Vector col = e_.basis[a].at(v).apply(w);
                    for (std::size_t r = 0; r < d; ++r) act(r, a) = col[r];
                }
                for (const Matrix& cond : {act, ann_jm * act}) {
                    const Matrix ideal = null_space_rows(cond);
                    if (ideal.rows() == 0 || ideal.rows() == e_.dim()) continue;
                    std::vector<Morphism> gens;
                    for (std::size_t k = 0; k < ideal.rows(); ++k) {
                        gens.push_back(combine(e_.basis, ideal.row_vector(k), m_, m_));
                        if (auto p = fitting(m_, gens.back())) return p;
                    }
                    for (int t = 0; t < 4; ++t) {
                        if (auto p = fitting(m_, random_combination(gens))) return p;
                    }
                }
            }
        }
        return std::nullopt;
    }

    const Representation& m_;
    const EndRing& e_;
    std::mt19937_64& rng_;
};

std::pair<Summand, Summand> realize_split(const Representation& m, const SplitPlan& plan) {
    auto im = sub_representation(m, plan.image);
    auto ker = sub_representation(m, plan.kernel);
    Morphism p_im;
    Morphism p_ker;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        const std::size_t d = m.dim(v);
        const auto& si = plan.image.spaces[static_cast<std::size_t>(v)];
        const auto& sk = plan.kernel.spaces[static_cast<std::size_t>(v)];
        if (d == 0) {
            p_im.maps.emplace_back(0, 0);
            p_ker.maps.emplace_back(0, 0);
            continue;
        }
        const Matrix coords = *inverse(vstack(si.basis(), sk.basis()).transpose());
        p_im.maps.push_back(coords.block(0, 0, si.dim(), d));
        p_ker.maps.push_back(coords.block(si.dim(), 0, sk.dim(), d));
    }
    return {Summand{std::move(im.module), std::move(im.inclusion), std::move(p_im)},
            Summand{std::move(ker.module), std::move(ker.inclusion), std::move(p_ker)}};
}

}  // namespace

DecompositionResult decompose(const Representation& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x7a17u);
    DecompositionResult out;
    std::vector<Summand> pending{{m, identity_morphism(m), identity_morphism(m)}};
    while (!pending.empty()) {
        Summand s = std::move(pending.back());
        pending.pop_back();
        if (s.module.total_dim() == 0) continue;
        const EndRing e = endomorphism_ring(s.module);
        if (e.top_dim() == 1) {
            out.parts.push_back(std::move(s));
            continue;
        }
        const auto plan = Splitter(s.module, e, rng).run();
        if (!plan) {
            throw DomainError("rep", "non-split endomorphism ring: summand " + s.module.label() +
                                         " has dim End/rad End = " + std::to_string(e.top_dim()) +
                                         " but no idempotent splits it over the rationals");
        }
        auto [a, b] = realize_split(s.module, *plan);
        a.inclusion = compose(s.inclusion, a.inclusion);
        a.projection = compose(a.projection, s.projection);
        b.inclusion = compose(s.inclusion, b.inclusion);
        b.projection = compose(b.projection, s.projection);
        pending.push_back(std::move(b));
        pending.push_back(std::move(a));
    }
    for (std::size_t k = 0; k < out.parts.size(); ++k) {
        bool placed = false;
        for (auto& c : out.classes) {
            if (iso_indecomposable(c.module, out.parts[k].module)) {
                ++c.multiplicity;
                c.parts.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({out.parts[k].module, 1, {k}});
    }
    return out;
}

std::optional<Morphism> iso_indecomposable(const Representation& x, const Representation& y) {
    if (x.dims() != y.dims()) return std::nullopt;
    const auto fs = hom_basis(x, y);
    if (fs.empty()) return std::nullopt;
    const auto gs = hom_basis(y, x);
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            if (!trace(compose(g, f)).is_zero() && is_isomorphism(f)) return f;
        }
    }
    return std::nullopt;
}

std::optional<Morphism> iso_test(const Representation& m, const Representation& n, std::uint64_t seed) {
    if (!same_algebra(*m.algebra(), *n.algebra())) throw ContractViolation("rep", "iso_test across algebras");
    if (m.dims() != n.dims()) return std::nullopt;
    if (m.total_dim() == 0) return identity_morphism(m);
    if (m == n) return identity_morphism(m);
    const auto fs = hom_basis(m, n);
    const std::size_t end_m = hom_dim(m, m);
    if (fs.size() != end_m || hom_dim(n, n) != end_m || hom_dim(n, m) != end_m) return std::nullopt;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rational> c;
        for (std::size_t k = 0; k < fs.size(); ++k) c.emplace_back(d(rng));
        Morphism f = combine(fs, c, m, n);
        if (is_isomorphism(f)) return f;
    }

    // certificate: compare Krull-Schmidt decompositions
    const auto dm = decompose(m, seed);
    const auto dn = decompose(n, seed);
    if (dm.parts.size() != dn.parts.size() || dm.classes.size() != dn.classes.size()) return std::nullopt;
    std::vector<bool> used(dn.classes.size(), false);
    Morphism phi = zero_morphism(m, n);
    for (const auto& cm : dm.classes) {
        std::optional<std::size_t> match;
        for (std::size_t j = 0; j < dn.classes.size() && !match; ++j) {
            if (!used[j] && dn.classes[j].multiplicity == cm.multiplicity &&
                iso_indecomposable(cm.module, dn.classes[j].module)) {
                match = j;
            }
        }
        if (!match) return std::nullopt;
        used[*match] = true;
        const auto& cn = dn.classes[*match];
        for (std::size_t k = 0; k < cm.parts.size(); ++k) {
            const Summand& sm = dm.parts[cm.parts[k]];
            const Summand& sn = dn.parts[cn.parts[k]];
            const auto local = iso_indecomposable(sm.module, sn.module);
            if (!local) return std::nullopt;
            phi = add(phi, compose(sn.inclusion, compose(*local, sm.projection)));
        }
    }
    if (!is_isomorphism(phi) || !is_morphism(m, n, phi)) {
        throw DomainError("rep", "iso_test: matched decompositions did not assemble to an isomorphism");
    }
    return phi;
}

bool isomorphic(const Representation& m, const Representation& n) { return iso_test(m, n).has_value(); }

}  // namespace tautilt
