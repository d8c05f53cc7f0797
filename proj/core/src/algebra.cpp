#include "tautilt/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "tautilt/error.hpp"

namespace tautilt {
namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Paths of every length 0..max_len, grouped by length, in generation order.
std::vector<std::vector<Path>> paths_up_to(const AlgebraSource& src, std::size_t max_len) {
    std::vector<std::vector<Path>> by_len(max_len + 1);
    for (int v = 0; v < src.vertex_count(); ++v) by_len[0].push_back({v, v, {}});
    for (std::size_t l = 1; l <= max_len; ++l) {
        for (const auto& p : by_len[l - 1]) {
            for (std::size_t a = 0; a < src.arrows.size(); ++a) {
                if (src.arrows[a].source != p.target) continue;
                Path q = p;
                q.arrows.push_back(static_cast<int>(a));
                q.target = src.arrows[a].target;
                by_len[l].push_back(std::move(q));
            }
        }
    }
    return by_len;
}

}  // namespace

std::string dim_vector_string(const std::vector<std::size_t>& dims) {
    const bool digits = std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d <= 9; });
    std::string s;
    if (digits) {
        for (auto d : dims) s += static_cast<char>('0' + d);
        return s;
    }
    s = "[";
    for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
    return s + "]";
}

AlgebraPtr Algebra::build(AlgebraSource source, std::size_t cap) {
    if (cap < 1) throw ContractViolation("quiver-algebra", "length cap must be at least 1");
    auto alg = std::make_shared<Algebra>();
    alg->source_ = std::move(source);
    alg->cap_ = cap;
    const AlgebraSource& src = alg->source_;
    const int n = src.vertex_count();
    alg->fingerprint_ = fnv1a(src.canonical_text());
    if (alg->vertex_origin_.empty()) {
        for (int v = 0; v < n; ++v) alg->vertex_origin_.push_back(v);
        for (std::size_t a = 0; a < src.arrows.size(); ++a) alg->arrow_origin_.push_back(static_cast<int>(a));
    }

    bool done = n == 0;
    for (std::size_t len = 1; len <= cap && !done; ++len) {
        const auto by_len = paths_up_to(src, len);
        // columns: longest paths first, so pivots land on long paths
        std::vector<const Path*> cols;
        std::map<std::vector<int>, std::size_t> col_of;
        std::vector<std::size_t> trivial_col(static_cast<std::size_t>(n));
        for (std::size_t l = len + 1; l-- > 0;) {
            for (const auto& p : by_len[l]) {
                if (l == 0) {
                    trivial_col[static_cast<std::size_t>(p.source)] = cols.size();
                } else {
                    col_of[p.arrows] = cols.size();
                }
                cols.push_back(&p);
            }
        }

        // ideal generators u*r*v truncated to length <= len
        std::vector<Vector> rows;
        for (const auto& rel : src.relations) {
            std::size_t min_len = SIZE_MAX;
            for (const auto& t : rel.terms) min_len = std::min(min_len, t.arrows.size());
            if (min_len > len) continue;
            const std::size_t slack = len - min_len;
            for (std::size_t lv = 0; lv <= slack; ++lv) {
                for (const auto& v : by_len[lv]) {
                    if (v.target != rel.source) continue;
                    for (std::size_t lu = 0; lu + lv <= slack; ++lu) {
                        for (const auto& u : by_len[lu]) {
                            if (u.source != rel.target) continue;
                            Vector row(cols.size());
                            bool any = false;
                            for (const auto& t : rel.terms) {
                                if (t.arrows.size() + lu + lv > len) continue;
                                std::vector<int> w = v.arrows;
                                w.insert(w.end(), t.arrows.begin(), t.arrows.end());
                                w.insert(w.end(), u.arrows.begin(), u.arrows.end());
                                row[col_of.at(w)] += t.coeff;
                                any = true;
                            }
                            if (any) rows.push_back(std::move(row));
                        }
                    }
                }
            }
        }

        const auto rr = rref(Matrix::from_rows(rows, cols.size()));
        std::vector<bool> pivot(cols.size(), false);
        for (std::size_t k = 0; k < rr.rank; ++k) {
            const std::size_t c = rr.pivots[k];
            pivot[c] = true;
            if (cols[c]->length() <= 1) {
                throw DomainError("quiver-algebra", "ideal not admissible: " +
                                                        (cols[c]->length() == 0 ? std::string("trivial path")
                                                                                : src.path_text(cols[c]->arrows)) +
                                                        " lies in the ideal");
            }
        }
        bool all_long_in_ideal = true;
        for (std::size_t c = 0; c < by_len[len].size(); ++c) {
            if (!pivot[c]) all_long_in_ideal = false;
        }
        if (!all_long_in_ideal) continue;

        done = true;
        alg->termination_ = len;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!pivot[c]) free_cols.push_back(c);
        }
        // residue basis ordered by source, then length, then generation order
        std::vector<std::size_t> order = free_cols;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (cols[x]->source != cols[y]->source) return cols[x]->source < cols[y]->source;
            return cols[x]->length() < cols[y]->length();
        });
        std::map<std::size_t, std::size_t> basis_of_col;
        for (std::size_t k = 0; k < order.size(); ++k) {
            basis_of_col[order[k]] = k;
            alg->basis_.push_back(*cols[order[k]]);
        }
        for (const auto& [path, c] : col_of) {
            if (cols[c]->length() >= len) continue;
            SparseVec nf;
            if (!pivot[c]) {
                nf.emplace_back(basis_of_col.at(c), Rational(1));
            } else {
                const std::size_t k = static_cast<std::size_t>(
                    std::find(rr.pivots.begin(), rr.pivots.end(), c) - rr.pivots.begin());
                for (std::size_t f : free_cols) {
                    const Rational& e = rr.reduced(k, f);
                    if (!e.is_zero()) nf.emplace_back(basis_of_col.at(f), -e);
                }
                std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            }
            alg->reduced_[path] = std::move(nf);
        }
        alg->trivial_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) alg->trivial_[static_cast<std::size_t>(v)] = basis_of_col.at(trivial_col[static_cast<std::size_t>(v)]);
    }
    if (!done) {
        throw DomainError("quiver-algebra", "not finite-dimensional within cap " + std::to_string(cap));
    }

    const std::size_t d = alg->basis_.size();
    alg->by_endpoints_.assign(static_cast<std::size_t>(n * n), {});
    for (std::size_t b = 0; b < d; ++b) {
        const auto& p = alg->basis_[b];
        alg->by_endpoints_[static_cast<std::size_t>(p.source * n + p.target)].push_back(b);
    }
    alg->mult_.assign(d * d, {});
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            const Path& px = alg->basis_[x];
            const Path& py = alg->basis_[y];
            if (py.target != px.source) continue;
            if (py.length() == 0) {
                alg->mult_[x * d + y] = {{x, Rational(1)}};
            } else if (px.length() == 0) {
                alg->mult_[x * d + y] = {{y, Rational(1)}};
            } else {
                std::vector<int> w = py.arrows;
                w.insert(w.end(), px.arrows.begin(), px.arrows.end());
                alg->mult_[x * d + y] = alg->normal_form(w);
            }
        }
    }
    return alg;
}

int Algebra::arrow_index(const std::string& name) const {
    for (std::size_t a = 0; a < source_.arrows.size(); ++a) {
        if (source_.arrows[a].name == name) return static_cast<int>(a);
    }
    return -1;
}

SparseVec Algebra::normal_form(const std::vector<int>& path) const {
    if (path.empty()) throw ContractViolation("quiver-algebra", "normal_form of a trivial path; use trivial_path");
    for (std::size_t k = 1; k < path.size(); ++k) {
        if (source_.arrows[static_cast<std::size_t>(path[k - 1])].target !=
            source_.arrows[static_cast<std::size_t>(path[k])].source) {
            throw ContractViolation("quiver-algebra", "path not composable");
        }
    }
    if (path.size() >= termination_) return {};
    return reduced_.at(path);
}

std::string Algebra::fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint_));
    return buf;
}

std::string Algebra::dim_vector_label(const std::vector<std::size_t>& dims) const { return dim_vector_string(dims); }

std::string Algebra::path_text(const Path& p) const {
    if (p.arrows.empty()) return "e" + std::to_string(source_.vertex_labels[static_cast<std::size_t>(p.source)]);
    return source_.path_text(p.arrows);
}

AlgebraPtr load_algebra(const std::string& text, std::size_t cap) { return Algebra::build(parse_algebra(text), cap); }

AlgebraPtr opposite(const Algebra& a) {
    AlgebraSource src = a.source();
    const std::string suffix = "^op";
    if (src.name.size() > suffix.size() && src.name.ends_with(suffix)) {
        src.name.resize(src.name.size() - suffix.size());
    } else {
        src.name += suffix;
    }
    for (auto& arr : src.arrows) std::swap(arr.source, arr.target);
    for (auto& rel : src.relations) {
        std::swap(rel.source, rel.target);
        for (auto& t : rel.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    }
    return Algebra::build(std::move(src), a.length_cap());
}

AlgebraPtr quotient_by_vertices(const Algebra& a, const std::vector<int>& kill) {
    const int n = a.vertex_count();
    std::vector<bool> killed(static_cast<std::size_t>(n), false);
    for (int v : kill) {
        if (v < 0 || v >= n) throw ContractViolation("quiver-algebra", "killed vertex out of range");
        killed[static_cast<std::size_t>(v)] = true;
    }
    const AlgebraSource& old = a.source();
    AlgebraSource src;
    src.name = old.name;
    if (!kill.empty()) src.name += "/e";
    std::vector<int> new_vertex(static_cast<std::size_t>(n), -1);
    std::vector<int> vertex_origin;
    for (int v = 0; v < n; ++v) {
        if (killed[static_cast<std::size_t>(v)]) continue;
        new_vertex[static_cast<std::size_t>(v)] = src.vertex_count();
        src.vertex_labels.push_back(old.vertex_labels[static_cast<std::size_t>(v)]);
        vertex_origin.push_back(v);
    }
    std::vector<int> new_arrow(old.arrows.size(), -1);
    std::vector<int> arrow_origin;
    for (std::size_t k = 0; k < old.arrows.size(); ++k) {
        const auto& arr = old.arrows[k];
        if (killed[static_cast<std::size_t>(arr.source)] || killed[static_cast<std::size_t>(arr.target)]) continue;
        new_arrow[k] = static_cast<int>(src.arrows.size());
        src.arrows.push_back({arr.name, new_vertex[static_cast<std::size_t>(arr.source)],
                              new_vertex[static_cast<std::size_t>(arr.target)]});
        arrow_origin.push_back(static_cast<int>(k));
    }
    for (const auto& rel : old.relations) {
        Relation r;
        for (const auto& t : rel.terms) {
            RelationTerm nt{t.coeff, {}};
            bool keep = true;
            for (int x : t.arrows) {
                if (new_arrow[static_cast<std::size_t>(x)] < 0) {
                    keep = false;
                    break;
                }
                nt.arrows.push_back(new_arrow[static_cast<std::size_t>(x)]);
            }
            if (keep) r.terms.push_back(std::move(nt));
        }
        if (r.terms.empty()) continue;
        r.source = new_vertex[static_cast<std::size_t>(rel.source)];
        r.target = new_vertex[static_cast<std::size_t>(rel.target)];
        src.relations.push_back(std::move(r));
    }
    auto q = Algebra::build(std::move(src), a.length_cap());
    auto mut = std::const_pointer_cast<Algebra>(q);
    mut->vertex_origin_ = std::move(vertex_origin);
    mut->arrow_origin_ = std::move(arrow_origin);
    return q;
}

}  // namespace tautilt
