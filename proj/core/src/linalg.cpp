#include "tautilt/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "tautilt/error.hpp"

namespace tautilt {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ContractViolation("exact-linalg", "entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ContractViolation("exact-linalg", "ragged row");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ContractViolation("exact-linalg", "ragged row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rows[r][c]);
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& v = (*this)(r, c);
            if (r == c ? !v.is_one() : !v.is_zero()) return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("exact-linalg", "block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    }
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ContractViolation("exact-linalg", "block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) std::copy(row(idx[k]).begin(), row(idx[k]).end(), m.row(k).begin());
    return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
    }
    return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw ContractViolation("exact-linalg", "vector length mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("exact-linalg", "product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) p(i, j) += aik * bkj;
            }
        }
    }
    return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix s = a;
    s += b;
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractViolation("exact-linalg", "difference shape mismatch");
    Matrix s = a;
    for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] -= b.data_[k];
    return s;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m = a;
    if (s.is_one()) return m;
    for (auto& e : m.data_) {
        if (!e.is_zero()) e *= s;
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ContractViolation("exact-linalg", "sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!b.data_[k].is_zero()) data_[k] += b.data_[k];
    }
    return *this;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "," : "") << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ContractViolation("exact-linalg", "hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ContractViolation("exact-linalg", "vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

namespace {

// Cost of a pivot candidate: prefer small integers.
std::size_t pivot_cost(const Scalar& s) {
    if (!s.is_small()) return 1u << 30;
    const auto n = s.small_num() < 0 ? -s.small_num() : s.small_num();
    if (n == 1 && s.small_den() == 1) return 0;
    return 1 + static_cast<std::size_t>(std::min<std::int64_t>(n + s.small_den(), 1 << 20));
}

}  // namespace

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}, 0};
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (std::size_t r = 0; r < rows; ++r) make_primitive(a.row(r).data(), cols);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_cost = 0;
        for (std::size_t q = r; q < rows; ++q) {
            if (a(q, c).is_zero()) continue;
            const std::size_t cost = pivot_cost(a(q, c));
            if (best == rows || cost < best_cost) {
                best = q;
                best_cost = cost;
                if (cost == 0) break;
            }
        }
        if (best == rows) continue;
        if (best != r) {
            auto ra = a.row(r);
            auto rb = a.row(best);
            std::swap_ranges(ra.begin(), ra.end(), rb.begin());
        }
        const Scalar piv = a(r, c);
        const bool unit_pivot = piv.is_one();
        auto prow = a.row(r);
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || a(q, c).is_zero()) continue;
            const Scalar factor = a(q, c);
            auto qrow = a.row(q);
            // q <- piv * q - factor * r  (fraction-free update)
            for (std::size_t j = 0; j < cols; ++j) {
                if (!unit_pivot && !qrow[j].is_zero()) qrow[j] *= piv;
                if (j >= c && !prow[j].is_zero()) qrow[j] -= factor * prow[j];
            }
            make_primitive(qrow.data(), cols);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    for (std::size_t k = 0; k < r; ++k) {
        auto row = a.row(k);
        const Scalar piv = row[res.pivots[k]];
        if (piv.is_one()) continue;
        const Scalar inv = piv.inverse();
        for (std::size_t j = res.pivots[k]; j < cols; ++j) {
            if (!row[j].is_zero()) row[j] *= inv;
        }
    }
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

Matrix null_space_from_rref(const RrefResult& rr, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < rr.rank; ++k) {
            const Scalar& e = rr.reduced(k, f);
            if (!e.is_zero()) v[rr.pivots[k]] = -e;
        }
        basis.push_back(std::move(v));
    }
    return Matrix::from_rows(basis, cols);
}

}  // namespace

Matrix null_space_rows(const Matrix& m) {
    const Matrix raw = null_space_from_rref(rref(m), m.cols());
    return Subspace::span_of_rows(raw).basis();
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ContractViolation("exact-linalg", "solve_linear: a.rows != b.rows");
    const auto rr = rref(hstack(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < rr.rank; ++k) {
        const std::size_t p = rr.pivots[k];
        if (p >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = rr.reduced(k, a.cols() + j);
    }
    // The kernel of a is the kernel read off the left block of the same sweep.
    RrefResult left{rr.reduced.block(0, 0, rr.reduced.rows(), a.cols()), rr.pivots, rr.rank};
    Matrix kernel = Subspace::span_of_rows(null_space_from_rref(left, a.cols())).basis();
    return LinearSolution{std::move(x), std::move(kernel)};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    const auto rr = rref(hstack(m, Matrix::identity(n)));
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.reduced.block(0, n, n, n);
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
    Subspace s(rows.cols());
    auto rr = rref(rows);
    s.basis_ = rr.reduced.block(0, 0, rr.rank, rows.cols());
    s.pivots_ = std::move(rr.pivots);
    return s;
}

Subspace Subspace::span_of_cols(const Matrix& cols) { return span_of_rows(cols.transpose()); }

Subspace Subspace::full(std::size_t n) {
    Subspace s(n);
    s.basis_ = Matrix::identity(n);
    s.pivots_.resize(n);
    for (std::size_t k = 0; k < n; ++k) s.pivots_[k] = k;
    return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw ContractViolation("exact-linalg", "subspace ambient mismatch");
    Vector w(v.begin(), v.end());
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        const Scalar f = w[pivots_[k]];
        if (f.is_zero()) continue;
        auto row = basis_.row(k);
        for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
            if (!row[j].is_zero()) w[j] -= f * row[j];
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ContractViolation("exact-linalg", "subspace ambient mismatch");
    if (other.dim() > dim()) return false;
    for (std::size_t k = 0; k < other.dim(); ++k) {
        if (!contains(other.basis_.row(k))) return false;
    }
    return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
    Vector c(dim());
    for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw ContractViolation("exact-linalg", "subspace ambient mismatch");
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    return Subspace::span_of_rows(vstack(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw ContractViolation("exact-linalg", "subspace ambient mismatch");
    if (u.is_zero() || v.is_zero()) return Subspace(u.ambient_dim());
    if (u.is_full()) return v;
    if (v.is_full()) return u;
    // (x, y) with x U = y V
    const Matrix sys = hstack(u.basis().transpose(), Scalar(-1) * v.basis().transpose());
    const Matrix null = null_space_rows(sys);
    if (null.rows() == 0) return Subspace(u.ambient_dim());
    const Matrix coeff = null.block(0, 0, null.rows(), u.dim());
    return Subspace::span_of_rows(coeff * u.basis());
}

Matrix complement_rows(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner)) throw ContractViolation("exact-linalg", "complement: inner not contained in outer");
    const std::size_t n = outer.ambient_dim();
    if (outer.is_full()) {
        // unit vectors off the pivots of an rref basis
        std::vector<bool> pivot(n, false);
        for (std::size_t p : inner.pivots()) pivot[p] = true;
        Matrix out(n - inner.dim(), n);
        std::size_t r = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!pivot[j]) out(r++, j) = 1;
        }
        return out;
    }
    // greedy choice of outer rows = pivot columns of [inner^T | outer^T]
    const auto rr = rref(hstack(inner.basis().transpose(), outer.basis().transpose()));
    std::vector<std::size_t> chosen;
    for (std::size_t p : rr.pivots) {
        if (p >= inner.dim()) chosen.push_back(p - inner.dim());
    }
    return outer.basis().select_rows(chosen);
}

Subspace kernel_basis(const Matrix& a) {
    Subspace s = Subspace::span_of_rows(null_space_rows(a));
    return s;
}

Subspace image_of(const Matrix& a) { return Subspace::span_of_cols(a); }

Subspace image_of(const Matrix& a, const Subspace& s) {
    if (s.is_zero()) return Subspace(a.rows());
    return Subspace::span_of_rows(s.basis() * a.transpose());
}

Subspace preimage(const Matrix& a, const Subspace& s) {
    if (s.is_full()) return Subspace::full(a.cols());
    // s = {y : L y = 0} with L spanning the annihilator of s
    const Matrix ann = s.is_zero() ? Matrix::identity(a.rows()) : null_space_rows(s.basis());
    return kernel_basis(ann * a);
}

}  // namespace tautilt
