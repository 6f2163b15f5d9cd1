#include "invjac/qlinalg.hpp"

#include <stdexcept>

#include "invjac/errors.hpp"

namespace invjac {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_)
        throw AmbientMismatchError("matrix product shape mismatch");
    QMatrix p(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols_; ++c) {
                const Rational& b = other.at(k, c);
                if (b != 0) p.at(r, c) += a * b;
            }
        }
    return p;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw AmbientMismatchError("matrix difference shape mismatch");
    QMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        d.entries_[i] = entries_[i] - other.entries_[i];
    return d;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

RrefResult rref(const QMatrix& m) {
    RrefResult result{m, 0, {}};
    QMatrix& a = result.mat;
    const int rows = a.rows();
    const int cols = a.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (a.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int c = col; c < cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        const Rational inv = 1 / a.at(pivot_row, col);
        for (int c = col; c < cols; ++c) a.at(pivot_row, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const Rational factor = a.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        result.pivot_cols.push_back(col);
        ++pivot_row;
    }
    result.rank = pivot_row;
    return result;
}

Subspace Subspace::zero(Ambient ambient) {
    return Subspace(ambient, QMatrix(0, static_cast<int>(ambient.dim)));
}

Subspace Subspace::full(Ambient ambient) {
    return Subspace(ambient, QMatrix::identity(static_cast<int>(ambient.dim)));
}

Subspace Subspace::from_vectors(Ambient ambient,
                                const std::vector<std::vector<Rational>>& vectors) {
    const int dim = static_cast<int>(ambient.dim);
    QMatrix m(static_cast<int>(vectors.size()), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient.dim)
            throw AmbientMismatchError("span: vector length mismatch");
        for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = vectors[r][c];
    }
    RrefResult rr = rref(m);
    QMatrix basis(rr.rank, dim);
    for (int r = 0; r < rr.rank; ++r)
        for (int c = 0; c < dim; ++c) basis.at(r, c) = rr.mat.at(r, c);
    return Subspace(ambient, std::move(basis));
}

std::vector<Rational> Subspace::basis_vector(int i) const {
    std::vector<Rational> v(ambient_.dim);
    for (int c = 0; c < basis_.cols(); ++c) v[c] = basis_.at(i, c);
    return v;
}

std::vector<Rational> Subspace::reduce(const std::vector<Rational>& v) const {
    if (v.size() != ambient_.dim)
        throw AmbientMismatchError("reduce: vector length mismatch");
    std::vector<Rational> r = v;
    // Pivot of RREF row i is its first nonzero column.
    for (int i = 0; i < basis_.rows(); ++i) {
        int pivot = -1;
        for (int c = 0; c < basis_.cols(); ++c) {
            if (basis_.at(i, c) != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0 || r[pivot] == 0) continue;
        const Rational factor = r[pivot];
        for (int c = pivot; c < basis_.cols(); ++c)
            r[c] -= factor * basis_.at(i, c);
    }
    return r;
}

bool Subspace::contains_vector(const std::vector<Rational>& v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

bool contains(const Subspace& s, const Subspace& t) {
    if (!(s.ambient() == t.ambient()))
        throw AmbientMismatchError("contains: ambient mismatch");
    for (int i = 0; i < t.dim(); ++i)
        if (!s.contains_vector(t.basis_vector(i))) return false;
    return true;
}

bool equal(const Subspace& s, const Subspace& t) {
    if (!(s.ambient() == t.ambient()))
        throw AmbientMismatchError("equal: ambient mismatch");
    return s.basis() == t.basis();
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (!(s.ambient() == t.ambient()))
        throw AmbientMismatchError("sum: ambient mismatch");
    std::vector<std::vector<Rational>> vectors;
    vectors.reserve(s.dim() + t.dim());
    for (int i = 0; i < s.dim(); ++i) vectors.push_back(s.basis_vector(i));
    for (int i = 0; i < t.dim(); ++i) vectors.push_back(t.basis_vector(i));
    return Subspace::from_vectors(s.ambient(), vectors);
}

// Zassenhaus: row-reduce [S|S; T|0]; rows with zero left half carry an
// intersection basis in the right half.
Subspace intersect(const Subspace& s, const Subspace& t) {
    if (!(s.ambient() == t.ambient()))
        throw AmbientMismatchError("intersect: ambient mismatch");
    const int m = static_cast<int>(s.ambient().dim);
    QMatrix block(s.dim() + t.dim(), 2 * m);
    for (int i = 0; i < s.dim(); ++i)
        for (int c = 0; c < m; ++c) {
            block.at(i, c) = s.basis().at(i, c);
            block.at(i, m + c) = s.basis().at(i, c);
        }
    for (int i = 0; i < t.dim(); ++i)
        for (int c = 0; c < m; ++c) block.at(s.dim() + i, c) = t.basis().at(i, c);
    RrefResult rr = rref(block);
    std::vector<std::vector<Rational>> vectors;
    for (int r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (int c = 0; c < m && left_zero; ++c)
            if (rr.mat.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rational> v(m);
        for (int c = 0; c < m; ++c) v[c] = rr.mat.at(r, m + c);
        vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(s.ambient(), vectors);
}

Subspace kernel(const QMatrix& m) {
    RrefResult rr = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> vectors;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (int i = 0; i < rr.rank; ++i)
            v[rr.pivot_cols[i]] = -rr.mat.at(i, free_col);
        vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(Ambient::abstract(cols), vectors);
}

std::optional<LinearSolution> solve_linear(const QMatrix& m,
                                           const std::vector<Rational>& b) {
    if (b.size() != static_cast<std::size_t>(m.rows()))
        throw AmbientMismatchError("solve_linear: rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    std::vector<Rational> particular(m.cols());
    for (int i = 0; i < rr.rank; ++i)
        particular[rr.pivot_cols[i]] = rr.mat.at(i, m.cols());
    return LinearSolution{std::move(particular), kernel(m)};
}

Subspace span_polys(const GradedPiece& piece, const std::vector<Poly>& polys) {
    std::vector<std::vector<Rational>> vectors;
    vectors.reserve(polys.size());
    for (const Poly& p : polys) vectors.push_back(coordinates(p, piece));
    return Subspace::from_vectors(Ambient::of_piece(piece), vectors);
}

} // namespace invjac
