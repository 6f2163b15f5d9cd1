#pragma once

#include <optional>
#include <vector>

#include "invjac/poly.hpp"
#include "invjac/rational.hpp"

namespace invjac {

// Dense matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    bool operator==(const QMatrix& other) const = default;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    QMatrix mat;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form: pivots 1, pivot columns otherwise zero,
// pivot columns strictly increasing.
RrefResult rref(const QMatrix& m);

// The coordinate space a Subspace lives in: either a graded piece A_d
// (carrying n and d) or an abstract Q^dim.
struct Ambient {
    std::size_t dim = 0;
    bool graded = false;
    int n = 0;
    int d = 0;

    static Ambient abstract(std::size_t dim) { return {dim, false, 0, 0}; }
    static Ambient of_piece(const GradedPiece& p) {
        return {p.dim(), true, p.n, p.d};
    }
    bool operator==(const Ambient& other) const = default;
};

// Canonicalized linear subspace: basis rows in RREF, so equal subspaces
// have bit-identical bases.
class Subspace {
public:
    static Subspace zero(Ambient ambient);
    static Subspace full(Ambient ambient);
    static Subspace from_vectors(Ambient ambient,
                                 const std::vector<std::vector<Rational>>& vectors);

    const Ambient& ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(int i) const;

    // Residual of v after reduction by the RREF basis; zero iff v is a member.
    std::vector<Rational> reduce(const std::vector<Rational>& v) const;
    bool contains_vector(const std::vector<Rational>& v) const;

    bool operator==(const Subspace& other) const = default;

private:
    Subspace(Ambient ambient, QMatrix basis)
        : ambient_(std::move(ambient)), basis_(std::move(basis)) {}
    Ambient ambient_;
    QMatrix basis_; // RREF rows, rank many
};

bool contains(const Subspace& s, const Subspace& t); // t subset of s
bool equal(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);

// Null space of m, canonicalized, ambient Q^cols.
Subspace kernel(const QMatrix& m);

struct LinearSolution {
    std::vector<Rational> particular;
    Subspace homogeneous;
};

// Affine solution set of m x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const QMatrix& m,
                                           const std::vector<Rational>& b);

// Span of polynomials inside one graded piece. Every input must be zero or
// homogeneous of the piece's degree.
Subspace span_polys(const GradedPiece& piece, const std::vector<Poly>& polys);

} // namespace invjac
