#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "invjac/rational.hpp"

namespace invjac {

// Exponent vector of a monomial in x_1..x_n. Length fixes the ambient n.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int var_count() const { return static_cast<int>(exponents.size()); }
    int degree() const;

    bool operator==(const Monomial& other) const = default;
};

// Graded-lexicographic order with x_1 > x_2 > ... > x_n, fixed project-wide.
// "Before" means earlier in display/basis order: higher total degree first,
// ties broken by lexicographically larger exponent vector.
struct GradedLexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q. Terms never store zero coefficients;
// two polynomials are equal iff their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexBefore>;

    explicit Poly(int var_count);

    static Poly zero(int var_count) { return Poly(var_count); }
    static Poly constant(int var_count, const Rational& c);
    static Poly variable(int var_count, int index); // x_index, 1-based
    static Poly from_term(Monomial m, const Rational& c);

    int var_count() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Folds the term in, dropping the entry if the coefficient cancels.
    void add_term(const Monomial& m, const Rational& c);

    Rational coeff(const Monomial& m) const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& scalar) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    bool operator==(const Poly& other) const = default;

private:
    int n_;
    TermMap terms_;
};

inline Poly operator*(const Rational& scalar, const Poly& p) { return p * scalar; }

// d/dx_i, 1-based index. Throws std::out_of_range on a bad index.
Poly partial(const Poly& f, int i);

struct Homogeneity {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind;
    int degree; // meaningful only when kind == Homogeneous

    bool is_homogeneous() const { return kind == Kind::Homogeneous; }
};

Homogeneity homogeneous_degree(const Poly& f);

// All degree-d monomials in n variables, in the fixed graded-lex order.
// This list is the coordinate system used for every subspace of A_d.
struct GradedPiece {
    int n = 0;
    int d = 0;
    std::vector<Monomial> basis;

    std::size_t dim() const { return basis.size(); }
    // Position of m in `basis`; throws if m is not degree-d in n variables.
    std::size_t index_of(const Monomial& m) const;
};

// Monomial cap for a single graded piece; INVJAC_DIM_CAP overrides the
// default of 20000.
std::size_t dimension_cap();

// Throws DimensionCapError when C(n+d-1, d) exceeds the cap.
GradedPiece monomial_basis(int n, int d);

// Coordinates of f in the piece. f must be 0 or homogeneous of the piece's
// degree with matching variable count.
std::vector<Rational> coordinates(const Poly& f, const GradedPiece& piece);
Poly from_coordinates(const std::vector<Rational>& coords, const GradedPiece& piece);

// Expression grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   var    := 'x' uint
//   coeff  := int | int '/' uint
// Whitespace insignificant; unary minus allowed on the first term.
Poly parse_poly(const std::string& text, int var_count);

// Prints in the grammar above; parse(print(p)) == p.
std::string poly_to_string(const Poly& f);
std::string monomial_to_string(const Monomial& m);

} // namespace invjac
