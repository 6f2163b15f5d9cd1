#include "invjac/poly.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "invjac/errors.hpp"

namespace invjac {

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool GradedLexBefore::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;
}

Poly::Poly(int var_count) : n_(var_count) {
    if (var_count < 0)
        throw std::invalid_argument("negative variable count");
}

Poly Poly::constant(int var_count, const Rational& c) {
    Poly p(var_count);
    p.add_term(Monomial(std::vector<int>(var_count, 0)), c);
    return p;
}

Poly Poly::variable(int var_count, int index) {
    if (index < 1 || index > var_count)
        throw std::out_of_range("variable index out of range");
    std::vector<int> e(var_count, 0);
    e[index - 1] = 1;
    return from_term(Monomial(std::move(e)), 1);
}

Poly Poly::from_term(Monomial m, const Rational& c) {
    Poly p(m.var_count());
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.var_count() != n_)
        throw AmbientMismatchError("monomial variable count mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.n_ != n_)
        throw AmbientMismatchError("polynomial variable count mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.n_ != n_)
        throw AmbientMismatchError("polynomial variable count mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const {
    Poly r = *this;
    r -= other;
    return r;
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& other) const {
    if (other.n_ != n_)
        throw AmbientMismatchError("polynomial variable count mismatch");
    Poly r(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m;
            m.exponents.resize(n_);
            for (int k = 0; k < n_; ++k)
                m.exponents[k] = ma.exponents[k] + mb.exponents[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& scalar) const {
    Poly r(n_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

Poly partial(const Poly& f, int i) {
    if (i < 1 || i > f.var_count())
        throw std::out_of_range("partial: variable index out of range");
    Poly r(f.var_count());
    for (const auto& [m, c] : f.terms()) {
        const int a = m.exponents[i - 1];
        if (a == 0) continue;
        Monomial dm = m;
        --dm.exponents[i - 1];
        r.add_term(dm, c * a);
    }
    return r;
}

Homogeneity homogeneous_degree(const Poly& f) {
    if (f.is_zero()) return {Homogeneity::Kind::Zero, 0};
    int d = f.terms().begin()->first.degree();
    for (const auto& [m, c] : f.terms())
        if (m.degree() != d) return {Homogeneity::Kind::Mixed, 0};
    return {Homogeneity::Kind::Homogeneous, d};
}

std::size_t dimension_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("INVJAC_DIM_CAP")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(20000);
    }();
    return cap;
}

namespace {

void enumerate_monomials(int n, int d, int pos, std::vector<int>& current,
                         std::vector<Monomial>& out) {
    if (pos == n - 1) {
        current[pos] = d;
        out.emplace_back(current);
        return;
    }
    // Largest exponent on the leading variable first: lex-descending order.
    for (int e = d; e >= 0; --e) {
        current[pos] = e;
        enumerate_monomials(n, d - e, pos + 1, current, out);
    }
}

// C(n+d-1, d) with an early bail-out above the cap.
std::size_t graded_dim_capped(int n, int d) {
    mpz_class num = 1;
    for (int i = 1; i <= d; ++i) {
        num *= n - 1 + i;
        num /= i;
    }
    if (num > static_cast<unsigned long>(dimension_cap()))
        throw DimensionCapError("graded piece dimension exceeds cap");
    return static_cast<std::size_t>(num.get_ui());
}

} // namespace

GradedPiece monomial_basis(int n, int d) {
    if (n < 1) throw std::invalid_argument("monomial_basis: need n >= 1");
    if (d < 0) throw std::invalid_argument("monomial_basis: need d >= 0");
    const std::size_t dim = graded_dim_capped(n, d);
    GradedPiece piece{n, d, {}};
    piece.basis.reserve(dim);
    std::vector<int> current(n, 0);
    enumerate_monomials(n, d, 0, current, piece.basis);
    return piece;
}

std::size_t GradedPiece::index_of(const Monomial& m) const {
    if (m.var_count() != n || m.degree() != d)
        throw AmbientMismatchError("monomial not in graded piece");
    // Rank in lex-descending enumeration: count monomials that come first.
    std::size_t rank = 0;
    int remaining = d;
    for (int pos = 0; pos < n - 1; ++pos) {
        const int e = m.exponents[pos];
        // Monomials with a larger exponent at `pos` precede this one.
        for (int larger = remaining; larger > e; --larger) {
            // count of monomials of degree remaining-larger in n-pos-1 vars
            mpz_class cnt = 1;
            const int vars = n - pos - 1;
            const int deg = remaining - larger;
            for (int i = 1; i <= deg; ++i) {
                cnt *= vars - 1 + i;
                cnt /= i;
            }
            rank += cnt.get_ui();
        }
        remaining -= e;
    }
    return rank;
}

std::vector<Rational> coordinates(const Poly& f, const GradedPiece& piece) {
    if (f.var_count() != piece.n)
        throw AmbientMismatchError("coordinates: variable count mismatch");
    std::vector<Rational> coords(piece.dim(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != piece.d)
            throw DegreeError("coordinates: polynomial not homogeneous of piece degree");
        coords[piece.index_of(m)] = c;
    }
    return coords;
}

Poly from_coordinates(const std::vector<Rational>& coords, const GradedPiece& piece) {
    if (coords.size() != piece.dim())
        throw AmbientMismatchError("from_coordinates: length mismatch");
    Poly f(piece.n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) f.add_term(piece.basis[i], coords[i]);
    return f;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the expression grammar.

namespace {

class Parser {
public:
    Parser(const std::string& text, int n) : text_(text), n_(n) {}

    Poly parse() {
        Poly result(n_);
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        result += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            const char op = peek();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            result += parse_term(op == '-');
            skip_ws();
        }
        return result;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    unsigned long parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected unsigned integer", pos_);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            digits.push_back(text_[pos_++]);
        return std::stoul(digits);
    }

    Rational parse_coeff() {
        skip_ws();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            digits.push_back(text_[pos_++]);
        Rational c(digits, 10);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            const unsigned long den = parse_uint();
            if (den == 0) throw ParseError("zero denominator", den_pos);
            c /= den;
        }
        c.canonicalize();
        return c;
    }

    // factor := 'x' uint ('^' uint)?
    void parse_factor(Monomial& m) {
        skip_ws();
        if (peek() != 'x') throw ParseError("expected variable", pos_);
        const std::size_t var_pos = pos_;
        ++pos_;
        const unsigned long idx = parse_uint();
        if (idx < 1 || idx > static_cast<unsigned long>(n_))
            throw ParseError("variable index out of range", var_pos);
        int exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            exp = static_cast<int>(parse_uint());
        }
        m.exponents[idx - 1] += exp;
    }

    Poly parse_term(bool negative) {
        skip_ws();
        Rational c(1);
        Monomial m(std::vector<int>(n_, 0));
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_coeff();
        } else {
            parse_factor(m);
            saw_factor = true;
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            parse_factor(m);
            saw_factor = true;
            skip_ws();
        }
        (void)saw_factor;
        if (negative) c = -c;
        return Poly::from_term(std::move(m), c);
    }

    const std::string& text_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, int var_count) {
    if (var_count < 1)
        throw std::invalid_argument("parse_poly: need var_count >= 1");
    Parser p(text, var_count);
    return p.parse();
}

std::string monomial_to_string(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < m.var_count(); ++k) {
        const int e = m.exponents[k];
        if (e == 0) continue;
        if (!first) out << "*";
        out << "x" << (k + 1);
        if (e > 1) out << "^" << e;
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool constant = m.degree() == 0;
        if (constant) {
            out << rational_to_string(a);
        } else {
            if (a != 1) out << rational_to_string(a) << "*";
            out << monomial_to_string(m);
        }
        first = false;
    }
    return out.str();
}

} // namespace invjac
