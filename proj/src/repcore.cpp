#include "invjac/repcore.hpp"

#include <stdexcept>

#include "invjac/errors.hpp"

namespace invjac {

std::string role_to_string(GenRole role) {
    switch (role) {
        case GenRole::Raising: return "raising";
        case GenRole::Lowering: return "lowering";
        case GenRole::Cartan: return "cartan";
        case GenRole::Other: return "other";
    }
    throw std::logic_error("unreachable");
}

GenRole role_from_string(const std::string& text) {
    if (text == "raising") return GenRole::Raising;
    if (text == "lowering") return GenRole::Lowering;
    if (text == "cartan") return GenRole::Cartan;
    if (text == "other") return GenRole::Other;
    throw Error("unknown generator role: " + text);
}

const Generator& RepSpec::generator(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return g;
    throw Error("unknown generator: " + name);
}

bool RepSpec::has_generator(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return true;
    return false;
}

std::vector<const Generator*> RepSpec::by_role(GenRole role) const {
    std::vector<const Generator*> out;
    for (const auto& g : generators)
        if (g.role == role) out.push_back(&g);
    return out;
}

namespace {

QMatrix bracket(const QMatrix& a, const QMatrix& b) {
    return a * b - b * a;
}

QMatrix scaled(const QMatrix& m, const Rational& c) {
    QMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

} // namespace

std::vector<std::string> validate(const RepSpec& rep) {
    std::vector<std::string> violations;
    if (rep.n < 1) violations.push_back("dimension must be >= 1");
    bool has_cartan = false;
    for (const auto& g : rep.generators) {
        if (g.matrix.rows() != rep.n || g.matrix.cols() != rep.n) {
            violations.push_back("generator " + g.name + ": matrix is not n x n");
            continue;
        }
        if (g.role == GenRole::Cartan) {
            has_cartan = true;
            for (int i = 0; i < rep.n; ++i)
                for (int j = 0; j < rep.n; ++j) {
                    if (i != j && g.matrix.at(i, j) != 0) {
                        violations.push_back("cartan generator " + g.name +
                                             " is not diagonal");
                        goto next_gen;
                    }
                    if (i == j && g.matrix.at(i, i).get_den() != 1) {
                        violations.push_back("cartan generator " + g.name +
                                             " is not integer");
                        goto next_gen;
                    }
                }
        }
    next_gen:;
    }
    if (!has_cartan) violations.push_back("no cartan generator present");
    for (const auto& t : rep.sl2_triples) {
        for (const std::string* name : {&t.raising, &t.lowering, &t.cartan})
            if (!rep.has_generator(*name)) {
                violations.push_back("sl2 triple references unknown generator " + *name);
                goto next_triple;
            }
        {
            const QMatrix& e = rep.generator(t.raising).matrix;
            const QMatrix& f = rep.generator(t.lowering).matrix;
            const QMatrix& h = rep.generator(t.cartan).matrix;
            if (e.rows() != rep.n || f.rows() != rep.n || h.rows() != rep.n) break;
            if (!(bracket(e, f) - h).is_zero())
                violations.push_back("triple (" + t.raising + "," + t.lowering + "," +
                                     t.cartan + "): [E,F] != H");
            if (!(bracket(h, e) - scaled(e, 2)).is_zero())
                violations.push_back("triple (" + t.raising + "," + t.lowering + "," +
                                     t.cartan + "): [H,E] != 2E");
            if (!(bracket(h, f) - scaled(f, -2)).is_zero())
                violations.push_back("triple (" + t.raising + "," + t.lowering + "," +
                                     t.cartan + "): [H,F] != -2F");
        }
    next_triple:;
    }
    return violations;
}

RepSpec sl2_irrep(int m) {
    if (m < 0) throw std::invalid_argument("sl2_irrep: highest weight must be >= 0");
    const int n = m + 1;
    QMatrix e(n, n), f(n, n), h(n, n);
    for (int j = 0; j <= m; ++j) {
        h.at(j, j) = m - 2 * j;
        if (j + 1 <= m) f.at(j + 1, j) = 1;
        if (j >= 1) e.at(j - 1, j) = Rational(j) * (m - j + 1);
    }
    RepSpec rep;
    rep.n = n;
    rep.generators = {{"e", GenRole::Raising, std::move(e)},
                      {"f", GenRole::Lowering, std::move(f)},
                      {"h", GenRole::Cartan, std::move(h)}};
    rep.sl2_triples = {{"e", "f", "h"}};
    rep.sl2_summands = {{0, m}};
    return rep;
}

RepSpec direct_sum(const std::vector<RepSpec>& reps) {
    if (reps.empty()) throw std::invalid_argument("direct_sum: empty summand list");
    const RepSpec& first = reps.front();
    for (const auto& r : reps) {
        if (r.generators.size() != first.generators.size())
            throw Error("direct_sum: generator list mismatch");
        for (std::size_t i = 0; i < r.generators.size(); ++i)
            if (r.generators[i].name != first.generators[i].name ||
                r.generators[i].role != first.generators[i].role)
                throw Error("direct_sum: generator name/role mismatch");
    }
    RepSpec out;
    out.n = 0;
    for (const auto& r : reps) out.n += r.n;
    for (std::size_t i = 0; i < first.generators.size(); ++i) {
        QMatrix block(out.n, out.n);
        int offset = 0;
        for (const auto& r : reps) {
            const QMatrix& m = r.generators[i].matrix;
            for (int a = 0; a < r.n; ++a)
                for (int b = 0; b < r.n; ++b)
                    block.at(offset + a, offset + b) = m.at(a, b);
            offset += r.n;
        }
        out.generators.push_back({first.generators[i].name, first.generators[i].role,
                                  std::move(block)});
    }
    out.sl2_triples = first.sl2_triples;
    bool all_sl2 = true;
    for (const auto& r : reps)
        if (r.sl2_summands.empty()) all_sl2 = false;
    if (all_sl2) {
        int offset = 0;
        for (const auto& r : reps) {
            for (const auto& s : r.sl2_summands)
                out.sl2_summands.push_back({offset + s.offset, s.highest_weight});
            offset += r.n;
        }
    }
    return out;
}

RepSpec dual_rep(const RepSpec& rep) {
    RepSpec out;
    out.n = rep.n;
    for (const auto& g : rep.generators) {
        QMatrix m = g.matrix.transpose();
        out.generators.push_back({g.name, g.role, scaled(m, -1)});
    }
    out.sl2_triples = rep.sl2_triples;
    // Summand provenance is dropped: the dual basis is not in the builders'
    // standard weight order.
    return out;
}

RepSpec sln_standard(int k) {
    if (k < 2) throw std::invalid_argument("sln_standard: need k >= 2");
    RepSpec rep;
    rep.n = k;
    for (int i = 0; i < k - 1; ++i) {
        QMatrix e(k, k), f(k, k), h(k, k);
        e.at(i, i + 1) = 1;
        f.at(i + 1, i) = 1;
        h.at(i, i) = 1;
        h.at(i + 1, i + 1) = -1;
        const std::string idx = std::to_string(i + 1);
        rep.generators.push_back({"e" + idx, GenRole::Raising, std::move(e)});
        rep.generators.push_back({"f" + idx, GenRole::Lowering, std::move(f)});
        rep.generators.push_back({"h" + idx, GenRole::Cartan, std::move(h)});
        rep.sl2_triples.push_back({"e" + idx, "f" + idx, "h" + idx});
    }
    return rep;
}

Poly coaction_on_x(const RepSpec& rep, const std::string& gen, int k) {
    if (k < 1 || k > rep.n)
        throw std::out_of_range("coaction_on_x: variable index out of range");
    const QMatrix& m = rep.generator(gen).matrix;
    Poly result(rep.n);
    for (int j = 0; j < rep.n; ++j) {
        const Rational& c = m.at(k - 1, j);
        if (c != 0) result += Poly::variable(rep.n, j + 1) * Rational(-c);
    }
    return result;
}

Poly act_on_poly(const RepSpec& rep, const std::string& gen, const Poly& f) {
    if (f.var_count() != rep.n)
        throw AmbientMismatchError("act_on_poly: variable count mismatch");
    const QMatrix& m = rep.generator(gen).matrix;
    Poly result(rep.n);
    for (const auto& [mono, c] : f.terms()) {
        // D_X on a monomial: for each variable with a_k > 0, replace one
        // factor x_k by X.x_k = -sum_j M_{kj} x_j.
        for (int k = 0; k < rep.n; ++k) {
            const int a = mono.exponents[k];
            if (a == 0) continue;
            for (int j = 0; j < rep.n; ++j) {
                const Rational& mkj = m.at(k, j);
                if (mkj == 0) continue;
                Monomial shifted = mono;
                --shifted.exponents[k];
                ++shifted.exponents[j];
                result.add_term(shifted, c * a * Rational(-mkj));
            }
        }
    }
    return result;
}

TensorElement TensorElement::part(int n, const Poly& f, int basis_index) {
    TensorElement t(n);
    t.add_part(f, basis_index);
    return t;
}

void TensorElement::add_part(const Poly& f, int basis_index) {
    if (basis_index < 1 || basis_index > n_)
        throw std::out_of_range("tensor basis index out of range");
    if (f.is_zero()) return;
    auto it = parts_.find(basis_index);
    if (it == parts_.end()) {
        parts_.emplace(basis_index, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
    if (other.n_ != n_)
        throw AmbientMismatchError("tensor sum: dimension mismatch");
    TensorElement r = *this;
    for (const auto& [i, f] : other.parts_) r.add_part(f, i);
    return r;
}

TensorElement act_on_tensor(const RepSpec& rep, const std::string& gen,
                            const TensorElement& t) {
    if (t.rep_dim() != rep.n)
        throw AmbientMismatchError("act_on_tensor: dimension mismatch");
    const QMatrix& m = rep.generator(gen).matrix;
    TensorElement result(rep.n);
    for (const auto& [i, f] : t.parts()) {
        result.add_part(act_on_poly(rep, gen, f), i);
        for (int j = 0; j < rep.n; ++j) {
            const Rational& mji = m.at(j, i - 1);
            if (mji != 0) result.add_part(f * mji, j + 1);
        }
    }
    return result;
}

} // namespace invjac
