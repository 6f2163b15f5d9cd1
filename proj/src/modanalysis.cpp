#include "invjac/modanalysis.hpp"

#include <algorithm>
#include <sstream>

#include "invjac/errors.hpp"

namespace invjac {

std::string weight_to_string(const WeightVector& w) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i) out << ",";
        out << w.values[i];
    }
    out << ")";
    return out.str();
}

WeightVector weight_of_monomial(const RepSpec& rep, const Monomial& mono) {
    WeightVector w;
    for (const auto& g : rep.generators) {
        if (g.role != GenRole::Cartan) continue;
        Rational value = 0;
        for (int k = 0; k < rep.n; ++k)
            if (mono.exponents[k] != 0)
                value -= Rational(mono.exponents[k]) * g.matrix.at(k, k);
        w.values.push_back(value.get_num().get_si());
    }
    return w;
}

QMatrix action_matrix(const RepSpec& rep, const std::string& gen,
                      const GradedPiece& piece) {
    const std::size_t dim = piece.dim();
    QMatrix m(static_cast<int>(dim), static_cast<int>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const Poly image =
            act_on_poly(rep, gen, Poly::from_term(piece.basis[j], 1));
        for (const auto& [mono, c] : image.terms())
            m.at(static_cast<int>(piece.index_of(mono)), static_cast<int>(j)) = c;
    }
    return m;
}

namespace {

GradedPiece piece_of(const Subspace& s) {
    if (!s.ambient().graded)
        throw AmbientMismatchError("subspace has no graded-piece ambient");
    return monomial_basis(s.ambient().n, s.ambient().d);
}

// Vectors of S supported on the given coordinate set, canonicalized.
Subspace coordinate_slice(const Subspace& s, const std::vector<bool>& keep) {
    const int r = s.dim();
    const int dim = static_cast<int>(s.ambient().dim);
    // Kernel of the basis restricted to the complement columns gives the
    // combinations that vanish outside the stratum.
    std::vector<int> complement;
    for (int c = 0; c < dim; ++c)
        if (!keep[c]) complement.push_back(c);
    QMatrix restricted(static_cast<int>(complement.size()), r);
    for (std::size_t row = 0; row < complement.size(); ++row)
        for (int i = 0; i < r; ++i)
            restricted.at(static_cast<int>(row), i) = s.basis().at(i, complement[row]);
    const Subspace coeffs = kernel(restricted);
    std::vector<std::vector<Rational>> vectors;
    for (int i = 0; i < coeffs.dim(); ++i) {
        std::vector<Rational> v(dim);
        const auto c = coeffs.basis_vector(i);
        for (int t = 0; t < r; ++t) {
            if (c[t] == 0) continue;
            for (int col = 0; col < dim; ++col)
                v[col] += c[t] * s.basis().at(t, col);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(s.ambient(), vectors);
}

} // namespace

std::map<WeightVector, Subspace> weight_decomposition(const RepSpec& rep,
                                                      const Subspace& s) {
    const GradedPiece piece = piece_of(s);
    std::map<WeightVector, std::vector<bool>> strata;
    for (std::size_t i = 0; i < piece.dim(); ++i) {
        const WeightVector w = weight_of_monomial(rep, piece.basis[i]);
        auto [it, inserted] =
            strata.try_emplace(w, std::vector<bool>(piece.dim(), false));
        it->second[i] = true;
    }
    std::map<WeightVector, Subspace> blocks;
    int total = 0;
    for (const auto& [w, keep] : strata) {
        Subspace block = coordinate_slice(s, keep);
        if (block.dim() == 0) continue;
        total += block.dim();
        blocks.emplace(w, std::move(block));
    }
    if (total != s.dim())
        throw Error("weight_decomposition: blocks do not sum to the subspace "
                    "(input is not Cartan-stable)");
    return blocks;
}

InvarianceResult is_invariant_subspace(const RepSpec& rep, const Subspace& s) {
    const GradedPiece piece = piece_of(s);
    for (const auto& g : rep.generators) {
        for (int i = 0; i < s.dim(); ++i) {
            const Poly element = from_coordinates(s.basis_vector(i), piece);
            const Poly image = act_on_poly(rep, g.name, element);
            if (!s.contains_vector(coordinates(image, piece)))
                return {false, InvarianceWitness{g.name, element}};
        }
    }
    return {true, std::nullopt};
}

Subspace generate_submodule(const RepSpec& rep, const Poly& v) {
    if (v.is_zero()) throw DegreeError("generate_submodule: zero vector");
    const Homogeneity h = homogeneous_degree(v);
    if (!h.is_homogeneous())
        throw DegreeError("generate_submodule: input not homogeneous");
    const GradedPiece piece = monomial_basis(v.var_count(), h.degree);
    Subspace current = span_polys(piece, {v});
    for (;;) {
        std::vector<std::vector<Rational>> vectors;
        for (int i = 0; i < current.dim(); ++i) vectors.push_back(current.basis_vector(i));
        for (int i = 0; i < current.dim(); ++i) {
            const Poly element = from_coordinates(current.basis_vector(i), piece);
            for (const auto& g : rep.generators)
                vectors.push_back(coordinates(act_on_poly(rep, g.name, element), piece));
        }
        Subspace next = Subspace::from_vectors(current.ambient(), vectors);
        if (next.dim() == current.dim()) return next;
        current = std::move(next);
    }
}

std::vector<std::pair<WeightVector, Subspace>> highest_weight_vectors(
    const RepSpec& rep, const Subspace& s) {
    const InvarianceResult inv = is_invariant_subspace(rep, s);
    if (!inv.invariant)
        throw Error("highest_weight_vectors: subspace is not invariant (generator " +
                    inv.witness->generator + ")");
    const GradedPiece piece = piece_of(s);
    const auto raising = rep.by_role(GenRole::Raising);
    std::vector<std::pair<WeightVector, Subspace>> result;
    for (auto& [w, block] : weight_decomposition(rep, s)) {
        const int r = block.dim();
        // Stack the raising images of the block basis; kernel = HWV coeffs.
        QMatrix stacked(static_cast<int>(raising.size() * piece.dim()), r);
        for (int i = 0; i < r; ++i) {
            const Poly element = from_coordinates(block.basis_vector(i), piece);
            for (std::size_t gi = 0; gi < raising.size(); ++gi) {
                const Poly image = act_on_poly(rep, raising[gi]->name, element);
                const auto coords = coordinates(image, piece);
                for (std::size_t row = 0; row < piece.dim(); ++row)
                    stacked.at(static_cast<int>(gi * piece.dim() + row), i) = coords[row];
            }
        }
        const Subspace coeffs = kernel(stacked);
        if (coeffs.dim() == 0) continue;
        std::vector<std::vector<Rational>> hwvs;
        for (int i = 0; i < coeffs.dim(); ++i) {
            std::vector<Rational> v(piece.dim());
            const auto c = coeffs.basis_vector(i);
            for (int t = 0; t < r; ++t) {
                if (c[t] == 0) continue;
                for (std::size_t col = 0; col < piece.dim(); ++col)
                    v[col] += c[t] * block.basis().at(t, static_cast<int>(col));
            }
            hwvs.push_back(std::move(v));
        }
        result.emplace_back(w, Subspace::from_vectors(s.ambient(), hwvs));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    return result;
}

DecompositionReport decompose(const RepSpec& rep, const Subspace& s) {
    DecompositionReport report;
    report.total_dim = s.dim();
    if (s.dim() == 0) return report;
    const GradedPiece piece = piece_of(s);
    Subspace accumulated = Subspace::zero(s.ambient());
    int dim_sum = 0;
    for (const auto& [w, hwv_space] : highest_weight_vectors(rep, s)) {
        // RREF basis rows give a deterministic HWV choice per weight.
        for (int i = 0; i < hwv_space.dim(); ++i) {
            const std::vector<Rational> hwv = hwv_space.basis_vector(i);
            const Subspace generated =
                generate_submodule(rep, from_coordinates(hwv, piece));
            report.summands.push_back({w, hwv, generated.dim()});
            report.highest_weight_set.insert(w);
            dim_sum += generated.dim();
            accumulated = sum(accumulated, generated);
        }
    }
    if (dim_sum != s.dim() || accumulated.dim() != s.dim() ||
        !equal(accumulated, s))
        throw DecompositionAuditError(
            "decompose: generated submodules do not sum independently to the "
            "input (non-semisimple input or bug)");
    return report;
}

Subspace invariants(const RepSpec& rep, int d) {
    const GradedPiece piece = monomial_basis(rep.n, d);
    const int dim = static_cast<int>(piece.dim());
    // An invariant is killed by the diagonal Cartan action, so it is
    // supported on the weight-zero monomials. Restricting to that stratum
    // keeps the kernel computation small.
    const WeightVector zero{
        std::vector<long>(rep.by_role(GenRole::Cartan).size(), 0)};
    std::vector<int> stratum;
    for (int i = 0; i < dim; ++i)
        if (weight_of_monomial(rep, piece.basis[i]) == zero) stratum.push_back(i);
    const int k = static_cast<int>(stratum.size());
    std::vector<const Generator*> non_cartan;
    for (const auto& g : rep.generators)
        if (g.role != GenRole::Cartan) non_cartan.push_back(&g);
    QMatrix stacked(static_cast<int>(non_cartan.size()) * dim, k);
    for (int col = 0; col < k; ++col) {
        const Poly mono = Poly::from_term(piece.basis[stratum[col]], 1);
        for (std::size_t gi = 0; gi < non_cartan.size(); ++gi) {
            const Poly image = act_on_poly(rep, non_cartan[gi]->name, mono);
            for (const auto& [m, c] : image.terms())
                stacked.at(static_cast<int>(gi) * dim +
                               static_cast<int>(piece.index_of(m)),
                           col) = c;
        }
    }
    const Subspace coeffs = kernel(stacked);
    std::vector<std::vector<Rational>> vectors;
    for (int i = 0; i < coeffs.dim(); ++i) {
        std::vector<Rational> v(piece.dim());
        const auto c = coeffs.basis_vector(i);
        for (int col = 0; col < k; ++col) v[stratum[col]] = c[col];
        vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(Ambient::of_piece(piece), vectors);
}

long cayley_sylvester(int m, int d) {
    if (m < 0 || d < 0) throw std::invalid_argument("cayley_sylvester: negative input");
    if ((static_cast<long>(m) * d) % 2 != 0) return 0;
    const long target = static_cast<long>(m) * d / 2;
    // N(m,d,w) via DP over the parts j = 0..m.
    auto count = [&](long w) -> long {
        if (w < 0) return 0;
        // dp[t][u]: ways to pick a_0..a_j so far with sum t and weighted sum u
        std::vector<std::vector<long>> dp(d + 1, std::vector<long>(w + 1, 0));
        dp[0][0] = 1;
        for (int j = 0; j <= m; ++j) {
            if (j == 0) continue; // a_0 contributes nothing to the weighted sum
            std::vector<std::vector<long>> next(d + 1, std::vector<long>(w + 1, 0));
            for (int t = 0; t <= d; ++t)
                for (long u = 0; u <= w; ++u) {
                    if (dp[t][u] == 0) continue;
                    for (int a = 0; t + a <= d && u + static_cast<long>(j) * a <= w; ++a)
                        next[t + a][u + static_cast<long>(j) * a] += dp[t][u];
                }
            dp = std::move(next);
        }
        // a_0 absorbs the remaining count d - t at weight w.
        long total = 0;
        for (int t = 0; t <= d; ++t) total += dp[t][w];
        return total;
    };
    return count(target) - count(target - 1);
}

} // namespace invjac
