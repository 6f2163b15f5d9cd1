#include "invjac/jacmod.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "invjac/errors.hpp"

namespace invjac {

Subspace jacobian_subspace(const Poly& f) {
    if (f.is_zero()) throw DegreeError("jacobian_subspace: zero polynomial");
    const Homogeneity h = homogeneous_degree(f);
    if (!h.is_homogeneous())
        throw DegreeError("jacobian_subspace: polynomial not homogeneous");
    if (h.degree < 1)
        throw DegreeError("jacobian_subspace: need degree >= 1");
    const int n = f.var_count();
    const GradedPiece piece = monomial_basis(n, h.degree - 1);
    std::vector<Poly> partials;
    partials.reserve(n);
    for (int i = 1; i <= n; ++i) partials.push_back(partial(f, i));
    return span_polys(piece, partials);
}

Poly phi(const RepSpec& rep, const TensorElement& t) {
    Poly result(rep.n);
    int degree = -1;
    for (const auto& [i, f] : t.parts()) {
        const Homogeneity h = homogeneous_degree(f);
        if (!h.is_homogeneous())
            throw DegreeError("phi: tensor part not homogeneous");
        if (degree < 0) degree = h.degree;
        else if (h.degree != degree)
            throw DegreeError("phi: tensor parts of mixed degree");
        result += partial(f, i);
    }
    return result;
}

std::optional<PhiCounterExample> check_intertwining_phi_mismatched(
    const RepSpec& tensor_rep, const RepSpec& poly_rep, int d) {
    const int n = tensor_rep.n;
    const GradedPiece piece = monomial_basis(n, d);
    for (const auto& g : tensor_rep.generators) {
        for (const Monomial& mono : piece.basis) {
            const Poly f = Poly::from_term(mono, 1);
            for (int i = 1; i <= n; ++i) {
                const TensorElement t = TensorElement::part(n, f, i);
                const Poly lhs = phi(tensor_rep, act_on_tensor(tensor_rep, g.name, t));
                const Poly rhs = act_on_poly(poly_rep, g.name, phi(tensor_rep, t));
                if (!(lhs == rhs))
                    return PhiCounterExample{g.name, mono, i, lhs, rhs};
            }
        }
    }
    return std::nullopt;
}

std::optional<PhiCounterExample> check_intertwining_phi(const RepSpec& rep, int d) {
    return check_intertwining_phi_mismatched(rep, rep, d);
}

QuotientMapReport quotient_map_check(const RepSpec& rep, const Poly& f) {
    if (f.is_zero()) throw DegreeError("quotient_map_check: zero polynomial");
    const Homogeneity h = homogeneous_degree(f);
    if (!h.is_homogeneous())
        throw DegreeError("quotient_map_check: polynomial not homogeneous");
    if (f.var_count() != rep.n)
        throw AmbientMismatchError("quotient_map_check: variable count mismatch");
    const int n = rep.n;
    std::vector<Poly> partials;
    for (int i = 1; i <= n; ++i) partials.push_back(partial(f, i));

    QuotientMapReport report;
    report.is_hom = true;
    for (const auto& g : rep.generators) {
        for (int i = 0; i < n && report.is_hom; ++i) {
            // q(X e_i) = sum_j M_{ji} df/dx_j must match X . (df/dx_i).
            Poly lhs(n);
            for (int j = 0; j < n; ++j) {
                const Rational& mji = g.matrix.at(j, i);
                if (mji != 0) lhs += partials[j] * mji;
            }
            const Poly rhs = act_on_poly(rep, g.name, partials[i]);
            if (!(lhs == rhs)) {
                report.is_hom = false;
                report.failing_generator = g.name;
            }
        }
        if (!report.is_hom) break;
    }

    if (h.degree >= 1) {
        const GradedPiece target = monomial_basis(n, h.degree - 1);
        QMatrix q(static_cast<int>(target.dim()), n);
        for (int i = 0; i < n; ++i) {
            const auto coords = coordinates(partials[i], target);
            for (std::size_t r = 0; r < target.dim(); ++r)
                q.at(static_cast<int>(r), i) = coords[r];
        }
        report.image_dim = rref(q).rank;
    } else {
        report.image_dim = 0;
    }
    report.kernel_dim = n - report.image_dim;
    return report;
}

namespace {

bool poly_is_invariant(const RepSpec& rep, const Poly& f) {
    for (const auto& g : rep.generators)
        if (!act_on_poly(rep, g.name, f).is_zero()) return false;
    return true;
}

} // namespace

std::optional<Poly> kempf_witness(const RepSpec& rep, const Poly& f,
                                  const KempfOptions& options) {
    if (f.is_zero()) throw DegreeError("kempf_witness: zero polynomial");
    const Homogeneity h = homogeneous_degree(f);
    if (!h.is_homogeneous() || h.degree < 1)
        throw DegreeError("kempf_witness: need nonzero homogeneous f of degree >= 1");
    const int n = rep.n;
    const int d = h.degree;
    const Subspace jf = jacobian_subspace(f);
    const Subspace inv = invariants(rep, d);
    if (inv.dim() == 0) return std::nullopt;

    const GradedPiece piece_d = monomial_basis(n, d);
    const GradedPiece piece_dm1 = monomial_basis(n, d - 1);

    // Linear conditions on the invariant-basis coefficients: every partial
    // of the candidate must reduce to zero modulo J(f).
    const int r = inv.dim();
    QMatrix conditions(n * static_cast<int>(piece_dm1.dim()), r);
    for (int s = 0; s < r; ++s) {
        const Poly basis_poly = from_coordinates(inv.basis_vector(s), piece_d);
        for (int i = 1; i <= n; ++i) {
            const auto residual =
                jf.reduce(coordinates(partial(basis_poly, i), piece_dm1));
            for (std::size_t row = 0; row < piece_dm1.dim(); ++row)
                conditions.at((i - 1) * static_cast<int>(piece_dm1.dim()) +
                                  static_cast<int>(row),
                              s) = residual[row];
        }
    }
    const Subspace solutions = kernel(conditions);
    if (solutions.dim() == 0) return std::nullopt;
    const int sd = solutions.dim();

    auto candidate_from = [&](const std::vector<Rational>& weights) -> std::optional<Poly> {
        std::vector<Rational> inv_coeffs(r);
        bool nonzero = false;
        for (int k = 0; k < sd; ++k) {
            if (weights[k] == 0) continue;
            const auto sol = solutions.basis_vector(k);
            for (int s = 0; s < r; ++s) inv_coeffs[s] += weights[k] * sol[s];
        }
        for (const auto& c : inv_coeffs)
            if (c != 0) nonzero = true;
        if (!nonzero) return std::nullopt;
        std::vector<Rational> coords(piece_d.dim());
        for (int s = 0; s < r; ++s) {
            if (inv_coeffs[s] == 0) continue;
            const auto bv = inv.basis_vector(s);
            for (std::size_t col = 0; col < piece_d.dim(); ++col)
                coords[col] += inv_coeffs[s] * bv[col];
        }
        const Poly g = from_coordinates(coords, piece_d);
        if (g.is_zero()) return std::nullopt;
        // Partials of g lie in J(f) by construction, so equality is a rank check.
        if (jacobian_subspace(g).dim() != jf.dim()) return std::nullopt;
        return g;
    };

    // Deterministic small-integer scan, then seeded random rationals.
    for (int bound = 1; bound <= options.max_enumeration_coeff; ++bound) {
        std::vector<int> tuple(sd, -bound);
        for (;;) {
            std::vector<Rational> weights(sd);
            for (int k = 0; k < sd; ++k) weights[k] = tuple[k];
            if (auto g = candidate_from(weights)) return g;
            int pos = sd - 1;
            while (pos >= 0 && tuple[pos] == bound) tuple[pos--] = -bound;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    std::mt19937_64 rng(options.seed);
    for (int trial = 0; trial < options.random_trials; ++trial) {
        std::vector<Rational> weights(sd);
        for (int k = 0; k < sd; ++k) {
            const long num = static_cast<long>(rng() % 19) - 9;
            const unsigned long den = 1 + rng() % 9;
            weights[k] = Rational(num, den);
            weights[k].canonicalize();
        }
        if (auto g = candidate_from(weights)) return g;
    }
    return std::nullopt;
}

YauReport yau_check(const RepSpec& rep, const Poly& f) {
    if (f.is_zero()) throw DegreeError("yau_check: zero polynomial");
    const Homogeneity h = homogeneous_degree(f);
    if (!h.is_homogeneous())
        throw DegreeError("yau_check: polynomial not homogeneous");
    if (h.degree <= 2)
        throw DegreeError("yau_check: theorem hypothesis unmet (degree <= 2)");
    if (f.var_count() != rep.n)
        throw AmbientMismatchError("yau_check: variable count mismatch");

    YauReport report;
    report.f_degree = h.degree;
    const Subspace jf = jacobian_subspace(f);
    const InvarianceResult inv = is_invariant_subspace(rep, jf);
    report.jacobian_invariant = inv.invariant;
    if (!inv.invariant) {
        report.invariance_witness = inv.witness;
        return report;
    }

    report.j_highest_weights = decompose(rep, jf).highest_weight_set;
    const GradedPiece a1 = monomial_basis(rep.n, 1);
    report.a1_highest_weights =
        decompose(rep, Subspace::full(Ambient::of_piece(a1))).highest_weight_set;
    report.subset_holds =
        std::includes(report.a1_highest_weights.begin(), report.a1_highest_weights.end(),
                      report.j_highest_weights.begin(), report.j_highest_weights.end());

    // Theorem (b)/(c) route: quotient structure via f itself when invariant,
    // otherwise via a Kempf witness of the same degree.
    std::optional<Poly> g;
    if (poly_is_invariant(rep, f)) g = f;
    else g = kempf_witness(rep, f);
    report.kempf_witness_found = g.has_value();
    if (g) {
        const QuotientMapReport q = quotient_map_check(rep, *g);
        report.quotient_hom = q.is_hom;
        report.quotient_kernel_dim = q.kernel_dim;
    }
    return report;
}

Poly MirrorMap::apply(const Poly& f, int var) const {
    for (const auto& s : summands) {
        if (var <= s.offset || var > s.offset + s.highest_weight + 1) continue;
        const int j = var - s.offset - 1;
        const int partner = s.offset + s.highest_weight + 1 - j;
        return partial(f, partner) * s.coeffs[j];
    }
    throw MirrorMapError("mirror map: variable not covered by any summand");
}

MirrorMap equivariant_mirror_map(const RepSpec& rep, int max_degree) {
    if (rep.sl2_summands.empty())
        throw MirrorMapError("mirror map requires builder summand structure");
    int covered = 0;
    for (const auto& s : rep.sl2_summands) covered += s.highest_weight + 1;
    if (covered != rep.n)
        throw MirrorMapError("mirror map: summands do not cover V");
    if (max_degree < 1)
        throw std::invalid_argument("equivariant_mirror_map: need max_degree >= 1");

    MirrorMap mirror;
    for (const auto& summand : rep.sl2_summands) {
        const int m = summand.highest_weight;
        const int off = summand.offset;
        const int unknowns = m + 1;
        auto partner = [&](int j) { return off + m + 1 - j; };

        std::vector<std::vector<Rational>> rows;
        for (int d = 1; d <= max_degree; ++d) {
            const GradedPiece piece = monomial_basis(rep.n, d);
            const GradedPiece target = monomial_basis(rep.n, d - 1);
            for (const auto& g : rep.generators) {
                for (const Monomial& mono : piece.basis) {
                    const Poly f = Poly::from_term(mono, 1);
                    const Poly df = act_on_poly(rep, g.name, f);
                    for (int j = 0; j < unknowns; ++j) {
                        const int v = off + j + 1;
                        // Linear-in-c difference psi(X.(f (x) x_v)) - X.psi(f (x) x_v)
                        std::vector<Poly> per_unknown(unknowns, Poly(rep.n));
                        per_unknown[j] += partial(df, partner(j));
                        const Poly cv = coaction_on_x(rep, g.name, v);
                        for (const auto& [wm, gamma] : cv.terms()) {
                            int w = 0;
                            for (int k = 0; k < rep.n; ++k)
                                if (wm.exponents[k] == 1) w = k + 1;
                            if (w <= off || w > off + m + 1)
                                throw MirrorMapError(
                                    "mirror map: action leaves the summand block");
                            const int jw = w - off - 1;
                            per_unknown[jw] += partial(f, partner(jw)) * gamma;
                        }
                        per_unknown[j] -= act_on_poly(rep, g.name, partial(f, partner(j)));

                        std::vector<std::vector<Rational>> unknown_coords;
                        bool any = false;
                        for (int u = 0; u < unknowns; ++u) {
                            unknown_coords.push_back(coordinates(per_unknown[u], target));
                            if (!per_unknown[u].is_zero()) any = true;
                        }
                        if (!any) continue;
                        for (std::size_t row = 0; row < target.dim(); ++row) {
                            std::vector<Rational> eq(unknowns);
                            bool nonzero = false;
                            for (int u = 0; u < unknowns; ++u) {
                                eq[u] = unknown_coords[u][row];
                                if (eq[u] != 0) nonzero = true;
                            }
                            if (nonzero) rows.push_back(std::move(eq));
                        }
                    }
                }
            }
        }

        QMatrix system(static_cast<int>(rows.size()), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int u = 0; u < unknowns; ++u)
                system.at(static_cast<int>(r), u) = rows[r][u];
        const Subspace solutions = kernel(system);
        if (solutions.dim() == 0)
            throw MirrorMapError("mirror map: only the zero intertwiner exists");
        if (solutions.dim() > 1)
            throw MirrorMapError("mirror map: solution space is not 1-dimensional");

        // RREF kernel basis already has leading coefficient 1.
        std::vector<Rational> coeffs = solutions.basis_vector(0);
        for (int j = 0; j + 1 < unknowns; ++j) {
            if (coeffs[j] == 0 || coeffs[j + 1] == 0 ||
                (coeffs[j] > 0) == (coeffs[j + 1] > 0))
                throw MirrorMapError("mirror map: coefficients do not alternate in sign");
        }
        mirror.summands.push_back({off, m, std::move(coeffs)});
    }
    return mirror;
}

std::optional<PsiCounterExample> check_psi_hom(const RepSpec& rep,
                                               const MirrorMap& mirror, int d) {
    const GradedPiece piece = monomial_basis(rep.n, d);
    for (const auto& g : rep.generators) {
        std::vector<Poly> coactions;
        for (int v = 1; v <= rep.n; ++v)
            coactions.push_back(coaction_on_x(rep, g.name, v));
        for (const Monomial& mono : piece.basis) {
            const Poly f = Poly::from_term(mono, 1);
            const Poly df = act_on_poly(rep, g.name, f);
            for (int v = 1; v <= rep.n; ++v) {
                Poly lhs = mirror.apply(df, v);
                for (const auto& [wm, gamma] : coactions[v - 1].terms()) {
                    int w = 0;
                    for (int k = 0; k < rep.n; ++k)
                        if (wm.exponents[k] == 1) w = k + 1;
                    lhs += mirror.apply(f, w) * gamma;
                }
                const Poly rhs = act_on_poly(rep, g.name, mirror.apply(f, v));
                if (!(lhs == rhs))
                    return PsiCounterExample{g.name, mono, v, lhs, rhs};
            }
        }
    }
    return std::nullopt;
}

namespace {

RepSpec corrupted_copy(const RepSpec& rep) {
    RepSpec out = rep;
    for (auto& g : out.generators) {
        if (g.role != GenRole::Raising) continue;
        const int col = rep.n > 1 ? 1 : 0;
        g.matrix.at(0, col) += 1;
        return out;
    }
    out.generators.front().matrix.at(0, 0) += 1;
    return out;
}

} // namespace

FuzzSummary fuzz_harness(const FuzzOptions& options) {
    FuzzSummary summary;
    summary.options = options;
    std::mt19937_64 rng(options.seed);
    auto note = [&](bool pass) {
        ++summary.checks_run;
        if (pass) ++summary.checks_passed;
    };
    for (int trial = 0; trial < options.trials; ++trial) {
        FuzzTrial record;
        record.index = trial;

        const int summand_count = 1 + static_cast<int>(rng() % 2);
        std::vector<RepSpec> parts;
        std::ostringstream desc;
        for (int s = 0; s < summand_count; ++s) {
            const int m = static_cast<int>(rng() % (options.max_m + 1));
            parts.push_back(sl2_irrep(m));
            if (s) desc << "+";
            desc << "V(" << m << ")";
        }
        const RepSpec rep = direct_sum(parts);
        record.rep_description = desc.str();
        const int d = 1 + static_cast<int>(rng() % options.max_d);
        record.degree = d;

        if (options.corrupt_action) {
            // Degree >= 2 so the corrupted derivation has something to act on:
            // phi of degree-1 tensors lands in the constants.
            record.intertwining_pass =
                !check_intertwining_phi_mismatched(rep, corrupted_copy(rep),
                                                   std::max(d, 2))
                     .has_value();
        } else {
            record.intertwining_pass = !check_intertwining_phi(rep, d).has_value();
        }
        note(record.intertwining_pass);

        const Subspace inv = invariants(rep, d);
        record.invariant_dim = inv.dim();
        if (inv.dim() > 0) {
            const GradedPiece piece = monomial_basis(rep.n, d);
            Poly f(rep.n);
            while (f.is_zero()) {
                std::vector<Rational> coords(piece.dim());
                for (int i = 0; i < inv.dim(); ++i) {
                    const long c = static_cast<long>(rng() % 7) - 3;
                    if (c == 0) continue;
                    const auto bv = inv.basis_vector(i);
                    for (std::size_t col = 0; col < piece.dim(); ++col)
                        coords[col] += Rational(c) * bv[col];
                }
                f = from_coordinates(coords, piece);
            }
            record.quotient_pass = quotient_map_check(rep, f).is_hom;
            note(*record.quotient_pass);
            if (d > 2) {
                const YauReport yau = yau_check(rep, f);
                record.yau_pass = yau.jacobian_invariant && yau.subset_holds;
                note(*record.yau_pass);
            }
            if (d >= 1) {
                const auto witness = kempf_witness(rep, f);
                record.kempf_pass =
                    witness.has_value() &&
                    equal(jacobian_subspace(*witness), jacobian_subspace(f)) &&
                    poly_is_invariant(rep, *witness);
                note(*record.kempf_pass);
            }
        }
        summary.trials.push_back(std::move(record));
    }
    std::sort(summary.trials.begin(), summary.trials.end(),
              [](const FuzzTrial& a, const FuzzTrial& b) { return a.index < b.index; });
    return summary;
}

} // namespace invjac
