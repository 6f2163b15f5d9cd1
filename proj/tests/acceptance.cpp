// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "invjac/jacmod.hpp"
#include "invjac/modanalysis.hpp"
#include "invjac/poly.hpp"
#include "invjac/repcore.hpp"

using namespace invjac;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    std::cout << "criterion " << number << " [" << label << "]: "
              << (ok ? "PASS" : "FAIL");
    if (!error.empty()) std::cout << " (" << error << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool check(bool condition, const std::string& what) {
    if (!condition) std::cout << "  failed: " << what << "\n";
    return condition;
}

std::size_t binom(int n, int k) {
    mpz_class r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return static_cast<std::size_t>(r.get_ui());
}

bool intertwining_sweep(const RepSpec& rep, const std::string& name) {
    bool ok = true;
    for (int d = 0;; ++d) {
        if (binom(rep.n + d - 1, d) * rep.n > 5000) break;
        if (check_intertwining_phi(rep, d).has_value()) {
            std::cout << "  counterexample for " << name << " at d=" << d << "\n";
            ok = false;
        }
    }
    return ok;
}

Poly invariant_generator(const RepSpec& rep, int d) {
    const Subspace inv = invariants(rep, d);
    if (inv.dim() < 1) throw Error("expected a nonzero invariant space");
    return from_coordinates(inv.basis_vector(0), monomial_basis(rep.n, d));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(INVJAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw Error("popen failed");
    CliResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

int main() {
    criterion(1, "intertwining suite", [] {
        bool ok = true;
        ok &= intertwining_sweep(sl2_irrep(1), "V(1)");
        ok &= intertwining_sweep(sl2_irrep(2), "V(2)");
        ok &= intertwining_sweep(sl2_irrep(3), "V(3)");
        ok &= intertwining_sweep(direct_sum({sl2_irrep(1), sl2_irrep(1)}), "V(1)+V(1)");
        ok &= intertwining_sweep(direct_sum({sl2_irrep(2), sl2_irrep(0)}), "V(2)+V(0)");
        ok &= intertwining_sweep(sln_standard(3), "sl3 standard");
        // negative control: a corrupted action must be caught
        const RepSpec rep = sl2_irrep(2);
        RepSpec corrupted = rep;
        corrupted.generators[0].matrix.at(0, 1) += 1;
        ok &= check(check_intertwining_phi_mismatched(rep, corrupted, 2).has_value(),
                    "corrupted action produced no counterexample");
        return ok;
    });

    criterion(2, "determinant example", [] {
        const RepSpec rep = direct_sum({sl2_irrep(1), sl2_irrep(1)});
        const Subspace inv = invariants(rep, 2);
        bool ok = check(inv.dim() == 1, "dim invariants(V(1)+V(1), 2) != 1");
        if (!ok) return false;
        const Poly f = from_coordinates(inv.basis_vector(0), monomial_basis(4, 2));
        const Subspace jf = jacobian_subspace(f);
        const GradedPiece a1 = monomial_basis(4, 1);
        ok &= check(equal(jf, Subspace::full(Ambient::of_piece(a1))),
                    "J(f) is not all of A_1");
        const QuotientMapReport q = quotient_map_check(rep, f);
        ok &= check(q.is_hom && q.kernel_dim == 0 && q.image_dim == 4,
                    "quotient map report mismatch");
        const auto j_hw = decompose(rep, jf).highest_weight_set;
        const auto a1_hw =
            decompose(rep, Subspace::full(Ambient::of_piece(a1))).highest_weight_set;
        const std::set<WeightVector> expected{WeightVector{{1}}};
        ok &= check(j_hw == expected && a1_hw == expected,
                    "highest weight sets differ from {(1)}");
        return ok;
    });

    criterion(3, "binary cubic", [] {
        const RepSpec rep = sl2_irrep(3);
        const Subspace inv = invariants(rep, 4);
        bool ok = check(inv.dim() == 1, "dim invariants(V(3), 4) != 1");
        ok &= check(cayley_sylvester(3, 4) == 1, "cayley_sylvester(3,4) != 1");
        if (!ok) return false;
        const YauReport report = yau_check(rep, invariant_generator(rep, 4));
        ok &= check(report.jacobian_invariant && report.subset_holds,
                    "yau_check did not pass");
        ok &= check(report.j_highest_weights ==
                        std::set<WeightVector>{WeightVector{{3}}},
                    "J(f) highest weights != {(3)}");
        return ok;
    });

    criterion(4, "binary quartic", [] {
        const RepSpec rep = sl2_irrep(4);
        bool ok = check(invariants(rep, 2).dim() == 1 && cayley_sylvester(4, 2) == 1,
                        "degree-2 invariant count mismatch");
        ok &= check(invariants(rep, 3).dim() == 1 && cayley_sylvester(4, 3) == 1,
                    "degree-3 invariant count mismatch");
        if (!ok) return false;
        const Poly g2 = invariant_generator(rep, 2);
        const Poly g3 = invariant_generator(rep, 3);
        const YauReport cubic = yau_check(rep, g3);
        ok &= check(cubic.jacobian_invariant && cubic.subset_holds,
                    "yau_check failed on the degree-3 invariant");
        const YauReport quintic = yau_check(rep, g2 * g3);
        ok &= check(quintic.jacobian_invariant && quintic.subset_holds,
                    "yau_check failed on the degree-5 product");
        return ok;
    });

    criterion(5, "oracle equivalence sweep", [] {
        bool ok = true;
        for (int m = 0; m <= 6; ++m)
            for (int d = 0; d <= 4; ++d) {
                if (binom(m + d, d) > dimension_cap()) continue;
                const long expected = cayley_sylvester(m, d);
                const int actual = invariants(sl2_irrep(m), d).dim();
                if (actual != expected) {
                    std::cout << "  mismatch at m=" << m << " d=" << d << ": "
                              << actual << " vs " << expected << "\n";
                    ok = false;
                }
            }
        return ok;
    });

    criterion(6, "beyond SL2: sl3 + dual", [] {
        const RepSpec rep = direct_sum({sln_standard(3), dual_rep(sln_standard(3))});
        const Subspace inv = invariants(rep, 2);
        const GradedPiece a2 = monomial_basis(6, 2);
        const Poly f = parse_poly("x1*x4 + x2*x5 + x3*x6", 6);
        bool ok = check(inv.contains_vector(coordinates(f, a2)),
                        "trace pairing not among the invariants");
        ok &= check(quotient_map_check(rep, f).is_hom, "quotient map not a hom");
        ok &= check(equal(jacobian_subspace(f),
                          Subspace::full(Ambient::of_piece(monomial_basis(6, 1)))),
                    "J(f) is not all of A_1");
        return ok;
    });

    criterion(7, "Kempf witnesses", [] {
        bool ok = true;
        struct Case {
            RepSpec rep;
            Poly f;
        };
        std::vector<Case> cases;
        {
            const RepSpec rep = direct_sum({sl2_irrep(1), sl2_irrep(1)});
            cases.push_back({rep, invariant_generator(rep, 2)});
        }
        {
            const RepSpec rep = sl2_irrep(3);
            cases.push_back({rep, invariant_generator(rep, 4)});
        }
        {
            const RepSpec rep = sl2_irrep(4);
            cases.push_back({rep, invariant_generator(rep, 2)});
            cases.push_back({rep, invariant_generator(rep, 3)});
        }
        for (const auto& c : cases) {
            for (const Poly& f : {c.f, c.f * Rational(5)}) {
                const auto g = kempf_witness(c.rep, f);
                if (!g) {
                    std::cout << "  no witness for " << poly_to_string(f) << "\n";
                    ok = false;
                    continue;
                }
                ok &= check(equal(jacobian_subspace(*g), jacobian_subspace(f)),
                            "witness Jacobian differs");
                bool invariant = true;
                for (const auto& gen : c.rep.generators)
                    if (!act_on_poly(c.rep, gen.name, *g).is_zero()) invariant = false;
                ok &= check(invariant, "witness is not invariant");
            }
        }
        return ok;
    });

    criterion(8, "mirror map", [] {
        bool ok = true;
        for (int m = 0; m <= 4; ++m) {
            const RepSpec rep = sl2_irrep(m);
            MirrorMap mirror;
            try {
                mirror = equivariant_mirror_map(rep);
            } catch (const MirrorMapError& e) {
                std::cout << "  V(" << m << "): " << e.what() << "\n";
                ok = false;
                continue;
            }
            const auto& c = mirror.summands[0].coeffs;
            for (std::size_t j = 0; j + 1 < c.size(); ++j)
                ok &= check((c[j] > 0) != (c[j + 1] > 0),
                            "coefficients do not alternate");
            for (int d = 0; d <= 4; ++d)
                if (check_psi_hom(rep, mirror, d).has_value()) {
                    std::cout << "  psi fails for V(" << m << ") at d=" << d << "\n";
                    ok = false;
                }
        }
        // negative control: a sign flip must be caught
        MirrorMap flipped = equivariant_mirror_map(sl2_irrep(2));
        flipped.summands[0].coeffs[1] = -flipped.summands[0].coeffs[1];
        ok &= check(check_psi_hom(sl2_irrep(2), flipped, 2).has_value(),
                    "sign-flipped mirror passed");
        return ok;
    });

    criterion(9, "foundation properties", [] {
        bool ok = true;
        std::mt19937_64 rng(2024);
        auto random_homog = [&](int n, int d) {
            Poly p(n);
            for (int t = 0; t < 5; ++t) {
                Monomial m(std::vector<int>(n, 0));
                for (int k = 0; k < d; ++k) m.exponents[rng() % n] += 1;
                p.add_term(m, Rational(static_cast<long>(rng() % 11) - 5));
            }
            return p;
        };
        auto random_any = [&](int n) {
            Poly p(n);
            for (int t = 0; t < 4; ++t) {
                Monomial m(std::vector<int>(n, 0));
                int budget = static_cast<int>(rng() % 4);
                while (budget-- > 0) m.exponents[rng() % n] += 1;
                p.add_term(m, Rational(static_cast<long>(rng() % 11) - 5));
            }
            return p;
        };
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const int d = 1 + static_cast<int>(rng() % 4);
            const Poly f = random_homog(n, d);
            if (!f.is_zero()) {
                Poly euler(n);
                for (int i = 1; i <= n; ++i)
                    euler += Poly::variable(n, i) * partial(f, i);
                ok &= check(euler == f * Rational(d), "Euler identity failed");
            }
            const Poly a = random_any(n);
            const Poly b = random_any(n);
            const int i = 1 + static_cast<int>(rng() % n);
            const int j = 1 + static_cast<int>(rng() % n);
            ok &= check(partial(a * b, i) == partial(a, i) * b + a * partial(b, i),
                        "Leibniz failed");
            ok &= check(partial(partial(a, i), j) == partial(partial(a, j), i),
                        "mixed partials failed");
            const RepSpec rep = sl2_irrep(1 + static_cast<int>(rng() % 3));
            const Poly g = random_any(rep.n);
            const Poly ef = act_on_poly(rep, "e", act_on_poly(rep, "f", g));
            const Poly fe = act_on_poly(rep, "f", act_on_poly(rep, "e", g));
            ok &= check(ef - fe == act_on_poly(rep, "h", g), "sl2 bracket failed");
        }
        return ok;
    });

    criterion(10, "CLI contract", [] {
        bool ok = true;
        // yau on the binary-cubic invariant quartic, via @file indirection
        const std::string quartic_path = "acceptance_invariant_quartic.txt";
        {
            std::ofstream out(quartic_path);
            out << poly_to_string(invariant_generator(sl2_irrep(3), 4)) << "\n";
        }
        const CliResult r1 = run_cli("yau --sl2-rep 3 --poly @" + quartic_path);
        ok &= check(r1.exit_code == 0, "yau on invariant quartic: expected exit 0, got " +
                                           std::to_string(r1.exit_code));
        const CliResult r2 = run_cli("yau --sl2-rep 1,1 --poly \"x1*x4 - x2*x3\"");
        ok &= check(r2.exit_code == 2, "yau on degree-2 determinant: expected exit 2, got " +
                                           std::to_string(r2.exit_code));
        const CliResult r3 = run_cli("fuzz --seed 1 --trials 10 --max-m 3 --max-d 4");
        ok &= check(r3.exit_code == 0, "fuzz: expected exit 0, got " +
                                           std::to_string(r3.exit_code));
        // byte-determinism modulo the timing field
        const CliResult r4 = run_cli("fuzz --seed 1 --trials 10 --max-m 3 --max-d 4");
        auto strip = [](const std::string& text) {
            nlohmann::json j = nlohmann::json::parse(text);
            j.erase("timing_ms");
            return j.dump();
        };
        ok &= check(strip(r3.output) == strip(r4.output),
                    "fuzz reports differ for identical seed");
        std::remove(quartic_path.c_str());
        return ok;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
