#include <doctest.h>

#include <random>

#include "invjac/errors.hpp"
#include "invjac/modanalysis.hpp"
#include "test_support.hpp"

using namespace invjac;

namespace {

// Independent brute-force oracle for the bounded-partition count behind
// cayley_sylvester: enumerate all exponent vectors directly.
long count_exponent_vectors(int m, int d, long w) {
    if (w < 0) return 0;
    long count = 0;
    std::vector<int> a(m + 1, 0);
    // odometer over a_0..a_m with sum d
    for (;;) {
        int sum = 0;
        long weighted = 0;
        for (int j = 0; j <= m; ++j) {
            sum += a[j];
            weighted += static_cast<long>(j) * a[j];
        }
        if (sum == d && weighted == w) ++count;
        int pos = m;
        while (pos >= 0 && a[pos] == d) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }
    return count;
}

long cayley_sylvester_oracle(int m, int d) {
    if ((static_cast<long>(m) * d) % 2 != 0) return 0;
    const long target = static_cast<long>(m) * d / 2;
    return count_exponent_vectors(m, d, target) -
           count_exponent_vectors(m, d, target - 1);
}

} // namespace

TEST_CASE("weight_of_monomial") {
    const RepSpec rep = sl2_irrep(1);
    CHECK(weight_of_monomial(rep, Monomial({1, 0})).values ==
          std::vector<long>{-1});
    CHECK(weight_of_monomial(rep, Monomial({0, 1})).values ==
          std::vector<long>{1});
    CHECK(weight_of_monomial(rep, Monomial({0, 0})).values ==
          std::vector<long>{0});

    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    CHECK(weight_of_monomial(two, Monomial({1, 0, 0, 1})).values ==
          std::vector<long>{0});
}

TEST_CASE("weight additivity on random monomial pairs") {
    std::mt19937_64 rng(201);
    const RepSpec rep = direct_sum({sl2_irrep(2), sl2_irrep(1)});
    for (int trial = 0; trial < 500; ++trial) {
        Monomial a(std::vector<int>(rep.n, 0)), b(std::vector<int>(rep.n, 0));
        for (int k = 0; k < rep.n; ++k) {
            a.exponents[k] = static_cast<int>(rng() % 3);
            b.exponents[k] = static_cast<int>(rng() % 3);
        }
        Monomial ab(std::vector<int>(rep.n, 0));
        for (int k = 0; k < rep.n; ++k)
            ab.exponents[k] = a.exponents[k] + b.exponents[k];
        const auto wa = weight_of_monomial(rep, a).values;
        const auto wb = weight_of_monomial(rep, b).values;
        const auto wab = weight_of_monomial(rep, ab).values;
        for (std::size_t i = 0; i < wab.size(); ++i)
            CHECK(wab[i] == wa[i] + wb[i]);
    }
}

TEST_CASE("weight_decomposition of A_1 and of an invariant line") {
    const RepSpec rep = sl2_irrep(1);
    const GradedPiece a1 = monomial_basis(2, 1);
    const auto blocks =
        weight_decomposition(rep, Subspace::full(Ambient::of_piece(a1)));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks.at(WeightVector{{-1}}).dim() == 1);
    CHECK(blocks.at(WeightVector{{1}}).dim() == 1);

    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const GradedPiece a2 = monomial_basis(4, 2);
    const Subspace det_line =
        span_polys(a2, {parse_poly("x1*x4 - x2*x3", 4)});
    const auto det_blocks = weight_decomposition(two, det_line);
    REQUIRE(det_blocks.size() == 1);
    CHECK(det_blocks.begin()->first == WeightVector{{0}});
    CHECK(equal(det_blocks.begin()->second, det_line));

    const auto empty = weight_decomposition(
        rep, Subspace::zero(Ambient::of_piece(a1)));
    CHECK(empty.empty());
}

TEST_CASE("is_invariant_subspace") {
    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const GradedPiece a1 = monomial_basis(4, 1);
    CHECK(is_invariant_subspace(two, Subspace::full(Ambient::of_piece(a1)))
              .invariant);

    const RepSpec rep = sl2_irrep(1);
    const GradedPiece a2 = monomial_basis(2, 2);
    const auto bad =
        is_invariant_subspace(rep, span_polys(a2, {parse_poly("x1^2", 2)}));
    CHECK_FALSE(bad.invariant);
    REQUIRE(bad.witness.has_value());
    // the raising action pushes x1^2 out of the line via an x1*x2 term
    CHECK(bad.witness->generator == "e");
    const Poly image = act_on_poly(rep, bad.witness->generator, bad.witness->element);
    CHECK(image.coeff(Monomial({1, 1})) != 0);

    CHECK(is_invariant_subspace(rep, Subspace::zero(Ambient::of_piece(a2)))
              .invariant);
}

TEST_CASE("generate_submodule closures") {
    const RepSpec rep = sl2_irrep(1);
    const GradedPiece a1 = monomial_basis(2, 1);
    const Subspace from_x2 = generate_submodule(rep, parse_poly("x2", 2));
    CHECK(from_x2.dim() == 2);
    CHECK(equal(from_x2, Subspace::full(Ambient::of_piece(a1))));

    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const Poly det = parse_poly("x1*x4 - x2*x3", 4);
    CHECK(generate_submodule(two, det).dim() == 1);

    CHECK(generate_submodule(rep, parse_poly("x1^2", 2)).dim() == 3);

    CHECK_THROWS_AS(generate_submodule(rep, Poly::zero(2)), DegreeError);
}

TEST_CASE("highest_weight_vectors") {
    const RepSpec rep = sl2_irrep(1);
    const GradedPiece a1 = monomial_basis(2, 1);
    const auto hwv1 =
        highest_weight_vectors(rep, Subspace::full(Ambient::of_piece(a1)));
    REQUIRE(hwv1.size() == 1);
    CHECK(hwv1[0].first == WeightVector{{1}});
    CHECK(hwv1[0].second.dim() == 1);
    CHECK(from_coordinates(hwv1[0].second.basis_vector(0), a1) ==
          parse_poly("x2", 2));

    const GradedPiece a2 = monomial_basis(2, 2);
    const auto hwv2 =
        highest_weight_vectors(rep, Subspace::full(Ambient::of_piece(a2)));
    REQUIRE(hwv2.size() == 1);
    CHECK(hwv2[0].first == WeightVector{{2}});
    CHECK(from_coordinates(hwv2[0].second.basis_vector(0), a2) ==
          parse_poly("x2^2", 2));

    // invariant line: HWV at weight zero is the line itself
    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const GradedPiece a2n4 = monomial_basis(4, 2);
    const Subspace det_line =
        span_polys(a2n4, {parse_poly("x1*x4 - x2*x3", 4)});
    const auto hwv3 = highest_weight_vectors(two, det_line);
    REQUIRE(hwv3.size() == 1);
    CHECK(hwv3[0].first == WeightVector{{0}});
    CHECK(equal(hwv3[0].second, det_line));

    // non-invariant input is rejected
    const Subspace bad = span_polys(a2, {parse_poly("x1^2", 2)});
    CHECK_THROWS_AS(highest_weight_vectors(rep, bad), Error);
}

TEST_CASE("decompose: multiplicity two in A_1 of V(1)+V(1)") {
    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const GradedPiece a1 = monomial_basis(4, 1);
    const DecompositionReport report =
        decompose(two, Subspace::full(Ambient::of_piece(a1)));
    CHECK(report.total_dim == 4);
    REQUIRE(report.summands.size() == 2);
    for (const auto& s : report.summands) {
        CHECK(s.highest_weight == WeightVector{{1}});
        CHECK(s.generated_dim == 2);
    }
    CHECK(report.highest_weight_set == std::set<WeightVector>{WeightVector{{1}}});
}

TEST_CASE("decompose: empty input and Sym^2 V(1) = V(2)") {
    const RepSpec rep = sl2_irrep(1);
    const GradedPiece a2 = monomial_basis(2, 2);
    const auto empty = decompose(rep, Subspace::zero(Ambient::of_piece(a2)));
    CHECK(empty.summands.empty());
    CHECK(empty.total_dim == 0);

    const auto sym2 = decompose(rep, Subspace::full(Ambient::of_piece(a2)));
    REQUIRE(sym2.summands.size() == 1);
    CHECK(sym2.summands[0].highest_weight == WeightVector{{2}});
    CHECK(sym2.summands[0].generated_dim == 3);
}

TEST_CASE("decompose audit: each summand is invariant") {
    const RepSpec rep = direct_sum({sl2_irrep(2), sl2_irrep(1)});
    const GradedPiece a2 = monomial_basis(rep.n, 2);
    const Subspace full = Subspace::full(Ambient::of_piece(a2));
    const DecompositionReport report = decompose(rep, full);
    int total = 0;
    for (const auto& s : report.summands) {
        const Subspace generated =
            generate_submodule(rep, from_coordinates(s.hwv, a2));
        CHECK(is_invariant_subspace(rep, generated).invariant);
        total += s.generated_dim;
    }
    CHECK(total == report.total_dim);
    CHECK(report.total_dim == full.dim());
}

TEST_CASE("invariants: basic dimensions") {
    CHECK(invariants(sl2_irrep(1), 2).dim() == 0);
    CHECK(invariants(sl2_irrep(1), 0).dim() == 1);
    CHECK(invariants(sln_standard(3), 0).dim() == 1);

    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const Subspace inv = invariants(two, 2);
    REQUIRE(inv.dim() == 1);
    const GradedPiece a2 = monomial_basis(4, 2);
    const Poly f = from_coordinates(inv.basis_vector(0), a2);
    // must be proportional to the determinant
    const Subspace det_line = span_polys(a2, {parse_poly("x1*x4 - x2*x3", 4)});
    CHECK(equal(inv, det_line));
    // re-verify annihilation by every generator
    for (const auto& g : two.generators)
        CHECK(act_on_poly(two, g.name, f).is_zero());
}

TEST_CASE("cayley_sylvester: pinned values and brute-force oracle") {
    CHECK(cayley_sylvester(1, 2) == 0);
    CHECK(cayley_sylvester(4, 2) == 1);
    CHECK(cayley_sylvester(3, 4) == 1);
    CHECK(cayley_sylvester(2, 1) == 0); // odd md
    for (int m = 0; m <= 5; ++m)
        for (int d = 0; d <= 5; ++d)
            CHECK(cayley_sylvester(m, d) == cayley_sylvester_oracle(m, d));
}

TEST_CASE("oracle equivalence: dim invariants(V(m), d) = cayley_sylvester(m, d)") {
    for (int m = 0; m <= 6; ++m)
        for (int d = 0; d <= 4; ++d)
            CHECK(invariants(sl2_irrep(m), d).dim() == cayley_sylvester(m, d));
}

TEST_CASE("invariant f generates only its own line") {
    const RepSpec two = direct_sum({sl2_irrep(1), sl2_irrep(1)});
    const Poly det = parse_poly("x1*x4 - x2*x3", 4);
    const GradedPiece a2 = monomial_basis(4, 2);
    CHECK(equal(generate_submodule(two, det), span_polys(a2, {det})));
}
