#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invjac/modanalysis.hpp"
#include "invjac/poly.hpp"
#include "invjac/qlinalg.hpp"
#include "invjac/repcore.hpp"

namespace invjac {

// Span of the partial derivatives of f inside A_{deg f - 1}.
// f must be nonzero and homogeneous.
Subspace jacobian_subspace(const Poly& f);

// f (x) e_i -> df/dx_i, extended linearly. All parts must share one degree.
Poly phi(const RepSpec& rep, const TensorElement& t);

struct PhiCounterExample {
    std::string generator;
    Monomial monomial;
    int basis_index = 0; // 1-based e_i
    Poly lhs, rhs;
};

// Exhaustive check over the monomial basis of A_d (x) V that phi commutes
// with every generator action. nullopt = pass.
std::optional<PhiCounterExample> check_intertwining_phi(const RepSpec& rep, int d);

// Negative-control variant: the tensor-side action uses `tensor_rep`, the
// polynomial-side action uses `poly_rep`. With matching reps this is the
// check above; with mismatched matrices it must produce a counterexample.
std::optional<PhiCounterExample> check_intertwining_phi_mismatched(
    const RepSpec& tensor_rep, const RepSpec& poly_rep, int d);

struct QuotientMapReport {
    bool is_hom = false;
    std::optional<std::string> failing_generator;
    int kernel_dim = 0;
    int image_dim = 0;
};

// Checks whether q: V -> A_{d-1}, e_i -> df/dx_i, intertwines every
// generator, and computes its rank/nullity.
QuotientMapReport quotient_map_check(const RepSpec& rep, const Poly& f);

struct KempfOptions {
    int max_enumeration_coeff = 3; // deterministic scan over {-B..B}^r, B rising
    int random_trials = 200;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Invariant homogeneous g of the same degree as f with J(g) = J(f).
// Deterministic small-integer scan over the solution space first, then
// seeded random rationals. nullopt after the budget is exhausted (for
// degree >= 3 with J(f) invariant this contradicts the underlying theory
// and should be treated as a defect).
std::optional<Poly> kempf_witness(const RepSpec& rep, const Poly& f,
                                  const KempfOptions& options = {});

struct YauReport {
    int f_degree = 0;
    bool jacobian_invariant = false;
    std::optional<InvarianceWitness> invariance_witness;
    std::set<WeightVector> j_highest_weights;
    std::set<WeightVector> a1_highest_weights;
    bool subset_holds = false;
    std::optional<bool> quotient_hom;       // computed on the Kempf witness
    std::optional<int> quotient_kernel_dim; // (or on f itself when invariant)
    bool kempf_witness_found = false;
};

// The highest-weight containment check. Throws DegreeError when f is zero,
// non-homogeneous, or of degree <= 2 (hypothesis gate). When J(f) is not
// invariant the report carries the witness and no containment verdict.
YauReport yau_check(const RepSpec& rep, const Poly& f);

// Per-summand coefficient table for psi: A (x) A_1 -> A,
// f (x) x_{off+j+1} -> c_j * df/dx_{off+m-j+1}.
struct MirrorMap {
    struct SummandTable {
        int offset = 0;
        int highest_weight = 0;
        std::vector<Rational> coeffs; // index j = 0..highest_weight
    };
    std::vector<SummandTable> summands;

    // psi(f (x) x_var). var is 1-based.
    Poly apply(const Poly& f, int var) const;
};

struct MirrorMapError : Error {
    using Error::Error;
};

// Solves the intertwining equations for the coefficient tables, degree by
// degree up to max_degree. Requires builder provenance (sl2_summands).
// Verifies each summand's solution space is 1-dimensional, normalizes the
// first coefficient to 1, and checks the signs alternate across j.
MirrorMap equivariant_mirror_map(const RepSpec& rep, int max_degree = 3);

struct PsiCounterExample {
    std::string generator;
    Monomial monomial;
    int var = 0;
    Poly lhs, rhs;
};

// Exhaustive intertwining check of psi on the monomial basis of A_d (x) A_1.
std::optional<PsiCounterExample> check_psi_hom(const RepSpec& rep,
                                               const MirrorMap& mirror, int d);

struct FuzzOptions {
    std::uint64_t seed = 1;
    int trials = 10;
    int max_m = 3;
    int max_d = 4;
    bool corrupt_action = false; // negative control: breaks one generator
};

struct FuzzTrial {
    int index = 0;
    std::string rep_description;
    int degree = 0;
    int invariant_dim = 0;
    bool intertwining_pass = false;
    std::optional<bool> quotient_pass; // only when an invariant f exists
    std::optional<bool> yau_pass;      // only when degree > 2
    std::optional<bool> kempf_pass;
};

struct FuzzSummary {
    FuzzOptions options;
    std::vector<FuzzTrial> trials;
    int checks_run = 0;
    int checks_passed = 0;
    bool all_passed() const { return checks_run == checks_passed; }
};

// Seeded random sweep over direct sums of sl2 irreducibles; deterministic
// for a fixed seed.
FuzzSummary fuzz_harness(const FuzzOptions& options);

} // namespace invjac
