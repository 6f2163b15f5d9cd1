#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invjac/errors.hpp"
#include "invjac/qlinalg.hpp"
#include "invjac/repcore.hpp"

namespace invjac {

// Integer tuple of Cartan eigenvalues, one per cartan generator in RepSpec
// order. Ordered lexicographically for deterministic bookkeeping.
struct WeightVector {
    std::vector<long> values;

    bool operator==(const WeightVector& other) const = default;
    auto operator<=>(const WeightVector& other) const = default;
};

std::string weight_to_string(const WeightVector& w);

// Cartan generators act diagonally on monomials; the weight of x^a under H
// is -sum_k a_k H_kk.
WeightVector weight_of_monomial(const RepSpec& rep, const Monomial& mono);

// Matrix of act_on_poly(gen, .) on the monomial basis of the piece
// (column j = coordinates of the image of basis monomial j).
QMatrix action_matrix(const RepSpec& rep, const std::string& gen,
                      const GradedPiece& piece);

// Splits S (inside one graded piece) along monomial-weight strata. Throws if
// the blocks do not add up to S, which happens exactly when S is not stable
// under the Cartan generators.
std::map<WeightVector, Subspace> weight_decomposition(const RepSpec& rep,
                                                      const Subspace& s);

struct InvarianceWitness {
    std::string generator;
    Poly element; // basis element of S whose image escapes S
};

struct InvarianceResult {
    bool invariant = false;
    std::optional<InvarianceWitness> witness;
};

// True iff act_on_poly(X, s) stays in S for every generator X and every
// basis element s of S.
InvarianceResult is_invariant_subspace(const RepSpec& rep, const Subspace& s);

// Smallest subspace containing v that is closed under all generators;
// iterated application until the dimension stabilizes. v must be nonzero
// homogeneous.
Subspace generate_submodule(const RepSpec& rep, const Poly& v);

// Per weight, the joint kernel of the raising generators inside the weight
// stratum of S; nonzero blocks only, sorted by weight descending. S must be
// invariant (checked; throws on failure).
std::vector<std::pair<WeightVector, Subspace>> highest_weight_vectors(
    const RepSpec& rep, const Subspace& s);

struct IrreducibleSummand {
    WeightVector highest_weight;
    std::vector<Rational> hwv; // coordinates in the ambient piece
    int generated_dim = 0;
};

struct DecompositionReport {
    std::vector<IrreducibleSummand> summands;
    int total_dim = 0;
    std::set<WeightVector> highest_weight_set;
};

// Audit failure: generated submodules did not sum independently to S.
// Signals a bug or a non-semisimple input; never silently accepted.
struct DecompositionAuditError : Error {
    using Error::Error;
};

DecompositionReport decompose(const RepSpec& rep, const Subspace& s);

// Joint kernel of all generator actions on A_d: the invariant polynomials
// of degree d.
Subspace invariants(const RepSpec& rep, int d);

// dim of sl2 invariants in Sym^d(V(m)) by the classical two-weight count:
// N(m,d,md/2) - N(m,d,md/2-1) with
// N(m,d,w) = #{a in N^{m+1} : sum a_j = d, sum j a_j = w}; 0 when md is odd.
long cayley_sylvester(int m, int d);

} // namespace invjac
