#pragma once

#include <map>
#include <string>
#include <vector>

#include "invjac/poly.hpp"
#include "invjac/qlinalg.hpp"

namespace invjac {

enum class GenRole { Raising, Lowering, Cartan, Other };

std::string role_to_string(GenRole role);
GenRole role_from_string(const std::string& text); // throws on unknown role

struct Generator {
    std::string name;
    GenRole role = GenRole::Other;
    QMatrix matrix;
};

struct Sl2Triple {
    std::string raising, lowering, cartan;
};

// Builder provenance: the block [offset, offset + highest_weight] of V is a
// copy of the sl2 irreducible V(highest_weight) in the standard basis.
// Present only on sl2_irrep outputs and direct sums thereof.
struct Sl2Summand {
    int offset = 0;        // 0-based first coordinate of the block
    int highest_weight = 0;
};

// A Lie-algebra representation on V = Q^n given by tagged generator matrices.
// Treated as immutable once validated.
struct RepSpec {
    int n = 0;
    std::vector<Generator> generators;
    std::vector<Sl2Triple> sl2_triples;
    std::vector<Sl2Summand> sl2_summands;

    const Generator& generator(const std::string& name) const;
    bool has_generator(const std::string& name) const;
    std::vector<const Generator*> by_role(GenRole role) const;
};

// Structured violations; empty means the spec is well-formed.
std::vector<std::string> validate(const RepSpec& rep);

// Irreducible sl2 module of highest weight m on basis v_0..v_m:
//   H v_j = (m-2j) v_j,  F v_j = v_{j+1},  E v_j = j(m-j+1) v_{j-1}.
RepSpec sl2_irrep(int m);

// Block-diagonal sum; all summands must share the same generator name/role
// sequence.
RepSpec direct_sum(const std::vector<RepSpec>& reps);

// Contragredient at the Lie-algebra level: M -> -M^T per generator.
RepSpec dual_rep(const RepSpec& rep);

// Standard representation of sl_k on Q^k with Chevalley generators
// e_i = E_{i,i+1}, f_i = E_{i+1,i}, h_i = E_{i,i} - E_{i+1,i+1}.
RepSpec sln_standard(int k);

// Action of generator X on the coordinate x_k: the linear form
// -sum_j M_{kj} x_j (derivative of the coaction at the identity).
Poly coaction_on_x(const RepSpec& rep, const std::string& gen, int k);

// Derivation D_X = sum_k (X . x_k) d/dx_k extending coaction_on_x to A.
Poly act_on_poly(const RepSpec& rep, const std::string& gen, const Poly& f);

// Element of A (x) V: a formal sum of f_i (x) e_i, at most one part per
// basis index, zero parts dropped.
class TensorElement {
public:
    explicit TensorElement(int n) : n_(n) {}

    static TensorElement part(int n, const Poly& f, int basis_index);

    int rep_dim() const { return n_; }
    const std::map<int, Poly>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    void add_part(const Poly& f, int basis_index); // basis_index 1-based

    TensorElement operator+(const TensorElement& other) const;
    bool operator==(const TensorElement& other) const = default;

private:
    int n_;
    std::map<int, Poly> parts_; // key: 1-based basis index
};

// X . (f (x) e_i) = (X.f) (x) e_i + sum_j M_{ji} f (x) e_j, extended linearly.
TensorElement act_on_tensor(const RepSpec& rep, const std::string& gen,
                            const TensorElement& t);

} // namespace invjac
