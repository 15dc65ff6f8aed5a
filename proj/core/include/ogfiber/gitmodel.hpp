#ifndef OGFIBER_GITMODEL_HPP
#define OGFIBER_GITMODEL_HPP

#include "ogfiber/groebner.hpp"
#include "ogfiber/poly_matrix.hpp"
#include "ogfiber/qlinalg.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ogfiber {

// Multiplicities of a 0-cycle. Only the multiset matters mathematically; the
// given order fixes variable naming.
struct CycleType {
    std::vector<int> mults;

    int total() const;
    static CycleType parse(const std::string& csv); // "1,1,2"
    std::string str() const;

    friend bool operator==(const CycleType& a, const CycleType& b) {
        return a.mults == b.mults;
    }
};

struct FactorInfo {
    int m = 1;
    int row_offset = 0;  // first global psi row of the factor
    char letter = 'x';   // psi row letter
    // nilpotent variable name prefixes, empty for m == 1
    std::string a_prefix, b_prefix;
};

// The five-tuple (variables, nilpotency ideal, torus weights, character,
// symmetry derivations) describing one quotient problem, plus the
// strictly-lower-triangular slice used for fast identity checking.
struct GITProblem {
    CycleType cycle;
    RegistryPtr reg; // psi variables first, then nilpotent entries
    std::vector<FactorInfo> factors;
    Ideal nilpotency; // entries of [A,B] and of A^iB^j, i+j = m, per factor

    // diagonal slots: 2 for V then one per psi row; weight of a variable is
    // e_(row slot) - e_(column slot)
    std::vector<std::vector<int>> weights; // one vector per registry variable
    std::vector<int> chi;                  // (-2,-2, 1,...,1)

    std::vector<Derivation> sl_derivations;

    RegistryPtr slice_reg;
    Ideal slice_ideal;                     // slice commutator entries
    std::vector<Polynomial> slice_images;  // per registry variable

    std::size_t n_slots() const { return 2 + static_cast<std::size_t>(cycle.total()); }

    PolyMatrix psi() const;
    PolyMatrix nilpotent(std::size_t factor, char which) const; // 'a' or 'b'
    PolyMatrix slice_psi() const;
    PolyMatrix slice_nilpotent(std::size_t factor, char which) const;
    Polynomial to_slice(const Polynomial& f) const;
};

GITProblem build_problem(const CycleType& cycle);

// bidegrees (i,j) of the potentially nonzero words A^iB^j, 1 <= i+j < m
std::vector<std::pair<int, int>> enumerate_words(int m);

// A rational point of Y, aligned with the problem registry.
struct PointY {
    std::vector<Rational> values;

    Rational eval(const Polynomial& f) const { return f.evaluate(values); }
};

bool on_variety(const GITProblem& P, const PointY& p);

// assignment to the slice registry, lifted by placing entries in the
// strictly lower triangle and zeroing the rest
PointY lift_slice(const GITProblem& P, const std::vector<Rational>& slice_values);

// Random point on the slice variety. The sampler draws small integers and
// enforces the slice commutator equations by making the b-column of each
// factor proportional to the a-column in the constrained positions;
// `family` selects between the solution branches for m >= 3.
std::vector<Rational> random_slice_values(const GITProblem& P, std::mt19937_64& rng,
                                          int family = 0);
int slice_family_count(const GITProblem& P);

// A rational group element (g_V, (g_f)); factor blocks act by left
// multiplication on psi rows and by conjugation on the nilpotent pair.
struct GroupElement {
    QMatrix gV;
    std::vector<QMatrix> gF;
};

GroupElement identity_element(const GITProblem& P);
GroupElement random_group_element(const GITProblem& P, std::mt19937_64& rng);
PointY apply_group(const GITProblem& P, const GroupElement& g, const PointY& p);

// One-parameter-subgroup bookkeeping: r has one integer per diagonal slot.
using OnePS = std::vector<int>;

int ps_weight_of_variable(const GITProblem& P, std::size_t var, const OnePS& r);
int pairing(const GITProblem& P, const OnePS& r);
// every variable with nonzero value scales with non-negative exponent
bool limit_exists(const GITProblem& P, const PointY& p, const OnePS& r);

// Conjugate every factor's pair to strictly lower triangular form by a
// common rational flag. The flag construction is rational whenever the
// point is, so the NotRational branch is reported via nullopt only on
// inconsistent input.
std::optional<std::pair<GroupElement, PointY>>
triangularize_point(const GITProblem& P, const PointY& p);

} // namespace ogfiber

#endif
