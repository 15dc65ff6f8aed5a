#ifndef OGFIBER_INVARIANTS_HPP
#define OGFIBER_INVARIANTS_HPP

#include "ogfiber/gitmodel.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ogfiber {

using ProblemPtr = std::shared_ptr<const GITProblem>;

struct NamedInvariant {
    std::string name;
    Polynomial expr;          // in the problem registry
    std::vector<long> weight; // diagonal-slot weight vector
    int degree = -1;          // n with weight == n * chi, -1 otherwise
};

// Named generator data for one case. `generators` is the canonical list
// (6 Pluecker / xi_1..xi_8 / zeta_1..zeta_6 / 19 invariants / xi_1..xi_10);
// `degree_one` are the chi-weight tags spanning degree 1 of the graded ring.
struct CaseGenerators {
    ProblemPtr problem;
    std::vector<NamedInvariant> generators;
    std::vector<NamedInvariant> degree_one;
    std::vector<NamedInvariant> auxiliary; // intermediate quantities (xi of [2,2], ...)
    std::vector<PolyMatrix> x_matrices;    // [2,2]: X_1, X_2
    // [1,3]: accepted word triples behind the ups/zeta generators
    std::vector<std::vector<std::size_t>> ups_triples, zeta_triples;
};

CaseGenerators case_generators(const ProblemPtr& P);

// weight per group factor in determinant units: one column for V, one per
// cycle factor; throws when the slot weights within a factor disagree
std::vector<long> character_of(const GITProblem& P, const NamedInvariant& inv);

// nullopt on pass, otherwise the offending derivation label. The fast path
// is identical vanishing of every derivative; a nonzero derivative is first
// refuted by evaluation at valid points and finally by reduction mod the
// nilpotency ideal.
std::optional<std::string> check_semi_invariance(const GITProblem& P, const Polynomial& expr,
                                                 const GroebnerCaps& caps = {});

// induced action of a 4x4 matrix on the second wedge power, basis
// e12, e13, e14, e23, e24, e34
PolyMatrix wedge_square_action(const PolyMatrix& X);

// Gram matrix of the wedge pairing (alpha, beta) -> alpha ^ beta on that basis
QMatrix wedge_gram();

Polynomial wedge_pair(const std::vector<Polynomial>& alpha, const PolyMatrix& M,
                      const std::vector<Polynomial>& beta);

struct GradedPiece {
    int degree = 0;
    RegistryPtr tag_reg;                  // degree_one names
    std::vector<Polynomial> tag_monomials;
    std::vector<Polynomial> slice_forms;  // normal forms on the slice
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> dependencies;
};

// All monomials in degree_one generators of weight n*chi, expanded on the
// slice and reduced; exact basis dimension and dependency space.
GradedPiece semiinvariant_basis(const CaseGenerators& G, int n, const GroebnerBasis& slice_gb);

// dependency-space dimension recomputed by rank of evaluations at random
// valid slice points (>= oversample * monomial count, across all families)
std::size_t evaluation_kernel_dim(const CaseGenerators& G, const GradedPiece& piece,
                                  std::mt19937_64& rng, std::size_t oversample = 3);

// Systematic word enumeration for the length-4 case: pairings <u, M u> over
// all monomials of length 1..4 in the nine commuting induced matrices,
// evaluated on the slice.
struct WordEnumerationReport {
    std::size_t candidates = 0;
    std::size_t nonzero = 0;
    std::size_t span_dim = 0;       // of all candidates
    std::size_t named_span_dim = 0; // of the ten named generators
    std::size_t union_span_dim = 0; // candidates + named together
};

WordEnumerationReport enumerate_type4_invariants(const CaseGenerators& G,
                                                 const GroebnerBasis& slice_gb);

} // namespace ogfiber

#endif
