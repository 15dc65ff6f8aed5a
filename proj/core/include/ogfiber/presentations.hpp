#ifndef OGFIBER_PRESENTATIONS_HPP
#define OGFIBER_PRESENTATIONS_HPP

#include "ogfiber/invariants.hpp"

namespace ogfiber {

// Faithful small model of the slice image ring: independent block minors
// plus the lower-triangle letters, modulo the relations that survive
// (a Pluecker form when all six minors occur, and the slice commutators).
// Kernels of tag maps computed here agree with the kernels over the full
// quotient because the invariants are torus semi-invariants and every
// orbit meets the slice.
struct MinorModel {
    RegistryPtr reg;
    Ideal modulo;
    std::vector<Polynomial> coordinate_images; // per reg variable, over slice_reg
    std::vector<Polynomial> degree_one;        // aligned with CaseGenerators::degree_one
    std::vector<Polynomial> generators;        // aligned with CaseGenerators::generators
};

MinorModel minor_model(const CaseGenerators& G);

// substitution consistency of the model against the honest slice images
bool minor_model_consistent(const CaseGenerators& G, const MinorModel& M,
                            const GroebnerBasis& slice_gb);

enum class PresentationStatus { Full, VerifiedToDegree };

struct RingPresentation {
    CycleType cycle;
    RegistryPtr tag_reg;
    std::vector<Polynomial> relations;    // minimal generators found
    std::vector<std::size_t> kernel_dims; // graded kernel dimension per degree 1..d
    PresentationStatus status = PresentationStatus::VerifiedToDegree;
    int verified_degree = 0;
};

// graded kernel among the degree-one tags through degree d
RingPresentation relations_upto_degree(const CaseGenerators& G, int d,
                                       const GroebnerBasis& slice_gb);

// Complete kernel by elimination over the minor model. Tags are the
// degree-one generators except for [1,1,2], where the interesting kernel
// is the one among xi_1..xi_8. The length-4 case is refused unless
// allow_heavy is set; use caps to bound it.
RingPresentation full_kernel(const CaseGenerators& G, const GroebnerCaps& caps = {},
                             bool allow_heavy = false);

// the closed-form relation ideals, in the same tag registry full_kernel uses
std::vector<Polynomial> expected_relations(const CaseGenerators& G, const RegistryPtr& tag_reg);

// mutual membership of generators
bool same_ideal(const Ideal& A, const Ideal& B, const GroebnerCaps& caps = {});

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// the per-case verification battery: stated relations vanish on the slice,
// kernel/statement ideal equality (degree-bounded for length 4), and the
// auxiliary identities
std::vector<CheckResult> verify_case(const CaseGenerators& G, const GroebnerCaps& caps = {});

struct QuadricReport {
    std::size_t nvars = 0;
    std::size_t gram_rank = 0;
    int singular_dim = -1; // projective dimension of the singular locus
    bool section_analyzed = false;
    bool section_smooth = false;
};

// `section` substitutes one tag by a linear form in the others (index,
// replacement) and reports smoothness of the restricted quadric
QuadricReport quadric_report(const Polynomial& form,
                             const std::optional<std::pair<std::size_t, Polynomial>>& section =
                                 std::nullopt);

struct ScrollModel {
    RegistryPtr fiber_reg;                // t1, t2, z1..z5
    std::vector<Polynomial> pullbacks;    // of the three hypersurface forms
    Polynomial strict_transform;          // (t2^2 z1 - 2 t1 t2 z2 + t1^2 z3) z4 - z5^2
    bool minors_pull_to_zero = false;
    bool pullbacks_divide = false;        // pullbacks = t2^2 L, t1 t2 L, t1^2 L
    std::vector<bool> fiber_vertex_line;  // singular locus is the predicted line
    bool envelope_ok = false;             // elimination in both charts gives x1 x3 - x2^2
};

ScrollModel scroll_check(const CaseGenerators& G, const GroebnerCaps& caps = {});

// graded dimensions of Q[tags]/(relations), n = 0..n_max, exact linear algebra
std::vector<std::size_t> hilbert_values(const RegistryPtr& tag_reg,
                                        const std::vector<Polynomial>& relations, int n_max);

} // namespace ogfiber

#endif
