#ifndef OGFIBER_STABILITY_HPP
#define OGFIBER_STABILITY_HPP

#include "ogfiber/gitmodel.hpp"
#include "ogfiber/invariants.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ogfiber {

enum class Verdict { Stable, StrictlySemistable, Unstable };
enum class Stratum { Sigma0, Sigma1 };

std::string verdict_str(Verdict v);
std::string stratum_str(Stratum s);

// Exact rank-for-all-lines certificate. M(w) is the block matrix whose
// factor-k block has columns (A_k^i B_k^j) psi_k w over the word exponents,
// with w = (w1, w2) symbolic; its minors are binary forms in w1, w2.
// gcd2/gcd3 are the gcds of the 2x2 and 3x3 minor families, nullopt when the
// whole family vanishes identically (rank drops at every line).
struct StabilityReport {
    Verdict verdict = Verdict::Unstable;
    bool surjective = false;
    RegistryPtr w_reg;
    std::optional<Polynomial> gcd2, gcd3;
};

// Ground truth: semistable iff the map is surjective and every line of V
// generates a length >= 2 submodule; stable iff length > 2. Throws
// invalid_argument when p violates the nilpotency ideal.
StabilityReport semistability_status(const GITProblem& P, const PointY& p);

// One-parameter-subgroup certificate after the base change g. The two
// conditions are exact: the limit of lambda_r(t) . (g . p) exists and the
// character pairing is negative (zero with nonconstant r only refutes
// stability, never semistability).
struct DestabilizerCertificate {
    OnePS r;
    GroupElement g;
    int pairing_value = 0;
};

bool certifies_unstable(const GITProblem& P, const PointY& p, const OnePS& r);
bool certifies_not_stable(const GITProblem& P, const PointY& p, const OnePS& r);

// Randomized search over integer vectors in [-box, box]^slots, tried at the
// identity first and then after `trials` random rational base changes.
// Candidates are scanned by ascending 1-norm, then lexicographically; the
// first vector passing the certificate conditions is returned. none-found is
// not a stability proof.
std::optional<DestabilizerCertificate>
destabilizer_search(const GITProblem& P, const PointY& p, int box, int trials,
                    std::mt19937_64& rng);

// Strictly semistable points fall into the boundary stratum with 0- or
// 1-dimensional associated cycle data; the test is per-case coordinate logic
// in the generator tags. Throws invalid_argument unless the point is
// strictly semistable.
struct StratumReport {
    Stratum stratum = Stratum::Sigma0;
    std::vector<std::pair<std::string, Rational>> coords;
};

StratumReport classify_stratum(const GITProblem& P, const CaseGenerators& G,
                               const PointY& p);

} // namespace ogfiber

#endif
