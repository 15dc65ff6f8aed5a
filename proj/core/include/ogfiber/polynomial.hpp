#ifndef OGFIBER_POLYNOMIAL_HPP
#define OGFIBER_POLYNOMIAL_HPP

#include "ogfiber/monomial.hpp"
#include "ogfiber/rational.hpp"
#include "ogfiber/registry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ogfiber {

struct Term {
    Monomial mon;
    Rational coeff;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept strictly sorted, descending, under the canonical order
// (degrevlex on the registry's variable order); no zero coefficients ever.
// The representation is the equality test.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

    static const MonomialOrder& canonical_order();

    static Polynomial zero(RegistryPtr reg) { return Polynomial(std::move(reg)); }
    static Polynomial constant(RegistryPtr reg, const Rational& c);
    static Polynomial variable(RegistryPtr reg, std::size_t i, int e = 1);
    static Polynomial variable(RegistryPtr reg, const std::string& name, int e = 1);
    static Polynomial from_term(RegistryPtr reg, Monomial m, Rational c);
    // Accumulates duplicates, drops zeros, sorts canonically.
    static Polynomial from_terms(RegistryPtr reg, std::vector<Term> terms);

    const RegistryPtr& registry() const { return reg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const; // -1 for zero polynomial
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

    const Term& leading_term() const { return terms_.front(); } // canonical order
    const Term& leading_term(const MonomialOrder& ord) const;   // scan when non-canonical

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic total order on canonical forms (tie-breaking in the
    // Groebner engine); lexicographic over (terms, coefficients).
    static int compare(const Polynomial& a, const Polynomial& b);

    Rational coeff_of(const Monomial& m) const;

    // Scale so the canonical leading coefficient is 1.
    Polynomial monic() const;
    // Integer-primitive form with positive canonical leading coefficient.
    Polynomial primitive() const;

    // Ring homomorphism: variable i of this registry maps to images[i], a
    // polynomial over the target registry. Every variable needs an image.
    Polynomial substitute(const RegistryPtr& target,
                          const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Sum of per-variable weight rows over each term; homogeneous input only,
    // nullopt when terms disagree. Zero polynomial: homogeneous of any weight.
    std::optional<std::vector<long>>
    weight(const std::vector<std::vector<long>>& var_weights) const;

    Polynomial derivative(std::size_t var) const;

    std::string str() const;

private:
    RegistryPtr reg_;
    std::vector<Term> terms_;
};

using TermMap = std::map<Monomial, Rational,
                         bool (*)(const Monomial&, const Monomial&)>;
// Descending canonical order key map for assembling polynomials.
TermMap make_term_map();
Polynomial term_map_to_poly(RegistryPtr reg, TermMap&& m);
void add_into(TermMap& m, const Monomial& mon, const Rational& c);

// A derivation D on the polynomial ring: linear, Leibniz, determined by the
// images of the variables.
struct Derivation {
    RegistryPtr reg;
    std::vector<Polynomial> images; // one per registry variable
    std::string label;

    Polynomial apply(const Polynomial& f) const;
};

} // namespace ogfiber

#endif
