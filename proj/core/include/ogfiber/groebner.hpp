#ifndef OGFIBER_GROEBNER_HPP
#define OGFIBER_GROEBNER_HPP

#include "ogfiber/polynomial.hpp"
#include "ogfiber/qlinalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ogfiber {

struct Ideal {
    RegistryPtr reg;
    std::vector<Polynomial> gens; // nonzero, canonical

    static Ideal make(RegistryPtr reg, std::vector<Polynomial> gens);
};

struct GroebnerCaps {
    std::optional<int> max_degree;
    std::optional<double> max_seconds;
};

// Reduced Groebner basis for (ideal, order). When a cap triggers the basis is
// only degree-truncated and must not be treated as complete.
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> basis; // monic, reduced, ascending leading monomials
    bool capped = false;
    int degree_reached = -1; // pair degree fully processed when capped

    bool contains(const Polynomial& f) const; // normal form == 0
};

struct CappedError : std::runtime_error {
    explicit CappedError(const std::string& what) : std::runtime_error(what) {}
};

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord,
                             const GroebnerCaps& caps = {});

// Remainder of multivariate division by G.basis. Zero iff f is in the ideal,
// provided G is complete. Throws CappedError when G is capped and f's degree
// exceeds the truncation degree.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

// Generators of I intersected with the subring omitting the dropped
// variables; the result lives in a fresh registry of the kept variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop,
                const GroebnerCaps& caps = {});

// Kernel of Q[tags] -> Q[source]/modulo, tag_i |-> images[i].
Ideal ring_map_kernel(const std::vector<std::string>& tag_names,
                      const std::vector<Polynomial>& images,
                      const Ideal& modulo,
                      const GroebnerCaps& caps = {});

// Decides membership of f in the subalgebra Q[gens] inside Q[source]/modulo.
// A single elimination-order basis serves any number of queries.
class SubalgebraTester {
public:
    SubalgebraTester(std::vector<std::string> tag_names,
                     std::vector<Polynomial> gens, const Ideal& modulo,
                     const GroebnerCaps& caps = {});

    // Witness polynomial in the tag registry when f is a member.
    std::optional<Polynomial> member(const Polynomial& f) const;

    const RegistryPtr& tag_registry() const { return tag_reg_; }

private:
    RegistryPtr combined_;           // source vars first, tags last
    RegistryPtr tag_reg_;
    std::size_t n_source_;
    GroebnerBasis gb_;
};

// Exact basis of the linear dependency space sum c_i * f_i = 0.
std::vector<std::vector<Rational>>
linear_dependencies(const std::vector<Polynomial>& fs);

// dim span{f_i} over Q
std::size_t linear_span_dim(const std::vector<Polynomial>& fs);

} // namespace ogfiber

#endif
