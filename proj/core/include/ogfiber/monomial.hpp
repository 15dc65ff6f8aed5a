#ifndef OGFIBER_MONOMIAL_HPP
#define OGFIBER_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ogfiber {

// Exponent vector, one slot per registry variable, with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps)
        : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
        std::vector<int> v(nvars, 0);
        v[i] = e;
        return Monomial(std::move(v));
    }

    int degree() const { return degree_; }
    int exp(std::size_t i) const { return exps_[i]; }
    std::size_t nvars() const { return exps_.size(); }
    const std::vector<int>& exps() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + o.exps_[i];
        return Monomial(std::move(v));
    }

    bool divides(const Monomial& o) const {
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility
    Monomial quotient(const Monomial& o) const {
        std::vector<int> v(exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] - o.exps_[i];
        return Monomial(std::move(v));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<int> v(a.exps_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(v));
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// Total order on monomials compatible with multiplication.
// Block orders eliminate a prefix of the registry: any monomial touching a
// prefix variable is larger than any monomial supported on the suffix alone.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    // Prefix = variables [0, split); compared first with prefix_kind, ties by
    // suffix_kind on the rest. Both sub-orders must be non-block.
    static MonomialOrder block(std::size_t split,
                               Kind prefix_kind = Kind::DegRevLex,
                               Kind suffix_kind = Kind::DegRevLex) {
        MonomialOrder o(Kind::Block);
        o.split_ = split;
        o.prefix_kind_ = prefix_kind;
        o.suffix_kind_ = suffix_kind;
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    // negative if a < b, 0 if equal, positive if a > b
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.split_ == b.split_ &&
               a.prefix_kind_ == b.prefix_kind_ && a.suffix_kind_ == b.suffix_kind_;
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    static int cmp_range(Kind k, const std::vector<int>& a, const std::vector<int>& b,
                         std::size_t lo, std::size_t hi);

    Kind kind_;
    std::size_t split_ = 0;
    Kind prefix_kind_ = Kind::DegRevLex;
    Kind suffix_kind_ = Kind::DegRevLex;
};

} // namespace ogfiber

#endif
