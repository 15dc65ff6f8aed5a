#include "ogfiber/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ogfiber {

int MonomialOrder::cmp_range(Kind k, const std::vector<int>& a, const std::vector<int>& b,
                             std::size_t lo, std::size_t hi) {
    if (k == Kind::Lex) {
        for (std::size_t i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    // degrevlex
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    switch (kind_) {
    case Kind::Lex:
        return cmp_range(Kind::Lex, ea, eb, 0, ea.size());
    case Kind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return cmp_range(Kind::DegRevLex, ea, eb, 0, ea.size());
    case Kind::Block: {
        int c = cmp_range(prefix_kind_, ea, eb, 0, split_);
        if (c != 0) return c;
        return cmp_range(suffix_kind_, ea, eb, split_, ea.size());
    }
    }
    return 0;
}

const MonomialOrder& Polynomial::canonical_order() {
    static const MonomialOrder ord = MonomialOrder::degrevlex();
    return ord;
}

static bool canonical_desc(const Monomial& a, const Monomial& b) {
    return Polynomial::canonical_order().greater(a, b);
}

TermMap make_term_map() { return TermMap(&canonical_desc); }

void add_into(TermMap& m, const Monomial& mon, const Rational& c) {
    auto [it, fresh] = m.emplace(mon, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

Polynomial term_map_to_poly(RegistryPtr reg, TermMap&& m) {
    std::vector<Term> ts;
    ts.reserve(m.size());
    for (auto& [mon, c] : m) ts.push_back({mon, c});
    return Polynomial::from_terms(std::move(reg), std::move(ts));
}

Polynomial Polynomial::constant(RegistryPtr reg, const Rational& c) {
    Polynomial p(reg);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(reg->size()), c});
    return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, std::size_t i, int e) {
    Polynomial p(reg);
    p.terms_.push_back({Monomial::var(reg->size(), i, e), Rational(1)});
    return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, const std::string& name, int e) {
    std::size_t i = reg->index(name);
    return variable(std::move(reg), i, e);
}

Polynomial Polynomial::from_term(RegistryPtr reg, Monomial m, Rational c) {
    Polynomial p(std::move(reg));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RegistryPtr reg, std::vector<Term> terms) {
    auto m = make_term_map();
    for (auto& t : terms)
        if (!t.coeff.is_zero()) add_into(m, t.mon, t.coeff);
    Polynomial p(std::move(reg));
    p.terms_.reserve(m.size());
    for (auto& [mon, c] : m) p.terms_.push_back({mon, c});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (ord == canonical_order()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (ord.greater(t.mon, best->mon)) best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(reg_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mon, -t.coeff});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (reg_ != o.reg_ && reg_ && o.reg_ && reg_->names() != o.reg_->names())
        throw std::invalid_argument("registry mismatch in +");
    Polynomial out(reg_ ? reg_ : o.reg_);
    auto& r = out.terms_;
    r.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = canonical_order();
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) r.push_back(terms_[i++]);
        else if (c < 0) r.push_back(o.terms_[j++]);
        else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.push_back({terms_[i].mon, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial out(reg_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mon * m, t.coeff * c});
    return out; // multiplying by a fixed monomial preserves the order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    auto m = make_term_map();
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            add_into(m, a.mon * b.mon, a.coeff * b.coeff);
    Polynomial out(reg_ ? reg_ : o.reg_);
    out.terms_.reserve(m.size());
    for (auto& [mon, c] : m) out.terms_.push_back({mon, c});
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(reg_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mon, t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = constant(reg_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    const auto& ord = canonical_order();
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare(a.terms_[i].mon, b.terms_[i].mon);
        if (c != 0) return c;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mon == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    mpz_class den(1), num(0);
    for (const auto& t : terms_) {
        mpz_class d = t.coeff.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    for (const auto& t : terms_) {
        mpz_class scaled_num = t.coeff.numerator() * (den / t.coeff.denominator());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational scale(mpq_class(den, num == 0 ? mpz_class(1) : num));
    if (terms_.front().coeff.sign() < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::substitute(const RegistryPtr& target,
                                  const std::vector<Polynomial>& images) const {
    if (images.size() != reg_->size())
        throw std::invalid_argument("substitute: one image per variable required");
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            int e = t.mon.exp(i);
            if (e > 0) term = term * images[i].pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (int e = 0; e < t.mon.exp(i); ++e) v *= point[i];
            if (v.is_zero()) break;
        }
        acc += v;
    }
    return acc;
}

std::optional<std::vector<long>>
Polynomial::weight(const std::vector<std::vector<long>>& var_weights) const {
    std::size_t slots = var_weights.empty() ? 0 : var_weights[0].size();
    if (terms_.empty()) return std::vector<long>(slots, 0);
    std::optional<std::vector<long>> w;
    for (const auto& t : terms_) {
        std::vector<long> tw(slots, 0);
        for (std::size_t i = 0; i < var_weights.size(); ++i) {
            int e = t.mon.exp(i);
            if (e == 0) continue;
            for (std::size_t k = 0; k < slots; ++k) tw[k] += e * var_weights[i][k];
        }
        if (!w) w = std::move(tw);
        else if (*w != tw) return std::nullopt;
    }
    return w;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(reg_);
    for (const auto& t : terms_) {
        int e = t.mon.exp(var);
        if (e == 0) continue;
        auto v = t.mon.exps();
        v[var] -= 1;
        out.terms_.push_back({Monomial(std::move(v)), t.coeff * Rational(e)});
    }
    return from_terms(reg_, std::move(out.terms_));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (!c.is_one() || t.mon.is_one()) {
            os << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) {
            int e = t.mon.exp(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << reg_->name(i);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Polynomial Derivation::apply(const Polynomial& f) const {
    auto m = make_term_map();
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < reg->size(); ++i) {
            int e = t.mon.exp(i);
            if (e == 0 || images[i].is_zero()) continue;
            auto v = t.mon.exps();
            v[i] -= 1;
            Monomial reduced(std::move(v));
            Rational c = t.coeff * Rational(e);
            for (const auto& it : images[i].terms())
                add_into(m, reduced * it.mon, c * it.coeff);
        }
    }
    std::vector<Term> ts;
    ts.reserve(m.size());
    for (auto& [mon, c] : m) ts.push_back({mon, c});
    return Polynomial::from_terms(reg, std::move(ts));
}

} // namespace ogfiber
