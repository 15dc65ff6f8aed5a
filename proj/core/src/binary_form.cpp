#include "ogfiber/binary_form.hpp"

#include <algorithm>

namespace ogfiber {

namespace {

using ZPoly = std::vector<mpz_class>; // coefficient of t^i at index i

void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zpoly_content(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? mpz_class(1) : g;
}

ZPoly zpoly_primitive(ZPoly p) {
    zpoly_trim(p);
    if (p.empty()) return p;
    mpz_class g = zpoly_content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
ZPoly zpoly_prem(ZPoly a, const ZPoly& b) {
    mpz_class lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        zpoly_trim(a);
    }
    return a;
}

// primitive PRS gcd (subresultant-style remainder sequence with content
// removal at each step; exact over Z)
ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = zpoly_primitive(std::move(a));
    b = zpoly_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zpoly_prem(a, b);
        a = std::move(b);
        b = zpoly_primitive(std::move(r));
    }
    return zpoly_primitive(std::move(a));
}

} // namespace

Polynomial binary_form_gcd(const std::vector<Polynomial>& forms,
                           std::size_t var1, std::size_t var2) {
    if (forms.empty()) throw std::invalid_argument("binary_form_gcd: empty input");
    const RegistryPtr& reg = forms.front().registry();
    std::size_t nv = reg->size();

    int min_a = -1, min_b = -1; // common extracted powers of var1, var2
    ZPoly acc;                  // gcd of dehomogenized cofactors
    bool any = false;

    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        int a = INT32_MAX, b = INT32_MAX, dmax = 0;
        for (const auto& t : f.terms()) {
            for (std::size_t i = 0; i < nv; ++i)
                if (i != var1 && i != var2 && t.mon.exp(i) != 0)
                    throw std::invalid_argument("form involves a third variable");
            a = std::min(a, t.mon.exp(var1));
            b = std::min(b, t.mon.exp(var2));
            dmax = std::max(dmax, t.mon.degree());
        }
        // homogeneity check
        for (const auto& t : f.terms())
            if (t.mon.degree() != dmax)
                throw std::invalid_argument("form not homogeneous");
        // cofactor degree after stripping var1^a * var2^b
        int d = dmax - a - b;
        // dehomogenize cofactor at var2 = 1; integerize
        mpz_class den(1);
        for (const auto& t : f.terms()) {
            mpz_class dd = t.coeff.denominator(), g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), dd.get_mpz_t());
            den = den / g * dd;
        }
        ZPoly p(d + 1, mpz_class(0));
        for (const auto& t : f.terms()) {
            int e1 = t.mon.exp(var1) - a;
            p[e1] += t.coeff.numerator() * (den / t.coeff.denominator());
        }
        zpoly_trim(p);

        if (!any) {
            min_a = a;
            min_b = b;
            acc = zpoly_primitive(std::move(p));
            any = true;
        } else {
            min_a = std::min(min_a, a);
            min_b = std::min(min_b, b);
            acc = zpoly_gcd(std::move(acc), std::move(p));
        }
        if (min_a == 0 && min_b == 0 && acc.size() == 1) break; // gcd already 1
    }
    if (!any) throw AllFormsZero();

    // rehomogenize: acc(t) of degree e -> sum acc[j] * var1^j var2^(e-j),
    // then restore the common monomial factor
    int e = (int)acc.size() - 1;
    std::vector<Term> ts;
    for (int j = 0; j <= e; ++j) {
        if (acc[j] == 0) continue;
        std::vector<int> exps(nv, 0);
        exps[var1] = j + min_a;
        exps[var2] = (e - j) + min_b;
        ts.push_back({Monomial(std::move(exps)), Rational(mpq_class(acc[j]))});
    }
    Polynomial g = Polynomial::from_terms(reg, std::move(ts));
    const Term& lead = g.leading_term(MonomialOrder::lex());
    return g.scaled(lead.coeff.inverse());
}

} // namespace ogfiber
