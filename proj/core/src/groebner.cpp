#include "ogfiber/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace ogfiber {

Ideal Ideal::make(RegistryPtr reg, std::vector<Polynomial> gens) {
    Ideal I;
    I.reg = std::move(reg);
    for (auto& g : gens)
        if (!g.is_zero()) I.gens.push_back(std::move(g));
    return I;
}

namespace {

// engine-internal polynomial: terms sorted descending by the engine order
using OPoly = std::vector<Term>;

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
    OPoly t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mon, b.mon);
    });
    return t;
}

Polynomial from_opoly(const RegistryPtr& reg, const OPoly& t) {
    return Polynomial::from_terms(reg, std::vector<Term>(t.begin(), t.end()));
}

// f - c * m * g, all sorted by ord
OPoly subtract_mul(const OPoly& f, const Rational& c, const Monomial& m,
                   const OPoly& g, const MonomialOrder& ord) {
    OPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mon * m;
        int cmp = ord.compare(f[i].mon, gm);
        if (cmp > 0) out.push_back(f[i++]);
        else if (cmp < 0) {
            out.push_back({std::move(gm), -(c * g[j].coeff)});
            ++j;
        } else {
            Rational s = f[i].coeff - c * g[j].coeff;
            if (!s.is_zero()) out.push_back({f[i].mon, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mon * m, -(c * g[j].coeff)});
    return out;
}

void make_primitive(OPoly& f) {
    if (f.empty()) return;
    mpz_class den(1);
    for (const auto& t : f) {
        mpz_class d = t.coeff.denominator(), g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    mpz_class num(0);
    for (const auto& t : f) {
        mpz_class n = t.coeff.numerator() * (den / t.coeff.denominator());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    if (num == 0) num = 1;
    Rational scale{mpq_class(den, num)};
    if (f.front().coeff.sign() < 0) scale = -scale;
    for (auto& t : f) t.coeff *= scale;
}

// full reduction (head and tail) of f by G
OPoly reduce_full(OPoly f, const std::vector<OPoly>& G, const MonomialOrder& ord) {
    OPoly done;
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.empty()) continue;
            if (g.front().mon.divides(f.front().mon)) {
                Monomial q = f.front().mon.quotient(g.front().mon);
                Rational c = f.front().coeff / g.front().coeff;
                f = subtract_mul(f, c, q, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.push_back(std::move(f.front()));
            f.erase(f.begin());
        }
    }
    return done;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
};

struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord,
                             const GroebnerCaps& caps) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto timed_out = [&] {
        if (!caps.max_seconds) return false;
        return std::chrono::duration<double>(clock::now() - t0).count() > *caps.max_seconds;
    };

    GroebnerBasis out;
    out.ideal = I;
    out.order = ord;

    std::vector<OPoly> G;
    // deterministic input normalization: canonical sort, dedupe
    std::vector<Polynomial> gens = I.gens;
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return Polynomial::compare(a, b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        OPoly og = to_opoly(g, ord);
        make_primitive(og);
        G.push_back(std::move(og));
    }

    std::multiset<Pair, PairCmp> pairs{PairCmp{&out.order}};
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (G[i].empty()) continue;
            Monomial l = Monomial::lcm(G[i].front().mon, G[k].front().mon);
            pairs.insert({i, k, l, l.degree()});
        }
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs_for(k);

    bool capped = false;
    int processed_deg = 0;

    auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (const auto& p : pairs)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pairs.empty()) {
        if (timed_out()) { capped = true; break; }
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());

        if (caps.max_degree && p.deg > *caps.max_degree) {
            capped = true;
            continue; // drop pairs above the truncation degree
        }
        processed_deg = std::max(processed_deg, p.deg);

        const Monomial& lmi = G[p.i].front().mon;
        const Monomial& lmj = G[p.j].front().mon;
        // Buchberger 1: coprime leading monomials
        if (Monomial::coprime(lmi, lmj)) continue;
        // chain criterion: some k with LM_k | lcm and both sub-pairs settled
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j || G[k].empty()) continue;
            if (!G[k].front().mon.divides(p.lcm)) continue;
            if (!pending(p.i, k) && !pending(p.j, k)) skip = true;
        }
        if (skip) continue;

        // S-polynomial
        Monomial qi = p.lcm.quotient(lmi), qj = p.lcm.quotient(lmj);
        OPoly s;
        {
            OPoly a;
            a.reserve(G[p.i].size());
            for (const auto& t : G[p.i]) a.push_back({t.mon * qi, t.coeff / G[p.i].front().coeff});
            s = subtract_mul(a, G[p.j].front().coeff.inverse(), qj, G[p.j], ord);
        }
        s = reduce_full(std::move(s), G, ord);
        if (s.empty()) continue;
        make_primitive(s);
        G.push_back(std::move(s));
        push_pairs_for(G.size() - 1);
    }

    // interreduce: drop redundant leading monomials, reduce tails, monic
    std::vector<OPoly> R;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].front().mon.divides(G[i].front().mon)) {
                if (G[j].front().mon == G[i].front().mon && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) R.push_back(G[i]);
    }
    std::vector<OPoly> final_basis;
    for (std::size_t i = 0; i < R.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t j = 0; j < R.size(); ++j)
            if (j != i) others.push_back(R[j]);
        OPoly r = reduce_full(R[i], others, ord);
        if (r.empty()) continue;
        Rational inv = r.front().coeff.inverse();
        for (auto& t : r) t.coeff *= inv;
        final_basis.push_back(std::move(r));
    }
    std::sort(final_basis.begin(), final_basis.end(), [&](const OPoly& a, const OPoly& b) {
        return ord.less(a.front().mon, b.front().mon);
    });

    for (const auto& g : final_basis) out.basis.push_back(from_opoly(I.reg, g));
    out.capped = capped;
    out.degree_reached = capped ? processed_deg : -1;
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.capped && G.degree_reached >= 0 && f.degree() > G.degree_reached)
        throw CappedError("normal_form against a capped basis above its degree");
    std::vector<OPoly> basis;
    for (const auto& g : G.basis) basis.push_back(to_opoly(g, G.order));
    OPoly r = reduce_full(to_opoly(f, G.order), basis, G.order);
    return from_opoly(f.registry(), r);
}

bool GroebnerBasis::contains(const Polynomial& f) const {
    return normal_form(f, *this).is_zero();
}

namespace {

// move `front` variables to the head of a fresh registry, keep the rest in
// registry order; returns (new registry, old index -> new index permutation)
std::pair<RegistryPtr, std::vector<std::size_t>>
reorder_registry(const RegistryPtr& reg, const std::vector<std::string>& front) {
    std::vector<bool> is_front(reg->size(), false);
    std::vector<std::string> names;
    for (const auto& n : front) {
        is_front[reg->index(n)] = true;
        names.push_back(n);
    }
    for (std::size_t i = 0; i < reg->size(); ++i)
        if (!is_front[i]) names.push_back(reg->name(i));
    auto nr = make_registry(names);
    std::vector<std::size_t> perm(reg->size());
    for (std::size_t i = 0; i < reg->size(); ++i) perm[i] = nr->index(reg->name(i));
    return {nr, perm};
}

Polynomial permute_vars(const Polynomial& p, const RegistryPtr& target,
                        const std::vector<std::size_t>& perm) {
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<int> e(target->size(), 0);
        for (std::size_t i = 0; i < perm.size(); ++i) e[perm[i]] = t.mon.exp(i);
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(ts));
}

// restrict a polynomial supported on trailing variables [k, n) to a fresh
// registry of those variables
Polynomial restrict_tail(const Polynomial& p, std::size_t k, const RegistryPtr& tail_reg) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        std::vector<int> e(tail_reg->size(), 0);
        for (std::size_t i = 0; i < k; ++i)
            if (t.mon.exp(i) != 0) throw std::logic_error("restrict_tail: head variable present");
        for (std::size_t i = k; i < t.mon.nvars(); ++i) e[i - k] = t.mon.exp(i);
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(tail_reg, std::move(ts));
}

bool supported_on_tail(const Polynomial& p, std::size_t k) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < k; ++i)
            if (t.mon.exp(i) != 0) return false;
    return true;
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop,
                const GroebnerCaps& caps) {
    auto [reordered, perm] = reorder_registry(I.reg, drop);
    std::size_t k = drop.size();

    Ideal J;
    J.reg = reordered;
    for (const auto& g : I.gens) J.gens.push_back(permute_vars(g, reordered, perm));

    auto ord = MonomialOrder::block(k);
    GroebnerBasis G = groebner_basis(J, ord, caps);
    if (G.capped) throw CappedError("eliminate: basis computation capped");

    std::vector<std::string> kept(reordered->names().begin() + k, reordered->names().end());
    auto kept_reg = make_registry(kept);
    Ideal out;
    out.reg = kept_reg;
    for (const auto& g : G.basis)
        if (supported_on_tail(g, k)) out.gens.push_back(restrict_tail(g, k, kept_reg));
    return out;
}

namespace {

// combined registry: source variables first (eliminated), tags last
struct KernelSetup {
    RegistryPtr combined;
    std::vector<std::size_t> src_perm; // source idx -> combined idx
    std::size_t n_source;
};

KernelSetup combine(const RegistryPtr& source, const std::vector<std::string>& tags) {
    std::vector<std::string> names = source->names();
    for (const auto& t : tags) {
        if (source->contains(t))
            throw std::invalid_argument("tag collides with source variable: " + t);
        names.push_back(t);
    }
    KernelSetup s;
    s.combined = make_registry(names);
    s.n_source = source->size();
    s.src_perm.resize(source->size());
    for (std::size_t i = 0; i < source->size(); ++i) s.src_perm[i] = i;
    return s;
}

} // namespace

Ideal ring_map_kernel(const std::vector<std::string>& tag_names,
                      const std::vector<Polynomial>& images,
                      const Ideal& modulo,
                      const GroebnerCaps& caps) {
    if (tag_names.size() != images.size())
        throw std::invalid_argument("ring_map_kernel: tag/image count mismatch");
    const RegistryPtr& src = modulo.reg;
    KernelSetup s = combine(src, tag_names);

    Ideal J;
    J.reg = s.combined;
    for (const auto& g : modulo.gens) J.gens.push_back(permute_vars(g, s.combined, s.src_perm));
    for (std::size_t t = 0; t < tag_names.size(); ++t) {
        Polynomial tag = Polynomial::variable(s.combined, s.n_source + t);
        J.gens.push_back(tag - permute_vars(images[t], s.combined, s.src_perm));
    }

    auto ord = MonomialOrder::block(s.n_source);
    GroebnerBasis G = groebner_basis(J, ord, caps);
    if (G.capped) throw CappedError("ring_map_kernel: basis computation capped");

    auto tag_reg = make_registry(tag_names);
    Ideal out;
    out.reg = tag_reg;
    for (const auto& g : G.basis)
        if (supported_on_tail(g, s.n_source))
            out.gens.push_back(restrict_tail(g, s.n_source, tag_reg));
    return out;
}

SubalgebraTester::SubalgebraTester(std::vector<std::string> tag_names,
                                   std::vector<Polynomial> gens, const Ideal& modulo,
                                   const GroebnerCaps& caps) {
    KernelSetup s = combine(modulo.reg, tag_names);
    combined_ = s.combined;
    n_source_ = s.n_source;
    tag_reg_ = make_registry(tag_names);

    Ideal J;
    J.reg = combined_;
    for (const auto& g : modulo.gens) J.gens.push_back(permute_vars(g, combined_, s.src_perm));
    for (std::size_t t = 0; t < tag_names.size(); ++t) {
        Polynomial tag = Polynomial::variable(combined_, n_source_ + t);
        J.gens.push_back(tag - permute_vars(gens[t], combined_, s.src_perm));
    }
    gb_ = groebner_basis(J, MonomialOrder::block(n_source_), caps);
    if (gb_.capped) throw CappedError("subalgebra tester: basis computation capped");
}

std::optional<Polynomial> SubalgebraTester::member(const Polynomial& f) const {
    std::vector<std::size_t> perm(f.registry()->size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Polynomial nf = normal_form(permute_vars(f, combined_, perm), gb_);
    if (!supported_on_tail(nf, n_source_)) return std::nullopt;
    return restrict_tail(nf, n_source_, tag_reg_);
}

std::vector<std::vector<Rational>>
linear_dependencies(const std::vector<Polynomial>& fs) {
    // column space basis over the union of monomials, canonical order
    auto cmp = [](const Monomial& a, const Monomial& b) {
        return Polynomial::canonical_order().less(a, b);
    };
    std::map<Monomial, std::size_t, decltype(cmp)> rowidx(cmp);
    for (const auto& f : fs)
        for (const auto& t : f.terms())
            rowidx.emplace(t.mon, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rowidx) idx = r++;

    QMatrix M(rowidx.size(), fs.size());
    for (std::size_t c = 0; c < fs.size(); ++c)
        for (const auto& t : fs[c].terms())
            M.at(rowidx[t.mon], c) = t.coeff;
    return M.nullspace();
}

std::size_t linear_span_dim(const std::vector<Polynomial>& fs) {
    return fs.size() - linear_dependencies(fs).size();
}

} // namespace ogfiber
