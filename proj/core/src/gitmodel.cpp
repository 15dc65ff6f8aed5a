#include "ogfiber/gitmodel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ogfiber {

int CycleType::total() const {
    int n = 0;
    for (int m : mults) n += m;
    return n;
}

CycleType CycleType::parse(const std::string& csv) {
    CycleType c;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int m = std::stoi(tok, &pos);
        if (pos != tok.size() || m <= 0)
            throw std::invalid_argument("bad multiplicity: " + tok);
        c.mults.push_back(m);
    }
    if (c.mults.empty()) throw std::invalid_argument("empty cycle type");
    return c;
}

std::string CycleType::str() const {
    std::string s;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(mults[i]);
    }
    return s;
}

std::vector<std::pair<int, int>> enumerate_words(int m) {
    std::vector<std::pair<int, int>> out;
    for (int d = 1; d < m; ++d)
        for (int i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

namespace {

const char kRowLetters[] = {'x', 'y', 'z', 'w', 'v', 'u', 's', 'r'};

std::string psi_var_name(const FactorInfo& f, int local_row, int col) {
    if (f.m == 1) return std::string(1, f.letter) + std::to_string(col);
    return std::string(1, f.letter) + std::to_string(local_row) + std::to_string(col);
}

// full-registry nilpotent entry name, 1-based indices
std::string nil_var_name(const std::string& prefix, int i, int j) {
    return prefix + std::to_string(i) + std::to_string(j);
}

// strictly lower entries in row-major order, matching the per-case letters
// of the evaluation formulas: m=2 gives {a}, m=3 {a1,a2,a3}, m=4 {a1..a6}
std::vector<std::pair<int, int>> lower_positions(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < i; ++j) out.push_back({i, j});
    return out;
}

std::string slice_var_name(const std::string& base, int m, std::size_t pos_index,
                           bool single_entry_suffix, int suffix) {
    if (m == 2) {
        std::string s = base;
        if (single_entry_suffix) s += std::to_string(suffix);
        return s;
    }
    return base + std::to_string(pos_index + 1);
}

// symbolic nilpotent matrix with the last diagonal entry eliminated by the
// trace; entry names must exist in reg
PolyMatrix symbolic_nilpotent(const RegistryPtr& reg, const std::string& prefix, int m) {
    PolyMatrix M(m, m, reg);
    Polynomial diag_sum = Polynomial::zero(reg);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == m && j == m) continue;
            Polynomial v = Polynomial::variable(reg, reg->index(nil_var_name(prefix, i, j)));
            M.at(i - 1, j - 1) = v;
            if (i == j) diag_sum = diag_sum + v;
        }
    M.at(m - 1, m - 1) = -diag_sum;
    return M;
}

} // namespace

PolyMatrix GITProblem::psi() const {
    int n = cycle.total();
    PolyMatrix M(n, 2, reg);
    for (const auto& f : factors)
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                M.at(f.row_offset + r - 1, c - 1) =
                    Polynomial::variable(reg, reg->index(psi_var_name(f, r, c)));
    return M;
}

PolyMatrix GITProblem::nilpotent(std::size_t factor, char which) const {
    const auto& f = factors.at(factor);
    if (f.m == 1) throw std::invalid_argument("multiplicity-1 factor has no nilpotent block");
    return symbolic_nilpotent(reg, which == 'a' ? f.a_prefix : f.b_prefix, f.m);
}

PolyMatrix GITProblem::slice_psi() const {
    int n = cycle.total();
    PolyMatrix M(n, 2, slice_reg);
    for (const auto& f : factors)
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                M.at(f.row_offset + r - 1, c - 1) =
                    Polynomial::variable(slice_reg, slice_reg->index(psi_var_name(f, r, c)));
    return M;
}

PolyMatrix GITProblem::slice_nilpotent(std::size_t factor, char which) const {
    const auto& f = factors.at(factor);
    if (f.m == 1) throw std::invalid_argument("multiplicity-1 factor has no nilpotent block");
    // reconstruct the slice names the same way the builder did
    int nontrivial = 0, suffix = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].m > 1) {
            ++nontrivial;
            if (k <= factor) ++suffix;
        }
    }
    bool need_suffix = nontrivial > 1;
    std::string base(1, which);
    auto pos = lower_positions(f.m);
    PolyMatrix M(f.m, f.m, slice_reg);
    for (std::size_t k = 0; k < pos.size(); ++k) {
        std::string nm = slice_var_name(base, f.m, k, need_suffix, suffix);
        if (f.m > 2 && need_suffix) nm = base + std::to_string(suffix) + "_" + std::to_string(k + 1);
        M.at(pos[k].first - 1, pos[k].second - 1) =
            Polynomial::variable(slice_reg, slice_reg->index(nm));
    }
    return M;
}

Polynomial GITProblem::to_slice(const Polynomial& f) const {
    return f.substitute(slice_reg, slice_images);
}

GITProblem build_problem(const CycleType& cycle) {
    if (cycle.mults.empty()) throw std::invalid_argument("empty cycle type");
    GITProblem P;
    P.cycle = cycle;

    // factor layout and name prefixes
    int off = 0;
    int nontrivial = 0;
    for (int m : cycle.mults)
        if (m > 1) ++nontrivial;
    int nt_seen = 0;
    for (std::size_t k = 0; k < cycle.mults.size(); ++k) {
        FactorInfo f;
        f.m = cycle.mults[k];
        f.row_offset = off;
        f.letter = kRowLetters[k % (sizeof kRowLetters)];
        if (f.m > 1) {
            ++nt_seen;
            std::string suf = nontrivial > 1 ? std::to_string(nt_seen) + "_" : "";
            f.a_prefix = "a" + suf;
            f.b_prefix = "b" + suf;
        }
        off += f.m;
        P.factors.push_back(f);
    }

    // registry: psi entries row by row, then nilpotent entries factor by factor
    std::vector<std::string> names;
    for (const auto& f : P.factors)
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c) names.push_back(psi_var_name(f, r, c));
    std::size_t n_psi = names.size();
    for (const auto& f : P.factors) {
        if (f.m == 1) continue;
        for (const std::string& pre : {f.a_prefix, f.b_prefix})
            for (int i = 1; i <= f.m; ++i)
                for (int j = 1; j <= f.m; ++j) {
                    if (i == f.m && j == f.m) continue;
                    names.push_back(nil_var_name(pre, i, j));
                }
    }
    P.reg = make_registry(names);

    // nilpotency ideal
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        PolyMatrix A = P.nilpotent(k, 'a'), B = P.nilpotent(k, 'b');
        PolyMatrix comm = A * B - B * A;
        for (std::size_t i = 0; i < comm.rows(); ++i)
            for (std::size_t j = 0; j < comm.cols(); ++j)
                if (!comm.at(i, j).is_zero()) gens.push_back(comm.at(i, j));
        for (int i = 0; i <= f.m; ++i) {
            PolyMatrix W = A.pow(i) * B.pow(f.m - i);
            for (std::size_t r = 0; r < W.rows(); ++r)
                for (std::size_t c = 0; c < W.cols(); ++c)
                    if (!W.at(r, c).is_zero()) gens.push_back(W.at(r, c));
        }
    }
    P.nilpotency = Ideal::make(P.reg, std::move(gens));

    // slot weights: slot 0,1 for V columns; slot 2+row for each psi row
    std::size_t n_slots = P.n_slots();
    auto weight_of = [&](int row_slot, int col_slot) {
        std::vector<int> w(n_slots, 0);
        w[row_slot] += 1;
        w[col_slot] -= 1;
        return w;
    };
    P.weights.assign(P.reg->size(), {});
    for (const auto& f : P.factors)
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                P.weights[P.reg->index(psi_var_name(f, r, c))] =
                    weight_of(2 + f.row_offset + r - 1, c - 1);
    for (const auto& f : P.factors) {
        if (f.m == 1) continue;
        for (const std::string& pre : {f.a_prefix, f.b_prefix})
            for (int i = 1; i <= f.m; ++i)
                for (int j = 1; j <= f.m; ++j) {
                    if (i == f.m && j == f.m) continue;
                    P.weights[P.reg->index(nil_var_name(pre, i, j))] =
                        weight_of(2 + f.row_offset + i - 1, 2 + f.row_offset + j - 1);
                }
    }
    P.chi.assign(n_slots, 1);
    P.chi[0] = P.chi[1] = -2;

    // sl(V) derivations: X acts by psi -> -psi X, nilpotent data untouched
    {
        PolyMatrix psi = P.psi();
        auto make_slV = [&](const std::vector<std::vector<Rational>>& X, const std::string& lbl) {
            PolyMatrix Xm(2, 2, P.reg);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) Xm.at(i, j) = Polynomial::constant(P.reg, X[i][j]);
            PolyMatrix img = (psi * Xm).scaled(Rational(-1));
            Derivation D;
            D.reg = P.reg;
            D.label = lbl;
            D.images.assign(P.reg->size(), Polynomial::zero(P.reg));
            for (const auto& f : P.factors)
                for (int r = 1; r <= f.m; ++r)
                    for (int c = 1; c <= 2; ++c)
                        D.images[P.reg->index(psi_var_name(f, r, c))] =
                            img.at(f.row_offset + r - 1, c - 1);
            P.sl_derivations.push_back(std::move(D));
        };
        Rational o(0), l(1), ml(-1);
        make_slV({{o, l}, {o, o}}, "sl(V):E");
        make_slV({{o, o}, {l, o}}, "sl(V):F");
        make_slV({{l, o}, {o, ml}}, "sl(V):H");
    }

    // per-factor sl(W) derivations: X acts by psi_f -> X psi_f and
    // (A,B) -> ([X,A],[X,B])
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        PolyMatrix psi = P.psi();
        PolyMatrix A = P.nilpotent(k, 'a'), B = P.nilpotent(k, 'b');
        auto make_slW = [&](const QMatrix& X, const std::string& lbl) {
            PolyMatrix Xm(f.m, f.m, P.reg);
            for (int i = 0; i < f.m; ++i)
                for (int j = 0; j < f.m; ++j)
                    Xm.at(i, j) = Polynomial::constant(P.reg, X.at(i, j));
            Derivation D;
            D.reg = P.reg;
            D.label = lbl;
            D.images.assign(P.reg->size(), Polynomial::zero(P.reg));
            for (int r = 1; r <= f.m; ++r)
                for (int c = 1; c <= 2; ++c) {
                    Polynomial s = Polynomial::zero(P.reg);
                    for (int t = 1; t <= f.m; ++t)
                        s = s + Xm.at(r - 1, t - 1) * psi.at(f.row_offset + t - 1, c - 1);
                    D.images[P.reg->index(psi_var_name(f, r, c))] = s;
                }
            PolyMatrix dA = Xm * A - A * Xm, dB = Xm * B - B * Xm;
            for (const auto& [pre, dM] : {std::pair{f.a_prefix, dA}, std::pair{f.b_prefix, dB}})
                for (int i = 1; i <= f.m; ++i)
                    for (int j = 1; j <= f.m; ++j) {
                        if (i == f.m && j == f.m) continue;
                        D.images[P.reg->index(nil_var_name(pre, i, j))] = dM.at(i - 1, j - 1);
                    }
            P.sl_derivations.push_back(std::move(D));
        };
        std::string wl = "sl(W" + std::to_string(k + 1) + "):";
        for (int i = 0; i < f.m; ++i)
            for (int j = 0; j < f.m; ++j) {
                if (i == j) continue;
                QMatrix X(f.m, f.m);
                X.at(i, j) = Rational(1);
                make_slW(X, wl + "E" + std::to_string(i + 1) + std::to_string(j + 1));
            }
        for (int i = 0; i + 1 < f.m; ++i) {
            QMatrix X(f.m, f.m);
            X.at(i, i) = Rational(1);
            X.at(i + 1, i + 1) = Rational(-1);
            make_slW(X, wl + "H" + std::to_string(i + 1));
        }
    }

    // slice registry: psi names plus strictly lower entries per factor
    std::vector<std::string> snames(names.begin(), names.begin() + n_psi);
    nt_seen = 0;
    std::vector<std::vector<std::string>> slice_nil_names(P.factors.size());
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        ++nt_seen;
        bool need_suffix = nontrivial > 1;
        auto pos = lower_positions(f.m);
        for (const std::string& base : {std::string("a"), std::string("b")}) {
            std::vector<std::string> row;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                std::string nm;
                if (f.m == 2)
                    nm = need_suffix ? base + std::to_string(nt_seen) : base;
                else if (need_suffix)
                    nm = base + std::to_string(nt_seen) + "_" + std::to_string(i + 1);
                else
                    nm = base + std::to_string(i + 1);
                row.push_back(nm);
                snames.push_back(nm);
            }
            slice_nil_names[k].insert(slice_nil_names[k].end(), row.begin(), row.end());
        }
    }
    P.slice_reg = make_registry(snames);

    // substitution full -> slice: psi fixed, lower entries renamed, the rest 0
    P.slice_images.assign(P.reg->size(), Polynomial::zero(P.slice_reg));
    for (std::size_t i = 0; i < n_psi; ++i)
        P.slice_images[i] = Polynomial::variable(P.slice_reg, P.slice_reg->index(names[i]));
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        auto pos = lower_positions(f.m);
        for (std::size_t w = 0; w < 2; ++w) {
            const std::string& pre = w == 0 ? f.a_prefix : f.b_prefix;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                const std::string& snm = slice_nil_names[k][w * pos.size() + i];
                P.slice_images[P.reg->index(nil_var_name(pre, pos[i].first, pos[i].second))] =
                    Polynomial::variable(P.slice_reg, P.slice_reg->index(snm));
            }
        }
    }

    // slice ideal: commutator entries of the generic slice pairs
    std::vector<Polynomial> sgens;
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        if (P.factors[k].m == 1) continue;
        PolyMatrix A = P.slice_nilpotent(k, 'a'), B = P.slice_nilpotent(k, 'b');
        PolyMatrix comm = A * B - B * A;
        for (std::size_t i = 0; i < comm.rows(); ++i)
            for (std::size_t j = 0; j < comm.cols(); ++j)
                if (!comm.at(i, j).is_zero()) sgens.push_back(comm.at(i, j));
    }
    P.slice_ideal = Ideal::make(P.slice_reg, std::move(sgens));

    return P;
}

bool on_variety(const GITProblem& P, const PointY& p) {
    if (p.values.size() != P.reg->size()) return false;
    for (const auto& g : P.nilpotency.gens)
        if (!p.eval(g).is_zero()) return false;
    return true;
}

PointY lift_slice(const GITProblem& P, const std::vector<Rational>& slice_values) {
    if (slice_values.size() != P.slice_reg->size())
        throw std::invalid_argument("slice value count mismatch");
    PointY p;
    p.values.assign(P.reg->size(), Rational(0));
    for (std::size_t i = 0; i < P.reg->size(); ++i)
        p.values[i] = P.slice_images[i].evaluate(slice_values);
    return p;
}

int slice_family_count(const GITProblem& P) {
    int fam = 1;
    for (const auto& f : P.factors)
        if (f.m >= 3) fam = 3;
    return fam;
}

std::vector<Rational> random_slice_values(const GITProblem& P, std::mt19937_64& rng,
                                          int family) {
    std::uniform_int_distribution<int> small(-5, 5);
    auto draw = [&] { return Rational(small(rng)); };
    auto draw_nonzero = [&] {
        Rational v;
        do v = draw(); while (v.is_zero());
        return v;
    };

    std::vector<Rational> vals(P.slice_reg->size(), Rational(0));
    // psi entries unconstrained
    for (const auto& f : P.factors)
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                vals[P.slice_reg->index(psi_var_name(f, r, c))] = draw();

    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        PolyMatrix As = P.slice_nilpotent(k, 'a'), Bs = P.slice_nilpotent(k, 'b');
        auto set = [&](const PolyMatrix& M, int i, int j, const Rational& v) {
            // M entries are single slice variables
            const auto& t = M.at(i - 1, j - 1).terms();
            for (std::size_t idx = 0; idx < P.slice_reg->size(); ++idx)
                if (t.front().mon.exp(idx) == 1) vals[idx] = v;
        };
        if (f.m == 2) {
            set(As, 2, 1, draw());
            set(Bs, 2, 1, draw());
        } else if (f.m == 3) {
            // commutator: a3*b1 - a1*b3 = 0
            Rational a1 = draw(), a2 = draw(), a3 = draw(), b2 = draw();
            Rational c = draw();
            set(As, 2, 1, a1); set(As, 3, 1, a2); set(As, 3, 2, a3);
            set(Bs, 3, 1, b2);
            if (family % 2 == 1) {
                // a-subdiagonal zero, b-subdiagonal free
                set(As, 2, 1, Rational(0)); set(As, 3, 2, Rational(0));
                set(Bs, 2, 1, draw()); set(Bs, 3, 2, draw());
            } else {
                set(Bs, 2, 1, c * a1); set(Bs, 3, 2, c * a3);
            }
        } else if (f.m == 4) {
            // constraints: a3b1=a1b3, a6b3=a3b6, a5b1+a6b2=b5a1+b6a2
            Rational a1 = draw(), a2 = draw(), a3 = draw(), a4 = draw(),
                     a5 = draw(), a6 = draw(), b2 = draw(), b4 = draw(), c = draw();
            switch (family % 3) {
            case 0: { // b proportional to a on (1,3,6), a1 forced nonzero
                a1 = draw_nonzero();
                Rational b5 = c * a5 + (a6 * b2 - c * a6 * a2) / a1;
                set(As, 2, 1, a1); set(As, 3, 1, a2); set(As, 3, 2, a3);
                set(As, 4, 1, a4); set(As, 4, 2, a5); set(As, 4, 3, a6);
                set(Bs, 2, 1, c * a1); set(Bs, 3, 1, b2); set(Bs, 3, 2, c * a3);
                set(Bs, 4, 1, b4); set(Bs, 4, 2, b5); set(Bs, 4, 3, c * a6);
                break;
            }
            case 1: { // a1 = b1 = 0 branch: (b2,b3,b6) proportional to (a2,a3,a6)
                set(As, 2, 1, Rational(0)); set(As, 3, 1, a2); set(As, 3, 2, a3);
                set(As, 4, 1, a4); set(As, 4, 2, a5); set(As, 4, 3, a6);
                set(Bs, 2, 1, Rational(0)); set(Bs, 3, 1, c * a2); set(Bs, 3, 2, c * a3);
                set(Bs, 4, 1, b4); set(Bs, 4, 2, draw()); set(Bs, 4, 3, c * a6);
                break;
            }
            default: { // a6 = b6 = 0 branch: (b1,b3,b5) proportional to (a1,a3,a5)
                set(As, 2, 1, a1); set(As, 3, 1, a2); set(As, 3, 2, a3);
                set(As, 4, 1, a4); set(As, 4, 2, a5); set(As, 4, 3, Rational(0));
                set(Bs, 2, 1, c * a1); set(Bs, 3, 1, b2); set(Bs, 3, 2, c * a3);
                set(Bs, 4, 1, b4); set(Bs, 4, 2, c * a5); set(Bs, 4, 3, Rational(0));
                break;
            }
            }
        } else {
            throw std::invalid_argument("slice sampler supports multiplicities up to 4");
        }
    }

    for (const auto& g : P.slice_ideal.gens)
        if (!g.evaluate(vals).is_zero())
            throw std::logic_error("slice sampler produced an invalid point");
    return vals;
}

GroupElement identity_element(const GITProblem& P) {
    GroupElement g;
    g.gV = QMatrix::identity(2);
    for (const auto& f : P.factors) g.gF.push_back(QMatrix::identity(f.m));
    return g;
}

GroupElement random_group_element(const GITProblem& P, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    auto random_gl = [&](int n) {
        QMatrix M(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) M.at(i, j) = Rational(small(rng));
        } while (M.det().is_zero());
        return M;
    };
    GroupElement g;
    g.gV = random_gl(2);
    for (const auto& f : P.factors) g.gF.push_back(random_gl(f.m));
    return g;
}

PointY apply_group(const GITProblem& P, const GroupElement& g, const PointY& p) {
    auto gVinv = g.gV.inverse();
    if (!gVinv) throw std::invalid_argument("singular V block");

    PointY q;
    q.values.assign(P.reg->size(), Rational(0));
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        // psi block: gF * psi_f * gV^{-1}
        QMatrix blk(f.m, 2);
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                blk.at(r - 1, c - 1) = p.values[P.reg->index(psi_var_name(f, r, c))];
        QMatrix nb = g.gF[k] * blk * *gVinv;
        for (int r = 1; r <= f.m; ++r)
            for (int c = 1; c <= 2; ++c)
                q.values[P.reg->index(psi_var_name(f, r, c))] = nb.at(r - 1, c - 1);
        if (f.m == 1) continue;
        auto gFinv = g.gF[k].inverse();
        if (!gFinv) throw std::invalid_argument("singular factor block");
        for (const std::string& pre : {f.a_prefix, f.b_prefix}) {
            QMatrix M(f.m, f.m);
            Rational diag_sum(0);
            for (int i = 1; i <= f.m; ++i)
                for (int j = 1; j <= f.m; ++j) {
                    if (i == f.m && j == f.m) continue;
                    M.at(i - 1, j - 1) = p.values[P.reg->index(nil_var_name(pre, i, j))];
                    if (i == j) diag_sum += M.at(i - 1, j - 1);
                }
            M.at(f.m - 1, f.m - 1) = -diag_sum;
            QMatrix C = g.gF[k] * M * *gFinv;
            for (int i = 1; i <= f.m; ++i)
                for (int j = 1; j <= f.m; ++j) {
                    if (i == f.m && j == f.m) continue;
                    q.values[P.reg->index(nil_var_name(pre, i, j))] = C.at(i - 1, j - 1);
                }
        }
    }
    return q;
}

int ps_weight_of_variable(const GITProblem& P, std::size_t var, const OnePS& r) {
    const auto& w = P.weights.at(var);
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * r.at(i);
    return s;
}

int pairing(const GITProblem& P, const OnePS& r) {
    int s = 0;
    for (std::size_t i = 0; i < P.chi.size(); ++i) s += P.chi[i] * r.at(i);
    return s;
}

bool limit_exists(const GITProblem& P, const PointY& p, const OnePS& r) {
    for (std::size_t v = 0; v < P.reg->size(); ++v)
        if (!p.values[v].is_zero() && ps_weight_of_variable(P, v, r) < 0) return false;
    return true;
}

namespace {

// basis of the intersection of the kernels of A and B
std::vector<std::vector<Rational>> common_kernel(const QMatrix& A, const QMatrix& B) {
    std::size_t n = A.cols();
    QMatrix S(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S.at(i, j) = A.at(i, j);
            S.at(n + i, j) = B.at(i, j);
        }
    return S.nullspace();
}

} // namespace

std::optional<std::pair<GroupElement, PointY>>
triangularize_point(const GITProblem& P, const PointY& p) {
    if (!on_variety(P, p)) return std::nullopt;

    GroupElement g = identity_element(P);
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        if (f.m == 1) continue;
        int m = f.m;
        QMatrix A(m, m), B(m, m);
        Rational da(0), db(0);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == m && j == m) continue;
                A.at(i - 1, j - 1) = p.values[P.reg->index(nil_var_name(f.a_prefix, i, j))];
                B.at(i - 1, j - 1) = p.values[P.reg->index(nil_var_name(f.b_prefix, i, j))];
                if (i == j) { da += A.at(i - 1, j - 1); db += B.at(i - 1, j - 1); }
            }
        A.at(m - 1, m - 1) = -da;
        B.at(m - 1, m - 1) = -db;

        // flag S_1 < S_2 < ... with A,B mapping S_{t+1} into S_t; in the
        // reversed compatible basis the pair is strictly lower triangular
        std::vector<std::vector<Rational>> basis; // columns, growing flag
        QMatrix Ai = A, Bi = B;                   // maps composed with projection
        while (basis.size() < static_cast<std::size_t>(m)) {
            // vectors v with Av, Bv in span(basis): kernel of the stacked
            // matrix [A;B] augmented against the current span
            std::size_t nb = basis.size();
            QMatrix S(2 * m, m + 2 * nb);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    S.at(i, j) = A.at(i, j);
                    S.at(m + i, j) = B.at(i, j);
                }
            for (std::size_t b = 0; b < nb; ++b)
                for (int i = 0; i < m; ++i) {
                    S.at(i, m + 2 * b) = basis[b][i];
                    S.at(m + i, m + 2 * b + 1) = basis[b][i];
                }
            auto null_basis = S.nullspace();
            // project each kernel vector onto its first m coordinates and
            // extend the flag by independent ones
            std::size_t before = basis.size();
            for (const auto& v : null_basis) {
                std::vector<Rational> cand(v.begin(), v.begin() + m);
                QMatrix T(m, basis.size() + 1);
                for (std::size_t b = 0; b < basis.size(); ++b)
                    for (int i = 0; i < m; ++i) T.at(i, b) = basis[b][i];
                for (int i = 0; i < m; ++i) T.at(i, basis.size()) = cand[i];
                if (T.rank() == basis.size() + 1) basis.push_back(cand);
            }
            if (basis.size() == before) return std::nullopt; // not nilpotent-commuting
        }
        // reversed basis as columns of h; conjugation by h^{-1}
        QMatrix h(m, m);
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < m; ++i) h.at(i, c) = basis[m - 1 - c][i];
        auto hinv = h.inverse();
        if (!hinv) return std::nullopt;
        g.gF[k] = *hinv;
    }
    PointY q = apply_group(P, g, p);
    return std::make_pair(g, q);
}

} // namespace ogfiber
