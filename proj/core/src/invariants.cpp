#include "ogfiber/invariants.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace ogfiber {

namespace {

std::vector<std::vector<long>> long_weights(const GITProblem& P) {
    std::vector<std::vector<long>> out;
    out.reserve(P.weights.size());
    for (const auto& w : P.weights) out.emplace_back(w.begin(), w.end());
    return out;
}

std::vector<long> chi_long(const GITProblem& P) {
    return std::vector<long>(P.chi.begin(), P.chi.end());
}

NamedInvariant make_inv(const GITProblem& P, std::string name, Polynomial expr) {
    NamedInvariant inv;
    inv.name = std::move(name);
    inv.expr = std::move(expr);
    auto w = inv.expr.weight(long_weights(P));
    if (!w) throw std::runtime_error("invariant not slot-homogeneous: " + inv.name);
    inv.weight = *w;
    const auto chi = chi_long(P);
    if (inv.weight[0] != 0 && inv.weight[0] % chi[0] == 0) {
        const long n = inv.weight[0] / chi[0];
        bool match = n > 0;
        for (std::size_t s = 0; match && s < chi.size(); ++s)
            match = inv.weight[s] == n * chi[s];
        if (match) inv.degree = static_cast<int>(n);
    }
    return inv;
}

std::vector<Polynomial> psi_row(const PolyMatrix& ps, std::size_t r) {
    return {ps.at(r, 0), ps.at(r, 1)};
}

// determinant of the 2x2 matrix with rows u, v
Polynomial det_rows(const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

std::vector<Polynomial> mat_vec(const PolyMatrix& M, const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out(M.rows(), Polynomial::zero(v[0].registry()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            out[i] = out[i] + M.at(i, j) * v[j];
    return out;
}

std::vector<Polynomial> row_mat(const std::vector<Polynomial>& v, const PolyMatrix& M) {
    std::vector<Polynomial> out(M.cols(), Polynomial::zero(v[0].registry()));
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (std::size_t i = 0; i < M.rows(); ++i)
            out[j] = out[j] + v[i] * M.at(i, j);
    return out;
}

Polynomial det3_cols(const std::vector<Polynomial>& c0, const std::vector<Polynomial>& c1,
                     const std::vector<Polynomial>& c2) {
    PolyMatrix M(3, 3, c0[0].registry());
    for (std::size_t i = 0; i < 3; ++i) {
        M.at(i, 0) = c0[i];
        M.at(i, 1) = c1[i];
        M.at(i, 2) = c2[i];
    }
    return M.det();
}

void build_type1111(const GITProblem& P, CaseGenerators& G) {
    const auto ps = P.psi();
    const auto p = ps.minors(2); // p12, p13, p14, p23, p24, p34
    static const char* names[6] = {"p12", "p13", "p14", "p23", "p24", "p34"};
    for (std::size_t i = 0; i < 6; ++i)
        G.generators.push_back(make_inv(P, names[i], p[i]));
    G.degree_one.push_back(make_inv(P, "u0", p[0] * p[5]));
    G.degree_one.push_back(make_inv(P, "u1", p[1] * p[4]));
    G.degree_one.push_back(make_inv(P, "u2", p[2] * p[3]));
}

void build_type112(const GITProblem& P, CaseGenerators& G) {
    const auto ps = P.psi();
    const auto x = psi_row(ps, 0), y = psi_row(ps, 1);
    const auto z1 = psi_row(ps, 2), z2 = psi_row(ps, 3);
    const Polynomial f1 = det_rows(x, y);
    const Polynomial f2 = det_rows(z1, z2);
    const std::vector<Polynomial> w1 = {det_rows(x, z1), det_rows(x, z2)};
    const std::vector<Polynomial> w2 = {det_rows(y, z1), det_rows(y, z2)};
    const auto A = P.nilpotent(2, 'a');
    const auto B = P.nilpotent(2, 'b');

    G.generators.push_back(make_inv(P, "xi1", f1));
    G.generators.push_back(make_inv(P, "xi2", f2));
    G.generators.push_back(make_inv(P, "xi3", det_rows(mat_vec(A, w1), w1)));
    G.generators.push_back(make_inv(P, "xi4", det_rows(mat_vec(B, w1), w1)));
    G.generators.push_back(make_inv(P, "xi5", det_rows(mat_vec(A, w1), w2)));
    G.generators.push_back(make_inv(P, "xi6", det_rows(mat_vec(B, w1), w2)));
    G.generators.push_back(make_inv(P, "xi7", det_rows(mat_vec(A, w2), w2)));
    G.generators.push_back(make_inv(P, "xi8", det_rows(mat_vec(B, w2), w2)));

    G.degree_one.push_back(make_inv(P, "u0", f1 * f2));
    G.degree_one.push_back(make_inv(P, "u1", G.generators[4].expr));
    G.degree_one.push_back(make_inv(P, "u2", G.generators[5].expr));
}

void build_type22(const GITProblem& P, CaseGenerators& G) {
    const auto ps = P.psi();
    const auto x1 = psi_row(ps, 0), x2 = psi_row(ps, 1);
    const auto y1 = psi_row(ps, 2), y2 = psi_row(ps, 3);
    const Polynomial f1 = det_rows(x1, x2);
    const Polynomial f2 = det_rows(y1, y2);
    // indexed over the x rows, one vector per y row
    const std::vector<Polynomial> w1 = {det_rows(x1, y1), det_rows(x2, y1)};
    const std::vector<Polynomial> w2 = {det_rows(x1, y2), det_rows(x2, y2)};
    const auto A1 = P.nilpotent(0, 'a');
    const auto B1 = P.nilpotent(0, 'b');
    const auto A2 = P.nilpotent(1, 'a');
    const auto B2 = P.nilpotent(1, 'b');

    const Polynomial xi3 = det_rows(mat_vec(A1, w1), w1);
    const Polynomial xi4 = det_rows(mat_vec(B1, w1), w1);
    const Polynomial xi5 = det_rows(mat_vec(A1, w1), w2);
    const Polynomial xi6 = det_rows(mat_vec(B1, w1), w2);
    const Polynomial xi7 = det_rows(mat_vec(A1, w2), w2);
    const Polynomial xi8 = det_rows(mat_vec(B1, w2), w2);
    G.auxiliary.push_back(make_inv(P, "xi3", xi3));
    G.auxiliary.push_back(make_inv(P, "xi4", xi4));
    G.auxiliary.push_back(make_inv(P, "xi5", xi5));
    G.auxiliary.push_back(make_inv(P, "xi6", xi6));
    G.auxiliary.push_back(make_inv(P, "xi7", xi7));
    G.auxiliary.push_back(make_inv(P, "xi8", xi8));

    PolyMatrix X1(2, 2, P.reg), X2(2, 2, P.reg);
    X1.at(0, 0) = xi5;
    X1.at(0, 1) = -xi3;
    X1.at(1, 0) = xi7;
    X1.at(1, 1) = -xi5;
    X2.at(0, 0) = xi6;
    X2.at(0, 1) = -xi4;
    X2.at(1, 0) = xi8;
    X2.at(1, 1) = -xi6;
    G.x_matrices = {X1, X2};

    G.generators.push_back(make_inv(P, "zeta1", f1));
    G.generators.push_back(make_inv(P, "zeta2", f2));
    G.generators.push_back(make_inv(P, "zeta3", (A2 * X1).trace()));
    G.generators.push_back(make_inv(P, "zeta4", (B2 * X1).trace()));
    G.generators.push_back(make_inv(P, "zeta5", (A2 * X2).trace()));
    G.generators.push_back(make_inv(P, "zeta6", (B2 * X2).trace()));

    G.degree_one.push_back(make_inv(P, "u0", f1 * f2));
    for (int k = 1; k <= 4; ++k)
        G.degree_one.push_back(
            make_inv(P, "u" + std::to_string(k), G.generators[1 + k].expr));
}

void build_type13(const GITProblem& P, CaseGenerators& G) {
    const auto ps = P.psi();
    const auto x = psi_row(ps, 0);
    const auto y1 = psi_row(ps, 1), y2 = psi_row(ps, 2), y3 = psi_row(ps, 3);
    const Polynomial f1 = det_rows(x, y1), f2 = det_rows(x, y2), f3 = det_rows(x, y3);
    const Polynomial g1 = det_rows(y1, y2), g2 = det_rows(y1, y3), g3 = det_rows(y2, y3);
    G.auxiliary.push_back(make_inv(P, "f1", f1));
    G.auxiliary.push_back(make_inv(P, "f2", f2));
    G.auxiliary.push_back(make_inv(P, "f3", f3));
    G.auxiliary.push_back(make_inv(P, "g1", g1));
    G.auxiliary.push_back(make_inv(P, "g2", g2));
    G.auxiliary.push_back(make_inv(P, "g3", g3));

    const std::vector<Polynomial> w = {f1, f2, f3};
    const std::vector<Polynomial> lam = {g3, -g2, g1};

    const auto A = P.nilpotent(1, 'a');
    const auto B = P.nilpotent(1, 'b');
    std::vector<PolyMatrix> words = {PolyMatrix::identity(3, P.reg)};
    for (auto [i, j] : enumerate_words(3))
        words.push_back(A.pow(i) * B.pow(j)); // A, B, A^2, AB, B^2

    auto dot = [](const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
        Polynomial s = Polynomial::zero(a[0].registry());
        for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
        return s;
    };
    for (std::size_t k = 1; k < words.size(); ++k)
        G.degree_one.push_back(
            make_inv(P, "xi" + std::to_string(k), dot(lam, mat_vec(words[k], w))));
    for (const auto& inv : G.degree_one) G.generators.push_back(inv);

    // systematic sweep: keep the determinant invariants from word triples
    // that are nonzero on the slice (dependencies among them belong to the
    // relation ideal, not here)
    const auto gb = groebner_basis(P.slice_ideal, Polynomial::canonical_order());
    auto sweep = [&](char kind) {
        int idx = 0;
        for (auto& S : subsets(words.size(), 3)) {
            Polynomial cand;
            if (kind == 'u') {
                cand = det3_cols(mat_vec(words[S[0]], w), mat_vec(words[S[1]], w),
                                 mat_vec(words[S[2]], w));
            } else {
                PolyMatrix M(3, 3, P.reg);
                for (std::size_t r = 0; r < 3; ++r) {
                    auto row = row_mat(lam, words[S[r]]);
                    for (std::size_t c = 0; c < 3; ++c) M.at(r, c) = row[c];
                }
                cand = M.det();
            }
            if (normal_form(P.to_slice(cand), gb).is_zero()) continue;
            ++idx;
            const std::string base = kind == 'u' ? "ups" : "zeta";
            G.generators.push_back(make_inv(P, base + std::to_string(idx), cand));
            (kind == 'u' ? G.ups_triples : G.zeta_triples).push_back(S);
        }
    };
    sweep('u');
    sweep('z');
}

void build_type4(const GITProblem& P, CaseGenerators& G) {
    const auto u = P.psi().minors(2); // aligned with e12,e13,e14,e23,e24,e34
    const auto A = P.nilpotent(0, 'a');
    const auto B = P.nilpotent(0, 'b');
    const auto TA = wedge_square_action(A);
    const auto TB = wedge_square_action(B);
    const auto TA2 = wedge_square_action(A * A);
    const auto TB2 = wedge_square_action(B * B);
    const auto TAA = TA * TA;
    const auto TBB = TB * TB;

    auto push = [&](const std::string& name, const PolyMatrix& M) {
        G.degree_one.push_back(make_inv(P, name, wedge_pair(u, M, u)));
    };
    push("xi1", TAA);
    push("xi2", TA * TB);
    push("xi3", TBB);
    push("xi4", TAA * TAA);
    push("xi5", TAA * TA * TB);
    push("xi6", TAA * TBB);
    push("xi7", TA * TBB * TB);
    push("xi8", TBB * TBB);
    push("xi9", TA2 * TB);
    push("xi10", TA * TB2);
    G.generators = G.degree_one;
}

} // namespace

CaseGenerators case_generators(const ProblemPtr& P) {
    CaseGenerators G;
    G.problem = P;
    const auto& m = P->cycle.mults;
    if (m == std::vector<int>{1, 1, 1, 1})
        build_type1111(*P, G);
    else if (m == std::vector<int>{1, 1, 2})
        build_type112(*P, G);
    else if (m == std::vector<int>{2, 2})
        build_type22(*P, G);
    else if (m == std::vector<int>{1, 3})
        build_type13(*P, G);
    else if (m == std::vector<int>{4})
        build_type4(*P, G);
    else
        throw std::runtime_error("unsupported cycle type " + P->cycle.str());
    return G;
}

std::vector<long> character_of(const GITProblem& P, const NamedInvariant& inv) {
    std::vector<long> out;
    auto common = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo + 1; s < hi; ++s)
            if (inv.weight[s] != inv.weight[lo])
                throw std::runtime_error("not a determinant character: " + inv.name);
        return inv.weight[lo];
    };
    out.push_back(common(0, 2));
    for (const auto& f : P.factors) {
        const std::size_t lo = 2 + static_cast<std::size_t>(f.row_offset);
        out.push_back(common(lo, lo + static_cast<std::size_t>(f.m)));
    }
    return out;
}

std::optional<std::string> check_semi_invariance(const GITProblem& P, const Polynomial& expr,
                                                 const GroebnerCaps& caps) {
    std::optional<GroebnerBasis> gb;
    std::mt19937_64 rng(0x5eedu);
    for (const auto& D : P.sl_derivations) {
        const Polynomial g = D.apply(expr);
        if (g.is_zero()) continue;
        for (int fam = 0; fam < slice_family_count(P); ++fam)
            for (int t = 0; t < 8; ++t) {
                const auto p = lift_slice(P, random_slice_values(P, rng, fam));
                if (p.eval(g).sign() != 0) return D.label;
            }
        if (!gb) gb = groebner_basis(P.nilpotency, Polynomial::canonical_order(), caps);
        if (!normal_form(g, *gb).is_zero()) return D.label;
    }
    return std::nullopt;
}

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int a, int b) {
    for (std::size_t k = 0; k < kPairs.size(); ++k)
        if (kPairs[k].first == a && kPairs[k].second == b) return static_cast<int>(k);
    return -1;
}

} // namespace

PolyMatrix wedge_square_action(const PolyMatrix& X) {
    if (X.rows() != 4 || X.cols() != 4)
        throw std::invalid_argument("wedge_square_action needs a 4x4 matrix");
    PolyMatrix T(6, 6, X.at(0, 0).registry());
    auto add = [&](int a, int b, std::size_t col, const Polynomial& c) {
        if (a == b) return;
        const int sign = a < b ? 1 : -1;
        const int row = a < b ? pair_index(a, b) : pair_index(b, a);
        T.at(row, col) = T.at(row, col) + (sign > 0 ? c : -c);
    };
    for (std::size_t col = 0; col < 6; ++col) {
        const auto [i, j] = kPairs[col];
        for (int k = 0; k < 4; ++k) {
            add(k, j, col, X.at(k, i)); // (X e_i) ^ e_j
            add(i, k, col, X.at(k, j)); // e_i ^ (X e_j)
        }
    }
    return T;
}

QMatrix wedge_gram() {
    QMatrix G(6, 6);
    G.at(0, 5) = 1;
    G.at(5, 0) = 1;
    G.at(1, 4) = -1;
    G.at(4, 1) = -1;
    G.at(2, 3) = 1;
    G.at(3, 2) = 1;
    return G;
}

Polynomial wedge_pair(const std::vector<Polynomial>& alpha, const PolyMatrix& M,
                      const std::vector<Polynomial>& beta) {
    const auto v = mat_vec(M, beta);
    return alpha[0] * v[5] + alpha[5] * v[0] - alpha[1] * v[4] - alpha[4] * v[1] +
           alpha[2] * v[3] + alpha[3] * v[2];
}

GradedPiece semiinvariant_basis(const CaseGenerators& G, int n, const GroebnerBasis& slice_gb) {
    const auto& P = *G.problem;
    GradedPiece piece;
    piece.degree = n;
    std::vector<std::string> tag_names;
    for (const auto& g : G.degree_one) tag_names.push_back(g.name);
    piece.tag_reg = make_registry(tag_names);

    const auto chi = chi_long(P);
    std::vector<long> target(chi.size());
    for (std::size_t s = 0; s < chi.size(); ++s) target[s] = n * chi[s];

    std::vector<Polynomial> slice_gens;
    for (const auto& g : G.degree_one) {
        if (g.weight[0] >= 0)
            throw std::runtime_error("degree-one generator with non-negative torus slot");
        slice_gens.push_back(P.to_slice(g.expr));
    }

    std::vector<int> expo(G.degree_one.size(), 0);
    auto emit = [&]() {
        Polynomial tag = Polynomial::constant(piece.tag_reg, 1);
        Polynomial form = Polynomial::constant(P.slice_reg, 1);
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (!expo[i]) continue;
            tag = tag * Polynomial::variable(piece.tag_reg, i, expo[i]);
            form = form * slice_gens[i].pow(expo[i]);
        }
        piece.tag_monomials.push_back(tag);
        piece.slice_forms.push_back(normal_form(form, slice_gb));
    };
    auto rec = [&](auto&& self, std::size_t i, std::vector<long> rem) -> void {
        if (i == expo.size()) {
            for (long r : rem)
                if (r != 0) return;
            emit();
            return;
        }
        const auto& w = G.degree_one[i].weight;
        const long cap = rem[0] / w[0]; // both negative
        for (long e = 0; e <= cap; ++e) {
            expo[i] = static_cast<int>(e);
            auto r = rem;
            for (std::size_t s = 0; s < r.size(); ++s) r[s] -= e * w[s];
            self(self, i + 1, std::move(r));
        }
        expo[i] = 0;
    };
    rec(rec, 0, target);

    piece.dependencies = linear_dependencies(piece.slice_forms);
    piece.dimension = piece.tag_monomials.size() - piece.dependencies.size();
    return piece;
}

std::size_t evaluation_kernel_dim(const CaseGenerators& G, const GradedPiece& piece,
                                  std::mt19937_64& rng, std::size_t oversample) {
    const auto& P = *G.problem;
    const std::size_t cols = piece.slice_forms.size();
    if (cols == 0) return 0;
    const std::size_t nrows = std::max<std::size_t>(1, oversample) * cols;
    QMatrix M(nrows, cols);
    const int families = slice_family_count(P);
    for (std::size_t r = 0; r < nrows; ++r) {
        const auto vals = random_slice_values(P, rng, static_cast<int>(r % families));
        for (std::size_t c = 0; c < cols; ++c)
            M.at(r, c) = piece.slice_forms[c].evaluate(vals);
    }
    return cols - M.rank();
}

WordEnumerationReport enumerate_type4_invariants(const CaseGenerators& G,
                                                 const GroebnerBasis& slice_gb) {
    const auto& P = *G.problem;
    if (!(P.cycle.mults == std::vector<int>{4}))
        throw std::invalid_argument("word enumeration only applies to the length-4 case");
    const auto As = P.slice_nilpotent(0, 'a');
    const auto Bs = P.slice_nilpotent(0, 'b');
    std::vector<PolyMatrix> Ts;
    for (auto [i, j] : enumerate_words(4))
        Ts.push_back(wedge_square_action(As.pow(i) * Bs.pow(j)));
    const auto us = P.slice_psi().minors(2);

    WordEnumerationReport rep;
    std::vector<Polynomial> basis; // independent nonzero candidates
    auto consider = [&](const PolyMatrix& M) {
        ++rep.candidates;
        const auto nf = normal_form(wedge_pair(us, M, us), slice_gb);
        if (nf.is_zero()) return;
        ++rep.nonzero;
        auto trial = basis;
        trial.push_back(nf);
        if (linear_span_dim(trial) > basis.size()) basis = std::move(trial);
    };
    auto rec = [&](auto&& self, std::size_t first, int depth, const PolyMatrix& M) -> void {
        if (depth == 4) return;
        for (std::size_t k = first; k < Ts.size(); ++k) {
            const PolyMatrix next = M * Ts[k];
            consider(next);
            self(self, k, depth + 1, next);
        }
    };
    rec(rec, 0, 0, PolyMatrix::identity(6, P.slice_reg));
    rep.span_dim = basis.size();

    std::vector<Polynomial> named;
    for (const auto& g : G.generators)
        named.push_back(normal_form(P.to_slice(g.expr), slice_gb));
    rep.named_span_dim = linear_span_dim(named);
    auto all = basis;
    for (const auto& f : named) all.push_back(f);
    rep.union_span_dim = linear_span_dim(all);
    return rep;
}

} // namespace ogfiber
