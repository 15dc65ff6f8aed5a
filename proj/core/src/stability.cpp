#include "ogfiber/stability.hpp"

#include "ogfiber/binary_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace ogfiber {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::StrictlySemistable: return "strictly-semistable";
        default: return "unstable";
    }
}

std::string stratum_str(Stratum s) {
    return s == Stratum::Sigma0 ? "Sigma0" : "Sigma1";
}

namespace {

QMatrix eval_matrix(const PolyMatrix& M, const PointY& p) {
    QMatrix R(M.rows(), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) R.at(r, c) = p.eval(M.at(r, c));
    return R;
}

QMatrix mat_pow_mul(const QMatrix& A, const QMatrix& B, int i, int j) {
    QMatrix W = QMatrix::identity(A.rows());
    for (int k = 0; k < i; ++k) W = W * A;
    for (int k = 0; k < j; ++k) W = W * B;
    return W;
}

struct FactorData {
    int m = 1;
    int row_offset = 0;
    QMatrix psi;                 // m x 2
    std::vector<QMatrix> words;  // A^i B^j over {(0,0)} + enumerate_words(m)
};

std::vector<FactorData> factor_data(const GITProblem& P, const PointY& p) {
    const QMatrix full_psi = eval_matrix(P.psi(), p);
    std::vector<FactorData> out;
    for (std::size_t k = 0; k < P.factors.size(); ++k) {
        const auto& f = P.factors[k];
        FactorData d;
        d.m = f.m;
        d.row_offset = f.row_offset;
        d.psi = QMatrix(f.m, 2);
        for (int r = 0; r < f.m; ++r)
            for (int c = 0; c < 2; ++c) d.psi.at(r, c) = full_psi.at(f.row_offset + r, c);
        QMatrix A = QMatrix::identity(f.m), B = A;
        if (f.m > 1) {
            A = eval_matrix(P.nilpotent(k, 'a'), p);
            B = eval_matrix(P.nilpotent(k, 'b'), p);
        }
        d.words.push_back(QMatrix::identity(f.m));
        for (const auto& [i, j] : enumerate_words(f.m))
            d.words.push_back(mat_pow_mul(A, B, i, j));
        out.push_back(std::move(d));
    }
    return out;
}

// columns (A^i B^j) psi e_c span the factor space for every factor
bool factor_surjective(const FactorData& d) {
    QMatrix S(static_cast<std::size_t>(d.m), 2 * d.words.size());
    std::size_t col = 0;
    for (const auto& W : d.words) {
        const QMatrix C = W * d.psi;
        for (int c = 0; c < 2; ++c, ++col)
            for (int r = 0; r < d.m; ++r) S.at(r, col) = C.at(r, c);
    }
    return S.rank() == static_cast<std::size_t>(d.m);
}

// block-diagonal M(w) over a fresh registry {w1, w2}; entries linear in w
PolyMatrix build_mw(const GITProblem& P, const std::vector<FactorData>& fs,
                    const RegistryPtr& wreg) {
    const Polynomial w1 = Polynomial::variable(wreg, std::size_t{0});
    const Polynomial w2 = Polynomial::variable(wreg, std::size_t{1});
    std::size_t ncols = 0;
    for (const auto& d : fs) ncols += d.words.size();
    PolyMatrix M(static_cast<std::size_t>(P.cycle.total()), ncols, wreg);
    std::size_t col = 0;
    for (const auto& d : fs)
        for (const auto& W : d.words) {
            const QMatrix C = W * d.psi;
            for (int r = 0; r < d.m; ++r)
                M.at(d.row_offset + r, col) =
                    w1.scaled(C.at(r, 0)) + w2.scaled(C.at(r, 1));
            ++col;
        }
    return M;
}

std::optional<Polynomial> minor_gcd(const PolyMatrix& M, std::size_t k) {
    const auto forms = M.minors(k);
    try {
        return binary_form_gcd(forms, 0, 1);
    } catch (const AllFormsZero&) {
        return std::nullopt;
    }
}

} // namespace

StabilityReport semistability_status(const GITProblem& P, const PointY& p) {
    if (!on_variety(P, p))
        throw std::invalid_argument("semistability_status: point violates the nilpotency ideal");
    StabilityReport rep;
    rep.w_reg = make_registry({"w1", "w2"});
    const auto fs = factor_data(P, p);
    rep.surjective = true;
    for (const auto& d : fs) rep.surjective = rep.surjective && factor_surjective(d);

    const PolyMatrix M = build_mw(P, fs, rep.w_reg);
    rep.gcd2 = minor_gcd(M, 2);
    rep.gcd3 = minor_gcd(M, 3);

    const bool line2 = rep.gcd2 && rep.gcd2->is_constant();
    const bool line3 = rep.gcd3 && rep.gcd3->is_constant();
    if (!rep.surjective || !line2)
        rep.verdict = Verdict::Unstable;
    else
        rep.verdict = line3 ? Verdict::Stable : Verdict::StrictlySemistable;
    return rep;
}

namespace {

bool nonconstant_vector(const OnePS& r) {
    return std::adjacent_find(r.begin(), r.end(), std::not_equal_to<int>()) != r.end();
}

// candidates in [-box, box]^slots, ascending 1-norm then lexicographic
const std::vector<OnePS>& candidate_vectors(std::size_t slots, int box) {
    static std::map<std::pair<std::size_t, int>, std::vector<OnePS>> cache;
    auto [it, fresh] = cache.try_emplace({slots, box});
    if (!fresh) return it->second;
    std::vector<OnePS>& out = it->second;
    OnePS cur(slots, -box);
    for (;;) {
        if (nonconstant_vector(cur)) out.push_back(cur);
        std::size_t i = slots;
        while (i > 0 && cur[i - 1] == box) cur[--i] = -box;
        if (i == 0) break;
        ++cur[i - 1];
    }
    std::stable_sort(out.begin(), out.end(), [](const OnePS& a, const OnePS& b) {
        long na = 0, nb = 0;
        for (int v : a) na += std::abs(v);
        for (int v : b) nb += std::abs(v);
        return na < nb;
    });
    return out;
}

} // namespace

bool certifies_unstable(const GITProblem& P, const PointY& p, const OnePS& r) {
    return limit_exists(P, p, r) && pairing(P, r) < 0;
}

bool certifies_not_stable(const GITProblem& P, const PointY& p, const OnePS& r) {
    return nonconstant_vector(r) && limit_exists(P, p, r) && pairing(P, r) <= 0;
}

std::optional<DestabilizerCertificate>
destabilizer_search(const GITProblem& P, const PointY& p, int box, int trials,
                    std::mt19937_64& rng) {
    const auto& candidates = candidate_vectors(P.n_slots(), box);
    for (int t = 0; t <= trials; ++t) {
        const GroupElement g = t == 0 ? identity_element(P) : random_group_element(P, rng);
        const PointY gp = t == 0 ? p : apply_group(P, g, p);
        for (const auto& r : candidates)
            if (certifies_not_stable(P, gp, r))
                return DestabilizerCertificate{r, g, pairing(P, r)};
    }
    return std::nullopt;
}

StratumReport classify_stratum(const GITProblem& P, const CaseGenerators& G,
                               const PointY& p) {
    if (semistability_status(P, p).verdict != Verdict::StrictlySemistable)
        throw std::invalid_argument("classify_stratum: point is not strictly semistable");

    auto gen = [&](std::size_t i) { return p.eval(G.generators.at(i).expr); };
    StratumReport rep;
    const std::string key = P.cycle.str();
    if (key == "1,1,1,1") {
        // pairing of opposite Pluecker coordinates
        rep.coords = {{"u0", gen(0) * gen(5)}, {"u1", gen(1) * gen(4)},
                      {"u2", gen(2) * gen(3)}};
        rep.stratum = Stratum::Sigma0;
    } else if (key == "1,1,2") {
        rep.coords = {{"u0", gen(0) * gen(1)}, {"u1", gen(4)}, {"u2", gen(5)}};
        rep.stratum = Stratum::Sigma0;
    } else if (key == "2,2") {
        rep.coords = {{"u0", gen(0) * gen(1)}, {"u1", gen(2)}, {"u2", gen(3)},
                      {"u3", gen(4)}, {"u4", gen(5)}};
        // all four nilpotent coordinates vanish exactly at the cone vertex
        bool vertex = true;
        for (std::size_t i = 1; i <= 4; ++i) vertex = vertex && rep.coords[i].second == Rational(0);
        rep.stratum = vertex ? Stratum::Sigma1 : Stratum::Sigma0;
    } else if (key == "1,3") {
        rep.coords = {{"xi3", gen(2)}, {"xi4", gen(3)}, {"xi5", gen(4)}};
        rep.stratum = Stratum::Sigma0;
    } else if (key == "4") {
        const Rational x1 = gen(0), x2 = gen(1), x3 = gen(2);
        rep.coords = {{"xi1", x1}, {"xi2", x2}, {"xi3", x3},
                      {"delta", x1 * x3 - x2 * x2}};
        rep.stratum =
            rep.coords.back().second == Rational(0) ? Stratum::Sigma1 : Stratum::Sigma0;
    } else {
        throw std::invalid_argument("classify_stratum: unknown cycle type");
    }
    return rep;
}

} // namespace ogfiber
