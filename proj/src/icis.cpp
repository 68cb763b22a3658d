#include "dk/icis.hpp"

#include <functional>
#include <random>

#include "dk/tspaces.hpp"

namespace dk {

long milnor_hypersurface(const Poly& f) {
    const RingPtr& R = f.ring();
    if (f.constant_coeff() != 0) throw DkError("milnor: f must vanish at the origin");
    std::vector<Poly> jac;
    for (int i = 0; i < R->nvars(); ++i) jac.push_back(f.derivative(i));
    StdIdeal B(Ideal(R, std::move(jac)));
    auto v = B.vdim();
    if (!v) throw DkError("milnor: Jacobian ideal has infinite colength (non-isolated)");
    return *v;
}

ICISRecord milnor_icis(const std::vector<Poly>& chain) {
    if (chain.empty()) throw DkError("milnor_icis: empty chain");
    const RingPtr& R = chain[0].ring();
    const int k = static_cast<int>(chain.size());

    ICISRecord rec;
    rec.chain = chain;
    for (int i = 1; i <= k; ++i) {
        // O_{C(f_i)} = O / <f_1..f_{i-1}, i-minors of Jac(f_1..f_i)>
        std::vector<std::vector<Poly>> jac;
        for (int a = 0; a < i; ++a) {
            std::vector<Poly> row;
            for (int x = 0; x < R->nvars(); ++x) row.push_back(chain[a].derivative(x));
            jac.push_back(std::move(row));
        }
        std::vector<Poly> gens(chain.begin(), chain.begin() + (i - 1));
        for (auto& m : minors(jac, i).gens) gens.push_back(std::move(m));
        StdIdeal B(Ideal(R, std::move(gens)));
        auto v = B.vdim();
        if (!v)
            throw DkError("milnor_icis: chain is not an ICIS at level " + std::to_string(i) +
                          " (infinite colength)");
        rec.level_colengths.push_back(*v);
    }
    long mu = 0;
    for (int i = 1; i <= k; ++i)
        mu += ((k - i) % 2 == 0 ? 1 : -1) * rec.level_colengths[i - 1];
    rec.mu = mu;
    return rec;
}

long tau_prime(const Ideal& f) {
    const RingPtr& R = f.ring;
    const int k = f.size();
    if (k == 0) return 0;
    std::vector<std::vector<Poly>> jac;
    for (int a = 0; a < k; ++a) {
        std::vector<Poly> row;
        for (int x = 0; x < R->nvars(); ++x) row.push_back(f.gens[a].derivative(x));
        jac.push_back(std::move(row));
    }
    std::vector<Poly> gens = f.gens;
    for (auto& m : minors(jac, k).gens) gens.push_back(std::move(m));
    StdIdeal B(Ideal(R, std::move(gens)));
    auto v = B.vdim();
    if (!v) throw DkError("tau_prime: infinite colength (not an ICIS)");
    return *v;
}

MuTauReport mu_tau_report(const Ideal& I) {
    MuTauReport rep;
    rep.mu = milnor_icis(I.gens).mu;
    auto r1 = t1(I);
    if (!r1.tau) throw DkError("mu_tau_report: infinite Tjurina number");
    rep.tau = *r1.tau;
    rep.tau_prime = tau_prime(I);
    if (auto w = find_homogeneous_weights(I)) {
        rep.weighted_homog = true;
        rep.weights = *w;
    }
    rep.saito_flag = rep.mu == rep.tau;
    return rep;
}

std::optional<std::vector<long>> find_homogeneous_weights(const Ideal& I, long wmax) {
    const int n = I.ring->nvars();
    // difference rows: (e - e0)·w = 0 per generator term
    std::vector<std::vector<long>> rows;
    for (const auto& g : I.gens) {
        if (g.nterms() < 2) continue;
        const auto& e0 = g.terms()[0].m.e;
        for (int t = 1; t < g.nterms(); ++t) {
            std::vector<long> row(n);
            for (int i = 0; i < n; ++i) row[i] = g.terms()[t].m.e[i] - e0[i];
            rows.push_back(std::move(row));
        }
    }
    // rows fully supported on the first j+1 variables, for pruning
    std::vector<std::vector<int>> ready(n);
    for (size_t r = 0; r < rows.size(); ++r) {
        int last = -1;
        for (int i = 0; i < n; ++i)
            if (rows[r][i] != 0) last = i;
        if (last >= 0) ready[last].push_back(static_cast<int>(r));
    }

    std::vector<long> w(n, 1);
    long nodes = 0;
    std::function<bool(int)> dfs = [&](int pos) -> bool {
        if (++nodes > 5000000) return false;
        if (pos == n) return true;
        for (w[pos] = 1; w[pos] <= wmax; ++w[pos]) {
            bool ok = true;
            for (int r : ready[pos]) {
                long s = 0;
                for (int i = 0; i <= pos; ++i) s += rows[r][i] * w[i];
                if (s != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(pos + 1)) return true;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return w;
}

namespace {
Rational det_rational(std::vector<std::vector<Rational>> M) {
    const int n = static_cast<int>(M.size());
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            Rational factor = M[r][c] / M[c][c];
            for (int cc = c; cc < n; ++cc) M[r][cc] -= factor * M[c][cc];
        }
    }
    return det;
}
}  // namespace

std::vector<Poly> generic_linear_change(const std::vector<Poly>& f, unsigned long seed) {
    if (f.empty()) return {};
    const RingPtr& R = f[0].ring();
    const int n = R->nvars();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);

    std::vector<std::vector<Rational>> M;
    for (int attempt = 0; attempt < 64; ++attempt) {
        M.assign(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M[i][j] = Rational(coef(rng));
        if (det_rational(M) != 0) break;
        M.clear();
    }
    if (M.empty()) throw DkError("generic_linear_change: could not draw an invertible matrix");

    std::vector<Poly> images;  // x_i -> sum_j M[i][j]·x_j
    for (int i = 0; i < n; ++i) {
        Poly acc = Poly::zero(R);
        for (int j = 0; j < n; ++j)
            if (M[i][j] != 0) acc += Poly::variable(R, j).scale(M[i][j]);
        images.push_back(std::move(acc));
    }

    std::vector<Poly> out;
    for (const auto& g : f) {
        Poly acc = Poly::zero(R);
        for (const auto& t : g.terms()) {
            Poly term = Poly::constant(R, t.c);
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < t.m.e[i]; ++e) term = term * images[i];
            acc += term;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Poly> generic_generator_change(const std::vector<Poly>& f, unsigned long seed) {
    if (f.empty()) return {};
    const RingPtr& R = f[0].ring();
    const int k = static_cast<int>(f.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);

    std::vector<std::vector<Rational>> M;
    for (int attempt = 0; attempt < 64; ++attempt) {
        M.assign(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) M[i][j] = Rational(coef(rng));
        if (det_rational(M) != 0) break;
        M.clear();
    }
    if (M.empty()) throw DkError("generic_generator_change: could not draw an invertible matrix");

    std::vector<Poly> out;
    for (int i = 0; i < k; ++i) {
        Poly acc = Poly::zero(R);
        for (int j = 0; j < k; ++j)
            if (M[i][j] != 0) acc += f[j].scale(M[i][j]);
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace dk
