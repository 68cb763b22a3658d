#include "dk/curves.hpp"

#include <algorithm>
#include <numeric>

namespace dk {

// ---------------------------------------------------------------------------
// numerical semigroups

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> gens) {
    if (gens.empty()) throw DkError("semigroup needs generators");
    for (long g : gens)
        if (g <= 0) throw DkError("semigroup generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    long g = 0;
    for (long x : gens) g = std::gcd(g, x);
    if (g != 1) throw DkError("semigroup generators must have gcd 1");

    NumericalSemigroup S;
    S.gens = gens;
    S.multiplicity = gens.front();

    // sieve reachability until a full run of `multiplicity` consecutive
    // reachable numbers appears; everything beyond is then reachable
    long bound = 256;
    std::vector<char> reach;
    long conductor = -1;
    while (true) {
        reach.assign(bound + 1, 0);
        reach[0] = 1;
        for (long v = 1; v <= bound; ++v)
            for (long x : S.gens) {
                if (v - x < 0) break;
                if (reach[v - x]) {
                    reach[v] = 1;
                    break;
                }
            }
        long run = 0;
        conductor = -1;
        for (long v = 0; v <= bound; ++v) {
            run = reach[v] ? run + 1 : 0;
            if (run == S.multiplicity) {
                conductor = v - S.multiplicity + 1;
                break;
            }
        }
        if (conductor >= 0) break;
        bound *= 2;
        if (bound > 8000000) throw DkError("semigroup sieve bound exceeded");
    }
    S.conductor = conductor;
    S.frobenius = conductor - 1;
    for (long v = 1; v < conductor; ++v)
        if (!reach[v]) S.gaps.push_back(v);
    for (long x : S.gaps) {
        bool pf = true;
        for (long gg : S.gens) {
            long y = x + gg;
            bool in = y >= conductor || (y >= 0 && reach[y]);
            if (!in) {
                pf = false;
                break;
            }
        }
        if (pf) S.pseudo_frobenius.push_back(x);
    }
    return S;
}

bool NumericalSemigroup::contains(long x) const {
    if (x < 0) return false;
    if (x >= conductor) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), x);
}

CurveInvariants semigroup_invariants(const NumericalSemigroup& S) {
    CurveInvariants inv;
    inv.r = 1;
    inv.delta = S.delta();
    inv.c = S.conductor;
    inv.m = S.multiplicity;
    inv.mu = 2 * inv.delta;
    inv.quasihomogeneous = true;  // monomial curve
    if (S.multiplicity == 1) {
        inv.smooth = true;
        inv.e_exact = 0;
        return inv;
    }
    inv.t = S.type();
    inv.gorenstein = S.symmetric();
    inv.e_exact = inv.mu + *inv.t - 1;
    return inv;
}

// ---------------------------------------------------------------------------
// parametrized curves

namespace {

long valuation(const Poly& p) {
    if (p.is_zero()) return kDegInfinity;
    long v = kDegInfinity;
    for (const auto& t : p.terms()) v = std::min(v, t.m.total_degree());
    return v;
}

// coefficient rows over Q: one vector per element of ⊕_b C[s]/s^N
struct Echelon {
    int width;
    std::vector<std::vector<Rational>> rows;  // reduced, pivot-ordered
    std::vector<int> pivots;

    explicit Echelon(int w) : width(w) {}

    // reduce v against the rows; returns true (and absorbs) if independent
    bool add(std::vector<Rational> v) {
        reduce(v);
        int p = pivot(v);
        if (p < 0) return false;
        Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
    bool member(std::vector<Rational> v) const {
        reduce(v);
        return pivot(v) < 0;
    }
    int dim() const { return static_cast<int>(rows.size()); }

  private:
    static int pivot(const std::vector<Rational>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }
    void reduce(std::vector<Rational>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            int p = pivots[r];
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (int i = 0; i < width; ++i) v[i] -= f * rows[r][i];
        }
    }
};

struct TruncatedRing {
    int r, N;
    // element: per branch, coefficients of s^0..s^{N-1}
    std::vector<std::vector<Rational>> mul(const std::vector<std::vector<Rational>>& a,
                                           const std::vector<std::vector<Rational>>& b) const {
        std::vector<std::vector<Rational>> out(r, std::vector<Rational>(N, Rational(0)));
        for (int bidx = 0; bidx < r; ++bidx)
            for (int i = 0; i < N; ++i) {
                if (a[bidx][i] == 0) continue;
                for (int j = 0; j + i < N; ++j)
                    if (b[bidx][j] != 0) out[bidx][i + j] += a[bidx][i] * b[bidx][j];
            }
        return out;
    }
    std::vector<Rational> flatten(const std::vector<std::vector<Rational>>& a) const {
        std::vector<Rational> v;
        v.reserve(r * N);
        for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
        return v;
    }
};

struct TruncationResult {
    long delta, c, m;
    std::vector<long> conductor_exp;
    bool conductor_inside;  // strictly inside the window
};

TruncationResult compute_at(const CurveParam& C, int N) {
    const int r = static_cast<int>(C.branches.size());
    const int n = static_cast<int>(C.branches[0].coords.size());
    TruncatedRing T{r, N};

    // coordinate pullbacks as truncated tuples
    std::vector<std::vector<std::vector<Rational>>> phi(
        n, std::vector<std::vector<Rational>>(r, std::vector<Rational>(N, Rational(0))));
    long m = 0;
    for (int b = 0; b < r; ++b) {
        long minval = kDegInfinity;
        for (int i = 0; i < n; ++i) {
            const Poly& p = C.branches[b].coords[i];
            for (const auto& t : p.terms()) {
                long e = t.m.total_degree();
                if (e == 0) throw DkError("branch coordinates must vanish at s = 0");
                if (e < N) phi[i][b][e] += t.c;
            }
            minval = std::min(minval, valuation(p));
        }
        if (minval == kDegInfinity) throw DkError("constant branch in the parametrization");
        m += minval;
    }

    // span of all monomials in the pullbacks of total degree <= N
    Echelon E(r * N);
    {
        std::vector<std::vector<Rational>> one(r, std::vector<Rational>(N, Rational(0)));
        for (int b = 0; b < r; ++b) one[b][0] = Rational(1);
        E.add(T.flatten(one));
        // products with the previous layer's span-enlarging elements only;
        // phi_i times a basis of degree <= d-1 spans degree <= d, so the
        // layers stay bounded by the ambient dimension r·N
        std::vector<std::vector<std::vector<Rational>>> layer{std::move(one)};
        for (int deg = 1; deg <= N && !layer.empty(); ++deg) {
            std::vector<std::vector<std::vector<Rational>>> next;
            for (const auto& el : layer)
                for (int i = 0; i < n; ++i) {
                    auto prod = T.mul(el, phi[i]);
                    bool zero = true;
                    for (auto& row : prod)
                        for (auto& x : row)
                            if (x != 0) zero = false;
                    if (zero) continue;
                    if (E.add(T.flatten(prod))) next.push_back(std::move(prod));
                }
            layer = std::move(next);
        }
    }

    TruncationResult out{};
    out.delta = static_cast<long>(r) * N - E.dim();
    out.m = m;

    // conductor exponents per branch
    out.conductor_inside = true;
    out.c = 0;
    for (int b = 0; b < r; ++b) {
        auto unit_vec = [&](int j) {
            std::vector<Rational> v(r * N, Rational(0));
            v[b * N + j] = Rational(1);
            return v;
        };
        int gamma = N;
        for (int j = N - 1; j >= 0; --j) {
            if (E.member(unit_vec(j)))
                gamma = j;
            else
                break;
        }
        out.conductor_exp.push_back(gamma);
        out.c += gamma;
        if (gamma > N - 2) out.conductor_inside = false;
    }
    return out;
}

}  // namespace

CurveInvariants delta_from_param(const CurveParam& C) {
    if (C.branches.empty()) throw DkError("curve needs at least one branch");
    const int r = static_cast<int>(C.branches.size());
    const size_t n = C.branches[0].coords.size();
    for (const auto& b : C.branches)
        if (b.coords.size() != n) throw DkError("branches must share the ambient dimension");
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (C.branches[a].coords == C.branches[b].coords)
                throw DkError("coinciding branches in the parametrization");

    // initial window from the valuation heuristic
    int N = C.truncation;
    const bool fixed = N > 0;
    if (!fixed) {
        long guess = 4;
        for (const auto& b : C.branches) {
            long mn = kDegInfinity, mx = 1;
            for (const auto& p : b.coords) {
                if (p.is_zero()) continue;
                mn = std::min(mn, valuation(p));
                mx = std::max(mx, p.maxdeg());
            }
            if (mn == kDegInfinity) throw DkError("constant branch in the parametrization");
            guess += 2 * std::min((mn - 1) * mx + 1, 60l);
        }
        guess += 2l * r * (r - 1);
        N = static_cast<int>(std::min(guess, 200l));
    }

    for (int attempt = 0;; ++attempt) {
        TruncationResult a = compute_at(C, N);
        TruncationResult b = compute_at(C, N + 2);
        bool stable = a.delta == b.delta && a.c == b.c && a.m == b.m && a.conductor_inside &&
                      b.conductor_inside;
        if (stable) {
            CurveInvariants inv;
            inv.delta = a.delta;
            inv.c = a.c;
            inv.m = a.m;
            inv.r = r;
            inv.mu = 2 * a.delta - r + 1;
            inv.smooth = a.delta == 0 && r == 1;
            if (n == 2) inv.gorenstein = true;  // reduced plane curves
            return inv;
        }
        if (fixed || attempt >= 4)
            throw DkError("curve truncation insufficient at N = " + std::to_string(N) +
                          "; increase the truncation order");
        N = 2 * N + 4;
        if (N > 400) throw DkError("curve truncation exceeded the safety bound");
    }
}

long mu_curve(const CurveParam& C) { return delta_from_param(C).mu; }

DeligneInterval deligne_bounds(const CurveInvariants& inv) {
    DeligneInterval out;
    long lo = inv.delta;
    lo = std::max(lo, 3 * inv.delta - inv.c + inv.m - inv.r);
    if (inv.t) lo = std::max(lo, inv.delta + *inv.t - 1 + inv.m - inv.r);
    long hi = inv.mu + 2 * inv.delta - inv.c;
    hi = std::min(hi, 3 * inv.delta - inv.r + 1);
    if (inv.gorenstein && *inv.gorenstein) {
        hi = std::min(hi, inv.mu);
        out.gorenstein_refinement = true;
    }
    if (lo > hi)
        throw DkError("deligne_bounds: inconsistent invariants (empty interval), "
                      "upstream bug");
    out.lo = lo;
    out.hi = hi;
    if (inv.e_exact) {
        if (*inv.e_exact < lo || *inv.e_exact > hi)
            throw DkError("deligne_bounds: exact value escapes the interval, upstream bug");
        out.e = inv.e_exact;
    } else if (lo == hi) {
        out.e = lo;
    }
    return out;
}

Obstructedness obstructedness_hint(const CurveInvariants& inv, long tau) {
    if (inv.smooth) return Obstructedness::Unobstructed;
    if (!inv.quasihomogeneous || !inv.t) return Obstructedness::Inconclusive;
    long bound = inv.mu + *inv.t - 1;
    if (tau == bound) return Obstructedness::Unobstructed;
    if (tau > bound) return Obstructedness::Obstructed;
    return Obstructedness::Inconclusive;
}

// ---------------------------------------------------------------------------
// generic lines L^n_r

namespace {

// binomial with saturation
long long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > (1ll << 54)) return 1ll << 54;
    }
    return out;
}

struct TableRow {
    long n, lo, hi;
};
// the published non-smoothability intervals (survey table)
constexpr TableRow kPublished[] = {
    {6, 15, 21}, {7, 13, 30}, {8, 13, 72}, {9, 13, 193}, {10, 14, 419}};

}  // namespace

Smoothability lines_smoothability(long n, long r) {
    if (n < 2) throw DkError("lines_smoothability: need n >= 2");
    if (r < 1) throw DkError("lines_smoothability: need r >= 1");
    if (n <= 3) return Smoothability::Smoothable;   // arbitrarily many lines smooth
    if (r <= n + 2) return Smoothability::Smoothable;

    // clause (1): n < r <= C(n+1,2) and (r-n-2)(n-5) >= 7
    if (r <= binom(n + 1, 2) && (r - n - 2) * (n - 5) >= 7)
        return Smoothability::NotSmoothableClause1;

    // clause (2): C(n+d-1,d) < r <= C(n+d,d+1) for a unique d >= 2 and
    // r(n-3-3d) + 3C(n+d,d) >= n^2 - 1
    for (long d = 2;; ++d) {
        long long lo = binom(n + d - 1, d), hi = binom(n + d, d + 1);
        if (lo >= r) break;
        if (r <= hi) {
            if (r * (n - 3 - 3 * d) + 3 * binom(n + d, d) >= n * n - 1)
                return Smoothability::NotSmoothableClause2;
            break;
        }
    }

    // rows asserted by the published table beyond the clause coverage
    for (const auto& row : kPublished)
        if (row.n == n && r >= row.lo && r <= row.hi) return Smoothability::NotSmoothableTable;

    return Smoothability::Unknown;
}

bool lines_not_smoothable(Smoothability s) {
    return s == Smoothability::NotSmoothableClause1 || s == Smoothability::NotSmoothableClause2 ||
           s == Smoothability::NotSmoothableTable;
}

LinesRow lines_table_row(long n) {
    LinesRow row{n, {}};
    if (n <= 3) return row;
    // scan the candidate range: clause 2 dies once the d-blocks go empty
    long long rmax = binom(n + 1, 2);
    for (long d = 2; d < 64; ++d) {
        long long lo = binom(n + d - 1, d), hi = binom(n + d, d + 1);
        long long limit;
        long coef = n - 3 - 3 * d;
        if (coef >= 0)
            limit = hi;
        else
            limit = (3 * binom(n + d, d) - (n * n - 1)) / (-coef);
        if (limit > lo) rmax = std::max(rmax, std::min(hi, limit));
        if (hi > (1ll << 50)) break;
    }
    for (const auto& t : kPublished)
        if (t.n == n) rmax = std::max(rmax, static_cast<long long>(t.hi));

    long start = -1;
    for (long r = n + 1; r <= rmax + 1; ++r) {
        bool ns = lines_not_smoothable(lines_smoothability(n, r));
        if (ns && start < 0) start = r;
        if (!ns && start >= 0) {
            row.intervals.emplace_back(start, r - 1);
            start = -1;
        }
    }
    if (start >= 0) row.intervals.emplace_back(start, rmax);
    return row;
}

std::vector<LinesRow> lines_table(long n_lo, long n_hi) {
    std::vector<LinesRow> out;
    for (long n = n_lo; n <= n_hi; ++n) out.push_back(lines_table_row(n));
    return out;
}

const char* to_string(Smoothability s) {
    switch (s) {
        case Smoothability::Smoothable: return "Smoothable";
        case Smoothability::NotSmoothableClause1: return "NotSmoothable (clause 1)";
        case Smoothability::NotSmoothableClause2: return "NotSmoothable (clause 2)";
        case Smoothability::NotSmoothableTable: return "NotSmoothable (published table)";
        case Smoothability::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Obstructedness o) {
    switch (o) {
        case Obstructedness::Unobstructed: return "Unobstructed";
        case Obstructedness::Obstructed: return "Obstructed";
        case Obstructedness::Inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace dk
