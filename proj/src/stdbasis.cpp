#include "dk/stdbasis.hpp"

#include <algorithm>

namespace dk {

bool Ideal::is_unit() const {
    for (const auto& g : gens)
        if (g.constant_coeff() != 0) return true;
    return false;
}

namespace {
std::vector<PolyVec> wrap(const std::vector<Poly>& gens) {
    std::vector<PolyVec> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(PolyVec({g}));
    return v;
}
}  // namespace

StdIdeal::StdIdeal(Ideal src, long ecart_bound) : src_(std::move(src)) {
    MoraOptions opts;
    opts.ecart_bound = ecart_bound;
    core_ = ModStd(src_.ring, 1, wrap(src_.gens), opts);
}

std::vector<Poly> StdIdeal::elements() const {
    std::vector<Poly> out;
    for (const auto& e : core_.elems()) out.push_back(e.g[0]);
    return out;
}

std::vector<Monomial> StdIdeal::leading() const {
    std::vector<Monomial> out;
    for (const auto& e : core_.elems()) out.push_back(e.g.lead()->m);
    return out;
}

StdIdeal::ScalarNF StdIdeal::normal_form(const Poly& g) const {
    require_same_ring(ring(), g.ring());
    NFCert c = core_.nf(PolyVec({g}));
    return {c.nf[0], std::move(c.unit), std::move(c.cof)};
}

bool StdIdeal::contains(const Poly& g) const { return normal_form(g).nf.is_zero(); }

std::vector<Monomial> StdIdeal::kbase() const {
    std::vector<Monomial> out;
    for (auto& [c, m] : core_.kbase()) out.push_back(m);
    return out;
}

StdIdeal std_basis(const Ideal& I, long ecart_bound) { return StdIdeal(I, ecart_bound); }

Poly normal_form(const Poly& g, const StdIdeal& B) { return B.normal_form(g).nf; }

std::optional<long> vdim(const StdIdeal& B) { return B.vdim(); }

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    const RingPtr& R = I.ring;
    // syzygies of the columns of [[1,1],[I,0],[0,J]]: the first coordinate of
    // any relation runs over I ∩ J
    const int p = I.size(), q = J.size();
    std::vector<PolyVec> gens;
    {
        PolyVec both(R, 2);
        both.set(0, Poly::constant(R, Rational(1)));
        both.set(1, Poly::constant(R, Rational(1)));
        gens.push_back(both);
    }
    for (int i = 0; i < p; ++i) {
        PolyVec v(R, 2);
        v.set(0, I.gens[i]);
        gens.push_back(v);
    }
    for (int j = 0; j < q; ++j) {
        PolyVec v(R, 2);
        v.set(1, J.gens[j]);
        gens.push_back(v);
    }
    // carrier construction in O^{2 + (1+p+q)}
    const int total = 1 + p + q;
    std::vector<PolyVec> carrier;
    for (int i = 0; i < total; ++i) {
        PolyVec w(R, 2 + total);
        w.set(0, gens[i][0]);
        w.set(1, gens[i][1]);
        w.set(2 + i, Poly::constant(R, Rational(1)));
        carrier.push_back(std::move(w));
    }
    ModStd S(R, 2 + total, carrier, {});
    std::vector<Poly> out;
    for (const auto& e : S.elems()) {
        if (!e.g[0].is_zero() || !e.g[1].is_zero()) continue;
        if (!e.g[2].is_zero()) out.push_back(e.g[2]);
    }
    return Ideal(R, std::move(out));
}

namespace {
Poly det_expand(const std::vector<std::vector<Poly>>& M, std::vector<int> rows,
                std::vector<int> cols) {
    const RingPtr& R = M[0][0].ring();
    if (rows.size() == 1) return M[rows[0]][cols[0]];
    Poly acc = Poly::zero(R);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (M[rows[0]][cols[j]].is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        Poly minor = det_expand(M, sub_rows, sub_cols);
        Poly term = M[rows[0]][cols[j]] * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
}  // namespace

Ideal minors(const std::vector<std::vector<Poly>>& M, int k) {
    if (M.empty() || M[0].empty()) throw DkError("minors of an empty matrix");
    const int rows = static_cast<int>(M.size());
    const int cols = static_cast<int>(M[0].size());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != cols) throw DkError("ragged matrix");
    if (k < 1 || k > std::min(rows, cols)) throw DkError("minor size out of range");
    const RingPtr& R = M[0][0].ring();

    std::vector<Poly> out;
    // enumerate k-subsets in lexicographic order
    std::vector<int> rs(k), cs(k);
    for (int i = 0; i < k; ++i) rs[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) cs[i] = i;
        while (true) {
            out.push_back(det_expand(M, rs, cs));
            int pos = k - 1;
            while (pos >= 0 && cs[pos] == cols - k + pos) --pos;
            if (pos < 0) break;
            ++cs[pos];
            for (int t = pos + 1; t < k; ++t) cs[t] = cs[t - 1] + 1;
        }
        int pos = k - 1;
        while (pos >= 0 && rs[pos] == rows - k + pos) --pos;
        if (pos < 0) break;
        ++rs[pos];
        for (int t = pos + 1; t < k; ++t) rs[t] = rs[t - 1] + 1;
    }
    return Ideal(R, std::move(out));
}

bool ideal_contains(const StdIdeal& B, const Poly& g) { return B.contains(g); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    StdIdeal BI(I), BJ(J);
    for (const auto& g : I.gens)
        if (!BJ.contains(g)) return false;
    for (const auto& g : J.gens)
        if (!BI.contains(g)) return false;
    return true;
}

Poly subst(const Poly& f, const std::string& var, const Poly& value) {
    int i = f.ring()->var_index(var);
    if (i < 0) throw DkError("unknown variable '" + var + "' in subst");
    return f.subst(i, value);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    std::vector<Poly> gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return Ideal(I.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    std::vector<Poly> gens;
    for (const auto& a : I.gens)
        for (const auto& b : J.gens) gens.push_back(a * b);
    return Ideal(I.ring, std::move(gens));
}

}  // namespace dk
