#include "dk/syzmod.hpp"

namespace dk {

ModuleMatrix syz(const std::vector<PolyVec>& gens, const MoraOptions& opts) {
    if (gens.empty()) throw DkError("syz of an empty generator list");
    const RingPtr& R = gens[0].ring();
    const int k = gens[0].rank();
    const int s = static_cast<int>(gens.size());
    for (const auto& g : gens)
        if (g.rank() != k) throw DkError("syz: rank mismatch");

    // carrier construction: w_i = gens[i] ⊕ e_i in O^{k+s}; with POT the top
    // block dominates, so basis elements with zero top part generate the
    // syzygies in the bottom coordinates
    std::vector<PolyVec> carrier;
    carrier.reserve(s);
    for (int i = 0; i < s; ++i) {
        PolyVec w(R, k + s);
        for (int c = 0; c < k; ++c) w.set(c, gens[i][c]);
        w.set(k + i, Poly::constant(R, Rational(1)));
        carrier.push_back(std::move(w));
    }
    // extend shifts over the carrier block by each generator's degree, so
    // weighted-homogeneous input stays homogeneous through the computation;
    // with inhomogeneous generators fall back to the classical ecart
    MoraOptions copts = opts;
    std::vector<long> top = copts.shifts;
    top.resize(k, 0);
    std::vector<long> sh = top;
    sh.resize(k + s, 0);
    bool all_homog = true;
    for (int i = 0; i < s; ++i) {
        long d;
        if (gens[i].homogeneous(top, &d) && d != kDegInfinity)
            sh[k + i] = d;
        else
            all_homog = false;
    }
    std::vector<long> out_shifts(sh.begin() + k, sh.end());
    copts.shifts = all_homog ? std::move(sh) : std::vector<long>{};
    ModStd S(R, k + s, carrier, copts);

    ModuleMatrix out(R, s);
    out.shifts = std::move(out_shifts);
    for (const auto& e : S.elems()) {
        bool top_zero = true;
        for (int c = 0; c < k && top_zero; ++c)
            if (!e.g[c].is_zero()) top_zero = false;
        if (!top_zero) continue;
        PolyVec rel(R, s);
        for (int i = 0; i < s; ++i) rel.set(i, e.g[k + i]);
        if (!rel.is_zero()) out.push_col(std::move(rel));
    }
    return out;
}

ModuleMatrix syz(const ModuleMatrix& M, const MoraOptions& opts) { return syz(M.cols, opts); }

ModuleMatrix syz_ideal(const Ideal& I, const MoraOptions& opts) {
    std::vector<PolyVec> gens;
    for (const auto& g : I.gens) gens.push_back(PolyVec({g}));
    return syz(gens, opts);
}

namespace {
std::vector<PolyVec> with_quotient(const ModuleMatrix& M, const Ideal* Q) {
    std::vector<PolyVec> gens = M.cols;
    if (Q) {
        for (const auto& q : Q->gens)
            for (int r = 0; r < M.rows; ++r)
                gens.push_back(PolyVec::unit(M.ring, M.rows, r).mul(q));
    }
    return gens;
}
}  // namespace

ModStd module_std(const ModuleMatrix& M, const Ideal* Q, MoraOptions opts) {
    return ModStd(M.ring, M.rows, with_quotient(M, Q), opts);
}

PolyVec module_nf(const PolyVec& v, const ModuleMatrix& M, const Ideal& Q) {
    ModStd S = module_std(M, &Q, {});
    return S.nf(v).nf;
}

PolyVec module_nf(const PolyVec& v, const ModStd& S) { return S.nf(v).nf; }

ModuleMatrix kernel_mod(const ModuleMatrix& M, const Ideal& Q, const MoraOptions& opts) {
    // { v : Mv ∈ Q·O^rows } as the first coordinates of the syzygies of
    // [cols(M) | q·e_r]
    std::vector<PolyVec> gens = with_quotient(M, &Q);
    if (gens.empty()) throw DkError("kernel_mod of an empty matrix");
    ModuleMatrix S = syz(gens, opts);
    ModuleMatrix out(M.ring, M.ncols());
    for (const auto& rel : S.cols) {
        PolyVec v(M.ring, M.ncols());
        for (int i = 0; i < M.ncols(); ++i) v.set(i, rel[i]);
        if (!v.is_zero()) out.push_col(std::move(v));
    }
    return out;
}

std::optional<long> coker_dim(const PresentedModule& P) {
    ModStd S = module_std(P.pres, P.quotient ? &*P.quotient : nullptr, {});
    return S.vdim();
}

bool module_equal(const ModuleMatrix& A, const ModuleMatrix& B, const Ideal& Q) {
    if (A.rows != B.rows) return false;
    ModStd SA = module_std(A, &Q, {});
    ModStd SB = module_std(B, &Q, {});
    for (const auto& c : A.cols)
        if (!SB.nf(c).nf.is_zero()) return false;
    for (const auto& c : B.cols)
        if (!SA.nf(c).nf.is_zero()) return false;
    return true;
}

std::vector<PolyVec> koszul_relations(const std::vector<Poly>& f) {
    if (f.empty()) return {};
    const RingPtr& R = f[0].ring();
    const int k = static_cast<int>(f.size());
    std::vector<PolyVec> out;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            PolyVec v(R, k);
            v.set(j, f[i]);
            v.set(i, -f[j]);
            if (!v.is_zero()) out.push_back(std::move(v));
        }
    return out;
}

}  // namespace dk
