#include "dk/tspaces.hpp"

namespace dk {

std::vector<PolyVec> jacobian_columns(const std::vector<Poly>& f) {
    if (f.empty()) return {};
    const RingPtr& R = f[0].ring();
    const int k = static_cast<int>(f.size());
    std::vector<PolyVec> cols;
    for (int c = 0; c < R->nvars(); ++c) {
        PolyVec v(R, k);
        for (int i = 0; i < k; ++i) v.set(i, f[i].derivative(c));
        cols.push_back(std::move(v));
    }
    return cols;
}

namespace {

// degrees d_i of the generators when all are weighted homogeneous
std::optional<std::vector<long>> gen_degrees(const Ideal& I) {
    std::vector<long> d;
    for (const auto& g : I.gens) {
        long deg;
        if (!g.homogeneous(&deg)) return std::nullopt;
        d.push_back(deg);
    }
    return d;
}

std::vector<long> negate(const std::vector<long>& v) {
    std::vector<long> out(v);
    for (auto& x : out) x = -x;
    return out;
}

// basis lifts ordered by the leading module term of the vector itself:
// component first, then the ring order
void sort_basis(std::vector<PolyVec>& basis) {
    std::stable_sort(basis.begin(), basis.end(), [](const PolyVec& a, const PolyVec& b) {
        auto la = a.lead(), lb = b.lead();
        if (la->comp != lb->comp) return la->comp < lb->comp;
        return a.ring()->cmp(la->m, lb->m) > 0;
    });
}

// weights nu_j of the basis vectors w.r.t. shifts -d (empty when not all
// homogeneous)
std::optional<std::vector<long>> basis_weights(const std::vector<PolyVec>& basis,
                                               const std::vector<long>& minus_d) {
    std::vector<long> nu;
    for (const auto& g : basis) {
        long deg;
        if (!g.homogeneous(minus_d, &deg) || deg == kDegInfinity) return std::nullopt;
        nu.push_back(deg);
    }
    return nu;
}

T1Result t1_ci_route(const Ideal& I) {
    const RingPtr& R = I.ring;
    const int k = I.size();

    // T¹ = O^k / (Df·O^n + I·O^k), Thm. of the ICIS normal form
    ModuleMatrix pres(R, k);
    for (auto& c : jacobian_columns(I.gens)) pres.push_col(std::move(c));
    for (int i = 0; i < k; ++i)
        for (const auto& g : I.gens) pres.push_col(PolyVec::unit(R, k, i).mul(g));

    MoraOptions opts;
    auto d = gen_degrees(I);
    if (d) {
        pres.shifts = negate(*d);
        opts.shifts = pres.shifts;
    }

    T1Result out;
    out.ci_route = true;
    out.relations = ModuleMatrix(R, k);  // filled by callers that need it
    out.presentation = {pres, I};
    out.pres_std = std::make_shared<ModStd>(R, k, pres.cols, opts);
    out.tau = out.pres_std->vdim();

    ModuleMatrix N(R, k);
    for (int i = 0; i < k; ++i) N.push_col(PolyVec::unit(R, k, i));
    if (d) N.shifts = negate(*d);
    out.normal_gens = std::move(N);

    if (out.tau) {
        for (auto& [comp, m] : out.pres_std->kbase())
            out.basis.push_back(PolyVec::unit(R, k, comp).mul_term(m, Rational(1)));
        sort_basis(out.basis);
        if (d) {
            if (auto nu = basis_weights(out.basis, negate(*d))) out.weights = *nu;
        }
    }
    return out;
}

}  // namespace

T1Result t1(const Ideal& I) {
    const RingPtr& R = I.ring;
    const int k = I.size();
    if (I.is_unit()) throw DkError("t1 of the unit ideal");
    if (k == 0) {  // smooth germ
        T1Result out;
        out.tau = 0;
        out.ci_route = true;
        ModuleMatrix pres(R, 1);
        pres.push_col(PolyVec::unit(R, 1, 0));
        out.presentation = {pres, I};
        out.pres_std = std::make_shared<ModStd>(R, 1, pres.cols, MoraOptions{});
        out.relations = ModuleMatrix(R, 1);
        out.normal_gens = ModuleMatrix(R, 1);
        out.weights = std::vector<long>{};
        return out;
    }

    auto d = gen_degrees(I);

    if (ci_unfolding_is_deformation(I)) {
        T1Result out = t1_ci_route(I);
        out.relations = syz_ideal(I, d ? MoraOptions{30, {0}} : MoraOptions{});
        return out;
    }
    return t1_normal_module(I);
}

T1Result t1_normal_module(const Ideal& I) {
    const RingPtr& R = I.ring;
    const int k = I.size();
    if (I.is_unit()) throw DkError("t1 of the unit ideal");
    if (k == 0) return t1(I);
    auto d = gen_degrees(I);

    // the normal module N = Hom(I/I², O_X)
    MoraOptions base_opts;
    if (d) base_opts.shifts = {0};
    ModuleMatrix Rel = syz_ideal(I, base_opts);  // k x l, row shifts = d

    ModuleMatrix K;  // generators of N in O^k
    if (Rel.ncols() == 0) {
        K = ModuleMatrix(R, k);
        for (int i = 0; i < k; ++i) K.push_col(PolyVec::unit(R, k, i));
    } else {
        ModuleMatrix Rt = Rel.transpose();  // l x k
        MoraOptions kopts;
        // the Hom direction flips the grading: the ambient O^l carries the
        // negated relation degrees
        if (d) {
            if (auto D = col_degrees(Rel)) {
                Rt.shifts = negate(*D);
                kopts.shifts = Rt.shifts;
            }
        }
        K = kernel_mod(Rt, I, kopts);
    }
    if (d) K.shifts = negate(*d);

    const int m = K.ncols();
    T1Result out;
    out.relations = Rel;
    out.normal_gens = K;

    // syzygies of K mod I give the relations of N in O^m coordinates
    MoraOptions sopts;
    if (d) sopts.shifts = K.shifts;
    ModuleMatrix Ksyz = kernel_mod(K, I, sopts);

    // lift the denominator W = Df·O^n + I·O^k through [K | I·e]
    std::vector<PolyVec> lift_gens = K.cols;
    for (int i = 0; i < k; ++i)
        for (const auto& g : I.gens) lift_gens.push_back(PolyVec::unit(R, k, i).mul(g));
    ModStd Klift(R, k, lift_gens, sopts);

    ModuleMatrix pres(R, m);
    pres.cols = Ksyz.cols;
    for (auto& w : jacobian_columns(I.gens)) {
        NFCert c = Klift.nf_over_originals(w);
        if (!c.nf.is_zero()) throw DkError("t1: Jacobian column not in the normal module");
        PolyVec coord(R, m);
        for (int j = 0; j < m; ++j) coord.set(j, c.cof[j]);
        if (!coord.is_zero()) pres.push_col(std::move(coord));
    }

    // grading of the presentation space: vector degrees of the K-columns
    MoraOptions popts;
    if (d) {
        std::vector<long> ksh;
        bool ok = true;
        for (const auto& col : K.cols) {
            long deg;
            if (col.homogeneous(K.shifts, &deg) && deg != kDegInfinity)
                ksh.push_back(deg);
            else {
                ok = false;
                break;
            }
        }
        if (ok) {
            pres.shifts = ksh;
            popts.shifts = ksh;
        }
    }

    std::vector<PolyVec> pres_gens = pres.cols;
    for (int j = 0; j < m; ++j)
        for (const auto& g : I.gens) pres_gens.push_back(PolyVec::unit(R, m, j).mul(g));
    out.pres_std = std::make_shared<ModStd>(R, m, pres_gens, popts);
    out.presentation = {pres, I};
    out.tau = out.pres_std->vdim();

    if (out.tau) {
        for (auto& [comp, mono] : out.pres_std->kbase())
            out.basis.push_back(K.cols[comp].mul_term(mono, Rational(1)));
        sort_basis(out.basis);
        if (d) {
            if (auto nu = basis_weights(out.basis, negate(*d))) out.weights = *nu;
        }
    }
    return out;
}

T1Result t1_hypersurface(const Poly& f) {
    const RingPtr& R = f.ring();
    if (f.constant_coeff() != 0) throw DkError("t1_hypersurface: f must vanish at 0");
    Ideal I(R, {f});
    if (f.is_zero()) throw DkError("t1_hypersurface of 0");

    std::vector<Poly> tj{f};
    for (int i = 0; i < R->nvars(); ++i) tj.push_back(f.derivative(i));
    Ideal T(R, std::move(tj));
    StdIdeal B(T);

    T1Result out;
    out.ci_route = true;
    out.tau = B.vdim();
    ModuleMatrix pres(R, 1);
    for (const auto& g : T.gens) pres.push_col(PolyVec({g}));
    long fd;
    MoraOptions opts;
    if (f.homogeneous(&fd)) {
        pres.shifts = {-fd};
        opts.shifts = pres.shifts;
    }
    out.presentation = {pres, I};
    out.pres_std = std::make_shared<ModStd>(R, 1, pres.cols, opts);
    out.relations = ModuleMatrix(R, 1);
    ModuleMatrix N(R, 1);
    N.push_col(PolyVec::unit(R, 1, 0));
    N.shifts = pres.shifts;
    out.normal_gens = std::move(N);
    if (out.tau) {
        for (auto& m : B.kbase())
            out.basis.push_back(PolyVec({Poly::term(R, m, Rational(1))}));
        sort_basis(out.basis);
        if (f.homogeneous(&fd)) {
            if (auto nu = basis_weights(out.basis, {-fd})) out.weights = *nu;
        }
    }
    return out;
}

T2Result t2(const Ideal& I) {
    const RingPtr& R = I.ring;
    const int k = I.size();
    if (I.is_unit()) throw DkError("t2 of the unit ideal");

    T2Result out;
    auto d = gen_degrees(I);

    auto trivial = [&](void) {
        out.dim = 0;
        ModuleMatrix pres(R, 1);
        pres.push_col(PolyVec::unit(R, 1, 0));
        out.presentation = {pres, I};
        out.pres_std = std::make_shared<ModStd>(R, 1, pres.cols, MoraOptions{});
        return out;
    };

    if (k == 0) return trivial();

    MoraOptions base_opts;
    if (d) base_opts.shifts = {0};
    ModuleMatrix Rel = syz_ideal(I, base_opts);  // k x l
    out.relations = Rel;
    const int l = Rel.ncols();
    if (l == 0) return trivial();  // no relations: Rel = Kos = 0

    MoraOptions relopts;
    if (d && !Rel.shifts.empty()) relopts.shifts = Rel.shifts;

    // constraints on b ∈ O^l defining Hom(Rel/Kos, O_X):
    //  (i) syzygies among the relations annihilate b,
    //  (ii) Koszul relations, written in the relation generators, annihilate b
    ModuleMatrix S2 = syz(Rel.cols, relopts);  // l x p

    ModStd RelStd(R, k, Rel.cols, relopts);
    std::vector<PolyVec> constraint_rows = S2.cols;
    for (auto& kos : koszul_relations(I.gens)) {
        NFCert c = RelStd.nf_over_originals(kos);
        if (!c.nf.is_zero()) throw DkError("t2: Koszul vector is not a relation");
        PolyVec row(R, l);
        for (int j = 0; j < l; ++j) row.set(j, c.cof[j]);
        if (!row.is_zero()) constraint_rows.push_back(std::move(row));
    }

    ModuleMatrix CM(R, static_cast<int>(constraint_rows.size()));
    {
        // rows of the constraint matrix are the vectors above; transpose into
        // a map O^l -> O^{#constraints}
        for (int c = 0; c < l; ++c) {
            PolyVec col(R, static_cast<int>(constraint_rows.size()));
            for (size_t r = 0; r < constraint_rows.size(); ++r)
                col.set(static_cast<int>(r), constraint_rows[r][c]);
            CM.push_col(std::move(col));
        }
    }
    MoraOptions cmopts;
    std::vector<long> hom_shifts;  // shifts of O^l in the Hom direction = -D_j
    if (d) {
        if (auto D = col_degrees(Rel)) {
            hom_shifts = negate(*D);
            // the constraint map O^l(-D) -> O^c is homogeneous when the target
            // carries the negated syzygy degrees of the constraint rows (each
            // row is homogeneous of degree sigma_r w.r.t. the +D grading)
            bool ok = true;
            std::vector<long> csh;
            for (const auto& row : constraint_rows) {
                long sigma;
                if (row.homogeneous(*D, &sigma) && sigma != kDegInfinity)
                    csh.push_back(-sigma);
                else {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                CM.shifts = csh;
                cmopts.shifts = csh;
            }
        }
    }
    ModuleMatrix B = kernel_mod(CM, I, cmopts);  // l x m2
    if (d && !hom_shifts.empty()) B.shifts = hom_shifts;
    out.hom_gens = B;
    const int m2 = B.ncols();
    if (m2 == 0) return trivial();

    MoraOptions bopts;
    if (d && !B.shifts.empty()) bopts.shifts = B.shifts;

    // std of [B | I·e] for lifting vectors of O^l into B-coordinates
    std::vector<PolyVec> lift_gens = B.cols;
    for (int r = 0; r < l; ++r)
        for (const auto& g : I.gens) lift_gens.push_back(PolyVec::unit(R, l, r).mul(g));
    out.hom_lift_std = std::make_shared<ModStd>(R, l, lift_gens, bopts);

    // presentation of T² in B-coordinates: syzygies of B mod I, plus the
    // image of Φ (the rows of Rel viewed in O^l)
    ModuleMatrix Bsyz = kernel_mod(B, I, bopts);
    ModuleMatrix pres(R, m2);
    pres.cols = Bsyz.cols;
    for (int i = 0; i < k; ++i) {
        PolyVec row(R, l);
        for (int j = 0; j < l; ++j) row.set(j, Rel.at(i, j));
        NFCert c = out.hom_lift_std->nf_over_originals(row);
        if (!c.nf.is_zero()) throw DkError("t2: Φ-image does not satisfy the Hom constraints");
        PolyVec coord(R, m2);
        for (int j = 0; j < m2; ++j) coord.set(j, c.cof[j]);
        if (!coord.is_zero()) pres.push_col(std::move(coord));
    }

    MoraOptions popts;
    if (d && !B.shifts.empty()) {
        bool ok = true;
        std::vector<long> bsh;
        for (const auto& col : B.cols) {
            long deg;
            if (col.homogeneous(B.shifts, &deg) && deg != kDegInfinity)
                bsh.push_back(deg);
            else {
                ok = false;
                break;
            }
        }
        if (ok) {
            pres.shifts = bsh;
            popts.shifts = bsh;
        }
    }

    std::vector<PolyVec> pres_gens = pres.cols;
    for (int j = 0; j < m2; ++j)
        for (const auto& g : I.gens) pres_gens.push_back(PolyVec::unit(R, m2, j).mul(g));
    out.pres_std = std::make_shared<ModStd>(R, m2, pres_gens, popts);
    out.presentation = {pres, I};
    out.dim = out.pres_std->vdim();
    if (out.dim) out.kb = out.pres_std->kbase();
    return out;
}

bool is_rigid(const Ideal& I) {
    auto r = t1(I);
    return r.tau && *r.tau == 0;
}

std::vector<long> t1_grading(const Ideal& I) {
    auto d = gen_degrees(I);
    if (!d) throw DkError("t1_grading: generators are not weighted homogeneous");
    T1Result r = t1(I);
    if (!r.tau) throw DkError("t1_grading: T¹ is infinite dimensional");
    if (*r.tau == 0) return {};
    if (!r.weights)
        throw DkError("t1_grading: homogeneous basis lift not available");
    return *r.weights;
}

}  // namespace dk
