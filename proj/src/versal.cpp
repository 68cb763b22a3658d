#include "dk/versal.hpp"

#include <algorithm>
#include <map>

namespace dk {

namespace {

std::vector<std::string> base_names(int tau, const std::vector<std::string>& taken) {
    auto clash = [&](const std::string& n) {
        for (const auto& t : taken)
            if (t == n) return true;
        return false;
    };
    std::vector<std::string> out;
    for (char c = 'A'; c <= 'Z' && static_cast<int>(out.size()) < tau; ++c) {
        std::string n(1, c);
        if (!clash(n)) out.push_back(n);
    }
    for (int i = 27; static_cast<int>(out.size()) < tau; ++i) {
        std::string n = "t" + std::to_string(i);
        if (!clash(n)) out.push_back(n);
    }
    return out;
}

long t_part_degree(const Monomial& m, const std::vector<int>& t_idx) {
    long d = 0;
    for (int i : t_idx) d += m.e[i];
    return d;
}

// decompose a total-ring polynomial by its t-monomial part
std::map<std::vector<int>, Poly> split_by_t(const Poly& p, const std::vector<int>& t_idx,
                                            const RingPtr& x_ring) {
    std::map<std::vector<int>, Poly> out;
    for (const auto& t : p.terms()) {
        std::vector<int> key;
        key.reserve(t_idx.size());
        for (int i : t_idx) key.push_back(t.m.e[i]);
        Monomial xm = t.m;
        for (int i : t_idx) xm.e[i] = 0;
        Poly xp = map_poly(Poly::term(p.ring(), xm, t.c), x_ring);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(std::move(key), std::move(xp));
        else
            it->second += xp;
    }
    return out;
}

struct ObsReduction {
    std::vector<Poly> a;               // cofactors of the relation rows, length k
    std::vector<std::vector<Poly>> W;  // cofactors of f_a·e_s, k x l
    PolyVec nf;                        // unreduced remainder (obstruction part)
};

// exact decomposition e = sum W_{as}·f_a·e_s + sum a_c·RelRow_c + nf by
// unit-absorption iteration. The generator list carries the f·e block first
// so the lift prefers relation corrections and keeps Fs close to the linear
// unfolding, as in the paper's session output. rel_rows=false means the
// generator list has no row block.
ObsReduction exact_reduce(const PolyVec& e, const ModStd& M, int k, int l, bool rel_rows) {
    const RingPtr& R = e.ring();
    ObsReduction out;
    out.a.assign(k, Poly::zero(R));
    out.W.assign(k, std::vector<Poly>(l, Poly::zero(R)));
    out.nf = PolyVec(R, l);
    Poly one = Poly::constant(R, Rational(1));

    PolyVec work = e;
    for (int pass = 0; pass < 64; ++pass) {
        if (work.is_zero()) return out;
        NFCert c = M.nf_over_originals(work);
        for (int a = 0; a < k; ++a)
            for (int s = 0; s < l; ++s) out.W[a][s] += c.cof[a * l + s];
        if (rel_rows)
            for (int i = 0; i < k; ++i) out.a[i] += c.cof[k * l + i];
        out.nf = out.nf + c.nf;
        if (c.unit == one) return out;
        work = work.mul(one - c.unit);
    }
    throw DkError("versal: correction lift did not terminate (input is far from graded); "
                  "this implementation requires the unit-absorption iteration to stabilize");
}

}  // namespace

std::vector<Poly> DeformationResult::js_in_total() const {
    std::vector<Poly> out;
    for (const auto& g : Js.gens) out.push_back(map_poly(g, total_ring));
    return out;
}

DeformationResult versal_with_basis(const Ideal& I, const std::vector<PolyVec>& basis,
                                    int max_order) {
    if (max_order < 2) throw DkError("versal: max_order must be at least 2");
    const RingPtr& Rx = I.ring;
    const int k = I.size();
    const int tau = static_cast<int>(basis.size());
    for (const auto& b : basis)
        if (b.rank() != k) throw DkError("versal: basis rank mismatch");

    // grading: all generators and basis vectors weighted homogeneous
    std::vector<long> d;
    bool graded = true;
    for (const auto& g : I.gens) {
        long deg;
        if (!g.homogeneous(&deg)) {
            graded = false;
            break;
        }
        d.push_back(deg);
    }
    std::vector<long> minus_d;
    if (graded)
        for (long x : d) minus_d.push_back(-x);
    std::vector<long> nu;
    if (graded) {
        for (const auto& b : basis) {
            long deg;
            if (!b.homogeneous(minus_d, &deg) || deg == kDegInfinity) {
                graded = false;
                break;
            }
            nu.push_back(deg);
        }
    }

    // rings: t first, then x; ordering weights use the grading when positive
    std::vector<std::string> tnames = base_names(tau, Rx->vars());
    std::vector<long> t_ord_w(tau, 1);
    std::vector<long> t_grad_w(tau, 0);
    if (graded) {
        bool all_pos = true;
        for (int j = 0; j < tau; ++j) {
            t_grad_w[j] = -nu[j];
            if (t_grad_w[j] <= 0) all_pos = false;
        }
        if (all_pos)
            for (int j = 0; j < tau; ++j) t_ord_w[j] = t_grad_w[j];
    }
    std::vector<std::string> tot_names = tnames;
    std::vector<long> tot_w = t_ord_w;
    for (int i = 0; i < Rx->nvars(); ++i) {
        tot_names.push_back(Rx->var(i));
        tot_w.push_back(Rx->weight(i));
    }
    RingPtr Rtot = Ring::make(tot_names, tot_w);
    RingPtr Rbase = Ring::make(tnames, t_ord_w);

    DeformationResult out;
    out.total_ring = Rtot;
    out.base_ring = Rbase;
    out.x_ring = Rx;
    for (int j = 0; j < tau; ++j) out.t_indices.push_back(j);
    for (int i = 0; i < Rx->nvars(); ++i) out.x_indices.push_back(tau + i);
    out.k = k;
    out.graded = graded;
    out.t_weights = t_grad_w;
    out.special = I;
    out.basis = basis;
    out.max_order = max_order;
    out.Js = Ideal::zero(Rbase);

    // first-order unfolding
    std::vector<Poly> F;
    for (int i = 0; i < k; ++i) {
        Poly Fi = map_poly(I.gens[i], Rtot);
        for (int j = 0; j < tau; ++j)
            Fi += Poly::variable(Rtot, j) * map_poly(basis[j][i], Rtot);
        F.push_back(std::move(Fi));
    }
    out.Fs = F;

    // complete intersections: any unfolding is flat, the Koszul relations lift
    if (ci_unfolding_is_deformation(I)) {
        ModuleMatrix Rs(Rtot, k);
        for (auto& rel : koszul_relations(F)) Rs.push_col(std::move(rel));
        out.Rs = std::move(Rs);
        out.order_reached = max_order;
        out.stabilized = true;
        return out;
    }

    // general case: obstruction lifting order by order
    MoraOptions relopts;
    if (graded) relopts.shifts = {0};
    ModuleMatrix Rel = syz_ideal(I, relopts);
    const int l = Rel.ncols();
    if (l == 0) throw DkError("versal: no relations but not a complete intersection");

    // reduction target for the order-d equations, in the Hom grading of O^l
    MoraOptions mopts;
    if (graded) {
        if (auto D = col_degrees(Rel)) {
            mopts.shifts = *D;
            for (auto& x : mopts.shifts) x = -x;
        }
    }
    std::vector<PolyVec> obs_gens;
    for (int a = 0; a < k; ++a)
        for (int s = 0; s < l; ++s)
            obs_gens.push_back(PolyVec::unit(Rx, l, s).mul(I.gens[a]));
    std::vector<PolyVec> ionly_gens = obs_gens;
    for (int c = 0; c < k; ++c) {
        PolyVec row(Rx, l);
        for (int j = 0; j < l; ++j) row.set(j, Rel.at(c, j));
        obs_gens.push_back(std::move(row));
    }
    ModStd Mobs(Rx, l, obs_gens, mopts);
    ModStd Mionly(Rx, l, ionly_gens, mopts);

    // lifted relations, to be corrected order by order
    std::vector<PolyVec> Rcols;
    for (const auto& col : Rel.cols) {
        PolyVec v(Rtot, k);
        for (int i = 0; i < k; ++i) v.set(i, map_poly(col[i], Rtot));
        Rcols.push_back(std::move(v));
    }

    std::optional<T2Result> T2;           // computed at the first obstruction
    std::vector<PolyVec> t2_reps;         // w_b = B·kb_b in O^l (x ring)
    std::vector<Poly> Jtot;               // Js generators in the total ring
    std::vector<Poly> Jbase;              // the same, in the base ring
    std::optional<StdIdeal> Jstd;         // std basis of <Js> in the base ring

    auto ensure_t2 = [&]() {
        if (T2) return;
        T2 = t2(I);
        if (!T2->dim)
            throw DkError("versal: T² is infinite dimensional; obstruction bookkeeping "
                          "is not possible");
        for (const auto& [comp, mono] : T2->kb)
            t2_reps.push_back(T2->hom_gens.cols[comp].mul_term(mono, Rational(1)));
    };

    // exact lift of a vector of O^l into B-coordinates (Hom(Rel/Kos, O_X))
    auto hom_coords = [&](const PolyVec& v) {
        const int m2 = T2->hom_gens.ncols();
        PolyVec coord(Rx, m2);
        Poly one = Poly::constant(Rx, Rational(1));
        PolyVec work = v;
        for (int pass = 0; pass < 64; ++pass) {
            if (work.is_zero()) return coord;
            NFCert c = T2->hom_lift_std->nf_over_originals(work);
            if (!c.nf.is_zero())
                throw DkError("versal: obstruction does not satisfy the Hom constraints");
            for (int j = 0; j < m2; ++j) coord.set(j, coord[j] + c.cof[j]);
            if (c.unit == one) return coord;
            work = work.mul(one - c.unit);
        }
        throw DkError("versal: Hom-coordinate lift did not terminate");
    };

    // (F^T R)_c with every t-monomial reduced modulo <Js>. The base ideal is
    // generated by t-degree forms, so the reduction of a t-monomial is plain
    // division (unit 1) and the result carries no hidden <Js>-multiples. The
    // division cofactors, accumulated per Js generator, are the bookkeeping
    // multipliers V_b.
    auto product_residual = [&](int c, std::vector<PolyVec>* vout) {
        Poly e = Poly::zero(Rtot);
        for (int i = 0; i < k; ++i) e += F[i] * Rcols[c][i];
        if (Jbase.empty()) return e;
        Poly red = Poly::zero(Rtot);
        Poly one_b = Poly::constant(Rbase, Rational(1));
        for (auto& [key, hx] : split_by_t(e, out.t_indices, Rx)) {
            Monomial tm(Rbase->nvars());
            tm.e = key;
            auto cert = Jstd->core().nf_over_originals(
                PolyVec({Poly::term(Rbase, tm, Rational(1))}));
            if (cert.unit != one_b)
                throw DkError("versal: base-ideal reduction produced a unit");
            Poly hx_tot = map_poly(hx, Rtot);
            red += map_poly(cert.nf[0], Rtot) * hx_tot;
            if (vout)
                for (size_t o = 0; o < Jbase.size(); ++o) {
                    if (cert.cof[o].is_zero()) continue;
                    (*vout)[o].set(c, (*vout)[o][c] + map_poly(cert.cof[o], Rtot) * hx_tot);
                }
        }
        return red;
    };

    int noop_streak = 0;
    int reached = 0;
    for (int dord = 1; dord <= max_order; ++dord) {
        reached = dord;
        // order-d coefficients of the residual, per t-monomial
        std::map<std::vector<int>, PolyVec> eqs;
        for (int c = 0; c < l; ++c) {
            auto parts = split_by_t(product_residual(c, nullptr), out.t_indices, Rx);
            for (auto& [key, xpoly] : parts) {
                long td = 0;
                for (int e : key) td += e;
                if (td < dord && !xpoly.is_zero())
                    throw DkError("versal: internal invariant broken at order " +
                                  std::to_string(td));
                if (td != dord || xpoly.is_zero()) continue;
                auto it = eqs.find(key);
                if (it == eqs.end()) {
                    PolyVec v(Rx, l);
                    v.set(c, xpoly);
                    eqs.emplace(key, std::move(v));
                } else {
                    it->second.set(c, it->second[c] + xpoly);
                }
            }
        }
        if (eqs.empty()) {
            if (++noop_streak >= 2 && dord >= 2) {
                out.stabilized = true;
                break;
            }
            continue;
        }
        noop_streak = 0;

        // reduce each equation; collect residual obstruction classes
        std::map<std::vector<int>, ObsReduction> red;
        bool any_obstruction = false;
        for (auto& [alpha, e] : eqs) {
            // at order one only the relation corrections may move (the basis
            // vectors lie in the normal module, so e is in I·O^l)
            ObsReduction r = dord == 1 ? exact_reduce(e, Mionly, k, l, false)
                                       : exact_reduce(e, Mobs, k, l, true);
            if (dord == 1 && !r.nf.is_zero()) r = exact_reduce(e, Mobs, k, l, true);
            if (!r.nf.is_zero()) any_obstruction = true;
            red.emplace(alpha, std::move(r));
        }

        if (any_obstruction) {
            if (dord == 1) throw DkError("versal: unexpected obstruction at order 1");
            ensure_t2();
            const int t2dim = static_cast<int>(T2->kb.size());
            // class coordinates per equation
            std::map<std::vector<int>, std::vector<Rational>> gamma;
            for (auto& [alpha, r] : red) {
                if (r.nf.is_zero()) continue;
                PolyVec coord = hom_coords(r.nf);
                gamma.emplace(alpha, T2->pres_std->coordinates(coord));
            }
            // assemble the degree-d base equations tau_b; their t-monomials
            // are already reduced mod <Js>, so nonzero forms are new
            for (int b = 0; b < t2dim; ++b) {
                Poly tb = Poly::zero(Rtot);
                for (auto& [alpha, g] : gamma) {
                    if (g[b] == 0) continue;
                    Monomial m(Rtot->nvars());
                    for (int j = 0; j < tau; ++j) m.e[j] = alpha[j];
                    tb += Poly::term(Rtot, std::move(m), g[b]);
                }
                if (tb.is_zero()) continue;
                Jtot.push_back(tb);
                Jbase.push_back(map_poly(tb, Rbase));
            }
            Jstd.emplace(Ideal(Rbase, Jbase));
            // remove the class part and re-reduce exactly
            for (auto& [alpha, r] : red) {
                if (r.nf.is_zero()) continue;
                PolyVec e2 = eqs.at(alpha);
                auto& g = gamma.at(alpha);
                for (int b = 0; b < t2dim; ++b)
                    if (g[b] != 0) e2 = e2 - t2_reps[b].scale(g[b]);
                ObsReduction r2 = exact_reduce(e2, Mobs, k, l, true);
                if (!r2.nf.is_zero())
                    throw DkError("versal: residual not solvable after removing the "
                                  "obstruction class");
                red[alpha] = std::move(r2);
            }
        }

        // apply the corrections
        for (auto& [alpha, r] : red) {
            Monomial tm(Rtot->nvars());
            for (int j = 0; j < tau; ++j) tm.e[j] = alpha[j];
            for (int c = 0; c < k; ++c) {
                if (r.a[c].is_zero()) continue;
                F[c] -= Poly::term(Rtot, tm, Rational(1)) * map_poly(r.a[c], Rtot);
            }
            for (int a = 0; a < k; ++a)
                for (int s = 0; s < l; ++s) {
                    if (r.W[a][s].is_zero()) continue;
                    PolyVec& col = Rcols[s];
                    col.set(a, col[a] - Poly::term(Rtot, tm, Rational(1)) *
                                            map_poly(r.W[a][s], Rtot));
                }
        }
        out.Fs = F;
    }

    out.Fs = F;
    // final bookkeeping multipliers for the certificate identity
    std::vector<PolyVec> Vfinal(Jbase.size(), PolyVec(Rtot, l));
    for (int c = 0; c < l; ++c) (void)product_residual(c, &Vfinal);
    ModuleMatrix Rs(Rtot, k);
    for (auto& c : Rcols) Rs.push_col(std::move(c));
    out.Rs = std::move(Rs);
    out.Js = Ideal(Rbase, Jbase);
    out.base_multipliers = std::move(Vfinal);
    out.order_reached = reached;
    if (noop_streak >= 2) out.stabilized = true;
    return out;
}

DeformationResult versal(const Ideal& I, int max_order) {
    T1Result r = t1(I);
    if (!r.tau) throw DkError("versal: T¹ is infinite dimensional");
    return versal_with_basis(I, r.basis, max_order);
}

bool base_components_check(const DeformationResult& R, const std::vector<Ideal>& expected) {
    if (expected.empty()) return R.Js.is_zero();
    Ideal inter = expected[0];
    for (size_t i = 1; i < expected.size(); ++i) inter = ideal_intersect(inter, expected[i]);
    return ideal_equal(R.Js, inter);
}

DeformationResult eliminate_trivial_parameters(const DeformationResult& R) {
    const RingPtr& Rx = R.x_ring;
    const int k = R.k;
    for (const auto& g : R.special.gens)
        for (const auto& t : g.terms())
            if (t.m.total_degree() < 2)
                throw DkError("eliminate_trivial_parameters: generators must lie in m²");

    std::vector<bool> covered(k, false);
    std::vector<PolyVec> kept;
    for (const auto& b : R.basis) {
        int nonzero = 0, comp = -1;
        for (int i = 0; i < k; ++i)
            if (!b[i].is_zero()) {
                ++nonzero;
                comp = i;
            }
        if (nonzero == 1 && b[comp].is_constant() && !covered[comp]) {
            covered[comp] = true;
            continue;
        }
        bool in_m = true;
        for (int i = 0; i < k; ++i)
            for (const auto& t : b[i].terms())
                if (t.m.is_one()) in_m = false;
        if (!in_m)
            throw DkError("eliminate_trivial_parameters: basis vector neither constant nor "
                          "in m·O^k");
        kept.push_back(b);
    }
    for (int i = 0; i < k; ++i)
        if (!covered[i])
            throw DkError("eliminate_trivial_parameters: basis lacks the constant vector e_" +
                          std::to_string(i + 1));
    return versal_with_basis(R.special, kept, R.max_order);
}

bool flatness_certificate(const DeformationResult& R) {
    const RingPtr& Rtot = R.total_ring;
    std::vector<Poly> qgens = R.js_in_total();
    for (auto& m : t_power_gens(Rtot, R.t_indices, R.order_reached + 1))
        qgens.push_back(std::move(m));
    StdIdeal Q(Ideal(Rtot, std::move(qgens)));
    for (int c = 0; c < R.Rs.ncols(); ++c) {
        Poly e = Poly::zero(Rtot);
        for (int i = 0; i < R.k; ++i) e += R.Fs[i] * R.Rs.at(i, c);
        if (!e.is_zero() && !Q.contains(e)) return false;
    }
    return true;
}

}  // namespace dk
