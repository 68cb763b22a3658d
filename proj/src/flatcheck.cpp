#include "dk/flatcheck.hpp"

namespace dk {

Unfolding Unfolding::make(const RingPtr& total, const std::vector<std::string>& t_names,
                          std::vector<Poly> lifted) {
    Unfolding U;
    U.total_ring = total;
    U.lifted = std::move(lifted);
    if (U.lifted.empty()) throw DkError("unfolding needs at least one equation");
    for (const auto& F : U.lifted) require_same_ring(total, F.ring());

    std::vector<std::string> x_names;
    std::vector<long> x_weights;
    for (int i = 0; i < total->nvars(); ++i) {
        bool is_t = false;
        for (const auto& n : t_names)
            if (total->var(i) == n) is_t = true;
        if (is_t)
            U.t_indices.push_back(i);
        else {
            x_names.push_back(total->var(i));
            x_weights.push_back(total->weight(i));
        }
    }
    if (U.t_indices.size() != t_names.size()) throw DkError("unknown base variable name");
    U.x_ring = Ring::make(x_names, x_weights);
    for (const auto& F : U.lifted)
        U.special.push_back(map_poly(eval_zero(F, U.t_indices), U.x_ring));
    return U;
}

std::vector<Poly> t_power_gens(const RingPtr& ring, const std::vector<int>& t_indices, int d) {
    std::vector<Poly> out;
    std::vector<int> exps(t_indices.size(), 0);
    // compositions of d into |t| parts
    while (true) {
        int sum = 0;
        for (int e : exps) sum += e;
        if (sum == d) {
            Monomial m(ring->nvars());
            for (size_t i = 0; i < t_indices.size(); ++i) m.e[t_indices[i]] = exps[i];
            out.push_back(Poly::term(ring, std::move(m), Rational(1)));
        }
        int pos = 0;
        while (pos < static_cast<int>(exps.size())) {
            if (++exps[pos] <= d) break;
            exps[pos] = 0;
            ++pos;
        }
        if (pos == static_cast<int>(exps.size())) break;
    }
    return out;
}

FlatResult is_flat(const Unfolding& U, const Ideal& base_ideal, std::optional<int> order) {
    const RingPtr& Rx = U.x_ring;
    const RingPtr& Rt = U.total_ring;
    const int k = static_cast<int>(U.lifted.size());

    // relations of the special fibre
    Ideal If(Rx, U.special);
    ModuleMatrix Sf = syz_ideal(If);

    // relations of F, modulo base_ideal + <t>^{order+1} when requested
    std::vector<Poly> qgens;
    for (const auto& g : base_ideal.gens) qgens.push_back(map_poly(g, Rt));
    if (order) {
        for (auto& m : t_power_gens(Rt, U.t_indices, *order + 1)) qgens.push_back(std::move(m));
    }
    Ideal Q(Rt, qgens);

    ModuleMatrix SF;
    if (Q.is_zero()) {
        std::vector<PolyVec> gens;
        for (const auto& F : U.lifted) gens.push_back(PolyVec({F}));
        SF = syz(gens);
    } else {
        ModuleMatrix Fmat(Rt, 1);
        for (const auto& F : U.lifted) Fmat.push_col(PolyVec({F}));
        SF = kernel_mod(Fmat, Q);
    }

    // restrict the lifted relations to t = 0
    ModuleMatrix SF0(Rx, k);
    for (const auto& col : SF.cols) {
        PolyVec v(Rx, k);
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
            Poly p = map_poly(eval_zero(col[i], U.t_indices), Rx);
            if (!p.is_zero()) nonzero = true;
            v.set(i, std::move(p));
        }
        if (nonzero) SF0.push_col(std::move(v));
    }

    // the paper's reduce-test: every special relation must lie in the span of
    // the restricted lifted relations modulo <f>
    ModStd S = module_std(SF0, &If, {});
    for (const auto& rel : Sf.cols) {
        if (!S.nf(rel).nf.is_zero())
            return {FlatResult::Kind::NotFlat, rel, order ? *order : 0};
    }
    if (order) return {FlatResult::Kind::FlatToOrder, std::nullopt, *order};
    return {FlatResult::Kind::Flat, std::nullopt, 0};
}

bool ci_unfolding_is_deformation(const Ideal& f) {
    const int n = f.ring->nvars();
    const int k = f.size();
    if (k == 0) return true;  // the smooth germ
    StdIdeal B(f);
    return B.dim() == n - k;
}

}  // namespace dk
