#pragma once

#include "dk/syzmod.hpp"

namespace dk {

// Unfolding F_i(x,t) of f_i(x) with F_i|_{t=0} = f_i. The total ring carries
// the x-variables followed by the base variables t.
struct Unfolding {
    RingPtr total_ring;          // x-vars then t-vars
    RingPtr x_ring;              // x-vars only
    std::vector<int> t_indices;  // positions of the t-vars in total_ring
    std::vector<Poly> special;   // f_i, in x_ring
    std::vector<Poly> lifted;    // F_i, in total_ring

    // Builds and validates: subst(F_i, t -> 0) must equal f_i exactly.
    static Unfolding make(const RingPtr& total, const std::vector<std::string>& t_names,
                          std::vector<Poly> lifted);
};

struct FlatResult {
    enum class Kind { Flat, NotFlat, FlatToOrder } kind;
    // a relation of the special fibre that does not lift (length k, x_ring)
    std::optional<PolyVec> witness;
    int order = 0;  // order of the verification for FlatToOrder

    bool flat() const { return kind != Kind::NotFlat; }
};

// Relation-lifting flatness test. base_ideal lives in the t-variables of the
// total ring (pass the zero ideal for a smooth base); order empty means the
// exact polynomial check, a value d means verification modulo
// <t>^{d+1} + base_ideal.
FlatResult is_flat(const Unfolding& U, const Ideal& base_ideal,
                   std::optional<int> order = std::nullopt);

// k generators in n variables cutting out a germ of dimension n-k: then the
// germ is a complete intersection and every unfolding is flat.
bool ci_unfolding_is_deformation(const Ideal& f);

// all monomials of exact degree d in the given variables, as polynomials
std::vector<Poly> t_power_gens(const RingPtr& ring, const std::vector<int>& t_indices, int d);

}  // namespace dk
