#pragma once

#include "dk/tspaces.hpp"

namespace dk {

// Semiuniversal deformation data to a prescribed order: unfolded equations
// Fs, lifted relations Rs and the base-space ideal Js, with the exact
// bookkeeping identity Fs^T·Rs = sum_b Jgen_b·V_b modulo <t>^{order+1}.
struct DeformationResult {
    RingPtr total_ring;  // base vars t then the x vars
    RingPtr base_ring;   // t vars only
    RingPtr x_ring;
    std::vector<int> t_indices;  // positions in total_ring
    std::vector<int> x_indices;

    int k = 0;                   // number of equations
    std::vector<Poly> Fs;        // total_ring
    ModuleMatrix Rs;             // k x l, total_ring
    Ideal Js;                    // base_ring
    std::vector<PolyVec> base_multipliers;  // V_b (rank l, total_ring), per Js generator

    bool graded = false;
    std::vector<long> t_weights;  // grading weight of t_j = -nu_j (graded case)

    int order_reached = 0;
    bool stabilized = false;
    int max_order = 0;

    Ideal special;               // the input ideal (x_ring)
    std::vector<PolyVec> basis;  // T¹ basis lift used (x_ring, rank k)

    // Js mapped into total_ring
    std::vector<Poly> js_in_total() const;
};

DeformationResult versal(const Ideal& I, int max_order = 8);

// same construction with an explicitly chosen T¹ basis lift
DeformationResult versal_with_basis(const Ideal& I, const std::vector<PolyVec>& basis,
                                    int max_order = 8);

// Js equals the intersection of the expected ideals (in the base ring).
bool base_components_check(const DeformationResult& R, const std::vector<Ideal>& expected);

// Drop the constant basis directions -e_i (generators in m²) and rebuild the
// reduced unfolding over the remaining tau-k parameters.
DeformationResult eliminate_trivial_parameters(const DeformationResult& R);

// Exact flatness certificate: every entry of Fs^T·Rs has normal form 0
// against std(<Js> + <t>^{order_reached+1}) in the total ring.
bool flatness_certificate(const DeformationResult& R);

}  // namespace dk
