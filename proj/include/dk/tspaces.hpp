#pragma once

#include <memory>

#include "dk/flatcheck.hpp"

namespace dk {

// First-order deformations T¹ of O/I, presented and with a lifted basis.
struct T1Result {
    std::optional<long> tau;        // dim_C T¹; nullopt = infinite
    PresentedModule presentation;   // T¹ = coker(presentation) mod I
    std::vector<PolyVec> basis;     // lifts g_j in O^k mapping to a C-basis
    std::optional<std::vector<long>> weights;  // nu_j for graded input
    bool ci_route = false;          // complete-intersection direct quotient used

    // internals reused by versal():
    ModuleMatrix relations;      // syz of the generators (k x l)
    ModuleMatrix normal_gens;    // generators of N = Hom(I/I², O_X) in O^k
    std::shared_ptr<ModStd> pres_std;  // std of the presentation (+ I·e)
};

// Obstruction module T² of O/I with the auxiliary data versal() consumes.
struct T2Result {
    std::optional<long> dim;
    PresentedModule presentation;

    ModuleMatrix relations;  // R = syz(f), k x l
    ModuleMatrix hom_gens;   // B: generators of Hom(Rel/Kos, O_X) in O^l
    std::shared_ptr<ModStd> hom_lift_std;  // std of [B | I·e] for lifting into B-coords
    std::shared_ptr<ModStd> pres_std;      // std of presentation cols + I·e
    std::vector<std::pair<int, Monomial>> kb;  // staircase of T² in B-coords
};

T1Result t1(const Ideal& I);
// the normal-module route N = Hom(I/I², O_X), regardless of the
// complete-intersection shortcut; t1() dispatches between the two
T1Result t1_normal_module(const Ideal& I);
T1Result t1_hypersurface(const Poly& f);
T2Result t2(const Ideal& I);
bool is_rigid(const Ideal& I);

// Weights nu_j of a homogeneous C-basis of T¹ (vecdeg with shifts -d_i);
// requires weighted-homogeneous generators.
std::vector<long> t1_grading(const Ideal& I);

// Jacobian matrix columns (d f_i / d x_c)_i as vectors of O^k, c = 1..n.
std::vector<PolyVec> jacobian_columns(const std::vector<Poly>& f);

}  // namespace dk
