#pragma once

#include "dk/stdbasis.hpp"

namespace dk {

// Module of relations: columns of the result generate
// { (r_1,...,r_s) : sum r_i·gens[i] = 0 }.
ModuleMatrix syz(const std::vector<PolyVec>& gens, const MoraOptions& opts = {});
ModuleMatrix syz(const ModuleMatrix& M, const MoraOptions& opts = {});
ModuleMatrix syz_ideal(const Ideal& I, const MoraOptions& opts = {});

// Standard basis of the submodule spanned by cols(M) + Q·(free module).
ModStd module_std(const ModuleMatrix& M, const Ideal* Q, MoraOptions opts = {});

// Weak normal form of v against cols(M) + Q·(free module); 0 iff membership.
PolyVec module_nf(const PolyVec& v, const ModuleMatrix& M, const Ideal& Q);
PolyVec module_nf(const PolyVec& v, const ModStd& S);

// Columns generating { v : M·v ≡ 0 mod Q·O^rows }.
ModuleMatrix kernel_mod(const ModuleMatrix& M, const Ideal& Q, const MoraOptions& opts = {});

// Finitely presented module coker(P) over the ring, optionally mod Q.
struct PresentedModule {
    ModuleMatrix pres;
    std::optional<Ideal> quotient;
};

std::optional<long> coker_dim(const PresentedModule& P);

// span(cols A) + Q = span(cols B) + Q
bool module_equal(const ModuleMatrix& A, const ModuleMatrix& B, const Ideal& Q);

// Koszul relations f_i e_j - f_j e_i of a list of ring elements.
std::vector<PolyVec> koszul_relations(const std::vector<Poly>& f);

}  // namespace dk
