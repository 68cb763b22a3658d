#pragma once

#include <optional>
#include <vector>

#include "dk/module.hpp"

namespace dk {

struct MoraOptions {
    long ecart_bound = 30;
    // per-component degree shifts for ecart/grading; empty = all zero
    std::vector<long> shifts;
    // drop terms of shifted weighted degree above this bound during
    // reduction. Only sound when every such term provably lies in the module
    // (the m-primary high-corner argument); certificates over the original
    // generators are then no longer exact.
    std::optional<long> truncate_wdeg;
};

// Weak normal form certificate: unit·v = sum cof[i]·gens[i] + nf, as an exact
// polynomial identity with unit(0) = 1. For weighted-homogeneous data the
// unit is 1 (Mora reduces to plain division).
struct NFCert {
    PolyVec nf;
    Poly unit;
    std::vector<Poly> cof;
};

// Standard basis element together with its exact representation over the
// generators the basis was computed from.
struct StdElem {
    PolyVec g;
    std::vector<Poly> rep;  // g = sum rep[i]·orig[i]
};

class ModStd {
  public:
    ModStd() = default;
    // truncate: enable the high-corner truncation while completing the basis
    // (sound for membership, staircase and dimension queries of m-primary
    // quotients; the element representations over the originals become
    // approximate, so keep it off where those are consumed)
    ModStd(RingPtr ring, int rank, std::vector<PolyVec> gens, MoraOptions opts = {},
           bool truncate = false);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<StdElem>& elems() const { return elems_; }
    const std::vector<PolyVec>& originals() const { return orig_; }
    const MoraOptions& options() const { return opts_; }

    // Weak Mora normal form against this basis, cofactors over elems().
    NFCert nf(const PolyVec& v) const;
    // Same, with cofactors rewritten over originals().
    NFCert nf_over_originals(const PolyVec& v) const;
    bool contains(const PolyVec& v) const { return nf(v).nf.is_zero(); }

    // C-dimension of O^rank / <leading terms>; nullopt = infinite.
    std::optional<long> vdim() const;
    // Staircase monomial-vectors (comp, monomial), sorted by component then
    // descending ring order. Only valid when vdim() is finite.
    std::vector<std::pair<int, Monomial>> kbase() const;
    // Krull dimension of the staircase (combinatorial); rank-1 oriented but
    // works per component (max over components).
    long dim() const;

    // Exact decomposition of the class of v in the finite-dimensional
    // quotient: v = (combination of basis elements) + sum coeff_j·kb[j].
    // Returns coefficients aligned with kbase(); cof (optional) receives the
    // exact combination cofactors over elems(). Requires finite vdim.
    std::vector<Rational> coordinates(const PolyVec& v, std::vector<Poly>* cof = nullptr) const;

  private:
    RingPtr ring_;
    int rank_ = 0;
    MoraOptions opts_;
    std::vector<PolyVec> orig_;
    std::vector<StdElem> elems_;
};

// Mora weak normal form of v against a fixed generator list (no basis
// completion): cofactors over gens.
NFCert mora_nf(const PolyVec& v, const std::vector<PolyVec>& gens, const MoraOptions& opts);

}  // namespace dk
