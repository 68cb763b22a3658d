#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dk/mora.hpp"

namespace dk {

// Ideal in the local ring; zero generators are dropped, order preserved.
struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Poly> gs) : ring(std::move(r)) {
        for (auto& g : gs) {
            require_same_ring(ring, g.ring());
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }
    static Ideal zero(RingPtr r) { return Ideal(std::move(r), {}); }
    int size() const { return static_cast<int>(gens.size()); }
    bool is_zero() const { return gens.empty(); }
    bool is_unit() const;  // contains a unit generator (nonzero constant term)
};

// Standard basis of an ideal w.r.t. the ring's local ordering.
class StdIdeal {
  public:
    StdIdeal() = default;
    StdIdeal(Ideal src, long ecart_bound = 30);

    const Ideal& source() const { return src_; }
    const RingPtr& ring() const { return src_.ring; }
    std::vector<Poly> elements() const;
    std::vector<Monomial> leading() const;

    // Mora weak normal form with certificate unit·g = sum cof·elements + nf.
    struct ScalarNF {
        Poly nf;
        Poly unit;
        std::vector<Poly> cof;
    };
    ScalarNF normal_form(const Poly& g) const;
    bool contains(const Poly& g) const;

    std::optional<long> vdim() const { return core_.vdim(); }
    std::vector<Monomial> kbase() const;
    long dim() const { return core_.dim(); }  // staircase Krull dimension

    const ModStd& core() const { return core_; }

  private:
    Ideal src_;
    ModStd core_;
};

StdIdeal std_basis(const Ideal& I, long ecart_bound = 30);

Poly normal_form(const Poly& g, const StdIdeal& B);

std::optional<long> vdim(const StdIdeal& B);

Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// all k×k minors of a rectangular matrix of polynomials
Ideal minors(const std::vector<std::vector<Poly>>& M, int k);

bool ideal_contains(const StdIdeal& B, const Poly& g);
bool ideal_equal(const Ideal& I, const Ideal& J);

// substitution by variable name
Poly subst(const Poly& f, const std::string& var, const Poly& value);

// I + J, product ideal, helpers
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

}  // namespace dk
