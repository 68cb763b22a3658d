#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dk/poly.hpp"

namespace dk {

// Element of a free module O^rank, stored as one Poly per component.
// Module terms are ordered position-over-term: lower component index wins,
// ties broken by the ring's local order on the monomial part.
class PolyVec {
  public:
    PolyVec() = default;
    PolyVec(RingPtr r, int rank) : ring_(std::move(r)), v_(rank, Poly(ring_)) {
        for (auto& p : v_) p = Poly::zero(ring_);
    }
    explicit PolyVec(std::vector<Poly> comps);

    static PolyVec unit(const RingPtr& r, int rank, int comp) {
        PolyVec v(r, rank);
        v.v_[comp] = Poly::constant(r, Rational(1));
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(v_.size()); }
    const Poly& operator[](int i) const { return v_[i]; }
    void set(int i, Poly p) { v_[i] = std::move(p); }
    const std::vector<Poly>& comps() const { return v_; }

    bool is_zero() const {
        for (const auto& p : v_)
            if (!p.is_zero()) return false;
        return true;
    }

    struct Lead {
        int comp;
        Monomial m;
        Rational c;
    };
    // POT leading term: leading term of the first nonzero component.
    std::optional<Lead> lead() const {
        for (int i = 0; i < rank(); ++i)
            if (!v_[i].is_zero()) return Lead{i, v_[i].lt().m, v_[i].lt().c};
        return std::nullopt;
    }

    PolyVec operator+(const PolyVec& o) const;
    PolyVec operator-(const PolyVec& o) const;
    PolyVec operator-() const;
    PolyVec mul_term(const Monomial& m, const Rational& c) const;
    PolyVec mul(const Poly& p) const;
    PolyVec scale(const Rational& c) const;
    bool operator==(const PolyVec& o) const { return v_ == o.v_; }

    // Shifted weighted degrees; shifts empty means all-zero.
    long order(const std::vector<long>& shifts) const;    // min over terms
    long maxdeg(const std::vector<long>& shifts) const;   // max over terms
    bool homogeneous(const std::vector<long>& shifts, long* deg = nullptr) const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Poly> v_;
};

// Rectangular matrix of polynomials interpreted column-wise as a map
// O^cols -> O^rows.
struct ModuleMatrix {
    RingPtr ring;
    int rows = 0;
    std::vector<PolyVec> cols;
    // optional grading shifts of the row space (degree of a term = weighted
    // degree of the monomial + shift of its component)
    std::vector<long> shifts;

    ModuleMatrix() = default;
    ModuleMatrix(RingPtr r, int rows_) : ring(std::move(r)), rows(rows_) {}

    int ncols() const { return static_cast<int>(cols.size()); }
    void push_col(PolyVec v) {
        if (v.rank() != rows) throw DkError("column rank mismatch");
        cols.push_back(std::move(v));
    }
    const Poly& at(int r, int c) const { return cols[c][r]; }

    ModuleMatrix transpose() const;
    // M·v for v of length ncols()
    PolyVec apply(const PolyVec& v) const;

    std::string str() const;
};

// degrees of the matrix columns w.r.t. its row shifts, when all homogeneous
std::optional<std::vector<long>> col_degrees(const ModuleMatrix& M);

}  // namespace dk
