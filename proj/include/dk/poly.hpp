#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dk/rational.hpp"
#include "dk/ring.hpp"

namespace dk {

struct ParseError : DkError {
    int line, col;
    ParseError(const std::string& msg, int l, int c)
        : DkError(msg + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l),
          col(c) {}
};

struct Term {
    Monomial m;
    Rational c;
};

// Marker value of weighted_degree/order for the zero polynomial.
inline constexpr long kDegInfinity = std::numeric_limits<long>::max();

// Sparse multivariate polynomial over Q. Terms are kept strictly descending
// in the ring's local order; no zero coefficients are stored.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}

    static Poly zero(RingPtr r) { return Poly(std::move(r)); }
    static Poly constant(RingPtr r, const Rational& c);
    static Poly variable(const RingPtr& r, int i, int power = 1);
    static Poly term(RingPtr r, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    // Largest term under the local ordering (minimal weighted degree).
    const Term& lt() const {
        if (terms_.empty()) throw DkError("leading term of the zero polynomial");
        return terms_.front();
    }

    // Order of vanishing: min weighted degree over terms; kDegInfinity for 0.
    long order() const { return terms_.empty() ? kDegInfinity : ring_->wdeg(terms_.front().m); }
    // Max weighted degree over terms; kDegInfinity marker not used here: 0 -> -1.
    long maxdeg() const;
    // Weighted homogeneous? If yes and deg != nullptr, *deg receives the degree.
    bool homogeneous(long* deg = nullptr) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly mul_term(const Monomial& m, const Rational& c) const;
    Poly scale(const Rational& c) const;

    Rational coeff(const Monomial& m) const;
    Rational constant_coeff() const { return coeff(Monomial(ring_->nvars())); }

    Poly derivative(int var) const;
    // Textbook substitution of a ring variable by a polynomial of the same ring.
    Poly subst(int var, const Poly& value) const;

    std::string str() const;
    static Poly parse(const RingPtr& r, const std::string& text);

    // Internal: build from term list that is already combined but unsorted.
    static Poly from_terms(RingPtr r, std::vector<Term> ts);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

// Map a polynomial into another ring, matching variables by name. Every
// variable that actually occurs in f must exist in the target ring.
Poly map_poly(const Poly& f, const RingPtr& target);

// Set the listed variables to zero (drop all terms using them).
Poly eval_zero(const Poly& f, const std::vector<int>& vars);

}  // namespace dk
