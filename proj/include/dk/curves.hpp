#pragma once

#include "dk/poly.hpp"

namespace dk {

// Numerical semigroup of coprime positive generators with its derived
// combinatorics.
struct NumericalSemigroup {
    std::vector<long> gens;
    long multiplicity = 0;  // least generator
    long frobenius = -1;    // largest gap (-1 when none)
    long conductor = 0;     // frobenius + 1
    std::vector<long> gaps;
    std::vector<long> pseudo_frobenius;

    long delta() const { return static_cast<long>(gaps.size()); }
    long type() const { return static_cast<long>(pseudo_frobenius.size()); }
    bool symmetric() const { return type() == 1; }

    static NumericalSemigroup from_generators(std::vector<long> gens);
    bool contains(long x) const;
};

// One branch: coordinate functions x_i(s) with x(0) = 0, truncated.
struct BranchParam {
    std::vector<Poly> coords;  // polynomials in a single variable s
};

struct CurveParam {
    std::vector<BranchParam> branches;
    // truncation order: 0 means pick automatically and certify by stability
    int truncation = 0;
};

struct CurveInvariants {
    long delta = 0;
    long r = 1;       // branches
    long mu = 0;      // 2·delta - r + 1
    long c = 0;       // colength of the conductor in the normalization
    long m = 0;       // multiplicity
    std::optional<long> t;         // Cohen-Macaulay type (semigroup route)
    std::optional<long> e_exact;   // Deligne number when exactly known
    std::optional<bool> gorenstein;
    bool smooth = false;
    bool quasihomogeneous = false;  // route knows a good C*-action
};

// delta, conductor, multiplicity, branches by exact linear algebra in the
// truncated normalization; certified by stability under N -> N+2
CurveInvariants delta_from_param(const CurveParam& C);

CurveInvariants semigroup_invariants(const NumericalSemigroup& S);

long mu_curve(const CurveParam& C);

struct DeligneInterval {
    long lo = 0, hi = 0;
    std::optional<long> e;   // exact value when known or forced by collapse
    bool gorenstein_refinement = false;  // the e <= mu bound was applied
};

DeligneInterval deligne_bounds(const CurveInvariants& inv);

enum class Obstructedness { Unobstructed, Obstructed, Inconclusive };
Obstructedness obstructedness_hint(const CurveInvariants& inv, long tau);

enum class Smoothability {
    Smoothable,
    NotSmoothableClause1,
    NotSmoothableClause2,
    NotSmoothableTable,  // covered by the published table rows only
    Unknown,
};

// L^n_r: r generic lines through the origin of C^n
Smoothability lines_smoothability(long n, long r);
bool lines_not_smoothable(Smoothability s);

struct LinesRow {
    long n;
    std::vector<std::pair<long, long>> intervals;  // maximal NotSmoothable ranges
};
LinesRow lines_table_row(long n);
std::vector<LinesRow> lines_table(long n_lo, long n_hi);

const char* to_string(Smoothability s);
const char* to_string(Obstructedness o);

}  // namespace dk
