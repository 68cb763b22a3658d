#include "dk/module.hpp"

#include <algorithm>

namespace dk {

PolyVec::PolyVec(std::vector<Poly> comps) : v_(std::move(comps)) {
    if (v_.empty()) throw DkError("empty polynomial vector");
    ring_ = v_[0].ring();
    for (const auto& p : v_) require_same_ring(ring_, p.ring());
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
    if (rank() != o.rank()) throw DkError("vector rank mismatch");
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = v_[i] + o.v_[i];
    return r;
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
    if (rank() != o.rank()) throw DkError("vector rank mismatch");
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = v_[i] - o.v_[i];
    return r;
}

PolyVec PolyVec::operator-() const {
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = -v_[i];
    return r;
}

PolyVec PolyVec::mul_term(const Monomial& m, const Rational& c) const {
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = v_[i].mul_term(m, c);
    return r;
}

PolyVec PolyVec::mul(const Poly& p) const {
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = v_[i] * p;
    return r;
}

PolyVec PolyVec::scale(const Rational& c) const {
    PolyVec r(ring_, rank());
    for (int i = 0; i < rank(); ++i) r.v_[i] = v_[i].scale(c);
    return r;
}

long PolyVec::order(const std::vector<long>& shifts) const {
    long best = kDegInfinity;
    for (int i = 0; i < rank(); ++i) {
        if (v_[i].is_zero()) continue;
        long s = shifts.empty() ? 0 : shifts[i];
        best = std::min(best, v_[i].order() + s);
    }
    return best;
}

long PolyVec::maxdeg(const std::vector<long>& shifts) const {
    long best = -1;
    for (int i = 0; i < rank(); ++i) {
        if (v_[i].is_zero()) continue;
        long s = shifts.empty() ? 0 : shifts[i];
        best = std::max(best, v_[i].maxdeg() + s);
    }
    return best;
}

bool PolyVec::homogeneous(const std::vector<long>& shifts, long* deg) const {
    long d = kDegInfinity;
    for (int i = 0; i < rank(); ++i) {
        if (v_[i].is_zero()) continue;
        long s = shifts.empty() ? 0 : shifts[i];
        long di;
        if (!v_[i].homogeneous(&di)) return false;
        di += s;
        if (d == kDegInfinity)
            d = di;
        else if (d != di)
            return false;
    }
    if (deg) *deg = d;
    return true;
}

std::string PolyVec::str() const {
    std::string out = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) out += ", ";
        out += v_[i].str();
    }
    return out + ")";
}

ModuleMatrix ModuleMatrix::transpose() const {
    ModuleMatrix t(ring, ncols());
    for (int r = 0; r < rows; ++r) {
        PolyVec col(ring, ncols());
        for (int c = 0; c < ncols(); ++c) col.set(c, cols[c][r]);
        t.push_col(std::move(col));
    }
    return t;
}

PolyVec ModuleMatrix::apply(const PolyVec& v) const {
    if (v.rank() != ncols()) throw DkError("matrix/vector size mismatch");
    PolyVec out(ring, rows);
    for (int c = 0; c < ncols(); ++c) {
        if (v[c].is_zero()) continue;
        out = out + cols[c].mul(v[c]);
    }
    return out;
}

std::string ModuleMatrix::str() const {
    std::string out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < ncols(); ++c) {
            out += at(r, c).str();
            if (c + 1 < ncols()) out += ",\t";
        }
        out += "\n";
    }
    return out;
}


std::optional<std::vector<long>> col_degrees(const ModuleMatrix& M) {
    std::vector<long> D;
    for (const auto& col : M.cols) {
        long deg;
        if (!col.homogeneous(M.shifts, &deg) || deg == kDegInfinity) return std::nullopt;
        D.push_back(deg);
    }
    return D;
}

}  // namespace dk

