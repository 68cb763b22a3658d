#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dk {

struct DkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector of a monomial x^e. Length always matches the ring.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    long total_degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // *this / d, requires d | *this
    Monomial quotient(const Monomial& d) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= d.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A local polynomial ring over Q: variable names, positive integer weights,
// and the local ordering "ds generalized to weights": smaller weighted degree
// wins, ties broken reverse-lexicographically. 1 is the largest monomial.
class Ring {
  public:
    Ring(std::vector<std::string> vars, std::vector<long> weights = {});

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var(int i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    long weight(int i) const { return weights_[i]; }
    const std::vector<long>& weights() const { return weights_; }
    bool weighted() const;  // any weight != 1

    // -1 if the name is not a variable of this ring
    int var_index(const std::string& name) const;

    long wdeg(const Monomial& m) const {
        long d = 0;
        for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
        return d;
    }

    // >0 if a comes before b (a is larger), <0 if after, 0 if equal.
    int cmp(const Monomial& a, const Monomial& b) const {
        long da = wdeg(a), db = wdeg(b);
        if (da != db) return da < db ? 1 : -1;
        for (int i = nvars() - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }

    bool same(const Ring& o) const { return vars_ == o.vars_ && weights_ == o.weights_; }

    static RingPtr make(std::vector<std::string> vars, std::vector<long> weights = {});

  private:
    std::vector<std::string> vars_;
    std::vector<long> weights_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get() && !a->same(*b)) throw DkError("ring mismatch");
}

}  // namespace dk
