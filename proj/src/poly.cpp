#include "dk/poly.hpp"

#include <algorithm>
#include <cctype>

namespace dk {

Poly Poly::constant(RingPtr r, const Rational& c) {
    Poly p(r);
    if (c != 0) p.terms_.push_back({Monomial(r->nvars()), c});
    return p;
}

Poly Poly::variable(const RingPtr& r, int i, int power) {
    if (i < 0 || i >= r->nvars()) throw DkError("variable index out of range");
    Poly p(r);
    Monomial m(r->nvars());
    m.e[i] = power;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Poly Poly::term(RingPtr r, Monomial m, const Rational& c) {
    Poly p(r);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(RingPtr r, std::vector<Term> ts) {
    Poly p(r);
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return r->cmp(a.m, b.m) > 0; });
    for (auto& t : ts) {
        if (t.c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

long Poly::maxdeg() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->wdeg(t.m));
    return d;
}

bool Poly::homogeneous(long* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = kDegInfinity;
        return true;
    }
    long d = ring_->wdeg(terms_.front().m);
    for (const auto& t : terms_)
        if (ring_->wdeg(t.m) != d) return false;
    if (deg) *deg = d;
    return true;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    Poly p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].c + o.terms_[j].c;
            if (s != 0) p.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    Poly p(ring_);
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
    // multiplying by a fixed monomial preserves the ds order of terms
    return p;
}

Poly Poly::scale(const Rational& c) const { return mul_term(Monomial(ring_->nvars()), c); }

Poly operator*(const Rational& c, const Poly& p) { return p.scale(c); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    Poly acc(ring_);
    if (is_zero() || o.is_zero()) return acc;
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prods.push_back({a.m * b.m, a.c * b.c});
    return from_terms(ring_, std::move(prods));
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Rational Poly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return Rational(0);
}

Poly Poly::derivative(int var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.m, t.c * t.m.e[var]};
        d.m.e[var] -= 1;
        ts.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(ts));
}

Poly Poly::subst(int var, const Poly& value) const {
    require_same_ring(ring_, value.ring_);
    if (var < 0 || var >= ring_->nvars()) throw DkError("unknown variable in subst");
    Poly acc(ring_);
    // cache powers of value
    std::vector<Poly> pow{Poly::constant(ring_, Rational(1))};
    for (const auto& t : terms_) {
        int e = t.m.e[var];
        while (static_cast<int>(pow.size()) <= e) pow.push_back(pow.back() * value);
        Monomial rest = t.m;
        rest.e[var] = 0;
        acc += pow[e].mul_term(rest, t.c);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// printing

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? "-" : "+";
            if (c < 0) c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || t.m.is_one()) factors.push_back(to_string(c));
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            std::string f = ring_->var(i);
            if (t.m.e[i] != 1) f += "^" + std::to_string(t.m.e[i]);
            factors.push_back(std::move(f));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    void advance(size_t n) {
        for (size_t i = 0; i < n && pos < s.size(); ++i, ++pos) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance(1);
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

class PolyParser {
  public:
    PolyParser(const RingPtr& r, Lexer& lx) : ring_(r), lx_(lx) {}

    Poly expression() {
        Poly acc = Poly::zero(ring_);
        bool neg = false;
        char c = lx_.peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            lx_.advance(1);
        }
        acc = neg ? -product() : product();
        while (true) {
            c = lx_.peek();
            if (c == '+' || c == '-') {
                lx_.advance(1);
                Poly t = product();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

  private:
    Poly product() {
        Poly acc = factor();
        while (true) {
            char c = lx_.peek();
            if (c == '*') {
                lx_.advance(1);
                acc = acc * factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.advance(1);
            Poly p = expression();
            if (lx_.peek() != ')') lx_.fail("expected ')'");
            lx_.advance(1);
            return maybe_power(p);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return maybe_power(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        lx_.fail("expected a coefficient, variable or '('");
    }

    Poly maybe_power(Poly base) {
        if (lx_.peek() == '^') {
            lx_.advance(1);
            long e = integer();
            if (e < 0) lx_.fail("negative exponent");
            Poly acc = Poly::constant(ring_, Rational(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    long integer() {
        lx_.skip_ws();
        size_t start = lx_.pos;
        while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
            lx_.advance(1);
        if (lx_.pos == start) lx_.fail("expected an integer");
        return std::stol(lx_.s.substr(start, lx_.pos - start));
    }

    Poly number() {
        std::string num = digits();
        if (lx_.pos < lx_.s.size() && lx_.s[lx_.pos] == '/') {
            lx_.advance(1);
            std::string den = digits();
            return Poly::constant(ring_, parse_rational(num + "/" + den));
        }
        return Poly::constant(ring_, parse_rational(num));
    }

    std::string digits() {
        lx_.skip_ws();
        size_t start = lx_.pos;
        while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
            lx_.advance(1);
        if (lx_.pos == start) lx_.fail("expected digits");
        return lx_.s.substr(start, lx_.pos - start);
    }

    // Longest declared variable name matching the input head. Variables whose
    // name does not end in a digit may be followed by a bare exponent, so the
    // session files can use the compact "y2" for y^2 as in the paper trail.
    Poly variable() {
        lx_.skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < ring_->nvars(); ++i) {
            const std::string& v = ring_->var(i);
            if (v.size() > best_len && lx_.s.compare(lx_.pos, v.size(), v) == 0) {
                best = i;
                best_len = v.size();
            }
        }
        if (best < 0) lx_.fail("unknown variable");
        lx_.advance(best_len);
        long e = 1;
        bool name_ends_digit = std::isdigit(static_cast<unsigned char>(ring_->var(best).back()));
        if (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])) &&
            !name_ends_digit) {
            e = std::stol(digits());
        } else if (lx_.peek() == '^') {
            lx_.advance(1);
            e = integer();
            if (e < 0) lx_.fail("negative exponent");
        }
        return Poly::variable(ring_, best, static_cast<int>(e));
    }

    RingPtr ring_;
    Lexer& lx_;
};

}  // namespace

Poly Poly::parse(const RingPtr& r, const std::string& text) {
    Lexer lx(text);
    PolyParser pp(r, lx);
    Poly p = pp.expression();
    if (!lx.eof()) lx.fail("trailing input after polynomial");
    return p;
}

Poly map_poly(const Poly& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    if (src.get() == target.get()) return f;
    std::vector<int> where(src->nvars(), -1);
    for (int i = 0; i < src->nvars(); ++i) where[i] = target->var_index(src->var(i));
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (int i = 0; i < src->nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (where[i] < 0)
                throw DkError("map_poly: variable '" + src->var(i) + "' missing in target ring");
            m.e[where[i]] = t.m.e[i];
        }
        ts.push_back({std::move(m), t.c});
    }
    return Poly::from_terms(target, std::move(ts));
}

Poly eval_zero(const Poly& f, const std::vector<int>& vars) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        bool keep = true;
        for (int v : vars)
            if (t.m.e[v] > 0) {
                keep = false;
                break;
            }
        if (keep) ts.push_back(t);
    }
    return Poly::from_terms(f.ring(), std::move(ts));
}

}  // namespace dk
