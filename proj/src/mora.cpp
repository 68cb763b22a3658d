#include "dk/mora.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dk {

namespace {

long shifted_deg(const Ring& ring, const std::vector<long>& shifts, int comp, const Monomial& m) {
    return ring.wdeg(m) + (shifts.empty() ? 0 : shifts[comp]);
}

long coeff_bits(const PolyVec& v) {
    long bits = 0;
    for (const auto& p : v.comps())
        for (const auto& t : p.terms()) {
            bits = std::max(bits, (long)mpz_sizeinbase(t.c.get_num().get_mpz_t(), 2));
            bits = std::max(bits, (long)mpz_sizeinbase(t.c.get_den().get_mpz_t(), 2));
        }
    return bits;
}

// positive rational c with v/c an integer vector of coprime coefficients
Rational content(const PolyVec& v) {
    mpz_class num(0), den(1);
    for (const auto& p : v.comps())
        for (const auto& t : p.terms()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
        }
    if (num == 0) return Rational(1);
    Rational c(num, den);
    c.canonicalize();
    return c;
}

long ecart_of(const Ring& ring, const std::vector<long>& shifts, const PolyVec& v,
              const PolyVec::Lead& lead) {
    return v.maxdeg(shifts) - shifted_deg(ring, shifts, lead.comp, lead.m);
}

// leading monomials per component
std::vector<std::vector<Monomial>> leading_by_comp(const std::vector<StdElem>& elems, int rank) {
    std::vector<std::vector<Monomial>> L(rank);
    for (const auto& e : elems) {
        auto l = e.g.lead();
        L[l->comp].push_back(l->m);
    }
    return L;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& L) {
    for (const auto& g : L)
        if (g.divides(m)) return true;
    return false;
}

// per-variable pure-power bounds; nullopt if some variable has no pure power
std::optional<std::vector<int>> pure_bounds(const std::vector<Monomial>& L, int nvars) {
    std::vector<int> bound(nvars, -1);
    for (const auto& m : L) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i) {
            if (m.e[i] > 0) {
                if (support >= 0) {
                    pure = false;
                    break;
                }
                support = i;
            }
        }
        if (!pure) continue;
        if (support < 0) {  // 1 in the leading module: quotient is zero
            bound.assign(nvars, 0);
            return bound;
        }
        if (bound[support] < 0 || m.e[support] < bound[support]) bound[support] = m.e[support];
    }
    for (int i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;
    return bound;
}

// drop all terms of shifted weighted degree strictly above the bound
PolyVec drop_above(const PolyVec& v, long bound, const std::vector<long>& shifts) {
    std::vector<Poly> comps;
    comps.reserve(v.rank());
    for (int c = 0; c < v.rank(); ++c) {
        long s = shifts.empty() ? 0 : shifts[c];
        std::vector<Term> keep;
        for (const auto& t : v[c].terms())
            if (v.ring()->wdeg(t.m) + s <= bound) keep.push_back(t);
        comps.push_back(Poly::from_terms(v.ring(), std::move(keep)));
    }
    return PolyVec(std::move(comps));
}

// v - (c_v/c_g)·x^(m_v/m_g)·g for matching leading terms
struct RedStep {
    Monomial m;
    Rational c;
};

RedStep quotient_term(const PolyVec::Lead& target, const PolyVec::Lead& reducer) {
    return {target.m.quotient(reducer.m), target.c / reducer.c};
}

}  // namespace

NFCert mora_nf(const PolyVec& v, const std::vector<PolyVec>& gens, const MoraOptions& opts) {
    const RingPtr& R = v.ring();
    const int n = static_cast<int>(gens.size());

    struct GenInfo {
        const PolyVec* g;
        std::optional<PolyVec::Lead> lead;
        long ecart;
    };
    std::vector<GenInfo> ginfo(n);
    for (int i = 0; i < n; ++i) {
        ginfo[i].g = &gens[i];
        ginfo[i].lead = gens[i].lead();
        ginfo[i].ecart =
            ginfo[i].lead ? ecart_of(*R, opts.shifts, gens[i], *ginfo[i].lead) : 0;
    }

    // intermediate reducta kept as extra reducers (Mora), content-normalized
    // together with their certificates
    struct Snapshot {
        PolyVec g;
        Poly unit;
        std::vector<Poly> cof;
        PolyVec::Lead lead;
        long ecart;
    };
    std::vector<Snapshot> tset;

    PolyVec h = opts.truncate_wdeg ? drop_above(v, *opts.truncate_wdeg, opts.shifts) : v;
    Poly unit = Poly::constant(R, Rational(1));
    std::vector<Poly> cof(n, Poly::zero(R));

    // the identity unit·v = sum cof·gens + h holds exactly throughout; all
    // three may be rescaled together to keep the coefficients small, and the
    // result is renormalized to unit(0) = 1 at the end
    auto strip = [&]() {
        if (coeff_bits(h) <= 512) return;
        Rational c = content(h);
        if (c == 1) return;
        Rational inv = 1 / c;
        h = h.scale(inv);
        unit = unit.scale(inv);
        for (auto& x : cof) x = x.scale(inv);
    };

    while (true) {
        auto lh = h.lead();
        if (!lh) break;
        long eh = ecart_of(*R, opts.shifts, h, *lh);
        if (eh > opts.ecart_bound)
            throw DkError("mora: ecart bound " + std::to_string(opts.ecart_bound) +
                          " exceeded (intermediate ecart " + std::to_string(eh) + ")");

        // pick reducer: minimal ecart, generators before tset, then first
        int best_src = -1, best_idx = -1;
        long best_ecart = 0;
        for (int i = 0; i < n; ++i) {
            if (!ginfo[i].lead) continue;
            if (ginfo[i].lead->comp != lh->comp || !ginfo[i].lead->m.divides(lh->m)) continue;
            if (best_src < 0 || ginfo[i].ecart < best_ecart) {
                best_src = 0;
                best_idx = i;
                best_ecart = ginfo[i].ecart;
            }
        }
        for (size_t i = 0; i < tset.size(); ++i) {
            const auto& s = tset[i];
            if (s.lead.comp != lh->comp || !s.lead.m.divides(lh->m)) continue;
            if (best_src < 0 || s.ecart < best_ecart) {
                best_src = 1;
                best_idx = static_cast<int>(i);
                best_ecart = s.ecart;
            }
        }
        if (best_src < 0) break;  // weak normal form reached

        if (best_ecart > eh) {
            Rational c = content(h);
            Rational inv = c == 0 ? Rational(1) : 1 / c;
            Snapshot s{h.scale(inv), unit.scale(inv), {}, *lh, eh};
            s.lead.c *= inv;
            s.cof.reserve(n);
            for (const auto& x : cof) s.cof.push_back(x.scale(inv));
            tset.push_back(std::move(s));
        }

        if (best_src == 0) {
            RedStep t = quotient_term(*lh, *ginfo[best_idx].lead);
            h = h - ginfo[best_idx].g->mul_term(t.m, t.c);
            cof[best_idx] = cof[best_idx] + Poly::term(R, t.m, t.c);
        } else {
            const Snapshot& s = tset[best_idx];
            RedStep t = quotient_term(*lh, s.lead);
            Poly tp = Poly::term(R, t.m, t.c);
            h = h - s.g.mul_term(t.m, t.c);
            unit = unit - tp * s.unit;
            for (int j = 0; j < n; ++j) cof[j] = cof[j] - tp * s.cof[j];
        }
        if (opts.truncate_wdeg) h = drop_above(h, *opts.truncate_wdeg, opts.shifts);
        strip();
    }

    // restore the normalization unit(0) = 1 (rescalings keep it positive)
    Rational u0 = unit.constant_coeff();
    if (u0 != 1) {
        Rational inv = 1 / u0;
        h = h.scale(inv);
        unit = unit.scale(inv);
        for (auto& x : cof) x = x.scale(inv);
    }
    return {std::move(h), std::move(unit), std::move(cof)};
}

// ---------------------------------------------------------------------------
// standard basis

ModStd::ModStd(RingPtr ring, int rank, std::vector<PolyVec> gens, MoraOptions opts,
               bool truncate)
    : ring_(std::move(ring)), rank_(rank), opts_(std::move(opts)), orig_(std::move(gens)) {
    for (const auto& g : orig_)
        if (g.rank() != rank_) throw DkError("std: generator rank mismatch");

    auto monic = [&](StdElem el) {
        auto ld = el.g.lead();
        Rational inv = 1 / ld->c;
        el.g = el.g.scale(inv);
        for (auto& r : el.rep) r = r.scale(inv);
        return el;
    };

    // dynamic high-corner bound: once every component has a pure power of
    // every variable among the leading terms, all terms of shifted weighted
    // degree above the staircase box lie in the module and may be dropped
    MoraOptions work = opts_;
    auto refresh_bound = [&]() {
        if (!truncate) return;
        auto L = leading_by_comp(elems_, rank_);
        long bound = -1;
        for (int c = 0; c < rank_; ++c) {
            auto pb = pure_bounds(L[c], ring_->nvars());
            if (!pb) return;  // no finite box yet
            long s = opts_.shifts.empty() ? 0 : opts_.shifts[c];
            long box = s;
            for (int i = 0; i < ring_->nvars(); ++i)
                box += static_cast<long>(std::max(0, (*pb)[i] - 1)) * ring_->weight(i);
            bound = std::max(bound, box);
        }
        work.truncate_wdeg = bound;
    };

    const int m = static_cast<int>(orig_.size());
    for (int i = 0; i < m; ++i) {
        if (orig_[i].is_zero()) continue;
        StdElem el{orig_[i], std::vector<Poly>(m, Poly::zero(ring_))};
        el.rep[i] = Poly::constant(ring_, Rational(1));
        elems_.push_back(monic(std::move(el)));
    }

    // pair queue ordered by (weighted degree of lcm, i, j)
    struct Pair {
        long deg;
        int i, j;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    auto add_pairs = [&](int jnew) {
        auto lj = elems_[jnew].g.lead();
        for (int i = 0; i < jnew; ++i) {
            auto li = elems_[i].g.lead();
            if (li->comp != lj->comp) continue;
            if (rank_ == 1 && li->m.coprime(lj->m)) continue;  // product criterion
            Monomial l = Monomial::lcm(li->m, lj->m);
            pairs.insert({shifted_deg(*ring_, opts_.shifts, li->comp, l), i, jnew});
        }
    };
    for (size_t j = 0; j < elems_.size(); ++j) add_pairs(static_cast<int>(j));
    refresh_bound();

    std::vector<PolyVec> basis;
    basis.reserve(elems_.size());
    for (const auto& e : elems_) basis.push_back(e.g);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const StdElem &a = elems_[p.i], &b = elems_[p.j];
        auto la = a.g.lead(), lb = b.g.lead();
        Monomial l = Monomial::lcm(la->m, lb->m);
        // both monic
        PolyVec s = a.g.mul_term(l.quotient(la->m), Rational(1)) -
                    b.g.mul_term(l.quotient(lb->m), Rational(1));
        if (s.is_zero()) continue;
        std::vector<Poly> rep(m, Poly::zero(ring_));
        for (int t = 0; t < m; ++t)
            rep[t] = a.rep[t].mul_term(l.quotient(la->m), Rational(1)) -
                     b.rep[t].mul_term(l.quotient(lb->m), Rational(1));

        if (work.truncate_wdeg) s = drop_above(s, *work.truncate_wdeg, opts_.shifts);
        if (s.is_zero()) continue;
        NFCert c = mora_nf(s, basis, work);
        if (c.nf.is_zero()) continue;

        // rep of nf over originals: nf = unit·s - sum cof_k·elem_k
        std::vector<Poly> rep_nf(m, Poly::zero(ring_));
        for (int t = 0; t < m; ++t) {
            Poly acc = c.unit * rep[t];
            for (size_t k = 0; k < elems_.size(); ++k)
                if (!c.cof[k].is_zero()) acc -= c.cof[k] * elems_[k].rep[t];
            rep_nf[t] = std::move(acc);
        }
        elems_.push_back(monic({std::move(c.nf), std::move(rep_nf)}));
        basis.push_back(elems_.back().g);
        add_pairs(static_cast<int>(elems_.size()) - 1);
        refresh_bound();
    }
}

NFCert ModStd::nf(const PolyVec& v) const {
    std::vector<PolyVec> basis;
    basis.reserve(elems_.size());
    for (const auto& e : elems_) basis.push_back(e.g);
    return mora_nf(v, basis, opts_);
}

NFCert ModStd::nf_over_originals(const PolyVec& v) const {
    NFCert c = nf(v);
    const int m = static_cast<int>(orig_.size());
    std::vector<Poly> cof(m, Poly::zero(ring_));
    for (size_t k = 0; k < elems_.size(); ++k) {
        if (c.cof[k].is_zero()) continue;
        for (int t = 0; t < m; ++t)
            if (!elems_[k].rep[t].is_zero()) cof[t] += c.cof[k] * elems_[k].rep[t];
    }
    c.cof = std::move(cof);
    return c;
}

// ---------------------------------------------------------------------------
// staircase

namespace {


void enumerate_staircase(const std::vector<Monomial>& L, const std::vector<int>& bound,
                         std::vector<Monomial>& out) {
    int n = static_cast<int>(bound.size());
    Monomial cur(n);
    // iterative odometer
    long guard = 0;
    while (true) {
        if (++guard > 8000000) throw DkError("staircase enumeration guard tripped");
        if (!divisible_by_any(cur, L)) out.push_back(cur);
        int pos = 0;
        while (pos < n) {
            if (++cur.e[pos] < bound[pos]) break;
            cur.e[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
}

}  // namespace

std::optional<long> ModStd::vdim() const {
    auto L = leading_by_comp(elems_, rank_);
    long total = 0;
    for (int c = 0; c < rank_; ++c) {
        auto bound = pure_bounds(L[c], ring_->nvars());
        if (!bound) return std::nullopt;
        std::vector<Monomial> out;
        enumerate_staircase(L[c], *bound, out);
        total += static_cast<long>(out.size());
    }
    return total;
}

std::vector<std::pair<int, Monomial>> ModStd::kbase() const {
    auto L = leading_by_comp(elems_, rank_);
    std::vector<std::pair<int, Monomial>> kb;
    for (int c = 0; c < rank_; ++c) {
        auto bound = pure_bounds(L[c], ring_->nvars());
        if (!bound) throw DkError("kbase of an infinite-dimensional quotient");
        std::vector<Monomial> out;
        enumerate_staircase(L[c], *bound, out);
        std::sort(out.begin(), out.end(),
                  [&](const Monomial& a, const Monomial& b) { return ring_->cmp(a, b) > 0; });
        for (auto& m : out) kb.emplace_back(c, std::move(m));
    }
    return kb;
}

long ModStd::dim() const {
    int n = ring_->nvars();
    if (n > 24) throw DkError("staircase dimension: too many variables");
    auto L = leading_by_comp(elems_, rank_);
    long best = -1;
    for (int c = 0; c < rank_; ++c) {
        if (L[c].empty()) {
            best = std::max(best, static_cast<long>(n));
            continue;
        }
        bool quotient_zero = false;
        for (const auto& m : L[c])
            if (m.is_one()) quotient_zero = true;
        if (quotient_zero) continue;  // contributes the empty set
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool blocked = false;
            for (const auto& m : L[c]) {
                bool supp_in = true;
                for (int i = 0; i < n && supp_in; ++i)
                    if (m.e[i] > 0 && !(mask & (1u << i))) supp_in = false;
                if (supp_in) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) best = std::max(best, static_cast<long>(__builtin_popcount(mask)));
        }
        best = std::max(best, 0l);
    }
    return best;
}

std::vector<Rational> ModStd::coordinates(const PolyVec& v, std::vector<Poly>* cof) const {
    auto kb = kbase();
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (size_t i = 0; i < kb.size(); ++i) index[{kb[i].first, kb[i].second.e}] = i;

    std::vector<Rational> coords(kb.size(), Rational(0));
    std::vector<Poly> total(elems_.size(), Poly::zero(ring_));
    std::vector<PolyVec> queue{v};
    Poly one = Poly::constant(ring_, Rational(1));

    long guard = 0;
    while (!queue.empty()) {
        if (++guard > 200000) throw DkError("class extraction did not terminate");
        PolyVec w = std::move(queue.back());
        queue.pop_back();
        if (w.is_zero()) continue;
        NFCert c = nf(w);
        for (size_t k = 0; k < elems_.size(); ++k)
            if (!c.cof[k].is_zero()) total[k] += c.cof[k];
        if (c.unit != one) queue.push_back(w.mul(one - c.unit));
        if (c.nf.is_zero()) continue;
        auto l = c.nf.lead();
        auto it = index.find({l->comp, l->m.e});
        if (it == index.end())
            throw DkError("class extraction: irreducible term outside the staircase");
        coords[it->second] += l->c;
        queue.push_back(c.nf - PolyVec::unit(ring_, rank_, l->comp)
                                   .mul_term(l->m, l->c));
    }
    if (cof) *cof = std::move(total);
    return coords;
}

}  // namespace dk
