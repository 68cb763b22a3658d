#include "dk/session.hpp"

#include <algorithm>
#include <sstream>

#include "dk/icis.hpp"
#include "json.hpp"

namespace dk {

namespace {

struct Cursor {
    std::string text;
    size_t pos = 0;
    int line = 1;

    void skip_ws_comments() {
        while (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            } else if (text.compare(pos, 2, "//") == 0) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }
    bool eof() {
        skip_ws_comments();
        return pos >= text.size();
    }
    char peek() {
        skip_ws_comments();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }
    std::string ident() {
        skip_ws_comments();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '-'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
    long integer() {
        skip_ws_comments();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }
    // raw text until one of the stop characters at depth 0
    std::string until(const std::string& stops) {
        skip_ws_comments();
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            if (c == '\n') ++line;
            ++pos;
        }
        std::string out = text.substr(start, pos - start);
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
            out.pop_back();
        return out;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, 0);
    }
};

std::vector<Poly> parse_ideal_items(Cursor& cur, Session& s);

// one generator item: a polynomial, minor(M,k), intersect(a,b),
// ideal(p1,...), or a named ideal reference
std::vector<Poly> parse_ideal_item(Cursor& cur, Session& s) {
    size_t save = cur.pos;
    int save_line = cur.line;
    char c = cur.peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = cur.ident();
        if (name == "minor") {
            cur.expect('(', "after minor");
            std::string mname = cur.ident();
            cur.expect(',', "in minor(M,k)");
            long k = cur.integer();
            cur.expect(')', "closing minor");
            auto it = s.matrices.find(mname);
            if (it == s.matrices.end()) cur.fail("unknown matrix '" + mname + "'");
            return minors(it->second, static_cast<int>(k)).gens;
        }
        if (name == "intersect") {
            cur.expect('(', "after intersect");
            Ideal a(s.ring, parse_ideal_item(cur, s));
            cur.expect(',', "in intersect(,)");
            Ideal b(s.ring, parse_ideal_item(cur, s));
            cur.expect(')', "closing intersect");
            return ideal_intersect(a, b).gens;
        }
        if (name == "ideal") {
            cur.expect('(', "after ideal");
            std::vector<Poly> gens = parse_ideal_items(cur, s);
            cur.expect(')', "closing ideal(...)");
            return gens;
        }
        auto it = s.ideals.find(name);
        if (it != s.ideals.end() && (cur.peek() == ',' || cur.peek() == ';' || cur.peek() == ')'))
            return it->second.gens;
        auto ip = s.polys.find(name);
        if (ip != s.polys.end() && (cur.peek() == ',' || cur.peek() == ';' || cur.peek() == ')'))
            return {ip->second};
        // plain polynomial that happens to start with letters
        cur.pos = save;
        cur.line = save_line;
    }
    std::string expr = cur.until(",;)");
    if (expr.empty()) cur.fail("expected a generator");
    return {Poly::parse(s.ring, expr)};
}

std::vector<Poly> parse_ideal_items(Cursor& cur, Session& s) {
    std::vector<Poly> gens;
    while (true) {
        for (auto& g : parse_ideal_item(cur, s)) gens.push_back(std::move(g));
        if (!cur.eat(',')) break;
    }
    return gens;
}

}  // namespace

Session parse_session(const std::string& text) {
    Session s;
    Cursor cur{text};
    auto s_ring = [&]() {
        if (!s.ring) cur.fail("no ring declared");
        return s.ring;
    };

    while (!cur.eof()) {
        std::string word = cur.ident();
        if (word == "ring") {
            if (s.ring) cur.fail("only one ring per session file");
            s.ring_name = cur.ident();
            cur.expect('=', "in ring declaration");
            long ch = cur.integer();
            if (ch != 0) cur.fail("only characteristic 0 is supported");
            cur.expect(',', "in ring declaration");
            cur.expect('(', "before the variable list");
            std::vector<std::string> vars;
            do vars.push_back(cur.ident());
            while (cur.eat(','));
            cur.expect(')', "after the variable list");
            cur.expect(',', "before the ordering");
            std::string ord = cur.ident();
            std::vector<long> weights;
            if (ord == "ws") {
                cur.expect('(', "after ws");
                do weights.push_back(cur.integer());
                while (cur.eat(','));
                cur.expect(')', "after weights");
            } else if (ord != "ds") {
                cur.fail("unsupported ordering '" + ord + "' (use ds or ws(...))");
            }
            s.ring = Ring::make(vars, weights);
            cur.expect(';', "after the ring declaration");
        } else if (word == "ideal") {
            std::string name = cur.ident();
            cur.expect('=', "in ideal declaration");
            auto ring = s_ring();
            if (s.ideals.count(name) || s.polys.count(name) || s.matrices.count(name))
                cur.fail("duplicate name '" + name + "'");
            s.ideals.emplace(name, Ideal(ring, parse_ideal_items(cur, s)));
            cur.expect(';', "after the ideal declaration");
        } else if (word == "poly") {
            std::string name = cur.ident();
            cur.expect('=', "in poly declaration");
            auto ring = s_ring();
            if (s.ideals.count(name) || s.polys.count(name))
                cur.fail("duplicate name '" + name + "'");
            std::string expr = cur.until(";");
            s.polys.emplace(name, Poly::parse(ring, expr));
            cur.expect(';', "after the poly declaration");
        } else if (word == "matrix") {
            std::string name = cur.ident();
            cur.expect('[', "in matrix declaration");
            long rows = cur.integer();
            cur.expect(']', "in matrix declaration");
            cur.expect('[', "in matrix declaration");
            long cols = cur.integer();
            cur.expect(']', "in matrix declaration");
            cur.expect('=', "in matrix declaration");
            auto ring = s_ring();
            std::vector<std::vector<Poly>> M(rows, std::vector<Poly>());
            for (long r = 0; r < rows; ++r)
                for (long c = 0; c < cols; ++c) {
                    std::string expr = cur.until(",;");
                    if (expr.empty()) cur.fail("missing matrix entry");
                    M[r].push_back(Poly::parse(ring, expr));
                    if (r + 1 < rows || c + 1 < cols) cur.expect(',', "between matrix entries");
                }
            s.matrices.emplace(name, std::move(M));
            cur.expect(';', "after the matrix declaration");
        } else if (word == "curve" && [&] {
                       size_t save = cur.pos;
                       int save_line = cur.line;
                       cur.ident();
                       bool decl = cur.peek() == '=';
                       cur.pos = save;
                       cur.line = save_line;
                       return decl;
                   }()) {
            std::string name = cur.ident();
            cur.expect('=', "in curve declaration");
            auto srng = Ring::make({"s"});
            CurveParam C;
            do {
                cur.expect('(', "branch tuple");
                BranchParam b;
                do {
                    std::string expr = cur.until(",)");
                    b.coords.push_back(expr.empty() ? Poly::zero(srng)
                                                    : Poly::parse(srng, expr));
                } while (cur.eat(','));
                cur.expect(')', "closing branch tuple");
                C.branches.push_back(std::move(b));
            } while (cur.eat('|'));
            s.curves.emplace(name, std::move(C));
            cur.expect(';', "after the curve declaration");
        } else {
            // a command: verb plus raw arguments up to ';'
            Session::Command cmd;
            cmd.verb = word;
            cmd.line = cur.line;
            while (cur.peek() != ';' && !cur.eof()) {
                std::string arg = cur.until(",; \t\n");
                if (arg.empty()) {
                    if (cur.eat(',')) continue;
                    break;
                }
                cmd.args.push_back(arg);
                cur.eat(',');
            }
            cur.expect(';', "after command '" + word + "'");
            s.commands.push_back(std::move(cmd));
        }
    }
    if (!s.ring && !std::all_of(s.commands.begin(), s.commands.end(), [](const auto& c) {
            return c.verb == "semigroup" || c.verb == "lines" || c.verb == "lines-table";
        }))
        throw ParseError("no ring declared", 1, 0);
    return s;
}

// ---------------------------------------------------------------------------
// canonical printing

std::string print_poly_sorted(std::vector<Poly> gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return a.ring()->cmp(a.lt().m, b.lt().m) > 0;
    });
    std::string out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += gens[i].str();
    }
    return out;
}

std::string print_ideal(const Ideal& I) { return print_poly_sorted(I.gens); }

// ---------------------------------------------------------------------------
// command dispatch

namespace {

using nlohmann::json;

struct Runner {
    const Session& s;
    const RunOptions& opt;
    std::ostringstream text;
    json jcmds = json::array();
    int failures = 0;

    const Ideal& ideal_arg(const Session::Command& c, size_t i = 0) {
        if (c.args.size() <= i) throw DkError(c.verb + ": missing ideal argument");
        auto it = s.ideals.find(c.args[i]);
        if (it == s.ideals.end()) throw DkError(c.verb + ": unknown ideal '" + c.args[i] + "'");
        return it->second;
    }
    Poly poly_arg(const Session::Command& c, size_t i = 0) {
        if (c.args.size() <= i) throw DkError(c.verb + ": missing argument");
        auto ip = s.polys.find(c.args[i]);
        if (ip != s.polys.end()) return ip->second;
        auto it = s.ideals.find(c.args[i]);
        if (it != s.ideals.end() && it->second.size() == 1) return it->second.gens[0];
        throw DkError(c.verb + ": unknown poly '" + c.args[i] + "'");
    }

    void run(const Session::Command& c) {
        json j{{"cmd", c.verb}};
        try {
            dispatch(c, j);
            j["ok"] = true;
        } catch (const DkError& e) {
            ++failures;
            j["ok"] = false;
            j["error"] = e.what();
            text << c.verb << ": error: " << e.what() << "\n";
        }
        jcmds.push_back(std::move(j));
    }

    void dispatch(const Session::Command& c, json& j) {
        if (c.verb == "t1") {
            auto r = t1(ideal_arg(c));
            std::string tau = r.tau ? std::to_string(*r.tau) : "infinite";
            text << "tau = " << tau << "\n";
            j["tau"] = tau;
        } else if (c.verb == "t2") {
            auto r = t2(ideal_arg(c));
            std::string dim = r.dim ? std::to_string(*r.dim) : "infinite";
            text << "dimT2 = " << dim << "\n";
            j["dim"] = dim;
        } else if (c.verb == "rigid") {
            bool r = is_rigid(ideal_arg(c));
            text << "rigid = " << (r ? "yes" : "no") << "\n";
            j["rigid"] = r;
        } else if (c.verb == "grading") {
            auto nu = t1_grading(ideal_arg(c));
            int neg = 0, zero = 0, pos = 0;
            text << "nu =";
            for (long v : nu) {
                text << " " << v;
                (v < 0 ? neg : v == 0 ? zero : pos)++;
            }
            text << "\nnegative: " << neg << ", zero: " << zero << ", positive: " << pos << "\n";
            j["nu"] = nu;
        } else if (c.verb == "versal") {
            auto r = versal(ideal_arg(c), opt.versal_order);
            text << "base variables:";
            for (int t : r.t_indices) text << " " << r.total_ring->var(t);
            text << "\nFs: " << print_poly_sorted(r.Fs) << "\n";
            text << "Rs:\n" << r.Rs.str();
            text << "Js: " << (r.Js.is_zero() ? "0" : print_ideal(r.Js)) << "\n";
            text << "order_reached = " << r.order_reached
                 << ", stabilized = " << (r.stabilized ? "yes" : "no") << "\n";
            j["Js"] = print_ideal(r.Js);
            j["Fs"] = print_poly_sorted(r.Fs);
            j["order_reached"] = r.order_reached;
            j["stabilized"] = r.stabilized;
        } else if (c.verb == "flat") {
            const Ideal& f = ideal_arg(c, 0);
            const Ideal& F = ideal_arg(c, 1);
            std::vector<std::string> tnames(c.args.begin() + 2, c.args.end());
            if (tnames.empty()) {
                // base variables: occur in F but in no generator of f
                std::vector<char> used_f(s.ring->nvars(), 0), used_F(s.ring->nvars(), 0);
                for (const auto& g : f.gens)
                    for (const auto& t : g.terms())
                        for (int i = 0; i < s.ring->nvars(); ++i)
                            if (t.m.e[i]) used_f[i] = 1;
                for (const auto& g : F.gens)
                    for (const auto& t : g.terms())
                        for (int i = 0; i < s.ring->nvars(); ++i)
                            if (t.m.e[i]) used_F[i] = 1;
                for (int i = 0; i < s.ring->nvars(); ++i)
                    if (used_F[i] && !used_f[i]) tnames.push_back(s.ring->var(i));
            }
            auto U = Unfolding::make(s.ring, tnames, F.gens);
            // sanity: the declared special fibre must match
            if (U.special.size() == f.gens.size()) {
                for (size_t i = 0; i < f.gens.size(); ++i)
                    if (map_poly(U.special[i], s.ring) != f.gens[i])
                        throw DkError("flat: F does not restrict to f at t = 0");
            }
            auto res = is_flat(U, Ideal::zero(s.ring));
            if (res.kind == FlatResult::Kind::NotFlat) {
                text << "NotFlat, witness " << res.witness->str() << "\n";
                j["flat"] = false;
                j["witness"] = res.witness->str();
            } else {
                text << "Flat\n";
                j["flat"] = true;
            }
        } else if (c.verb == "milnor") {
            auto it = s.polys.find(c.args.empty() ? "" : c.args[0]);
            long mu;
            if (it != s.polys.end()) {
                mu = milnor_hypersurface(it->second);
            } else {
                const Ideal& I = ideal_arg(c);
                mu = I.size() == 1 ? milnor_hypersurface(I.gens[0]) : milnor_icis(I.gens).mu;
            }
            text << "mu = " << mu << "\n";
            j["mu"] = mu;
        } else if (c.verb == "tjurina") {
            auto r = t1(ideal_arg(c));
            std::string tau = r.tau ? std::to_string(*r.tau) : "infinite";
            text << "tau = " << tau << "\n";
            j["tau"] = tau;
        } else if (c.verb == "mutau") {
            const Ideal& I = ideal_arg(c);
            auto rep = mu_tau_report(I);
            text << "mu = " << rep.mu << ", tau = " << rep.tau << ", tau' = " << rep.tau_prime
                 << ", weighted_homog = " << (rep.weighted_homog ? "yes" : "no")
                 << ", mu==tau: " << (rep.saito_flag ? "yes" : "no") << "\n";
            if (rep.weighted_homog) {
                text << "weights:";
                for (long w : rep.weights) text << " " << w;
                text << "\n";
            }
            if (opt.q0_report && I.size() == 1 && s.ring->nvars() == 2) {
                bool q0 = 3 * rep.mu < 4 * rep.tau;
                text << "q0 report: 3/4·mu " << (q0 ? "<" : ">=") << " tau (mu = " << rep.mu
                     << ", tau = " << rep.tau << ")\n";
                j["q0_holds"] = q0;
            }
            j["mu"] = rep.mu;
            j["tau"] = rep.tau;
            j["tau_prime"] = rep.tau_prime;
            j["weighted_homog"] = rep.weighted_homog;
        } else if (c.verb == "curve") {
            auto it = s.curves.find(c.args.empty() ? "" : c.args[0]);
            if (it == s.curves.end()) throw DkError("curve: unknown curve name");
            CurveParam C = it->second;
            if (opt.truncation > 0) C.truncation = opt.truncation;
            auto inv = delta_from_param(C);
            auto b = deligne_bounds(inv);
            text << "delta = " << inv.delta << ", c = " << inv.c << ", m = " << inv.m
                 << ", r = " << inv.r << ", mu = " << inv.mu;
            if (inv.smooth) text << " (smooth)";
            text << "\ne in [" << b.lo << ", " << b.hi << "]";
            if (b.e) text << ", e = " << *b.e;
            text << "\n";
            j["delta"] = inv.delta;
            j["c"] = inv.c;
            j["m"] = inv.m;
            j["r"] = inv.r;
            j["mu"] = inv.mu;
            j["e_lo"] = b.lo;
            j["e_hi"] = b.hi;
        } else if (c.verb == "semigroup") {
            std::vector<long> gens;
            for (auto& a : c.args) gens.push_back(std::stol(a));
            auto S = NumericalSemigroup::from_generators(gens);
            auto inv = semigroup_invariants(S);
            text << "delta = " << inv.delta << ", c = " << inv.c << ", m = " << inv.m
                 << ", mu = " << inv.mu;
            if (inv.smooth) {
                text << " (smooth)\n";
            } else {
                text << ", t = " << *inv.t << ", e = " << *inv.e_exact
                     << ", gorenstein = " << (*inv.gorenstein ? "yes" : "no") << "\n";
            }
            j["delta"] = inv.delta;
            j["c"] = inv.c;
            j["mu"] = inv.mu;
            if (inv.t) j["t"] = *inv.t;
            if (inv.e_exact) j["e"] = *inv.e_exact;
        } else if (c.verb == "lines") {
            if (c.args.size() < 2) throw DkError("lines: need n and r");
            auto res = lines_smoothability(std::stol(c.args[0]), std::stol(c.args[1]));
            text << to_string(res) << "\n";
            j["result"] = to_string(res);
        } else if (c.verb == "lines-table") {
            if (c.args.empty()) throw DkError("lines-table: need a range n1..n2");
            long lo, hi;
            auto dots = c.args[0].find("..");
            if (dots == std::string::npos) {
                lo = hi = std::stol(c.args[0]);
            } else {
                lo = std::stol(c.args[0].substr(0, dots));
                hi = std::stol(c.args[0].substr(dots + 2));
            }
            for (auto& row : lines_table(lo, hi)) {
                text << "n = " << row.n << ":";
                if (row.intervals.empty()) text << " (none)";
                for (auto& [a, b] : row.intervals) text << " [" << a << "," << b << "]";
                text << "\n";
                json ji = json::array();
                for (auto& [a, b] : row.intervals) ji.push_back({a, b});
                j["rows"].push_back({{"n", row.n}, {"intervals", ji}});
            }
        } else if (c.verb == "vdim") {
            StdIdeal B(ideal_arg(c));
            auto v = B.vdim();
            text << "vdim = " << (v ? std::to_string(*v) : "infinite") << "\n";
            j["vdim"] = v ? std::to_string(*v) : "infinite";
        } else if (c.verb == "std") {
            StdIdeal B(ideal_arg(c));
            text << print_poly_sorted(B.elements()) << "\n";
        } else if (c.verb == "syz") {
            auto S = syz_ideal(ideal_arg(c));
            text << S.str();
        } else if (c.verb == "print") {
            auto it = s.ideals.find(c.args.empty() ? "" : c.args[0]);
            if (it != s.ideals.end()) {
                text << print_ideal(it->second) << "\n";
            } else {
                text << poly_arg(c).str() << "\n";
            }
        } else {
            throw DkError("unknown command '" + c.verb + "'");
        }
    }
};

}  // namespace

RunResult run_session(const Session& s, const RunOptions& options) {
    Runner r{s, options};
    for (const auto& c : s.commands) r.run(c);
    RunResult out;
    out.text = r.text.str();
    if (options.json) {
        json top{{"commands", r.jcmds}};
        out.json = top.dump(2);
    }
    out.exit_code = r.failures ? 1 : 0;
    return out;
}

}  // namespace dk
