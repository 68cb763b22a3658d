// dk: deformation-theory toolkit command line
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dk/session.hpp"

namespace {

using namespace dk;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

RingPtr ring_from_args(const std::string& vars, const std::string& weights) {
    std::vector<std::string> vs = split(vars, ',');
    std::vector<long> ws;
    for (auto& w : split(weights, ',')) ws.push_back(std::stol(w));
    return Ring::make(vs, ws);
}

Session make_session(const RingPtr& ring) {
    Session s;
    s.ring = ring;
    s.ring_name = "R";
    return s;
}

int run_and_print(const Session& s, const RunOptions& opt) {
    RunResult res = run_session(s, opt);
    if (opt.json)
        std::cout << res.json << "\n";
    else
        std::cout << res.text;
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformation invariants of isolated singularities"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions opt;
    if (const char* seed = std::getenv("DK_SEED")) opt.seed = std::strtoul(seed, nullptr, 10);
    app.add_flag("--json", opt.json, "emit a machine-readable mirror of the results");

    std::string file, ring_vars, ring_weights, gens, lifted, base_vars, branches, semi, range;
    long arg_n = 0, arg_r = 0;

    auto add_ring_opts = [&](CLI::App* c, bool needs_gens = true) {
        c->add_option("--ring", ring_vars, "comma separated variable names")->required();
        c->add_option("--weights", ring_weights, "comma separated positive weights");
        if (needs_gens)
            c->add_option("--gens", gens, "semicolon separated ideal generators")->required();
    };

    auto* crun = app.add_subcommand("run", "run a session file");
    crun->add_option("file", file, "session file")->required();
    crun->add_option("--order", opt.versal_order, "maximal lifting order for versal");
    crun->add_option("--truncation", opt.truncation, "truncation order for curves");
    crun->add_flag("--q0", opt.q0_report, "report the experimental 3/4·mu < tau question");

    auto* ct1 = app.add_subcommand("t1", "Tjurina number and first-order deformations");
    add_ring_opts(ct1);
    auto* ct2 = app.add_subcommand("t2", "obstruction module dimension");
    add_ring_opts(ct2);
    auto* crigid = app.add_subcommand("rigid", "rigidity test (T1 = 0)");
    add_ring_opts(crigid);
    auto* cgrading = app.add_subcommand("grading", "weights of a homogeneous T1 basis");
    add_ring_opts(cgrading);
    auto* cversal = app.add_subcommand("versal", "semiuniversal deformation equations");
    add_ring_opts(cversal);
    cversal->add_option("--order", opt.versal_order, "maximal lifting order");
    auto* cflat = app.add_subcommand("flat", "relation-lifting flatness test");
    add_ring_opts(cflat, false);
    cflat->add_option("--lifted", lifted, "semicolon separated unfolded equations")->required();
    cflat->add_option("--base", base_vars, "comma separated base variables")->required();
    auto* cmilnor = app.add_subcommand("milnor", "Milnor number (hypersurface or chain)");
    add_ring_opts(cmilnor);
    auto* ctjurina = app.add_subcommand("tjurina", "Tjurina number");
    add_ring_opts(ctjurina);
    auto* cmutau = app.add_subcommand("mutau", "mu, tau, tau' and homogeneity report");
    add_ring_opts(cmutau);
    cmutau->add_flag("--q0", opt.q0_report, "report the experimental 3/4·mu < tau question");
    auto* ccurve = app.add_subcommand("curve", "invariants from a parametrization");
    ccurve->add_option("--branches", branches, "branch tuples, e.g. (s^2,s^3)|(s,0)")->required();
    ccurve->add_option("--truncation", opt.truncation, "truncation order (0 = automatic)");
    auto* csemi = app.add_subcommand("semigroup", "numerical semigroup invariants");
    csemi->add_option("generators", semi, "comma separated generators")->required();
    auto* clines = app.add_subcommand("lines", "smoothability of r generic lines in C^n");
    clines->add_option("n", arg_n, "ambient dimension")->required();
    clines->add_option("r", arg_r, "number of lines")->required();
    auto* ctable = app.add_subcommand("lines-table", "non-smoothability intervals");
    ctable->add_option("range", range, "n range, e.g. 6..10")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (crun->parsed()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "cannot open '" << file << "'\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            Session s = parse_session(ss.str());
            return run_and_print(s, opt);
        }

        Session s = make_session(nullptr);
        Session::Command cmd;
        if (ct1->parsed() || ct2->parsed() || crigid->parsed() || cgrading->parsed() ||
            cversal->parsed() || cmilnor->parsed() || ctjurina->parsed() || cmutau->parsed()) {
            s = make_session(ring_from_args(ring_vars, ring_weights));
            std::vector<Poly> gs;
            for (auto& g : split(gens, ';')) gs.push_back(Poly::parse(s.ring, g));
            s.ideals.emplace("I", Ideal(s.ring, std::move(gs)));
            for (auto* c : {ct1, ct2, crigid, cgrading, cversal, cmilnor, ctjurina, cmutau})
                if (c->parsed()) cmd.verb = c->get_name();
            cmd.args = {"I"};
        } else if (cflat->parsed()) {
            s = make_session(ring_from_args(ring_vars, ring_weights));
            std::vector<Poly> Fs;
            for (auto& g : split(lifted, ';')) Fs.push_back(Poly::parse(s.ring, g));
            std::vector<int> tidx;
            for (auto& n : split(base_vars, ',')) {
                int i = s.ring->var_index(n);
                if (i < 0) throw DkError("unknown base variable '" + n + "'");
                tidx.push_back(i);
            }
            std::vector<Poly> fs;
            for (const auto& F : Fs) fs.push_back(eval_zero(F, tidx));
            s.ideals.emplace("f", Ideal(s.ring, std::move(fs)));
            s.ideals.emplace("F", Ideal(s.ring, std::move(Fs)));
            cmd.verb = "flat";
            cmd.args = {"f", "F"};
            for (auto& n : split(base_vars, ',')) cmd.args.push_back(n);
        } else if (ccurve->parsed()) {
            s = make_session(Ring::make({"s"}));
            // parse "(p1,...,pn)|(q1,...)" by re-using the session grammar
            std::string text = "ring R = 0, (s), ds;\ncurve C = " + branches + ";\ncurve C;\n";
            Session s2 = parse_session(text);
            return run_and_print(s2, opt);
        } else if (csemi->parsed()) {
            cmd.verb = "semigroup";
            cmd.args = split(semi, ',');
        } else if (clines->parsed()) {
            cmd.verb = "lines";
            cmd.args = {std::to_string(arg_n), std::to_string(arg_r)};
        } else if (ctable->parsed()) {
            cmd.verb = "lines-table";
            cmd.args = {range};
        }
        s.commands.push_back(std::move(cmd));
        return run_and_print(s, opt);
    } catch (const dk::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const dk::DkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
