#pragma once

#include <map>
#include <string>
#include <vector>

#include "dk/curves.hpp"
#include "dk/versal.hpp"

namespace dk {

// One parsed session file: a ring declaration, named objects, and a command
// list, mirroring the paper's computer-algebra sessions.
struct Session {
    RingPtr ring;
    std::string ring_name;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Poly> polys;
    std::map<std::string, std::vector<std::vector<Poly>>> matrices;
    std::map<std::string, CurveParam> curves;

    struct Command {
        std::string verb;
        std::vector<std::string> args;
        int line = 0;
    };
    std::vector<Command> commands;
};

Session parse_session(const std::string& text);

struct RunOptions {
    int versal_order = 8;
    int truncation = 0;        // 0 = automatic
    unsigned long seed = 1;    // generic coordinate/generator changes
    bool json = false;
    bool q0_report = false;    // opt-in 3/4·mu < tau experimental report
};

struct RunResult {
    std::string text;
    std::string json;   // filled when options.json
    int exit_code = 0;  // 0 ok, 1 computation error, 2 syntax error
};

RunResult run_session(const Session& s, const RunOptions& options);

// canonical printing: generators sorted by (weighted degree, ring order)
std::string print_ideal(const Ideal& I);
std::string print_poly_sorted(std::vector<Poly> gens);

}  // namespace dk
