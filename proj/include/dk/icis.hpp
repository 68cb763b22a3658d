#pragma once

#include "dk/stdbasis.hpp"

namespace dk {

// Milnor/Tjurina data of an isolated complete intersection singularity given
// by a chain f_1,...,f_k whose prefixes are all ICIS.
struct ICISRecord {
    std::vector<Poly> chain;
    long mu = 0;
    std::vector<long> level_colengths;  // dim O_{C(f_i)}, i = 1..k
};

// dim O/<df/dx_1,...,df/dx_n>; throws with a diagnostic when not isolated
long milnor_hypersurface(const Poly& f);

// Lê–Greuel alternating sum over the chain; verifies each level
ICISRecord milnor_icis(const std::vector<Poly>& chain);

// dim O/<f_1..f_k, k-minors of Jac>; equals mu = tau for quasihomogeneous ICIS
long tau_prime(const Ideal& f);

struct MuTauReport {
    long mu = 0;
    long tau = 0;
    long tau_prime = 0;
    bool weighted_homog = false;        // literal weights found by bounded search
    std::vector<long> weights;          // a certifying weight vector, if found
    bool saito_flag = false;            // mu == tau
};

// pre: I defines an ICIS
MuTauReport mu_tau_report(const Ideal& I);

// Bounded search for positive integer weights (each <= wmax) making every
// generator weighted homogeneous. Conservative: failure is inconclusive.
std::optional<std::vector<long>> find_homogeneous_weights(const Ideal& I, long wmax = 20);

// Apply a seeded pseudorandom linear change of coordinates (exact rational
// entries, invertible).
std::vector<Poly> generic_linear_change(const std::vector<Poly>& f, unsigned long seed);

// Replace the generator tuple by an invertible pseudorandom linear
// combination; the Lê–Greuel chain wants prefixes in general position.
std::vector<Poly> generic_generator_change(const std::vector<Poly>& f, unsigned long seed);

}  // namespace dk
