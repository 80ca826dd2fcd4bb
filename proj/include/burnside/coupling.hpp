#pragma once

#include <utility>
#include <vector>

#include "burnside/partitions.hpp"
#include "burnside/rng.hpp"

namespace burnside {

struct CoupledPair {
    Tuple left, right;

    bool coalesced() const { return left == right; }
};

struct CoalescenceCurve {
    std::vector<int> t_values;
    std::vector<double> survival;  // empirical P(not coalesced by t)
    long trials = 0;
    int n = 0, k = 0;
};

// A permutation on a fixed ordered domain: image[i] is where domain[i] goes.
struct Permutation {
    std::vector<int> domain;  // ascending
    std::vector<int> image;
};

// Cycle-deletion: the permutation of `subset` obtained by deleting all other
// elements from sigma's cycle representation. Equivalently, each a in the
// subset maps to the first element of the subset reached by iterating sigma.
// If sigma is uniform on its domain, the result is uniform on the subset.
Permutation induced_permutation(const Permutation& sigma, const std::vector<int>& subset);

Permutation uniform_permutation(std::vector<int> domain, RngStream& rng);

std::vector<int> fixed_points(const Permutation& sigma);

// Joint draw (Z_a, Z_b) with Z_a uniform on A, Z_b uniform on B and
// P(Z_a = Z_b) = |A cap B| / max(|A|, |B|). The larger set plays the A role
// of the joint-distribution table; ties keep the left argument there.
std::pair<int, int> maximal_coupling_uniform(const std::vector<int>& A, const std::vector<int>& B,
                                             RngStream& rng);

// One coupled step of two chains: a single uniform permutation of
// ([k]\J_u) u ([k]\J_v) is induced onto both complements, extended by the
// identity on J_u resp. J_v, and each coordinate pair is drawn from the
// maximal coupling of the two fixed-point sets. Coalesced pairs share all
// randomness and never separate.
CoupledPair coupled_step(const CoupledPair& pair, RngStream& rng);

// Survival curve of P(not coalesced by t) over independent trials started
// from the one-block and all-singletons representatives with disjoint value
// supports when k allows it.
CoalescenceCurve coalescence_experiment(int n, int k, int t_max, long trials, RngStream& rng);

std::string coalescence_csv(const CoalescenceCurve& curve);

}  // namespace burnside
