#pragma once

#include <cstdint>
#include <vector>

#include "burnside/partitions.hpp"
#include "burnside/rng.hpp"

namespace burnside {

struct Trajectory {
    std::vector<SetPartition> states;
    int n = 0, k = 0;
    std::uint64_t master_seed = 0, stream_index = 0;
};

// First substep of the chain: draw a uniform permutation fixing every value
// of J (identity on J, uniform on the complement) and return its fixed-point
// set. Only FP(sigma) matters downstream, so sigma itself is never stored.
std::vector<int> sample_stabilizer_fixed_points(const std::vector<int>& J, int k, RngStream& rng);

// One full step: sample FP(sigma) for the stabilizer of u, then redraw every
// coordinate iid uniform on FP(sigma).
Tuple burnside_step(const Tuple& u, RngStream& rng);

// T lumped steps from canonical_tuple(x0, k), recording from_tuple after
// each step. states.front() == x0.
Trajectory lumped_trajectory(const SetPartition& x0, int k, int T, RngStream& rng);

// Final lumped state of a T-step run started from the one-block partition.
SetPartition sample_partition(int n, int k, int T, RngStream& rng);

// Default step count ceil(2k log(n/eps)), the chain's mixing-time bound.
int default_steps(int n, int k, double eps);

std::string trajectory_csv(const Trajectory& traj);

}  // namespace burnside
