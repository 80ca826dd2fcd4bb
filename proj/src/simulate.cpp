#include "burnside/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace burnside {

std::vector<int> sample_stabilizer_fixed_points(const std::vector<int>& J, int k, RngStream& rng) {
    if (J.empty()) throw std::invalid_argument("sample_stabilizer_fixed_points: J must be nonempty");
    std::vector<bool> in_J(k + 1, false);
    for (int v : J) {
        if (v < 1 || v > k) throw std::invalid_argument("sample_stabilizer_fixed_points: value outside [k]");
        in_J[v] = true;
    }
    std::vector<int> complement;
    complement.reserve(k - J.size());
    for (int v = 1; v <= k; ++v)
        if (!in_J[v]) complement.push_back(v);

    // Fisher-Yates shuffle of the complement gives a uniform permutation of
    // it; an element is a fixed point when it lands on its own slot.
    std::vector<int> image(complement);
    for (int i = static_cast<int>(image.size()) - 1; i > 0; --i) {
        int j = rng.uniform_int(0, i);
        std::swap(image[i], image[j]);
    }
    std::vector<int> fp(J);
    for (size_t i = 0; i < complement.size(); ++i)
        if (image[i] == complement[i]) fp.push_back(complement[i]);
    std::sort(fp.begin(), fp.end());
    return fp;
}

Tuple burnside_step(const Tuple& u, RngStream& rng) {
    std::vector<int> fp = sample_stabilizer_fixed_points(distinct_values(u), u.k, rng);
    Tuple v;
    v.k = u.k;
    v.coords.reserve(u.coords.size());
    const int m = static_cast<int>(fp.size());
    for (int i = 0; i < u.n(); ++i) v.coords.push_back(fp[rng.uniform_int(0, m - 1)]);
    return v;
}

Trajectory lumped_trajectory(const SetPartition& x0, int k, int T, RngStream& rng) {
    Trajectory traj;
    traj.n = x0.n();
    traj.k = k;
    traj.master_seed = rng.master_seed();
    traj.stream_index = rng.stream_index();
    traj.states.reserve(T + 1);
    traj.states.push_back(x0);
    Tuple u = canonical_tuple(x0, k);
    for (int t = 0; t < T; ++t) {
        u = burnside_step(u, rng);
        traj.states.push_back(from_tuple(u));
    }
    return traj;
}

SetPartition sample_partition(int n, int k, int T, RngStream& rng) {
    if (n < 1 || k < 1) throw std::invalid_argument("sample_partition: n, k must be positive");
    SetPartition one_block{std::vector<int>(n, 0)};
    Tuple u = canonical_tuple(one_block, k);
    for (int t = 0; t < T; ++t) u = burnside_step(u, rng);
    return from_tuple(u);
}

int default_steps(int n, int k, double eps) {
    return static_cast<int>(std::ceil(2.0 * k * std::log(n / eps)));
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "# n=" << traj.n << " k=" << traj.k << " seed=" << traj.master_seed
       << " stream=" << traj.stream_index << "\n";
    os << "t,rgs,block_count\n";
    for (size_t t = 0; t < traj.states.size(); ++t) {
        os << t << ",\"" << rgs_string(traj.states[t]) << "\"," << block_count(traj.states[t])
           << "\n";
    }
    return os.str();
}

}  // namespace burnside
