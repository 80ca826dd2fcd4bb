#pragma once

#include <string>
#include <vector>

#include "burnside/partitions.hpp"
#include "burnside/rng.hpp"

namespace burnside {

struct StamDraw {
    SetPartition partition;
    int urn_count = 0;   // the drawn N
    int empty_urns = 0;  // N minus occupied urns
};

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
    long df = 0;
};

struct EmptyUrnReport {
    int n = 0;
    long draws = 0;
    double mean_empty = 0.0;
    double var_empty = 0.0;
    double dispersion_index = 0.0;  // variance / mean; 1 for a Poisson law
    ChiSquareResult independence;   // empty-urn bins vs block count
};

// Truncated Dobinski series (1/e) sum_{k<=terms} k^n/k! with its tail bound.
struct DobinskiEstimate {
    double value = 0.0;
    double tail_bound = 0.0;
};
DobinskiEstimate dobinski_bell(int n, int terms);

// Stam's exact sampler: draw N from mu_n(k) = k^n/(e B_n k!), drop n labeled
// balls uniformly into N urns, read off the induced partition. The partition
// is exactly uniform on Pi_n.
class StamSampler {
public:
    explicit StamSampler(int n);

    StamDraw sample(RngStream& rng) const;
    int n() const { return n_; }

    // Truncated mu_n mass and a rigorous bound on the discarded tail.
    double truncated_mass() const { return cdf_.back(); }
    double tail_bound() const { return tail_bound_; }

private:
    int n_;
    std::vector<double> cdf_;  // cdf_[i] = P(N <= i+1); tail below 2^-60
    double tail_bound_ = 0.0;
};

StamDraw stam_sample(int n, RngStream& rng);

// Ground-truth uniform sampler by enumeration index, for tiny n.
SetPartition enumeration_sample(int n, RngStream& rng);

// Pearson chi-square against the uniform expectation over the cells.
ChiSquareResult chi_square_uniform(const std::vector<long>& counts);

// Two-sample chi-square on matched cells.
ChiSquareResult chi_square_two_sample(const std::vector<long>& a, const std::vector<long>& b);

EmptyUrnReport empty_urn_diagnostics(int n, long draws, RngStream& rng);

std::string empty_urn_report_json(const EmptyUrnReport& report);

}  // namespace burnside
