#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burnside/kernel.hpp"
#include "burnside/rational.hpp"

namespace burnside {

struct DistanceCurve {
    int n = 0, k = 0;
    std::vector<int> t_values;
    std::vector<Rational> d_values;       // max-over-starts TV to stationarity
    std::vector<double> bound_values;     // n (1 - 1/(2k))^t
};

struct SpectralReport {
    int n = 0, k = 0;
    std::vector<double> eigenvalues;  // descending, padded with zeros to the
                                      // lumped dimension when k >= n
    double lambda_1 = 0.0;
    double lambda_star = 0.0;
    double relaxation_time = 0.0;
    double poincare_upper = 0.0;        // matrix-derived 1 - B_n * min Kbar
    double poincare_closed_form = 0.0;  // 1 - B_n/(n+1)^(n-1)
    double cheeger_lower = 0.0;
};

struct MinorizationReport {
    int n = 0, k = 0;
    Rational c;            // sum_v min_u K(u,v), computed per value-class
    Rational paper_floor;  // 1/(k-1)!
    // t_mix(eps) <= ceil((k-1)! log(1/eps))
    long mixing_upper(double eps) const;
};

// Exact half-L1 distance between two distributions on the same support.
Rational tv_distance(const std::vector<Rational>& p, const std::vector<Rational>& q);

// d(t) = max over starting partitions of the TV distance of the t-step
// lumped law to stationarity, computed by exact rational powers of the
// block-count projection (rows of Kbar^t are constant on block-count
// classes, so one representative per class suffices).
DistanceCurve distance_curve(const KernelMatrix& m, int t_max);
DistanceCurve distance_curve(int n, int k, int t_max);

// First t with d(t) <= eps; nullopt if not reached within the curve horizon.
std::optional<int> mixing_time(const DistanceCurve& curve, double eps);

// Eigenvalues of the block-count projection L, obtained from the symmetrized
// similarity transform D^(1/2) L D^(-1/2); the lumped matrix has the same
// nonzero spectrum padded with zeros.
SpectralReport spectrum(int n, int k);

// Poincare upper bound via geodesic canonical paths on the complete
// underlying graph: lambda_1 <= 1 - B_n * min Kbar <= 1 - B_n/(n+1)^(n-1).
// Requires k >= n. Returns (matrix_derived, closed_form).
std::pair<double, double> poincare_upper_bound(int n, int k);

// lambda_1 >= 1 - Q(S,S^c)/(pi(S) pi(S^c)). Default S is the first
// floor(B_n/2) partitions in block-count order; an explicit S is given as
// indices into the enumeration order.
double cheeger_lower_bound(int n, int k, const std::optional<std::vector<int>>& S = std::nullopt);

// (t_rel - 1) log(1/(2 eps)) <= t_mix(eps) <= ceil(t_rel log(1/(eps pi_min)))
std::pair<double, double> relaxation_mixing_bounds(double lambda_1, double pi_min, double eps);

// Minorization constant for the k < n regime, by class decomposition over
// (j_u, j_v, combined count j) with exact feasibility constraints.
MinorizationReport minorization_report(int n, int k);

struct CouplingBoundReport {
    bool holds = false;
    double min_margin = 0.0;  // min over t of bound(t) - d(t)
    DistanceCurve curve;
};

// Checks d(t) <= n (1 - 1/(2k))^t for all t <= t_max. Requires k >= n.
CouplingBoundReport verify_coupling_bound(int n, int k, int t_max);

std::string distance_curve_csv(const DistanceCurve& curve);
std::string spectral_report_json(const SpectralReport& report);
std::string minorization_report_json(const MinorizationReport& report);

}  // namespace burnside
