#include "burnside/analysis.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(int m) {
    RationalMatrix I(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i) I[i][i] = 1;
    return I;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const int m = static_cast<int>(a.size());
    RationalMatrix c(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RationalMatrix class_projection(int n, int k) {
    KernelMatrix L = block_count_matrix(n, k);
    return L.entries;
}

// Number of lumped states: B_n for k >= n, else sum_{i<=k} stirling2(n,i).
BigInt lumped_state_count(int n, int k) {
    if (k >= n) return bell(n);
    BigInt z = 0;
    for (int i = 1; i <= k; ++i) z += stirling2(n, i);
    return z;
}

double coupling_bound_value(int n, int k, int t) {
    return n * std::pow(1.0 - 1.0 / (2.0 * k), t);
}

}  // namespace

Rational tv_distance(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: dimension mismatch");
    Rational sum = 0;
    for (size_t i = 0; i < p.size(); ++i) sum += abs(p[i] - q[i]);
    return sum / 2;
}

DistanceCurve distance_curve(int n, int k, int t_max) {
    const int m = state_class_count(n, k);
    const RationalMatrix L = class_projection(n, k);
    const Rational pi_bar = stationary_lumped(n, k);

    DistanceCurve curve;
    curve.n = n;
    curve.k = k;
    RationalMatrix power = identity_matrix(m);
    for (int t = 0; t <= t_max; ++t) {
        // Row i of Kbar^t is constant on block-count classes, so the TV to
        // stationarity from any start unwinds to the class distribution:
        //   d(t) = max_i (1/2) sum_j stirling2(n,j) |P^t(i,j)/stirling2(n,j) - pi_bar|
        Rational worst = 0;
        for (int i = 0; i < m; ++i) {
            Rational acc = 0;
            for (int j = 0; j < m; ++j) {
                BigInt cls = stirling2(n, j + 1);
                acc += Rational(cls) * abs(power[i][j] / Rational(cls) - pi_bar);
            }
            Rational half = acc / 2;
            if (half > worst) worst = half;
        }
        curve.t_values.push_back(t);
        curve.d_values.push_back(worst);
        curve.bound_values.push_back(coupling_bound_value(n, k, t));
        if (t < t_max) power = multiply(power, L);
    }
    return curve;
}

DistanceCurve distance_curve(const KernelMatrix& m, int t_max) {
    return distance_curve(m.n, m.k, t_max);
}

std::optional<int> mixing_time(const DistanceCurve& curve, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("mixing_time: eps must be in (0,1)");
    const Rational bound(eps);  // doubles are dyadic, so this is exact
    for (size_t i = 0; i < curve.d_values.size(); ++i)
        if (curve.d_values[i] <= bound) return curve.t_values[i];
    return std::nullopt;
}

SpectralReport spectrum(int n, int k) {
    const int m = state_class_count(n, k);
    MomentTable table(n, k);

    // L is similar to the symmetric matrix M(i,j) = sqrt(S(n,i) S(n,j)) Kbar(i,j)
    // via D^(1/2) L D^(-1/2) with D = diag(pi_L), so the spectrum is real.
    Eigen::MatrixXd M(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            double si = static_cast<double>(Rational(stirling2(n, i)).convert_to<double>());
            double sj = static_cast<double>(Rational(stirling2(n, j)).convert_to<double>());
            double val = lumped_transition(table, i, j).convert_to<double>() * std::sqrt(si * sj);
            M(i - 1, j - 1) = val;
            M(j - 1, i - 1) = val;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");

    SpectralReport report;
    report.n = n;
    report.k = k;
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
    std::sort(eig.rbegin(), eig.rend());

    // The lumped matrix shares the nonzero spectrum, padded with zeros.
    const BigInt dim = lumped_state_count(n, k);
    std::vector<double> padded = eig;
    if (dim <= 100000) {
        padded.resize(static_cast<size_t>(dim.convert_to<long>()), 0.0);
        std::sort(padded.rbegin(), padded.rend());
    }
    report.eigenvalues = std::move(padded);
    double second = (m >= 2) ? eig[1] : 0.0;
    report.lambda_1 = (dim > m) ? std::max(second, 0.0) : second;
    report.lambda_star = std::max(report.lambda_1, std::abs(report.eigenvalues.back()));
    report.relaxation_time = 1.0 / (1.0 - report.lambda_1);
    if (k >= n) {
        auto [mat, closed] = poincare_upper_bound(n, k);
        report.poincare_upper = mat;
        report.poincare_closed_form = closed;
    } else {
        report.poincare_upper = report.poincare_closed_form =
            std::numeric_limits<double>::quiet_NaN();
    }
    report.cheeger_lower = (dim >= 2) ? cheeger_lower_bound(n, k)
                                      : std::numeric_limits<double>::quiet_NaN();
    return report;
}

std::pair<double, double> poincare_upper_bound(int n, int k) {
    if (k < n) throw std::invalid_argument("poincare_upper_bound: requires k >= n");
    MomentTable table(n, k);
    Rational min_entry = lumped_transition(table, 1, 1);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) min_entry = std::min(min_entry, lumped_transition(table, a, b));
    const Rational bn(bell(n));
    double matrix_derived = (Rational(1) - bn * min_entry).convert_to<double>();
    BigInt denom = 1;
    for (int i = 0; i < n - 1; ++i) denom *= (n + 1);
    double closed_form = (Rational(1) - Rational(bell(n)) / Rational(denom)).convert_to<double>();
    return {matrix_derived, closed_form};
}

double cheeger_lower_bound(int n, int k, const std::optional<std::vector<int>>& S) {
    const int m = state_class_count(n, k);
    MomentTable table(n, k);
    const BigInt total = lumped_state_count(n, k);

    // Occupation counts of S per block-count class; with Kbar constant on
    // classes, Q(S,S^c) only needs these counts.
    std::vector<BigInt> in_S(m + 1, BigInt(0)), class_size(m + 1);
    for (int j = 1; j <= m; ++j) class_size[j] = stirling2(n, j);
    BigInt s_size;
    if (S) {
        auto parts = enumerate_partitions(n);
        for (int idx : *S) {
            if (idx < 0 || BigInt(idx) >= total)
                throw std::invalid_argument("cheeger_lower_bound: index out of range");
            ++in_S[block_count(parts[idx])];
        }
        s_size = static_cast<long>(S->size());
    } else {
        s_size = total / 2;  // floor(B_n/2) prefix in block-count order
        BigInt remaining = s_size;
        for (int j = 1; j <= m && remaining > 0; ++j) {
            in_S[j] = std::min(class_size[j], remaining);
            remaining -= in_S[j];
        }
    }
    if (s_size == 0 || s_size == total)
        throw std::invalid_argument("cheeger_lower_bound: S must be a proper nonempty subset");

    Rational q_flow = 0;
    const Rational pi_bar = stationary_lumped(n, k);
    for (int a = 1; a <= m; ++a) {
        if (in_S[a] == 0) continue;
        for (int b = 1; b <= m; ++b) {
            BigInt out_b = class_size[b] - in_S[b];
            if (out_b == 0) continue;
            q_flow += Rational(in_S[a] * out_b) * pi_bar * lumped_transition(table, a, b);
        }
    }
    Rational pi_S(s_size, total), pi_Sc(total - s_size, total);
    return (Rational(1) - q_flow / (pi_S * pi_Sc)).convert_to<double>();
}

std::pair<double, double> relaxation_mixing_bounds(double lambda_1, double pi_min, double eps) {
    if (lambda_1 < 0.0 || lambda_1 >= 1.0)
        throw std::invalid_argument("relaxation_mixing_bounds: lambda_1 must be in [0,1)");
    if (pi_min <= 0.0 || pi_min > 1.0)
        throw std::invalid_argument("relaxation_mixing_bounds: pi_min must be in (0,1]");
    const double t_rel = 1.0 / (1.0 - lambda_1);
    const double lower = (t_rel - 1.0) * std::log(1.0 / (2.0 * eps));
    const double upper = std::ceil(t_rel * std::log(1.0 / (eps * pi_min)));
    return {lower, upper};
}

long MinorizationReport::mixing_upper(double eps) const {
    double kfact = factorial(k - 1).convert_to<double>();
    return static_cast<long>(std::ceil(kfact * std::log(1.0 / eps)));
}

MinorizationReport minorization_report(int n, int k) {
    if (k >= n) throw std::invalid_argument("minorization_report: requires k < n");
    MinorizationReport report;
    report.n = n;
    report.k = k;

    // c = sum_v min_u K(u,v), grouped by the value-class of v. The number of
    // tuples with exactly j_v distinct values is stirling2(n,j_v) k!/(k-j_v)!.
    Rational c = 0;
    for (int j_v = 1; j_v <= k; ++j_v) {
        std::optional<Rational> min_val;
        for (int j_u = 1; j_u <= k; ++j_u) {
            for (int j = std::max(j_u, j_v); j <= std::min(j_u + j_v, k); ++j) {
                Rational val = full_transition(n, k, j_u, j_v, j);
                if (!min_val || val < *min_val) min_val = val;
            }
        }
        BigInt class_size = stirling2(n, j_v) * factorial(k) / factorial(k - j_v);
        c += Rational(class_size) * *min_val;
    }
    report.c = c;
    report.paper_floor = Rational(1, factorial(k - 1));
    return report;
}

CouplingBoundReport verify_coupling_bound(int n, int k, int t_max) {
    if (k < n) throw std::invalid_argument("verify_coupling_bound: requires k >= n");
    CouplingBoundReport report;
    report.curve = distance_curve(n, k, t_max);
    report.holds = true;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < report.curve.t_values.size(); ++i) {
        double margin =
            report.curve.bound_values[i] - report.curve.d_values[i].convert_to<double>();
        report.min_margin = std::min(report.min_margin, margin);
        if (margin < -1e-12) report.holds = false;
    }
    return report;
}

std::string distance_curve_csv(const DistanceCurve& curve) {
    std::ostringstream os;
    os.precision(17);
    os << "# n=" << curve.n << " k=" << curve.k << "\n";
    os << "t,d,d_exact,coupling_bound\n";
    for (size_t i = 0; i < curve.t_values.size(); ++i) {
        os << curve.t_values[i] << "," << curve.d_values[i].convert_to<double>() << ",\""
           << to_fraction_string(curve.d_values[i]) << "\"," << curve.bound_values[i] << "\n";
    }
    return os.str();
}

std::string spectral_report_json(const SpectralReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["eigenvalues"] = report.eigenvalues;
    j["lambda_1"] = report.lambda_1;
    j["lambda_star"] = report.lambda_star;
    j["relaxation_time"] = report.relaxation_time;
    j["poincare_upper"] = report.poincare_upper;
    j["poincare_closed_form"] = report.poincare_closed_form;
    j["cheeger_lower"] = report.cheeger_lower;
    return j.dump(2);
}

std::string minorization_report_json(const MinorizationReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["c"] = to_fraction_string(report.c);
    j["c_float"] = report.c.convert_to<double>();
    j["paper_floor"] = to_fraction_string(report.paper_floor);
    j["t_mix_upper_eps_0.01"] = report.mixing_upper(0.01);
    j["t_mix_upper_eps_0.25"] = report.mixing_upper(0.25);
    return j.dump(2);
}

}  // namespace burnside
