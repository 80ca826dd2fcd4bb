// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include "burnside/analysis.hpp"
#include "burnside/combinatorics.hpp"
#include "burnside/coupling.hpp"
#include "burnside/kernel.hpp"
#include "burnside/oracle.hpp"
#include "burnside/simulate.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace burnside;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!pass) ++failures;
}

bool golden_matrix_33() {
    auto m = lumped_matrix(3, 3);
    if (m.size() != 5) return false;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            Rational expected = i == 0 ? (j == 0 ? Rational(5, 9) : Rational(1, 9))
                                       : (j == 0 ? Rational(1, 9) : Rational(2, 9));
            if (m.entries[i][j] != expected) return false;
        }
    }
    return true;
}

bool golden_matrix_n2() {
    for (int k = 2; k <= 8; ++k) {
        Rational q(subfactorial(k), factorial(k));
        auto m = lumped_matrix(2, k);
        if (m.size() != 2) return false;
        if (m.entries[0][0] != 1 - q || m.entries[0][1] != q) return false;
        if (m.entries[1][0] != q || m.entries[1][1] != 1 - q) return false;
        auto report = spectrum(2, k);
        double expected = (1 - 2 * q).convert_to<double>();
        if (std::abs(report.eigenvalues[1] - expected) > 1e-10) return false;
    }
    return true;
}

bool golden_spectrum_33() {
    auto report = spectrum(3, 3);
    if (report.eigenvalues.size() != 5) return false;
    const double want[5] = {1.0, 4.0 / 9.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 5; ++i)
        if (std::abs(report.eigenvalues[i] - want[i]) > 1e-10) return false;
    return true;
}

bool stochastic_symmetric() {
    // verified at the block-count class level: Kbar is class-determined, so
    // exact row sums over partitions and entrywise symmetry reduce to these
    // identities on the class matrix
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ks{n, n + 1, 2 * n};
        if (n >= 2) ks.push_back(n - 1);
        for (int k : ks) {
            const int m = state_class_count(n, k);
            MomentTable table(n, k);
            for (int a = 1; a <= m; ++a) {
                Rational row_sum = 0;
                for (int b = 1; b <= m; ++b) {
                    Rational e = lumped_transition(table, a, b);
                    if (e < 0) return false;
                    if (e != lumped_transition(table, b, a)) return false;
                    row_sum += Rational(stirling2(n, b)) * e;
                }
                if (row_sum != 1) return false;
            }
        }
    }
    // and the dense materialization agrees where it is small
    for (int n = 2; n <= 5; ++n) {
        auto dense = lumped_matrix(n, n);
        for (int i = 0; i < dense.size(); ++i) {
            Rational row_sum = 0;
            for (int j = 0; j < dense.size(); ++j) {
                if (dense.entries[i][j] != dense.entries[j][i]) return false;
                row_sum += dense.entries[i][j];
            }
            if (row_sum != 1) return false;
        }
    }
    return true;
}

bool coupling_bound_curves() {
    const std::vector<std::pair<int, int>> cases{{3, 3}, {4, 4}, {4, 8}, {5, 5}};
    for (auto [n, k] : cases) {
        auto result = verify_coupling_bound(n, k, 60);
        if (!result.holds) return false;
    }
    return true;
}

bool coalescence_vs_bound() {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 4}, {4, 8}}) {
        RngStream rng(5000 + k);
        const long trials = 100000;
        auto curve = coalescence_experiment(n, k, 50, trials, rng);
        for (size_t i = 0; i < curve.survival.size(); ++i) {
            double bound = n * std::pow(1.0 - 1.0 / (2.0 * k), curve.t_values[i]);
            double s = curve.survival[i];
            double se = std::sqrt(std::max(s * (1.0 - s), 1e-12) / trials);
            if (s > bound + 3.0 * se) return false;
        }
    }
    return true;
}

bool eigenvalue_sandwich() {
    for (int n = 6; n <= 9; ++n) {
        double lambda = spectrum(n, n).lambda_1;
        double lower = 1.0 - 5.0 * std::log(n) / n;
        double upper =
            1.0 - Rational(bell(n), pow(BigInt(n + 1), n - 1)).convert_to<double>();
        if (lambda < lower - 1e-9) return false;
        if (lambda > upper + 1e-9) return false;
    }
    return true;
}

bool relaxation_sandwich() {
    for (int n = 3; n <= 6; ++n) {
        auto curve = distance_curve(n, n, 80);
        auto t = mixing_time(curve, 0.25);
        if (!t) return false;
        double lambda = spectrum(n, n).lambda_1;
        double t_rel = 1.0 / (1.0 - lambda);
        double lower = (t_rel - 1.0) * std::log(2.0);
        double upper = std::ceil(t_rel * std::log(4.0 * Rational(bell(n)).convert_to<double>()));
        if (*t < lower - 1e-9 || *t > upper + 1e-9) return false;
    }
    return true;
}

bool minorization_regime() {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 5}}) {
        auto report = minorization_report(n, k);
        Rational brute = 0;
        auto tuples = testing::all_tuples(n, k);
        for (const auto& v : tuples) {
            Rational best;
            bool first = true;
            for (const auto& u : tuples) {
                Rational val = testing::brute_force_transition(u, v);
                if (first || val < best) best = val;
                first = false;
            }
            brute += best;
        }
        if (report.c != brute) return false;
        if (report.c < Rational(1, factorial(k - 1))) return false;
        auto curve = distance_curve(n, k, 30);
        const double c = report.c.convert_to<double>();
        for (size_t i = 0; i < curve.d_values.size(); ++i) {
            if (curve.d_values[i].convert_to<double>() >
                std::pow(1.0 - c, curve.t_values[i]) + 1e-12)
                return false;
        }
    }
    return true;
}

// Run the CLI sampler and tally partition counts from its stdout.
bool cli_sample_counts(int n, int k, long count, std::map<std::string, long>& counts) {
    const char* cli = std::getenv("BURNSIDE_CLI");
    if (!cli) {
        std::cerr << "BURNSIDE_CLI not set\n";
        return false;
    }
    std::ostringstream cmd;
    cmd << '"' << cli << "\" sample --n " << n << " --k " << k << " --count " << count
        << " --seed 20240817";
    FILE* pipe = popen(cmd.str().c_str(), "r");
    if (!pipe) return false;
    char buffer[256];
    while (std::fgets(buffer, sizeof(buffer), pipe)) {
        std::string line(buffer);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        ++counts[line];
    }
    return pclose(pipe) == 0;
}

bool sampler_uniformity() {
    const long draws = 100000;
    std::map<std::string, long> counts;
    if (!cli_sample_counts(4, 4, draws, counts)) return false;
    std::vector<long> cells;
    for (const auto& x : enumerate_partitions(4)) cells.push_back(counts[rgs_string(x)]);
    if (chi_square_uniform(cells).p_value <= 0.001) return false;
    for (int n : {4, 5}) {
        RngStream rng(9000 + n);
        std::map<std::vector<int>, long> stam_counts;
        for (long i = 0; i < draws; ++i) ++stam_counts[stam_sample(n, rng).partition.rgs];
        std::vector<long> stam_cells;
        for (const auto& x : enumerate_partitions(n)) stam_cells.push_back(stam_counts[x.rgs]);
        if (chi_square_uniform(stam_cells).p_value <= 0.001) return false;
    }
    return true;
}

bool oracle_cross_validation() {
    const int n = 4, k = 4;
    const long draws = 100000;
    const int T = default_steps(n, k, 0.01);
    std::map<std::vector<int>, long> mcmc, stam;
    RngStream master(31415);
    for (long i = 0; i < draws; ++i) {
        RngStream stream = master.substream(i);
        ++mcmc[sample_partition(n, k, T, stream).rgs];
    }
    RngStream rng(27182);
    for (long i = 0; i < draws; ++i) ++stam[stam_sample(n, rng).partition.rgs];
    std::vector<long> a, b;
    for (const auto& x : enumerate_partitions(n)) {
        a.push_back(mcmc[x.rgs]);
        b.push_back(stam[x.rgs]);
    }
    return chi_square_two_sample(a, b).p_value > 0.001;
}

bool brute_force_equivalence() {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            MomentTable table(n, k);
            for (const auto& x : enumerate_partitions(n)) {
                if (block_count(x) > state_class_count(n, k)) continue;
                Tuple u = canonical_tuple(x, k);
                for (const auto& y : enumerate_partitions(n)) {
                    if (block_count(y) > state_class_count(n, k)) continue;
                    Rational brute = testing::brute_force_lumped_transition(u, y);
                    if (brute != lumped_transition(table, block_count(x), block_count(y)))
                        return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    report(1, golden_matrix_33(), "lumped_matrix(3,3) matches the 5x5 golden matrix exactly");
    report(2, golden_matrix_n2(), "n=2 matrices for k=2..8 and eigenvalue 1-2(!k/k!)");
    report(3, golden_spectrum_33(), "spectrum(3,3) = {1, 4/9, 0, 0, 0} within 1e-10");
    report(4, stochastic_symmetric(),
           "exact row sums 1 and symmetry, n <= 8, k in {n-1, n, n+1, 2n}");
    report(5, coupling_bound_curves(),
           "d(t) <= n(1-1/(2k))^t for (3,3),(4,4),(4,8),(5,5), t <= 60");
    report(6, coalescence_vs_bound(),
           "coalescence survival within 3 SE of the bound, (4,4) and (4,8)");
    report(7, eigenvalue_sandwich(),
           "lambda_1 in [1-5log(n)/n, 1-B_n/(n+1)^(n-1)] for n=6..9");
    report(8, relaxation_sandwich(), "t_mix(1/4) inside the relaxation sandwich, n=3..6");
    report(9, minorization_regime(),
           "class-computed c equals brute force, c >= 1/(k-1)!, d(t) <= (1-c)^t");
    report(10, sampler_uniformity(),
           "CLI sampler and Stam sampler pass uniformity chi-square at p > 0.001");
    report(11, oracle_cross_validation(),
           "two-sample chi-square between MCMC and Stam draws at p > 0.001");
    report(12, brute_force_equivalence(),
           "lumped_transition equals the two-substep brute force for n <= 3, k <= 4");
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 12 criteria passed" << std::endl;
    return 0;
}
