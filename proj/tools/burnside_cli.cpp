// Command-line front end: exact kernels, spectra, TV curves, samplers, and
// bound verification for the Burnside process on [k]^n and on set partitions.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 resource cap exceeded.

#include <CLI11.hpp>

#include "burnside/analysis.hpp"
#include "burnside/combinatorics.hpp"
#include "burnside/coupling.hpp"
#include "burnside/kernel.hpp"
#include "burnside/oracle.hpp"
#include "burnside/partitions.hpp"
#include "burnside/simulate.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kMatrixCap = 8;  // dense B_n x B_n materialization limit

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream os(path);
            os << text;
            if (!text.empty() && text.back() != '\n') os << '\n';
        }
    }
};

std::string metadata_line(const std::string& command, int n, int k, std::uint64_t seed) {
    std::ostringstream os;
    os << "# burnside " << kVersion << " command=" << command << " n=" << n << " k=" << k
       << " seed=" << seed;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burnside process on [k]^n: exact kernels, mixing bounds, samplers"};
    app.require_subcommand(1);

    int n = 4, k = 0, steps = -1, tmax = 60, count = 1;
    long trials = 100000;
    double eps = 0.01;
    std::uint64_t seed = 0;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::string format = "csv", out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of coordinates");
        cmd->add_option("--k", k, "alphabet size (default: n)");
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--eps", eps, "target accuracy");
        cmd->add_option("--threads", threads, "worker thread cap");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    auto* sample_cmd = app.add_subcommand("sample", "draw approximately uniform set partitions");
    add_common(sample_cmd);
    sample_cmd->add_option("--count", count, "number of samples");
    sample_cmd->add_option("--steps", steps, "chain steps per sample (default: ceil(2k ln(n/eps)))");

    auto* matrix_cmd = app.add_subcommand("matrix", "exact lumped transition matrix as JSON");
    add_common(matrix_cmd);
    bool project = false;
    matrix_cmd->add_flag("--block-count", project, "emit the block-count projection instead");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and spectral bounds");
    add_common(spectrum_cmd);

    auto* tvcurve_cmd = app.add_subcommand("tvcurve", "exact total-variation decay curve");
    add_common(tvcurve_cmd);
    tvcurve_cmd->add_option("--tmax", tmax, "curve horizon");

    auto* couple_cmd = app.add_subcommand("couple", "empirical coalescence curve of the coupling");
    add_common(couple_cmd);
    couple_cmd->add_option("--tmax", tmax, "curve horizon");
    couple_cmd->add_option("--trials", trials, "number of coupled trials");

    auto* minorize_cmd = app.add_subcommand("minorize", "minorization constant (k < n regime)");
    add_common(minorize_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the bound-consistency suite");
    add_common(verify_cmd);
    verify_cmd->add_option("--tmax", tmax, "TV curve horizon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (k == 0) k = n;
    Output out{out_path};

    try {
        if (sample_cmd->parsed()) {
            if (n < 1 || k < 1) throw CLI::ValidationError("--n and --k must be positive");
            const int T = steps >= 0 ? steps : burnside::default_steps(n, k, eps);
            std::vector<std::string> lines(count);
            burnside::RngStream master(seed);
            const int workers = std::max(1, std::min(threads, count));
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (int i = w; i < count; i += workers) {
                        burnside::RngStream stream =
                            master.substream(static_cast<std::uint64_t>(i));
                        lines[i] =
                            burnside::rgs_string(burnside::sample_partition(n, k, T, stream));
                    }
                });
            }
            for (auto& t : pool) t.join();
            std::ostringstream os;
            os << metadata_line("sample", n, k, seed) << " steps=" << T << "\n";
            for (const auto& line : lines) os << line << "\n";
            out.write(os.str());
        } else if (matrix_cmd->parsed()) {
            if (n > kMatrixCap && !project) {
                std::cerr << "matrix: dense materialization capped at n <= " << kMatrixCap << "\n";
                return 3;
            }
            auto m = project ? burnside::block_count_matrix(n, k) : burnside::lumped_matrix(n, k);
            out.write(burnside::kernel_matrix_json(m));
        } else if (spectrum_cmd->parsed()) {
            out.write(burnside::spectral_report_json(burnside::spectrum(n, k)));
        } else if (tvcurve_cmd->parsed()) {
            auto curve = burnside::distance_curve(n, k, tmax);
            out.write(burnside::distance_curve_csv(curve));
        } else if (couple_cmd->parsed()) {
            if (k < n) throw CLI::ValidationError("couple requires k >= n");
            burnside::RngStream rng(seed);
            auto curve = burnside::coalescence_experiment(n, k, tmax, trials, rng);
            out.write(burnside::coalescence_csv(curve));
        } else if (minorize_cmd->parsed()) {
            if (k >= n) throw CLI::ValidationError("minorize requires k < n");
            out.write(burnside::minorization_report_json(burnside::minorization_report(n, k)));
        } else if (verify_cmd->parsed()) {
            std::ostringstream os;
            os << metadata_line("verify", n, k, seed) << "\n";
            bool ok = true;
            auto record = [&](const std::string& name, bool pass) {
                os << (pass ? "PASS " : "FAIL ") << name << "\n";
                ok = ok && pass;
            };
            if (k >= n) {
                auto coupling = burnside::verify_coupling_bound(n, k, tmax);
                record("coupling-bound d(t) <= n(1-1/(2k))^t", coupling.holds);
                auto report = burnside::spectrum(n, k);
                record("poincare upper bound", report.lambda_1 <= report.poincare_upper + 1e-9);
                record("cheeger lower bound", report.lambda_1 >= report.cheeger_lower - 1e-9);
                auto mix = burnside::mixing_time(coupling.curve, 0.25);
                double pi_min =
                    burnside::stationary_lumped(n, k).convert_to<double>();
                auto [lo, hi] = burnside::relaxation_mixing_bounds(report.lambda_1, pi_min, 0.25);
                record("relaxation sandwich on t_mix(1/4)",
                       mix.has_value() && *mix >= lo - 1e-9 && *mix <= hi + 1e-9);
            } else {
                auto report = burnside::minorization_report(n, k);
                record("minorization c >= 1/(k-1)!", report.c >= report.paper_floor);
                auto curve = burnside::distance_curve(n, k, std::min(tmax, 30));
                bool tv_ok = true;
                double c = report.c.convert_to<double>();
                for (size_t i = 0; i < curve.t_values.size(); ++i) {
                    double bound = std::pow(1.0 - c, curve.t_values[i]);
                    if (curve.d_values[i].convert_to<double>() > bound + 1e-12) tv_ok = false;
                }
                record("minorization decay d(t) <= (1-c)^t", tv_ok);
            }
            out.write(os.str());
            if (!ok) return 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
