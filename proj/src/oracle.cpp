#include "burnside/oracle.hpp"

#include "burnside/combinatorics.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace burnside {

namespace {

double log_term(int n, int k) {  // log(k^n / k!)
    return n * std::log(static_cast<double>(k)) - std::lgamma(static_cast<double>(k) + 1.0);
}

ChiSquareResult contingency_chi_square(const std::vector<std::vector<long>>& table) {
    const size_t rows = table.size(), cols = table[0].size();
    std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
    double grand = 0.0;
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            row_sum[r] += table[r][c];
            col_sum[c] += table[r][c];
            grand += table[r][c];
        }
    double stat = 0.0;
    long df = 0;
    size_t nonzero_rows = 0, nonzero_cols = 0;
    for (double s : row_sum) nonzero_rows += s > 0;
    for (double s : col_sum) nonzero_cols += s > 0;
    for (size_t r = 0; r < rows; ++r) {
        if (row_sum[r] == 0) continue;
        for (size_t c = 0; c < cols; ++c) {
            if (col_sum[c] == 0) continue;
            double expected = row_sum[r] * col_sum[c] / grand;
            double diff = table[r][c] - expected;
            stat += diff * diff / expected;
        }
    }
    df = static_cast<long>((nonzero_rows - 1) * (nonzero_cols - 1));
    ChiSquareResult result;
    result.statistic = stat;
    result.df = df;
    if (df > 0) {
        boost::math::chi_squared dist(static_cast<double>(df));
        result.p_value = boost::math::cdf(boost::math::complement(dist, stat));
    }
    return result;
}

// Merge adjacent values into bins with at least min_count observations each.
std::vector<int> bin_labels(const std::vector<int>& values, long min_count) {
    const int max_v = *std::max_element(values.begin(), values.end());
    std::vector<long> counts(max_v + 1, 0);
    for (int v : values) ++counts[v];
    std::vector<int> bin_of(max_v + 1);
    int bin = 0;
    long acc = 0;
    for (int v = 0; v <= max_v; ++v) {
        bin_of[v] = bin;
        acc += counts[v];
        if (acc >= min_count && v < max_v) {
            ++bin;
            acc = 0;
        }
    }
    if (acc < min_count && bin > 0) {  // fold a light trailing bin backwards
        for (int v = max_v; v >= 0 && bin_of[v] == bin; --v) bin_of[v] = bin - 1;
    }
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) out.push_back(bin_of[v]);
    return out;
}

}  // namespace

DobinskiEstimate dobinski_bell(int n, int terms) {
    if (n < 0 || terms < 1) throw std::invalid_argument("dobinski_bell: bad arguments");
    double sum = (n == 0) ? 1.0 : 0.0;  // k = 0 contributes only for n = 0
    for (int k = 1; k <= terms; ++k) sum += std::exp(log_term(n, k));

    DobinskiEstimate est;
    double next = std::exp(log_term(n, terms + 1));
    double ratio = std::pow((terms + 2.0) / (terms + 1.0), n) / (terms + 2.0);
    est.tail_bound = (ratio < 1.0) ? next / (1.0 - ratio) / std::exp(1.0)
                                   : std::numeric_limits<double>::infinity();
    est.value = sum / std::exp(1.0);
    return est;
}

StamSampler::StamSampler(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("StamSampler: n must be positive");
    const double log_bn = std::log(bell(n).convert_to<double>());
    // Inverse-CDF table for mu_n(k) = k^n/(e B_n k!), extended until the
    // remaining tail is below 2^-60 (geometric comparison once the term
    // ratio drops below 1/2).
    double cum = 0.0;
    int k = 1;
    while (true) {
        double p = std::exp(log_term(n, k) - 1.0 - log_bn);
        cum += p;
        cdf_.push_back(cum);
        double ratio = std::pow((k + 1.0) / k, n) / (k + 1.0);
        if (k > n && ratio < 0.5 && p * ratio / (1.0 - ratio) < 0x1.0p-60) {
            tail_bound_ = p * ratio / (1.0 - ratio);
            break;
        }
        ++k;
        if (k > 1000000) throw std::runtime_error("StamSampler: CDF construction did not converge");
    }
}

StamDraw StamSampler::sample(RngStream& rng) const {
    const double u = rng.uniform01();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    const int N = (it == cdf_.end()) ? static_cast<int>(cdf_.size()) : static_cast<int>(it - cdf_.begin()) + 1;

    Tuple urns;
    urns.k = N;
    for (int i = 0; i < n_; ++i) urns.coords.push_back(rng.uniform_int(1, N));

    StamDraw draw;
    draw.partition = from_tuple(urns);
    draw.urn_count = N;
    draw.empty_urns = N - block_count(draw.partition);
    return draw;
}

StamDraw stam_sample(int n, RngStream& rng) { return StamSampler(n).sample(rng); }

SetPartition enumeration_sample(int n, RngStream& rng) {
    static std::mutex mutex;
    static std::map<int, std::vector<SetPartition>> cache;
    const std::vector<SetPartition>* table;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, enumerate_partitions(n)).first;
        table = &it->second;
    }
    return (*table)[rng.uniform_below(table->size())];
}

ChiSquareResult chi_square_uniform(const std::vector<long>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need at least 2 cells");
    long total = 0;
    for (long c : counts) total += c;
    if (total <= 0) throw std::invalid_argument("chi_square_uniform: empty sample");
    const double expected = static_cast<double>(total) / counts.size();
    double stat = 0.0;
    for (long c : counts) {
        double diff = c - expected;
        stat += diff * diff / expected;
    }
    ChiSquareResult result;
    result.statistic = stat;
    result.df = static_cast<long>(counts.size()) - 1;
    boost::math::chi_squared dist(static_cast<double>(result.df));
    result.p_value = boost::math::cdf(boost::math::complement(dist, stat));
    return result;
}

ChiSquareResult chi_square_two_sample(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("chi_square_two_sample: cell mismatch");
    std::vector<std::vector<long>> table{a, b};
    return contingency_chi_square(table);
}

EmptyUrnReport empty_urn_diagnostics(int n, long draws, RngStream& rng) {
    if (draws < 1) throw std::invalid_argument("empty_urn_diagnostics: draws must be positive");
    StamSampler sampler(n);
    std::vector<int> empties, blocks;
    empties.reserve(draws);
    blocks.reserve(draws);
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < draws; ++i) {
        StamDraw draw = sampler.sample(rng);
        empties.push_back(draw.empty_urns);
        blocks.push_back(block_count(draw.partition));
        sum += draw.empty_urns;
        sum_sq += static_cast<double>(draw.empty_urns) * draw.empty_urns;
    }

    EmptyUrnReport report;
    report.n = n;
    report.draws = draws;
    report.mean_empty = sum / draws;
    report.var_empty = sum_sq / draws - report.mean_empty * report.mean_empty;
    report.dispersion_index = report.var_empty / report.mean_empty;

    const long min_count = std::max<long>(draws / 20, 5);
    std::vector<int> e_bins = bin_labels(empties, min_count);
    std::vector<int> b_bins = bin_labels(blocks, min_count);
    const int er = *std::max_element(e_bins.begin(), e_bins.end()) + 1;
    const int bc = *std::max_element(b_bins.begin(), b_bins.end()) + 1;
    std::vector<std::vector<long>> table(er, std::vector<long>(bc, 0));
    for (long i = 0; i < draws; ++i) ++table[e_bins[i]][b_bins[i]];
    report.independence = contingency_chi_square(table);
    return report;
}

std::string empty_urn_report_json(const EmptyUrnReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["draws"] = report.draws;
    j["mean_empty"] = report.mean_empty;
    j["var_empty"] = report.var_empty;
    j["dispersion_index"] = report.dispersion_index;
    j["independence_statistic"] = report.independence.statistic;
    j["independence_df"] = report.independence.df;
    j["independence_p_value"] = report.independence.p_value;
    return j.dump(2);
}

}  // namespace burnside
