#include "burnside/kernel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace burnside {

int state_class_count(int n, int k) { return std::min(n, k); }

Rational full_transition(int n, int k, int j_u, int j_v, int j) {
    const int m = std::min(n, k);
    if (j_u < 1 || j_u > m || j_v < 1 || j_v > m)
        throw std::invalid_argument("full_transition: j_u, j_v out of range");
    if (j < std::max(j_u, j_v) || j > std::min(j_u + j_v, k))
        throw std::invalid_argument("full_transition: infeasible combined count j");
    return Rational(factorial(k - j), factorial(k - j_u)) * fixed_point_moment(n, k, j);
}

Rational lumped_transition(const MomentTable& table, int j_x, int j_y) {
    const int n = table.n(), k = table.k();
    const int m = std::min(n, k);
    if (j_x < 1 || j_x > m || j_y < 1 || j_y > m)
        throw std::invalid_argument("lumped_transition: block counts out of range");
    const int a = std::min(j_x, j_y), b = std::max(j_x, j_y);
    Rational sum = 0;
    const int hi = std::min(a + b, k);
    for (int j = b; j <= hi; ++j) {
        Rational coeff(factorial(a) * factorial(b),
                       factorial(j - a) * factorial(j - b) * factorial(a + b - j));
        sum += coeff * table.at(j);
    }
    return sum;
}

Rational lumped_transition(int n, int k, int j_x, int j_y) {
    return lumped_transition(MomentTable(n, k), j_x, j_y);
}

KernelMatrix lumped_matrix(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lumped_matrix: n, k must be positive");
    if (n > kEnumerationCap) throw std::invalid_argument("lumped_matrix: n above cap");
    const int m = state_class_count(n, k);
    MomentTable table(n, k);
    // Class-level values first; the dense matrix just fans them out.
    std::vector<std::vector<Rational>> cls(m + 1, std::vector<Rational>(m + 1));
    for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b) cls[a][b] = cls[b][a] = lumped_transition(table, a, b);

    KernelMatrix out;
    out.n = n;
    out.k = k;
    out.kind = KernelKind::lumped;
    for (auto& x : enumerate_partitions(n)) {
        if (block_count(x) <= m) out.partition_labels.push_back(std::move(x));
    }
    const int sz = static_cast<int>(out.partition_labels.size());
    out.entries.assign(sz, std::vector<Rational>(sz));
    for (int i = 0; i < sz; ++i) {
        const int a = block_count(out.partition_labels[i]);
        for (int j = 0; j < sz; ++j) {
            out.entries[i][j] = cls[a][block_count(out.partition_labels[j])];
        }
    }
    return out;
}

KernelMatrix block_count_matrix(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("block_count_matrix: n, k must be positive");
    if (n > kEnumerationCap) throw std::invalid_argument("block_count_matrix: n above cap");
    const int m = state_class_count(n, k);
    MomentTable table(n, k);
    KernelMatrix out;
    out.n = n;
    out.k = k;
    out.kind = KernelKind::block_count;
    for (int j = 1; j <= m; ++j) out.count_labels.push_back(j);
    out.entries.assign(m, std::vector<Rational>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            out.entries[i - 1][j - 1] = Rational(stirling2(n, j)) * lumped_transition(table, i, j);
    return out;
}

Rational stationary_full_class(int n, int k, int j_u) {
    const int m = std::min(n, k);
    if (j_u < 1 || j_u > m) throw std::invalid_argument("stationary_full_class: j_u out of range");
    BigInt z;
    if (k >= n) {
        z = bell(n);
    } else {
        z = 0;
        for (int i = 1; i <= k; ++i) z += stirling2(n, i);
    }
    return Rational(factorial(k - j_u), z * factorial(k));
}

Rational stationary_lumped(int n, int k) {
    if (k >= n) return Rational(1, bell(n));
    BigInt z = 0;
    for (int i = 1; i <= k; ++i) z += stirling2(n, i);
    return Rational(1, z);
}

Rational stationary_block_count(int n, int k, int j) {
    return Rational(stirling2(n, j)) * stationary_lumped(n, k);
}

StationaryVector stationary_vector(const KernelMatrix& m) {
    StationaryVector s;
    if (m.kind == KernelKind::lumped) {
        s.weights.assign(m.size(), stationary_lumped(m.n, m.k));
    } else {
        for (int j : m.count_labels) s.weights.push_back(stationary_block_count(m.n, m.k, j));
    }
    return s;
}

bool verify_reversibility(const KernelMatrix& m, const StationaryVector& s) {
    if (static_cast<int>(s.weights.size()) != m.size())
        throw std::invalid_argument("verify_reversibility: dimension mismatch");
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (s.weights[i] * m.entries[i][j] != s.weights[j] * m.entries[j][i]) return false;
    return true;
}

std::string kernel_matrix_json(const KernelMatrix& m) {
    nlohmann::json j;
    j["n"] = m.n;
    j["k"] = m.k;
    j["kind"] = m.kind == KernelKind::lumped ? "lumped" : "block-count";
    j["order"] = "block-count-then-lex-rgs";
    auto labels = nlohmann::json::array();
    if (m.kind == KernelKind::lumped) {
        for (const auto& x : m.partition_labels) labels.push_back(rgs_string(x));
    } else {
        for (int c : m.count_labels) labels.push_back(c);
    }
    j["labels"] = std::move(labels);
    auto rows = nlohmann::json::array();
    for (const auto& row : m.entries) {
        auto r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(to_fraction_string(e));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

}  // namespace burnside
