#include "burnside/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace burnside {

namespace {

// Memo tables grow monotonically under a lock; reads of already-filled
// entries return copies, so concurrent callers are safe.
std::mutex memo_mutex;

const std::vector<BigInt>& bell_table(int n) {
    static std::vector<BigInt> table{1};  // B_0 = 1
    // Bell triangle: B_{n+1} = sum_i C(n,i) B_i.
    static std::vector<BigInt> row{1};
    while (static_cast<int>(table.size()) <= n) {
        std::vector<BigInt> next(row.size() + 1);
        next[0] = row.back();
        for (size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[i];
        row = std::move(next);
        table.push_back(row[0]);
    }
    return table;
}

}  // namespace

BigInt bell(int n) {
    if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return bell_table(n)[n];
}

BigInt stirling2(int n, int j) {
    if (n < 0 || j < 0) throw std::invalid_argument("stirling2: negative argument");
    if (j > n) return 0;
    if (n == 0) return 1;  // n == 0, j == 0
    if (j == 0) return 0;
    // S(n,j) = j*S(n-1,j) + S(n-1,j-1), row by row.
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int b = m; b >= 1; --b) {
            row[b] = BigInt(b) * row[b] + row[b - 1];
        }
        row[0] = 0;
    }
    return row[j];
}

BigInt subfactorial(int m) {
    if (m < 0) throw std::invalid_argument("subfactorial: m must be nonnegative");
    BigInt prev2 = 1, prev1 = 0;  // !0, !1
    if (m == 0) return prev2;
    if (m == 1) return prev1;
    BigInt cur;
    for (int i = 2; i <= m; ++i) {
        cur = BigInt(i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

BigInt factorial(int m) {
    if (m < 0) throw std::invalid_argument("factorial: m must be nonnegative");
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt num = 1;
    for (int i = 0; i < r; ++i) num = num * (n - i) / (i + 1);
    return num;
}

BigInt fixed_point_count(int k, int i) {
    if (k < 1) throw std::invalid_argument("fixed_point_count: k must be positive");
    if (i < 0 || i > k) throw std::invalid_argument("fixed_point_count: need 0 <= i <= k");
    return binomial(k, i) * subfactorial(k - i);
}

Rational fixed_point_moment(int n, int k, int j) {
    if (n < 1 || k < 1) throw std::invalid_argument("fixed_point_moment: n, k must be positive");
    if (j < 1 || j > k) throw std::invalid_argument("fixed_point_moment: need 1 <= j <= k");
    const int m = k - j;  // Y is the fixed-point count of a uniform element of S_m
    Rational sum = 0;
    for (int i = 0; i <= m; ++i) {
        BigInt weight = binomial(m, i) * subfactorial(m - i);
        BigInt denom = factorial(m);
        Rational pow_term = 1;
        BigInt base = i + j;
        BigInt p = 1;
        for (int e = 0; e < n; ++e) p *= base;
        sum += Rational(weight, denom * p);
    }
    return sum;
}

MomentTable::MomentTable(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 1) throw std::invalid_argument("MomentTable: n, k must be positive");
    for (int j = 1; j <= k; ++j) entries_.emplace(j, fixed_point_moment(n, k, j));
}

const Rational& MomentTable::at(int j) const {
    auto it = entries_.find(j);
    if (it == entries_.end()) throw std::out_of_range("MomentTable: j out of range");
    return it->second;
}

}  // namespace burnside
