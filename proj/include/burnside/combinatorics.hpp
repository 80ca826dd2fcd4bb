#pragma once

#include <map>

#include "burnside/rational.hpp"

namespace burnside {

// Bell number B_n: the number of set partitions of [n].
BigInt bell(int n);

// Stirling number of the second kind: partitions of [n] into j nonempty
// blocks. Returns 0 for j > n and for (j = 0, n > 0).
BigInt stirling2(int n, int j);

// Subfactorial !m: derangements of [m]. Computed by the recurrence
// !m = (m-1)(!(m-1) + !(m-2)) to stay exact.
BigInt subfactorial(int m);

BigInt factorial(int m);
BigInt binomial(int n, int r);

// D_{k,i} = C(k,i) * !(k-i): permutations of S_k with exactly i fixed points.
BigInt fixed_point_count(int k, int i);

// S_{n,k,j} = E[1/(Y+j)^n] where Y is the number of fixed points of a
// uniformly random permutation of S_{k-j}. The building block of every
// transition probability of the chain:
//
//   S_{n,k,j} = sum_{i=0}^{k-j} C(k-j,i) * !(k-j-i) / ((i+j)^n * (k-j)!)
Rational fixed_point_moment(int n, int k, int j);

// Precomputed S_{n,k,j} for 1 <= j <= k. Immutable after construction.
class MomentTable {
public:
    MomentTable(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const Rational& at(int j) const;

private:
    int n_, k_;
    std::map<int, Rational> entries_;
};

}  // namespace burnside
