#pragma once

#include <string>
#include <vector>

#include "burnside/combinatorics.hpp"
#include "burnside/partitions.hpp"
#include "burnside/rational.hpp"

namespace burnside {

enum class KernelKind { lumped, block_count };

// Dense exact-rational stochastic matrix over an explicit state ordering.
// For the lumped kind the labels are set partitions in block-count-then-lex
// order; for the block-count kind the labels are block counts 1..m.
struct KernelMatrix {
    int n = 0, k = 0;
    KernelKind kind = KernelKind::lumped;
    std::vector<SetPartition> partition_labels;  // lumped kind only
    std::vector<int> count_labels;               // block-count kind only
    std::vector<std::vector<Rational>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

struct StationaryVector {
    std::vector<Rational> weights;
};

// Number of lumped states: partitions of [n] with at most min(n,k) blocks.
// For k >= n this is all of Pi_n.
int state_class_count(int n, int k);

// K(u,v) = ((k-j)!/(k-j_u)!) * S_{n,k,j} for any u, v with j_u, j_v distinct
// values and j distinct values combined. Class-determined: no tuples needed.
Rational full_transition(int n, int k, int j_u, int j_v, int j);

// Lumped transition between any partitions with j_x and j_y blocks:
// with a <= b,  Kbar = sum_{j=b}^{min(a+b,k)} a! b! /
//   ((j-a)!(j-b)!(a+b-j)!) * S_{n,k,j}.
// The upper limit is truncated at k; beyond it no fresh values remain and the
// combinatorial coefficient C(k-j_u, j-j_u) vanishes.
Rational lumped_transition(int n, int k, int j_x, int j_y);
Rational lumped_transition(const MomentTable& table, int j_x, int j_y);

// The B_n x B_n (or smaller, when k < n) matrix Kbar over
// enumerate_partitions ordering restricted to <= min(n,k) blocks.
KernelMatrix lumped_matrix(int n, int k);

// The block-count projection L(i,j) = stirling2(n,j) * Kbar(i,j),
// m x m with m = min(n,k).
KernelMatrix block_count_matrix(int n, int k);

// Per-state stationary mass for any u with j_u distinct values:
// (k-j_u)!/(B_n k!) for k >= n, (k-j_u)!/(k! sum_{i<=k} S(n,i)) for k < n.
Rational stationary_full_class(int n, int k, int j_u);

// Uniform over the lumped states: 1/B_n, or 1/sum_{i<=k} stirling2(n,i).
Rational stationary_lumped(int n, int k);

// Stationary mass of the block-count class j under the lumped chain.
Rational stationary_block_count(int n, int k, int j);

StationaryVector stationary_vector(const KernelMatrix& m);

// Detailed balance: s(x) m(x,y) == s(y) m(y,x), exactly, for all pairs.
bool verify_reversibility(const KernelMatrix& m, const StationaryVector& s);

std::string kernel_matrix_json(const KernelMatrix& m);

}  // namespace burnside
