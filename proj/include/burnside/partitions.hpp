#pragma once

#include <string>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

// Hard cap on partition enumeration; B_14 is already past desk scale.
inline constexpr int kEnumerationCap = 14;

// A set partition of [n] in restricted-growth-string form: rgs[i] names the
// block of element i+1, blocks numbered by first appearance. rgs[0] == 0 and
// rgs[i] <= 1 + max(rgs[0..i-1]).
struct SetPartition {
    std::vector<int> rgs;

    int n() const { return static_cast<int>(rgs.size()); }
    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;
};

// A state u in [k]^n, entries in 1..k.
struct Tuple {
    std::vector<int> coords;
    int k = 0;

    int n() const { return static_cast<int>(coords.size()); }
    bool operator==(const Tuple&) const = default;
};

bool is_valid_rgs(const std::vector<int>& rgs);

int block_count(const SetPartition& x);

// Number of distinct values appearing in u.
int distinct_value_count(const Tuple& u);

// The set of distinct values of u, ascending.
std::vector<int> distinct_values(const Tuple& u);

// The orbit map: i and j land in the same block iff u_i == u_j.
SetPartition from_tuple(const Tuple& u);

// Orbit representative: coords[i] = rgs[i] + 1. Requires k >= block_count(x).
Tuple canonical_tuple(const SetPartition& x, int k);

// All B_n set partitions of [n], sorted by block count ascending and then by
// rgs lexicographic order. Index 0 is the one-block partition, the last is
// all-singletons.
std::vector<SetPartition> enumerate_partitions(int n);

// "0,1,0,2" textual form used by the CLI and JSON output.
std::string rgs_string(const SetPartition& x);
SetPartition parse_rgs(const std::string& s);

}  // namespace burnside
