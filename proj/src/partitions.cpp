#include "burnside/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace burnside {

bool is_valid_rgs(const std::vector<int>& rgs) {
    if (rgs.empty() || rgs[0] != 0) return false;
    int mx = 0;
    for (int v : rgs) {
        if (v < 0 || v > mx + 1) return false;
        mx = std::max(mx, v);
    }
    return true;
}

int block_count(const SetPartition& x) {
    return 1 + *std::max_element(x.rgs.begin(), x.rgs.end());
}

int distinct_value_count(const Tuple& u) {
    return static_cast<int>(distinct_values(u).size());
}

std::vector<int> distinct_values(const Tuple& u) {
    std::vector<int> vals(u.coords);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

SetPartition from_tuple(const Tuple& u) {
    std::map<int, int> label;  // value -> block index by first appearance
    SetPartition x;
    x.rgs.reserve(u.coords.size());
    for (int v : u.coords) {
        auto [it, inserted] = label.try_emplace(v, static_cast<int>(label.size()));
        x.rgs.push_back(it->second);
    }
    return x;
}

Tuple canonical_tuple(const SetPartition& x, int k) {
    if (k < block_count(x))
        throw std::invalid_argument("canonical_tuple: k smaller than block count");
    Tuple u;
    u.k = k;
    u.coords.reserve(x.rgs.size());
    for (int b : x.rgs) u.coords.push_back(b + 1);
    return u;
}

std::vector<SetPartition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
    if (n > kEnumerationCap) throw std::invalid_argument("enumerate_partitions: n above cap");
    std::vector<SetPartition> out;
    // Generate all restricted growth strings in lexicographic order, then
    // stable-sort by block count. Lex order within a block count is preserved.
    std::vector<int> rgs(n, 0);
    std::vector<int> mx(n, 0);  // mx[i] = max(rgs[0..i])
    while (true) {
        out.push_back(SetPartition{rgs});
        int i = n - 1;
        while (i > 0 && rgs[i] == mx[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        mx[i] = std::max(mx[i - 1], rgs[i]);
        for (int t = i + 1; t < n; ++t) {
            rgs[t] = 0;
            mx[t] = mx[t - 1];
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return block_count(a) < block_count(b);
    });
    return out;
}

std::string rgs_string(const SetPartition& x) {
    std::ostringstream os;
    for (size_t i = 0; i < x.rgs.size(); ++i) {
        if (i) os << ',';
        os << x.rgs[i];
    }
    return os.str();
}

SetPartition parse_rgs(const std::string& s) {
    SetPartition x;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) x.rgs.push_back(std::stoi(tok));
    if (!is_valid_rgs(x.rgs)) throw std::invalid_argument("parse_rgs: not a valid rgs: " + s);
    return x;
}

}  // namespace burnside
