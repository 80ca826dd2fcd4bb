#include "burnside/coupling.hpp"

#include "burnside/simulate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace burnside {

namespace {

std::vector<int> complement_of(const std::vector<int>& values, int k) {
    std::vector<bool> present(k + 1, false);
    for (int v : values) present[v] = true;
    std::vector<int> out;
    for (int v = 1; v <= k; ++v)
        if (!present[v]) out.push_back(v);
    return out;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

Permutation uniform_permutation(std::vector<int> domain, RngStream& rng) {
    std::sort(domain.begin(), domain.end());
    std::vector<int> image(domain);
    for (int i = static_cast<int>(image.size()) - 1; i > 0; --i) {
        int j = rng.uniform_int(0, i);
        std::swap(image[i], image[j]);
    }
    return Permutation{std::move(domain), std::move(image)};
}

std::vector<int> fixed_points(const Permutation& sigma) {
    std::vector<int> fp;
    for (size_t i = 0; i < sigma.domain.size(); ++i)
        if (sigma.domain[i] == sigma.image[i]) fp.push_back(sigma.domain[i]);
    return fp;
}

Permutation induced_permutation(const Permutation& sigma, const std::vector<int>& subset) {
    std::unordered_map<int, int> map;
    for (size_t i = 0; i < sigma.domain.size(); ++i) map[sigma.domain[i]] = sigma.image[i];
    std::unordered_set<int> members(subset.begin(), subset.end());
    for (int a : subset)
        if (!map.count(a)) throw std::invalid_argument("induced_permutation: subset not contained in domain");

    Permutation out;
    out.domain = subset;
    std::sort(out.domain.begin(), out.domain.end());
    out.image.reserve(out.domain.size());
    for (int a : out.domain) {
        int b = map.at(a);
        while (!members.count(b)) b = map.at(b);
        out.image.push_back(b);
    }
    return out;
}

std::pair<int, int> maximal_coupling_uniform(const std::vector<int>& A, const std::vector<int>& B,
                                             RngStream& rng) {
    if (A.empty() || B.empty())
        throw std::invalid_argument("maximal_coupling_uniform: empty set");
    std::vector<int> a(A), b(B);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) {
        int x = a[rng.uniform_int(0, static_cast<int>(a.size()) - 1)];
        return {x, x};
    }
    // The larger set plays the dominant role; ties keep the left chain there.
    const bool left_big = a.size() >= b.size();
    const std::vector<int>& P = left_big ? a : b;
    const std::vector<int>& Q = left_big ? b : a;

    std::vector<int> inter, q_only;
    std::set_intersection(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(inter));
    std::set_difference(Q.begin(), Q.end(), P.begin(), P.end(), std::back_inserter(q_only));

    const long p = static_cast<long>(P.size()), q = static_cast<long>(Q.size());
    const long c = static_cast<long>(inter.size());
    int zp = P[rng.uniform_int(0, static_cast<int>(p) - 1)];
    int zq;
    if (std::binary_search(inter.begin(), inter.end(), zp)) {
        zq = zp;
    } else {
        // Conditional on Z_p outside the intersection: each shared value has
        // weight p - q, each Q-only value has weight p; total q * |P \ Q|.
        const long inter_mass = c * (p - q);
        const long total = q * (p - c);
        const long r = static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(total)));
        if (r < inter_mass) {
            zq = inter[r / (p - q)];
        } else {
            zq = q_only[rng.uniform_int(0, static_cast<int>(q_only.size()) - 1)];
        }
    }
    return left_big ? std::make_pair(zp, zq) : std::make_pair(zq, zp);
}

CoupledPair coupled_step(const CoupledPair& pair, RngStream& rng) {
    if (pair.left.k != pair.right.k || pair.left.n() != pair.right.n())
        throw std::invalid_argument("coupled_step: mismatched chains");
    const int k = pair.left.k;
    if (pair.coalesced()) {
        Tuple next = burnside_step(pair.left, rng);
        return CoupledPair{next, next};
    }

    const std::vector<int> J_u = distinct_values(pair.left);
    const std::vector<int> J_v = distinct_values(pair.right);
    const std::vector<int> A = complement_of(J_u, k);
    const std::vector<int> B = complement_of(J_v, k);

    // One shuffle drives both chains; the induced permutations on A and B are
    // each uniform, and they agree on A cap B cycle-wise.
    Permutation sigma = uniform_permutation(sorted_union(A, B), rng);
    std::vector<int> fp_u = J_u;
    std::vector<int> fp_v = J_v;
    if (!A.empty()) {
        auto fa = fixed_points(induced_permutation(sigma, A));
        fp_u.insert(fp_u.end(), fa.begin(), fa.end());
    }
    if (!B.empty()) {
        auto fb = fixed_points(induced_permutation(sigma, B));
        fp_v.insert(fp_v.end(), fb.begin(), fb.end());
    }
    std::sort(fp_u.begin(), fp_u.end());
    std::sort(fp_v.begin(), fp_v.end());

    CoupledPair next;
    next.left.k = next.right.k = k;
    for (int i = 0; i < pair.left.n(); ++i) {
        auto [ui, vi] = maximal_coupling_uniform(fp_u, fp_v, rng);
        next.left.coords.push_back(ui);
        next.right.coords.push_back(vi);
    }
    return next;
}

CoalescenceCurve coalescence_experiment(int n, int k, int t_max, long trials, RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("coalescence_experiment: trials must be positive");
    if (k < n) throw std::invalid_argument("coalescence_experiment: requires k >= n");
    Tuple one_block{std::vector<int>(n, 1), k};
    Tuple singletons;
    singletons.k = k;
    for (int i = 0; i < n; ++i) singletons.coords.push_back(k - i);

    std::vector<long> not_coalesced(t_max + 1, 0);
    for (long trial = 0; trial < trials; ++trial) {
        RngStream stream = rng.substream(static_cast<std::uint64_t>(trial));
        CoupledPair pair{one_block, singletons};
        for (int t = 0; t <= t_max; ++t) {
            if (!pair.coalesced()) ++not_coalesced[t];
            if (t < t_max) pair = coupled_step(pair, stream);
        }
    }

    CoalescenceCurve curve;
    curve.n = n;
    curve.k = k;
    curve.trials = trials;
    for (int t = 0; t <= t_max; ++t) {
        curve.t_values.push_back(t);
        curve.survival.push_back(static_cast<double>(not_coalesced[t]) / trials);
    }
    return curve;
}

std::string coalescence_csv(const CoalescenceCurve& curve) {
    std::ostringstream os;
    os << "# n=" << curve.n << " k=" << curve.k << " trials=" << curve.trials << "\n";
    os << "t,survival,bound\n";
    double bound = curve.n;
    const double rho = 1.0 - 1.0 / (2.0 * curve.k);
    for (size_t i = 0; i < curve.t_values.size(); ++i) {
        os << curve.t_values[i] << "," << curve.survival[i] << "," << bound << "\n";
        bound *= rho;
    }
    return os.str();
}

}  // namespace burnside
