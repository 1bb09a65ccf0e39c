#include "lapspec/walks.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace lapspec {

namespace {

// Adjacency bitmask of a graph on m relabeled nodes 0..m-1, bit r*m+c, r < c.
std::uint64_t pair_bit(int m, int r, int c) { return std::uint64_t(1) << (r * m + c); }

std::uint64_t apply_perm(int m, std::uint64_t mask, const std::array<int, 6>& perm) {
    std::uint64_t out = 0;
    for (int r = 0; r < m; ++r)
        for (int c = r + 1; c < m; ++c)
            if (mask & pair_bit(m, r, c)) {
                int pr = perm[r], pc = perm[c];
                if (pr > pc) std::swap(pr, pc);
                out |= pair_bit(m, pr, pc);
            }
    return out;
}

std::uint64_t canonical_mask(int m, std::uint64_t mask) {
    std::array<int, 6> perm{};
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, apply_perm(m, mask, perm));
    } while (std::next_permutation(perm.begin(), perm.begin() + m));
    return best;
}

std::uint64_t cache_key(int m, std::uint64_t mask) { return (std::uint64_t(m) << 40) | mask; }

// Canonical masks of the named shapes, computed once.
const std::unordered_map<std::uint64_t, std::string>& named_shapes() {
    static const std::unordered_map<std::uint64_t, std::string> shapes = [] {
        auto mask_of = [](int m, std::initializer_list<std::pair<int, int>> edges) {
            std::uint64_t mask = 0;
            for (auto [r, c] : edges) mask |= pair_bit(m, std::min(r, c), std::max(r, c));
            return canonical_mask(m, mask);
        };
        std::unordered_map<std::uint64_t, std::string> s;
        s[cache_key(1, mask_of(1, {}))] = "node";
        s[cache_key(2, mask_of(2, {{0, 1}}))] = "edge";
        s[cache_key(3, mask_of(3, {{0, 1}, {1, 2}}))] = "two_chain";
        s[cache_key(3, mask_of(3, {{0, 1}, {1, 2}, {0, 2}}))] = "triangle";
        s[cache_key(4, mask_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))] = "quadrangle";
        s[cache_key(4, mask_of(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}))] = "triangle_pendant";
        s[cache_key(5, mask_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))] = "pentagon";
        return s;
    }();
    return shapes;
}

// Raw (m, mask) -> label, memoized. Masks are already invariant under the
// embedding because nodes are relabeled in sorted order before masking.
std::string classify(int m, std::uint64_t mask) {
    static thread_local std::unordered_map<std::uint64_t, std::string> memo;
    std::uint64_t key = cache_key(m, mask);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::string label;
    const auto& shapes = named_shapes();
    if (auto it = shapes.find(cache_key(m, canonical_mask(m, mask))); it != shapes.end()) {
        label = it->second;
    } else {
        label = "g" + std::to_string(m) + "_" + std::to_string(canonical_mask(m, mask));
    }
    memo.emplace(key, label);
    return label;
}

struct SubgraphKey {
    int m = 0;
    std::uint64_t mask = 0;
};

// Distinct sorted nodes and the relabeled edge mask of a closed walk.
SubgraphKey walk_key(const std::vector<int>& nodes, std::vector<int>& scratch) {
    scratch.assign(nodes.begin(), nodes.end() - 1);  // last repeats the first
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    SubgraphKey k;
    k.m = int(scratch.size());
    auto index_of = [&](int v) {
        return int(std::lower_bound(scratch.begin(), scratch.end(), v) - scratch.begin());
    };
    for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
        int u = nodes[s], v = nodes[s + 1];
        if (u == v) continue;
        int r = index_of(u), c = index_of(v);
        if (r > c) std::swap(r, c);
        k.mask |= pair_bit(k.m, r, c);
    }
    return k;
}

}  // namespace

Walk make_walk(const LaplacianGraph& lg, std::vector<int> nodes) {
    if (nodes.empty()) throw std::invalid_argument("walk needs at least one node");
    Walk w;
    w.weight = 1;
    for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
        int u = nodes[s], v = nodes[s + 1];
        if (u < 0 || u >= lg.n || v < 0 || v >= lg.n)
            throw std::invalid_argument("walk node out of range");
        const auto& row = lg.out[u];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, INT64_MIN));
        if (it == row.end() || it->first != v)
            throw std::invalid_argument("walk step " + std::to_string(u) + " -> " +
                                        std::to_string(v) + " uses no edge or self-loop");
        w.weight = checked_mul(w.weight, it->second);
    }
    w.nodes = std::move(nodes);
    return w;
}

CoveredSubgraph covered_subgraph(const Walk& w) {
    CoveredSubgraph c;
    c.nodes = w.nodes;
    std::sort(c.nodes.begin(), c.nodes.end());
    c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
    for (std::size_t s = 0; s + 1 < w.nodes.size(); ++s) {
        int u = w.nodes[s], v = w.nodes[s + 1];
        if (u == v) continue;
        c.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    int m = int(c.nodes.size());
    if (m <= 6) {
        std::uint64_t mask = 0;
        auto index_of = [&](int v) {
            return int(std::lower_bound(c.nodes.begin(), c.nodes.end(), v) - c.nodes.begin());
        };
        for (auto [u, v] : c.edges) mask |= pair_bit(m, index_of(u), index_of(v));
        c.label = classify(m, mask);
    }
    return c;
}

namespace {

template <typename Visit>
void enumerate_closed(const LaplacianGraph& lg, int base, int k, std::vector<int>& path,
                      int128 acc, const Visit& visit) {
    int v = path.back();
    if (int(path.size()) == k + 1) {
        if (v == base) visit(path, acc);
        return;
    }
    for (auto [j, w] : lg.out[v]) {
        if (w == 0) continue;  // zero-weight loops contribute nothing
        path.push_back(j);
        enumerate_closed(lg, base, k, path, checked_mul(acc, w), visit);
        path.pop_back();
    }
}

}  // namespace

int128 closed_walk_weight_sum(const LaplacianGraph& lg, int i, int k) {
    if (i < 0 || i >= lg.n) throw std::invalid_argument("base node out of range");
    if (k < 1 || k > kWalkCap)
        throw std::invalid_argument("walk length " + std::to_string(k) + " outside [1, " +
                                    std::to_string(kWalkCap) + "]");
    int128 total = 0;
    std::vector<int> path{i};
    enumerate_closed(lg, i, k, path, 1,
                     [&](const std::vector<int>&, int128 w) { total = checked_add(total, w); });
    return total;
}

Rational moments_via_walks(const LaplacianGraph& lg, int k) {
    if (lg.n < 1) throw std::invalid_argument("empty host graph");
    int128 total = 0;
    for (int i = 0; i < lg.n; ++i)
        total = checked_add(total, closed_walk_weight_sum(lg, i, k));
    return Rational(total, lg.n);
}

const std::vector<std::string>& walk_class_labels(int k) {
    static const std::vector<std::string> k4 = {"node", "edge", "two_chain", "triangle",
                                                "quadrangle"};
    static const std::vector<std::string> k5 = {"node",     "edge",       "two_chain",
                                                "triangle", "quadrangle", "triangle_pendant",
                                                "pentagon"};
    if (k == 4) return k4;
    if (k == 5) return k5;
    throw std::invalid_argument("walk classes are defined for k = 4 and 5 only");
}

std::map<std::string, Rational> walk_class_sums(const LaplacianGraph& lg, int k) {
    const auto& labels = walk_class_labels(k);  // validates k
    if (lg.n < 1) throw std::invalid_argument("empty host graph");

    std::unordered_map<std::string, int128> sums;
    for (const auto& l : labels) sums[l] = 0;

    std::vector<int> path;
    std::vector<int> scratch;
    for (int i = 0; i < lg.n; ++i) {
        path.assign(1, i);
        enumerate_closed(lg, i, k, path, 1, [&](const std::vector<int>& nodes, int128 w) {
            SubgraphKey key = walk_key(nodes, scratch);
            std::string label = classify(key.m, key.mask);
            auto it = sums.find(label);
            if (it == sums.end())
                throw std::logic_error("closed " + std::to_string(k) +
                                       "-walk covered an unexpected subgraph class '" + label +
                                       "'");
            it->second = checked_add(it->second, w);
        });
    }

    std::map<std::string, Rational> out;
    for (const auto& l : labels) out[l] = Rational(sums[l], lg.n);
    return out;
}

}  // namespace lapspec
