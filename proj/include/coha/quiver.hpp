#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "coha/error.hpp"

namespace coha {

/// Arrow of a quiver, stored as (tail, head): the arrow points tail -> head.
struct Arrow {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Dimension vector: one non-negative integer per vertex, 1-based vertices.
using DimVector = std::vector<int>;

inline DimVector dim_zero(int n) { return DimVector(static_cast<size_t>(n), 0); }

inline DimVector dim_unit(int n, int i) {
    DimVector d = dim_zero(n);
    d[static_cast<size_t>(i - 1)] = 1;
    return d;
}

inline bool dim_is_zero(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

inline DimVector dim_add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) fail(Err::LengthMismatch, "dimension vectors of different length");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVector dim_scale(int c, const DimVector& a) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline int dim_total(const DimVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// Vertices carrying a nonzero entry, 1-based.
inline std::vector<int> dim_support(const DimVector& a) {
    std::vector<int> s;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

namespace detail {

// Kahn's algorithm over vertices 1..n with directed edges; returns a topological
// order picking the smallest available vertex first, or nullopt if cyclic.
inline std::optional<std::vector<int>> topo_order(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> out(static_cast<size_t>(n) + 1);
    std::vector<int> indeg(static_cast<size_t>(n) + 1, 0);
    for (auto [a, b] : edges) {
        out[static_cast<size_t>(a)].push_back(b);
        ++indeg[static_cast<size_t>(b)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

} // namespace detail

/// An acyclic quiver with vertices 1..n ordered head-before-tail: every arrow
/// satisfies head < tail. The arrow list order is part of the identity.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows)
        : n_(vertex_count), arrows_(std::move(arrows)) {
        if (n_ <= 0) fail(Err::InvalidInput, "vertex count must be positive");
        std::vector<std::pair<int, int>> edges;
        for (const Arrow& a : arrows_) {
            if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_)
                fail(Err::InvalidInput, "arrow endpoint out of range");
            edges.emplace_back(a.tail, a.head);
        }
        if (!detail::topo_order(n_, edges)) fail(Err::CycleFound, "quiver has an oriented cycle");
        for (const Arrow& a : arrows_)
            if (!(a.head < a.tail))
                fail(Err::OrderViolation,
                     "arrow " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                         " violates head-before-tail vertex order");
    }

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.n_ == b.n_ && a.arrows_ == b.arrows_;
    }

private:
    int n_;
    std::vector<Arrow> arrows_;
};

/// The quiver with one vertex and no arrows.
inline Quiver a1_quiver() { return Quiver(1, {}); }

/// Relabels vertices of an arbitrary acyclic arrow list into head-before-tail
/// order (topological, smallest original index first).
struct Reindexed {
    Quiver quiver;
    std::vector<int> new_of_old; // 1-based; new_of_old[v-1] is the new name of old vertex v
};

inline Reindexed head_before_tail_reindex(int n, const std::vector<Arrow>& arrows) {
    std::vector<std::pair<int, int>> edges;
    for (const Arrow& a : arrows) {
        if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
            fail(Err::InvalidInput, "arrow endpoint out of range");
        edges.emplace_back(a.head, a.tail); // head must come first
    }
    auto order = detail::topo_order(n, edges);
    if (!order) fail(Err::CycleFound, "quiver has an oriented cycle");
    std::vector<int> new_of_old(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos) new_of_old[static_cast<size_t>((*order)[static_cast<size_t>(pos)] - 1)] = pos + 1;
    std::vector<Arrow> relabeled;
    relabeled.reserve(arrows.size());
    for (const Arrow& a : arrows)
        relabeled.push_back({new_of_old[static_cast<size_t>(a.tail - 1)], new_of_old[static_cast<size_t>(a.head - 1)]});
    return {Quiver(n, std::move(relabeled)), std::move(new_of_old)};
}

/// Euler form chi(g1, g2) = sum_i g1(i)g2(i) - sum_a g1(ta)g2(ha).
inline long euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
    if (static_cast<int>(g1.size()) != q.vertex_count() || static_cast<int>(g2.size()) != q.vertex_count())
        fail(Err::LengthMismatch, "dimension vector length does not match quiver");
    long s = 0;
    for (size_t i = 0; i < g1.size(); ++i) s += static_cast<long>(g1[i]) * g2[i];
    for (const Arrow& a : q.arrows())
        s -= static_cast<long>(g1[static_cast<size_t>(a.tail - 1)]) * g2[static_cast<size_t>(a.head - 1)];
    return s;
}

/// Opposite antisymmetrization <g1, g2> = chi(g2, g1) - chi(g1, g2).
inline long antisym_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
    return euler_form(q, g2, g1) - euler_form(q, g1, g2);
}

/// Classification of the underlying undirected graph as a simply-laced diagram.
struct DynkinType {
    char family = 0; // 'A', 'D', or 'E'; 0 when not Dynkin
    int rank = 0;

    bool is_dynkin() const { return family != 0; }
    bool is_e8() const { return family == 'E' && rank == 8; }

    std::string name() const {
        if (!is_dynkin()) return "not-Dynkin";
        return std::string(1, family) + std::to_string(rank);
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline DynkinType classify_dynkin(const Quiver& q) {
    const int n = q.vertex_count();
    // simple undirected graph; a repeated pair means a multi-edge, hence not Dynkin
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
    for (const Arrow& a : q.arrows()) {
        auto e = std::minmax(a.tail, a.head);
        if (!seen.insert({e.first, e.second}).second) return {};
        adj[static_cast<size_t>(a.tail)].push_back(a.head);
        adj[static_cast<size_t>(a.head)].push_back(a.tail);
    }
    if (static_cast<int>(seen.size()) != n - 1) return {}; // a connected tree has n-1 edges
    // connectivity
    std::vector<char> vis(static_cast<size_t>(n) + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[static_cast<size_t>(v)])
            if (!vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    if (count != n) return {};
    // degree profile of a tree: a path or a single degree-3 branch vertex
    int branch = 0;
    for (int v = 1; v <= n; ++v) {
        size_t d = adj[static_cast<size_t>(v)].size();
        if (d > 3) return {};
        if (d == 3) {
            if (branch) return {};
            branch = v;
        }
    }
    if (!branch) return {'A', n};
    std::vector<int> arms;
    for (int w : adj[static_cast<size_t>(branch)]) {
        int len = 1, prev = branch, cur = w;
        while (true) {
            const auto& nb = adj[static_cast<size_t>(cur)];
            if (nb.size() == 1) break;
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', arms[2] + 4};
    return {};
}

/// Ordered partition of the vertex set into connected subquivers whose
/// contraction is acyclic; blocks listed head-before-tail.
struct SubquiverPartition {
    std::vector<std::vector<int>> blocks;       // sorted vertex lists
    std::vector<std::vector<Arrow>> block_arrows; // arrows of Q induced within each block
    std::vector<DynkinType> types;              // per-block classification
    bool has_e8 = false;

    size_t size() const { return blocks.size(); }

    /// 0-based block index containing vertex v, or -1.
    int block_of(int v) const {
        for (size_t j = 0; j < blocks.size(); ++j)
            if (std::binary_search(blocks[j].begin(), blocks[j].end(), v)) return static_cast<int>(j);
        return -1;
    }
};

/// A block of a partition re-viewed as a standalone quiver; `vertices[k]` is
/// the original name of local vertex k+1 (order-preserving, so the local
/// quiver is again head-before-tail).
struct BlockQuiver {
    Quiver quiver;
    std::vector<int> vertices;

    int local_of(int orig) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), orig);
        return static_cast<int>(it - vertices.begin()) + 1;
    }
};

inline BlockQuiver block_quiver(const SubquiverPartition& p, size_t j) {
    const auto& verts = p.blocks[j];
    std::vector<Arrow> arrows;
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()) + 1;
    };
    for (const Arrow& a : p.block_arrows[j]) arrows.push_back({local(a.tail), local(a.head)});
    return {Quiver(static_cast<int>(verts.size()), std::move(arrows)), verts};
}

/// Contracted quiver: one vertex per block, arrows of Q running between blocks.
inline Quiver contract(const Quiver& q, const SubquiverPartition& p) {
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) {
        int jt = p.block_of(a.tail), jh = p.block_of(a.head);
        if (jt != jh) arrows.push_back({jt + 1, jh + 1});
    }
    return Quiver(static_cast<int>(p.size()), std::move(arrows));
}

inline SubquiverPartition validate_partition(const Quiver& q, std::vector<std::vector<int>> blocks,
                                             bool require_dynkin = true) {
    const int n = q.vertex_count();
    if (blocks.empty()) fail(Err::BadPartition, "no blocks given");
    std::vector<int> owner(static_cast<size_t>(n) + 1, -1);
    for (size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].empty()) fail(Err::BadPartition, "empty block");
        std::sort(blocks[j].begin(), blocks[j].end());
        for (int v : blocks[j]) {
            if (v < 1 || v > n) fail(Err::BadPartition, "block vertex out of range");
            if (owner[static_cast<size_t>(v)] != -1) fail(Err::NotDisjointCover, "vertex " + std::to_string(v) + " in two blocks");
            owner[static_cast<size_t>(v)] = static_cast<int>(j);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (owner[static_cast<size_t>(v)] == -1) fail(Err::NotDisjointCover, "vertex " + std::to_string(v) + " not covered");

    SubquiverPartition p;
    p.blocks = std::move(blocks);
    p.block_arrows.resize(p.blocks.size());
    for (const Arrow& a : q.arrows()) {
        int jt = owner[static_cast<size_t>(a.tail)], jh = owner[static_cast<size_t>(a.head)];
        if (jt == jh) p.block_arrows[static_cast<size_t>(jt)].push_back(a);
    }

    // per-block connectivity (undirected)
    for (size_t j = 0; j < p.blocks.size(); ++j) {
        const auto& verts = p.blocks[j];
        std::vector<std::vector<int>> adj;
        adj.resize(verts.size());
        auto local = [&](int v) {
            return static_cast<size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        for (const Arrow& a : p.block_arrows[j]) {
            adj[local(a.tail)].push_back(static_cast<int>(local(a.head)));
            adj[local(a.head)].push_back(static_cast<int>(local(a.tail)));
        }
        std::vector<char> vis(verts.size(), 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        size_t count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : adj[static_cast<size_t>(v)])
                if (!vis[static_cast<size_t>(w)]) {
                    vis[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        if (count != verts.size()) fail(Err::NotConnected, "block " + std::to_string(j + 1) + " is not connected");
    }

    // admissibility and ordering of the contracted quiver
    std::vector<std::pair<int, int>> cedges;
    bool ordered = true;
    for (const Arrow& a : q.arrows()) {
        int jt = owner[static_cast<size_t>(a.tail)], jh = owner[static_cast<size_t>(a.head)];
        if (jt != jh) {
            cedges.emplace_back(jh + 1, jt + 1); // head block must precede tail block
            if (!(jh < jt)) ordered = false;
        }
    }
    auto corder = detail::topo_order(static_cast<int>(p.size()), cedges);
    if (!corder) fail(Err::ContractionCyclic, "contracted quiver has an oriented cycle");
    if (!ordered) {
        std::string suggestion;
        for (int j : *corder) suggestion += (suggestion.empty() ? "" : ",") + std::to_string(j);
        fail(Err::NotOrdered, "blocks are not in head-before-tail order; a valid order is [" + suggestion + "]");
    }

    for (size_t j = 0; j < p.blocks.size(); ++j) {
        DynkinType t = classify_dynkin(block_quiver(p, j).quiver);
        if (require_dynkin && !t.is_dynkin())
            fail(Err::NotDynkin, "block " + std::to_string(j + 1) + " is not an ADE orientation");
        if (t.is_e8()) p.has_e8 = true;
        p.types.push_back(t);
    }
    return p;
}

/// Singleton blocks {1},...,{n} in vertex order; valid for every quiver.
inline SubquiverPartition singleton_partition(const Quiver& q) {
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= q.vertex_count(); ++v) blocks.push_back({v});
    return validate_partition(q, std::move(blocks));
}

/// Outcome of the consistency test for a list of dimension vectors.
struct ConsistencyResult {
    bool ok = true;
    bool unsupported = false; // true when some vector fits in no single block
    int u = -1, v = -1;       // 1-based positions witnessing the violation

    explicit operator bool() const { return ok; }
};

/// Checks that each vector is supported in a single block and that the block
/// indices can be chosen weakly increasing along the list.
inline ConsistencyResult is_consistent(const SubquiverPartition& p, const std::vector<DimVector>& gammas) {
    int current = 0; // 0-based minimal admissible block
    int last_pos = -1;
    for (size_t u = 0; u < gammas.size(); ++u) {
        auto supp = dim_support(gammas[u]);
        if (supp.empty()) continue; // zero vector fits anywhere
        int j = p.block_of(supp[0]);
        bool inside = j >= 0;
        for (int v : supp)
            if (p.block_of(v) != j) inside = false;
        if (!inside) return {false, true, static_cast<int>(u) + 1, -1};
        if (j < current) return {false, false, last_pos + 1, static_cast<int>(u) + 1};
        current = j;
        last_pos = static_cast<int>(u);
    }
    return {};
}

} // namespace coha
