#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "coha/quiver.hpp"

namespace coha {

/// Cartan matrix of the underlying undirected diagram: 2 on the diagonal,
/// minus the number of edges off it.
inline std::vector<std::vector<int>> cartan_matrix(const Quiver& q) {
    const size_t n = static_cast<size_t>(q.vertex_count());
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) c[i][i] = 2;
    for (const Arrow& a : q.arrows()) {
        c[static_cast<size_t>(a.tail - 1)][static_cast<size_t>(a.head - 1)] -= 1;
        c[static_cast<size_t>(a.head - 1)][static_cast<size_t>(a.tail - 1)] -= 1;
    }
    return c;
}

/// All positive roots of an ADE quiver as dimension vectors, computed by
/// reflection closure of the simple roots. Returned sorted by (height, lex);
/// the order carries no meaning.
inline std::vector<DimVector> positive_roots(const Quiver& q) {
    if (!classify_dynkin(q).is_dynkin()) fail(Err::NotDynkin, "positive roots require an ADE quiver");
    const int n = q.vertex_count();
    auto c = cartan_matrix(q);
    std::set<DimVector> roots;
    std::vector<DimVector> work;
    for (int i = 1; i <= n; ++i) {
        work.push_back(dim_unit(n, i));
        roots.insert(work.back());
    }
    while (!work.empty()) {
        DimVector b = work.back();
        work.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += static_cast<long>(c[static_cast<size_t>(i)][static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
            DimVector r = b;
            r[static_cast<size_t>(i)] -= static_cast<int>(pairing);
            if (dim_is_zero(r)) continue;
            if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
            if (roots.insert(r).second) work.push_back(r);
        }
    }
    std::vector<DimVector> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        int ta = dim_total(a), tb = dim_total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

/// Positive roots listed in Reineke order, tagged with the block of the
/// subquiver partition they come from (block 0 everywhere for a single quiver).
struct RootList {
    std::vector<DimVector> roots;
    std::vector<int> block;        // 0-based block index per root
    std::vector<int> pos_in_block; // 0-based position within the block's order

    size_t size() const { return roots.size(); }
};

/// True iff u < v implies <beta_u, beta_v> >= 0 throughout the list.
inline bool is_reineke_order(const Quiver& q, const std::vector<DimVector>& roots) {
    for (size_t u = 0; u < roots.size(); ++u)
        for (size_t v = u + 1; v < roots.size(); ++v)
            if (antisym_form(q, roots[u], roots[v]) < 0) return false;
    return true;
}

/// Deterministic Reineke order: topological sort of the constraint digraph
/// with an edge a -> b whenever <beta_a, beta_b> > 0, ties broken by
/// lexicographically smallest dimension vector.
inline std::vector<DimVector> reineke_order(const Quiver& q, const std::vector<DimVector>& roots) {
    const size_t r = roots.size();
    std::vector<std::vector<size_t>> out(r);
    std::vector<int> indeg(r, 0);
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b)
            if (a != b && antisym_form(q, roots[a], roots[b]) > 0) {
                out[a].push_back(b);
                ++indeg[b];
            }
    auto cmp = [&](size_t a, size_t b) { return roots[a] > roots[b]; };
    std::priority_queue<size_t, std::vector<size_t>, decltype(cmp)> ready(cmp);
    for (size_t i = 0; i < r; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<DimVector> order;
    while (!ready.empty()) {
        size_t a = ready.top();
        ready.pop();
        order.push_back(roots[a]);
        for (size_t b : out[a])
            if (--indeg[b] == 0) ready.push(b);
    }
    if (order.size() != r) fail(Err::NoValidOrder, "constraint digraph on positive roots is cyclic");
    return order;
}

/// Per-block Reineke orders concatenated in block order; roots embedded as
/// full-length dimension vectors of the ambient quiver.
inline RootList combined_reineke_order(const Quiver& q, const SubquiverPartition& p) {
    RootList rl;
    for (size_t j = 0; j < p.size(); ++j) {
        BlockQuiver bq = block_quiver(p, j);
        auto ordered = reineke_order(bq.quiver, positive_roots(bq.quiver));
        for (size_t k = 0; k < ordered.size(); ++k) {
            DimVector full = dim_zero(q.vertex_count());
            for (size_t loc = 0; loc < bq.vertices.size(); ++loc)
                full[static_cast<size_t>(bq.vertices[loc] - 1)] = ordered[k][loc];
            rl.roots.push_back(std::move(full));
            rl.block.push_back(static_cast<int>(j));
            rl.pos_in_block.push_back(static_cast<int>(k));
        }
    }
    return rl;
}

/// Multiplicity list aligned with a RootList; a Kostant partition when the
/// weighted sum of roots reproduces the target dimension vector.
using KostantPartition = std::vector<int>;

inline DimVector partition_weight(const RootList& rl, const KostantPartition& m) {
    if (m.size() != rl.size()) fail(Err::LengthMismatch, "multiplicity list does not match root list");
    DimVector g = dim_zero(static_cast<int>(rl.roots.empty() ? 0 : rl.roots[0].size()));
    for (size_t u = 0; u < m.size(); ++u)
        if (m[u] != 0) g = dim_add(g, dim_scale(m[u], rl.roots[u]));
    return g;
}

/// All multiplicity lists m with sum m_u beta_u = gamma, in lexicographic
/// order of m. Empty when gamma is not reachable.
inline std::vector<KostantPartition> enumerate_partitions(const RootList& rl, const DimVector& gamma) {
    std::vector<KostantPartition> out;
    KostantPartition m(rl.size(), 0);
    DimVector rest = gamma;
    auto cap = [&](const DimVector& beta) {
        int c = -1;
        for (size_t i = 0; i < beta.size(); ++i)
            if (beta[i] > 0) {
                int k = rest[i] / beta[i];
                c = c < 0 ? k : std::min(c, k);
            }
        return std::max(c, 0);
    };
    std::function<void(size_t)> go = [&](size_t u) {
        if (u == rl.size()) {
            if (dim_is_zero(rest)) out.push_back(m);
            return;
        }
        const DimVector& beta = rl.roots[u];
        int top = cap(beta);
        for (int k = 0; k <= top; ++k) {
            m[u] = k;
            go(u + 1);
            for (size_t i = 0; i < beta.size(); ++i) rest[i] -= beta[i];
        }
        for (size_t i = 0; i < beta.size(); ++i) rest[i] += (top + 1) * beta[i];
        m[u] = 0;
    };
    go(0);
    return out;
}

/// The local multiplicity list m^j of block j, aligned with the block's own
/// Reineke order.
inline KostantPartition partition_restricted_to_block(const RootList& roots, const KostantPartition& m, int j) {
    KostantPartition mj;
    for (size_t u = 0; u < roots.size(); ++u)
        if (roots.block[u] == j) mj.push_back(m[u]);
    return mj;
}

/// "e1+2e2" style rendering of a root or dimension vector.
inline std::string root_string(const DimVector& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (b[i] != 1) s += std::to_string(b[i]);
        s += "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace coha
