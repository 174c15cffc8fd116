#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coha/mpoly.hpp"
#include "coha/quiver.hpp"
#include "coha/roots.hpp"

namespace coha {

inline std::vector<VarId> omega_vars(int vertex, int count) {
    std::vector<VarId> vs;
    vs.reserve(static_cast<size_t>(count));
    for (int j = 1; j <= count; ++j) vs.push_back(omega(vertex, j));
    return vs;
}

/// Variable blocks {omega[i,1..gamma(i)]} of H_gamma, one per vertex.
inline std::vector<std::vector<VarId>> vertex_variable_blocks(const Quiver& q, const DimVector& gamma) {
    std::vector<std::vector<VarId>> blocks;
    for (int i = 1; i <= q.vertex_count(); ++i)
        blocks.push_back(omega_vars(i, gamma[static_cast<size_t>(i - 1)]));
    return blocks;
}

/// Element of H_gamma: a polynomial in omega[i,j], j <= gamma(i), separately
/// symmetric in each vertex's variables. The grade is carried explicitly;
/// regrading the same polynomial is a different element.
struct CohaElement {
    Quiver quiver;
    DimVector grade;
    MPoly poly;

    friend bool operator==(const CohaElement& a, const CohaElement& b) {
        return a.quiver == b.quiver && a.grade == b.grade && a.poly == b.poly;
    }
};

inline CohaElement element(const Quiver& q, const DimVector& gamma, MPoly p) {
    if (static_cast<int>(gamma.size()) != q.vertex_count())
        fail(Err::LengthMismatch, "grade length does not match quiver");
    for (int g : gamma)
        if (g < 0) fail(Err::InvalidInput, "negative grade entry");
    for (const VarId& v : p.variables()) {
        if (v.family != VarId::Omega || v.a < 1 || v.a > q.vertex_count() || v.b < 1 ||
            v.b > gamma[static_cast<size_t>(v.a - 1)])
            fail(Err::VariableOutOfRange, var_string(v) + " is not a variable of this graded piece");
    }
    if (!is_block_symmetric(p, vertex_variable_blocks(q, gamma)))
        fail(Err::NotSymmetric, "polynomial is not symmetric per vertex");
    return {q, gamma, std::move(p)};
}

inline CohaElement one(const Quiver& q, const DimVector& gamma) {
    return element(q, gamma, MPoly::constant(1));
}

/// psi_p = x_1^p in grade 1 of the one-vertex CoHA.
inline CohaElement psi(int p) {
    if (p < 0) fail(Err::InvalidInput, "psi exponent must be non-negative");
    return element(a1_quiver(), {1}, MPoly::var(omega(1, 1), p));
}

namespace detail {

// all size-k subsets of 1..n, each sorted, in lexicographic order
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            go(v + 1);
            cur.pop_back();
        }
    };
    go(1);
    return out;
}

inline std::vector<int> complement(const std::vector<int>& s, int n) {
    std::vector<int> c;
    size_t k = 0;
    for (int v = 1; v <= n; ++v) {
        if (k < s.size() && s[k] == v) ++k;
        else c.push_back(v);
    }
    return c;
}

} // namespace detail

/// Two-factor product with the numerator arrow set made explicit; the public
/// mul2 passes all arrows of the quiver. The localization sum is assembled
/// over the product of full per-vertex Vandermonde determinants and finished
/// with a single exact division, which must succeed.
inline CohaElement mul2_with_arrows(const CohaElement& f, const CohaElement& g,
                                    const std::vector<Arrow>& numerator_arrows) {
    if (!(f.quiver == g.quiver)) fail(Err::QuiverMismatch, "factors live over different quivers");
    const Quiver& q = f.quiver;
    const int n = q.vertex_count();
    DimVector gamma = dim_add(f.grade, g.grade);

    std::vector<std::vector<std::vector<int>>> choices(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        choices[static_cast<size_t>(i)] =
            detail::combinations(gamma[static_cast<size_t>(i)], f.grade[static_cast<size_t>(i)]);

    MPoly total;
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    while (true) {
        // current subset tuple
        MPoly term = MPoly::constant(1);
        std::map<VarId, VarId> fmap, gmap;
        std::vector<std::vector<int>> S(static_cast<size_t>(n)), Sbar(static_cast<size_t>(n));
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            const auto& s = choices[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]];
            auto sbar = detail::complement(s, gamma[static_cast<size_t>(i)]);
            for (size_t j = 0; j < s.size(); ++j) fmap[omega(i + 1, static_cast<int>(j) + 1)] = omega(i + 1, s[j]);
            for (size_t j = 0; j < sbar.size(); ++j) gmap[omega(i + 1, static_cast<int>(j) + 1)] = omega(i + 1, sbar[j]);
            // complement of this vertex's denominator inside the full Vandermonde:
            // sign from split pairs (a<b, a in S, b outside), then the two
            // within-part Vandermonde products
            for (size_t x = 0; x < s.size(); ++x)
                for (int b : sbar)
                    if (s[x] < b) sign = -sign;
            for (size_t x = 0; x < s.size(); ++x)
                for (size_t y = x + 1; y < s.size(); ++y)
                    term *= MPoly::var(omega(i + 1, s[x])) - MPoly::var(omega(i + 1, s[y]));
            for (size_t x = 0; x < sbar.size(); ++x)
                for (size_t y = x + 1; y < sbar.size(); ++y)
                    term *= MPoly::var(omega(i + 1, sbar[x])) - MPoly::var(omega(i + 1, sbar[y]));
            S[static_cast<size_t>(i)] = s;
            Sbar[static_cast<size_t>(i)] = std::move(sbar);
        }
        for (const Arrow& a : numerator_arrows)
            for (int v : Sbar[static_cast<size_t>(a.head - 1)])
                for (int u : S[static_cast<size_t>(a.tail - 1)])
                    term *= MPoly::var(omega(a.head, v)) - MPoly::var(omega(a.tail, u));
        term *= f.poly.substitute(fmap) * g.poly.substitute(gmap);
        if (sign < 0) term = -term;
        total += term;

        // odometer over subset tuples
        int i = 0;
        while (i < n && ++pick[static_cast<size_t>(i)] == choices[static_cast<size_t>(i)].size()) {
            pick[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }

    MPoly den = MPoly::constant(1);
    for (int i = 1; i <= n; ++i) den *= vandermonde(omega_vars(i, gamma[static_cast<size_t>(i - 1)]));
    return {q, std::move(gamma), total.exact_div(den, Err::InternalNotDivisible)};
}

inline CohaElement mul2(const CohaElement& f, const CohaElement& g) {
    return mul2_with_arrows(f, g, f.quiver.arrows());
}

/// Left-to-right fold of mul2; associativity makes the grouping immaterial.
inline CohaElement muln(std::span<const CohaElement> factors) {
    if (factors.empty()) fail(Err::InvalidInput, "empty product");
    CohaElement acc = factors[0];
    for (size_t u = 1; u < factors.size(); ++u) acc = mul2(acc, factors[u]);
    return acc;
}

inline CohaElement muln(const std::vector<CohaElement>& factors) {
    return muln(std::span<const CohaElement>(factors));
}

/// Smallest vertex where the root has coordinate exactly 1. Every ADE
/// positive root has one except the longest root of E8.
inline int choose_marker(const DimVector& beta) {
    for (size_t i = 0; i < beta.size(); ++i)
        if (beta[i] == 1) return static_cast<int>(i) + 1;
    fail(Err::NoUnitCoordinate, "root " + root_string(beta) + " has no coordinate equal to 1");
}

/// The element of H_{m beta} given by a symmetric polynomial f in m variables
/// placed on the marker vertex's variables omega[i,1..m]. These span the
/// graded piece A_{beta,m} of the one-vertex subalgebra attached to beta.
inline CohaElement subalgebra_element(const Quiver& q, const DimVector& beta, int m, int marker,
                                      const MPoly& f) {
    if (static_cast<int>(beta.size()) != q.vertex_count())
        fail(Err::LengthMismatch, "root length does not match quiver");
    if (marker < 1 || marker > q.vertex_count() || beta[static_cast<size_t>(marker - 1)] != 1)
        fail(Err::BadMarker, "marker vertex must carry coordinate 1 of the root");
    if (m < 0) fail(Err::InvalidInput, "negative multiplicity");
    auto vars = f.variables();
    if (!vars.empty() && static_cast<int>(vars.size()) != m)
        fail(Err::BadMarker, "polynomial must be constant or use exactly m variables");
    std::vector<VarId> sorted(vars.begin(), vars.end());
    if (!is_block_symmetric(f, {sorted})) fail(Err::NotSymmetric, "polynomial is not symmetric in its variables");
    std::map<VarId, VarId> rename;
    for (size_t j = 0; j < sorted.size(); ++j) rename[sorted[j]] = omega(marker, static_cast<int>(j) + 1);
    return element(q, dim_scale(m, beta), f.substitute(rename));
}

/// Number of partitions of k into at most m parts.
inline long count_partitions_max_parts(int k, int m) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m <= 0) return 0;
    // p(k, m) = p(k-m, m) + p(k, m-1)
    std::vector<std::vector<long>> dp(static_cast<size_t>(k) + 1, std::vector<long>(static_cast<size_t>(m) + 1, 0));
    for (int j = 0; j <= m; ++j) dp[0][static_cast<size_t>(j)] = 1;
    for (int s = 1; s <= k; ++s)
        for (int j = 1; j <= m; ++j)
            dp[static_cast<size_t>(s)][static_cast<size_t>(j)] =
                dp[static_cast<size_t>(s)][static_cast<size_t>(j - 1)] +
                (s >= j ? dp[static_cast<size_t>(s - j)][static_cast<size_t>(j)] : 0);
    return dp[static_cast<size_t>(k)][static_cast<size_t>(m)];
}

/// All partitions of k into at most m parts (weakly decreasing lists).
inline std::vector<std::vector<int>> partitions_max_parts(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int rest, int bound) {
        if (static_cast<int>(cur.size()) > m) return;
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == m) return;
        for (int part = std::min(rest, bound); part >= 1; --part) {
            cur.push_back(part);
            go(rest - part, part);
            cur.pop_back();
        }
    };
    go(k, k);
    return out;
}

/// dim (H_gamma)_k: per-vertex tuples of partitions with at most gamma(i)
/// parts at vertex i and total size k.
inline long graded_dim(const DimVector& gamma, int k) {
    std::vector<long> acc(static_cast<size_t>(k) + 1, 0);
    acc[0] = 1;
    for (int gi : gamma) {
        std::vector<long> next(static_cast<size_t>(k) + 1, 0);
        for (int s = 0; s <= k; ++s) {
            if (acc[static_cast<size_t>(s)] == 0) continue;
            for (int d = 0; s + d <= k; ++d)
                next[static_cast<size_t>(s + d)] += acc[static_cast<size_t>(s)] * count_partitions_max_parts(d, gi);
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(k)];
}

} // namespace coha
