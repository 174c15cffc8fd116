#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>
#include <vector>

#include "coha/coha.hpp"

namespace coha {

/// The index sets Y_{i,u,v} prescribing the restriction substitution: at each
/// vertex the sets partition [gamma(i)], reading the roots in combined Reineke
/// order, with |Y_{i,u,v}| = d^i_u consecutive indices per copy.
struct YSystem {
    DimVector gamma;
    RootList roots;
    KostantPartition m;
    // sets[u][v-1][i-1] = the indices Y_{i,u+1,v} (u 0-based here)
    std::vector<std::vector<std::vector<std::vector<int>>>> sets;
    std::map<VarId, VarId> omega_to_t;

    const std::vector<int>& y_set(int i, int u, int v) const {
        return sets[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)][static_cast<size_t>(i - 1)];
    }
};

inline YSystem y_system(const Quiver& q, const RootList& roots, const KostantPartition& m) {
    const int n = q.vertex_count();
    YSystem ys;
    ys.gamma = partition_weight(roots, m);
    ys.roots = roots;
    ys.m = m;
    ys.sets.resize(roots.size());
    std::vector<int> offset(static_cast<size_t>(n), 0);
    for (size_t u = 0; u < roots.size(); ++u) {
        ys.sets[u].resize(static_cast<size_t>(std::max(m[u], 0)));
        for (int v = 1; v <= m[u]; ++v) {
            auto& per_vertex = ys.sets[u][static_cast<size_t>(v - 1)];
            per_vertex.resize(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) {
                int d = roots.roots[u][static_cast<size_t>(i - 1)];
                auto& set = per_vertex[static_cast<size_t>(i - 1)];
                for (int k = 1; k <= d; ++k) {
                    int idx = offset[static_cast<size_t>(i - 1)] + k;
                    set.push_back(idx);
                    ys.omega_to_t[omega(i, idx)] = tvar(static_cast<int>(u) + 1, v);
                }
                offset[static_cast<size_t>(i - 1)] += d;
            }
        }
    }
    return ys;
}

/// The restriction iota*_m: substitutes omega[i,k] -> t[u,v] when k lies in
/// Y_{i,u,v}; lands in polynomials symmetric in each {t[u,1..m_u]}.
inline MPoly restrict_element(const YSystem& ys, const CohaElement& e) {
    if (e.grade != ys.gamma) fail(Err::GradeMismatch, "element grade does not match the Y-system");
    return e.poly.substitute(ys.omega_to_t);
}

/// [eta-bar_m] = one(m_1 beta_1) * ... * one(m_r beta_r); zero multiplicities
/// contribute no factor.
inline CohaElement stratum_class(const Quiver& q, const RootList& roots, const KostantPartition& m) {
    std::vector<CohaElement> factors;
    for (size_t u = 0; u < roots.size(); ++u)
        if (m[u] > 0) factors.push_back(one(q, dim_scale(m[u], roots.roots[u])));
    if (factors.empty()) return one(q, dim_zero(q.vertex_count()));
    return muln(factors);
}

/// eps_m: the stratum class restricted to the normal locus.
inline MPoly euler_class(const Quiver& q, const RootList& roots, const KostantPartition& m) {
    return restrict_element(y_system(q, roots, m), stratum_class(q, roots, m));
}

/// [Omega_{m^j}(Q^j)] computed inside the block quiver, then re-embedded into
/// H(Q) by renaming vertices; the ingredient of the orbit-multiplication rule.
inline CohaElement embedded_block_orbit_class(const Quiver& q, const SubquiverPartition& p,
                                              const RootList& roots, const KostantPartition& m, int j) {
    BlockQuiver bq = block_quiver(p, static_cast<size_t>(j));
    SubquiverPartition whole = validate_partition(bq.quiver, {[&] {
        std::vector<int> vs;
        for (int v = 1; v <= bq.quiver.vertex_count(); ++v) vs.push_back(v);
        return vs;
    }()});
    RootList local = combined_reineke_order(bq.quiver, whole);
    // the block's slice of the combined order is exactly the block's own order
    KostantPartition mj = partition_restricted_to_block(roots, m, j);
    CohaElement cls = stratum_class(bq.quiver, local, mj);
    std::map<VarId, VarId> rename;
    DimVector grade = dim_zero(q.vertex_count());
    for (size_t loc = 0; loc < bq.vertices.size(); ++loc) {
        int orig = bq.vertices[loc];
        grade[static_cast<size_t>(orig - 1)] = cls.grade[loc];
        for (int k = 1; k <= cls.grade[loc]; ++k) rename[omega(static_cast<int>(loc) + 1, k)] = omega(orig, k);
    }
    return element(q, grade, cls.poly.substitute(rename));
}

/// Product over blocks of the embedded Dynkin orbit classes; by the
/// orbit-multiplication rule this equals the stratum class.
inline CohaElement orbit_classes_product(const Quiver& q, const SubquiverPartition& p,
                                         const RootList& roots, const KostantPartition& m) {
    std::vector<CohaElement> factors;
    for (size_t j = 0; j < p.size(); ++j) factors.push_back(embedded_block_orbit_class(q, p, roots, m, static_cast<int>(j)));
    return muln(factors);
}

/// Outcome of the factorized-restriction identity check.
struct RestrictionCheck {
    bool ok = false;
    MPoly got;  // restrict(mu_m(f_1 .. f_r))
    MPoly want; // f_1(t_1) ... f_r(t_r) * eps_m

    explicit operator bool() const { return ok; }
};

/// Verifies restrict(mu_m(f_1..f_r)) = f_1(t_{1,.}) ... f_r(t_{r,.}) * eps_m.
/// Each f_u must be symmetric in m_u variables (constant when m_u = 0);
/// markers default to the smallest unit coordinate of each root.
inline RestrictionCheck factored_restriction_check(const Quiver& q, const RootList& roots,
                                                   const KostantPartition& m, const std::vector<MPoly>& fs,
                                                   const std::vector<int>& marker_override = {}) {
    if (fs.size() != roots.size()) fail(Err::LengthMismatch, "one polynomial per root required");
    std::vector<CohaElement> factors;
    MPoly expected = MPoly::constant(1);
    for (size_t u = 0; u < roots.size(); ++u) {
        int marker = u < marker_override.size() && marker_override[u] > 0 ? marker_override[u]
                                                                          : choose_marker(roots.roots[u]);
        if (m[u] == 0) {
            if (!fs[u].is_constant()) fail(Err::BadMarker, "slot with multiplicity 0 takes a constant");
            expected *= fs[u];
            factors.push_back(element(q, dim_zero(q.vertex_count()), fs[u]));
            continue;
        }
        factors.push_back(subalgebra_element(q, roots.roots[u], m[u], marker, fs[u]));
        auto vars = fs[u].variables();
        std::vector<VarId> sorted(vars.begin(), vars.end());
        std::map<VarId, VarId> to_t;
        for (size_t k = 0; k < sorted.size(); ++k) to_t[sorted[k]] = tvar(static_cast<int>(u) + 1, static_cast<int>(k) + 1);
        expected *= fs[u].substitute(to_t);
    }
    YSystem ys = y_system(q, roots, m);
    MPoly got = restrict_element(ys, muln(factors));
    MPoly want = expected * euler_class(q, roots, m);
    return {got == want, std::move(got), std::move(want)};
}

/// Exact rank over Q by fraction-free (Bareiss) elimination on a cleared
/// integer matrix.
inline long rank_exact(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    std::vector<std::vector<mpz_class>> mat;
    mat.reserve(rows.size());
    for (auto& row : rows) {
        mpz_class lcm = 1;
        for (const Rat& x : row) {
            mpz_class den = x.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<mpz_class> irow;
        irow.reserve(cols);
        for (const Rat& x : row) irow.push_back(mpz_class(x.get_num() * (lcm / x.get_den())));
        mat.push_back(std::move(irow));
    }
    size_t r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && r < mat.size(); ++c) {
        size_t pivot = r;
        while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[r], mat[pivot]);
        for (size_t i = r + 1; i < mat.size(); ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]) / prev;
            mat[i][c] = 0;
        }
        prev = mat[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

/// Per-degree outcome of the structure-isomorphism verification.
struct DegreeReport {
    int k = 0;
    long products = 0;
    long rank = 0;
    long dim = 0;
    bool verified = false;
};

namespace detail {

inline int thread_budget() {
    if (const char* env = std::getenv("COHA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// weak compositions of total over the active slots
inline std::vector<std::vector<int>> weak_compositions(int total, size_t slots) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(slots, 0);
    std::function<void(size_t, int)> go = [&](size_t u, int rest) {
        if (u + 1 == slots) {
            cur[u] = rest;
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= rest; ++d) {
            cur[u] = d;
            go(u + 1, rest - d);
        }
    };
    if (slots == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    go(0, total);
    return out;
}

// all products mu_m(monomial basis) with total polynomial degree <= max_deg
inline std::vector<std::pair<int, MPoly>> structure_products_for(const Quiver& q, const RootList& roots,
                                                                 const KostantPartition& m, int max_deg) {
    std::vector<size_t> active;
    for (size_t u = 0; u < roots.size(); ++u)
        if (m[u] > 0) active.push_back(u);
    long base = stratum_class(q, roots, m).poly.degree(); // codim of the stratum
    std::vector<std::pair<int, MPoly>> out;
    if (base > max_deg) return out;
    for (int extra = 0; extra + static_cast<int>(base) <= max_deg; ++extra) {
        for (const auto& comp : weak_compositions(extra, active.size())) {
            // per-slot monomial symmetric bases of the requested degrees
            std::vector<std::vector<MPoly>> slot_bases(active.size());
            bool feasible = true;
            for (size_t s = 0; s < active.size(); ++s) {
                size_t u = active[s];
                int marker = choose_marker(roots.roots[u]);
                for (const auto& lambda : partitions_max_parts(comp[s], m[u]))
                    slot_bases[s].push_back(monomial_symmetric(lambda, omega_vars(marker, m[u])));
                if (slot_bases[s].empty()) feasible = false;
            }
            if (!feasible) continue;
            // odometer over basis choices
            std::vector<size_t> pick(active.size(), 0);
            while (true) {
                std::vector<CohaElement> factors;
                for (size_t s = 0; s < active.size(); ++s) {
                    size_t u = active[s];
                    int marker = choose_marker(roots.roots[u]);
                    factors.push_back(subalgebra_element(q, roots.roots[u], m[u], marker, slot_bases[s][pick[s]]));
                }
                CohaElement mu = factors.empty() ? one(q, dim_zero(q.vertex_count())) : muln(factors);
                out.emplace_back(static_cast<int>(base) + extra, mu.poly);
                size_t s = 0;
                while (s < active.size() && ++pick[s] == slot_bases[s].size()) {
                    pick[s] = 0;
                    ++s;
                }
                if (s == active.size()) break;
                if (active.empty()) break;
            }
            if (active.empty()) break; // single empty product
        }
        if (active.empty()) break;
    }
    return out;
}

} // namespace detail

/// Monomial-symmetric basis signatures of (H_gamma)_k: one partition per
/// vertex, at most gamma(i) parts, total size k; deterministic order.
inline std::vector<std::vector<std::vector<int>>> hgamma_basis(const DimVector& gamma, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur(gamma.size());
    std::function<void(size_t, int)> go = [&](size_t i, int rest) {
        if (i == gamma.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int d = 0; d <= rest; ++d)
            for (const auto& lambda : partitions_max_parts(d, gamma[i])) {
                cur[i] = lambda;
                go(i + 1, rest - d);
            }
        cur[i].clear();
    };
    go(0, k);
    return out;
}

/// Coefficient row of a per-vertex-symmetric polynomial (assumed homogeneous
/// of the basis degree) against the hgamma_basis signatures.
inline std::vector<Rat> coefficient_row(const MPoly& p, const DimVector& gamma,
                                        const std::vector<std::vector<std::vector<int>>>& basis) {
    std::vector<Rat> row;
    row.reserve(basis.size());
    for (const auto& sig : basis) {
        Monomial rep;
        for (size_t i = 0; i < gamma.size(); ++i)
            for (size_t j = 0; j < sig[i].size(); ++j)
                if (sig[i][j] > 0) rep.emplace_back(omega(static_cast<int>(i) + 1, static_cast<int>(j) + 1), sig[i][j]);
        row.push_back(p.coefficient(rep));
    }
    return row;
}

/// Desk-scale verification of the structure isomorphism at (gamma, k <= k_max):
/// assembles, over all partitions m of gamma and degree splittings, the
/// products of subalgebra monomial bases landing in each degree, and compares
/// product count, exact rank and dim (H_gamma)_k. E8 blocks are rejected.
inline std::vector<DegreeReport> verify_structure_iso(const Quiver& q, const SubquiverPartition& p,
                                                      const DimVector& gamma, int k_max) {
    if (p.has_e8) fail(Err::E8Block, "structure verification excludes E8 blocks");
    RootList roots = combined_reineke_order(q, p);
    auto partitions = enumerate_partitions(roots, gamma);

    std::vector<std::vector<std::pair<int, MPoly>>> per_m(partitions.size());
    int threads = std::min<int>(detail::thread_budget(), static_cast<int>(partitions.size()));
    if (threads > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t idx; (idx = next.fetch_add(1)) < partitions.size();)
                per_m[idx] = detail::structure_products_for(q, roots, partitions[idx], k_max);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        for (size_t idx = 0; idx < partitions.size(); ++idx)
            per_m[idx] = detail::structure_products_for(q, roots, partitions[idx], k_max);
    }

    std::vector<DegreeReport> reports;
    for (int k = 0; k <= k_max; ++k) {
        auto basis = hgamma_basis(gamma, k);
        std::vector<std::vector<Rat>> rows;
        for (const auto& products : per_m)
            for (const auto& [deg, poly] : products)
                if (deg == k) rows.push_back(coefficient_row(poly, gamma, basis));
        DegreeReport rep;
        rep.k = k;
        rep.products = static_cast<long>(rows.size());
        rep.rank = rank_exact(std::move(rows));
        rep.dim = graded_dim(gamma, k);
        rep.verified = rep.products == rep.rank && rep.rank == rep.dim;
        reports.push_back(rep);
    }
    return reports;
}

} // namespace coha
