#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coha/error.hpp"

namespace coha {

/// Exact rational coefficients. All arithmetic in the library is exact.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail(Err::ParseError, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_string(const Rat& r) { return r.get_str(); }

/// Indexed indeterminate: omega[a,b] (Chern roots, a = vertex) or t[a,b]
/// (restriction targets, a = root slot). Ordered by (family, a, b).
struct VarId {
    enum Family : int { Omega = 0, T = 1 };
    int family = Omega;
    int a = 0;
    int b = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId omega(int vertex, int pos) { return {VarId::Omega, vertex, pos}; }
inline VarId tvar(int slot, int copy) { return {VarId::T, slot, copy}; }

inline std::string var_string(const VarId& v) {
    return (v.family == VarId::Omega ? std::string("ω") : std::string("t")) + "[" +
           std::to_string(v.a) + "," + std::to_string(v.b) + "]";
}

/// Exponent vector: sorted by VarId, all exponents positive.
using Monomial = std::vector<std::pair<VarId, int>>;

inline long mono_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) r.push_back(x[i++]);
        else if (y[j].first < x[i].first) r.push_back(y[j++]);
        else {
            r.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i, ++j;
        }
    }
    for (; i < x.size(); ++i) r.push_back(x[i]);
    for (; j < y.size(); ++j) r.push_back(y[j]);
    return r;
}

/// x / y, or empty optional when some exponent would go negative.
inline std::optional<Monomial> mono_div(const Monomial& x, const Monomial& y) {
    Monomial r;
    size_t i = 0;
    for (const auto& [v, e] : y) {
        while (i < x.size() && x[i].first < v) r.push_back(x[i++]);
        if (i == x.size() || !(x[i].first == v) || x[i].second < e) return std::nullopt;
        if (x[i].second > e) r.emplace_back(v, x[i].second - e);
        ++i;
    }
    for (; i < x.size(); ++i) r.push_back(x[i]);
    return r;
}

/// Graded lexicographic order: total degree first, then on the earliest
/// variable (in VarId order) where exponents differ, the higher exponent wins.
inline bool mono_less(const Monomial& x, const Monomial& y) {
    long dx = mono_degree(x), dy = mono_degree(y);
    if (dx != dy) return dx < dy;
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            if (x[i].second != y[j].second) return x[i].second < y[j].second;
            ++i, ++j;
        } else if (x[i].first < y[j].first) {
            return false; // x has a positive exponent on an earlier variable
        } else {
            return true;
        }
    }
    return false; // equal degrees and matching prefix: both exhausted
}

struct MonoLess {
    bool operator()(const Monomial& x, const Monomial& y) const { return mono_less(x, y); }
};

/// Sparse multivariate polynomial over Rat with canonical graded-lex ordering.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    MPoly() = default;

    static MPoly constant(const Rat& c) {
        MPoly p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }

    static MPoly var(const VarId& v, int exp = 1) {
        if (exp < 0) fail(Err::InvalidInput, "negative exponent");
        if (exp == 0) return constant(1);
        MPoly p;
        p.terms_[Monomial{{v, exp}}] = 1;
        return p;
    }

    static MPoly term(Monomial m, const Rat& c) {
        MPoly p;
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : mono_degree(terms_.rbegin()->first); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = mono_degree(terms_.begin()->first);
        return d == degree();
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Rat constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    std::set<VarId> variables() const {
        std::set<VarId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) vs.insert(v);
        return vs;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const Rat& c, const MPoly& p) { return MPoly::constant(c) * p; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    /// Exact quotient; throws NotDivisible when the remainder is nonzero.
    MPoly exact_div(const MPoly& d, Err on_failure = Err::NotDivisible) const {
        if (d.is_zero()) fail(Err::InvalidInput, "division by zero polynomial");
        MPoly q, r = *this;
        const auto& ld = *d.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& lr = *r.terms_.rbegin();
            auto m = mono_div(lr.first, ld.first);
            if (!m) fail(on_failure, "polynomial division leaves a remainder");
            MPoly t = term(std::move(*m), lr.second / ld.second);
            q += t;
            r -= t * d;
        }
        return q;
    }

    /// Renames variables (not necessarily injectively) and renormalizes.
    MPoly substitute(const std::map<VarId, VarId>& rename) const {
        MPoly r;
        for (const auto& [m, c] : terms_) {
            std::map<VarId, int> acc;
            for (const auto& [v, e] : m) {
                auto it = rename.find(v);
                acc[it == rename.end() ? v : it->second] += e;
            }
            r.add_term(Monomial(acc.begin(), acc.end()), c);
        }
        return r;
    }

    /// Canonical text: terms in descending graded lex, rationals as a/b.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rat c = it->second;
            bool neg = c < 0;
            if (neg) c = -c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            const Monomial& m = it->first;
            if (m.empty()) {
                s += rat_string(c);
                continue;
            }
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += var_string(v);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (c != 1) s += rat_string(c) + "*";
            s += mono;
        }
        return s;
    }

    static MPoly parse(const std::string& text);

private:
    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(Err::ParseError, "expected integer at position " + std::to_string(pos));
        return std::stol(s.substr(start, pos - start));
    }

    // "ω" in UTF-8, an ASCII 'w' fallback, or 't'
    std::optional<int> var_family() {
        skip_ws();
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xCF &&
            static_cast<unsigned char>(s[pos + 1]) == 0x89) {
            pos += 2;
            return VarId::Omega;
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return VarId::Omega;
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            return VarId::T;
        }
        return std::nullopt;
    }

    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

} // namespace detail

inline MPoly MPoly::parse(const std::string& text) {
    detail::PolyLexer lx{text};
    MPoly result;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('+')) sign = 1;
        else if (lx.eat('-')) sign = -1;
        else if (!first) fail(Err::ParseError, "expected '+' or '-' between terms");
        first = false;

        Rat coef = sign;
        std::map<VarId, int> exps;
        bool want_factor = true;
        while (want_factor) {
            if (lx.peek_digit()) {
                long num = lx.integer();
                if (lx.eat('/')) {
                    long den = lx.integer();
                    if (den == 0) fail(Err::ParseError, "zero denominator");
                    coef *= Rat(num, den);
                } else {
                    coef *= num;
                }
            } else if (auto fam = lx.var_family()) {
                if (!lx.eat('[')) fail(Err::ParseError, "expected '[' after variable name");
                long a = lx.integer();
                if (!lx.eat(',')) fail(Err::ParseError, "expected ',' in variable index");
                long b = lx.integer();
                if (!lx.eat(']')) fail(Err::ParseError, "expected ']' in variable index");
                int e = 1;
                if (lx.eat('^')) e = static_cast<int>(lx.integer());
                exps[VarId{*fam, static_cast<int>(a), static_cast<int>(b)}] += e;
            } else {
                fail(Err::ParseError, "expected a factor at position " + std::to_string(lx.pos));
            }
            want_factor = lx.eat('*');
        }
        coef.canonicalize();
        result += MPoly::term(Monomial(exps.begin(), exps.end()), coef);
    }
    return result;
}

/// Product of pairwise differences prod_{a<b} (vars[a] - vars[b]).
inline MPoly vandermonde(const std::vector<VarId>& vars) {
    MPoly p = MPoly::constant(1);
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a + 1; b < vars.size(); ++b) p *= MPoly::var(vars[a]) - MPoly::var(vars[b]);
    return p;
}

namespace detail {

// det(vars[j] ^ exps[i]) via permutation expansion; fine for the small sizes here.
inline MPoly alternant(const std::vector<int>& exps, const std::vector<VarId>& vars) {
    const size_t r = vars.size();
    std::vector<size_t> perm(r);
    for (size_t i = 0; i < r; ++i) perm[i] = i;
    MPoly det;
    do {
        // sign of perm
        int sgn = 1;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        Monomial m;
        std::map<VarId, int> acc;
        for (size_t i = 0; i < r; ++i)
            if (exps[i] > 0) acc[vars[perm[i]]] += exps[i];
        det += MPoly::term(Monomial(acc.begin(), acc.end()), sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace detail

/// Schur polynomial s_lambda in the given variables via the bialternant ratio
/// det(x_j^{lambda_i + r - i}) / det(x_j^{r - i}).
inline MPoly schur(const std::vector<int>& lambda, const std::vector<VarId>& vars) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) fail(Err::BadPartition, "negative part");
        if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
            fail(Err::BadPartition, "partition parts must be weakly decreasing");
    }
    if (lambda.size() > vars.size()) fail(Err::BadPartition, "more parts than variables");
    const size_t r = vars.size();
    if (r == 0) return MPoly::constant(1);
    std::vector<int> exps(r);
    for (size_t i = 0; i < r; ++i)
        exps[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int>(r - 1 - i);
    return detail::alternant(exps, vars).exact_div(vandermonde(vars), Err::InternalNotDivisible);
}

/// Monomial symmetric polynomial m_lambda in the given variables.
inline MPoly monomial_symmetric(const std::vector<int>& lambda, const std::vector<VarId>& vars) {
    if (lambda.size() > vars.size()) fail(Err::BadPartition, "more parts than variables");
    std::vector<int> exps(vars.size(), 0);
    for (size_t i = 0; i < lambda.size(); ++i) exps[i] = lambda[i];
    std::sort(exps.begin(), exps.end());
    MPoly p;
    do {
        std::map<VarId, int> acc;
        for (size_t i = 0; i < vars.size(); ++i)
            if (exps[i] > 0) acc[vars[i]] += exps[i];
        p += MPoly::term(Monomial(acc.begin(), acc.end()), 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return p;
}

/// True iff p is invariant under every adjacent transposition within each
/// variable block; adjacent swaps generate the full symmetric group.
inline bool is_block_symmetric(const MPoly& p, const std::vector<std::vector<VarId>>& blocks) {
    for (const auto& block : blocks)
        for (size_t k = 0; k + 1 < block.size(); ++k) {
            std::map<VarId, VarId> swap_map{{block[k], block[k + 1]}, {block[k + 1], block[k]}};
            if (!(p.substitute(swap_map) == p)) return false;
        }
    return true;
}

} // namespace coha
