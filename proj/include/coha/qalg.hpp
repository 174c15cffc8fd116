#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coha/coha.hpp"
#include "coha/mpoly.hpp"
#include "coha/quiver.hpp"
#include "coha/roots.hpp"

namespace coha {

/// Univariate polynomial over Rat in the formal variable s = q^{1/2};
/// coefficients stored ascending, no trailing zeros.
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(Rat c) {
        if (c != 0) c_.push_back(std::move(c));
    }

    static SPoly spower(int k, Rat c = Rat(1)) {
        SPoly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend SPoly operator+(const SPoly& a, const SPoly& b) {
        SPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend SPoly operator-(const SPoly& a, const SPoly& b) {
        SPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }

    SPoly operator-() const {
        SPoly r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }

    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; remainder has degree below the divisor's.
    std::pair<SPoly, SPoly> divmod(const SPoly& d) const {
        if (d.is_zero()) fail(Err::InvalidInput, "division by zero");
        SPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            long shift = r.degree() - d.degree();
            Rat c = r.lead() / d.lead();
            SPoly t = spower(static_cast<int>(shift), c);
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }

    /// Monic gcd.
    static SPoly gcd(SPoly a, SPoly b) {
        while (!b.is_zero()) {
            SPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        Rat lead = a.lead();
        for (Rat& x : a.c_) x /= lead;
        return a;
    }

    /// Ascending-power text, e.g. "1 - s^2".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rat c = c_[k];
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (k == 0) out += rat_string(c);
            else {
                if (c != 1) out += rat_string(c) + "*";
                out += k == 1 ? "s" : "s^" + std::to_string(k);
            }
        }
        return out;
    }

    static SPoly parse(const std::string& text);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline SPoly SPoly::parse(const std::string& text) {
    detail::PolyLexer lx{text};
    SPoly result;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('+')) sign = 1;
        else if (lx.eat('-')) sign = -1;
        else if (!first) fail(Err::ParseError, "expected '+' or '-' between terms");
        first = false;
        Rat coef = sign;
        int power = 0;
        bool want_factor = true;
        while (want_factor) {
            if (lx.peek_digit()) {
                long num = lx.integer();
                if (lx.eat('/')) coef *= Rat(num, lx.integer());
                else coef *= num;
            } else if (lx.eat('s')) {
                if (lx.eat('^')) power += static_cast<int>(lx.integer());
                else power += 1;
            } else {
                fail(Err::ParseError, "expected factor in scalar");
            }
            want_factor = lx.eat('*');
        }
        coef.canonicalize();
        result = result + SPoly::spower(power, coef);
    }
    return result;
}

/// Scalar of the quantum algebra: a reduced fraction of polynomials in
/// s = q^{1/2}, denominator monic. Comparison is exact.
class QScalar {
public:
    QScalar() : num_(), den_(Rat(1)) {}
    QScalar(long v) : num_(Rat(v)), den_(Rat(1)) {}
    explicit QScalar(Rat v) : num_(std::move(v)), den_(Rat(1)) {}
    QScalar(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    /// s^k with k possibly negative.
    static QScalar spower(int k) {
        if (k >= 0) return QScalar(SPoly::spower(k), SPoly(Rat(1)));
        return QScalar(SPoly(Rat(1)), SPoly::spower(-k));
    }

    bool is_zero() const { return num_.is_zero(); }
    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) {
        return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        return QScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) {
        if (b.is_zero()) fail(Err::InvalidInput, "division by zero scalar");
        return QScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    QScalar operator-() const {
        QScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_ == SPoly(Rat(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    static QScalar parse(const std::string& text) {
        auto slash = text.find(")/(");
        if (slash == std::string::npos) return QScalar(SPoly::parse(text), SPoly(Rat(1)));
        if (text.empty() || text.front() != '(' || text.back() != ')') fail(Err::ParseError, "bad scalar");
        return QScalar(SPoly::parse(text.substr(1, slash - 1)),
                       SPoly::parse(text.substr(slash + 3, text.size() - slash - 4)));
    }

private:
    void reduce() {
        if (den_.is_zero()) fail(Err::InvalidInput, "zero denominator");
        if (num_.is_zero()) {
            den_ = SPoly(Rat(1));
            return;
        }
        SPoly g = SPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rat lead = den_.lead();
        if (lead != 1) {
            num_ = num_ * SPoly(Rat(1) / lead);
            den_ = den_ * SPoly(Rat(1) / lead);
        }
    }

    SPoly num_, den_;
};

/// Truncation of the completed quantum algebra to grades within a box:
/// finitely supported scalars per dimension vector, the key 0 holding the
/// coefficient of the unit. Products drop grades that leave the box.
struct QElement {
    DimVector box;
    std::map<DimVector, QScalar> support;

    QScalar at(const DimVector& g) const {
        auto it = support.find(g);
        return it == support.end() ? QScalar() : it->second;
    }

    void add(const DimVector& g, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = support.try_emplace(g, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) support.erase(it);
        }
    }

    friend bool operator==(const QElement& a, const QElement& b) {
        return a.box == b.box && a.support == b.support;
    }
};

inline QElement q_unit(const DimVector& box) {
    QElement e{box, {}};
    e.add(dim_zero(static_cast<int>(box.size())), QScalar(1));
    return e;
}

inline QElement q_monomial(const DimVector& box, const DimVector& gamma, const QScalar& c) {
    for (size_t i = 0; i < box.size(); ++i)
        if (gamma[i] > box[i]) fail(Err::BoxMismatch, "grade outside the box");
    QElement e{box, {}};
    e.add(gamma, c);
    return e;
}

/// Twisted product: y_g1 y_g2 = -q^{<g1,g2>/2} y_{g1+g2} on nonzero grades,
/// the unit acting identically; overflow grades are discarded.
inline QElement qmul(const Quiver& q, const QElement& x, const QElement& y) {
    if (x.box != y.box) fail(Err::BoxMismatch, "operands truncated to different boxes");
    QElement r{x.box, {}};
    for (const auto& [g1, c1] : x.support)
        for (const auto& [g2, c2] : y.support) {
            DimVector g = dim_add(g1, g2);
            bool fits = true;
            for (size_t i = 0; i < g.size(); ++i)
                if (g[i] > x.box[i]) fits = false;
            if (!fits) continue;
            QScalar c = c1 * c2;
            if (!dim_is_zero(g1) && !dim_is_zero(g2))
                c = -(c * QScalar::spower(static_cast<int>(antisym_form(q, g1, g2))));
            r.add(g, c);
        }
    return r;
}

/// P_d = prod_{k=1}^d (1 - q^k)^{-1}, the graded dimension series of one
/// GL(C^d) classifying space.
inline QScalar dilog_pd(int d) {
    SPoly den(Rat(1));
    for (int k = 1; k <= d; ++k) den = den * (SPoly(Rat(1)) - SPoly::spower(2 * k));
    return QScalar(SPoly(Rat(1)), den);
}

/// Truncated quantum dilogarithm E(y_gamma) = sum_d (-1)^d q^{d^2/2} P_d y_gamma^d.
inline QElement dilog(const Quiver& q, const DimVector& gamma, const DimVector& box) {
    if (dim_is_zero(gamma)) fail(Err::ZeroVector, "dilogarithm of the zero grade");
    QElement e = q_unit(box);
    QScalar power_scalar(1); // y_gamma^d = power_scalar * y_{d gamma}
    DimVector power_grade = dim_zero(static_cast<int>(box.size()));
    for (int d = 1;; ++d) {
        if (!dim_is_zero(power_grade))
            power_scalar = -(power_scalar * QScalar::spower(static_cast<int>(antisym_form(q, power_grade, gamma))));
        power_grade = dim_add(power_grade, gamma);
        bool fits = true;
        for (size_t i = 0; i < box.size(); ++i)
            if (power_grade[i] > box[i]) fits = false;
        if (!fits) break;
        QScalar coeff = QScalar::spower(d * d) * dilog_pd(d);
        if (d % 2) coeff = -coeff;
        e.add(power_grade, coeff * power_scalar);
    }
    return e;
}

/// Outcome of the dilogarithm factorization comparison.
struct FactorizationCheck {
    bool ok = true;
    DimVector gamma;     // first mismatching grade in lex order
    QScalar lhs, rhs;    // the two scalars there

    explicit operator bool() const { return ok; }
};

/// Compares E(y_{e_1})...E(y_{e_n}) with E(y_{beta_1})...E(y_{beta_r}) inside
/// the box; the roots default to the combined Reineke order of the partition.
inline FactorizationCheck verify_factorization(const Quiver& q, const SubquiverPartition& p,
                                               const DimVector& box,
                                               const std::vector<DimVector>* root_order = nullptr) {
    if (static_cast<int>(box.size()) != q.vertex_count()) fail(Err::LengthMismatch, "box length mismatch");
    QElement lhs = q_unit(box);
    for (int i = 1; i <= q.vertex_count(); ++i)
        lhs = qmul(q, lhs, dilog(q, dim_unit(q.vertex_count(), i), box));
    std::vector<DimVector> roots;
    if (root_order) roots = *root_order;
    else roots = combined_reineke_order(q, p).roots;
    QElement rhs = q_unit(box);
    for (const DimVector& beta : roots) rhs = qmul(q, rhs, dilog(q, beta, box));
    if (lhs == rhs) return {};
    // first mismatch in lex order over the box
    std::set<DimVector> grades;
    for (const auto& [g, c] : lhs.support) grades.insert(g);
    for (const auto& [g, c] : rhs.support) grades.insert(g);
    for (const DimVector& g : grades)
        if (!(lhs.at(g) == rhs.at(g))) return {false, g, lhs.at(g), rhs.at(g)};
    return {};
}

/// Sign and half-integer q-exponent of the normal ordering
/// y_{beta_1}^{m_1}...y_{beta_r}^{m_r} = sign * q^{w} * y_{e_1}^{g(1)}...y_{e_n}^{g(n)}.
struct NormalForm {
    int sign = 1; // +1 or -1
    Rat w;        // exact, denominator divides 2
};

namespace detail {

// collapse a word of y's into (sign exponent parity, s exponent, total grade)
struct WordTrack {
    int par = 0;
    long sexp = 0;
    DimVector grade;
};

inline void word_push(const Quiver& q, WordTrack& t, const DimVector& beta, int count) {
    for (int c = 0; c < count; ++c) {
        if (!dim_is_zero(t.grade)) {
            t.par ^= 1;
            t.sexp += antisym_form(q, t.grade, beta);
        }
        t.grade = dim_add(t.grade, beta);
    }
}

} // namespace detail

inline NormalForm normal_form(const Quiver& q, const RootList& roots, const KostantPartition& m) {
    detail::WordTrack lhs{0, 0, dim_zero(q.vertex_count())};
    for (size_t u = 0; u < roots.size(); ++u) detail::word_push(q, lhs, roots.roots[u], m[u]);
    DimVector gamma = lhs.grade;
    detail::WordTrack rhs{0, 0, dim_zero(q.vertex_count())};
    for (int i = 1; i <= q.vertex_count(); ++i)
        detail::word_push(q, rhs, dim_unit(q.vertex_count(), i), gamma[static_cast<size_t>(i - 1)]);
    NormalForm nf;
    nf.sign = ((lhs.par ^ rhs.par) & 1) ? -1 : 1;
    nf.w = Rat(lhs.sexp - rhs.sexp, 2);
    nf.w.canonicalize();
    // closed formula s_m = sum_u m_u (height(beta_u) - 1)
    long s_m = 0;
    for (size_t u = 0; u < roots.size(); ++u) s_m += static_cast<long>(m[u]) * (dim_total(roots.roots[u]) - 1);
    if (((s_m % 2 + 2) % 2 == 1) != (nf.sign < 0))
        fail(Err::SignMismatch, "normal-ordering sign disagrees with the closed formula");
    return nf;
}

/// Complex codimension of the stratum eta_m inside Rep_gamma, recovered from
/// the normal-ordering exponent: w - (1/2) sum gamma(i)^2 + (1/2) sum m_u^2.
inline long codim(const Quiver& q, const RootList& roots, const KostantPartition& m) {
    NormalForm nf = normal_form(q, roots, m);
    DimVector gamma = partition_weight(roots, m);
    Rat c = nf.w;
    for (int g : gamma) c -= Rat(static_cast<long>(g) * g, 2);
    for (int mu : m) c += Rat(static_cast<long>(mu) * mu, 2);
    c.canonicalize();
    if (c.get_den() != 1) fail(Err::NonInteger, "codimension is not an integer");
    if (c < 0) fail(Err::NegativeCodim, "negative codimension");
    return static_cast<long>(c.get_num().get_si());
}

/// Named block-additivity check: the codimension over the partitioned quiver
/// equals the sum of the per-block codimensions computed in isolation.
inline bool codim_is_block_additive(const Quiver& q, const SubquiverPartition& p, const RootList& roots,
                                    const KostantPartition& m) {
    long total = codim(q, roots, m);
    long sum = 0;
    for (size_t j = 0; j < p.size(); ++j) {
        BlockQuiver bq = block_quiver(p, j);
        std::vector<int> all;
        for (int v = 1; v <= bq.quiver.vertex_count(); ++v) all.push_back(v);
        RootList local = combined_reineke_order(bq.quiver, validate_partition(bq.quiver, {all}));
        sum += codim(bq.quiver, local, partition_restricted_to_block(roots, m, static_cast<int>(j)));
    }
    return total == sum;
}

/// Right-hand side of the Poincare bookkeeping identity: the count of basis
/// products landing in degree k, summed over all partitions of gamma.
inline long poincare_count(const Quiver& q, const RootList& roots, const DimVector& gamma, int k) {
    long total = 0;
    for (const KostantPartition& m : enumerate_partitions(roots, gamma)) {
        long c = codim(q, roots, m);
        if (c > k) continue;
        int rest = k - static_cast<int>(c);
        // convolve the per-slot partition counts
        std::vector<long> acc(static_cast<size_t>(rest) + 1, 0);
        acc[0] = 1;
        for (size_t u = 0; u < roots.size(); ++u) {
            std::vector<long> next(static_cast<size_t>(rest) + 1, 0);
            for (int a = 0; a <= rest; ++a) {
                if (acc[static_cast<size_t>(a)] == 0) continue;
                for (int d = 0; a + d <= rest; ++d)
                    next[static_cast<size_t>(a + d)] +=
                        acc[static_cast<size_t>(a)] * count_partitions_max_parts(d, m[u]);
            }
            acc = std::move(next);
        }
        total += acc[static_cast<size_t>(rest)];
    }
    return total;
}

} // namespace coha
