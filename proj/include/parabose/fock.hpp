#pragma once

#include "common.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parabose {

/**
 * Model parameters: n parabose pairs realized at ansatz order p.
 * q = floor(p/2) is the rank of the gauge algebra so(p), eps = p mod 2
 * flags the unpaired odd mode.
 */
struct ModelParams
{
    int n = 1;
    int p = 1;

    ModelParams() = default;
    ModelParams(int n_, int p_) : n(n_), p(p_)
    {
        if (n < 1 || p < 1)
            throw std::invalid_argument("ModelParams: require n >= 1 and p >= 1");
    }

    int q() const { return p / 2; }
    int eps() const { return p % 2; }
    /// Orbital modes per value of alpha: q plus-modes, q minus-modes, eps odd mode.
    int modes_per_alpha() const { return 2 * q() + eps(); }
    /// Total number of orbital modes (= n*p).
    int total_modes() const { return n * modes_per_alpha(); }

    friend bool operator==(const ModelParams &a, const ModelParams &b)
    {
        return a.n == b.n && a.p == b.p;
    }
    friend bool operator!=(const ModelParams &a, const ModelParams &b) { return !(a == b); }
};

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/**
 * One basis vector of the representation space: an orbital monomial in the
 * commuting creation modes Ad[alpha,k,+], Ad[alpha,k,-] (and bd[alpha,p] when
 * p is odd) applied to the Fock vacuum, tensored with a spin weight vector
 * omega(s^1..s^q), s^k = +-1/2.
 *
 * Exponents are stored flat, alpha-major: for each alpha the modes are
 * ordered (k=1,+), (k=1,-), ..., (k=q,+), (k=q,-), odd. Spin bit k-1 set
 * means s^k = +1/2.
 *
 * Ket ordering (used everywhere a deterministic order is needed): higher
 * exponent words first, then spin states with +1/2 before -1/2 slot by slot.
 */
struct BasisKet
{
    std::vector<uint32_t> exps;
    uint32_t spin = 0;

    static BasisKet vacuum(const ModelParams &par, uint32_t spin_bits = ~0u)
    {
        BasisKet k;
        k.exps.assign(static_cast<size_t>(par.total_modes()), 0);
        uint32_t mask = par.q() == 0 ? 0u : ((1u << par.q()) - 1u);
        k.spin = spin_bits & mask;
        return k;
    }

    int degree() const
    {
        long long d = 0;
        for (uint32_t e : exps)
            d += e;
        return static_cast<int>(d);
    }

    friend bool operator==(const BasisKet &a, const BasisKet &b)
    {
        return a.spin == b.spin && a.exps == b.exps;
    }

    friend bool operator<(const BasisKet &a, const BasisKet &b)
    {
        if (a.exps != b.exps)
            return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(),
                                                a.exps.end());
        // spin: compare slot by slot from k=1, up (+1/2) before down.
        uint32_t diff = a.spin ^ b.spin;
        if (!diff)
            return false;
        uint32_t low = diff & (~diff + 1); // lowest differing slot
        return a.spin & low;
    }
};

/// Flat index of mode Ad[alpha,k,sigma]; alpha in 1..n, k in 1..q.
inline int mode_index(const ModelParams &par, int alpha, int k, Sign sigma)
{
    return (alpha - 1) * par.modes_per_alpha() + 2 * (k - 1) + (sigma == Sign::minus ? 1 : 0);
}

/// Flat index of the odd-p mode bd[alpha,p].
inline int odd_mode_index(const ModelParams &par, int alpha)
{
    return (alpha - 1) * par.modes_per_alpha() + 2 * par.q();
}

inline uint32_t exp_plus(const ModelParams &par, const BasisKet &ket, int alpha, int k)
{
    return ket.exps[mode_index(par, alpha, k, Sign::plus)];
}
inline uint32_t exp_minus(const ModelParams &par, const BasisKet &ket, int alpha, int k)
{
    return ket.exps[mode_index(par, alpha, k, Sign::minus)];
}
inline uint32_t exp_odd(const ModelParams &par, const BasisKet &ket, int alpha)
{
    return par.eps() ? ket.exps[odd_mode_index(par, alpha)] : 0u;
}

/// s^k as a half-integer (+1/2 or -1/2), k in 1..q.
inline HalfInt spin_component(const BasisKet &ket, int k)
{
    return HalfInt((ket.spin >> (k - 1)) & 1u ? 1 : -1);
}

/// Total orbital degree carried by index alpha.
inline long long alpha_degree(const ModelParams &par, const BasisKet &ket, int alpha)
{
    long long d = 0;
    int base = (alpha - 1) * par.modes_per_alpha();
    for (int m = 0; m < par.modes_per_alpha(); ++m)
        d += ket.exps[base + m];
    return d;
}

/// Text form used in reports, e.g. "A[1,1,+]^2 A[2,1,-] | s=+-".
inline std::string ket_str(const ModelParams &par, const BasisKet &ket)
{
    std::string out;
    for (int alpha = 1; alpha <= par.n; ++alpha) {
        for (int k = 1; k <= par.q(); ++k) {
            for (Sign sg : {Sign::plus, Sign::minus}) {
                uint32_t e = ket.exps[mode_index(par, alpha, k, sg)];
                if (!e)
                    continue;
                out += "A[" + std::to_string(alpha) + "," + std::to_string(k) +
                       (sg == Sign::plus ? ",+]" : ",-]");
                if (e > 1)
                    out += "^" + std::to_string(e);
                out += " ";
            }
        }
        if (par.eps()) {
            uint32_t e = ket.exps[odd_mode_index(par, alpha)];
            if (e) {
                out += "B[" + std::to_string(alpha) + "]";
                if (e > 1)
                    out += "^" + std::to_string(e);
                out += " ";
            }
        }
    }
    if (out.empty())
        out = "vac ";
    out += "| s=";
    if (par.q() == 0)
        out += ".";
    for (int k = 1; k <= par.q(); ++k)
        out += (ket.spin >> (k - 1)) & 1u ? '+' : '-';
    return out;
}

/**
 * Finite sparse linear combination of basis kets over Scalar. Zero
 * coefficients are never stored; all kets share the same ModelParams.
 */
struct State
{
    ModelParams params;
    std::map<BasisKet, Scalar> terms;

    State() = default;
    explicit State(const ModelParams &par) : params(par) {}

    static State ket(const ModelParams &par, const BasisKet &k, Scalar c = Scalar::one())
    {
        State s(par);
        s.add(k, c);
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add(const BasisKet &k, const Scalar &c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    void add_scaled(const State &other, const Scalar &c)
    {
        if (other.terms.empty())
            return;
        if (params != other.params)
            throw params_mismatch_error("State: mixing states with different (n,p)");
        if (c.is_zero())
            return;
        for (const auto &[k, v] : other.terms)
            add(k, c * v);
    }

    State &operator+=(const State &o)
    {
        add_scaled(o, Scalar::one());
        return *this;
    }
    State &operator-=(const State &o)
    {
        add_scaled(o, Scalar(-1));
        return *this;
    }
    friend State operator+(State a, const State &b) { return a += b; }
    friend State operator-(State a, const State &b) { return a -= b; }
    friend State operator*(const Scalar &c, const State &v)
    {
        State out(v.params);
        if (!c.is_zero())
            for (const auto &[k, coef] : v.terms)
                out.terms.emplace(k, c * coef);
        return out;
    }
    friend bool operator==(const State &a, const State &b)
    {
        return a.params == b.params && a.terms == b.terms;
    }

    std::string str() const
    {
        if (terms.empty())
            return "0";
        std::string out;
        for (const auto &[k, c] : terms) {
            if (!out.empty())
                out += "  +  ";
            out += "(" + c.str() + ") " + ket_str(params, k);
        }
        return out;
    }
};

/// Binomial coefficient as unsigned 64-bit; throws on overflow at our scales.
inline unsigned long long binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        unsigned long long prev = r;
        r = r * static_cast<unsigned long long>(n - k + i);
        if (r / static_cast<unsigned long long>(n - k + i) != prev)
            throw std::overflow_error("binomial overflow");
        r /= static_cast<unsigned long long>(i);
    }
    return r;
}

/// Number of kets of total orbital degree d: C(n*p + d - 1, d) * 2^q.
inline unsigned long long level_count(const ModelParams &par, int d)
{
    return binomial(par.total_modes() + d - 1, d) << par.q();
}

/**
 * All kets of total orbital degree d, each paired with every spin state, in
 * the canonical deterministic order. Throws capacity_error when the count
 * exceeds the bound.
 */
inline std::vector<BasisKet> enumerate_level(const ModelParams &par, int d,
                                             unsigned long long capacity = default_capacity())
{
    unsigned long long count = level_count(par, d);
    if (count > capacity)
        throw capacity_error("degree-" + std::to_string(d) + " shell has " + std::to_string(count) +
                             " kets, exceeding capacity " + std::to_string(capacity));
    std::vector<BasisKet> out;
    out.reserve(count);
    int modes = par.total_modes();
    std::vector<uint32_t> exps(modes, 0);
    int nspin = 1 << par.q();
    // Exponent words in lexicographically descending order.
    auto rec = [&](auto &&self, int mode, int remaining) -> void {
        if (mode == modes - 1) {
            exps[mode] = remaining;
            for (int sp = 0; sp < nspin; ++sp) {
                BasisKet k;
                k.exps = exps;
                k.spin = static_cast<uint32_t>(sp);
                out.push_back(std::move(k));
            }
            exps[mode] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[mode] = e;
            self(self, mode + 1, remaining - e);
        }
        exps[mode] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Common total orbital degree of a nonzero state; errors on zero or mixed.
inline int grade(const State &v)
{
    if (v.terms.empty())
        throw std::invalid_argument("grade: zero state has no degree");
    int d = v.terms.begin()->first.degree();
    for (const auto &[k, c] : v.terms)
        if (k.degree() != d)
            throw std::invalid_argument("grade: state mixes degrees " + std::to_string(d) + " and " +
                                        std::to_string(k.degree()));
    return d;
}

namespace detail {
inline const Rational &factorial(uint32_t m)
{
    static std::vector<Rational> cache = {Rational(1)};
    while (cache.size() <= m)
        cache.push_back(cache.back() * Rational(static_cast<unsigned>(cache.size())));
    return cache[m];
}
} // namespace detail

/// Squared norm of a basis ket: product of factorials of the exponents
/// (the A-modes are canonical bosons; spin vectors are orthonormal).
inline Rational ket_norm2(const BasisKet &ket)
{
    Rational r(1);
    for (uint32_t e : ket.exps)
        if (e > 1)
            r *= detail::factorial(e);
    return r;
}

/// Positive definite inner product, conjugate-linear in the first argument.
inline Scalar inner_product(const State &u, const State &v)
{
    if (u.params != v.params)
        throw params_mismatch_error("inner_product: states built over different (n,p)");
    // iterate over the smaller map
    const State &small = u.terms.size() <= v.terms.size() ? u : v;
    const State &large = u.terms.size() <= v.terms.size() ? v : u;
    Scalar out;
    for (const auto &[k, c] : small.terms) {
        auto it = large.terms.find(k);
        if (it == large.terms.end())
            continue;
        const Scalar &cu = (&small == &u) ? c : it->second;
        const Scalar &cv = (&small == &u) ? it->second : c;
        out += cu.conj() * cv * Scalar(ket_norm2(k));
    }
    return out;
}

/// osp weight: lam_alpha = N_alpha + p/2 (eigenvalue of the diagonal Cartan
/// element (1/2){bd_alpha, b_alpha}).
inline WeightVector osp_weight(const ModelParams &par, const BasisKet &ket)
{
    WeightVector w(par.n);
    for (int alpha = 1; alpha <= par.n; ++alpha)
        w[alpha - 1] = HalfInt(2 * alpha_degree(par, ket, alpha) + par.p);
    return w;
}

/// Gauge weight: w^k = sum_alpha (plus-exp - minus-exp) + s^k; odd modes
/// contribute nothing.
inline WeightVector gauge_weight(const ModelParams &par, const BasisKet &ket)
{
    WeightVector w(par.q());
    for (int k = 1; k <= par.q(); ++k) {
        long long orb = 0;
        for (int alpha = 1; alpha <= par.n; ++alpha)
            orb += static_cast<long long>(exp_plus(par, ket, alpha, k)) -
                   static_cast<long long>(exp_minus(par, ket, alpha, k));
        w[k - 1] = HalfInt(2 * orb) + spin_component(ket, k);
    }
    return w;
}

/// Weight of the whole state; throws if terms disagree.
inline WeightVector osp_weight(const State &v)
{
    if (v.terms.empty())
        throw std::invalid_argument("osp_weight: zero state");
    WeightVector w = osp_weight(v.params, v.terms.begin()->first);
    for (const auto &[k, c] : v.terms)
        if (osp_weight(v.params, k) != w)
            throw std::invalid_argument("osp_weight: state is not a weight vector");
    return w;
}

inline WeightVector gauge_weight(const State &v)
{
    if (v.terms.empty())
        throw std::invalid_argument("gauge_weight: zero state");
    WeightVector w = gauge_weight(v.params, v.terms.begin()->first);
    for (const auto &[k, c] : v.terms)
        if (gauge_weight(v.params, k) != w)
            throw std::invalid_argument("gauge_weight: state is not a weight vector");
    return w;
}

} // namespace parabose
