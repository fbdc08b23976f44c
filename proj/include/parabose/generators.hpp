#pragma once

#include "fock.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace parabose {

// ---------------------------------------------------------------------------
// labels
// ---------------------------------------------------------------------------

/// Even sp(2n) generators: {bd_a, bd_b}, {bd_a, b_b}, {b_a, b_b}.
struct EvenOpLabel
{
    enum class Kind { create_create, create_annih, annih_annih };
    Kind kind;
    int alpha; // 1..n
    int beta;  // 1..n

    static EvenOpLabel create_create(int a, int b) { return {Kind::create_create, a, b}; }
    static EvenOpLabel create_annih(int a, int b) { return {Kind::create_annih, a, b}; }
    static EvenOpLabel annih_annih(int a, int b) { return {Kind::annih_annih, a, b}; }

    void validate(const ModelParams &par) const
    {
        if (alpha < 1 || alpha > par.n || beta < 1 || beta > par.n)
            throw std::invalid_argument("EvenOpLabel: index out of range");
    }
};

/// Gauge root vectors G_{+-delta_k +- delta_l} and, for odd p, G_{+-delta_k}.
struct GaugeRootLabel
{
    enum class Kind { plus_plus, plus_minus, minus_plus, minus_minus, short_plus, short_minus };
    Kind kind;
    int k = 0;
    int l = 0; // unused for short kinds

    static GaugeRootLabel plus_plus(int k, int l) { return {Kind::plus_plus, k, l}; }
    static GaugeRootLabel plus_minus(int k, int l) { return {Kind::plus_minus, k, l}; }
    static GaugeRootLabel minus_plus(int k, int l) { return {Kind::minus_plus, k, l}; }
    static GaugeRootLabel minus_minus(int k, int l) { return {Kind::minus_minus, k, l}; }
    static GaugeRootLabel short_plus(int k) { return {Kind::short_plus, k, 0}; }
    static GaugeRootLabel short_minus(int k) { return {Kind::short_minus, k, 0}; }

    bool is_short() const { return kind == Kind::short_plus || kind == Kind::short_minus; }

    void validate(const ModelParams &par) const
    {
        if (is_short()) {
            if (par.eps() == 0)
                throw std::invalid_argument("short gauge roots exist only for odd p");
            if (k < 1 || k > par.q())
                throw std::invalid_argument("GaugeRootLabel: k out of range");
        } else {
            if (k < 1 || l < 1 || k >= l || l > par.q())
                throw std::invalid_argument("GaugeRootLabel: require 1 <= k < l <= q");
        }
    }

    /// The root as a gauge-weight shift.
    WeightVector root(const ModelParams &par) const
    {
        WeightVector r(par.q(), HalfInt(0));
        switch (kind) {
        case Kind::plus_plus: r[k - 1] = HalfInt::of_int(1); r[l - 1] = HalfInt::of_int(1); break;
        case Kind::plus_minus: r[k - 1] = HalfInt::of_int(1); r[l - 1] = HalfInt::of_int(-1); break;
        case Kind::minus_plus: r[k - 1] = HalfInt::of_int(-1); r[l - 1] = HalfInt::of_int(1); break;
        case Kind::minus_minus: r[k - 1] = HalfInt::of_int(-1); r[l - 1] = HalfInt::of_int(-1); break;
        case Kind::short_plus: r[k - 1] = HalfInt::of_int(1); break;
        case Kind::short_minus: r[k - 1] = HalfInt::of_int(-1); break;
        }
        return r;
    }

    std::string str() const
    {
        switch (kind) {
        case Kind::plus_plus: return "G[+d" + std::to_string(k) + "+d" + std::to_string(l) + "]";
        case Kind::plus_minus: return "G[+d" + std::to_string(k) + "-d" + std::to_string(l) + "]";
        case Kind::minus_plus: return "G[-d" + std::to_string(k) + "+d" + std::to_string(l) + "]";
        case Kind::minus_minus: return "G[-d" + std::to_string(k) + "-d" + std::to_string(l) + "]";
        case Kind::short_plus: return "G[+d" + std::to_string(k) + "]";
        case Kind::short_minus: return "G[-d" + std::to_string(k) + "]";
        }
        return "";
    }

    /// All positive roots for the gauge algebra of the given parameters.
    static std::vector<GaugeRootLabel> positive(const ModelParams &par)
    {
        std::vector<GaugeRootLabel> out;
        for (int k = 1; k <= par.q(); ++k)
            for (int l = k + 1; l <= par.q(); ++l) {
                out.push_back(plus_plus(k, l));
                out.push_back(plus_minus(k, l));
            }
        if (par.eps())
            for (int k = 1; k <= par.q(); ++k)
                out.push_back(short_plus(k));
        return out;
    }
};

// ---------------------------------------------------------------------------
// ket-level primitives
// ---------------------------------------------------------------------------

namespace detail {

inline BasisKet ket_raise(const BasisKet &ket, int mode)
{
    BasisKet out = ket;
    ++out.exps[mode];
    return out;
}

/// Formal derivative: returns (old exponent, lowered ket) or nullopt on zero.
inline std::optional<std::pair<uint32_t, BasisKet>> ket_lower(const BasisKet &ket, int mode)
{
    if (ket.exps[mode] == 0)
        return std::nullopt;
    BasisKet out = ket;
    --out.exps[mode];
    return std::make_pair(ket.exps[mode], out);
}

/// (-1)^{# down slots with index < k}
inline int spin_prefix(uint32_t bits, int k)
{
    int sign = 1;
    for (int l = 1; l < k; ++l)
        if (!((bits >> (l - 1)) & 1u))
            sign = -sign;
    return sign;
}

/// (-1)^{# down slots among 1..q}
inline int spin_all_sign(uint32_t bits, int q)
{
    int sign = 1;
    for (int l = 1; l <= q; ++l)
        if (!((bits >> (l - 1)) & 1u))
            sign = -sign;
    return sign;
}

struct SpinImage
{
    Scalar coef;
    uint32_t bits = 0;
    bool zero = true;
};

/// e^{k,+-}: sqrt(2) * prefix * flip of slot k; zero when the slot overflows.
inline SpinImage spin_e_pm(uint32_t bits, int k, Sign sg)
{
    SpinImage out;
    bool up = (bits >> (k - 1)) & 1u;
    if ((sg == Sign::plus && up) || (sg == Sign::minus && !up))
        return out;
    out.zero = false;
    out.bits = bits ^ (1u << (k - 1));
    out.coef = Scalar(spin_prefix(bits, k)) * Scalar::sqrt2();
    return out;
}

/// Diagonal e^p (odd p only): product of all 2 s^l.
inline SpinImage spin_ep(uint32_t bits, int q)
{
    SpinImage out;
    out.zero = false;
    out.bits = bits;
    out.coef = Scalar(spin_all_sign(bits, q));
    return out;
}

/// Action of the real Clifford generator e^a reconstructed from the ladder
/// basis: e^{2k-1} = (e^{k+}+e^{k-})/sqrt(2), e^{2k} = -i(e^{k+}-e^{k-})/sqrt(2),
/// plus the diagonal e^p for odd p. Always a single ket with unit-modulus
/// coefficient.
inline SpinImage spin_e_real(const ModelParams &par, uint32_t bits, int a)
{
    SpinImage out;
    if (par.eps() && a == par.p)
        return spin_ep(bits, par.q());
    int k = (a + 1) / 2;
    bool up = (bits >> (k - 1)) & 1u;
    int prefix = spin_prefix(bits, k);
    out.zero = false;
    out.bits = bits ^ (1u << (k - 1));
    if (a % 2 == 1) {
        out.coef = Scalar(prefix);
    } else {
        // -i e^{k+} survives on a down slot, +i e^{k-} on an up slot
        out.coef = up ? Scalar(prefix) * Scalar::i() : Scalar(-prefix) * Scalar::i();
    }
    return out;
}

/// One term of a linear combination of same-alpha ladder modes.
struct ModeTerm
{
    Scalar coef;
    int mode;
};

/// Real-basis creation operator bd[alpha]^a as A-mode combination.
inline std::vector<ModeTerm> real_creator(const ModelParams &par, int alpha, int a)
{
    Scalar inv_r2 = Scalar::sqrt2() * Scalar(Rational(1, 2)); // 1/sqrt(2)
    if (par.eps() && a == par.p)
        return {{Scalar::one(), odd_mode_index(par, alpha)}};
    int k = (a + 1) / 2;
    int mp = mode_index(par, alpha, k, Sign::plus);
    int mm = mode_index(par, alpha, k, Sign::minus);
    if (a % 2 == 1)
        return {{inv_r2, mp}, {inv_r2, mm}};
    Scalar c = -Scalar::i() * inv_r2;
    return {{c, mp}, {-c, mm}};
}

/// Real-basis annihilation operator b[alpha]^a as A-mode combination.
inline std::vector<ModeTerm> real_annihilator(const ModelParams &par, int alpha, int a)
{
    Scalar inv_r2 = Scalar::sqrt2() * Scalar(Rational(1, 2));
    if (par.eps() && a == par.p)
        return {{Scalar::one(), odd_mode_index(par, alpha)}};
    int k = (a + 1) / 2;
    int mp = mode_index(par, alpha, k, Sign::plus);
    int mm = mode_index(par, alpha, k, Sign::minus);
    if (a % 2 == 1)
        return {{inv_r2, mp}, {inv_r2, mm}};
    Scalar c = Scalar::i() * inv_r2;
    return {{c, mp}, {-c, mm}};
}

} // namespace detail

// ---------------------------------------------------------------------------
// operators on states
// ---------------------------------------------------------------------------

/// Raw mode creation Ad[mode] (multiplication by the mode).
inline State apply_mode_create(int mode, const State &v)
{
    State out(v.params);
    for (const auto &[ket, c] : v.terms)
        out.add(detail::ket_raise(ket, mode), c);
    return out;
}

/// Raw mode annihilation A[mode] (formal derivative; coefficient = exponent).
inline State apply_mode_annih(int mode, const State &v)
{
    State out(v.params);
    for (const auto &[ket, c] : v.terms)
        if (auto low = detail::ket_lower(ket, mode))
            out.add(low->second, c * Scalar(static_cast<long long>(low->first)));
    return out;
}

/// Spin ladder operator e^{k,+-} acting on the spin factor only.
inline State apply_spin_raise(int k, Sign sg, const State &v)
{
    if (k < 1 || k > v.params.q())
        throw std::invalid_argument("apply_spin_raise: k out of range");
    State out(v.params);
    for (const auto &[ket, c] : v.terms) {
        auto img = detail::spin_e_pm(ket.spin, k, sg);
        if (img.zero)
            continue;
        BasisKet nk = ket;
        nk.spin = img.bits;
        out.add(nk, c * img.coef);
    }
    return out;
}

/// Diagonal generator e^p (odd p): each term scaled by prod_l 2 s^l.
inline State apply_ep(const State &v)
{
    if (v.params.eps() == 0)
        throw std::invalid_argument("apply_ep: e^p exists only for odd p");
    State out(v.params);
    for (const auto &[ket, c] : v.terms)
        out.add(ket, c * Scalar(detail::spin_all_sign(ket.spin, v.params.q())));
    return out;
}

/// Parabose creation operator bd_alpha =
///   sum_k ( Ad[alpha,k,+] e^{k-} + Ad[alpha,k,-] e^{k+} ) + eps bd[alpha,p] e^p.
inline State apply_creator(int alpha, const State &v)
{
    const ModelParams &par = v.params;
    if (alpha < 1 || alpha > par.n)
        throw std::invalid_argument("apply_creator: alpha out of range");
    State out(par);
    for (const auto &[ket, c] : v.terms) {
        for (int k = 1; k <= par.q(); ++k) {
            if (auto img = detail::spin_e_pm(ket.spin, k, Sign::minus); !img.zero) {
                BasisKet nk = detail::ket_raise(ket, mode_index(par, alpha, k, Sign::plus));
                nk.spin = img.bits;
                out.add(nk, c * img.coef);
            }
            if (auto img = detail::spin_e_pm(ket.spin, k, Sign::plus); !img.zero) {
                BasisKet nk = detail::ket_raise(ket, mode_index(par, alpha, k, Sign::minus));
                nk.spin = img.bits;
                out.add(nk, c * img.coef);
            }
        }
        if (par.eps()) {
            BasisKet nk = detail::ket_raise(ket, odd_mode_index(par, alpha));
            out.add(nk, c * Scalar(detail::spin_all_sign(ket.spin, par.q())));
        }
    }
    return out;
}

/// Parabose annihilation operator b_alpha =
///   sum_k ( A[alpha,k,+] e^{k+} + A[alpha,k,-] e^{k-} ) + eps b[alpha,p] e^p.
inline State apply_annihilator(int alpha, const State &v)
{
    const ModelParams &par = v.params;
    if (alpha < 1 || alpha > par.n)
        throw std::invalid_argument("apply_annihilator: alpha out of range");
    State out(par);
    for (const auto &[ket, c] : v.terms) {
        for (int k = 1; k <= par.q(); ++k) {
            if (auto low = detail::ket_lower(ket, mode_index(par, alpha, k, Sign::plus))) {
                if (auto img = detail::spin_e_pm(ket.spin, k, Sign::plus); !img.zero) {
                    BasisKet nk = low->second;
                    nk.spin = img.bits;
                    out.add(nk, c * Scalar(static_cast<long long>(low->first)) * img.coef);
                }
            }
            if (auto low = detail::ket_lower(ket, mode_index(par, alpha, k, Sign::minus))) {
                if (auto img = detail::spin_e_pm(ket.spin, k, Sign::minus); !img.zero) {
                    BasisKet nk = low->second;
                    nk.spin = img.bits;
                    out.add(nk, c * Scalar(static_cast<long long>(low->first)) * img.coef);
                }
            }
        }
        if (par.eps()) {
            if (auto low = detail::ket_lower(ket, odd_mode_index(par, alpha)))
                out.add(low->second, c * Scalar(static_cast<long long>(low->first)) *
                                         Scalar(detail::spin_all_sign(ket.spin, par.q())));
        }
    }
    return out;
}

/**
 * Even sp(2n) operators, expanded over the ladder modes. With the pairwise
 * grouping of Green components into the A-basis:
 *
 *   {bd_a, b_b}  = 2 sum_k ( Ad[a,k,+] A[b,k,+] + Ad[a,k,-] A[b,k,-] )
 *                + 2 eps bd[a,p] b[b,p] + p delta_ab
 *   {bd_a, bd_b} = 2 sum_k ( Ad[a,k,+] Ad[b,k,-] + Ad[a,k,-] Ad[b,k,+] )
 *                + 2 eps bd[a,p] bd[b,p]
 *   {b_a, b_b}   = 2 sum_k ( A[a,k,+] A[b,k,-] + A[a,k,-] A[b,k,+] )
 *                + 2 eps b[a,p] b[b,p]
 *
 * The spin factor is untouched.
 */
inline State apply_even(const EvenOpLabel &op, const State &v)
{
    const ModelParams &par = v.params;
    op.validate(par);
    State out(par);
    Scalar two(2);
    auto add_pair = [&](int create_mode, int annih_mode, const BasisKet &ket, const Scalar &c) {
        // normal-ordered Ad A: derivative first, then raise
        if (auto low = detail::ket_lower(ket, annih_mode))
            out.add(detail::ket_raise(low->second, create_mode),
                    c * Scalar(static_cast<long long>(low->first)));
    };
    auto add_cc = [&](int m1, int m2, const BasisKet &ket, const Scalar &c) {
        out.add(detail::ket_raise(detail::ket_raise(ket, m2), m1), c);
    };
    auto add_aa = [&](int m1, int m2, const BasisKet &ket, const Scalar &c) {
        if (auto low2 = detail::ket_lower(ket, m2))
            if (auto low1 = detail::ket_lower(low2->second, m1))
                out.add(low1->second, c * Scalar(static_cast<long long>(low2->first)) *
                                          Scalar(static_cast<long long>(low1->first)));
    };
    for (const auto &[ket, c] : v.terms) {
        Scalar c2 = c * two;
        switch (op.kind) {
        case EvenOpLabel::Kind::create_annih:
            for (int k = 1; k <= par.q(); ++k) {
                add_pair(mode_index(par, op.alpha, k, Sign::plus),
                         mode_index(par, op.beta, k, Sign::plus), ket, c2);
                add_pair(mode_index(par, op.alpha, k, Sign::minus),
                         mode_index(par, op.beta, k, Sign::minus), ket, c2);
            }
            if (par.eps())
                add_pair(odd_mode_index(par, op.alpha), odd_mode_index(par, op.beta), ket, c2);
            if (op.alpha == op.beta)
                out.add(ket, c * Scalar(par.p));
            break;
        case EvenOpLabel::Kind::create_create:
            for (int k = 1; k <= par.q(); ++k) {
                add_cc(mode_index(par, op.alpha, k, Sign::plus),
                       mode_index(par, op.beta, k, Sign::minus), ket, c2);
                add_cc(mode_index(par, op.alpha, k, Sign::minus),
                       mode_index(par, op.beta, k, Sign::plus), ket, c2);
            }
            if (par.eps())
                add_cc(odd_mode_index(par, op.alpha), odd_mode_index(par, op.beta), ket, c2);
            break;
        case EvenOpLabel::Kind::annih_annih:
            for (int k = 1; k <= par.q(); ++k) {
                add_aa(mode_index(par, op.alpha, k, Sign::plus),
                       mode_index(par, op.beta, k, Sign::minus), ket, c2);
                add_aa(mode_index(par, op.alpha, k, Sign::minus),
                       mode_index(par, op.beta, k, Sign::plus), ket, c2);
            }
            if (par.eps())
                add_aa(odd_mode_index(par, op.alpha), odd_mode_index(par, op.beta), ket, c2);
            break;
        }
    }
    return out;
}

/// Orbital part of the gauge generator G^{ab} (a != b):
///   sum_alpha i ( bd[alpha]^b b[alpha]^a - bd[alpha]^a b[alpha]^b ),
/// expanded through the A-basis. Sign convention is fixed so that
/// [G^(k), Ad[alpha,l,+-]] = +- delta_kl Ad[alpha,l,+-].
inline State apply_gauge_orb(int a, int b, const State &v)
{
    const ModelParams &par = v.params;
    if (a == b)
        throw std::invalid_argument("apply_gauge_orb: require a != b");
    if (a < 1 || a > par.p || b < 1 || b > par.p)
        throw std::invalid_argument("apply_gauge_orb: index out of range");
    State out(par);
    Scalar iu = Scalar::i();
    for (int alpha = 1; alpha <= par.n; ++alpha) {
        auto cb = detail::real_creator(par, alpha, b);
        auto aa = detail::real_annihilator(par, alpha, a);
        auto ca = detail::real_creator(par, alpha, a);
        auto ab = detail::real_annihilator(par, alpha, b);
        for (const auto &[ket, c] : v.terms) {
            for (const auto &at : aa)
                if (auto low = detail::ket_lower(ket, at.mode))
                    for (const auto &ct : cb)
                        out.add(detail::ket_raise(low->second, ct.mode),
                                c * iu * at.coef * ct.coef *
                                    Scalar(static_cast<long long>(low->first)));
            for (const auto &at : ab)
                if (auto low = detail::ket_lower(ket, at.mode))
                    for (const auto &ct : ca)
                        out.add(detail::ket_raise(low->second, ct.mode),
                                -(c * iu * at.coef * ct.coef *
                                  Scalar(static_cast<long long>(low->first))));
        }
    }
    return out;
}

/// Spin part of G^{ab}: (i/4)[e^b, e^a] = (i/2) e^b e^a for a != b.
inline State apply_gauge_spin(int a, int b, const State &v)
{
    const ModelParams &par = v.params;
    if (a == b)
        throw std::invalid_argument("apply_gauge_spin: require a != b");
    if (a < 1 || a > par.p || b < 1 || b > par.p)
        throw std::invalid_argument("apply_gauge_spin: index out of range");
    State out(par);
    Scalar half_i = Scalar::i() * Scalar(Rational(1, 2));
    for (const auto &[ket, c] : v.terms) {
        auto first = detail::spin_e_real(par, ket.spin, a);
        if (first.zero)
            continue;
        auto second = detail::spin_e_real(par, first.bits, b);
        if (second.zero)
            continue;
        BasisKet nk = ket;
        nk.spin = second.bits;
        out.add(nk, c * half_i * first.coef * second.coef);
    }
    return out;
}

/// Full gauge generator G^{ab} = orbital + spin part. Commutes with every
/// parabose operator.
inline State apply_gauge(int a, int b, const State &v)
{
    State out = apply_gauge_orb(a, b, v);
    out += apply_gauge_spin(a, b, v);
    return out;
}

namespace detail {

/// Orbital transfer sum_alpha Ad[alpha, kc, sc] A[alpha, ka, sa] (the odd mode
/// when kc or ka is 0).
inline State orbital_transfer(const State &v, int kc, Sign sc, int ka, Sign sa)
{
    const ModelParams &par = v.params;
    State out(par);
    for (int alpha = 1; alpha <= par.n; ++alpha) {
        int mc = kc == 0 ? odd_mode_index(par, alpha) : mode_index(par, alpha, kc, sc);
        int ma = ka == 0 ? odd_mode_index(par, alpha) : mode_index(par, alpha, ka, sa);
        for (const auto &[ket, c] : v.terms)
            if (auto low = ket_lower(ket, ma))
                out.add(ket_raise(low->second, mc),
                        c * Scalar(static_cast<long long>(low->first)));
    }
    return out;
}

/// Spin product e^{k,sk} e^{l,sl} (l-factor applied first); l = 0 means e^p.
inline State spin_product(const State &v, int k, Sign sk, int l, Sign sl)
{
    const ModelParams &par = v.params;
    State out(par);
    for (const auto &[ket, c] : v.terms) {
        SpinImage first = l == 0 ? spin_ep(ket.spin, par.q()) : spin_e_pm(ket.spin, l, sl);
        if (first.zero)
            continue;
        SpinImage second = spin_e_pm(first.bits, k, sk);
        if (second.zero)
            continue;
        BasisKet nk = ket;
        nk.spin = second.bits;
        out.add(nk, c * first.coef * second.coef);
    }
    return out;
}

} // namespace detail

/**
 * Gauge root vectors in the ladder basis:
 *
 *   G_{+-dk +-dl} = sum_a ( Ad[a,k,+-] A[a,l,-+] - Ad[a,l,+-] A[a,k,-+] )
 *                 + (1/2) e^{k,+-} e^{l,+-}
 *   G_{+-dk -+dl} = sum_a ( Ad[a,k,+-] A[a,l,+-] - Ad[a,l,-+] A[a,k,-+] )
 *                 + (1/2) e^{k,+-} e^{l,-+}
 *   G_{+-dk}      = sum_a ( Ad[a,k,+-] b[a,p] - bd[a,p] A[a,k,-+] )
 *                 + (1/2) e^{k,+-} e^p                      (odd p)
 *
 * Each shifts the gauge weight by its root.
 */
inline State apply_gauge_root(const GaugeRootLabel &r, const State &v)
{
    const ModelParams &par = v.params;
    r.validate(par);
    State out(par);
    Scalar half(Rational(1, 2));
    using K = GaugeRootLabel::Kind;
    switch (r.kind) {
    case K::plus_plus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, r.l, Sign::minus);
        out -= detail::orbital_transfer(v, r.l, Sign::plus, r.k, Sign::minus);
        out += half * detail::spin_product(v, r.k, Sign::plus, r.l, Sign::plus);
        break;
    case K::minus_minus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, r.l, Sign::plus);
        out -= detail::orbital_transfer(v, r.l, Sign::minus, r.k, Sign::plus);
        out += half * detail::spin_product(v, r.k, Sign::minus, r.l, Sign::minus);
        break;
    case K::plus_minus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, r.l, Sign::plus);
        out -= detail::orbital_transfer(v, r.l, Sign::minus, r.k, Sign::minus);
        out += half * detail::spin_product(v, r.k, Sign::plus, r.l, Sign::minus);
        break;
    case K::minus_plus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, r.l, Sign::minus);
        out -= detail::orbital_transfer(v, r.l, Sign::plus, r.k, Sign::plus);
        out += half * detail::spin_product(v, r.k, Sign::minus, r.l, Sign::plus);
        break;
    case K::short_plus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, 0, Sign::plus);
        out -= detail::orbital_transfer(v, 0, Sign::plus, r.k, Sign::minus);
        out += half * detail::spin_product(v, r.k, Sign::plus, 0, Sign::plus);
        break;
    case K::short_minus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, 0, Sign::plus);
        out -= detail::orbital_transfer(v, 0, Sign::plus, r.k, Sign::plus);
        out += half * detail::spin_product(v, r.k, Sign::minus, 0, Sign::plus);
        break;
    }
    return out;
}

/// Orbital part only of a gauge root vector (the A-mode transfer terms).
inline State apply_gauge_root_orb(const GaugeRootLabel &r, const State &v)
{
    const ModelParams &par = v.params;
    r.validate(par);
    State out(par);
    using K = GaugeRootLabel::Kind;
    switch (r.kind) {
    case K::plus_plus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, r.l, Sign::minus);
        out -= detail::orbital_transfer(v, r.l, Sign::plus, r.k, Sign::minus);
        break;
    case K::minus_minus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, r.l, Sign::plus);
        out -= detail::orbital_transfer(v, r.l, Sign::minus, r.k, Sign::plus);
        break;
    case K::plus_minus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, r.l, Sign::plus);
        out -= detail::orbital_transfer(v, r.l, Sign::minus, r.k, Sign::minus);
        break;
    case K::minus_plus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, r.l, Sign::minus);
        out -= detail::orbital_transfer(v, r.l, Sign::plus, r.k, Sign::plus);
        break;
    case K::short_plus:
        out += detail::orbital_transfer(v, r.k, Sign::plus, 0, Sign::plus);
        out -= detail::orbital_transfer(v, 0, Sign::plus, r.k, Sign::minus);
        break;
    case K::short_minus:
        out += detail::orbital_transfer(v, r.k, Sign::minus, 0, Sign::plus);
        out -= detail::orbital_transfer(v, 0, Sign::plus, r.k, Sign::plus);
        break;
    }
    return out;
}

/**
 * Inversion I^a (even p only): I^a_orb swaps the +/- exponents in column
 * k = ceil(a/2), with the sign (-1)^(their total) when a is odd; I^a_spin =
 * -i ebar e^a with ebar = i^{p/2} e^1 e^2 ... e^p. An involution that
 * conjugates e^b and the Green modes of index a to their negatives.
 */
inline State apply_inversion(int a, const State &v)
{
    const ModelParams &par = v.params;
    if (par.eps())
        throw std::invalid_argument("apply_inversion: inversions exist only for even p");
    if (a < 1 || a > par.p)
        throw std::invalid_argument("apply_inversion: index out of range");
    int kcol = (a + 1) / 2;
    // i^{p/2} * (-i)
    int q = par.q();
    Scalar phase = Scalar::one();
    for (int j = 0; j < q; ++j)
        phase *= Scalar::i();
    phase *= -Scalar::i();
    State out(par);
    for (const auto &[ket, c] : v.terms) {
        BasisKet nk = ket;
        long long colsum = 0;
        for (int alpha = 1; alpha <= par.n; ++alpha) {
            int mp = mode_index(par, alpha, kcol, Sign::plus);
            int mm = mode_index(par, alpha, kcol, Sign::minus);
            colsum += nk.exps[mp] + nk.exps[mm];
            std::swap(nk.exps[mp], nk.exps[mm]);
        }
        Scalar coef = c * phase;
        if (a % 2 == 1 && colsum % 2 != 0)
            coef = -coef;
        // spin: e^a first, then e^p, e^{p-1}, ..., e^1
        auto img = detail::spin_e_real(par, ket.spin, a);
        Scalar spin_coef = img.coef;
        uint32_t bits = img.bits;
        for (int cidx = par.p; cidx >= 1; --cidx) {
            auto step = detail::spin_e_real(par, bits, cidx);
            spin_coef *= step.coef;
            bits = step.bits;
        }
        nk.spin = bits;
        out.add(nk, coef * spin_coef);
    }
    return out;
}

/// Conformal energy E: diagonal with eigenvalue n p / 2 + degree.
inline State apply_energy(const State &v)
{
    State out(v.params);
    Rational np_half(static_cast<long long>(v.params.n) * v.params.p, 2);
    for (const auto &[ket, c] : v.terms)
        out.add(ket, c * Scalar(np_half + ket.degree()));
    return out;
}

/// Number operator sum_alpha bd_alpha b_alpha, assembled from the odd ops.
inline State apply_number(const State &v)
{
    State out(v.params);
    for (int alpha = 1; alpha <= v.params.n; ++alpha)
        out += apply_creator(alpha, apply_annihilator(alpha, v));
    return out;
}

/// Spin-orbit operator Q = (1/2) sum_alpha [b_alpha, bd_alpha] = E - sum bd b.
inline State apply_Q(const State &v)
{
    State out = apply_energy(v);
    out -= apply_number(v);
    return out;
}

/// Equivalent spin-orbit form Q = n p / 2 + 2 sum_{a>b} G^{ab}_orb G^{ab}_spin,
/// kept as an independent cross-check of apply_Q.
inline State apply_Q_spin_orbit_form(const State &v)
{
    const ModelParams &par = v.params;
    Rational np_half(static_cast<long long>(par.n) * par.p, 2);
    State out = Scalar(np_half) * v;
    Scalar two(2);
    for (int a = 2; a <= par.p; ++a)
        for (int b = 1; b < a; ++b)
            out += two * apply_gauge_orb(a, b, apply_gauge_spin(a, b, v));
    return out;
}

/**
 * Builds the covariant image of a noncovariant monomial: applies, right to
 * left, the operators bd[alpha]^a e^a to vac x omega(spin). The word is
 * ordered because components with different Green indices anticommute; the
 * covariant image makes the sign explicit.
 *
 * spin_bits selects the spin vector of the covariant vacuum; spin_sum = true
 * sums over the whole spin basis instead.
 */
inline State from_noncovariant(const ModelParams &par,
                               const std::vector<std::pair<int, int>> &word, uint32_t spin_bits,
                               bool spin_sum = false)
{
    for (const auto &[alpha, a] : word)
        if (alpha < 1 || alpha > par.n || a < 1 || a > par.p)
            throw std::invalid_argument("from_noncovariant: index out of range");
    State v(par);
    if (spin_sum) {
        for (uint32_t bits = 0; bits < (1u << par.q()); ++bits)
            v.add(BasisKet::vacuum(par, bits), Scalar::one());
    } else {
        v.add(BasisKet::vacuum(par, spin_bits), Scalar::one());
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto &[alpha, a] = *it;
        auto combo = detail::real_creator(par, alpha, a);
        State next(par);
        for (const auto &[ket, c] : v.terms) {
            auto img = detail::spin_e_real(par, ket.spin, a);
            if (img.zero)
                continue;
            for (const auto &term : combo) {
                BasisKet nk = detail::ket_raise(ket, term.mode);
                nk.spin = img.bits;
                next.add(nk, c * img.coef * term.coef);
            }
        }
        v = std::move(next);
    }
    return v;
}

} // namespace parabose
