#pragma once

#include "common.hpp"
#include "fock.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parabose {

/**
 * Label of a positive-energy UIR of osp(1|2n): [d; s_1 ... s_{n-1}] with
 * d = lam_1 and s_a = lam_{a+1} - lam_a for the lowest weight lam. The
 * derived entry s_0 = d - p/2 drives the gauge correspondence.
 */
struct OspSignature
{
    HalfInt d;
    std::vector<long long> s; // length n-1, nonnegative

    std::string str() const
    {
        std::string out = "[" + d.str();
        if (!s.empty()) {
            out += ";";
            for (size_t i = 0; i < s.size(); ++i) {
                if (i)
                    out += ",";
                out += std::to_string(s[i]);
            }
        }
        return out + "]";
    }

    friend bool operator==(const OspSignature &a, const OspSignature &b)
    {
        return a.d == b.d && a.s == b.s;
    }
    friend bool operator<(const OspSignature &a, const OspSignature &b)
    {
        if (a.d != b.d)
            return a.d < b.d;
        return a.s < b.s;
    }

    /// Lowest weight (lam_1..lam_n).
    WeightVector lowest_weight(int n) const
    {
        WeightVector lam(n);
        lam[0] = d;
        for (int a = 1; a < n; ++a)
            lam[a] = lam[a - 1] + HalfInt::of_int(s[a - 1]);
        return lam;
    }

    /// Degree of the shell hosting the lowest-weight vector:
    /// sum_alpha (lam_alpha - p/2).
    long long lw_degree(const ModelParams &par) const
    {
        WeightVector lam = lowest_weight(par.n);
        long long twice = 0;
        for (const auto &l : lam)
            twice += l.twice - par.p;
        return twice / 2;
    }

    static OspSignature from_weight(const ModelParams &par, const WeightVector &lam)
    {
        OspSignature sig;
        sig.d = lam.at(0);
        for (int a = 1; a < par.n; ++a) {
            HalfInt diff = lam[a] - lam[a - 1];
            if (!diff.is_integer() || diff.twice < 0)
                throw std::invalid_argument("osp weight is not dominant-integral: " +
                                            weight_str(lam));
            sig.s.push_back(diff.as_int());
        }
        return sig;
    }

    /// Parses "d;s1,...,s_{n-1}" with d a (half-)integer like "3" or "7/2".
    static OspSignature parse(const std::string &text, int n)
    {
        OspSignature sig;
        auto semi = text.find(';');
        std::string dpart = semi == std::string::npos ? text : text.substr(0, semi);
        sig.d = HalfInt::parse(dpart);
        if (semi != std::string::npos) {
            std::string rest = text.substr(semi + 1);
            size_t pos = 0;
            while (pos < rest.size()) {
                auto comma = rest.find(',', pos);
                std::string item =
                    comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
                sig.s.push_back(std::stoll(item));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
        }
        if (static_cast<int>(sig.s.size()) != n - 1)
            throw std::invalid_argument("osp signature needs exactly n-1 = " + std::to_string(n - 1) +
                                        " s-entries");
        for (long long v : sig.s)
            if (v < 0)
                throw std::invalid_argument("osp signature entries must be nonnegative");
        return sig;
    }
};

/// Label of a gauge-group UIR: [sigma^1 ... sigma^q] with highest weight
/// mu^q = sigma^q + 1/2, mu^k = mu^{k+1} + sigma^k.
struct GaugeSignature
{
    std::vector<long long> sigma; // length q, nonnegative

    std::string str() const
    {
        std::string out = "[";
        for (size_t i = 0; i < sigma.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(sigma[i]);
        }
        return out + "]";
    }

    friend bool operator==(const GaugeSignature &a, const GaugeSignature &b)
    {
        return a.sigma == b.sigma;
    }

    WeightVector highest_weight() const
    {
        int q = static_cast<int>(sigma.size());
        WeightVector mu(q);
        if (q == 0)
            return mu;
        mu[q - 1] = HalfInt::of_int(sigma[q - 1]) + HalfInt::half();
        for (int k = q - 2; k >= 0; --k)
            mu[k] = mu[k + 1] + HalfInt::of_int(sigma[k]);
        return mu;
    }

    static GaugeSignature from_weight(const WeightVector &mu)
    {
        GaugeSignature sig;
        int q = static_cast<int>(mu.size());
        for (int k = 0; k < q; ++k) {
            HalfInt diff = k + 1 < q ? mu[k] - mu[k + 1] : mu[k] - HalfInt::half();
            if (!diff.is_integer() || diff.twice < 0)
                throw std::invalid_argument("gauge weight is not dominant-spinorial: " +
                                            weight_str(mu));
            sig.sigma.push_back(diff.as_int());
        }
        return sig;
    }
};

/**
 * The signature correspondence sigma_k = s_{n-k} with s_0 = d - p/2 (missing
 * entries on either side read as zero). Returns nullopt when the osp UIR is
 * not realizable at order p: either d - p/2 is not a nonnegative integer, or
 * a gauge rank q < n would force a nonzero s-entry to vanish.
 */
inline std::optional<GaugeSignature> signature_bijection(const ModelParams &par,
                                                         const OspSignature &osp)
{
    HalfInt s0h = osp.d - HalfInt(par.p);
    if (!s0h.is_integer() || s0h.twice < 0)
        return std::nullopt;
    long long s0 = s0h.as_int();
    auto s_at = [&](long long j) -> long long {
        if (j < 0)
            return 0;
        if (j == 0)
            return s0;
        return osp.s.at(static_cast<size_t>(j - 1));
    };
    // entries not covered by sigma (j < n - q) must vanish
    for (long long j = 0; j < par.n - par.q(); ++j)
        if (s_at(j) != 0)
            return std::nullopt;
    GaugeSignature g;
    for (int k = 1; k <= par.q(); ++k)
        g.sigma.push_back(s_at(par.n - k));
    return g;
}

/// Inverse direction: gauge signature to osp signature, when one exists.
inline std::optional<OspSignature> signature_bijection_inverse(const ModelParams &par,
                                                               const GaugeSignature &gauge)
{
    auto sigma_at = [&](int k) -> long long {
        return k >= 1 && k <= par.q() ? gauge.sigma.at(static_cast<size_t>(k - 1)) : 0;
    };
    // sigma_k with k > n corresponds to s_{n-k} with negative index: must vanish
    for (int k = par.n + 1; k <= par.q(); ++k)
        if (sigma_at(k) != 0)
            return std::nullopt;
    OspSignature osp;
    long long s0 = sigma_at(par.n);
    osp.d = HalfInt(2 * s0 + par.p);
    for (int j = 1; j < par.n; ++j)
        osp.s.push_back(sigma_at(par.n - j));
    return osp;
}

/// Half-sum of positive roots of so(p): (q-k+1/2) for odd p, (q-k) for even p.
inline WeightVector so_rho(int p)
{
    int q = p / 2;
    WeightVector rho(q);
    for (int k = 1; k <= q; ++k)
        rho[k - 1] = p % 2 ? HalfInt(2 * (q - k) + 1) : HalfInt::of_int(q - k);
    return rho;
}

/// Casimir eigenvalue <mu, mu + 2 rho> of so(p) on the irrep with highest
/// weight mu.
inline Rational so_casimir_value(int p, const WeightVector &mu)
{
    WeightVector rho = so_rho(p);
    Rational out(0);
    for (size_t k = 0; k < mu.size(); ++k)
        out += mu[k].as_rational() * (mu[k].as_rational() + 2 * rho[k].as_rational());
    return out;
}

inline bool weight_dominant_so(int p, const WeightVector &mu)
{
    int q = p / 2;
    if (static_cast<int>(mu.size()) != q)
        return false;
    for (int k = 0; k + 1 < q; ++k)
        if (mu[k] < mu[k + 1])
            return false;
    if (q > 0 && mu[q - 1] < HalfInt(0))
        return false; // Pin / B_q convention: last entry nonnegative
    return true;
}

/**
 * Weyl dimension formula for so(p) (B_q or D_q root data). With pin_mode set
 * and p even, an irrep with mu^q > 0 is doubled: the inversions merge the two
 * so(2q) irreps +-mu^q into one gauge-group irrep.
 */
inline unsigned long long weyl_dim(int p, const WeightVector &mu, bool pin_mode)
{
    int q = p / 2;
    if (!weight_dominant_so(p, mu))
        throw std::invalid_argument("weyl_dim: weight is not dominant: " + weight_str(mu));
    WeightVector rho = so_rho(p);
    Rational dim(1);
    auto val = [&](int k) { return mu[k].as_rational() + rho[k].as_rational(); };
    auto rv = [&](int k) { return rho[k].as_rational(); };
    for (int k = 0; k < q; ++k)
        for (int l = k + 1; l < q; ++l)
            dim *= (val(k) * val(k) - val(l) * val(l)) / (rv(k) * rv(k) - rv(l) * rv(l));
    if (p % 2)
        for (int k = 0; k < q; ++k)
            dim *= val(k) / rv(k);
    if (denominator(dim) != 1 || dim <= 0)
        throw std::logic_error("weyl_dim: non-integral result for " + weight_str(mu));
    unsigned long long out = static_cast<unsigned long long>(numerator(dim));
    if (pin_mode && p % 2 == 0 && q > 0 && mu[q - 1] > HalfInt(0))
        out *= 2;
    return out;
}

namespace detail {

/// Racah-Speiser resolution of a shifted weight lam + rho into the dominant
/// chamber; returns (dominant representative, det of the Weyl element) or
/// nullopt when the shifted weight sits on a wall.
///
/// B_q walls: x_i = 0 or |x_i| = |x_j|; Weyl group = all signed permutations,
/// det = sgn(perm) * (-1)^{sign flips}. D_q walls: |x_i| = |x_j|; only even
/// numbers of sign flips are Weyl elements (det = sgn(perm)), so an odd
/// residual flip stays on the last coordinate unless a zero absorbs it.
inline std::optional<std::pair<WeightVector, int>> rs_resolve(int p, const WeightVector &lam_plus_rho)
{
    int q = p / 2;
    std::vector<HalfInt> x(lam_plus_rho);
    int sign = 1;
    int neg_flips = 0;
    bool has_zero = false;
    for (int i = 0; i < q; ++i) {
        if (x[i].twice == 0) {
            if (p % 2)
                return std::nullopt;
            has_zero = true;
        }
        if (x[i].twice < 0) {
            x[i] = -x[i];
            ++neg_flips;
        }
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (x[i] == x[j])
                return std::nullopt;
    // insertion sort descending, tracking the permutation sign
    for (int i = 1; i < q; ++i)
        for (int j = i; j > 0 && x[j - 1] < x[j]; --j) {
            std::swap(x[j], x[j - 1]);
            sign = -sign;
        }
    if (p % 2) {
        if (neg_flips % 2)
            sign = -sign;
    } else if (neg_flips % 2 == 1 && !has_zero) {
        x[q - 1] = -x[q - 1];
    }
    return std::make_pair(WeightVector(x.begin(), x.end()), sign);
}

} // namespace detail

/**
 * Decomposition of D(mu_orb) x D(spinor) for so(p), where the spinor factor
 * is the 2^q-dimensional module with weights {+-1/2}^q (for even p both
 * half-spin components, matching the Clifford factor space). Returns dominant
 * weights with net multiplicities.
 */
inline std::map<WeightVector, long long> tensor_with_spinor(int p, const WeightVector &mu_orb)
{
    int q = p / 2;
    WeightVector rho = so_rho(p);
    std::map<WeightVector, long long> out;
    for (uint32_t eps = 0; eps < (1u << q); ++eps) {
        WeightVector x(q);
        for (int k = 0; k < q; ++k) {
            HalfInt shift = (eps >> k) & 1u ? HalfInt(1) : HalfInt(-1); // +-1/2
            x[k] = mu_orb[k] + shift + rho[k];
        }
        auto resolved = detail::rs_resolve(p, x);
        if (!resolved)
            continue;
        WeightVector mu(q);
        for (int k = 0; k < q; ++k)
            mu[k] = resolved->first[k] - rho[k];
        out[mu] += resolved->second;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

/// Membership test mu in mu_orb (x) mu_spin for the gauge group: for even p
/// both Pin partners of mu are checked (the orbital flip is equivalent by the
/// outer automorphism).
inline bool spinor_product_contains(int p, const WeightVector &mu_orb, const WeightVector &mu)
{
    int q = p / 2;
    if (q == 0)
        return true; // trivial gauge group
    auto prod = tensor_with_spinor(p, mu_orb);
    auto positive = [&](const WeightVector &w) {
        auto it = prod.find(w);
        return it != prod.end() && it->second > 0;
    };
    if (positive(mu))
        return true;
    if (p % 2 == 0) {
        WeightVector flipped = mu;
        flipped[q - 1] = -flipped[q - 1];
        if (positive(flipped))
            return true;
    }
    return false;
}

/// Positive roots of osp(1|2n) in the elementary-functional basis, as printed
/// strings (used by the info command).
inline std::vector<std::string> osp_positive_roots(int n)
{
    std::vector<std::string> out;
    for (int a = 1; a <= n; ++a)
        out.push_back("+d" + std::to_string(a));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            out.push_back("+d" + std::to_string(a) + "+d" + std::to_string(b));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            out.push_back("+d" + std::to_string(a) + "-d" + std::to_string(b));
    for (int a = 1; a <= n; ++a)
        out.push_back("+2d" + std::to_string(a));
    return out;
}

} // namespace parabose
