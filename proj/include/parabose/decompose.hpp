#pragma once

#include "generators.hpp"
#include "linalg.hpp"
#include "roots.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parabose {

// ---------------------------------------------------------------------------
// weight blocks
// ---------------------------------------------------------------------------

namespace detail {

/// All constraint operators used below shift the per-alpha degrees and the
/// gauge weight by fixed amounts, so every kernel computation splits over
/// blocks labelled by (degree profile, gauge weight).
struct BlockKey
{
    std::vector<long long> nvec;
    std::vector<long long> wtwice;

    friend bool operator<(const BlockKey &a, const BlockKey &b)
    {
        if (a.nvec != b.nvec)
            return a.nvec < b.nvec;
        return a.wtwice < b.wtwice;
    }
};

inline BlockKey block_of(const ModelParams &par, const BasisKet &ket)
{
    BlockKey key;
    key.nvec.reserve(par.n);
    for (int alpha = 1; alpha <= par.n; ++alpha)
        key.nvec.push_back(alpha_degree(par, ket, alpha));
    for (const HalfInt &w : gauge_weight(par, ket))
        key.wtwice.push_back(w.twice);
    return key;
}

inline std::map<BlockKey, std::vector<State>> group_blocks(const std::vector<State> &states)
{
    std::map<BlockKey, std::vector<State>> out;
    for (const State &v : states) {
        if (v.is_zero())
            continue;
        BlockKey key = block_of(v.params, v.terms.begin()->first);
        out[key].push_back(v);
    }
    return out;
}

/// Joint kernel of the operator family, solved block by block.
inline std::vector<State> blocked_kernel(const std::vector<StateOp> &ops,
                                         const std::vector<State> &basis)
{
    std::vector<State> out;
    for (auto &[key, group] : group_blocks(basis)) {
        auto part = operator_kernel(ops, group);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<State> kets_as_states(const ModelParams &par, const std::vector<BasisKet> &kets)
{
    std::vector<State> out;
    out.reserve(kets.size());
    for (const BasisKet &k : kets)
        out.push_back(State::ket(par, k));
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// vacuum subspace, lowest/highest weight vectors
// ---------------------------------------------------------------------------

/// Exact basis of V0 at degree d: the joint kernel of all annihilators
/// b_alpha restricted to the degree-d shell.
inline std::vector<State> vacuum_subspace(const ModelParams &par, int d,
                                          unsigned long long capacity = default_capacity())
{
    std::vector<StateOp> ops;
    for (int alpha = 1; alpha <= par.n; ++alpha)
        ops.push_back([alpha](const State &v) { return apply_annihilator(alpha, v); });
    return detail::blocked_kernel(ops, detail::kets_as_states(par, enumerate_level(par, d, capacity)));
}

/// Subspace of {v : Q v = E v} at degree d, computed as the kernel of the
/// number operator sum_alpha bd_alpha b_alpha. Coincides with V0 shell by
/// shell; kept as an independent route for that check.
inline std::vector<State> q_equals_e_subspace(const ModelParams &par, int d,
                                              unsigned long long capacity = default_capacity())
{
    std::vector<StateOp> ops = {[](const State &v) { return apply_number(v); }};
    return detail::blocked_kernel(ops, detail::kets_as_states(par, enumerate_level(par, d, capacity)));
}

/// osp(1|2n) lowest-weight vectors at degree d: V0 cut down by the compact
/// lowerings {bd_beta, b_alpha}, alpha < beta.
inline std::vector<State> osp_lowest_vectors(const ModelParams &par, int d,
                                             unsigned long long capacity = default_capacity())
{
    std::vector<State> v0 = vacuum_subspace(par, d, capacity);
    if (par.n == 1)
        return v0;
    std::vector<StateOp> ops;
    for (int alpha = 1; alpha <= par.n; ++alpha)
        for (int beta = alpha + 1; beta <= par.n; ++beta)
            ops.push_back([alpha, beta](const State &v) {
                return apply_even(EvenOpLabel::create_annih(beta, alpha), v);
            });
    return detail::blocked_kernel(ops, v0);
}

/**
 * Gauge highest-weight vectors inside the span of the given states: the
 * joint kernel of all positive gauge root vectors. For even p the so(2q)
 * weights come in inversion pairs (mu, -mu^q); each pair is reported once
 * through its representative with positive last component, after checking
 * that I^p really maps the discarded partner into the kept span.
 */
inline std::vector<std::pair<WeightVector, State>>
gauge_hw_vectors(const ModelParams &par, const std::vector<State> &subspace)
{
    std::vector<std::pair<WeightVector, State>> out;
    if (par.q() == 0) {
        for (const State &v : subspace)
            out.emplace_back(WeightVector{}, v);
        return out;
    }
    std::vector<StateOp> ops;
    for (const GaugeRootLabel &r : GaugeRootLabel::positive(par))
        ops.push_back([r](const State &v) { return apply_gauge_root(r, v); });
    std::vector<State> hw = detail::blocked_kernel(ops, subspace);
    if (par.eps() == 1) {
        for (State &v : hw)
            out.emplace_back(gauge_weight(v), std::move(v));
    } else {
        std::vector<State> negatives;
        StateSpan kept;
        for (State &v : hw) {
            WeightVector w = gauge_weight(v);
            if (w.back() > HalfInt(0)) {
                kept.add(v);
                out.emplace_back(std::move(w), std::move(v));
            } else {
                negatives.push_back(std::move(v));
            }
        }
        for (const State &v : negatives) {
            State partner = apply_inversion(par.p, v);
            if (!kept.contains(partner))
                throw theorem_violation_error(
                    "gauge_hw_vectors: inversion partner of a negative-weight vector is missing");
        }
    }
    for (const auto &[w, v] : out)
        if (!weight_dominant_so(par.p, w))
            throw theorem_violation_error("gauge_hw_vectors: non-dominant highest weight " +
                                          weight_str(w));
    return out;
}

// ---------------------------------------------------------------------------
// decomposition report
// ---------------------------------------------------------------------------

struct ReportRow
{
    int degree = 0;
    HalfInt energy;
    OspSignature osp;
    GaugeSignature gauge;
    WeightVector mu;
    unsigned long long gauge_dim = 0;
    std::string vector_id;
    State vector;
};

struct DecompositionReport
{
    ModelParams params;
    int max_degree = 0;
    std::vector<ReportRow> rows;
};

/**
 * The joint table behind the main structure theorems: per degree, the
 * simultaneous osp-lowest / gauge-highest vectors grouped by weight pair.
 * Verifies that every group is at most one-dimensional and that every
 * signature pair satisfies sigma_k = s_{n-k} with s_0 = d - p/2; violations
 * raise theorem_violation_error (they would mean an implementation bug).
 */
inline DecompositionReport joint_lw_hw_table(const ModelParams &par, int max_degree,
                                             unsigned long long capacity = default_capacity())
{
    DecompositionReport report;
    report.params = par;
    report.max_degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        auto hw = gauge_hw_vectors(par, osp_lowest_vectors(par, d, capacity));
        std::map<std::pair<WeightVector, WeightVector>, std::vector<State>> groups;
        for (auto &[w, v] : hw)
            groups[{osp_weight(v), w}].push_back(std::move(v));
        int idx = 0;
        for (auto &[key, vecs] : groups) {
            const auto &[lam, mu] = key;
            if (vecs.size() > 1)
                throw theorem_violation_error("joint_lw_hw_table: weight pair (" + weight_str(lam) +
                                              ", " + weight_str(mu) + ") at degree " +
                                              std::to_string(d) + " has multiplicity " +
                                              std::to_string(vecs.size()));
            ReportRow row;
            row.degree = d;
            row.energy = HalfInt(static_cast<long long>(par.n) * par.p + 2 * d);
            row.osp = OspSignature::from_weight(par, lam);
            row.gauge = GaugeSignature::from_weight(mu);
            row.mu = mu;
            auto expected = signature_bijection(par, row.osp);
            if (!expected || !(*expected == row.gauge))
                throw theorem_violation_error(
                    "joint_lw_hw_table: signature pair " + row.osp.str() + " / " + row.gauge.str() +
                    " violates the correspondence sigma_k = s_{n-k} at degree " + std::to_string(d));
            row.gauge_dim = weyl_dim(par.p, mu, /*pin_mode=*/par.p % 2 == 0);
            row.vector_id = "d" + std::to_string(d) + ".v" + std::to_string(idx++);
            row.vector = vecs.front();
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// explicit lowest-weight vectors
// ---------------------------------------------------------------------------

/**
 * The closed-form joint lowest/highest weight vector of the UIR with the
 * given signature: the product over j = n-1 .. 0 of antisymmetrized factors
 *
 *   ( det of the (n-j) x (n-j) block  Ad[n-r+1, c, +] )^{s_j}
 *
 * applied to the vacuum and tensored with omega(+1/2,...,+1/2), where
 * s_0 = d - p/2. Normalized so the first ket carries coefficient +1.
 */
inline State build_lwhw_vector(const ModelParams &par, const OspSignature &sig)
{
    auto gauge = signature_bijection(par, sig);
    if (!gauge)
        throw std::domain_error("build_lwhw_vector: signature " + sig.str() +
                                " is not realizable at order p = " + std::to_string(par.p) +
                                " (d - p/2 must be a nonnegative integer and truncated entries "
                                "must vanish)");
    long long s0 = (sig.d - HalfInt(par.p)).as_int();
    auto s_at = [&](int j) { return j == 0 ? s0 : sig.s.at(static_cast<size_t>(j - 1)); };

    State v = State::ket(par, BasisKet::vacuum(par)); // all spins up
    for (int j = par.n - 1; j >= 0; --j) {
        long long e = s_at(j);
        if (e == 0)
            continue;
        int m = par.n - j; // factor size
        if (m > par.q())
            throw std::domain_error("build_lwhw_vector: antisymmetrized factor of size " +
                                    std::to_string(m) + " vanishes for q = " +
                                    std::to_string(par.q()));
        // factor = sum over permutations of columns 1..m, rows alpha = n..n-m+1
        State factor(par);
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i)
            perm[i] = i + 1;
        do {
            int sign = 1;
            for (int i = 0; i < m; ++i)
                for (int jj = i + 1; jj < m; ++jj)
                    if (perm[i] > perm[jj])
                        sign = -sign;
            BasisKet ket = BasisKet::vacuum(par);
            for (int r = 0; r < m; ++r)
                ++ket.exps[mode_index(par, par.n - r, perm[r], Sign::plus)];
            factor.add(ket, Scalar(sign));
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (long long rep = 0; rep < e; ++rep) {
            // monomial product: exponents add, spins stay all-up
            State next(par);
            for (const auto &[ka, ca] : v.terms)
                for (const auto &[kb, cb] : factor.terms) {
                    BasisKet prod = ka;
                    for (size_t mdx = 0; mdx < prod.exps.size(); ++mdx)
                        prod.exps[mdx] += kb.exps[mdx];
                    next.add(prod, ca * cb);
                }
            v = std::move(next);
        }
    }
    if (v.is_zero())
        throw std::domain_error("build_lwhw_vector: antisymmetrized product vanished");
    return normalize_leading(std::move(v));
}

// ---------------------------------------------------------------------------
// multiplicities
// ---------------------------------------------------------------------------

struct MultiplicityRow
{
    OspSignature osp;
    GaugeSignature gauge;
    unsigned long long claimed = 0; // gauge irrep dimension
    unsigned long long counted = 0; // independent osp-lowest vectors of that weight
};

/**
 * Corollary check: the multiplicity of an osp UIR in the ansatz space
 * (counted as independent osp-lowest vectors of its weight at its degree)
 * must equal the dimension of the partner gauge irrep.
 */
inline std::vector<MultiplicityRow> multiplicity_check(const ModelParams &par, int max_degree,
                                                       unsigned long long capacity = default_capacity())
{
    DecompositionReport table = joint_lw_hw_table(par, max_degree, capacity);
    std::vector<MultiplicityRow> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::map<WeightVector, unsigned long long> counts;
        for (const State &v : osp_lowest_vectors(par, d, capacity))
            counts[osp_weight(v)]++;
        for (const ReportRow &row : table.rows) {
            if (row.degree != d)
                continue;
            MultiplicityRow m;
            m.osp = row.osp;
            m.gauge = row.gauge;
            m.claimed = row.gauge_dim;
            m.counted = counts[row.osp.lowest_weight(par.n)];
            out.push_back(std::move(m));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// spin-orbit decomposition (even subalgebra branching)
// ---------------------------------------------------------------------------

struct SpinOrbitComponent
{
    WeightVector mu_orb;  // orbital highest weight (integers, <= n nonzero)
    WeightVector mu_spin; // (1/2, ..., 1/2)
    WeightVector mu;      // total gauge highest weight
    std::vector<State> orbital_hw; // orbital hw vectors at the probed degree
};

/// Orbital highest-weight vectors at degree d: kernel of the orbital parts of
/// the positive gauge roots, computed on the spin-all-up slice of the shell.
/// Returns weight -> basis, with even-p weights canonicalized to mu^q >= 0.
inline std::map<WeightVector, std::vector<State>>
orbital_hw_vectors(const ModelParams &par, int d, unsigned long long capacity = default_capacity())
{
    std::vector<State> slice;
    for (const BasisKet &k : enumerate_level(par, d, capacity))
        if (k.spin == (par.q() == 0 ? 0u : (1u << par.q()) - 1u))
            slice.push_back(State::ket(par, k));
    std::vector<StateOp> ops;
    for (const GaugeRootLabel &r : GaugeRootLabel::positive(par))
        ops.push_back([r](const State &v) { return apply_gauge_root_orb(r, v); });
    std::vector<State> hw = detail::blocked_kernel(ops, slice);

    auto orbital_weight = [&](const State &v) {
        WeightVector w = gauge_weight(v);
        for (HalfInt &x : w)
            x = x - HalfInt::half(); // remove the all-up spin contribution
        return w;
    };
    std::map<WeightVector, std::vector<State>> grouped;
    for (State &v : hw)
        grouped[orbital_weight(v)].push_back(std::move(v));
    if (par.eps() == 1)
        return grouped;
    // even p: merge inversion pairs, keeping the representative with
    // nonnegative last component; the orbital part of I^p (swap of the +/-
    // exponents in the last column) must map each discarded vector into the
    // kept span
    auto invert_orb = [&](const State &v) {
        State img(par);
        for (const auto &[ket, c] : v.terms) {
            BasisKet nk = ket;
            for (int alpha = 1; alpha <= par.n; ++alpha)
                std::swap(nk.exps[mode_index(par, alpha, par.q(), Sign::plus)],
                          nk.exps[mode_index(par, alpha, par.q(), Sign::minus)]);
            img.add(nk, c);
        }
        return img;
    };
    std::map<WeightVector, std::vector<State>> out;
    for (auto &[w, vecs] : grouped) {
        if (w.back() < HalfInt(0)) {
            WeightVector partner = w;
            partner.back() = -partner.back();
            auto it = grouped.find(partner);
            if (it == grouped.end() || it->second.size() != vecs.size())
                throw theorem_violation_error(
                    "orbital_hw_vectors: unpaired negative orbital weight " + weight_str(w));
            StateSpan span;
            for (const State &kept : it->second)
                span.add(kept);
            for (const State &v : vecs)
                if (!span.contains(invert_orb(v)))
                    throw theorem_violation_error(
                        "orbital_hw_vectors: inversion does not map the negative class onto "
                        "its partner at weight " + weight_str(w));
            continue;
        }
        out[w] = std::move(vecs);
    }
    return out;
}

/**
 * Components of the degree-d, gauge-type-mu subspace: one per orbital highest
 * weight mu_orb present at degree d whose product with the spin factor
 * contains mu. Asserts that every orbital hw has at most n nonzero entries.
 */
inline std::vector<SpinOrbitComponent>
spin_orbit_components(const ModelParams &par, int d, const WeightVector &mu,
                      unsigned long long capacity = default_capacity())
{
    std::vector<SpinOrbitComponent> out;
    WeightVector mu_spin(par.q(), HalfInt::half());
    for (auto &[w, vecs] : orbital_hw_vectors(par, d, capacity)) {
        int nonzero = 0;
        for (const HalfInt &x : w) {
            if (!x.is_integer() || x < HalfInt(0))
                throw theorem_violation_error("orbital weight not a nonnegative integer vector: " +
                                              weight_str(w));
            if (x != HalfInt(0))
                ++nonzero;
        }
        if (nonzero > par.n)
            throw theorem_violation_error("orbital highest weight " + weight_str(w) +
                                          " has more than n nonzero entries");
        if (!spinor_product_contains(par.p, w, mu))
            continue;
        SpinOrbitComponent comp;
        comp.mu_orb = w;
        comp.mu_spin = mu_spin;
        comp.mu = mu;
        comp.orbital_hw = std::move(vecs);
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

/// Restriction of the orbital gauge Casimir sum_{a>b} (G^{ab}_orb)^2 to the
/// span of the given states, as a dense column matrix. Throws if the span is
/// not invariant (it always is for the spaces used here).
inline std::vector<std::vector<Scalar>> casimir_orb_matrix(const std::vector<State> &basis)
{
    const ModelParams &par = basis.front().params;
    std::map<BasisKet, int> index;
    std::vector<SparseRow> rows;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        SparseRow row;
        for (const auto &[ket, coef] : basis[j].terms) {
            auto [it, ins] = index.emplace(ket, static_cast<int>(index.size()));
            row.emplace_back(it->second, coef);
        }
        std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        rows.push_back(row);
    }
    // solve coords: express image vectors in the basis with dense elimination
    auto coords_of = [&](const State &v) {
        // least structure: gaussian solve of basis^T x = v
        std::vector<Scalar> rhs(index.size());
        for (const auto &[ket, coef] : v.terms) {
            auto it = index.find(ket);
            if (it == index.end())
                throw theorem_violation_error("casimir_orb_matrix: image leaves the subspace");
            rhs[it->second] = coef;
        }
        // dense solve over the (small) basis
        size_t m = basis.size();
        std::vector<std::vector<Scalar>> aug(index.size(), std::vector<Scalar>(m + 1));
        for (size_t j = 0; j < m; ++j)
            for (const auto &[col, coef] : rows[j])
                aug[col][j] = coef;
        for (size_t r = 0; r < index.size(); ++r)
            aug[r][m] = rhs[r];
        std::vector<Scalar> x(m);
        size_t lead = 0;
        std::vector<int> pivot_row_of_col(m, -1);
        for (size_t c = 0; c < m && lead < aug.size(); ++c) {
            size_t pr = lead;
            while (pr < aug.size() && aug[pr][c].is_zero())
                ++pr;
            if (pr == aug.size())
                continue;
            std::swap(aug[pr], aug[lead]);
            Scalar inv = aug[lead][c].inv();
            for (size_t cc = c; cc <= m; ++cc)
                aug[lead][cc] = aug[lead][cc] * inv;
            for (size_t r = 0; r < aug.size(); ++r) {
                if (r == lead || aug[r][c].is_zero())
                    continue;
                Scalar f = aug[r][c];
                for (size_t cc = c; cc <= m; ++cc)
                    aug[r][cc] -= f * aug[lead][cc];
            }
            pivot_row_of_col[c] = static_cast<int>(lead);
            ++lead;
        }
        for (size_t c = 0; c < m; ++c)
            x[c] = pivot_row_of_col[c] >= 0 ? aug[pivot_row_of_col[c]][m] : Scalar();
        // consistency: rows without pivots must have zero rhs
        for (size_t r = lead; r < aug.size(); ++r)
            if (!aug[r][m].is_zero())
                throw theorem_violation_error("casimir_orb_matrix: image leaves the subspace");
        return x;
    };
    std::vector<std::vector<Scalar>> mat;
    for (const State &b : basis) {
        State img(par);
        for (int a = 2; a <= par.p; ++a)
            for (int bb = 1; bb < a; ++bb)
                img += apply_gauge_orb(a, bb, apply_gauge_orb(a, bb, b));
        mat.push_back(coords_of(img));
    }
    // transpose: mat[j] currently holds coordinates of image of basis[j]
    std::vector<std::vector<Scalar>> out(basis.size(), std::vector<Scalar>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < basis.size(); ++i)
            out[i][j] = mat[j][i];
    return out;
}

} // namespace detail

struct SpLowestRecord
{
    WeightVector osp_w;
    SpinOrbitComponent component;
    int degree = 0; // degree hosting the vector
    State vector;
};

/**
 * Even-subalgebra branching probe: for every spin-orbit component of the
 * degree-d, gauge-type-mu subspace, finds an sp(2n) lowest-weight vector
 * inside it (searching degrees d' <= d; the component's first appearance is
 * guaranteed to host one). The witness vectors are simultaneously sp-lowest
 * and gauge-highest of weight mu, attributed to their component through the
 * orbital Casimir eigenvalue. Raises theorem_violation_error when a component
 * hosts none.
 */
inline std::vector<SpLowestRecord>
sp_lowest_weights(const ModelParams &par, int d, const WeightVector &mu,
                  unsigned long long capacity = default_capacity())
{
    std::vector<SpinOrbitComponent> comps = spin_orbit_components(par, d, mu, capacity);
    std::vector<SpLowestRecord> out;

    // sp(2n) lowering family: {b_a, b_b} for a <= b and {bd_b, b_a} for a < b
    std::vector<StateOp> lowerings;
    for (int a = 1; a <= par.n; ++a)
        for (int b = a; b <= par.n; ++b)
            lowerings.push_back(
                [a, b](const State &v) { return apply_even(EvenOpLabel::annih_annih(a, b), v); });
    for (int a = 1; a <= par.n; ++a)
        for (int b = a + 1; b <= par.n; ++b)
            lowerings.push_back(
                [a, b](const State &v) { return apply_even(EvenOpLabel::create_annih(b, a), v); });
    std::vector<StateOp> ops = lowerings;
    for (const GaugeRootLabel &r : GaugeRootLabel::positive(par))
        ops.push_back([r](const State &v) { return apply_gauge_root(r, v); });

    for (SpinOrbitComponent &comp : comps) {
        Rational c_target = so_casimir_value(par.p, comp.mu_orb);
        std::optional<SpLowestRecord> found;
        for (int dd = 0; dd <= d && !found; ++dd) {
            // candidate orbital types at this degree, for the collision guard
            std::vector<Rational> rival_casimirs;
            for (const auto &[w, vecs] : orbital_hw_vectors(par, dd, capacity)) {
                if (!(w == comp.mu_orb) && spinor_product_contains(par.p, w, mu))
                    rival_casimirs.push_back(so_casimir_value(par.p, w));
            }
            for (const Rational &c : rival_casimirs)
                if (c == c_target)
                    throw std::runtime_error(
                        "sp_lowest_weights: orbital Casimir collision at degree " +
                        std::to_string(dd) + "; attribution unsupported for this input");
            // gauge-hw(mu) + sp-lowest vectors at degree dd, block by block
            std::vector<State> inputs;
            for (const BasisKet &k : enumerate_level(par, dd, capacity))
                if (gauge_weight(par, k) == mu)
                    inputs.push_back(State::ket(par, k));
            if (inputs.empty())
                continue;
            std::vector<State> w_space = detail::blocked_kernel(ops, inputs);
            if (w_space.empty())
                continue;
            for (auto &[key, group] : detail::group_blocks(w_space)) {
                auto cas = detail::casimir_orb_matrix(group);
                // eigenvectors for c_target: kernel of (cas - c_target I)
                ExactElimination elim;
                size_t m = group.size();
                for (size_t r = 0; r < m; ++r) {
                    SparseRow row;
                    for (size_t c = 0; c < m; ++c) {
                        Scalar v = cas[r][c];
                        if (r == c)
                            v -= Scalar(c_target);
                        if (!v.is_zero())
                            row.emplace_back(static_cast<int>(c), v);
                    }
                    elim.add_row(row);
                }
                auto combos = elim.nullspace(static_cast<int>(m));
                if (combos.empty())
                    continue;
                State vec(par);
                for (const auto &[j, coef] : combos.front())
                    vec.add_scaled(group[j], coef);
                if (vec.is_zero())
                    continue;
                SpLowestRecord rec;
                rec.osp_w = osp_weight(vec);
                rec.component = comp;
                rec.degree = dd;
                rec.vector = normalize_leading(std::move(vec));
                found = std::move(rec);
                break;
            }
        }
        if (!found)
            throw theorem_violation_error("sp_lowest_weights: component with orbital weight " +
                                          weight_str(comp.mu_orb) + " and gauge type " +
                                          weight_str(mu) + " hosts no sp(2n) lowest-weight vector");
        out.push_back(std::move(*found));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Casimir check
// ---------------------------------------------------------------------------

/**
 * Applies the full gauge Casimir sum_{a>b} (G^{ab})^2 to a highest-weight
 * vector and checks the eigenvalue against <mu, mu + 2 rho>. Returns the
 * eigenvalue; throws if v is not an eigenvector or the value disagrees.
 */
inline Scalar casimir_so_check(const State &v, const WeightVector &mu)
{
    const ModelParams &par = v.params;
    State img(par);
    for (int a = 2; a <= par.p; ++a)
        for (int b = 1; b < a; ++b)
            img += apply_gauge(a, b, apply_gauge(a, b, v));
    Scalar expected(so_casimir_value(par.p, mu));
    State residual = img - expected * v;
    if (!residual.is_zero()) {
        // distinguish "not an eigenvector" from "wrong eigenvalue"
        auto it = v.terms.begin();
        Scalar ratio;
        auto img_it = img.terms.find(it->first);
        if (img_it != img.terms.end())
            ratio = img_it->second * it->second.inv();
        State prop = img - ratio * v;
        if (!prop.is_zero())
            throw std::domain_error("casimir_so_check: input is not a Casimir eigenvector");
        throw theorem_violation_error("casimir_so_check: eigenvalue " + ratio.str() +
                                      " != <mu,mu+2rho> = " + expected.str() + " for mu = " +
                                      weight_str(mu));
    }
    return expected;
}

} // namespace parabose
