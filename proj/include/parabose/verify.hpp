#pragma once

#include "decompose.hpp"
#include "statefile.hpp"

#include <set>
#include <string>
#include <vector>

namespace parabose {

struct SuiteResult
{
    std::string name;
    long long checks = 0;
    std::vector<std::string> failures;

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    bool ok() const { return failures.empty(); }

    void expect(bool cond, const std::string &what)
    {
        ++checks;
        if (!cond)
            failures.push_back(what);
    }

    void expect_zero(const State &residual, const std::string &what)
    {
        ++checks;
        if (!residual.is_zero())
            failures.push_back(what + "; residual = " + state_to_json(residual).dump());
    }
};

/// Trilinear relation residuals on every ket of degree <= max_degree, all
/// index combinations.
inline SuiteResult verify_algebra(const ModelParams &par, int max_degree,
                                  unsigned long long capacity = default_capacity())
{
    SuiteResult res{"algebra"};
    for (int d = 0; d <= max_degree; ++d) {
        for (const BasisKet &ket : enumerate_level(par, d, capacity)) {
            State v = State::ket(par, ket);
            for (int a = 1; a <= par.n; ++a)
                for (int b = 1; b <= par.n; ++b)
                    for (int c = 1; c <= par.n; ++c) {
                        std::string where = " at (" + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + ") on " + ket_str(par, ket);
                        auto ann_ab = EvenOpLabel::create_annih(b, a); // {b_a, bd_b}
                        State r1 = apply_even(ann_ab, apply_annihilator(c, v)) -
                                   apply_annihilator(c, apply_even(ann_ab, v));
                        if (b == c)
                            r1 += Scalar(2) * apply_annihilator(a, v);
                        res.expect_zero(r1, "[{b_a,bd_b}, b_c] + 2 delta b_a" + where);

                        auto cre_ab = EvenOpLabel::create_annih(a, b); // {bd_a, b_b}
                        State r2 = apply_even(cre_ab, apply_creator(c, v)) -
                                   apply_creator(c, apply_even(cre_ab, v));
                        if (b == c)
                            r2 -= Scalar(2) * apply_creator(a, v);
                        res.expect_zero(r2, "[{bd_a,b_b}, bd_c] - 2 delta bd_a" + where);

                        auto aa = EvenOpLabel::annih_annih(a, b);
                        State r3 = apply_even(aa, apply_annihilator(c, v)) -
                                   apply_annihilator(c, apply_even(aa, v));
                        res.expect_zero(r3, "[{b_a,b_b}, b_c]" + where);

                        auto cc = EvenOpLabel::create_create(a, b);
                        State r4 = apply_even(cc, apply_creator(c, v)) -
                                   apply_creator(c, apply_even(cc, v));
                        res.expect_zero(r4, "[{bd_a,bd_b}, bd_c]" + where);
                    }
        }
    }
    return res;
}

/// Gauge invariance and so(p) structure constants, exactly, on every ket of
/// degree <= max_degree.
inline SuiteResult verify_gauge(const ModelParams &par, int max_degree,
                                unsigned long long capacity = default_capacity())
{
    SuiteResult res{"gauge"};
    int npairs = par.p * (par.p - 1) / 2;
    auto pair_index = [&](int a, int b) {
        // a < b assumed
        return (a - 1) * par.p - a * (a + 1) / 2 + b - 1;
    };
    for (int d = 0; d <= max_degree; ++d) {
        for (const BasisKet &ket : enumerate_level(par, d, capacity)) {
            State v = State::ket(par, ket);
            // cache the first-level applications G^{ab} v
            std::vector<State> gv(npairs, State(par));
            for (int a = 1; a <= par.p; ++a)
                for (int b = a + 1; b <= par.p; ++b)
                    gv[pair_index(a, b)] = apply_gauge(a, b, v);
            auto G = [&](int a, int b, const State &w) {
                if (a == b)
                    return State(par);
                return a < b ? apply_gauge(a, b, w) : Scalar(-1) * apply_gauge(b, a, w);
            };
            auto Gv = [&](int a, int b) {
                if (a == b)
                    return State(par);
                return a < b ? gv[pair_index(a, b)] : Scalar(-1) * gv[pair_index(b, a)];
            };
            for (int a = 1; a <= par.p; ++a)
                for (int b = a + 1; b <= par.p; ++b) {
                    const State &gab = gv[pair_index(a, b)];
                    for (int alpha = 1; alpha <= par.n; ++alpha) {
                        State cb = apply_gauge(a, b, apply_annihilator(alpha, v)) -
                                   apply_annihilator(alpha, gab);
                        res.expect_zero(cb, "[G^{ab}, b_alpha] on " + ket_str(par, ket));
                        State cbd = apply_gauge(a, b, apply_creator(alpha, v)) -
                                    apply_creator(alpha, gab);
                        res.expect_zero(cbd, "[G^{ab}, bd_alpha] on " + ket_str(par, ket));
                    }
                    // structure constants against every later pair
                    for (int c = a; c <= par.p; ++c)
                        for (int e = (c == a ? b : c + 1); e <= par.p; ++e) {
                            State lhs = G(a, b, gv[pair_index(c, e)]) - G(c, e, gab);
                            auto delta = [](int x, int y) { return x == y ? 1 : 0; };
                            State rhs(par);
                            if (delta(a, c))
                                rhs += Gv(b, e);
                            if (delta(b, e))
                                rhs += Gv(a, c);
                            if (delta(b, c))
                                rhs -= Gv(a, e);
                            if (delta(a, e))
                                rhs -= Gv(b, c);
                            res.expect_zero(lhs - Scalar::i() * rhs,
                                            "so(p) bracket [(ab),(ce)] on " + ket_str(par, ket));
                        }
                }
        }
    }
    return res;
}

/// Shell-by-shell equality of {v : Qv = Ev} and the vacuum subspace, with
/// mutual containment by exact elimination.
inline SuiteResult verify_lemma1(const ModelParams &par, int max_degree,
                                 unsigned long long capacity = default_capacity())
{
    SuiteResult res{"lemma1"};
    for (int d = 0; d <= max_degree; ++d) {
        auto qe = q_equals_e_subspace(par, d, capacity);
        auto v0 = vacuum_subspace(par, d, capacity);
        res.expect(qe.size() == v0.size(),
                   "dim {Qv=Ev} = " + std::to_string(qe.size()) + " vs dim V0 = " +
                       std::to_string(v0.size()) + " at degree " + std::to_string(d));
        res.expect(same_span(qe, v0), "subspace mismatch at degree " + std::to_string(d));
    }
    return res;
}

/// Joint lw/hw table: every weight-pair group at most one-dimensional, every
/// signature pair satisfying the correspondence (both checked inside
/// joint_lw_hw_table; violations arrive as exceptions).
inline SuiteResult verify_theorem1(const ModelParams &par, int max_degree,
                                   unsigned long long capacity = default_capacity())
{
    SuiteResult res{"theorem1"};
    try {
        DecompositionReport report = joint_lw_hw_table(par, max_degree, capacity);
        res.checks += static_cast<long long>(report.rows.size());
        res.expect(!report.rows.empty() || max_degree < 0, "table is unexpectedly empty");
    } catch (const theorem_violation_error &e) {
        res.failures.push_back(e.what());
    }
    return res;
}

/// Lemma 3 vectors: the closed-form vector reproduces every kernel vector of
/// the table (same normalization), and is annihilated by all b_alpha and all
/// positive gauge roots.
inline SuiteResult verify_lemma3_vectors(const ModelParams &par, int max_degree,
                                         unsigned long long capacity = default_capacity())
{
    SuiteResult res{"lemma3"};
    DecompositionReport report = joint_lw_hw_table(par, max_degree, capacity);
    for (const ReportRow &row : report.rows) {
        State built = build_lwhw_vector(par, row.osp);
        res.expect(built == row.vector,
                   "closed form differs from the kernel vector for " + row.osp.str());
        for (int alpha = 1; alpha <= par.n; ++alpha)
            res.expect_zero(apply_annihilator(alpha, built),
                            "b_" + std::to_string(alpha) + " on lw vector " + row.osp.str());
        for (const GaugeRootLabel &r : GaugeRootLabel::positive(par))
            res.expect_zero(apply_gauge_root(r, built),
                            r.str() + " on lw vector " + row.osp.str());
    }
    res.expect(!report.rows.empty(), "no rows to check");
    return res;
}

/// Corollary of the uniqueness theorem: counted multiplicity equals the
/// gauge irrep dimension on every row.
inline SuiteResult verify_corollary1(const ModelParams &par, int max_degree,
                                     unsigned long long capacity = default_capacity())
{
    SuiteResult res{"corollary1"};
    for (const MultiplicityRow &row : multiplicity_check(par, max_degree, capacity))
        res.expect(row.claimed == row.counted,
                   "multiplicity mismatch for " + row.osp.str() + ": claimed " +
                       std::to_string(row.claimed) + ", counted " + std::to_string(row.counted));
    return res;
}

/// Even-subalgebra branching: every spin-orbit component found at degrees
/// <= max_degree hosts an sp(2n) lowest-weight vector, and every orbital hw
/// obeys the <= n nonzero-entry bound (checked inside the calls).
inline SuiteResult verify_theorem2(const ModelParams &par, int max_degree,
                                   unsigned long long capacity = default_capacity())
{
    SuiteResult res{"theorem2"};
    for (int d = 0; d <= max_degree; ++d) {
        // gauge types present at this degree
        std::set<WeightVector> mus;
        std::vector<State> shell;
        for (const BasisKet &k : enumerate_level(par, d, capacity))
            shell.push_back(State::ket(par, k));
        for (const auto &[w, v] : gauge_hw_vectors(par, shell))
            mus.insert(w);
        for (const WeightVector &mu : mus) {
            try {
                auto recs = sp_lowest_weights(par, d, mu, capacity);
                res.checks += static_cast<long long>(recs.size());
                for (const auto &rec : recs) {
                    res.expect(rec.degree <= d, "witness above the probed degree");
                    // the witness is genuinely sp-lowest
                    for (int a = 1; a <= par.n; ++a)
                        for (int b = a; b <= par.n; ++b)
                            res.expect_zero(
                                apply_even(EvenOpLabel::annih_annih(a, b), rec.vector),
                                "sp lowering {b,b} on witness at degree " + std::to_string(d));
                    for (int a = 1; a <= par.n; ++a)
                        for (int b = a + 1; b <= par.n; ++b)
                            res.expect_zero(
                                apply_even(EvenOpLabel::create_annih(b, a), rec.vector),
                                "sp lowering {bd,b} on witness at degree " + std::to_string(d));
                }
            } catch (const theorem_violation_error &e) {
                res.failures.push_back(e.what());
            }
        }
    }
    return res;
}

/// Realizable signature tuples (s_0, s_1, ..., s_{n-1}) read off the joint
/// table up to the given lw degree.
inline std::set<std::vector<long long>> realizable_signatures(const ModelParams &par,
                                                              int max_degree,
                                                              unsigned long long capacity =
                                                                  default_capacity())
{
    std::set<std::vector<long long>> out;
    DecompositionReport report = joint_lw_hw_table(par, max_degree, capacity);
    for (const ReportRow &row : report.rows) {
        std::vector<long long> tuple;
        tuple.push_back((row.osp.d - HalfInt(par.p)).as_int());
        for (long long s : row.osp.s)
            tuple.push_back(s);
        out.insert(std::move(tuple));
    }
    return out;
}

/**
 * Stabilization of the realizable-signature set: between two orders of the
 * same parity with q >= n, the (s_0..s_{n-1}) tuples agree on the common
 * window, no new tuples appear at the higher order, and each set matches
 * what the correspondence formula predicts for its scanned degrees.
 */
inline SuiteResult verify_stabilization(int n, int p_low, int p_high, HalfInt energy_cutoff,
                                        unsigned long long capacity = default_capacity())
{
    SuiteResult res{"stabilization"};
    auto scan = [&](int p) {
        ModelParams par(n, p);
        // lw degree cutoff from the energy cutoff: E = np/2 + d
        long long dmax = (energy_cutoff.twice - static_cast<long long>(n) * p) / 2;
        return std::make_pair(realizable_signatures(par, static_cast<int>(std::max(0LL, dmax)),
                                                    capacity),
                              dmax);
    };
    auto [low_set, low_dmax] = scan(p_low);
    auto [high_set, high_dmax] = scan(p_high);
    for (const auto &tuple : high_set)
        res.expect(low_set.count(tuple) != 0,
                   "signature realizable at p=" + std::to_string(p_high) +
                       " missing at p=" + std::to_string(p_low));
    // agreement on the common window: tuples with total lw degree <= high_dmax
    for (const auto &tuple : low_set) {
        long long degree = 0;
        for (size_t j = 0; j < tuple.size(); ++j)
            degree += static_cast<long long>(tuple.size() - j) * tuple[j];
        if (degree <= high_dmax)
            res.expect(high_set.count(tuple) != 0,
                       "signature in the common window missing at p=" + std::to_string(p_high));
    }
    // formula prediction: q >= n makes every tuple of the window realizable
    for (int p : {p_low, p_high}) {
        ModelParams par(n, p);
        if (par.q() < n)
            continue;
        auto [set, dmax] = scan(p);
        long long count = 0;
        // enumerate all tuples with weighted degree <= dmax
        std::vector<long long> tuple(n, 0);
        auto rec = [&](auto &&self, int idx, long long left) -> void {
            if (idx == n) {
                ++count;
                res.expect(set.count(tuple) != 0, "predicted signature not realized at p=" +
                                                      std::to_string(p));
                return;
            }
            long long wgt = n - idx;
            for (long long v = 0; v * wgt <= left; ++v) {
                tuple[idx] = v;
                self(self, idx + 1, left - v * wgt);
            }
            tuple[idx] = 0;
        };
        if (dmax >= 0)
            rec(rec, 0, dmax);
        res.expect(static_cast<long long>(set.size()) == count,
                   "extra unpredicted signatures at p=" + std::to_string(p));
    }
    return res;
}

/// Noncovariant-map checks: word-order sign flip, norm preservation, and
/// gauge decomposability of a two-letter word image.
inline SuiteResult verify_noncovariant(const ModelParams &par)
{
    SuiteResult res{"noncovariant"};
    if (par.p < 2) {
        res.expect(false, "needs p >= 2");
        return res;
    }
    uint32_t all_up = ~0u;
    State ab = from_noncovariant(par, {{1, 1}, {1, 2}}, all_up);
    State ba = from_noncovariant(par, {{1, 2}, {1, 1}}, all_up);
    res.expect_zero(ab + ba, "word-order sign flip");
    res.expect(!ab.is_zero(), "two-letter word image vanished");
    State single = from_noncovariant(par, {{1, 1}}, all_up);
    res.expect(inner_product(single, single) == Scalar::one(), "norm preservation");
    // gauge-decomposability of the image: split by gauge weight; each part
    // must be a valid spinorial weight vector, and the components of each
    // realized hw type at this degree must list without error
    std::map<WeightVector, State> by_weight;
    for (const auto &[ket, coef] : ab.terms)
        by_weight.try_emplace(gauge_weight(par, ket), State(par)).first->second.add(ket, coef);
    State reassembled(par);
    for (auto &[w, part] : by_weight) {
        for (const HalfInt &x : w)
            res.expect(!x.is_integer(), "gauge weight must be spinorial");
        reassembled += part;
    }
    res.expect(reassembled == ab, "weight decomposition reassembly");
    std::vector<State> shell;
    for (const BasisKet &k : enumerate_level(par, grade(ab)))
        shell.push_back(State::ket(par, k));
    for (const auto &[w, v] : gauge_hw_vectors(par, shell)) {
        auto comps = spin_orbit_components(par, grade(ab), w);
        res.expect(!comps.empty(), "no spin-orbit components for hw type " + weight_str(w));
    }
    return res;
}

} // namespace parabose
