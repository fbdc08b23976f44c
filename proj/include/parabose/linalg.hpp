#pragma once

#include "fock.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace parabose {

/// Sparse row over integer-indexed columns, kept sorted by column.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/**
 * Incremental exact Gaussian elimination over the Scalar field, kept in
 * reduced form: every pivot row is normalized to pivot coefficient 1 and
 * contains no other pivot column. Pivot columns are chosen sparsity-greedily
 * (least-used column first) to limit fill-in.
 */
class ExactElimination
{
public:
    /// Reduces a row against the current pivots; result is sorted and
    /// pivot-column free.
    SparseRow reduce(const SparseRow &row) const
    {
        std::map<int, Scalar> acc(row.begin(), row.end());
        std::vector<std::pair<int, Scalar>> hits;
        for (const auto &[col, coef] : acc)
            if (pivots_.count(col))
                hits.emplace_back(col, coef);
        for (const auto &[col, coef] : hits) {
            acc.erase(col);
            const SparseRow &prow = pivots_.at(col);
            for (const auto &[c2, v2] : prow) {
                if (c2 == col)
                    continue;
                auto it = acc.find(c2);
                if (it == acc.end()) {
                    Scalar nv = -(coef * v2);
                    if (!nv.is_zero())
                        acc.emplace(c2, std::move(nv));
                } else {
                    it->second -= coef * v2;
                    if (it->second.is_zero())
                        acc.erase(it);
                }
            }
        }
        return SparseRow(acc.begin(), acc.end());
    }

    /// Reduces and, if independent, installs the row. Returns true when the
    /// rank grew.
    bool add_row(const SparseRow &row)
    {
        SparseRow red = reduce(row);
        if (red.empty())
            return false;
        // sparsity-greedy pivot: the least-used column
        int pivot = red.front().first;
        long long best = use_count(pivot);
        for (const auto &[col, coef] : red) {
            long long u = use_count(col);
            if (u < best) {
                best = u;
                pivot = col;
            }
        }
        Scalar lead;
        for (const auto &[col, coef] : red)
            if (col == pivot)
                lead = coef;
        Scalar inv = lead.inv();
        SparseRow norm;
        norm.reserve(red.size());
        for (const auto &[col, coef] : red)
            norm.emplace_back(col, col == pivot ? Scalar::one() : coef * inv);
        // eliminate the new pivot column from the existing pivot rows
        for (auto &[pc, prow] : pivots_) {
            Scalar hit;
            bool found = false;
            for (const auto &[col, coef] : prow)
                if (col == pivot) {
                    hit = coef;
                    found = true;
                    break;
                }
            if (!found)
                continue;
            std::map<int, Scalar> acc(prow.begin(), prow.end());
            acc.erase(pivot);
            for (const auto &[c2, v2] : norm) {
                if (c2 == pivot)
                    continue;
                auto it = acc.find(c2);
                if (it == acc.end()) {
                    Scalar nv = -(hit * v2);
                    if (!nv.is_zero())
                        acc.emplace(c2, std::move(nv));
                } else {
                    it->second -= hit * v2;
                    if (it->second.is_zero())
                        acc.erase(it);
                }
            }
            for (const auto &[c2, v2] : prow)
                col_use_[c2]--;
            prow = SparseRow(acc.begin(), acc.end());
            for (const auto &[c2, v2] : prow)
                col_use_[c2]++;
        }
        for (const auto &[c2, v2] : norm)
            col_use_[c2]++;
        pivots_.emplace(pivot, std::move(norm));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    bool is_pivot(int col) const { return pivots_.count(col) != 0; }

    /// Kernel basis of the row system over columns 0..ncols-1: one vector per
    /// free column.
    std::vector<std::map<int, Scalar>> nullspace(int ncols) const
    {
        std::vector<std::map<int, Scalar>> out;
        for (int f = 0; f < ncols; ++f) {
            if (pivots_.count(f))
                continue;
            std::map<int, Scalar> vec;
            vec.emplace(f, Scalar::one());
            for (const auto &[pc, prow] : pivots_)
                for (const auto &[col, coef] : prow)
                    if (col == f)
                        vec.emplace(pc, -coef);
            out.push_back(std::move(vec));
        }
        return out;
    }

private:
    long long use_count(int col) const
    {
        auto it = col_use_.find(col);
        return it == col_use_.end() ? 0 : it->second;
    }

    std::map<int, SparseRow> pivots_; // pivot column -> normalized row
    std::map<int, long long> col_use_;
};

/// Row space of States over ket-indexed columns; answers span-membership and
/// dimension queries.
class StateSpan
{
public:
    /// Adds a state to the span; returns true if the dimension grew.
    bool add(const State &v)
    {
        SparseRow row;
        row.reserve(v.terms.size());
        for (const auto &[ket, coef] : v.terms)
            row.emplace_back(col_of(ket), coef);
        std::sort(row.begin(), row.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        return elim_.add_row(row);
    }

    bool contains(const State &v) const
    {
        SparseRow row;
        row.reserve(v.terms.size());
        for (const auto &[ket, coef] : v.terms) {
            auto it = index_.find(ket);
            if (it == index_.end())
                return false; // touches a ket outside the span's support
            row.emplace_back(it->second, coef);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        return elim_.reduce(row).empty();
    }

    int dim() const { return elim_.rank(); }

private:
    int col_of(const BasisKet &ket)
    {
        auto [it, inserted] = index_.emplace(ket, static_cast<int>(index_.size()));
        return it->second;
    }

    std::map<BasisKet, int> index_;
    mutable ExactElimination elim_;
};

/// True when the two collections span the same subspace.
inline bool same_span(const std::vector<State> &a, const std::vector<State> &b)
{
    StateSpan sa, sb;
    int da = 0, db = 0;
    for (const auto &v : a)
        da += sa.add(v) ? 1 : 0;
    for (const auto &v : b)
        db += sb.add(v) ? 1 : 0;
    if (da != db)
        return false;
    for (const auto &v : a)
        if (!sb.contains(v))
            return false;
    for (const auto &v : b)
        if (!sa.contains(v))
            return false;
    return true;
}

using StateOp = std::function<State(const State &)>;

/// Scales a nonzero state so its first ket (in canonical order) has
/// coefficient +1.
inline State normalize_leading(State v)
{
    if (v.terms.empty())
        return v;
    Scalar inv = v.terms.begin()->second.inv();
    for (auto &[ket, coef] : v.terms)
        coef *= inv;
    return v;
}

/**
 * Exact joint kernel of a family of operators restricted to the span of the
 * given (independent) basis states. Returns kernel vectors as normalized
 * linear combinations of the basis.
 */
inline std::vector<State> operator_kernel(const std::vector<StateOp> &ops,
                                          const std::vector<State> &basis)
{
    if (basis.empty())
        return {};
    const ModelParams &par = basis.front().params;
    // rows are indexed by (operator, output ket); columns by basis element
    std::map<std::pair<int, BasisKet>, std::map<int, Scalar>> rows;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        for (int o = 0; o < static_cast<int>(ops.size()); ++o) {
            State w = ops[o](basis[j]);
            for (const auto &[ket, coef] : w.terms) {
                auto &row = rows[{o, ket}];
                auto [it, inserted] = row.emplace(j, coef);
                if (!inserted) {
                    it->second += coef;
                    if (it->second.is_zero())
                        row.erase(it);
                }
            }
        }
    }
    ExactElimination elim;
    // feed shortest equations first
    std::vector<const std::map<int, Scalar> *> ordered;
    ordered.reserve(rows.size());
    for (const auto &[key, row] : rows)
        if (!row.empty())
            ordered.push_back(&row);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto *a, const auto *b) { return a->size() < b->size(); });
    for (const auto *row : ordered)
        elim.add_row(SparseRow(row->begin(), row->end()));
    std::vector<State> out;
    for (const auto &combo : elim.nullspace(static_cast<int>(basis.size()))) {
        State v(par);
        for (const auto &[j, coef] : combo)
            v.add_scaled(basis[j], coef);
        if (!v.is_zero())
            out.push_back(normalize_leading(std::move(v)));
    }
    return out;
}

} // namespace parabose
