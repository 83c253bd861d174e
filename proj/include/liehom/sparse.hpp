#pragma once

#include "liehom/errors.hpp"
#include "liehom/field.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace liehom {

/// Coordinate vector stored as (index, value) pairs with strictly increasing
/// indices and no stored zeros. Values of both field types default-construct to 0.
template <Field F>
class SparseVector {
public:
    using value_type = typename F::value_type;
    using Entry = std::pair<std::size_t, value_type>;

    SparseVector() = default;

    static SparseVector unit(const F& field, std::size_t i)
    {
        SparseVector v;
        v.entries_.emplace_back(i, field.one());
        return v;
    }

    /// Builds from a dense coordinate list, dropping zeros.
    static SparseVector from_dense(const std::vector<value_type>& dense)
    {
        SparseVector v;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (!is_zero_value(dense[i])) v.entries_.emplace_back(i, dense[i]);
        return v;
    }

    static SparseVector from_ints(const F& field, const std::vector<long long>& dense)
    {
        SparseVector v;
        for (std::size_t i = 0; i < dense.size(); ++i) {
            auto x = field.from_int(dense[i]);
            if (!is_zero_value(x)) v.entries_.emplace_back(i, std::move(x));
        }
        return v;
    }

    /// Appends an entry; indices must be pushed in increasing order. Zeros are skipped.
    void push_back(std::size_t i, value_type v)
    {
        if (is_zero_value(v)) return;
        if (!entries_.empty() && entries_.back().first >= i)
            throw std::logic_error("SparseVector::push_back: indices out of order");
        entries_.emplace_back(i, std::move(v));
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    std::size_t leading() const { return entries_.front().first; }
    const value_type& leading_value() const { return entries_.front().second; }

    /// One past the largest stored index (0 for the zero vector).
    std::size_t support_bound() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

    value_type coeff(std::size_t i) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it != entries_.end() && it->first == i) return it->second;
        return value_type{};
    }

    std::vector<value_type> to_dense(std::size_t n) const
    {
        std::vector<value_type> out(n);
        for (const auto& [i, v] : entries_) {
            if (i >= n) throw DimensionError("to_dense: index out of range");
            out[i] = v;
        }
        return out;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries_ == b.entries_; }

    static bool is_zero_value(const value_type& v) { return v == value_type{}; }

private:
    std::vector<Entry> entries_;
};

/// y + c*x
template <Field F>
SparseVector<F> axpy(const F& field, const SparseVector<F>& y, const typename F::value_type& c, const SparseVector<F>& x)
{
    SparseVector<F> out;
    if (SparseVector<F>::is_zero_value(c)) return y;
    const auto& ye = y.entries();
    const auto& xe = x.entries();
    std::size_t a = 0, b = 0;
    while (a < ye.size() || b < xe.size()) {
        if (b == xe.size() || (a < ye.size() && ye[a].first < xe[b].first)) {
            out.push_back(ye[a].first, ye[a].second);
            ++a;
        } else if (a == ye.size() || xe[b].first < ye[a].first) {
            out.push_back(xe[b].first, field.mul(c, xe[b].second));
            ++b;
        } else {
            auto v = ye[a].second;
            field.fma(v, c, xe[b].second);
            out.push_back(ye[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

template <Field F>
SparseVector<F> add(const F& field, const SparseVector<F>& x, const SparseVector<F>& y)
{
    return axpy(field, x, field.one(), y);
}

template <Field F>
SparseVector<F> sub(const F& field, const SparseVector<F>& x, const SparseVector<F>& y)
{
    return axpy(field, x, field.neg(field.one()), y);
}

template <Field F>
SparseVector<F> scale(const F& field, const SparseVector<F>& x, const typename F::value_type& c)
{
    SparseVector<F> out;
    if (SparseVector<F>::is_zero_value(c)) return out;
    for (const auto& [i, v] : x.entries()) out.push_back(i, field.mul(c, v));
    return out;
}

/// Shifts every index by `offset` (used to place a vector into a direct sum).
template <Field F>
SparseVector<F> shifted(const SparseVector<F>& x, std::size_t offset)
{
    SparseVector<F> out;
    for (const auto& [i, v] : x.entries()) out.push_back(i + offset, v);
    return out;
}

/// Dense scratch buffer for summing many sparse terms into one vector.
template <Field F>
class Accumulator {
public:
    using value_type = typename F::value_type;

    Accumulator(F field, std::size_t dim) : field_(std::move(field)), values_(dim), touched_(dim, false) {}

    std::size_t dim() const { return values_.size(); }

    void add(std::size_t i, const value_type& c)
    {
        if (i >= values_.size()) throw DimensionError("Accumulator: index out of range");
        if (!touched_[i]) {
            touched_[i] = true;
            touched_list_.push_back(i);
        }
        values_[i] = field_.add(values_[i], c);
    }

    /// this += c * x
    void add(const SparseVector<F>& x, const value_type& c)
    {
        for (const auto& [i, v] : x.entries()) add(i, field_.mul(c, v));
    }

    /// Returns the accumulated vector and resets the buffer.
    SparseVector<F> take()
    {
        std::sort(touched_list_.begin(), touched_list_.end());
        SparseVector<F> out;
        for (std::size_t i : touched_list_) {
            out.push_back(i, std::move(values_[i]));
            values_[i] = value_type{};
            touched_[i] = false;
        }
        touched_list_.clear();
        return out;
    }

private:
    F field_;
    std::vector<value_type> values_;
    std::vector<bool> touched_;
    std::vector<std::size_t> touched_list_;
};

/// Row-major sparse matrix.
template <Field F>
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    SparseMatrix(std::size_t cols, std::vector<SparseVector<F>> rows) : cols_(cols), rows_(std::move(rows))
    {
        for (const auto& r : rows_)
            if (r.support_bound() > cols_) throw DimensionError("SparseMatrix: row entry beyond column count");
    }

    static SparseMatrix from_ints(const F& field, const std::vector<std::vector<long long>>& dense)
    {
        std::size_t cols = dense.empty() ? 0 : dense.front().size();
        std::vector<SparseVector<F>> rows;
        for (const auto& r : dense) {
            if (r.size() != cols) throw DimensionError("SparseMatrix::from_ints: ragged rows");
            rows.push_back(SparseVector<F>::from_ints(field, r));
        }
        return SparseMatrix(cols, std::move(rows));
    }

    static SparseMatrix identity(const F& field, std::size_t n)
    {
        std::vector<SparseVector<F>> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(SparseVector<F>::unit(field, i));
        return SparseMatrix(n, std::move(rows));
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVector<F>& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<SparseVector<F>>& row_list() const { return rows_; }

    typename F::value_type at(std::size_t r, std::size_t c) const { return rows_.at(r).coeff(c); }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.nnz();
        return n;
    }

    SparseMatrix transposed() const
    {
        std::vector<std::vector<typename SparseVector<F>::Entry>> cols(cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
        std::vector<SparseVector<F>> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (auto& [r, v] : cols[c]) out[c].push_back(r, std::move(v));
        return SparseMatrix(rows_.size(), std::move(out));
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_;
    std::vector<SparseVector<F>> rows_;
};

template <Field F>
struct RrefResult {
    SparseMatrix<F> echelon; ///< nonzero rows only, pivots increasing
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
/// Pivot column is always the smallest available; among rows leading there the
/// sparsest one is used, which keeps rational fill-in down.
template <Field F>
RrefResult<F> rref(const F& field, const SparseMatrix<F>& m)
{
    std::vector<SparseVector<F>> pending;
    for (const auto& r : m.row_list())
        if (!r.is_zero()) pending.push_back(r);

    std::vector<SparseVector<F>> done;
    std::vector<std::size_t> pivots;
    while (!pending.empty()) {
        std::size_t col = pending.front().leading();
        for (const auto& r : pending) col = std::min(col, r.leading());

        std::size_t best = pending.size();
        for (std::size_t i = 0; i < pending.size(); ++i)
            if (pending[i].leading() == col && (best == pending.size() || pending[i].nnz() < pending[best].nnz()))
                best = i;
        SparseVector<F> pivot_row = scale(field, pending[best], field.inv(pending[best].leading_value()));
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        std::vector<SparseVector<F>> next;
        next.reserve(pending.size());
        for (auto& r : pending) {
            if (r.leading() == col) {
                auto reduced = axpy(field, r, field.neg(r.leading_value()), pivot_row);
                if (!reduced.is_zero()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(r));
            }
        }
        pending = std::move(next);
        for (auto& r : done) {
            auto c = r.coeff(col);
            if (!SparseVector<F>::is_zero_value(c)) r = axpy(field, r, field.neg(c), pivot_row);
        }
        done.push_back(std::move(pivot_row));
        pivots.push_back(col);
    }
    std::size_t rank = done.size();
    return {SparseMatrix<F>(m.cols(), std::move(done)), rank, std::move(pivots)};
}

} // namespace liehom
