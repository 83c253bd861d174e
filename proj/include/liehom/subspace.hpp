#pragma once

#include "liehom/sparse.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace liehom {

/// Incremental row-reduction: keeps a fully reduced echelon basis and grows it
/// one vector at a time.
template <Field F>
class EchelonBuilder {
public:
    EchelonBuilder(F field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient), row_of_pivot_(ambient, npos), acc_(field_, ambient)
    {
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    /// Subtracts the basis component at every pivot column.
    SparseVector<F> reduce(const SparseVector<F>& v)
    {
        if (v.support_bound() > ambient_) throw DimensionError("EchelonBuilder::reduce: vector outside ambient space");
        bool touches = false;
        for (const auto& [i, c] : v.entries())
            if (row_of_pivot_[i] != npos) {
                touches = true;
                break;
            }
        if (!touches) return v;
        acc_.add(v, field_.one());
        // Rows are zero at every other pivot, so v's pivot coefficients stay fixed.
        for (const auto& [i, c] : v.entries())
            if (row_of_pivot_[i] != npos) acc_.add(rows_[row_of_pivot_[i]], field_.neg(c));
        return acc_.take();
    }

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(const SparseVector<F>& v)
    {
        auto r = reduce(v);
        if (r.is_zero()) return false;
        std::size_t p = r.leading();
        r = scale(field_, r, field_.inv(r.leading_value()));
        for (auto& row : rows_) {
            auto c = row.coeff(p);
            if (!SparseVector<F>::is_zero_value(c)) row = axpy(field_, row, field_.neg(c), r);
        }
        row_of_pivot_[p] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

    /// Rows sorted by pivot.
    std::vector<SparseVector<F>> rows() const
    {
        std::vector<SparseVector<F>> out;
        for (std::size_t p = 0; p < ambient_; ++p)
            if (row_of_pivot_[p] != npos) out.push_back(rows_[row_of_pivot_[p]]);
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    F field_;
    std::size_t ambient_;
    std::vector<SparseVector<F>> rows_;
    std::vector<std::size_t> row_of_pivot_;
    Accumulator<F> acc_;
};

/// A subspace of F^n held as its unique reduced row-echelon basis.
template <Field F>
class Subspace {
public:
    Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    static Subspace zero(const F& field, std::size_t ambient) { return Subspace(field, ambient); }

    static Subspace full(const F& field, std::size_t ambient)
    {
        std::vector<SparseVector<F>> rows;
        for (std::size_t i = 0; i < ambient; ++i) rows.push_back(SparseVector<F>::unit(field, i));
        return from_echelon(field, ambient, std::move(rows));
    }

    /// Span of arbitrary vectors.
    static Subspace span(const F& field, std::size_t ambient, const std::vector<SparseVector<F>>& vectors)
    {
        EchelonBuilder<F> builder(field, ambient);
        for (const auto& v : vectors) {
            if (builder.dim() == ambient) break;
            builder.insert(v);
        }
        return from_echelon(field, ambient, builder.rows());
    }

    /// Trusts that rows are already in reduced echelon form.
    static Subspace from_echelon(const F& field, std::size_t ambient, std::vector<SparseVector<F>> rows)
    {
        Subspace s(field, ambient);
        for (const auto& r : rows) {
            if (r.support_bound() > ambient) throw DimensionError("Subspace: basis vector outside ambient space");
            s.pivots_.push_back(r.leading());
        }
        s.rows_ = std::move(rows);
        return s;
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVector<F>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates not used as pivots, ascending.
    std::vector<std::size_t> free_columns() const
    {
        std::vector<std::size_t> out;
        std::size_t k = 0;
        for (std::size_t i = 0; i < ambient_; ++i) {
            if (k < pivots_.size() && pivots_[k] == i) {
                ++k;
                continue;
            }
            out.push_back(i);
        }
        return out;
    }

    /// Canonical representative of v modulo this subspace: zero at all pivots.
    SparseVector<F> reduce(const SparseVector<F>& v) const
    {
        if (v.support_bound() > ambient_) throw DimensionError("Subspace::reduce: vector outside ambient space");
        if (pivots_.empty()) return v;
        Accumulator<F> acc(field_, ambient_);
        acc.add(v, field_.one());
        std::size_t k = 0;
        for (const auto& [i, c] : v.entries()) {
            while (k < pivots_.size() && pivots_[k] < i) ++k;
            if (k < pivots_.size() && pivots_[k] == i) acc.add(rows_[k], field_.neg(c));
        }
        return acc.take();
    }

    bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

    bool contains(const Subspace& other) const
    {
        check_ambient(other, "contains");
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    /// Coefficients of v in the echelon basis (v must lie in the subspace).
    std::vector<typename F::value_type> coordinates(const SparseVector<F>& v) const
    {
        if (!contains(v)) throw PreconditionError("Subspace::coordinates: vector not in subspace");
        std::vector<typename F::value_type> out;
        for (std::size_t p : pivots_) out.push_back(v.coeff(p));
        return out;
    }

    Subspace sum(const Subspace& other) const
    {
        check_ambient(other, "sum");
        std::vector<SparseVector<F>> all = rows_;
        all.insert(all.end(), other.rows_.begin(), other.rows_.end());
        return span(field_, ambient_, all);
    }

    /// Solves sum a_i u_i + sum b_j w_j = 0 and maps the solutions through the u-part.
    Subspace intersection(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    void check_ambient(const Subspace& other, const char* op) const
    {
        if (other.ambient_ != ambient_)
            throw DimensionError(std::string("Subspace::") + op + ": ambient dimensions " + std::to_string(ambient_) +
                                 " and " + std::to_string(other.ambient_) + " differ");
    }

    F field_;
    std::size_t ambient_;
    std::vector<SparseVector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
template <Field F>
Subspace<F> kernel(const F& field, const SparseMatrix<F>& m)
{
    auto r = rref(field, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    // Column f of the echelon form, read down the pivot rows.
    std::vector<std::vector<std::pair<std::size_t, typename F::value_type>>> column(m.cols());
    for (std::size_t k = 0; k < r.rank; ++k)
        for (const auto& [c, v] : r.echelon.row(k).entries())
            if (!is_pivot[c]) column[c].emplace_back(r.pivots[k], v);

    std::vector<SparseVector<F>> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Accumulator<F> acc(field, m.cols());
        acc.add(f, field.one());
        for (const auto& [p, v] : column[f]) acc.add(p, field.neg(v));
        vectors.push_back(acc.take());
    }
    return Subspace<F>::span(field, m.cols(), vectors);
}

template <Field F>
Subspace<F> Subspace<F>::intersection(const Subspace& other) const
{
    check_ambient(other, "intersection");
    const std::size_t du = dim(), dw = other.dim();
    // Relation matrix: columns are u_1..u_du, w_1..w_dw; rows are ambient coordinates.
    std::vector<std::vector<typename SparseVector<F>::Entry>> rows(ambient_);
    for (std::size_t a = 0; a < du; ++a)
        for (const auto& [i, v] : rows_[a].entries()) rows[i].emplace_back(a, v);
    for (std::size_t b = 0; b < dw; ++b)
        for (const auto& [i, v] : other.rows_[b].entries()) rows[i].emplace_back(du + b, v);
    std::vector<SparseVector<F>> sparse_rows(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i)
        for (auto& [c, v] : rows[i]) sparse_rows[i].push_back(c, std::move(v));
    auto relations = kernel(field_, SparseMatrix<F>(du + dw, std::move(sparse_rows)));

    std::vector<SparseVector<F>> vectors;
    for (const auto& rel : relations.basis()) {
        Accumulator<F> acc(field_, ambient_);
        for (const auto& [a, c] : rel.entries()) {
            if (a >= du) break;
            acc.add(rows_[a], c);
        }
        vectors.push_back(acc.take());
    }
    return span(field_, ambient_, vectors);
}

/// F^n / D with canonical coset representatives (zero at the pivots of D).
template <Field F>
class QuotientSpace {
public:
    QuotientSpace(std::size_t ambient, Subspace<F> denominator)
        : ambient_(ambient), denominator_(std::move(denominator)), free_(denominator_.free_columns()),
          position_(ambient, npos)
    {
        if (denominator_.ambient_dim() != ambient)
            throw DimensionError("QuotientSpace: denominator lives in dimension " +
                                 std::to_string(denominator_.ambient_dim()) + ", ambient is " + std::to_string(ambient));
        for (std::size_t k = 0; k < free_.size(); ++k) position_[free_[k]] = k;
    }

    const F& field() const { return denominator_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }
    const Subspace<F>& denominator() const { return denominator_; }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    SparseVector<F> reduce(const SparseVector<F>& v) const { return denominator_.reduce(v); }

    /// Coordinates of the class of v in the basis {class of e_f : f free}.
    SparseVector<F> coords(const SparseVector<F>& v) const
    {
        SparseVector<F> out;
        const auto r = reduce(v);
        for (const auto& [i, c] : r.entries()) out.push_back(position_[i], c);
        return out;
    }

    /// Canonical representative of the k-th quotient basis vector.
    SparseVector<F> lift(std::size_t k) const { return SparseVector<F>::unit(field(), free_.at(k)); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t ambient_;
    Subspace<F> denominator_;
    std::vector<std::size_t> free_;
    std::vector<std::size_t> position_;
};

template <Field F>
QuotientSpace<F> quotient(std::size_t ambient, const Subspace<F>& denominator)
{
    return QuotientSpace<F>(ambient, denominator);
}

/// N / D for subspaces D ⊆ N of one ambient space. The basis of the quotient is
/// the echelon basis of the D-reduced part of N, so representatives are canonical.
template <Field F>
class Subquotient {
public:
    Subquotient(Subspace<F> numerator, Subspace<F> denominator)
        : numerator_(std::move(numerator)), denominator_(std::move(denominator)),
          representatives_(numerator_.field(), numerator_.ambient_dim())
    {
        if (numerator_.ambient_dim() != denominator_.ambient_dim())
            throw DimensionError("Subquotient: ambient mismatch");
        if (!numerator_.contains(denominator_))
            throw PreconditionError("Subquotient: denominator is not contained in numerator");
        std::vector<SparseVector<F>> reduced;
        for (const auto& r : numerator_.basis()) reduced.push_back(denominator_.reduce(r));
        representatives_ = Subspace<F>::span(numerator_.field(), numerator_.ambient_dim(), reduced);
    }

    std::size_t dim() const { return representatives_.dim(); }
    const Subspace<F>& numerator() const { return numerator_; }
    const Subspace<F>& denominator() const { return denominator_; }
    const std::vector<SparseVector<F>>& representatives() const { return representatives_.basis(); }

    /// Coordinates of the class of v ∈ N in the representative basis.
    SparseVector<F> coords(const SparseVector<F>& v) const
    {
        if (!numerator_.contains(v)) throw PreconditionError("Subquotient::coords: vector not in numerator");
        auto r = denominator_.reduce(v);
        SparseVector<F> out;
        const auto& piv = representatives_.pivots();
        for (std::size_t k = 0; k < piv.size(); ++k) out.push_back(k, r.coeff(piv[k]));
        return out;
    }

private:
    Subspace<F> numerator_;
    Subspace<F> denominator_;
    Subspace<F> representatives_;
};

/// Linear map F^domain -> F^codomain stored as the images of the domain basis.
template <Field F>
class LinearMap {
public:
    LinearMap(F field, std::size_t domain, std::size_t codomain, std::vector<SparseVector<F>> columns)
        : field_(std::move(field)), domain_(domain), codomain_(codomain), columns_(std::move(columns))
    {
        if (columns_.size() != domain_) throw DimensionError("LinearMap: column count differs from domain dimension");
        for (const auto& c : columns_)
            if (c.support_bound() > codomain_) throw DimensionError("LinearMap: image outside codomain");
    }

    const F& field() const { return field_; }
    std::size_t domain_dim() const { return domain_; }
    std::size_t codomain_dim() const { return codomain_; }
    const SparseVector<F>& column(std::size_t j) const { return columns_.at(j); }
    const std::vector<SparseVector<F>>& columns() const { return columns_; }

    SparseVector<F> apply(const SparseVector<F>& v) const
    {
        if (v.support_bound() > domain_) throw DimensionError("LinearMap::apply: vector outside domain");
        Accumulator<F> acc(field_, codomain_);
        for (const auto& [j, c] : v.entries()) acc.add(columns_[j], c);
        return acc.take();
    }

    /// codomain x domain matrix.
    SparseMatrix<F> matrix() const { return SparseMatrix<F>(codomain_, columns_).transposed(); }

    Subspace<F> kernel() const { return liehom::kernel(field_, matrix()); }
    Subspace<F> image() const { return Subspace<F>::span(field_, codomain_, columns_); }
    std::size_t rank() const { return image().dim(); }

    Subspace<F> image_of(const Subspace<F>& s) const
    {
        if (s.ambient_dim() != domain_) throw DimensionError("LinearMap::image_of: subspace outside domain");
        std::vector<SparseVector<F>> out;
        for (const auto& b : s.basis()) out.push_back(apply(b));
        return Subspace<F>::span(field_, codomain_, out);
    }

    /// {v ∈ within : map(v) ∈ target}
    Subspace<F> preimage(const Subspace<F>& target, const Subspace<F>& within) const
    {
        if (target.ambient_dim() != codomain_ || within.ambient_dim() != domain_)
            throw DimensionError("LinearMap::preimage: dimension mismatch");
        std::vector<SparseVector<F>> cols;
        for (const auto& b : within.basis()) cols.push_back(target.reduce(apply(b)));
        LinearMap restricted(field_, within.dim(), codomain_, std::move(cols));
        std::vector<SparseVector<F>> vectors;
        const auto ker = restricted.kernel();
        for (const auto& k : ker.basis()) {
            Accumulator<F> acc(field_, domain_);
            for (const auto& [j, c] : k.entries()) acc.add(within.basis()[j], c);
            vectors.push_back(acc.take());
        }
        return Subspace<F>::span(field_, domain_, vectors);
    }

    /// this ∘ first
    LinearMap after(const LinearMap& first) const
    {
        if (first.codomain_ != domain_) throw DimensionError("LinearMap::after: dimension mismatch");
        std::vector<SparseVector<F>> cols;
        for (const auto& c : first.columns_) cols.push_back(apply(c));
        return LinearMap(field_, first.domain_, codomain_, std::move(cols));
    }

    /// v ↦ (this(v), other(v)) into the direct sum of codomains.
    LinearMap stacked_with(const LinearMap& other) const
    {
        if (other.domain_ != domain_) throw DimensionError("LinearMap::stacked_with: domain mismatch");
        std::vector<SparseVector<F>> cols;
        for (std::size_t j = 0; j < domain_; ++j)
            cols.push_back(add(field_, columns_[j], shifted(other.columns_[j], codomain_)));
        return LinearMap(field_, domain_, codomain_ + other.codomain_, std::move(cols));
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.is_zero(); });
    }

private:
    F field_;
    std::size_t domain_;
    std::size_t codomain_;
    std::vector<SparseVector<F>> columns_;
};

} // namespace liehom
