#pragma once

#include "liehom/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liehom {

enum class AlgebraKind { lie, associative };

inline std::string to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "assoc"; }

/// One nonzero structure constant: e_left * e_right has coefficient `value` at e_result.
template <Field F>
struct TableEntry {
    std::size_t left;
    std::size_t right;
    SparseVector<F> product;
};

/// Finite-dimensional Lie or associative algebra given by structure constants.
/// The full dim x dim table is stored; Lie tables are antisymmetric by construction.
template <Field F>
class BasedAlgebra {
public:
    /// Lie algebra from the products [e_i, e_j] with i < j; the rest follows by antisymmetry.
    static BasedAlgebra lie(F field, std::vector<std::string> labels, const std::vector<TableEntry<F>>& upper)
    {
        BasedAlgebra a(std::move(field), AlgebraKind::lie, std::move(labels));
        for (const auto& e : upper) {
            if (e.left >= a.dim_ || e.right >= a.dim_ || e.product.support_bound() > a.dim_)
                throw DimensionError("lie table entry out of range");
            if (e.left >= e.right)
                throw PreconditionError("lie table entries need i < j, got (" + std::to_string(e.left) + ", " +
                                        std::to_string(e.right) + ")");
            a.table_[e.left * a.dim_ + e.right] = e.product;
            a.table_[e.right * a.dim_ + e.left] = scale(a.field_, e.product, a.field_.neg(a.field_.one()));
        }
        return a;
    }

    /// Associative algebra from its nonzero basis products; `unit` is optional.
    static BasedAlgebra associative(F field, std::vector<std::string> labels, const std::vector<TableEntry<F>>& entries,
                                    std::optional<SparseVector<F>> unit = std::nullopt)
    {
        BasedAlgebra a(std::move(field), AlgebraKind::associative, std::move(labels));
        for (const auto& e : entries) {
            if (e.left >= a.dim_ || e.right >= a.dim_ || e.product.support_bound() > a.dim_)
                throw DimensionError("associative table entry out of range");
            a.table_[e.left * a.dim_ + e.right] = e.product;
        }
        if (unit && unit->support_bound() > a.dim_) throw DimensionError("unit vector out of range");
        a.unit_ = std::move(unit);
        a.commutative_ = true;
        for (std::size_t i = 0; i < a.dim_ && a.commutative_; ++i)
            for (std::size_t j = i + 1; j < a.dim_; ++j)
                if (!(a.table_[i * a.dim_ + j] == a.table_[j * a.dim_ + i])) {
                    a.commutative_ = false;
                    break;
                }
        return a;
    }

    const F& field() const { return field_; }
    AlgebraKind kind() const { return kind_; }
    bool is_lie() const { return kind_ == AlgebraKind::lie; }
    bool is_associative() const { return kind_ == AlgebraKind::associative; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<SparseVector<F>>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }
    /// Always false for Lie algebras; for associative ones, true iff the table is symmetric.
    bool is_commutative() const { return commutative_; }

    const SparseVector<F>& product(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }

    SparseVector<F> basis_vector(std::size_t i) const { return SparseVector<F>::unit(field_, i); }

    /// Bilinear extension of the table (bracket for Lie, product for associative).
    SparseVector<F> multiply(const SparseVector<F>& x, const SparseVector<F>& y) const
    {
        check(x);
        check(y);
        Accumulator<F> acc(field_, dim_);
        for (const auto& [i, a] : x.entries())
            for (const auto& [j, b] : y.entries()) acc.add(product(i, j), field_.mul(a, b));
        return acc.take();
    }

    /// [x, y]: the table itself for Lie algebras, xy - yx for associative ones.
    SparseVector<F> bracket(const SparseVector<F>& x, const SparseVector<F>& y) const
    {
        if (is_lie()) return multiply(x, y);
        return sub(field_, multiply(x, y), multiply(y, x));
    }

    Subspace<F> whole() const { return Subspace<F>::full(field_, dim_); }

    friend bool operator==(const BasedAlgebra& a, const BasedAlgebra& b)
    {
        return a.field_ == b.field_ && a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.labels_ == b.labels_ &&
               a.table_ == b.table_ && a.unit_ == b.unit_;
    }

private:
    BasedAlgebra(F field, AlgebraKind kind, std::vector<std::string> labels)
        : field_(std::move(field)), kind_(kind), dim_(labels.size()), labels_(std::move(labels)),
          table_(dim_ * dim_)
    {
    }

    void check(const SparseVector<F>& v) const
    {
        if (v.support_bound() > dim_) throw DimensionError("vector outside the algebra");
    }

    F field_;
    AlgebraKind kind_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<SparseVector<F>> table_;
    std::optional<SparseVector<F>> unit_;
    bool commutative_ = false;
};

template <Field F>
struct AxiomViolation {
    std::string axiom; ///< "antisymmetry", "jacobi", "associativity", "left unit", "right unit"
    std::array<std::size_t, 3> indices;
    SparseVector<F> residual;
};

template <Field F>
struct AxiomReport {
    std::vector<AxiomViolation<F>> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every basis instance of the algebra's axioms.
template <Field F>
AxiomReport<F> validate(const BasedAlgebra<F>& alg)
{
    AxiomReport<F> report;
    const auto& K = alg.field();
    const std::size_t n = alg.dim();
    auto e = [&](std::size_t i) { return alg.basis_vector(i); };
    if (alg.is_lie()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                auto r = add(K, alg.product(i, j), alg.product(j, i));
                if (i == j) r = alg.product(i, i);
                if (!r.is_zero()) report.violations.push_back({"antisymmetry", {i, j, j}, r});
            }
        // With antisymmetry, triples with a repeated index satisfy Jacobi automatically.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    Accumulator<F> acc(K, n);
                    acc.add(alg.multiply(alg.product(i, j), e(k)), K.one());
                    acc.add(alg.multiply(alg.product(k, i), e(j)), K.one());
                    acc.add(alg.multiply(alg.product(j, k), e(i)), K.one());
                    auto r = acc.take();
                    if (!r.is_zero()) report.violations.push_back({"jacobi", {i, j, k}, r});
                }
        return report;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto r = sub(K, alg.multiply(alg.product(i, j), e(k)), alg.multiply(e(i), alg.product(j, k)));
                if (!r.is_zero()) report.violations.push_back({"associativity", {i, j, k}, r});
            }
    if (alg.unit()) {
        for (std::size_t i = 0; i < n; ++i) {
            auto l = sub(K, alg.multiply(*alg.unit(), e(i)), e(i));
            if (!l.is_zero()) report.violations.push_back({"left unit", {i, i, i}, l});
            auto r = sub(K, alg.multiply(e(i), *alg.unit()), e(i));
            if (!r.is_zero()) report.violations.push_back({"right unit", {i, i, i}, r});
        }
    }
    return report;
}

template <Field F>
void require_same_field(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    if (!(a.field() == b.field()))
        throw PreconditionError("algebras over different fields: " + a.field().name() + " and " + b.field().name());
}

/// Current algebra L ⊗ A with [x⊗a, y⊗b] = [x,y] ⊗ ab; basis e_i⊗f_k has index i*dim(A)+k.
template <Field F>
BasedAlgebra<F> current_tensor(const BasedAlgebra<F>& l, const BasedAlgebra<F>& a)
{
    require_same_field(l, a);
    if (!l.is_lie()) throw PreconditionError("current_tensor: first factor must be a Lie algebra");
    if (!a.is_associative() || !a.is_commutative() || !a.is_unital())
        throw PreconditionError("current_tensor: second factor must be associative, commutative and unital");
    const std::size_t m = a.dim();
    std::vector<std::string> labels;
    for (const auto& x : l.labels())
        for (const auto& y : a.labels()) labels.push_back(x + "⊗" + y);
    const auto& K = l.field();
    std::vector<TableEntry<F>> upper;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j) {
            const auto& xy = l.product(i, j);
            if (xy.is_zero()) continue;
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t t = 0; t < m; ++t) {
                    std::size_t left = i * m + s, right = j * m + t;
                    if (left >= right) continue;
                    const auto& ab = a.product(s, t);
                    if (ab.is_zero()) continue;
                    Accumulator<F> acc(K, l.dim() * m);
                    for (const auto& [k, c] : xy.entries())
                        for (const auto& [u, d] : ab.entries()) acc.add(k * m + u, K.mul(c, d));
                    auto v = acc.take();
                    if (!v.is_zero()) upper.push_back({left, right, std::move(v)});
                }
        }
    return BasedAlgebra<F>::lie(K, std::move(labels), upper);
}

/// A^(-): same space, bracket ab - ba.
template <Field F>
BasedAlgebra<F> minus(const BasedAlgebra<F>& a)
{
    if (!a.is_associative()) throw PreconditionError("minus: needs an associative algebra");
    std::vector<TableEntry<F>> upper;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            auto c = sub(a.field(), a.product(i, j), a.product(j, i));
            if (!c.is_zero()) upper.push_back({i, j, std::move(c)});
        }
    return BasedAlgebra<F>::lie(a.field(), a.labels(), upper);
}

/// x ∘ y = (xy + yx)/2
template <Field F>
SparseVector<F> jordan(const BasedAlgebra<F>& a, const SparseVector<F>& x, const SparseVector<F>& y)
{
    if (!a.is_associative()) throw PreconditionError("jordan: needs an associative algebra");
    require_odd_characteristic(a.field(), "Jordan product");
    return scale(a.field(), add(a.field(), a.multiply(x, y), a.multiply(y, x)), half(a.field()));
}

enum class ProductMode { bracket, associative, jordan };

/// Span of all products u*w, u from a basis of `u`, w from a basis of `w`.
template <Field F>
Subspace<F> span_product(const BasedAlgebra<F>& alg, const Subspace<F>& u, const Subspace<F>& w, ProductMode mode)
{
    if (u.ambient_dim() != alg.dim() || w.ambient_dim() != alg.dim())
        throw DimensionError("span_product: subspaces must live in the algebra");
    if (mode != ProductMode::bracket && !alg.is_associative())
        throw PreconditionError("span_product: associative/jordan products need an associative algebra");
    if (mode == ProductMode::jordan) require_odd_characteristic(alg.field(), "Jordan product");
    EchelonBuilder<F> builder(alg.field(), alg.dim());
    for (const auto& x : u.basis())
        for (const auto& y : w.basis()) {
            if (builder.dim() == alg.dim()) break;
            switch (mode) {
            case ProductMode::bracket: builder.insert(alg.bracket(x, y)); break;
            case ProductMode::associative: builder.insert(alg.multiply(x, y)); break;
            case ProductMode::jordan: builder.insert(jordan(alg, x, y)); break;
            }
        }
    return Subspace<F>::from_echelon(alg.field(), alg.dim(), builder.rows());
}

/// [L, L] for Lie algebras, [A, A] (commutators) for associative ones.
template <Field F>
Subspace<F> derived(const BasedAlgebra<F>& alg)
{
    return span_product(alg, alg.whole(), alg.whole(), ProductMode::bracket);
}

/// Returns a product escaping `ideal`, if any (two-sided check).
template <Field F>
std::optional<std::string> ideal_witness(const BasedAlgebra<F>& alg, const Subspace<F>& ideal)
{
    if (ideal.ambient_dim() != alg.dim()) throw DimensionError("ideal check: subspace outside the algebra");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < ideal.dim(); ++k) {
            const auto& v = ideal.basis()[k];
            if (!ideal.contains(alg.multiply(alg.basis_vector(i), v)))
                return alg.labels()[i] + " * (ideal basis vector " + std::to_string(k) + ") leaves the subspace";
            if (alg.is_associative() && !ideal.contains(alg.multiply(v, alg.basis_vector(i))))
                return "(ideal basis vector " + std::to_string(k) + ") * " + alg.labels()[i] + " leaves the subspace";
        }
    return std::nullopt;
}

template <Field F>
void require_ideal(const BasedAlgebra<F>& alg, const Subspace<F>& ideal, const std::string& what)
{
    if (auto w = ideal_witness(alg, ideal)) throw PreconditionError(what + ": not an ideal: " + *w);
}

/// alg / ideal on the basis of non-pivot coordinates of the ideal.
template <Field F>
BasedAlgebra<F> quotient_algebra(const BasedAlgebra<F>& alg, const Subspace<F>& ideal)
{
    require_ideal(alg, ideal, "quotient_algebra");
    QuotientSpace<F> q(alg.dim(), ideal);
    const auto& free = q.free_columns();
    std::vector<std::string> labels;
    for (std::size_t f : free) labels.push_back(alg.labels()[f]);
    std::vector<TableEntry<F>> entries;
    for (std::size_t a = 0; a < free.size(); ++a)
        for (std::size_t b = 0; b < free.size(); ++b) {
            if (alg.is_lie() && a >= b) continue;
            auto c = q.coords(alg.product(free[a], free[b]));
            if (!c.is_zero()) entries.push_back({a, b, std::move(c)});
        }
    if (alg.is_lie()) return BasedAlgebra<F>::lie(alg.field(), std::move(labels), entries);
    std::optional<SparseVector<F>> unit;
    if (alg.unit()) unit = q.coords(*alg.unit());
    return BasedAlgebra<F>::associative(alg.field(), std::move(labels), entries, std::move(unit));
}

/// A ⊗ B with (a1⊗b1)(a2⊗b2) = a1a2 ⊗ b1b2; basis index i*dim(B)+k.
template <Field F>
BasedAlgebra<F> assoc_tensor(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    require_same_field(a, b);
    if (!a.is_associative() || !b.is_associative()) throw PreconditionError("assoc_tensor: needs associative factors");
    const auto& K = a.field();
    const std::size_t m = b.dim(), n = a.dim() * m;
    std::vector<std::string> labels;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) labels.push_back(x + "⊗" + y);
    auto tensor = [&](const SparseVector<F>& x, const SparseVector<F>& y) {
        Accumulator<F> acc(K, n);
        for (const auto& [i, c] : x.entries())
            for (const auto& [k, d] : y.entries()) acc.add(i * m + k, K.mul(c, d));
        return acc.take();
    };
    std::vector<TableEntry<F>> entries;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& ai = a.product(i, j);
            if (ai.is_zero()) continue;
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t t = 0; t < m; ++t) {
                    const auto& bs = b.product(s, t);
                    if (bs.is_zero()) continue;
                    entries.push_back({i * m + s, j * m + t, tensor(ai, bs)});
                }
        }
    std::optional<SparseVector<F>> unit;
    if (a.unit() && b.unit()) unit = tensor(*a.unit(), *b.unit());
    return BasedAlgebra<F>::associative(K, std::move(labels), entries, std::move(unit));
}

} // namespace liehom
