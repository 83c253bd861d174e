#pragma once

#include "liehom/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace liehom {

enum class MultilinearKind { wedge2, wedge3, sym2 };

/// Flat coordinates for Λ²V (i<j), Λ³V (i<j<k) and S²V (i≤j), in lexicographic order.
class MultilinearBasis {
public:
    MultilinearBasis(std::size_t base_dim, MultilinearKind kind) : n_(base_dim), kind_(kind)
    {
        switch (kind_) {
        case MultilinearKind::wedge2:
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j) tuples_.push_back({i, j, 0});
            break;
        case MultilinearKind::sym2:
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i; j < n_; ++j) tuples_.push_back({i, j, 0});
            break;
        case MultilinearKind::wedge3:
            for (std::size_t i = 0; i < n_; ++i) {
                offset3_.push_back(tuples_.size());
                for (std::size_t j = i + 1; j < n_; ++j)
                    for (std::size_t k = j + 1; k < n_; ++k) tuples_.push_back({i, j, k});
            }
            break;
        }
    }

    std::size_t base_dim() const { return n_; }
    MultilinearKind kind() const { return kind_; }
    std::size_t dim() const { return tuples_.size(); }
    std::size_t arity() const { return kind_ == MultilinearKind::wedge3 ? 3 : 2; }

    /// Flat index of (i, j); requires i<j for wedge2, i<=j for sym2.
    std::size_t index(std::size_t i, std::size_t j) const
    {
        if (kind_ == MultilinearKind::wedge2) {
            if (!(i < j && j < n_)) throw DimensionError("wedge2 index needs i < j < n");
            return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
        }
        if (kind_ == MultilinearKind::sym2) {
            if (!(i <= j && j < n_)) throw DimensionError("sym2 index needs i <= j < n");
            return i * (2 * n_ - i + 1) / 2 + (j - i);
        }
        throw DimensionError("two-index lookup on a wedge3 basis");
    }

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
    {
        if (kind_ != MultilinearKind::wedge3) throw DimensionError("three-index lookup on a rank-2 basis");
        if (!(i < j && j < k && k < n_)) throw DimensionError("wedge3 index needs i < j < k < n");
        std::size_t m = n_ - i - 1; // pairs (j, k) drawn from i+1..n-1
        std::size_t a = j - i - 1, b = k - i - 1;
        return offset3_[i] + a * (2 * m - a - 1) / 2 + (b - a - 1);
    }

    const std::array<std::size_t, 3>& tuple(std::size_t flat) const { return tuples_.at(flat); }

private:
    std::size_t n_;
    MultilinearKind kind_;
    std::vector<std::array<std::size_t, 3>> tuples_;
    std::vector<std::size_t> offset3_;
};

inline std::size_t binomial2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// acc += c * e_i ∧ e_j
template <Field F>
void add_wedge_term(Accumulator<F>& acc, const MultilinearBasis& basis, std::size_t i, std::size_t j,
                    const typename F::value_type& c, const F& field)
{
    if (i == j) return;
    if (i < j) acc.add(basis.index(i, j), c);
    else acc.add(basis.index(j, i), field.neg(c));
}

/// x ∧ y in Λ² coordinates.
template <Field F>
SparseVector<F> wedge(const F& field, const MultilinearBasis& basis, const SparseVector<F>& x, const SparseVector<F>& y)
{
    Accumulator<F> acc(field, basis.dim());
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) add_wedge_term(acc, basis, i, j, field.mul(a, b), field);
    return acc.take();
}

/// x ∨ y in S² coordinates.
template <Field F>
SparseVector<F> sym(const F& field, const MultilinearBasis& basis, const SparseVector<F>& x, const SparseVector<F>& y)
{
    Accumulator<F> acc(field, basis.dim());
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) acc.add(basis.index(std::min(i, j), std::max(i, j)), field.mul(a, b));
    return acc.take();
}

/// Full tensor coordinates (dense, n^arity entries) of a flat vector:
/// e_i∧e_j ↦ e_i⊗e_j − e_j⊗e_i, e_i∨e_j ↦ e_i⊗e_j + e_j⊗e_i (i<j), e_i∨e_i ↦ e_i⊗e_i,
/// e_i∧e_j∧e_k ↦ signed sum over permutations.
template <Field F>
std::vector<typename F::value_type> expand(const F& field, const MultilinearBasis& basis, const SparseVector<F>& v)
{
    const std::size_t n = basis.base_dim();
    std::size_t size = basis.arity() == 3 ? n * n * n : n * n;
    std::vector<typename F::value_type> out(size);
    for (const auto& [flat, c] : v.entries()) {
        const auto& t = basis.tuple(flat);
        if (basis.kind() == MultilinearKind::wedge3) {
            const std::array<std::array<std::size_t, 3>, 6> perms{
                {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
            for (std::size_t p = 0; p < 6; ++p) {
                std::size_t idx = (t[perms[p][0]] * n + t[perms[p][1]]) * n + t[perms[p][2]];
                out[idx] = p < 3 ? field.add(out[idx], c) : field.sub(out[idx], c);
            }
        } else {
            const std::size_t i = t[0], j = t[1];
            out[i * n + j] = field.add(out[i * n + j], c);
            if (i != j) {
                auto& back = out[j * n + i];
                back = basis.kind() == MultilinearKind::sym2 ? field.add(back, c) : field.sub(back, c);
            }
        }
    }
    return out;
}

/// Inverse of expand on its image: reads the increasing-index entries.
template <Field F>
SparseVector<F> flatten(const MultilinearBasis& basis, const std::vector<typename F::value_type>& tensor)
{
    const std::size_t n = basis.base_dim();
    SparseVector<F> out;
    for (std::size_t flat = 0; flat < basis.dim(); ++flat) {
        const auto& t = basis.tuple(flat);
        std::size_t idx = basis.arity() == 3 ? (t[0] * n + t[1]) * n + t[2] : t[0] * n + t[1];
        out.push_back(flat, tensor.at(idx));
    }
    return out;
}

/// Chevalley-Eilenberg differentials d2: Λ²L → L and d3: Λ³L → Λ²L.
template <Field F>
struct CeDifferentials {
    MultilinearBasis wedge2;
    MultilinearBasis wedge3;
    LinearMap<F> d2;
    LinearMap<F> d3;
};

/// d2(x∧y) = [x,y];  d3(x∧y∧z) = −[x,y]∧z + [x,z]∧y − [y,z]∧x.
template <Field F>
CeDifferentials<F> ce_differentials(const BasedAlgebra<F>& l)
{
    if (!l.is_lie()) throw PreconditionError("ce_differentials: needs a Lie algebra");
    const auto& K = l.field();
    const std::size_t n = l.dim();
    MultilinearBasis w2(n, MultilinearKind::wedge2), w3(n, MultilinearKind::wedge3);
    std::vector<SparseVector<F>> c2;
    c2.reserve(w2.dim());
    for (std::size_t f = 0; f < w2.dim(); ++f) {
        const auto& t = w2.tuple(f);
        c2.push_back(l.product(t[0], t[1]));
    }
    std::vector<SparseVector<F>> c3;
    c3.reserve(w3.dim());
    Accumulator<F> acc(K, w2.dim());
    const auto one = K.one(), minus_one = K.neg(K.one());
    auto add_term = [&](const SparseVector<F>& br, std::size_t other, const typename F::value_type& sign) {
        for (const auto& [k, c] : br.entries()) add_wedge_term(acc, w2, k, other, K.mul(sign, c), K);
    };
    for (std::size_t f = 0; f < w3.dim(); ++f) {
        const auto& t = w3.tuple(f);
        add_term(l.product(t[0], t[1]), t[2], minus_one);
        add_term(l.product(t[0], t[2]), t[1], one);
        add_term(l.product(t[1], t[2]), t[0], minus_one);
        c3.push_back(acc.take());
    }
    return {w2, w3, LinearMap<F>(K, w2.dim(), n, std::move(c2)), LinearMap<F>(K, w3.dim(), w2.dim(), std::move(c3))};
}

enum class SymTarget { algebra, mod_commutators };

/// S²A → A (or A/[A,A]) induced by x∨y ↦ x∘y; on commutative A this is xy.
template <Field F>
LinearMap<F> sym_mult_map(const BasedAlgebra<F>& a, SymTarget target)
{
    if (!a.is_associative()) throw PreconditionError("sym_mult_map: needs an associative algebra");
    const auto& K = a.field();
    if (!a.is_commutative()) require_odd_characteristic(K, "Jordan multiplication on a noncommutative algebra");
    MultilinearBasis s2(a.dim(), MultilinearKind::sym2);
    std::vector<SparseVector<F>> cols;
    std::optional<QuotientSpace<F>> q;
    if (target == SymTarget::mod_commutators) q.emplace(a.dim(), derived(a));
    for (std::size_t f = 0; f < s2.dim(); ++f) {
        const auto& t = s2.tuple(f);
        SparseVector<F> v = a.is_commutative() ? a.product(t[0], t[1])
                                               : jordan(a, a.basis_vector(t[0]), a.basis_vector(t[1]));
        cols.push_back(q ? q->coords(v) : v);
    }
    return LinearMap<F>(K, s2.dim(), q ? q->dim() : a.dim(), std::move(cols));
}

/// For each basis element z, the map x∨y ↦ [z,x]∨y + x∨[z,y] on S²L.
template <Field F>
std::vector<LinearMap<F>> lie_action_sym2(const BasedAlgebra<F>& l)
{
    if (!l.is_lie()) throw PreconditionError("lie_action_sym2: needs a Lie algebra");
    const auto& K = l.field();
    const std::size_t n = l.dim();
    MultilinearBasis s2(n, MultilinearKind::sym2);
    std::vector<LinearMap<F>> out;
    Accumulator<F> acc(K, s2.dim());
    for (std::size_t z = 0; z < n; ++z) {
        std::vector<SparseVector<F>> cols;
        for (std::size_t f = 0; f < s2.dim(); ++f) {
            const auto& t = s2.tuple(f);
            for (const auto& [k, c] : l.product(z, t[0]).entries()) acc.add(s2.index(std::min(k, t[1]), std::max(k, t[1])), c);
            for (const auto& [k, c] : l.product(z, t[1]).entries()) acc.add(s2.index(std::min(k, t[0]), std::max(k, t[0])), c);
            cols.push_back(acc.take());
        }
        out.emplace_back(K, s2.dim(), s2.dim(), std::move(cols));
    }
    return out;
}

/// π: Λ²(L/[L,L]) → [L,L]/[[L,L],L], x̄∧ȳ ↦ class of [x,y].
template <Field F>
struct PiMap {
    QuotientSpace<F> abelianization;  ///< L/[L,L]
    Subquotient<F> derived_quotient;  ///< [L,L]/[[L,L],L]
    MultilinearBasis domain_basis;    ///< Λ² of the abelianization
    LinearMap<F> map;
};

template <Field F>
PiMap<F> pi_map(const BasedAlgebra<F>& l)
{
    if (!l.is_lie()) throw PreconditionError("pi_map: needs a Lie algebra");
    const auto& K = l.field();
    auto d = derived(l);
    auto dd = span_product(l, d, l.whole(), ProductMode::bracket);
    QuotientSpace<F> ab(l.dim(), d);
    Subquotient<F> dq(d, dd);
    MultilinearBasis w2(ab.dim(), MultilinearKind::wedge2);
    std::vector<SparseVector<F>> cols;
    const auto& free = ab.free_columns();
    for (std::size_t f = 0; f < w2.dim(); ++f) {
        const auto& t = w2.tuple(f);
        cols.push_back(dq.coords(l.product(free[t[0]], free[t[1]])));
    }
    LinearMap<F> m(K, w2.dim(), dq.dim(), std::move(cols));
    return {std::move(ab), std::move(dq), w2, std::move(m)};
}

/// Λ²L → Λ²(L/D) induced by the projection onto the quotient `q`.
template <Field F>
LinearMap<F> wedge2_projection(const F& field, const MultilinearBasis& source, const QuotientSpace<F>& q)
{
    MultilinearBasis target(q.dim(), MultilinearKind::wedge2);
    std::vector<SparseVector<F>> cols;
    for (std::size_t f = 0; f < source.dim(); ++f) {
        const auto& t = source.tuple(f);
        cols.push_back(wedge(field, target, q.coords(SparseVector<F>::unit(field, t[0])),
                             q.coords(SparseVector<F>::unit(field, t[1]))));
    }
    return LinearMap<F>(field, source.dim(), target.dim(), std::move(cols));
}

/// S²L → S²(L/D) induced by the projection onto the quotient `q`.
template <Field F>
LinearMap<F> sym2_projection(const F& field, const MultilinearBasis& source, const QuotientSpace<F>& q)
{
    MultilinearBasis target(q.dim(), MultilinearKind::sym2);
    std::vector<SparseVector<F>> cols;
    for (std::size_t f = 0; f < source.dim(); ++f) {
        const auto& t = source.tuple(f);
        cols.push_back(sym(field, target, q.coords(SparseVector<F>::unit(field, t[0])),
                           q.coords(SparseVector<F>::unit(field, t[1]))));
    }
    return LinearMap<F>(field, source.dim(), target.dim(), std::move(cols));
}

} // namespace liehom
