#pragma once

#include "liehom/homology.hpp"

#include <map>
#include <string>

namespace liehom {

template <Field F>
struct CyclicResult {
    std::size_t dimension = 0;
    std::vector<SparseVector<F>> representatives; ///< Λ²A coordinates
    std::map<std::string, std::size_t> constituents;
};

/// τ(x,y,z) = xy∧z + zx∧y + yz∧x
template <Field F>
SparseVector<F> cyclic_tau(const BasedAlgebra<F>& a, const MultilinearBasis& w2, std::size_t x, std::size_t y,
                           std::size_t z)
{
    const auto& K = a.field();
    Accumulator<F> acc(K, w2.dim());
    auto term = [&](const SparseVector<F>& prod, std::size_t other) {
        for (const auto& [k, c] : prod.entries()) add_wedge_term(acc, w2, k, other, c, K);
    };
    term(a.product(x, y), z);
    term(a.product(z, x), y);
    term(a.product(y, z), x);
    return acc.take();
}

/// T(A) ⊆ Λ²A, spanned by τ over basis triples.
template <Field F>
Subspace<F> t_span(const BasedAlgebra<F>& a)
{
    if (!a.is_associative()) throw PreconditionError("t_span: needs an associative algebra");
    MultilinearBasis w2(a.dim(), MultilinearKind::wedge2);
    EchelonBuilder<F> builder(a.field(), w2.dim());
    const std::size_t n = a.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                // τ is symmetric on commutative algebras: x ≤ y ≤ z suffices.
                if (a.is_commutative() && !(x <= y && y <= z)) continue;
                if (builder.dim() == w2.dim()) break;
                builder.insert(cyclic_tau(a, w2, x, y, z));
            }
    return Subspace<F>::from_echelon(a.field(), w2.dim(), builder.rows());
}

/// Λ²A → A, x∧y ↦ xy − yx.
template <Field F>
LinearMap<F> commutator_map(const BasedAlgebra<F>& a)
{
    MultilinearBasis w2(a.dim(), MultilinearKind::wedge2);
    std::vector<SparseVector<F>> cols;
    for (std::size_t f = 0; f < w2.dim(); ++f) {
        const auto& t = w2.tuple(f);
        cols.push_back(sub(a.field(), a.product(t[0], t[1]), a.product(t[1], t[0])));
    }
    return LinearMap<F>(a.field(), w2.dim(), a.dim(), std::move(cols));
}

/// Which subspace of Λ²A HC₁ is taken over.
enum class Hc1Variant {
    cycles,    ///< Ker(Λ²A → A, x∧y ↦ [x,y]) / T(A)  (Connes HC₁; default)
    full_wedge ///< Λ²A / T(A) literally
};

template <Field F>
CyclicResult<F> hc1(const BasedAlgebra<F>& a, Hc1Variant variant = Hc1Variant::cycles)
{
    auto t = t_span(a);
    const std::size_t w = MultilinearBasis(a.dim(), MultilinearKind::wedge2).dim();
    auto num = variant == Hc1Variant::cycles ? commutator_map(a).kernel() : Subspace<F>::full(a.field(), w);
    Subquotient<F> sq(num, t);
    CyclicResult<F> r;
    r.dimension = sq.dim();
    r.representatives = sq.representatives();
    r.constituents = {{"Λ²A", w}, {"cycles", num.dim()}, {"T(A)", t.dim()}};
    return r;
}

/// Ker(S²A → A).
template <Field F>
Subspace<F> ker_sym_mult(const BasedAlgebra<F>& a)
{
    return sym_mult_map(a, SymTarget::algebra).kernel();
}

/// The relative objects T(A,[A,A]) and HC₁(A,[A,A]) plus their constituents.
template <Field F>
struct RelativeInvariants {
    Subspace<F> commutators;        ///< [A,A]
    Subspace<F> a_commutators;      ///< A[A,A]
    Subspace<F> commutator_wedge;   ///< [A,A]∧A ⊆ Λ²A
    Subspace<F> t;                  ///< T(A)
    CyclicResult<F> t_relative;     ///< (T(A) + [A,A]∧A)/([A,A]∧A)
    CyclicResult<F> hc1_relative;   ///< Λ²A/([A,A]∧A + T(A))
    std::size_t wedge_abelianization = 0; ///< dim Λ²(A/[A,A])
};

template <Field F>
RelativeInvariants<F> relative_invariants(const BasedAlgebra<F>& a)
{
    if (!a.is_associative()) throw PreconditionError("relative_invariants: needs an associative algebra");
    const auto& K = a.field();
    MultilinearBasis w2(a.dim(), MultilinearKind::wedge2);
    auto c = derived(a);
    auto ac = span_product(a, a.whole(), c, ProductMode::associative);
    std::vector<SparseVector<F>> cw;
    for (const auto& x : c.basis())
        for (std::size_t k = 0; k < a.dim(); ++k) cw.push_back(wedge(K, w2, x, a.basis_vector(k)));
    auto cwedge = Subspace<F>::span(K, w2.dim(), cw);
    auto t = t_span(a);
    auto t_plus = t.sum(cwedge);

    Subquotient<F> trel(t_plus, cwedge);
    Subquotient<F> hrel(Subspace<F>::full(K, w2.dim()), t_plus);
    RelativeInvariants<F> r{c, ac, cwedge, t, {}, {}, binomial2(a.dim() - c.dim())};
    r.t_relative = {trel.dim(), trel.representatives(), {{"T(A)", t.dim()}, {"[A,A]∧A", cwedge.dim()}}};
    r.hc1_relative = {hrel.dim(), hrel.representatives(), {{"Λ²A", w2.dim()}, {"[A,A]∧A+T(A)", t_plus.dim()}}};
    return r;
}

} // namespace liehom
