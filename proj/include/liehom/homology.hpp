#pragma once

#include "liehom/multilinear.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liehom {

/// A computed subquotient: its dimension and canonical representatives in the
/// flat coordinates of the ambient multilinear space.
template <Field F>
struct HomologyResult {
    std::size_t dimension = 0;
    std::vector<SparseVector<F>> representatives;
    std::string ambient;             ///< e.g. "Λ²L", "S²L"
    std::size_t numerator_dim = 0;
    std::size_t denominator_dim = 0;

    static HomologyResult from(const Subquotient<F>& sq, std::string ambient)
    {
        return {sq.dim(), sq.representatives(), std::move(ambient), sq.numerator().dim(), sq.denominator().dim()};
    }
};

/// H₂(L) = Ker d2 / Im d3.
template <Field F>
HomologyResult<F> h2(const BasedAlgebra<F>& l)
{
    auto ce = ce_differentials(l);
    auto cycles = ce.d2.kernel();
    // Im d3 ⊆ Ker d2: stop reducing once the boundaries fill the cycles.
    EchelonBuilder<F> boundaries(l.field(), ce.wedge2.dim());
    for (const auto& c : ce.d3.columns()) {
        if (boundaries.dim() == cycles.dim()) break;
        boundaries.insert(c);
    }
    auto im = Subspace<F>::from_echelon(l.field(), ce.wedge2.dim(), boundaries.rows());
    return HomologyResult<F>::from(Subquotient<F>(std::move(cycles), std::move(im)), "Λ²L");
}

/// Essential cycles: kernel of ψ: H₂(L) → Λ²(L/[L,L]).
/// Boundaries always die under the projection, so Ker ψ = (Ker d2 ∩ Ker Λ²p) / Im d3.
template <Field F>
HomologyResult<F> h2_ess(const BasedAlgebra<F>& l)
{
    auto ce = ce_differentials(l);
    QuotientSpace<F> ab(l.dim(), derived(l));
    auto proj = wedge2_projection(l.field(), ce.wedge2, ab);
    auto ess_cycles = ce.d2.stacked_with(proj).kernel();
    EchelonBuilder<F> boundaries(l.field(), ce.wedge2.dim());
    for (const auto& c : ce.d3.columns()) {
        if (boundaries.dim() == ess_cycles.dim()) break;
        boundaries.insert(c);
    }
    auto im = Subspace<F>::from_echelon(l.field(), ce.wedge2.dim(), boundaries.rows());
    return HomologyResult<F>::from(Subquotient<F>(std::move(ess_cycles), std::move(im)), "Λ²L");
}

/// [L, S²L] ⊆ S²L: the span of the images of all basis actions.
template <Field F>
Subspace<F> action_span(const BasedAlgebra<F>& l)
{
    MultilinearBasis s2(l.dim(), MultilinearKind::sym2);
    EchelonBuilder<F> builder(l.field(), s2.dim());
    for (const auto& m : lie_action_sym2(l))
        for (const auto& c : m.columns()) {
            if (builder.dim() == s2.dim()) break;
            builder.insert(c);
        }
    return Subspace<F>::from_echelon(l.field(), s2.dim(), builder.rows());
}

/// B(L) = S²L / [L, S²L].
template <Field F>
HomologyResult<F> b_coinvariants(const BasedAlgebra<F>& l)
{
    const std::size_t n = MultilinearBasis(l.dim(), MultilinearKind::sym2).dim();
    return HomologyResult<F>::from(Subquotient<F>(Subspace<F>::full(l.field(), n), action_span(l)), "S²L");
}

/// I ∨ J ⊆ S²L.
template <Field F>
Subspace<F> sym_span(const F& field, const MultilinearBasis& s2, const Subspace<F>& i, const Subspace<F>& j)
{
    EchelonBuilder<F> builder(field, s2.dim());
    for (const auto& x : i.basis())
        for (const auto& y : j.basis()) builder.insert(sym(field, s2, x, y));
    return Subspace<F>::from_echelon(field, s2.dim(), builder.rows());
}

/// B(I, J): image of I ∨ J in B(L).
template <Field F>
HomologyResult<F> b_relative(const BasedAlgebra<F>& l, const Subspace<F>& i, const Subspace<F>& j)
{
    require_ideal(l, i, "b_relative (first ideal)");
    require_ideal(l, j, "b_relative (second ideal)");
    MultilinearBasis s2(l.dim(), MultilinearKind::sym2);
    auto w = action_span(l);
    auto num = sym_span(l.field(), s2, i, j).sum(w);
    return HomologyResult<F>::from(Subquotient<F>(std::move(num), std::move(w)), "S²L");
}

/// One labeled dimension on the right-hand side of an identity.
struct Component {
    std::string label;
    std::size_t dimension = 0;
    /// Factor dimensions when the component is a tensor product (empty otherwise).
    std::vector<std::size_t> factors;
};

struct Check {
    std::string label;
    bool ok = false;
};

/// Both sides of an identity, computed independently.
struct VerificationReport {
    std::string theorem;
    std::string instance;
    std::string field;
    std::size_t lhs = 0;
    std::string lhs_label;
    std::vector<Component> rhs;
    std::vector<Check> checks;
    std::vector<VerificationReport> subreports;
    std::vector<std::string> notes;
    double seconds = 0.0;
    bool pass = false;

    std::size_t rhs_total() const
    {
        std::size_t s = 0;
        for (const auto& c : rhs) s += c.dimension;
        return s;
    }

    /// pass = (lhs == Σ rhs) and every subspace-level check holds.
    void settle()
    {
        pass = lhs == rhs_total();
        for (const auto& c : checks) pass = pass && c.ok;
    }

    /// This report and all subreports pass.
    bool all_pass() const
    {
        if (!pass) return false;
        for (const auto& s : subreports)
            if (!s.all_pass()) return false;
        return true;
    }
};

namespace detail {

/// Sequence 0 → H₂ᵉˢˢ → H₂ → Λ²(L/[L,L]) → [L,L]/[[L,L],L] → 0.
template <Field F>
VerificationReport five_term_sequence(const BasedAlgebra<F>& l)
{
    VerificationReport r;
    r.theorem = "five-term";
    r.field = l.field().name();
    auto ce = ce_differentials(l);
    auto pi = pi_map(l);
    auto proj = wedge2_projection(l.field(), ce.wedge2, pi.abelianization);
    auto cycles = ce.d2.kernel();
    auto ess = h2_ess(l);
    auto full = h2(l);
    auto psi_image = proj.image_of(cycles);
    auto pi_kernel = pi.map.kernel();
    const std::size_t wedge_q = pi.domain_basis.dim();
    const std::size_t coker = pi.derived_quotient.dim();

    // Alternating sum: h2ess − h2 + Λ²(L/[L,L]) − [L,L]/[[L,L],L] = 0.
    r.lhs = full.dimension + coker;
    r.lhs_label = "H2(L) + [L,L]/[[L,L],L]";
    r.rhs = {{"H2ess(L)", ess.dimension, {}}, {"Λ²(L/[L,L])", wedge_q, {}}};
    r.checks.push_back({"Im ψ = Ker π", psi_image == pi_kernel});
    r.checks.push_back({"π surjective", pi.map.rank() == coker});
    r.checks.push_back({"Ker ψ ⊆ H2 (dim H2ess = dim H2 − rank ψ)", ess.dimension + psi_image.dim() == full.dimension});
    r.settle();
    return r;
}

/// 0 → B(L,[L,L]) → B(L) → S²(L/[L,L]) → 0.
template <Field F>
VerificationReport coinvariant_sequence(const BasedAlgebra<F>& l)
{
    VerificationReport r;
    r.theorem = "B-sequence";
    r.field = l.field().name();
    const auto& K = l.field();
    MultilinearBasis s2(l.dim(), MultilinearKind::sym2);
    auto d = derived(l);
    QuotientSpace<F> ab(l.dim(), d);
    auto proj = sym2_projection(K, s2, ab);
    auto w = action_span(l);
    auto left = sym_span(K, s2, l.whole(), d).sum(w);           // L∨[L,L] + W
    auto kernel_route = proj.kernel().sum(w);                     // Ker(S²p) + W
    auto b = b_coinvariants(l);
    auto brel = b_relative(l, l.whole(), d);
    const std::size_t sq = MultilinearBasis(ab.dim(), MultilinearKind::sym2).dim();

    r.lhs = b.dimension;
    r.lhs_label = "B(L)";
    r.rhs = {{"B(L,[L,L])", brel.dimension, {}}, {"S²(L/[L,L])", sq, {}}};
    r.checks.push_back({"[L,S²L] maps to 0 in S²(L/[L,L])", proj.image_of(w).dim() == 0});
    r.checks.push_back({"S²L → S²(L/[L,L]) surjective", proj.rank() == sq});
    r.checks.push_back({"Ker(B(L) → S²(L/[L,L])) = B(L,[L,L])", kernel_route == left});
    r.settle();
    return r;
}

/// 0 → B(L, I∩J) + B(I,J) → B(L,J) → B(L/I, (I+J)/I) → 0.
template <Field F>
VerificationReport ideal_sequence(const BasedAlgebra<F>& l, const Subspace<F>& i, const Subspace<F>& j)
{
    require_ideal(l, i, "ideal sequence (I)");
    require_ideal(l, j, "ideal sequence (J)");
    VerificationReport r;
    r.theorem = "B-ideal-sequence";
    r.field = l.field().name();
    const auto& K = l.field();
    MultilinearBasis s2(l.dim(), MultilinearKind::sym2);
    auto w = action_span(l);
    auto whole = l.whole();
    auto left = sym_span(K, s2, whole, i.intersection(j)).sum(sym_span(K, s2, i, j)).sum(w);
    auto middle = sym_span(K, s2, whole, j).sum(w);

    auto lq = quotient_algebra(l, i);
    QuotientSpace<F> q(l.dim(), i);
    std::vector<SparseVector<F>> ij_images;
    const auto ij = i.sum(j);
    for (const auto& v : ij.basis()) ij_images.push_back(q.coords(v));
    auto ij_q = Subspace<F>::span(K, lq.dim(), ij_images);
    auto right = b_relative(lq, lq.whole(), ij_q);

    auto proj = sym2_projection(K, s2, q);
    auto wq = action_span(lq);
    auto kernel_route = proj.preimage(wq, middle);
    auto image_route = proj.image_of(middle).sum(wq);
    MultilinearBasis s2q(lq.dim(), MultilinearKind::sym2);
    auto right_num = sym_span(K, s2q, lq.whole(), ij_q).sum(wq);

    r.lhs = middle.dim() - w.dim();
    r.lhs_label = "B(L,J)";
    r.rhs = {{"B(L,I∩J)+B(I,J)", left.dim() - w.dim(), {}}, {"B(L/I,(I+J)/I)", right.dimension, {}}};
    r.checks.push_back({"left ⊆ B(L,J)", middle.contains(left)});
    r.checks.push_back({"kernel = left term", kernel_route == left});
    r.checks.push_back({"image = B(L/I,(I+J)/I)", image_route == right_num});
    r.settle();
    return r;
}

} // namespace detail

/// Exactness of the five-term sequence, the B(L) sequence, and (when ideals are
/// supplied) the ideal sequence for (I, J) and its special case J = [L,L].
template <Field F>
VerificationReport verify_exact_sequences(const BasedAlgebra<F>& l,
                                          const std::optional<std::pair<Subspace<F>, Subspace<F>>>& ideals = std::nullopt)
{
    VerificationReport r;
    r.theorem = "exact-sequences";
    r.field = l.field().name();
    r.subreports.push_back(detail::five_term_sequence(l));
    r.subreports.push_back(detail::coinvariant_sequence(l));
    if (ideals) {
        r.subreports.push_back(detail::ideal_sequence(l, ideals->first, ideals->second));
        auto special = detail::ideal_sequence(l, ideals->first, derived(l));
        special.theorem = "B-ideal-sequence (J=[L,L])";
        r.subreports.push_back(std::move(special));
    }
    r.lhs_label = "failing sequences";
    r.lhs = 0;
    for (const auto& s : r.subreports)
        if (!s.all_pass()) ++r.lhs;
    r.settle();
    return r;
}

} // namespace liehom
