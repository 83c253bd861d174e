#pragma once

#include "liehom/catalog.hpp"
#include "liehom/cyclic.hpp"

#include <array>
#include <chrono>
#include <string>

namespace liehom {

namespace verify_detail {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Component product(std::string label, std::size_t a, std::size_t b) { return {std::move(label), a * b, {a, b}}; }

template <Field F>
void require_verifiable(const F& field, const std::string& theorem)
{
    if (field.characteristic() == 2)
        throw UnsupportedCharacteristic(theorem + " requires characteristic ≠ 2 (field " + field.name() + ")");
}

template <Field F>
void require_commutative_unital(const BasedAlgebra<F>& a, const std::string& who)
{
    if (!a.is_associative() || !a.is_commutative() || !a.is_unital())
        throw PreconditionError(who + ": the associative factor must be commutative and unital");
}

template <Field F>
void require_unital(const BasedAlgebra<F>& a, const std::string& who)
{
    if (!a.is_associative() || !a.is_unital()) throw PreconditionError(who + ": needs associative unital algebras");
}

} // namespace verify_detail

/// H₂(L⊗A) against H₂(L)⊗A ⊕ B(L)⊗HC₁(A) ⊕ Λ²(L/[L,L])⊗Ker(S²A→A) ⊕ S²(L/[L,L])⊗T(A),
/// with the essential-cycle version as a subreport.
template <Field F>
VerificationReport verify_current_h2(const BasedAlgebra<F>& l, const BasedAlgebra<F>& a)
{
    using namespace verify_detail;
    require_verifiable(l.field(), "current-algebra H2 decomposition");
    require_commutative_unital(a, "verify_current_h2");
    Stopwatch clock;
    auto la = current_tensor(l, a);

    VerificationReport r;
    r.theorem = "current-h2";
    r.field = l.field().name();
    r.lhs = h2(la).dimension;
    r.lhs_label = "H2(L⊗A)";

    const std::size_t h2l = h2(l).dimension;
    const std::size_t bl = b_coinvariants(l).dimension;
    const std::size_t hc = hc1(a).dimension;
    const std::size_t q = l.dim() - derived(l).dim();
    const std::size_t kerm = ker_sym_mult(a).dim();
    const std::size_t t = t_span(a).dim();
    r.rhs = {product("H2(L)⊗A", h2l, a.dim()), product("B(L)⊗HC1(A)", bl, hc),
             product("Λ²(L/[L,L])⊗Ker(S²A→A)", MultilinearBasis(q, MultilinearKind::wedge2).dim(), kerm),
             product("S²(L/[L,L])⊗T(A)", MultilinearBasis(q, MultilinearKind::sym2).dim(), t)};
    r.settle();

    VerificationReport ess;
    ess.theorem = "current-h2-ess";
    ess.field = r.field;
    ess.lhs = h2_ess(la).dimension;
    ess.lhs_label = "H2ess(L⊗A)";
    const std::size_t brel = b_relative(l, l.whole(), derived(l)).dimension;
    ess.rhs = {product("H2ess(L)⊗A", h2_ess(l).dimension, a.dim()), product("B(L,[L,L])⊗HC1(A)", brel, hc)};
    ess.settle();
    ess.seconds = clock.seconds();
    r.subreports.push_back(std::move(ess));
    r.seconds = clock.seconds();
    return r;
}

/// B(L⊗A) against B(L,[L,L])⊗A ⊕ S²((L/[L,L])⊗A).
template <Field F>
VerificationReport verify_b_current(const BasedAlgebra<F>& l, const BasedAlgebra<F>& a)
{
    using namespace verify_detail;
    require_verifiable(l.field(), "current-algebra B decomposition");
    require_commutative_unital(a, "verify_b_current");
    Stopwatch clock;
    auto la = current_tensor(l, a);
    VerificationReport r;
    r.theorem = "current-b";
    r.field = l.field().name();
    r.lhs = b_coinvariants(la).dimension;
    r.lhs_label = "B(L⊗A)";
    const std::size_t brel = b_relative(l, l.whole(), derived(l)).dimension;
    const std::size_t qa = (l.dim() - derived(l).dim()) * a.dim();
    r.rhs = {product("B(L,[L,L])⊗A", brel, a.dim()),
             {"S²((L/[L,L])⊗A)", MultilinearBasis(qa, MultilinearKind::sym2).dim(), {}}};
    r.settle();
    r.seconds = clock.seconds();
    return r;
}

/// The four summands of F(A,B).
struct FComponents {
    std::array<Component, 4> parts;
    std::size_t total() const { return parts[0].dimension + parts[1].dimension + parts[2].dimension + parts[3].dimension; }
};

template <Field F>
FComponents f_components(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    using namespace verify_detail;
    require_verifiable(a.field(), "F(A,B)");
    require_unital(a, "f_components");
    require_unital(b, "f_components");
    require_same_field(a, b);
    const auto& K = a.field();

    auto rel_a = relative_invariants(a);
    auto rel_b = relative_invariants(b);
    const std::size_t comm = rel_a.commutators.dim();
    const std::size_t acomm = rel_a.a_commutators.dim();

    // (3): Ker(S²A → A/[A,A]) / [A, S²A], action of A^(-) on S²A.
    auto ker3 = sym_mult_map(a, SymTarget::mod_commutators).kernel();
    auto w = action_span(minus(a));
    const std::size_t f3 = Subquotient<F>(ker3.sum(w), w).dim();
    if (!ker3.contains(w)) throw std::logic_error("f_components: [A,S²A] escapes Ker(S²A → A/[A,A])");

    // (4): Ker(S²(A/[A,A]) → A/A[A,A]) induced by the Jordan product.
    QuotientSpace<F> abel(a.dim(), rel_a.commutators);
    QuotientSpace<F> mod_acomm(a.dim(), rel_a.a_commutators);
    MultilinearBasis s2q(abel.dim(), MultilinearKind::sym2);
    std::vector<SparseVector<F>> cols;
    for (std::size_t f = 0; f < s2q.dim(); ++f) {
        const auto& t = s2q.tuple(f);
        SparseVector<F> x = abel.lift(t[0]), y = abel.lift(t[1]);
        cols.push_back(mod_acomm.coords(a.is_commutative() ? a.multiply(x, y) : jordan(a, x, y)));
    }
    const std::size_t f4 = LinearMap<F>(K, s2q.dim(), mod_acomm.dim(), std::move(cols)).kernel().dim();

    FComponents out;
    out.parts[0] = product("A[A,A]/[A,A]⊗HC1(B)", acomm - comm, hc1(b).dimension);
    out.parts[1] = product("A/A[A,A]⊗H2(B⁻)", a.dim() - acomm, h2(minus(b)).dimension);
    out.parts[2] = product("Ker(S²A→A/[A,A])/[A,S²A]⊗HC1(B,[B,B])", f3, rel_b.hc1_relative.dimension);
    out.parts[3] = product("Ker(S²(A/[A,A])→A/A[A,A])⊗T(B,[B,B])", f4, rel_b.t_relative.dimension);
    return out;
}

/// H₂((A⊗B)⁽⁻⁾) against F(A,B) ⊕ F(B,A).
template <Field F>
VerificationReport verify_tensor_h2(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    using namespace verify_detail;
    require_verifiable(a.field(), "tensor-algebra H2 decomposition");
    Stopwatch clock;
    VerificationReport r;
    r.theorem = "tensor-h2";
    r.field = a.field().name();
    auto fab = f_components(a, b);
    auto fba = f_components(b, a);
    r.lhs = h2(minus(assoc_tensor(a, b))).dimension;
    r.lhs_label = "H2((A⊗B)⁻)";
    for (auto c : fab.parts) {
        c.label = "F(A,B): " + c.label;
        r.rhs.push_back(std::move(c));
    }
    for (auto c : fba.parts) {
        for (auto& ch : c.label) ch = ch == 'A' ? 'B' : ch == 'B' ? 'A' : ch;
        c.label = "F(B,A): " + c.label;
        r.rhs.push_back(std::move(c));
    }
    r.settle();
    r.seconds = clock.seconds();
    return r;
}

/// H₂(gl_n(A)) = HC₁(A) ⊕ Λ²(A/[A,A]); for commutative A also H₂(sl_n ⊗ A) = HC₁(A)
/// (skipped with a note when char | n).
template <Field F>
VerificationReport verify_matrix_remarks(const BasedAlgebra<F>& a, std::size_t n)
{
    using namespace verify_detail;
    require_verifiable(a.field(), "matrix-algebra H2 formulas");
    require_unital(a, "verify_matrix_remarks");
    if (n < 2 || n > 3) throw PreconditionError("verify_matrix_remarks: n must be 2 or 3");
    Stopwatch clock;
    const auto& K = a.field();
    const std::size_t hc = hc1(a).dimension;

    VerificationReport r;
    r.theorem = "gl-n";
    r.field = K.name();
    r.lhs = h2(minus(assoc_tensor(a, make_assoc("matrix" + std::to_string(n), K)))).dimension;
    r.lhs_label = "H2(gl" + std::to_string(n) + "(A))";
    const std::size_t q = a.dim() - derived(a).dim();
    r.rhs = {{"HC1(A)", hc, {}}, {"Λ²(A/[A,A])", binomial2(q), {}}};
    r.settle();

    if (!a.is_commutative()) {
        r.notes.push_back("sl_n check skipped: A is noncommutative");
    } else if (K.characteristic() != 0 && n % K.characteristic() == 0) {
        r.notes.push_back("sl_n check skipped: characteristic divides n");
    } else {
        VerificationReport s;
        s.theorem = "sl-n";
        s.field = K.name();
        s.lhs = h2(current_tensor(make_lie("sl" + std::to_string(n), K), a)).dimension;
        s.lhs_label = "H2(sl" + std::to_string(n) + "⊗A)";
        s.rhs = {{"HC1(A)", hc, {}}};
        s.settle();
        r.subreports.push_back(std::move(s));
    }
    r.seconds = clock.seconds();
    return r;
}

/// dim HC₁(A⊗A') against dim HC₁(A)·dim A' + dim A·dim HC₁(A') for commutative A, A'.
template <Field F>
VerificationReport verify_kunneth(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    using namespace verify_detail;
    require_commutative_unital(a, "verify_kunneth");
    require_commutative_unital(b, "verify_kunneth");
    Stopwatch clock;
    VerificationReport r;
    r.theorem = "kunneth-hc1";
    r.field = a.field().name();
    r.lhs = hc1(assoc_tensor(a, b)).dimension;
    r.lhs_label = "HC1(A⊗A')";
    r.rhs = {product("HC1(A)⊗A'", hc1(a).dimension, b.dim()), product("A⊗HC1(A')", a.dim(), hc1(b).dimension)};
    r.settle();
    r.seconds = clock.seconds();
    return r;
}

} // namespace liehom
