#include "liehom/catalog.hpp"
#include "liehom/cyclic.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace liehom;

TEST(Cyclic, KnownHc1Values)
{
    Rationals Q;
    EXPECT_EQ(hc1(make_assoc("unit_field", Q)).dimension, 0u);
    EXPECT_EQ(hc1(make_assoc("dual_numbers", Q)).dimension, 0u);
    EXPECT_EQ(hc1(make_assoc("trunc3", Q)).dimension, 0u);
    EXPECT_EQ(hc1(make_assoc("square_zero2", Q)).dimension, 1u);
    EXPECT_EQ(hc1(make_assoc("square_zero3", Q)).dimension, 3u);
    EXPECT_EQ(hc1(make_assoc("product_fields3", Q)).dimension, 0u);
    EXPECT_EQ(hc1(make_assoc("cyclic_group_algebra3", Q)).dimension, 0u);
    EXPECT_EQ(hc1(make_assoc("matrix2", Q)).dimension, 0u);
}

TEST(Cyclic, Hc1MatchesDenseOracle)
{
    oracle::QOps q;
    oracle::POps p3{3}, p5{5};
    for (const auto& name : assoc_catalog_examples()) {
        auto t = oracle::table_of(make_assoc(name, Rationals{}));
        if (t.size() > 9) continue;
        EXPECT_EQ(hc1(make_assoc(name, Rationals{})).dimension, oracle::hc1(q, t)) << name;
        EXPECT_EQ(hc1(make_assoc(name, PrimeField(3))).dimension, oracle::hc1(p3, t)) << name;
        EXPECT_EQ(hc1(make_assoc(name, PrimeField(5))).dimension, oracle::hc1(p5, t)) << name;
    }
}

TEST(Cyclic, TensorProductsMatchDenseOracle)
{
    Rationals Q;
    oracle::QOps q;
    for (const auto* an : {"dual_numbers", "square_zero2", "trunc3"})
        for (const auto* bn : {"dual_numbers", "square_zero2", "trunc3"}) {
            auto a = make_assoc(an, Q), b = make_assoc(bn, Q);
            auto t = oracle::tensor_table(oracle::table_of(a), oracle::table_of(b));
            EXPECT_EQ(hc1(assoc_tensor(a, b)).dimension, oracle::hc1(q, t)) << an << "⊗" << bn;
        }
    // the value that contradicts the partial Künneth formula (which would predict 6)
    EXPECT_EQ(hc1(assoc_tensor(make_assoc("square_zero2", Q), make_assoc("square_zero2", Q))).dimension, 10u);
}

TEST(Cyclic, UnitWedgeLiesInT)
{
    for (const auto& spec : std::vector<FieldSpec>{Rationals{}, PrimeField(3), PrimeField(5)})
        std::visit(
            [](const auto& K) {
                for (const auto& name : assoc_catalog_examples()) {
                    auto a = make_assoc(name, K);
                    if (a.dim() > 9) continue;
                    auto t = t_span(a);
                    MultilinearBasis w2(a.dim(), MultilinearKind::wedge2);
                    for (std::size_t k = 0; k < a.dim(); ++k)
                        EXPECT_TRUE(t.contains(wedge(K, w2, *a.unit(), a.basis_vector(k)))) << name;
                }
            },
            spec);
}

TEST(Cyclic, TLiesInCommutatorKernel)
{
    for (const auto& spec : std::vector<FieldSpec>{Rationals{}, PrimeField(3), PrimeField(5)})
        std::visit(
            [](const auto& K) {
                for (const auto& name : assoc_catalog_examples()) {
                    auto a = make_assoc(name, K);
                    if (a.dim() > 9) continue;
                    auto c = commutator_map(a);
                    const auto t = t_span(a);
                    for (const auto& v : t.basis()) EXPECT_TRUE(c.apply(v).is_zero()) << name;
                }
            },
            spec);
}

TEST(Cyclic, VariantsAgreeOnCommutativeAlgebras)
{
    Rationals Q;
    for (const auto& name : assoc_catalog_examples()) {
        auto a = make_assoc(name, Q);
        if (!a.is_commutative()) continue;
        EXPECT_EQ(hc1(a, Hc1Variant::cycles).dimension, hc1(a, Hc1Variant::full_wedge).dimension) << name;
    }
    // on M₂ the bracket map is nonzero, so the variants differ
    auto m = make_assoc("matrix2", Q);
    EXPECT_LT(hc1(m, Hc1Variant::cycles).dimension, hc1(m, Hc1Variant::full_wedge).dimension);
}

TEST(Cyclic, TauFormula)
{
    Rationals Q;
    auto a = make_assoc("square_zero2", Q); // basis 1, x, y
    MultilinearBasis w2(3, MultilinearKind::wedge2);
    // τ(1,x,y) = x∧y + y∧x + xy∧1 = 0
    EXPECT_TRUE(cyclic_tau(a, w2, 0, 1, 2).is_zero());
    // τ(x,1,1) = x∧1 + x∧1 + 1∧x = x∧1
    EXPECT_EQ(cyclic_tau(a, w2, 1, 0, 0), scale(Q, SparseVector<Rationals>::unit(Q, w2.index(0, 1)), mpq_class(-1)));
    EXPECT_EQ(t_span(a).dim(), 2u);
    EXPECT_EQ(hc1(a).representatives.size(), 1u);
}

TEST(Cyclic, RelativeInvariants)
{
    Rationals Q;
    // commutative: [A,A] = 0, so the relative groups equal the absolute ones
    for (const auto* name : {"dual_numbers", "square_zero2", "trunc3"}) {
        auto a = make_assoc(name, Q);
        auto r = relative_invariants(a);
        EXPECT_EQ(r.commutators.dim(), 0u);
        EXPECT_EQ(r.t_relative.dimension, t_span(a).dim()) << name;
        EXPECT_EQ(r.hc1_relative.dimension, hc1(a).dimension) << name;
    }
    auto m = relative_invariants(make_assoc("matrix2", Q));
    EXPECT_EQ(m.commutators.dim(), 3u);
    EXPECT_EQ(m.a_commutators.dim(), 4u);
    EXPECT_EQ(m.t_relative.dimension, 0u);
    EXPECT_EQ(m.hc1_relative.dimension, 0u);
    EXPECT_EQ(m.wedge_abelianization, 0u);
}

TEST(Cyclic, KerSymMult)
{
    Rationals Q;
    EXPECT_EQ(ker_sym_mult(make_assoc("unit_field", Q)).dim(), 0u);
    EXPECT_EQ(ker_sym_mult(make_assoc("square_zero2", Q)).dim(), 3u);
    EXPECT_EQ(ker_sym_mult(make_assoc("dual_numbers", Q)).dim(), 1u);
}
