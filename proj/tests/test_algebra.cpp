#include "liehom/catalog.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace liehom;

namespace {

const std::vector<FieldSpec>& fields()
{
    static const std::vector<FieldSpec> f{Rationals{}, PrimeField(3), PrimeField(5), PrimeField(7)};
    return f;
}

} // namespace

TEST(Algebra, CatalogEntriesSatisfyTheirAxioms)
{
    for (const auto& spec : fields())
        std::visit(
            [](const auto& K) {
                for (const auto& name : lie_catalog_examples())
                    EXPECT_TRUE(validate(make_lie(name, K)).ok()) << name << " over " << K.name();
                for (const auto& name : assoc_catalog_examples()) {
                    auto a = make_assoc(name, K);
                    EXPECT_TRUE(validate(a).ok()) << name << " over " << K.name();
                    EXPECT_TRUE(a.is_unital()) << name;
                }
            },
            spec);
}

TEST(Algebra, CatalogDimensions)
{
    Rationals Q;
    EXPECT_EQ(make_lie("abelian2", Q).dim(), 2u);
    EXPECT_EQ(make_lie("heisenberg1", Q).dim(), 3u);
    EXPECT_EQ(make_lie("heisenberg2", Q).dim(), 5u);
    EXPECT_EQ(make_lie("sl2", Q).dim(), 3u);
    EXPECT_EQ(make_lie("sl3", Q).dim(), 8u);
    EXPECT_EQ(make_lie("gl2", Q).dim(), 4u);
    EXPECT_EQ(make_assoc("square_zero2", Q).dim(), 3u);
    EXPECT_EQ(make_assoc("trunc3", Q).dim(), 3u);
    EXPECT_EQ(make_assoc("matrix2", Q).dim(), 4u);
    EXPECT_EQ(make_assoc("upper_triangular2", Q).dim(), 3u);
    EXPECT_EQ(make_assoc("cyclic_group_algebra3", Q).dim(), 3u);
    EXPECT_THROW(make_lie("sl1", Q), InputError);
    EXPECT_THROW(make_assoc("octonions", Q), InputError);
}

TEST(Algebra, Sl2Relations)
{
    Rationals Q;
    auto l = make_lie("sl2", Q);
    ASSERT_EQ(l.labels(), (std::vector<std::string>{"h", "e", "f"}));
    using V = SparseVector<Rationals>;
    EXPECT_EQ(l.product(0, 1), V::from_ints(Q, {0, 2, 0}));
    EXPECT_EQ(l.product(0, 2), V::from_ints(Q, {0, 0, -2}));
    EXPECT_EQ(l.product(1, 2), V::from_ints(Q, {1, 0, 0}));
}

TEST(Algebra, CommutativityFlags)
{
    Rationals Q;
    for (const auto* name : {"unit_field", "dual_numbers", "trunc3", "square_zero2", "product_fields2", "cyclic_group_algebra3"})
        EXPECT_TRUE(make_assoc(name, Q).is_commutative()) << name;
    for (const auto* name : {"matrix2", "upper_triangular2"}) EXPECT_FALSE(make_assoc(name, Q).is_commutative()) << name;
}

TEST(Algebra, MinusSatisfiesJacobi)
{
    for (const auto& spec : fields())
        std::visit(
            [](const auto& K) {
                for (const auto& name : assoc_catalog_examples()) {
                    auto m = minus(make_assoc(name, K));
                    EXPECT_TRUE(validate(m).ok()) << name << " over " << K.name();
                }
            },
            spec);
}

// (a∘b)∘c − (a∘c)∘b = ¼[a,[b,c]] holds in every associative algebra in odd characteristic.
TEST(Algebra, JordanIdentityOnBasisTriples)
{
    for (const auto& spec : fields())
        std::visit(
            [](const auto& K) {
                const auto quarter = K.inv(K.from_int(4));
                for (const auto& name : assoc_catalog_examples()) {
                    auto a = make_assoc(name, K);
                    if (a.dim() > 9) continue;
                    auto m = minus(a);
                    for (std::size_t i = 0; i < a.dim(); ++i)
                        for (std::size_t j = 0; j < a.dim(); ++j)
                            for (std::size_t k = 0; k < a.dim(); ++k) {
                                auto x = a.basis_vector(i), y = a.basis_vector(j), z = a.basis_vector(k);
                                auto lhs = sub(K, jordan(a, jordan(a, x, y), z), jordan(a, jordan(a, x, z), y));
                                auto rhs = scale(K, m.bracket(x, m.bracket(y, z)), quarter);
                                ASSERT_EQ(lhs, rhs) << name << " (" << i << "," << j << "," << k << ")";
                            }
                }
            },
            spec);
}

TEST(Algebra, JordanRefusesCharacteristicTwo)
{
    PrimeField F2(2);
    auto a = make_assoc("matrix2", F2);
    EXPECT_THROW(jordan(a, a.basis_vector(0), a.basis_vector(1)), UnsupportedCharacteristic);
}

TEST(Algebra, CurrentTensorMatchesOracleTable)
{
    Rationals Q;
    for (const auto* ln : {"heisenberg1", "sl2", "nonabelian2"})
        for (const auto* an : {"dual_numbers", "square_zero2", "cyclic_group_algebra3"}) {
            auto l = make_lie(ln, Q);
            auto a = make_assoc(an, Q);
            auto c = current_tensor(l, a);
            EXPECT_TRUE(validate(c).ok());
            EXPECT_EQ(oracle::table_of(c), oracle::tensor_table(oracle::table_of(l), oracle::table_of(a)));
        }
}

TEST(Algebra, AssocTensorAndMinusMatchOracle)
{
    Rationals Q;
    auto a = make_assoc("upper_triangular2", Q), b = make_assoc("square_zero2", Q);
    auto t = assoc_tensor(a, b);
    EXPECT_TRUE(validate(t).ok());
    EXPECT_EQ(oracle::table_of(t), oracle::tensor_table(oracle::table_of(a), oracle::table_of(b)));
    EXPECT_EQ(oracle::table_of(minus(t)), oracle::minus_table(oracle::table_of(t)));
}

TEST(Algebra, CurrentTensorPreconditions)
{
    Rationals Q;
    EXPECT_THROW(current_tensor(make_lie("sl2", Q), make_assoc("matrix2", Q)), PreconditionError);
    EXPECT_THROW(current_tensor(make_assoc("trunc3", Q), make_assoc("trunc3", Q)), PreconditionError);
}

TEST(Algebra, DerivedAlgebraMatchesOracle)
{
    Rationals Q;
    for (const auto& name : lie_catalog_examples()) {
        auto l = make_lie(name, Q);
        EXPECT_EQ(derived(l).dim(), oracle::commutator_dim(oracle::QOps{}, oracle::table_of(l), true)) << name;
    }
    for (const auto& name : assoc_catalog_examples()) {
        auto a = make_assoc(name, Q);
        EXPECT_EQ(derived(a).dim(), oracle::commutator_dim(oracle::QOps{}, oracle::table_of(a), false)) << name;
    }
}

TEST(Algebra, IdealsAndQuotients)
{
    Rationals Q;
    auto h = make_lie("heisenberg1", Q);
    auto z = derived(h);
    EXPECT_EQ(z.dim(), 1u);
    EXPECT_FALSE(ideal_witness(h, z).has_value());
    auto q = quotient_algebra(h, z);
    EXPECT_EQ(q.dim(), 2u);
    EXPECT_EQ(derived(q).dim(), 0u);
    auto span_e = Subspace<Rationals>::span(Q, 3, {h.basis_vector(0)});
    EXPECT_TRUE(ideal_witness(h, span_e).has_value());
    EXPECT_THROW(require_ideal(h, span_e, "test"), PreconditionError);
}
