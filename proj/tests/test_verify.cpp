#include "liehom/catalog.hpp"
#include "liehom/verify.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace liehom;

namespace {

std::vector<std::size_t> dims(const VerificationReport& r)
{
    std::vector<std::size_t> out;
    for (const auto& c : r.rhs) out.push_back(c.dimension);
    return out;
}

std::vector<std::size_t> dims(const FComponents& f)
{
    return {f.parts[0].dimension, f.parts[1].dimension, f.parts[2].dimension, f.parts[3].dimension};
}

const std::vector<std::string> tensor_assocs{"unit_field", "dual_numbers", "square_zero2", "trunc3", "matrix2", "upper_triangular2"};

} // namespace

TEST(Verify, CurrentH2PinnedInstances)
{
    Rationals Q;
    auto r = verify_current_h2(make_lie("heisenberg1", Q), make_assoc("square_zero2", Q));
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.lhs, 18u);
    EXPECT_EQ(dims(r), (std::vector<std::size_t>{6, 3, 3, 6}));

    auto s = verify_current_h2(make_lie("sl2", Q), make_assoc("square_zero2", Q));
    EXPECT_TRUE(s.all_pass());
    EXPECT_EQ(s.lhs, 1u);
    EXPECT_EQ(dims(s), (std::vector<std::size_t>{0, 1, 0, 0}));
}

TEST(Verify, UnitAlgebraCollapse)
{
    Rationals Q;
    for (const auto& ln : lie_catalog_examples()) {
        auto l = make_lie(ln, Q);
        if (l.dim() > 8) continue;
        auto r = verify_current_h2(l, make_assoc("unit_field", Q));
        EXPECT_TRUE(r.all_pass()) << ln;
        EXPECT_EQ(r.lhs, h2(l).dimension) << ln;
        EXPECT_EQ(r.rhs[1].dimension + r.rhs[2].dimension + r.rhs[3].dimension, 0u) << ln;
    }
}

TEST(Verify, CurrentH2LhsAgreesWithOracle)
{
    Rationals Q;
    oracle::QOps q;
    for (const auto* ln : {"abelian2", "nonabelian2", "heisenberg1", "sl2"})
        for (const auto* an : {"dual_numbers", "square_zero2", "trunc3", "cyclic_group_algebra3"}) {
            auto l = make_lie(ln, Q);
            auto a = make_assoc(an, Q);
            auto t = oracle::tensor_table(oracle::table_of(l), oracle::table_of(a));
            auto r = verify_current_h2(l, a);
            EXPECT_EQ(r.lhs, oracle::h2(q, t)) << ln << "⊗" << an;
            EXPECT_EQ(r.subreports.at(0).lhs, oracle::h2_ess(q, t)) << ln << "⊗" << an;
            EXPECT_TRUE(r.all_pass()) << ln << "⊗" << an;
            auto b = verify_b_current(l, a);
            EXPECT_EQ(b.lhs, oracle::b_dim(q, t)) << ln << "⊗" << an;
            EXPECT_TRUE(b.all_pass()) << ln << "⊗" << an;
        }
}

TEST(Verify, BCurrentPinnedInstances)
{
    Rationals Q;
    auto r = verify_b_current(make_lie("heisenberg1", Q), make_assoc("dual_numbers", Q));
    EXPECT_EQ(r.lhs, 10u);
    EXPECT_EQ(dims(r), (std::vector<std::size_t>{0, 10}));
    auto s = verify_b_current(make_lie("sl2", Q), make_assoc("unit_field", Q));
    EXPECT_EQ(s.lhs, 1u);
    EXPECT_EQ(dims(s), (std::vector<std::size_t>{1, 0}));
    // abelian L: B(L⊗A) = S²(L⊗A)
    auto t = verify_b_current(make_lie("abelian2", Q), make_assoc("trunc3", Q));
    EXPECT_EQ(t.lhs, 21u);
    EXPECT_TRUE(t.all_pass());
}

TEST(Verify, FComponentsPinned)
{
    Rationals Q;
    auto K = make_assoc("unit_field", Q), sq = make_assoc("square_zero2", Q), m2 = make_assoc("matrix2", Q);
    EXPECT_EQ(dims(f_components(sq, m2)), (std::vector<std::size_t>{0, 0, 0, 0}));
    EXPECT_EQ(dims(f_components(m2, sq)), (std::vector<std::size_t>{1, 0, 1, 2}));
    for (const auto& bn : tensor_assocs) {
        auto b = make_assoc(bn, Q);
        EXPECT_EQ(dims(f_components(K, b)), (std::vector<std::size_t>{0, h2(minus(b)).dimension, 0, 0})) << bn;
    }
}

TEST(Verify, TensorH2PinnedInstances)
{
    Rationals Q;
    auto m2 = make_assoc("matrix2", Q), sq = make_assoc("square_zero2", Q);
    auto r = verify_tensor_h2(m2, m2);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.lhs, 0u);
    auto s = verify_tensor_h2(sq, m2);
    EXPECT_TRUE(s.all_pass());
    EXPECT_EQ(s.lhs, 4u);
}

TEST(Verify, TensorH2AllPairsAgainstOracle)
{
    Rationals Q;
    oracle::QOps q;
    for (const auto& an : tensor_assocs)
        for (const auto& bn : tensor_assocs) {
            auto a = make_assoc(an, Q), b = make_assoc(bn, Q);
            auto r = verify_tensor_h2(a, b);
            auto t = oracle::minus_table(oracle::tensor_table(oracle::table_of(a), oracle::table_of(b)));
            EXPECT_EQ(r.lhs, oracle::h2(q, t)) << an << "⊗" << bn;
            EXPECT_TRUE(r.all_pass()) << an << "⊗" << bn;
        }
}

TEST(Verify, MatrixRemarks)
{
    Rationals Q;
    auto r = verify_matrix_remarks(make_assoc("square_zero2", Q), 2);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.lhs, 4u);
    EXPECT_EQ(dims(r), (std::vector<std::size_t>{1, 3}));
    ASSERT_EQ(r.subreports.size(), 1u);
    EXPECT_EQ(r.subreports[0].lhs, 1u);
    auto k = verify_matrix_remarks(make_assoc("unit_field", Q), 2);
    EXPECT_EQ(k.lhs, 0u);
    EXPECT_TRUE(k.all_pass());
    // p | n: the sl check is skipped with a note
    auto f3 = verify_matrix_remarks(make_assoc("dual_numbers", PrimeField(3)), 3);
    EXPECT_TRUE(f3.subreports.empty());
    EXPECT_FALSE(f3.notes.empty());
    EXPECT_THROW(verify_matrix_remarks(make_assoc("dual_numbers", Q), 4), PreconditionError);
}

// verify_tensor_h2(a, M_n) and verify_matrix_remarks(a, n) compute the same H₂.
TEST(Verify, ConsistencyTriangle)
{
    Rationals Q;
    auto m2 = make_assoc("matrix2", Q);
    for (const auto* an : {"unit_field", "dual_numbers", "square_zero2", "trunc3", "upper_triangular2"}) {
        auto a = make_assoc(an, Q);
        auto t = verify_tensor_h2(a, m2);
        auto m = verify_matrix_remarks(a, 2);
        EXPECT_EQ(t.lhs, m.lhs) << an;
        EXPECT_EQ(t.rhs_total(), m.rhs_total()) << an;
    }
}

TEST(Verify, KunnethComparisonReportsActualValues)
{
    Rationals Q;
    auto sq = make_assoc("square_zero2", Q);
    auto r = verify_kunneth(sq, sq);
    EXPECT_EQ(r.lhs, 10u);
    EXPECT_EQ(r.rhs_total(), 6u);
    EXPECT_FALSE(r.pass);
    EXPECT_THROW(verify_kunneth(make_assoc("matrix2", Q), sq), PreconditionError);
}

TEST(Verify, CharacteristicTwoIsRefused)
{
    PrimeField F2(2);
    auto l = make_lie("heisenberg1", F2);
    auto a = make_assoc("dual_numbers", F2);
    auto m = make_assoc("matrix2", F2);
    try {
        verify_current_h2(l, a);
        FAIL() << "expected a refusal";
    } catch (const UnsupportedCharacteristic& e) {
        EXPECT_NE(std::string(e.what()).find("requires characteristic ≠ 2"), std::string::npos);
    }
    EXPECT_THROW(verify_b_current(l, a), UnsupportedCharacteristic);
    EXPECT_THROW(verify_tensor_h2(m, m), UnsupportedCharacteristic);
    EXPECT_THROW(verify_matrix_remarks(a, 2), UnsupportedCharacteristic);
    EXPECT_THROW(f_components(m, a), UnsupportedCharacteristic);
}

TEST(Verify, SmallPrimesPassOnIntegerTables)
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField K(p);
        for (const auto* ln : {"heisenberg1", "sl2", "nonabelian2"})
            for (const auto* an : {"dual_numbers", "square_zero2", "trunc3"}) {
                EXPECT_TRUE(verify_current_h2(make_lie(ln, K), make_assoc(an, K)).all_pass()) << ln << an << p;
                EXPECT_TRUE(verify_b_current(make_lie(ln, K), make_assoc(an, K)).all_pass()) << ln << an << p;
            }
        EXPECT_TRUE(verify_tensor_h2(make_assoc("square_zero2", K), make_assoc("matrix2", K)).all_pass()) << p;
    }
}

TEST(Verify, SettleComputesPass)
{
    VerificationReport r;
    r.lhs = 3;
    r.rhs = {{"a", 1, {}}, {"b", 2, {}}};
    r.settle();
    EXPECT_TRUE(r.pass);
    r.checks.push_back({"broken", false});
    r.settle();
    EXPECT_FALSE(r.pass);
}
