#include "liehom/catalog.hpp"
#include "liehom/multilinear.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liehom;

TEST(Multilinear, IndexIsABijection)
{
    for (std::size_t n = 0; n < 9; ++n) {
        MultilinearBasis w2(n, MultilinearKind::wedge2), s2(n, MultilinearKind::sym2), w3(n, MultilinearKind::wedge3);
        EXPECT_EQ(w2.dim(), n * (n - (n ? 1 : 0)) / 2);
        EXPECT_EQ(s2.dim(), n * (n + 1) / 2);
        EXPECT_EQ(w3.dim(), n < 3 ? 0 : n * (n - 1) * (n - 2) / 6);
        for (std::size_t f = 0; f < w2.dim(); ++f) EXPECT_EQ(w2.index(w2.tuple(f)[0], w2.tuple(f)[1]), f);
        for (std::size_t f = 0; f < s2.dim(); ++f) EXPECT_EQ(s2.index(s2.tuple(f)[0], s2.tuple(f)[1]), f);
        for (std::size_t f = 0; f < w3.dim(); ++f) {
            const auto& t = w3.tuple(f);
            EXPECT_EQ(w3.index(t[0], t[1], t[2]), f);
        }
    }
    MultilinearBasis w2(4, MultilinearKind::wedge2);
    EXPECT_THROW(w2.index(2, 2), DimensionError);
    EXPECT_THROW(w2.index(3, 1), DimensionError);
}

TEST(Multilinear, WedgeIsAlternatingAndSymIsSymmetric)
{
    Rationals Q;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    const std::size_t n = 5;
    MultilinearBasis w2(n, MultilinearKind::wedge2), s2(n, MultilinearKind::sym2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long long> a(n), b(n);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        auto x = SparseVector<Rationals>::from_ints(Q, a), y = SparseVector<Rationals>::from_ints(Q, b);
        EXPECT_TRUE(add(Q, wedge(Q, w2, x, y), wedge(Q, w2, y, x)).is_zero());
        EXPECT_TRUE(wedge(Q, w2, x, x).is_zero());
        EXPECT_EQ(sym(Q, s2, x, y), sym(Q, s2, y, x));
        // oracle coordinates
        oracle::QOps ops;
        std::vector<mpq_class> ad, bd;
        for (auto x : a) ad.emplace_back(static_cast<long>(x));
        for (auto x : b) bd.emplace_back(static_cast<long>(x));
        EXPECT_EQ(wedge(Q, w2, x, y).to_dense(w2.dim()), oracle::wedge_dense(ops, ad, bd));
        EXPECT_EQ(sym(Q, s2, x, y).to_dense(s2.dim()), oracle::sym_dense(ops, ad, bd));
    }
}

TEST(Multilinear, ExpandFlattenRoundTrip)
{
    PrimeField F7(7);
    std::mt19937 rng(8);
    for (auto kind : {MultilinearKind::wedge2, MultilinearKind::wedge3, MultilinearKind::sym2})
        for (std::size_t n = 1; n < 6; ++n) {
            MultilinearBasis b(n, kind);
            std::vector<long long> dense(b.dim());
            for (auto& x : dense) x = static_cast<long long>(rng() % 7);
            auto v = SparseVector<PrimeField>::from_ints(F7, dense);
            auto t = expand(F7, b, v);
            EXPECT_EQ(flatten<PrimeField>(b, t), v);
            // alternation / symmetry of the expanded tensor
            if (b.arity() == 2)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        auto ij = t[i * n + j], ji = t[j * n + i];
                        if (kind == MultilinearKind::sym2) EXPECT_EQ(ij, ji);
                        else EXPECT_TRUE(F7.is_zero(F7.add(ij, ji)));
                    }
        }
}

TEST(Multilinear, D2AfterD3VanishesAcrossCatalog)
{
    auto check = [](const auto& l, const std::string& name) {
        auto ce = ce_differentials(l);
        EXPECT_TRUE(ce.d2.after(ce.d3).is_zero()) << name;
    };
    Rationals Q;
    PrimeField F5(5), F3(3);
    for (const auto& name : lie_catalog_examples()) {
        check(make_lie(name, Q), name);
        check(make_lie(name, F5), name);
        check(make_lie(name, F3), name);
    }
    for (const auto& name : assoc_catalog_examples())
        if (make_assoc(name, Q).dim() <= 9) check(minus(make_assoc(name, Q)), "minus " + name);
    for (const auto* ln : {"heisenberg1", "sl2"})
        for (const auto* an : {"square_zero2", "trunc3"})
            check(current_tensor(make_lie(ln, Q), make_assoc(an, Q)), std::string(ln) + "⊗" + an);
}

TEST(Multilinear, CeMatricesMatchOracle)
{
    Rationals Q;
    oracle::QOps ops;
    for (const auto* name : {"heisenberg1", "sl2", "nonabelian2", "gl2", "sl3"}) {
        auto l = make_lie(name, Q);
        auto ce = ce_differentials(l);
        auto t = oracle::table_of(l);
        EXPECT_EQ(ce.d2.rank(), oracle::rank(ops, oracle::d2_rows(ops, t))) << name;
        auto rows = oracle::d3_rows(ops, t);
        const auto& m = ce.d3.matrix();
        for (std::size_t f = 0; f < rows.size(); ++f)
            for (std::size_t g = 0; g < rows[f].size(); ++g) ASSERT_EQ(m.at(g, f), rows[f][g]) << name;
    }
}

// ρ(x)ρ(y) − ρ(y)ρ(x) = ρ([x,y]) for the action of L on S²L.
TEST(Multilinear, Sym2ActionIsALieModule)
{
    Rationals Q;
    for (const auto& name : lie_catalog_examples()) {
        auto l = make_lie(name, Q);
        auto rho = lie_action_sym2(l);
        MultilinearBasis s2(l.dim(), MultilinearKind::sym2);
        for (std::size_t x = 0; x < l.dim(); ++x)
            for (std::size_t y = 0; y < l.dim(); ++y)
                for (std::size_t f = 0; f < s2.dim(); ++f) {
                    auto v = SparseVector<Rationals>::unit(Q, f);
                    auto lhs = sub(Q, rho[x].apply(rho[y].apply(v)), rho[y].apply(rho[x].apply(v)));
                    Accumulator<Rationals> acc(Q, s2.dim());
                    for (const auto& [k, c] : l.product(x, y).entries()) acc.add(rho[k].apply(v), c);
                    ASSERT_EQ(lhs, acc.take()) << name;
                }
    }
}

TEST(Multilinear, PiMapOnHeisenberg)
{
    Rationals Q;
    auto pi = pi_map(make_lie("heisenberg1", Q));
    EXPECT_EQ(pi.abelianization.dim(), 2u);
    EXPECT_EQ(pi.derived_quotient.dim(), 1u);
    EXPECT_EQ(pi.map.rank(), 1u);
    auto pi_sl = pi_map(make_lie("sl2", Q));
    EXPECT_EQ(pi_sl.abelianization.dim(), 0u);
    EXPECT_EQ(pi_sl.derived_quotient.dim(), 0u);
}

TEST(Multilinear, SymMultiplication)
{
    Rationals Q;
    auto a = make_assoc("square_zero2", Q);
    auto m = sym_mult_map(a, SymTarget::algebra);
    EXPECT_EQ(m.rank(), 3u);
    EXPECT_EQ(m.kernel().dim(), 3u); // x∨x, x∨y, y∨y
    auto mat = make_assoc("matrix2", Q);
    EXPECT_EQ(sym_mult_map(mat, SymTarget::mod_commutators).codomain_dim(), 1u);
    EXPECT_THROW(sym_mult_map(make_assoc("matrix2", PrimeField(2)), SymTarget::algebra), UnsupportedCharacteristic);
}
