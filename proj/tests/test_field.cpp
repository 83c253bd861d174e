#include "liehom/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liehom;

namespace {

template <Field F>
void check_axioms(const F& K, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-40, 40);
    auto draw = [&] {
        long den = 1 + std::abs(d(rng)) % 7;
        if (K.characteristic() != 0 && den % static_cast<long>(K.characteristic()) == 0) den = 1;
        mpq_class q(d(rng), den);
        q.canonicalize();
        return K.from_rational(q);
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto a = draw(), b = draw(), c = draw();
        EXPECT_TRUE(K.equal(K.add(a, b), K.add(b, a)));
        EXPECT_TRUE(K.equal(K.mul(a, b), K.mul(b, a)));
        EXPECT_TRUE(K.equal(K.add(K.add(a, b), c), K.add(a, K.add(b, c))));
        EXPECT_TRUE(K.equal(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c))));
        EXPECT_TRUE(K.equal(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c))));
        EXPECT_TRUE(K.equal(K.add(a, K.zero()), a));
        EXPECT_TRUE(K.equal(K.mul(a, K.one()), a));
        EXPECT_TRUE(K.is_zero(K.add(a, K.neg(a))));
        EXPECT_TRUE(K.equal(K.sub(a, b), K.add(a, K.neg(b))));
        if (!K.is_zero(a)) EXPECT_TRUE(K.equal(K.mul(a, K.inv(a)), K.one()));
        auto acc = a;
        K.fma(acc, b, c);
        EXPECT_TRUE(K.equal(acc, K.add(a, K.mul(b, c))));
    }
}

} // namespace

TEST(Field, RationalAxioms)
{
    std::mt19937 rng(11);
    check_axioms(Rationals{}, rng);
}

TEST(Field, PrimeFieldAxioms)
{
    std::mt19937 rng(12);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 2147483629u}) check_axioms(PrimeField(p), rng);
}

TEST(Field, PrimeFieldRejectsComposite)
{
    EXPECT_THROW(PrimeField(9), InputError);
    EXPECT_THROW(PrimeField(1), InputError);
    EXPECT_THROW(PrimeField(0), InputError);
}

TEST(Field, RationalReductionModP)
{
    PrimeField f5(5);
    EXPECT_EQ(f5.from_rational(mpq_class(1, 2)), 3u);
    EXPECT_EQ(f5.from_rational(mpq_class(-3, 2)), 1u);
    EXPECT_THROW(f5.from_rational(mpq_class(1, 5)), InputError);
    EXPECT_EQ(f5.to_rational(4), mpq_class(-1));
    EXPECT_EQ(f5.to_rational(2), mpq_class(2));
}

TEST(Field, ParseFieldNames)
{
    EXPECT_EQ(field_name(parse_field("q")), "Q");
    EXPECT_EQ(field_name(parse_field("Q")), "Q");
    EXPECT_EQ(field_name(parse_field("f5")), "F5");
    EXPECT_EQ(field_characteristic(parse_field("F7")), 7u);
    EXPECT_THROW(parse_field("F4"), InputError);
    EXPECT_THROW(parse_field("R"), InputError);
    EXPECT_THROW(parse_field("F"), InputError);
}

TEST(Field, HalfNeedsOddCharacteristic)
{
    EXPECT_EQ(half(PrimeField(7)), 4u);
    EXPECT_EQ(half(Rationals{}), mpq_class(1, 2));
    EXPECT_THROW(half(PrimeField(2)), UnsupportedCharacteristic);
}
