#include "doctest.h"

#include <random>

#include "ggprel/harness.hpp"
#include "ggprel/parameters.hpp"
#include "ggprel/partitions.hpp"
#include "support.hpp"

using namespace ggprel;
using ggprel::testing::P;

TEST_CASE("discrete symbols")
{
    auto a = make_discrete("a", 1);
    CHECK(a.is_discrete());
    CHECK(a.base_dim() == 1);
    CHECK_FALSE(a.s().has_value());
    CHECK(make_discrete("b", 2).base_dim() == 2);
    CHECK_THROWS_AS(make_discrete("c", 0), std::invalid_argument);
    CHECK_THROWS_AS(make_discrete("", 1), std::invalid_argument);
}

TEST_CASE("complementary symbols")
{
    auto c = make_complementary("a", 1, Rational(1, 3));
    CHECK(c.is_complementary());
    CHECK(*c.s() == Rational(1, 3));
    CHECK_THROWS_AS(make_complementary("a", 1, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_complementary("a", 1, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_complementary("a", 1, Rational(-1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(make_complementary("a", 0, Rational(1, 5)), std::invalid_argument);

    auto r = make_complementary("a", 1, Rational(2, 8));
    CHECK(r.s()->numerator() == 1);
    CHECK(r.s()->denominator() == 4);
    CHECK(r == make_complementary("a", 1, Rational(1, 4)));
}

TEST_CASE("symbol order: discrete first, then label, k, s")
{
    auto d = make_discrete("z", 5);
    auto c = make_complementary("a", 1, Rational(1, 3));
    CHECK(d < c);
    CHECK(make_discrete("a", 2) < make_discrete("b", 1));
    CHECK(make_discrete("a", 1) < make_discrete("a", 2));
    CHECK(make_complementary("a", 1, Rational(1, 6)) < c);
    CHECK(make_discrete("a", 1) != make_complementary("a", 1, Rational(1, 4)));
}

TEST_CASE("dual")
{
    auto third = make_complementary("a", 1, Rational(1, 3));
    auto sixth = make_complementary("a", 1, Rational(1, 6));
    auto quarter = make_complementary("a", 1, Rational(1, 4));
    CHECK(dual(third) == sixth);
    CHECK(dual(quarter) == quarter);
    CHECK(dual(dual(third)) == third);
    CHECK_THROWS_AS(dual(make_discrete("a", 1)), std::invalid_argument);
}

TEST_CASE("add merges and sorts")
{
    CHECK(P("L(a) x S2") + P("L(a) x S2") == P("2*L(a) x S2"));
    CHECK(P("L(a) x S2") + UnitaryParameter::zero() == P("L(a) x S2"));
    auto two = P("L(b) x S1") + P("L(a) x S2");
    REQUIRE(two.blocks().size() == 2);
    CHECK(two.blocks()[0].eta.label() == "a");
    CHECK(two.blocks()[1].eta.label() == "b");
}

TEST_CASE("construction drops S_0 and zero multiplicities")
{
    auto a = make_discrete("a", 1);
    UnitaryParameter p({Block{a, 0, 3}, Block{a, 2, 0}, Block{a, 1, 1}});
    CHECK(p == P("L(a) x S1"));
    CHECK_THROWS_AS(UnitaryParameter({Block{a, -1, 1}}), std::invalid_argument);
}

TEST_CASE("subtract")
{
    CHECK(subtract(P("2*L(a) x S2"), P("L(a) x S2")) == P("L(a) x S2"));
    auto p = P("L(a) x S3 + L(b,s=1/3) x S1");
    CHECK(subtract(p, p) == UnitaryParameter::zero());
    CHECK_FALSE(subtract(P("L(a) x S2"), P("L(b) x S2")).has_value());
    CHECK_FALSE(subtract(P("L(a) x S2"), P("2*L(a) x S2")).has_value());
}

TEST_CASE("dimension")
{
    CHECK(dimension(P("L(a,k=2) x S3")) == 6);
    CHECK(dimension(P("L(a,s=1/3) x S2")) == 4);
    CHECK(dimension(UnitaryParameter::zero()) == 0);
}

TEST_CASE("nt measure")
{
    CHECK(nt_measure(P("L(a) x S3 + L(b) x S1")) == 2);
    CHECK(nt_measure(P("2*L(a) x S2")) == 2);
    CHECK(nt_measure(P("3*L(a) x S1 + L(b,s=1/4) x S1")) == 0);
}

TEST_CASE("sl2 type")
{
    CHECK(sl2_type(P("L(a,k=2) x S3")) == Partition{3, 3});
    CHECK(sl2_type(P("L(a,s=1/3) x S2")) == Partition{2, 2});
    CHECK(sl2_type(P("L(a) x S1 + L(b) x S1")) == Partition{1, 1});
    CHECK(sl2_type(P("L(a) x S1 + L(b,k=2) x S4 + L(c,s=1/5) x S2")) == Partition{4, 4, 2, 2, 1});
}

TEST_CASE("generic and Arthur type")
{
    CHECK(is_generic(P("L(a) x S1 + L(a,s=1/3) x S1")));
    CHECK_FALSE(is_generic(P("L(a) x S2")));
    CHECK(is_generic(UnitaryParameter::zero()));
    CHECK(is_arthur_type(P("L(a) x S3")));
    CHECK_FALSE(is_arthur_type(P("L(a,s=1/4) x S1")));
    CHECK(is_arthur_type(UnitaryParameter::zero()));
}

TEST_CASE("field profile")
{
    auto p = P("L(a,k=2) x S1");
    CHECK(is_realizable(p, FieldProfile::None));
    CHECK(is_realizable(p, FieldProfile::Real));
    CHECK_FALSE(is_realizable(p, FieldProfile::Complex));
    CHECK_FALSE(is_realizable(P("L(a,k=3) x S1"), FieldProfile::Real));
    CHECK_THROWS_AS(validate_field(p, FieldProfile::Complex), std::invalid_argument);
    CHECK_NOTHROW(validate_field(p, FieldProfile::Real));
}

TEST_CASE("monoid and measure properties on random parameters")
{
    auto spec = desk_corpus_spec();
    spec.max_dim = 16;
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        auto p = random_parameter(spec, rng);
        auto q = random_parameter(spec, rng);
        auto r = random_parameter(spec, rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(UnitaryParameter(p.blocks()) == p);
        CHECK(nt_measure(p + q) == nt_measure(p) + nt_measure(q));
        CHECK(sl2_type(p).sum() == dimension(p));
        CHECK(subtract(p + q, q) == p);
        const bool generic = is_generic(p);
        CHECK(generic == (nt_measure(p) == 0));
        auto parts = sl2_type(p).parts();
        CHECK(generic == std::all_of(parts.begin(), parts.end(), [](int x) { return x == 1; }));
    }
}
