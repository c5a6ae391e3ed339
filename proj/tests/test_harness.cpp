#include "doctest.h"

#include "ggprel/harness.hpp"
#include "ggprel/io.hpp"
#include "support.hpp"

using namespace ggprel;
using ggprel::testing::E;
using ggprel::testing::P;

TEST_CASE("enumerate tiny pool")
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1)};
    spec.max_d = 2;
    spec.max_mult = 1;
    spec.max_blocks = 2;
    spec.max_dim = 10;
    auto all = enumerate_parameters(spec);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == UnitaryParameter::zero());
    CHECK(all[1] == P("L(a) x S1"));
    CHECK(all[2] == P("L(a) x S1 + L(a) x S2"));
    CHECK(all[3] == P("L(a) x S2"));
    CHECK(count_parameters(spec) == 4);
}

TEST_CASE("empty pool yields only zero")
{
    CorpusSpec spec;
    spec.max_d = 3;
    spec.max_mult = 2;
    spec.max_dim = 5;
    auto all = enumerate_parameters(spec);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
}

TEST_CASE("enumeration count matches the product formula when unconstrained")
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1), make_complementary("c", 1, Rational(1, 3))};
    spec.max_d = 2;
    spec.max_mult = 2;
    spec.max_blocks = 100;
    spec.max_dim = 1000;
    // 3 symbols after D-closure, 2 values of d, 3 multiplicity choices each.
    std::uint64_t expected = 1;
    for (int i = 0; i < 6; ++i)
        expected *= 3;
    auto all = enumerate_parameters(spec);
    CHECK(all.size() == expected);
    CHECK(std::adjacent_find(all.begin(), all.end(), [](auto &x, auto &y) { return !(x < y); }) == all.end());
}

TEST_CASE("desk corpus: count, bounds, duplicates")
{
    auto spec = desk_corpus_spec();
    CHECK(enumeration_symbols(spec).size() == 5);
    auto all = enumerate_parameters(spec);
    CHECK(all.size() == count_parameters(spec));
    // Hand-checked generating-function count for weights {1} ∪ {2,2,2,2} per d, mult <= 2, dim <= 8.
    CHECK(all.size() == 480);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(dimension(all[i]) <= 8);
        if (i > 0)
            CHECK(all[i - 1] < all[i]);
        for (const auto &b : all[i].blocks())
            CHECK(b.mult <= 2);
    }
}

TEST_CASE("cardinality cap")
{
    auto spec = desk_corpus_spec();
    spec.max_count = 100;
    CHECK_THROWS_AS(enumerate_parameters(spec), ResourceLimitError);
    spec.max_d = 0;
    CHECK_THROWS_AS(count_parameters(spec), std::invalid_argument);
}

TEST_CASE("D-closure of the pool")
{
    CorpusSpec spec;
    spec.label_pool = {make_complementary("a", 1, Rational(1, 3))};
    auto syms = enumeration_symbols(spec);
    REQUIRE(syms.size() == 2);
    CHECK(syms[0] == E("L(a,s=1/6)"));
    CHECK(syms[1] == E("L(a,s=1/3)"));
}

TEST_CASE("corpus spec json")
{
    auto spec = desk_corpus_spec();
    auto doc = encode_corpus_spec(spec);
    auto back = decode_corpus_spec(doc);
    CHECK(encode_corpus_spec(back) == doc);
    doc["max_d"] = "four";
    CHECK_THROWS_AS(decode_corpus_spec(doc), SchemaError);
    doc = encode_corpus_spec(spec);
    doc["label_pool"][1] = "L(";
    try {
        decode_corpus_spec(doc);
        FAIL("accepted a bad symbol");
    } catch (const SchemaError &e) {
        CHECK(e.path() == "/label_pool/1");
    }
}

TEST_CASE("selftest on a generic-only corpus is fully relevant")
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1), make_complementary("c", 1, Rational(1, 5))};
    spec.max_d = 1;
    spec.max_mult = 2;
    spec.max_dim = 6;
    spec.max_blocks = 6;
    auto s = selftest_equivalence(spec, 1);
    CHECK(s.ok());
    CHECK(s.pairs == s.parameters * s.parameters);
    CHECK(s.relevant == s.pairs);
    CHECK(s.generic_pairs == s.pairs);
}

TEST_CASE("selftest on a single-parameter corpus")
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1)};
    spec.max_d = 3;
    spec.max_mult = 1;
    spec.max_dim = 3;
    spec.max_blocks = 1;
    auto all = enumerate_parameters(spec);
    for (const auto &p : all)
        CHECK(is_relevant_criterion(p, p) == is_relevant_bruteforce(p, p));
    CHECK(selftest_equivalence(spec, 1).ok());
}

TEST_CASE("selftest is deterministic and independent of the worker count")
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1), make_complementary("a", 1, Rational(1, 3))};
    spec.max_d = 3;
    spec.max_mult = 2;
    spec.max_dim = 6;
    spec.max_blocks = 4;
    spec.seed = 9;
    auto one = selftest_equivalence(spec, 1);
    auto three = selftest_equivalence(spec, 3);
    CHECK(one.ok());
    CHECK(format_summary(one) == format_summary(three));
    CHECK(format_summary(one) == format_summary(selftest_equivalence(spec, 1)));

    spec.corank_one = true;
    auto corank = selftest_equivalence(spec, 2);
    CHECK(corank.ok());
    CHECK(corank.pairs < one.pairs);
}
