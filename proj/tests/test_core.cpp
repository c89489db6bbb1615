#include <doctest.h>

#include "demtype/corpus.hpp"
#include "demtype/set_function.hpp"

using namespace demtype;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("7/15").str() == "7/15");
  CHECK(Rational::parse("14/30").str() == "7/15");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("0.7") == Rational(7, 10));
  CHECK(Rational::parse("-.25") == Rational(-1, 4));
  CHECK(Rational::parse(" 12 ") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("."), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational text round trip") {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational q(rng.uniform(-1000, 1000), rng.uniform(1, 997));
    CHECK(Rational::parse(q.str()) == q);
  }
  CHECK(pow2(10) == Rational(1024));
  CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("bundle words and labels") {
  const Bundle s = Bundle::of({1, 3});
  CHECK(s.word() == 0b101u);
  CHECK(s.str() == "{1,3}");
  CHECK(Bundle().str() == "{}");
  CHECK(s.items() == std::vector<int>{1, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.subset_of(Bundle::full(3)));
  CHECK_FALSE(s.fits(2));
  CHECK(s.with(2) == Bundle::full(3));
  CHECK(s.without(1) == Bundle::of({3}));
  CHECK_THROWS_AS(Bundle::of({0}), std::out_of_range);
  CHECK_THROWS_AS(Bundle::of({21}), std::out_of_range);
}

TEST_CASE("set function normalizes the empty value") {
  const SetFunction f(2, {Rational(5), Rational(7), Rational(8), Rational(9)});
  CHECK(f(Bundle()) == Rational(0));
  CHECK(f(Bundle::of({1, 2})) == Rational(4));
  CHECK(f.original_empty_value() == Rational(5));
  CHECK_THROWS_AS(SetFunction(2, {Rational(0)}), ValidationError);
  CHECK_THROWS_AS(SetFunction(21, {}), ValidationError);
}

namespace {

// Monotonicity over every comparable pair.
bool monotone_pairwise(const SetFunction& f) {
  const std::uint32_t size = std::uint32_t{1} << f.n();
  for (std::uint32_t s = 0; s < size; ++s) {
    for (std::uint32_t t = 0; t < size; ++t) {
      if ((s & ~t) == 0 && f(Bundle(s)) > f(Bundle(t))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_monotone agrees with the pairwise definition") {
  Rng rng(3);
  int monotone = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    std::vector<Rational> v;
    for (std::uint32_t w = 0; w < (1u << n); ++w) v.push_back(Rational(std::popcount(w) * 2 + rng.uniform(-3, 3)));
    const SetFunction f(n, v);
    CHECK(f.is_monotone() == monotone_pairwise(f));
    monotone += f.is_monotone();
  }
  CHECK(monotone > 0);
  CHECK(monotone < 300);
}

TEST_CASE("instance schema") {
  const Instance inst = load_instance(R"({"name":"x","n":2,"values":["0","2","3","4"],"costs":["7/10","7/6"],"monotone":true})");
  CHECK(inst.name == "x");
  CHECK(inst.f(Bundle::of({2})) == Rational(3));
  REQUIRE(inst.costs);
  CHECK((*inst.costs)[2] == Rational(7, 6));
  CHECK(load_instance(dump_instance(inst)).f == inst.f);
  CHECK(load_instance(R"({"n":1,"values":[0,3]})").f(Bundle::of({1})) == Rational(3));

  CHECK_THROWS_AS(load_instance("{"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"values":["0"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":2,"values":["0","1","2"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":1,"values":["0","x"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":1,"values":["0","1.5e2"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":1,"values":["0","1"],"costs":["-1"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":1,"values":["0","1"],"costs":["1","2"]})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":2,"values":["0","2","1","1"],"monotone":true})"), ValidationError);
  CHECK_THROWS_AS(load_instance(R"({"n":1,"values":["0","-1"],"monotone":true})"), ValidationError);
  CHECK_NOTHROW(load_instance(R"({"n":2,"values":["0","2","1","1"]})"));
}

TEST_CASE("prices along the contract ray") {
  const CostVector c{Rational(7, 10), Rational(7, 6)};
  const PriceVector p = c.prices_at(Rational(7, 15));
  CHECK(p[1] == Rational(3, 2));
  CHECK(p[2] == Rational(5, 2));
  CHECK(cost_of(c, Bundle::of({1, 2})) == Rational(28, 15));
  CHECK_THROWS(c.prices_at(Rational(0)));
  CHECK_THROWS_AS(CostVector({Rational(-1)}), ValidationError);
  CHECK(p.total(Bundle::full(2)) == Rational(4));
  CHECK(p.scaled(Rational(2))[1] == Rational(3));
}
