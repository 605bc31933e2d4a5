#include "gwcell/errors.hpp"
#include "gwcell/expr.hpp"

#include <doctest.h>

#include <random>

using namespace gwcell;

namespace {

const PicClass L{PicGenerator::base("L")};

GwSummand gw(std::int64_t shift, PicClass twist = L) {
  GwSummand s;
  s.shift = shift;
  s.twist = std::move(twist);
  return s;
}

FormalSum sum(long k, std::initializer_list<std::int64_t> shifts) {
  FormalSum f;
  f.add_k(k);
  for (auto n : shifts) f.add_gw(gw(n));
  return f;
}

BaseTheoryTable constant_table() {
  BaseTheoryTable t;
  t.name = "synthetic";
  t.insert({Theory::K, 0, {}, 0}, AbelianGroup({0}));
  for (std::int64_t n = -20; n <= 4; ++n) t.insert({Theory::GW, n, L, 0}, AbelianGroup({0, 2}));
  for (std::int64_t n = 0; n < 4; ++n) t.insert({Theory::W, n, L, 0}, AbelianGroup({2}));
  return t;
}

}  // namespace

TEST_CASE("FormalSum keeps its GW summands sorted") {
  FormalSum f;
  f.add_gw(gw(-4));
  f.add_gw(gw(0));
  f.add_gw(gw(-2));
  REQUIRE(f.gw().size() == 3);
  CHECK(f.gw()[0].shift == -4);
  CHECK(f.gw()[2].shift == 0);
  CHECK(FormalSum().empty());
}

TEST_CASE("direct_sum") {
  CHECK(equals(direct_sum(sum(2, {}), sum(1, {0})), sum(3, {0})));
  const auto a = sum(2, {0, -4});
  CHECK(equals(direct_sum(a, FormalSum()), a));
  const auto twice = direct_sum(sum(0, {-2}), sum(0, {-2}));
  CHECK(twice.gw().size() == 2);
  CHECK(equals(twice, sum(0, {-2, -2})));
}

TEST_CASE("direct_sum respects query context") {
  SumMeta m1;
  m1.source = "grassmann";
  m1.d = 2;
  SumMeta m2 = m1;
  m2.d = 3;
  FormalSum a(m1), b(m2);
  CHECK_THROWS_AS(direct_sum(a, b), DomainError);
  CHECK_NOTHROW(direct_sum(a, b, MergePolicy::Merge));
  CHECK_NOTHROW(direct_sum(a, FormalSum()));
}

TEST_CASE("direct_sum is commutative and associative") {
  const auto a = sum(1, {0, -3});
  const auto b = sum(4, {-2});
  const auto c = sum(0, {-7, 0});
  CHECK(equals(direct_sum(a, b), direct_sum(b, a)));
  CHECK(equals(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
  CHECK(equals(a, a));
  CHECK_FALSE(equals(a, b));
}

TEST_CASE("equals compares labels only when both sides carry them") {
  auto labelled = sum(0, {0});
  FormalSum with_t;
  auto s = gw(0);
  s.t_index = 1;
  with_t.add_gw(s);
  CHECK(equals(labelled, with_t));
  FormalSum other_t;
  s.t_index = 0;
  other_t.add_gw(s);
  CHECK_FALSE(equals(with_t, other_t));
}

TEST_CASE("witt_specialize") {
  const auto gr22 = sum(4, {0, -2, -2, -4});
  const auto w = witt_specialize(gr22);
  CHECK(w.k_count() == 0);
  REQUIRE(w.gw().size() == 4);
  for (const auto& g : w.gw()) {
    CHECK(g.theory == Theory::W);
    CHECK(g.shift >= 0);
    CHECK(g.shift < 4);
  }
  CHECK(w.gw()[0].shift == 0);
  CHECK(w.gw()[1].shift == 0);
  CHECK(w.gw()[2].shift == 2);
  CHECK(witt_specialize(sum(5, {})).empty());
  CHECK(witt_specialize(FormalSum()).empty());
  const auto odd = witt_specialize(sum(0, {-3, 5}));
  CHECK(odd.gw()[0].shift == 1);
  CHECK(odd.gw()[1].shift == 1);
}

TEST_CASE("witt_specialize commutes with direct_sum") {
  const auto a = sum(2, {0, -5});
  const auto b = sum(1, {-2, 3});
  CHECK(equals(witt_specialize(direct_sum(a, b)), direct_sum(witt_specialize(a), witt_specialize(b))));
}

TEST_CASE("AbelianGroup") {
  const AbelianGroup g({0, 0, 2, 1});
  CHECK(g.rank() == 2);
  CHECK(g.str() == "Z^2 + Z/2");
  CHECK(AbelianGroup({2, 2}).str() == "(Z/2)^2");
  CHECK(AbelianGroup().str() == "0");
  CHECK(AbelianGroup({1, 1}).trivial());
  CHECK(AbelianGroup::free_of_rank(3) == AbelianGroup({0, 0, 0}));
  CHECK(AbelianGroup({2}).repeated(3) == AbelianGroup({2, 2, 2}));
  CHECK((AbelianGroup({0}) + AbelianGroup({4})) == AbelianGroup({4, 0}));
}

TEST_CASE("evaluate") {
  const auto table = constant_table();
  CHECK(evaluate(sum(3, {}), table, 0) == AbelianGroup({0, 0, 0}));
  CHECK(evaluate(sum(0, {0, -4}), table, 0) == AbelianGroup({0, 2}).repeated(2));
  CHECK(evaluate(FormalSum(), table, 0).trivial());
  CHECK(evaluate(witt_specialize(sum(2, {-1, -4})), table, 0) == AbelianGroup({2, 2}));
}

TEST_CASE("evaluate reports every missing key") {
  const auto table = constant_table();
  try {
    evaluate(sum(1, {-30, -31}), table, 1);
    FAIL("expected MissingKeysError");
  } catch (const MissingKeysError& e) {
    CHECK(e.keys().size() == 3);
  }
  BaseTheoryTable empty;
  CHECK_THROWS_AS(evaluate(sum(0, {0}), empty, 0), MissingKeysError);
  CHECK_THROWS_AS(evaluate(sum(0, {0}), empty, 0), DomainError);
}

TEST_CASE("base table normalization") {
  BaseTheoryTable t;
  CHECK_THROWS_AS(t.insert({Theory::GW, 0, PicClass{PicGenerator::quotient(1)}, 0}, AbelianGroup()), DomainError);
  CHECK_THROWS_AS(t.insert({Theory::K, 2, {}, 0}, AbelianGroup({0})), DomainError);
  t.insert({Theory::W, 6, L, 0}, AbelianGroup({2}));
  REQUIRE(t.find({Theory::W, 2, L, 0}) != nullptr);
  CHECK(*t.find({Theory::W, -2, L, 0}) == AbelianGroup({2}));
}

TEST_CASE("evaluate distributes over direct_sum") {
  const auto table = constant_table();
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> k(0, 5), len(0, 4), shift(-16, 0);
  for (int trial = 0; trial < 50; ++trial) {
    FormalSum a, b;
    a.add_k(k(rng));
    b.add_k(k(rng));
    for (int i = len(rng); i > 0; --i) a.add_gw(gw(shift(rng)));
    for (int i = len(rng); i > 0; --i) b.add_gw(gw(shift(rng)));
    CHECK(evaluate(direct_sum(a, b), table, 0) == evaluate(a, table, 0) + evaluate(b, table, 0));
  }
}

TEST_CASE("counts") {
  SumMeta meta;
  meta.shift = 3;
  FormalSum f(meta);
  f.add_k(2);
  auto s = gw(1);
  s.t_index = 1;
  f.add_gw(s);
  const auto c = counts(f);
  CHECK(c.k == 2);
  REQUIRE(c.gw.size() == 1);
  CHECK(c.gw[0] == SummandProfile{-2, "L", 1});
}

TEST_CASE("BaseTheoryKey rendering") {
  CHECK(BaseTheoryKey{Theory::GW, -2, L, 0}.str() == "GW[shift=-2,twist=L,degree=0]");
}
