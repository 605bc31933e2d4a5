#include "gwcell/engine.hpp"
#include "gwcell/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <future>
#include <set>

using namespace gwcell;

namespace {

const PicGenerator Lg = PicGenerator::base("L");
const PicClass L{Lg};

PicClass odd(int d) { return L + PicGenerator::delta(d); }

std::multiset<int> box_multiset(const FormalSum& s) {
  std::multiset<int> out;
  for (const auto& g : s.gw()) out.insert(g.diagram->boxes());
  return out;
}

std::multiset<std::int64_t> shifts(const FormalSum& s) {
  std::multiset<std::int64_t> out;
  for (const auto& g : s.gw()) out.insert(g.shift);
  return out;
}

std::vector<int> rows(const GwSummand& g) { return {g.diagram->rows().begin(), g.diagram->rows().end()}; }

}  // namespace

TEST_CASE("decompose_point") {
  const auto p = decompose_point(5, L);
  CHECK(p.k_count() == 0);
  REQUIRE(p.gw().size() == 1);
  CHECK(p.gw()[0].shift == 5);
  CHECK(p.gw()[0].twist == L);
  const PicClass twisted = L + PicGenerator::base("detV");
  CHECK(decompose_point(5, twisted).gw()[0].twist == twisted);

  Engine engine;
  for (auto [d, m] : {std::pair{0, 3}, std::pair{2, 0}}) {
    const auto s = engine.decompose_grassmannian({d, m, 5, L});
    CHECK(s.k_count() == 0);
    REQUIRE(s.gw().size() == 1);
    CHECK(s.gw()[0].shift == 5);
  }
}

TEST_CASE("projective_cells") {
  const auto a = projective_cells(4, 0);
  CHECK(a.mu_indices == std::vector<int>{2, 4});
  CHECK(a.base_leaf);
  CHECK_FALSE(a.det_leaf);
  const auto b = projective_cells(4, 1);
  CHECK(b.mu_indices == std::vector<int>{1, 3});
  CHECK(b.det_leaf);
  const auto c = projective_cells(5, 1);
  CHECK(c.mu_indices.size() == 3);
  CHECK_FALSE(c.base_leaf);
  CHECK_FALSE(c.det_leaf);
  const auto d = projective_cells(5, 0);
  CHECK(d.mu_indices == std::vector<int>{2, 4});
  CHECK(d.base_leaf);
  CHECK(d.det_leaf);
}

TEST_CASE("decompose_projective_bundle") {
  auto sum_of = [](int r, int l, bool split = true) {
    return std::get<FormalSum>(decompose_projective_bundle({r, l, 0, split}));
  };
  SUBCASE("r=1, odd twist") {
    const auto s = sum_of(1, 1);
    CHECK(s.k_count() == 1);
    CHECK(s.gw().empty());
  }
  SUBCASE("r=2, odd twist") {
    const auto s = sum_of(2, 1);
    CHECK(s.k_count() == 1);
    REQUIRE(s.gw().size() == 1);
    CHECK(s.gw()[0].shift == -2);
    CHECK(s.gw()[0].twist == L + PicGenerator::base("detE"));
    const auto c = counts(s);
    CHECK(c.gw == std::vector<SummandProfile>{{-2, "L+detE", 1}});
  }
  SUBCASE("r=3, even twist, split") {
    const auto s = sum_of(3, 0);
    CHECK(s.k_count() == 1);
    CHECK(s.meta().mu_indices == std::vector<int>{2});
    REQUIRE(s.gw().size() == 2);
    CHECK(s.gw()[0].shift == -3);
    CHECK(s.gw()[0].twist == L + PicGenerator::base("detE"));
    CHECK(s.gw()[1].shift == 0);
    CHECK(s.gw()[1].twist == L);
  }
  SUBCASE("r=3, even twist, not split") {
    const auto v = decompose_projective_bundle({3, 0, 0, false});
    CHECK(std::holds_alternative<LongExactSequence>(v));
  }
  SUBCASE("r=0 is rejected") { CHECK_THROWS_AS(decompose_projective_bundle({0, 0, 0, true}), DomainError); }
}

TEST_CASE("les_projective_odd") {
  const auto one = les_projective_odd(1, 0);
  REQUIRE(one.terms.size() == 3);
  CHECK(one.cyclic);
  CHECK(one.maps == std::vector<std::string>{"(Θ_even, q^*)", "q_*", "(0, η∪c(E))"});
  REQUIRE(one.terms[0].sum.has_value());
  CHECK(one.terms[0].sum->k_count() == 0);
  CHECK(one.terms[0].sum->gw().size() == 1);
  REQUIRE(one.terms[2].sum.has_value());
  CHECK(one.terms[2].sum->gw()[0].shift == -1);

  const auto three = les_projective_odd(3, 0);
  REQUIRE(three.terms[0].sum.has_value());
  CHECK(three.terms[0].sum->k_count() == 1);
  CHECK(three.terms[0].sum->gw().size() == 1);
  CHECK(three.terms[0].sum->gw()[0].shift == 0);

  CHECK_THROWS_AS(les_projective_odd(2, 0), DomainError);
}

TEST_CASE("Gr_2(2)") {
  Engine engine;
  SUBCASE("even twist") {
    const auto s = engine.decompose_grassmannian({2, 2, 0, L});
    CHECK(s.k_count() == 2);
    REQUIRE(s.gw().size() == 2);
    CHECK(s.gw()[0].shift == -4);
    CHECK(rows(s.gw()[0]) == std::vector<int>{2, 2});
    CHECK(s.gw()[1].shift == 0);
    CHECK(rows(s.gw()[1]) == std::vector<int>{0, 0});
  }
  SUBCASE("odd twist") {
    const auto s = engine.decompose_grassmannian({2, 2, 0, odd(2)});
    CHECK(s.k_count() == 2);
    REQUIRE(s.gw().size() == 2);
    CHECK(shifts(s) == std::multiset<std::int64_t>{-2, -2});
    std::set<std::vector<int>> shapes;
    for (const auto& g : s.gw()) shapes.insert(rows(g));
    CHECK(shapes == std::set<std::vector<int>>{{1, 1}, {2, 0}});
  }
  SUBCASE("total") {
    const auto s = engine.decompose_total(2, 2, 0, L);
    CHECK(s.k_count() == 4);
    CHECK(shifts(s) == std::multiset<std::int64_t>{0, -2, -2, -4});
    const auto c = counts(s);
    CHECK(c.gw == std::vector<SummandProfile>{{-4, "L", 0}, {-2, "L", 1}, {-2, "L", 1}, {0, "L", 0}});
  }
}

TEST_CASE("Gr_3(3) total") {
  Engine engine;
  const auto s = engine.decompose_total(3, 3, 0, L);
  CHECK(s.k_count() == 18);
  CHECK(shifts(s) == std::multiset<std::int64_t>{0, -4, -5, -9});
  std::set<std::vector<int>> shapes;
  for (const auto& g : s.gw()) shapes.insert(rows(g));
  CHECK(shapes == std::set<std::vector<int>>{{0, 0, 0}, {2, 2, 0}, {3, 1, 1}, {3, 3, 3}});
}

TEST_CASE("Gr_4(4) total") {
  Engine engine;
  const auto s = engine.decompose_total(4, 4, 0, L);
  CHECK(s.k_count() == 64);
  CHECK(box_multiset(s) == std::multiset<int>{0, 4, 4, 4, 8, 8, 8, 8, 12, 12, 12, 16});
}

TEST_CASE("Gr_1(1) total") {
  Engine engine;
  const auto s = engine.decompose_total(1, 1, 0, L);
  CHECK(s.k_count() == 1);
  REQUIRE(s.gw().size() == 2);
  CHECK(s.gw()[0].shift == -1);
  CHECK(s.gw()[0].rho == 1);
  CHECK(s.gw()[1].shift == 0);
  CHECK(s.gw()[1].rho == 0);
}

TEST_CASE("flag_closed_form") {
  Engine engine;
  for (int m : {1, 3, 5}) {
    const auto s = engine.flag_closed_form(1, m, 1, 0);
    CHECK(s.k_count() == (m + 1) / 2);
    CHECK(s.gw().empty());
  }
  for (int m : {2, 4, 6}) {
    const auto s = engine.flag_closed_form(1, m, 1, 0);
    CHECK(s.k_count() == m / 2);
    REQUIRE(s.gw().size() == 1);
    CHECK(s.gw()[0].shift == -m);
    CHECK(s.gw()[0].rho == 1);
    CHECK(s.gw()[0].twist == L + PicGenerator::base("detV"));
  }
  const auto s = engine.flag_closed_form(2, 2, 0, 0);
  CHECK(s.k_count() == 2);
  CHECK(shifts(s) == std::multiset<std::int64_t>{0, -4});
}

TEST_CASE("every leaf is even, in frame, and at shift n - boxes") {
  Engine engine;
  for (int d = 1; d <= 6; ++d)
    for (int m = 1; m <= 6; ++m)
      for (int l = 0; l < 2; ++l) {
        const std::int64_t n = 7;
        const auto s = engine.decompose_grassmannian({d, m, n, l ? odd(d) : L});
        CHECK(s.k_count() == beta_parity(l, d, m));
        for (const auto& g : s.gw()) {
          REQUIRE(g.diagram.has_value());
          CHECK(g.diagram->frame() == Frame(d, m));
          CHECK(is_even(*g.diagram));
          CHECK(g.shift == n - g.diagram->boxes());
          CHECK(g.t_index == l);
        }
      }
}

TEST_CASE("flagged bundle leaves telescope to L or L + det V") {
  Engine engine;
  for (int d = 1; d <= 5; ++d)
    for (int m = 1; m <= 5; ++m)
      for (int l = 0; l < 2; ++l) {
        const auto s = engine.decompose_grassmannian({d, m, 0, l ? odd(d) : L, BundleKind::FlaggedSymbolic});
        const PicClass detv = FlaggedBundle::symbolic(d + m).det();
        for (const auto& g : s.gw()) CHECK((g.twist == L || g.twist == L + detv));
      }
}

TEST_CASE("flag quotients in the query twist pass through") {
  Engine engine;
  const PicClass t = L + PicGenerator::quotient(1) + PicGenerator::delta(2);
  const auto s = engine.decompose_grassmannian({2, 2, 0, t, BundleKind::FlaggedSymbolic});
  for (const auto& g : s.gw()) CHECK(g.twist.coefficient(PicGenerator::quotient(1)) != (g.rho == 1));
}

TEST_CASE("query validation") {
  Engine engine;
  CHECK_THROWS_AS(engine.decompose_grassmannian({-1, 2, 0, L}), DomainError);
  CHECK_THROWS_AS(engine.decompose_grassmannian({2, 2, 0, L + PicGenerator::delta(1)}), DomainError);
  CHECK_THROWS_AS(engine.decompose_grassmannian({2, 2, 0, L + PicGenerator::quotient(1)}), DomainError);
  CHECK_THROWS_AS(
      engine.decompose_grassmannian({2, 2, 0, L + PicGenerator::quotient(5), BundleKind::FlaggedSymbolic}),
      DomainError);
  CHECK_THROWS_AS(engine.decompose_grassmannian({40, 40, 0, L}), DomainError);
}

TEST_CASE("large Grassmannians use the cache") {
  Engine engine;
  const auto s = engine.decompose_grassmannian({10, 10, 0, L});
  CHECK(s.k_count() == beta_parity(0, 10, 10));
  CHECK(engine.cache_size() > 0);
  const auto big = engine.decompose_grassmannian({14, 14, 0, odd(14)});
  CHECK(big.k_count() == beta_parity(1, 14, 14));
}

TEST_CASE("concurrent queries agree with sequential ones") {
  Engine shared;
  Engine fresh;
  std::vector<std::future<FormalSum>> jobs;
  for (int d = 1; d <= 6; ++d)
    for (int m = 1; m <= 6; ++m)
      jobs.push_back(std::async(std::launch::async, [&, d, m] { return shared.decompose_total(d, m, 0, L); }));
  std::size_t i = 0;
  for (int d = 1; d <= 6; ++d)
    for (int m = 1; m <= 6; ++m) CHECK(equals(jobs[i++].get(), fresh.decompose_total(d, m, 0, L)));
}
