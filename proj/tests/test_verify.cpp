#include "gwcell/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gwcell;

namespace {

YoungDiagram yd(int d, int m, std::vector<int> rows) {
  rows.resize(static_cast<std::size_t>(d), 0);
  return YoungDiagram(Frame(d, m), rows);
}

}  // namespace

TEST_CASE("brute_force_interface") {
  constexpr auto H = Orientation::Horizontal;
  constexpr auto V = Orientation::Vertical;
  CHECK(brute_force_interface(yd(2, 2, {2, 1})) == SegmentDecomposition{{H, 1}, {V, 1}});
  CHECK(brute_force_interface(YoungDiagram::full(Frame(3, 4))).empty());
  CHECK(brute_force_interface(yd(3, 3, {3, 1, 1})) == SegmentDecomposition{{H, 2}, {V, 2}});
  for (int d = 1; d <= 6; ++d)
    for (int m = 1; m <= 6; ++m)
      for (const auto& y : enumerate_diagrams(Frame(d, m))) CHECK(brute_force_interface(y) == interface_segments(y));
}

TEST_CASE("reference shapes") {
  CHECK(reference_even_shapes(2).size() == 4);
  CHECK(reference_even_shapes(3).size() == 4);
  CHECK(reference_even_shapes(4).size() == 12);
}

TEST_CASE("run_all(6,6) passes") {
  const auto r = run_all(6, 6);
  for (const auto& c : r.checks) {
    INFO(c.id << " " << c.params << ": " << c.detail);
    CHECK(c.status != CheckStatus::Fail);
  }
  CHECK(r.ok());
  std::vector<std::string> ids;
  for (const auto& c : r.checks) ids.push_back(c.id);
  CHECK(std::find(ids.begin(), ids.end(), "engine_enumeration") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "transpose_equivariance") != ids.end());
}

TEST_CASE("run_all(1,1) passes") { CHECK(run_all(1, 1).ok()); }

TEST_CASE("report order is fixed") {
  const auto a = to_json(run_all(3, 3));
  const auto b = to_json(run_all(3, 3));
  CHECK(a == b);
  CHECK(a.at("ok") == true);
  CHECK(a.at("summary").at("fail") == 0);
}
