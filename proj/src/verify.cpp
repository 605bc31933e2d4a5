#include "gwcell/verify.hpp"

#include "gwcell/errors.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace gwcell {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return {};
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

SegmentDecomposition brute_force_interface(const YoungDiagram& diagram) {
  const Frame f = diagram.frame();
  if (f.rows > 12 || f.cols > 12) throw DomainError("brute-force interface oracle is limited to 12x12 frames");

  // Unit edges keyed by their line and position along it.
  std::set<std::pair<int, int>> horizontal;  // (y, column)
  std::set<std::pair<int, int>> vertical;    // (x, row)
  for (int r = 0; r < f.rows; ++r) {
    for (int c = 0; c < f.cols; ++c) {
      if (r + 1 < f.rows && diagram.filled(r, c) != diagram.filled(r + 1, c)) horizontal.insert({r + 1, c});
      if (c + 1 < f.cols && diagram.filled(r, c) != diagram.filled(r, c + 1)) vertical.insert({c + 1, r});
    }
  }

  // (y, -x) of the run's top-right endpoint, orientation, length.
  std::vector<std::tuple<int, int, int, int>> runs;
  for (auto [y, c] : horizontal) {
    if (horizontal.contains({y, c - 1})) continue;
    int len = 0;
    while (horizontal.contains({y, c + len})) ++len;
    runs.emplace_back(y, -(c + len), 0, len);
  }
  for (auto [x, r] : vertical) {
    if (vertical.contains({x, r - 1})) continue;
    int len = 0;
    while (vertical.contains({x, r + len})) ++len;
    runs.emplace_back(r, -x, 1, len);
  }
  std::sort(runs.begin(), runs.end());

  SegmentDecomposition out;
  for (auto [y, negx, o, len] : runs)
    out.push_back({o == 0 ? Orientation::Horizontal : Orientation::Vertical, len});
  return out;
}

const std::vector<std::vector<int>>& reference_even_shapes(int size) {
  // Shapes as drawn for the square frames, read row by row from the shaded
  // regions.
  static const std::vector<std::vector<int>> two{{2, 2}, {2, 0}, {1, 1}, {0, 0}};
  static const std::vector<std::vector<int>> three{{3, 3, 3}, {2, 2, 0}, {3, 1, 1}, {0, 0, 0}};
  static const std::vector<std::vector<int>> four{
      // first row of pictures
      {4, 4, 4, 4}, {4, 4, 2, 2}, {2, 2, 2, 2}, {4, 4, 0, 0}, {2, 2, 0, 0}, {0, 0, 0, 0},
      // second row of pictures
      {3, 3, 3, 3}, {3, 3, 1, 1}, {1, 1, 1, 1}, {4, 4, 4, 0}, {4, 2, 2, 0}, {4, 0, 0, 0}};
  switch (size) {
    case 2:
      return two;
    case 3:
      return three;
    case 4:
      return four;
    default:
      throw DomainError("no reference shapes for frame size " + std::to_string(size));
  }
}

namespace {

std::string range_params(int d_max, int m_max) {
  return "d<=" + std::to_string(d_max) + ",m<=" + std::to_string(m_max);
}

bool enumerable(int d, int m) { return binomial(d + m, d) <= kEnumerationLimit; }

/// Accumulates a pass/fail verdict and the first failure.
struct Verdict {
  CheckResult result;
  std::size_t cases = 0;
  std::size_t skipped = 0;

  Verdict(std::string id, std::string params) { result = {std::move(id), std::move(params), CheckStatus::Pass, {}}; }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && result.status != CheckStatus::Fail) {
      result.status = CheckStatus::Fail;
      result.detail = what();
    }
  }
  CheckResult finish() {
    if (result.status == CheckStatus::Pass) {
      if (cases == 0) result.status = CheckStatus::Skipped;
      result.detail = std::to_string(cases) + " cases";
      if (skipped > 0) result.detail += ", " + std::to_string(skipped) + " skipped";
    }
    return result;
  }
};

std::string frame_str(int d, int m) { return std::to_string(d) + "x" + std::to_string(m); }

std::multiset<YoungDiagram> leaf_diagrams(const FormalSum& s) {
  std::multiset<YoungDiagram> out;
  for (const auto& g : s.gw())
    if (g.diagram) out.insert(*g.diagram);
  return out;
}

const PicClass& twist_l() {
  static const PicClass l = PicClass::of(PicGenerator::base("L"));
  return l;
}

constexpr std::int64_t kShift = 0;

CheckResult check_fixture(int size) {
  Verdict v("reference_shapes", frame_str(size, size));
  const auto got = enumerate_even(Frame(size, size));
  std::set<YoungDiagram> want;
  for (const auto& rows : reference_even_shapes(size)) want.insert(YoungDiagram(Frame(size, size), rows));
  const std::set<YoungDiagram> have(got.begin(), got.end());
  v.expect(have == want && got.size() == want.size(), [&] {
    return "expected " + std::to_string(want.size()) + " shapes, enumeration gave " + std::to_string(got.size());
  });
  return v.finish();
}

CheckResult check_interface_oracle(int d_max, int m_max) {
  const int dm = std::min(d_max, 6);
  const int mm = std::min(m_max, 6);
  Verdict v("interface_oracle", range_params(dm, mm));
  for (int d = 0; d <= dm; ++d)
    for (int m = 0; m <= mm; ++m)
      for (const auto& y : enumerate_diagrams(Frame(d, m)))
        v.expect(brute_force_interface(y) == interface_segments(y),
                 [&] { return "segments differ for " + to_string(y) + " in " + frame_str(d, m); });
  return v.finish();
}

CheckResult check_cardinality(int d_max, int m_max) {
  Verdict v("cardinality", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m) {
      if (!enumerable(d, m)) {
        ++v.skipped;
        continue;
      }
      const auto n = enumerate_even(Frame(d, m)).size();
      v.expect(BigInt(n) == even_cardinality(d, m), [&] {
        return frame_str(d, m) + ": enumerated " + std::to_string(n) + ", formula " + even_cardinality(d, m).str();
      });
    }
  return v.finish();
}

CheckResult check_beta_parity_sum(int d_max, int m_max) {
  Verdict v("beta_parity_sum", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m)
      v.expect(beta_parity(0, d, m) + beta_parity(1, d, m) == beta(d, m),
               [&] { return "beta split fails at " + frame_str(d, m); });
  return v.finish();
}

CheckResult check_pascal(int d_max, int m_max) {
  Verdict v("pascal", range_params(d_max, m_max));
  for (const auto& row : verify_pascal(d_max, m_max)) {
    if (row.status == PascalCheck::Status::Skipped) {
      ++v.skipped;
      continue;
    }
    v.expect(row.status == PascalCheck::Status::Holds, [&] {
      return "identity " + std::to_string(row.identity) + " fails at " + frame_str(row.d, row.m);
    });
  }
  return v.finish();
}

CheckResult check_engine_enumeration(const Engine& engine, int d_max, int m_max) {
  Verdict v("engine_enumeration", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m) {
      if (!enumerable(d, m)) {
        ++v.skipped;
        continue;
      }
      const FormalSum total = engine.decompose_total(d, m, kShift, twist_l());
      const auto evens = enumerate_even(Frame(d, m));
      v.expect(leaf_diagrams(total) == std::multiset<YoungDiagram>(evens.begin(), evens.end()),
               [&] { return frame_str(d, m) + ": leaf diagrams differ from the even enumeration"; });
      for (const auto& g : total.gw()) {
        v.expect(g.diagram.has_value() && g.shift == kShift - g.diagram->boxes(),
                 [&] { return frame_str(d, m) + ": leaf shift does not equal n - |diagram|"; });
        v.expect(g.diagram.has_value() && is_even(*g.diagram),
                 [&] { return frame_str(d, m) + ": leaf diagram is not even"; });
      }
    }
  return v.finish();
}

CheckResult check_k_counts(const Engine& engine, int d_max, int m_max) {
  Verdict v("k_counts", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m) {
      BigInt total = 0;
      for (int l = 0; l < 2; ++l) {
        const PicClass t = l ? twist_l() + PicGenerator::delta(d) : twist_l();
        const auto s = engine.decompose_grassmannian({d, m, kShift, t, BundleKind::Trivial});
        total += s.k_count();
        v.expect(s.k_count() == beta_parity(l, d, m), [&] {
          return frame_str(d, m) + " l=" + std::to_string(l) + ": engine K " + s.k_count().str() + " vs beta " +
                 beta_parity(l, d, m).str();
        });
      }
      v.expect(total == beta(d, m), [&] { return frame_str(d, m) + ": total K differs from beta"; });
    }
  return v.finish();
}

CheckResult check_rank_accounting(const Engine& engine, int d_max, int m_max) {
  Verdict v("rank_accounting", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m)
      for (int l = 0; l < 2; ++l) {
        const PicClass t = l ? twist_l() + PicGenerator::delta(d) : twist_l();
        const auto s = engine.decompose_grassmannian({d, m, kShift, t, BundleKind::Trivial});
        v.expect(2 * beta_parity(l, d, m) + s.gw().size() == binomial(d + m, d), [&] {
          return frame_str(d, m) + " l=" + std::to_string(l) + ": 2*beta + leaves != C(d+m, d)";
        });
      }
  return v.finish();
}

CheckResult check_odd_odd(const Engine& engine, int d_max, int m_max) {
  const int dm = std::min(d_max, 7);
  const int mm = std::min(m_max, 7);
  Verdict v("odd_odd_concentration", range_params(dm, mm));
  for (int d = 1; d <= dm; d += 2)
    for (int m = 1; m <= mm; m += 2) {
      const auto s = engine.decompose_grassmannian({d, m, kShift, twist_l() + PicGenerator::delta(d)});
      v.expect(s.gw().empty(), [&] { return frame_str(d, m) + ": odd twist class has GW leaves"; });
      v.expect(2 * s.k_count() == binomial(d + m, d),
               [&] { return frame_str(d, m) + ": odd twist K count is not C(d+m,d)/2"; });
    }
  return v.finish();
}

// rho is measured against det V, which duality moves into the twist, so it is
// dropped before comparing a frame with its transpose.
FormalSum without_rho(const FormalSum& s, bool transpose) {
  FormalSum out;
  out.add_k(s.k_count());
  for (GwSummand g : s.gw()) {
    if (transpose && g.diagram) g.diagram = g.diagram->transposed();
    g.rho.reset();
    out.add_gw(std::move(g));
  }
  return out;
}

CheckResult check_transpose(const Engine& engine, int d_max, int m_max) {
  Verdict v("transpose_equivariance", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m) {
      if (!enumerable(d, m)) {
        ++v.skipped;
        continue;
      }
      const auto a = engine.decompose_total(d, m, kShift, twist_l());
      const auto b = engine.decompose_total(m, d, kShift, twist_l());
      v.expect(equals(without_rho(a, false), without_rho(b, true)),
               [&] { return frame_str(d, m) + ": total differs from the transposed " + frame_str(m, d); });
    }
  return v.finish();
}

CheckResult check_witt(const Engine& engine, int d_max, int m_max) {
  Verdict v("witt_counts", range_params(d_max, m_max));
  constexpr std::int64_t n = 5;  // exercises the mod-4 reduction
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m)
      for (int l = 0; l < 2; ++l) {
        const PicClass t = l ? twist_l() + PicGenerator::delta(d) : twist_l();
        const auto s = engine.decompose_grassmannian({d, m, n, t});
        const auto w = witt_specialize(s);
        std::multiset<std::int64_t> want;
        for (const auto& leaf : engine.leaf_table(d, m))
          if (leaf.t == l) want.insert(((n - leaf.diagram.boxes()) % 4 + 4) % 4);
        std::multiset<std::int64_t> got;
        for (const auto& g : w.gw()) got.insert(g.shift);
        v.expect(w.k_count() == 0 && got == want && w.gw().size() == want.size(), [&] {
          return frame_str(d, m) + " l=" + std::to_string(l) + ": Witt summands do not match the even diagrams";
        });
      }
  return v.finish();
}

CheckResult check_flagged_purity(const Engine& engine, int d_max, int m_max) {
  const int dm = std::min(d_max, 5);
  const int mm = std::min(m_max, 5);
  Verdict v("flagged_purity", range_params(dm, mm));
  for (int d = 1; d <= dm; ++d)
    for (int m = 1; m <= mm; ++m)
      for (int l = 0; l < 2; ++l) {
        const PicClass t = l ? twist_l() + PicGenerator::delta(d) : twist_l();
        const auto det_v = FlaggedBundle::symbolic(d + m).det();
        const auto s = engine.decompose_grassmannian({d, m, kShift, t, BundleKind::FlaggedSymbolic});
        for (const auto& g : s.gw()) {
          const bool pure = g.twist == twist_l() || g.twist == twist_l() + det_v;
          const bool rho_ok = g.rho && (g.twist == (*g.rho ? twist_l() + det_v : twist_l()));
          v.expect(pure && rho_ok, [&] {
            return frame_str(d, m) + " l=" + std::to_string(l) + ": leaf twist " + g.twist.str() +
                   " is neither L nor L+detV";
          });
        }
      }
  return v.finish();
}

CheckResult check_closed_form(const Engine& engine, int d_max, int m_max) {
  Verdict v("closed_form_agreement", range_params(d_max, m_max));
  for (int d = 1; d <= d_max; ++d)
    for (int m = 1; m <= m_max; ++m)
      for (int l = 0; l < 2; ++l) {
        const PicClass t = l ? twist_l() + PicGenerator::delta(d) : twist_l();
        const auto rec = engine.decompose_grassmannian({d, m, kShift, t});
        const auto closed = engine.flag_closed_form(d, m, l, kShift);
        // Twists differ in form (detV trivial vs symbolic), so compare shift, diagram, rho.
        auto profile = [](const FormalSum& s) {
          std::multiset<std::tuple<std::int64_t, YoungDiagram, int>> p;
          for (const auto& g : s.gw()) p.insert({g.shift, *g.diagram, g.rho.value_or(-1)});
          return p;
        };
        v.expect(rec.k_count() == closed.k_count() && profile(rec) == profile(closed), [&] {
          return frame_str(d, m) + " l=" + std::to_string(l) + ": recursion and closed form disagree";
        });
      }
  return v.finish();
}

CheckResult check_projective_bundle() {
  Verdict v("projective_bundle", "1<=r<=20");
  for (int r = 1; r <= 20; ++r)
    for (int l = 0; l < 2; ++l) {
      const auto result = decompose_projective_bundle({r, l, kShift, true});
      const auto* s = std::get_if<FormalSum>(&result);
      v.expect(s != nullptr, [&] { return "r=" + std::to_string(r) + ": expected a formal sum"; });
      if (!s) continue;
      // K copies: one per mu^m with m of the twist parity in [1, r] (m >= 2 when even).
      const int k = l ? (r + 1) / 2 : r / 2;
      std::multiset<std::int64_t> shifts;
      bool det_on_low_leaf = true;
      for (const auto& g : s->gw()) {
        shifts.insert(g.shift);
        const bool has_det = g.twist.coefficient(PicGenerator::base("detE"));
        det_on_low_leaf = det_on_low_leaf && (has_det == (g.shift == kShift - r));
      }
      std::multiset<std::int64_t> want;
      if (r % 2 == 0) want.insert(l ? kShift - r : kShift);
      if (r % 2 == 1 && l == 0) want = {kShift, kShift - r};
      v.expect(s->k_count() == k && shifts == want && det_on_low_leaf, [&] {
        return "r=" + std::to_string(r) + " l=" + std::to_string(l) + ": summands do not match the expected cells";
      });
    }
  return v.finish();
}

CheckResult check_determinism(int d_max, int m_max) {
  const int dm = std::min(d_max, 5);
  const int mm = std::min(m_max, 5);
  Verdict v("determinism", range_params(dm, mm));
  auto dump_all = [&] {
    Engine fresh;
    std::string out;
    for (int d = 1; d <= dm; ++d)
      for (int m = 1; m <= mm; ++m) {
        out += to_json(fresh.decompose_total(d, m, kShift, twist_l())).dump();
        out += to_json(fresh.decompose_total(d, m, kShift, twist_l(), BundleKind::FlaggedSymbolic)).dump();
      }
    return out;
  };
  const std::string first = dump_all();
  const std::string second = dump_all();
  v.expect(first == second, [] { return "two runs produced different JSON"; });
  return v.finish();
}

}  // namespace

VerificationReport run_all(int d_max, int m_max) {
  if (d_max < 1 || m_max < 1) throw DomainError("verification needs d_max, m_max >= 1");
  if (d_max + m_max > kMaxAmbientRank) throw DomainError("verification range exceeds the engine limit");
  Engine engine;

  std::vector<std::function<CheckResult()>> jobs{
      [] { return check_fixture(2); },
      [] { return check_fixture(3); },
      [] { return check_fixture(4); },
      [=] { return check_interface_oracle(d_max, m_max); },
      [=] { return check_cardinality(d_max, m_max); },
      [=] { return check_beta_parity_sum(d_max, m_max); },
      [=] { return check_pascal(d_max, m_max); },
      [&, d_max, m_max] { return check_engine_enumeration(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_k_counts(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_rank_accounting(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_odd_odd(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_transpose(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_witt(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_flagged_purity(engine, d_max, m_max); },
      [&, d_max, m_max] { return check_closed_form(engine, d_max, m_max); },
      [] { return check_projective_bundle(); },
      [=] { return check_determinism(d_max, m_max); },
  };

  std::vector<std::future<CheckResult>> running;
  running.reserve(jobs.size());
  for (auto& job : jobs)
    running.push_back(std::async(std::launch::async, [&job]() -> CheckResult {
      try {
        return job();
      } catch (const std::exception& e) {
        return {"exception", {}, CheckStatus::Fail, e.what()};
      }
    }));

  VerificationReport report;
  for (auto& f : running) report.checks.push_back(f.get());
  return report;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"params", c.params}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"checks", std::move(checks)},
          {"summary",
           {{"pass", r.count(CheckStatus::Pass)},
            {"fail", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)}}},
          {"ok", r.ok()}};
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks)
    out << "[" << to_string(c.status) << "] " << c.id << " (" << c.params << ") " << c.detail << "\n";
  out << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
      << r.count(CheckStatus::Skipped) << " skipped\n";
  return out.str();
}

}  // namespace gwcell
