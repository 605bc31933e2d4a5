#include "gwcell/io.hpp"

#include "gwcell/errors.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace gwcell {

namespace {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Frame frame_of(const SumMeta& meta, std::size_t row_count) {
  if (meta.d && meta.m) return Frame(*meta.d, *meta.m);
  if (meta.r) return Frame(1, *meta.r);
  // No frame recorded: the tightest frame holding the rows.
  return Frame(static_cast<int>(row_count), 0);
}

json meta_json(const SumMeta& m) {
  json j = json::object();
  j["source"] = m.source;
  if (m.d) j["d"] = *m.d;
  if (m.m) j["m"] = *m.m;
  if (m.r) j["r"] = *m.r;
  if (m.shift) j["shift"] = *m.shift;
  j["twist"] = m.twist;
  j["mode"] = m.mode;
  j["bundle"] = m.bundle;
  if (!m.mu_indices.empty()) j["mu_indices"] = m.mu_indices;
  return j;
}

SumMeta meta_from_json(const json& j) {
  SumMeta m;
  m.source = j.value("source", "");
  if (j.contains("d")) m.d = j.at("d").get<int>();
  if (j.contains("m")) m.m = j.at("m").get<int>();
  if (j.contains("r")) m.r = j.at("r").get<int>();
  if (j.contains("shift")) m.shift = j.at("shift").get<std::int64_t>();
  m.twist = j.value("twist", "");
  m.mode = j.value("mode", "");
  m.bundle = j.value("bundle", "");
  if (j.contains("mu_indices")) m.mu_indices = j.at("mu_indices").get<std::vector<int>>();
  return m;
}

std::string shift_label(std::int64_t n) { return "[" + std::to_string(n) + "]"; }

}  // namespace

json to_json(const PicClass& c) { return c.serialize(); }

PicClass pic_class_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("twist must be an array of generator strings");
  PicClass out;
  for (const auto& g : j) {
    if (!g.is_string()) throw DomainError("twist generators must be strings");
    out += PicGenerator::parse(g.get<std::string>());
  }
  return out;
}

json to_json(const FormalSum& s) {
  json gw = json::array();
  for (const auto& t : s.gw()) {
    json e;
    e["theory"] = to_string(t.theory);
    e["shift"] = t.shift;
    e["twist"] = to_json(t.twist);
    if (t.diagram) e["diagram"] = std::vector<int>(t.diagram->rows().begin(), t.diagram->rows().end());
    if (t.t_index) e["t"] = *t.t_index;
    if (t.rho) e["rho"] = *t.rho;
    gw.push_back(std::move(e));
  }
  return {{"k", big_to_json(s.k_count())}, {"gw", std::move(gw)}, {"meta", meta_json(s.meta())}};
}

FormalSum formal_sum_from_json(const json& j) {
  if (auto problems = validate_formal_sum_json(j); !problems.empty())
    throw DomainError("invalid FormalSum JSON: " + problems.front());
  FormalSum out(j.contains("meta") ? meta_from_json(j.at("meta")) : SumMeta{});
  out.add_k(big_from_json(j.at("k")));
  for (const auto& e : j.at("gw")) {
    GwSummand s;
    s.theory = theory_from_string(e.value("theory", "GW"));
    s.shift = e.at("shift").get<std::int64_t>();
    s.twist = pic_class_from_json(e.at("twist"));
    if (e.contains("diagram")) {
      auto rows = e.at("diagram").get<std::vector<int>>();
      const Frame frame = frame_of(out.meta(), rows.size());
      s.diagram = YoungDiagram(frame, std::move(rows));
    }
    if (e.contains("t")) s.t_index = e.at("t").get<int>();
    if (e.contains("rho")) s.rho = e.at("rho").get<int>();
    out.add_gw(std::move(s));
  }
  return out;
}

json to_json(const LongExactSequence& les) {
  json terms = json::array();
  for (const auto& t : les.terms) {
    json e{{"group", t.group}};
    if (t.sum) e["sum"] = to_json(*t.sum);
    terms.push_back(std::move(e));
  }
  return {{"terms", std::move(terms)}, {"maps", les.maps}, {"cyclic", les.cyclic}};
}

json to_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const auto& [order, mult] : g.factors())
    factors.push_back({{"order", order}, {"multiplicity", big_to_json(mult)}});
  return {{"factors", std::move(factors)}, {"rank", big_to_json(g.rank())}, {"text", g.str()}};
}

json young_listing_json(Frame frame, const std::vector<YoungDiagram>& diagrams, bool even_only) {
  json list = json::array();
  for (const auto& y : diagrams)
    list.push_back({{"rows", std::vector<int>(y.rows().begin(), y.rows().end())},
                    {"boxes", y.boxes()},
                    {"even", is_even(y)}});
  return {{"frame", {frame.rows, frame.cols}},
          {"even_only", even_only},
          {"count", diagrams.size()},
          {"diagrams", std::move(list)}};
}

BaseTheoryTable base_table_from_json(const json& j) {
  if (auto problems = validate_base_table_json(j); !problems.empty())
    throw DomainError("invalid base-theory table: " + problems.front());
  BaseTheoryTable table;
  table.name = j.at("name").get<std::string>();
  for (const auto& e : j.at("entries")) {
    BaseTheoryKey key;
    key.theory = theory_from_string(e.at("theory").get<std::string>());
    key.shift = e.value("shift", std::int64_t{0});
    key.twist = pic_class_from_json(e.value("twist", json::array()));
    key.degree = e.at("degree").get<std::int64_t>();
    table.insert(std::move(key), AbelianGroup(e.at("group").get<std::vector<std::uint64_t>>()));
  }
  return table;
}

BaseTheoryTable load_base_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open base-theory table " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("base-theory table " + path.string() + " is not valid JSON: " + e.what());
  }
  return base_table_from_json(j);
}

namespace {

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  bool field(const json& obj, const char* name, bool (json::*pred)() const noexcept, const std::string& ctx) {
    if (!obj.contains(name)) {
      problems.push_back(ctx + ": missing '" + name + "'");
      return false;
    }
    if (!(obj.at(name).*pred)()) {
      problems.push_back(ctx + ": '" + name + "' has the wrong type");
      return false;
    }
    return true;
  }
  void twist(const json& t, const std::string& ctx) {
    if (!t.is_array()) {
      problems.push_back(ctx + ": twist must be an array");
      return;
    }
    for (const auto& g : t) {
      if (!g.is_string()) {
        problems.push_back(ctx + ": twist generators must be strings");
        continue;
      }
      try {
        (void)PicGenerator::parse(g.get<std::string>());
      } catch (const DomainError& e) {
        problems.push_back(ctx + ": " + e.what());
      }
    }
  }
  void bit(const json& obj, const char* name, const std::string& ctx) {
    if (!obj.contains(name)) return;
    const auto& v = obj.at(name);
    require(v.is_number_integer() && (v.get<std::int64_t>() == 0 || v.get<std::int64_t>() == 1),
            ctx + ": '" + name + "' must be 0 or 1");
  }

  std::vector<std::string> problems;
};

const std::set<std::string> kGwEntryKeys{"theory", "shift", "twist", "diagram", "t", "rho"};
const std::set<std::string> kMetaKeys{"source", "d", "m", "r", "shift", "twist", "mode", "bundle", "mu_indices"};

void check_formal_sum(Checker& c, const json& j, const std::string& ctx) {
  if (!j.is_object()) {
    c.problems.push_back(ctx + ": must be an object");
    return;
  }
  for (const auto& [key, _] : j.items())
    c.require(key == "k" || key == "gw" || key == "meta", ctx + ": unknown field '" + key + "'");
  if (c.field(j, "k", &json::is_number_integer, ctx))
    c.require(j.at("k").get<std::int64_t>() >= 0, ctx + ": k must be nonnegative");
  if (c.field(j, "gw", &json::is_array, ctx)) {
    std::size_t i = 0;
    for (const auto& e : j.at("gw")) {
      const std::string ectx = ctx + ".gw[" + std::to_string(i++) + "]";
      if (!e.is_object()) {
        c.problems.push_back(ectx + ": must be an object");
        continue;
      }
      for (const auto& [key, _] : e.items())
        c.require(kGwEntryKeys.contains(key), ectx + ": unknown field '" + key + "'");
      if (e.contains("theory"))
        c.require(e.at("theory") == "GW" || e.at("theory") == "W", ectx + ": theory must be GW or W");
      c.field(e, "shift", &json::is_number_integer, ectx);
      if (c.field(e, "twist", &json::is_array, ectx)) c.twist(e.at("twist"), ectx);
      if (e.contains("diagram")) {
        const auto& d = e.at("diagram");
        bool ok = d.is_array();
        int prev = std::numeric_limits<int>::max();
        for (const auto& v : d) {
          ok = ok && v.is_number_integer() && v.get<int>() >= 0 && v.get<int>() <= prev;
          if (ok) prev = v.get<int>();
        }
        c.require(ok, ectx + ": diagram must be a weakly decreasing array of nonnegative integers");
      }
      c.bit(e, "t", ectx);
      c.bit(e, "rho", ectx);
    }
  }
  if (j.contains("meta")) {
    const auto& m = j.at("meta");
    if (!m.is_object()) {
      c.problems.push_back(ctx + ".meta: must be an object");
      return;
    }
    for (const auto& [key, _] : m.items())
      c.require(kMetaKeys.contains(key), ctx + ".meta: unknown field '" + key + "'");
    for (const char* k : {"source", "twist", "mode", "bundle"})
      if (m.contains(k)) c.require(m.at(k).is_string(), ctx + ".meta: '" + k + "' must be a string");
    for (const char* k : {"d", "m", "r", "shift"})
      if (m.contains(k)) c.require(m.at(k).is_number_integer(), ctx + ".meta: '" + k + "' must be an integer");
    if (m.contains("mu_indices")) c.require(m.at("mu_indices").is_array(), ctx + ".meta: mu_indices must be an array");
  }
}

}  // namespace

std::vector<std::string> validate_formal_sum_json(const json& j) {
  Checker c;
  check_formal_sum(c, j, "sum");
  return c.problems;
}

std::vector<std::string> validate_les_json(const json& j) {
  Checker c;
  if (!j.is_object()) return {"les: must be an object"};
  const bool terms_ok = c.field(j, "terms", &json::is_array, "les");
  const bool maps_ok = c.field(j, "maps", &json::is_array, "les");
  c.field(j, "cyclic", &json::is_boolean, "les");
  if (terms_ok) {
    std::size_t i = 0;
    for (const auto& t : j.at("terms")) {
      const std::string ctx = "les.terms[" + std::to_string(i++) + "]";
      if (!t.is_object()) {
        c.problems.push_back(ctx + ": must be an object");
        continue;
      }
      c.field(t, "group", &json::is_string, ctx);
      if (t.contains("sum")) check_formal_sum(c, t.at("sum"), ctx + ".sum");
    }
  }
  if (terms_ok && maps_ok) {
    const auto terms = j.at("terms").size();
    const bool cyclic = j.value("cyclic", false);
    const auto want = cyclic ? terms : (terms == 0 ? 0 : terms - 1);
    c.require(j.at("maps").size() == want, "les: map count does not match the terms");
    for (const auto& m : j.at("maps")) c.require(m.is_string(), "les: map labels must be strings");
  }
  return c.problems;
}

std::vector<std::string> validate_young_listing_json(const json& j) {
  Checker c;
  if (!j.is_object()) return {"young: must be an object"};
  if (c.field(j, "frame", &json::is_array, "young"))
    c.require(j.at("frame").size() == 2, "young: frame must be [d, m]");
  c.field(j, "even_only", &json::is_boolean, "young");
  const bool count_ok = c.field(j, "count", &json::is_number_integer, "young");
  if (c.field(j, "diagrams", &json::is_array, "young")) {
    if (count_ok)
      c.require(j.at("count").get<std::size_t>() == j.at("diagrams").size(), "young: count mismatch");
    for (const auto& d : j.at("diagrams")) {
      c.field(d, "rows", &json::is_array, "young.diagram");
      c.field(d, "boxes", &json::is_number_integer, "young.diagram");
      c.field(d, "even", &json::is_boolean, "young.diagram");
    }
  }
  return c.problems;
}

std::vector<std::string> validate_base_table_json(const json& j) {
  Checker c;
  if (!j.is_object()) return {"table: must be an object"};
  c.field(j, "name", &json::is_string, "table");
  if (c.field(j, "entries", &json::is_array, "table")) {
    std::size_t i = 0;
    for (const auto& e : j.at("entries")) {
      const std::string ctx = "table.entries[" + std::to_string(i++) + "]";
      if (!e.is_object()) {
        c.problems.push_back(ctx + ": must be an object");
        continue;
      }
      if (c.field(e, "theory", &json::is_string, ctx)) {
        const auto t = e.at("theory").get<std::string>();
        c.require(t == "GW" || t == "K" || t == "W", ctx + ": theory must be GW, K or W");
      }
      if (e.contains("shift")) c.require(e.at("shift").is_number_integer(), ctx + ": shift must be an integer");
      if (e.contains("twist")) c.twist(e.at("twist"), ctx);
      c.field(e, "degree", &json::is_number_integer, ctx);
      if (c.field(e, "group", &json::is_array, ctx))
        for (const auto& o : e.at("group"))
          c.require(o.is_number_unsigned() || (o.is_number_integer() && o.get<std::int64_t>() >= 0),
                    ctx + ": group orders must be nonnegative integers");
    }
  }
  return c.problems;
}

std::string to_text(const FormalSum& s) {
  std::string out;
  if (s.k_count() > 0) out += "K(S)^" + s.k_count().str() + "\n";
  for (const auto& t : s.gw()) {
    out += to_string(t.theory) + shift_label(t.shift) + "(S, " + t.twist.str() + ")";
    if (t.diagram) out += "  diagram " + to_string(*t.diagram);
    if (t.t_index) out += "  t=" + std::to_string(*t.t_index);
    if (t.rho) out += "  rho=" + std::to_string(*t.rho);
    out += "\n";
  }
  if (out.empty()) out = "0\n";
  return out;
}

std::string to_text(const LongExactSequence& les) {
  std::string out;
  for (std::size_t i = 0; i < les.terms.size(); ++i) {
    out += les.terms[i].group + "\n";
    if (i < les.maps.size()) out += "  --" + les.maps[i] + "-->\n";
  }
  if (les.cyclic && !les.terms.empty()) out += les.terms.front().group + " (degree i-1) ...\n";
  return out;
}

}  // namespace gwcell
