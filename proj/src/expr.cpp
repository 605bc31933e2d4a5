#include "gwcell/expr.hpp"

#include "gwcell/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gwcell {

std::string to_string(Theory t) {
  switch (t) {
    case Theory::GW:
      return "GW";
    case Theory::K:
      return "K";
    case Theory::W:
      return "W";
  }
  return {};
}

Theory theory_from_string(const std::string& s) {
  if (s == "GW") return Theory::GW;
  if (s == "K") return Theory::K;
  if (s == "W") return Theory::W;
  throw DomainError("unknown theory '" + s + "', expected GW, K or W");
}

bool canonical_less(const GwSummand& a, const GwSummand& b) {
  const auto ta = a.twist.serialize();
  const auto tb = b.twist.serialize();
  return std::tie(a.theory, a.shift, ta, a.diagram, a.t_index, a.rho) <
         std::tie(b.theory, b.shift, tb, b.diagram, b.t_index, b.rho);
}

void FormalSum::add_k(const BigInt& count) {
  if (count < 0) throw DomainError("K multiplicity must be nonnegative");
  k_ += count;
}

void FormalSum::add_gw(GwSummand s) {
  if (s.theory == Theory::K) throw DomainError("K summands are counted with add_k");
  auto pos = std::upper_bound(gw_.begin(), gw_.end(), s, canonical_less);
  gw_.insert(pos, std::move(s));
}

FormalSum direct_sum(const FormalSum& a, const FormalSum& b, MergePolicy policy) {
  const bool a_free = a.meta().source.empty();
  const bool b_free = b.meta().source.empty();
  if (policy == MergePolicy::RequireSameContext && !a_free && !b_free && !(a.meta() == b.meta()))
    throw DomainError("direct_sum of sums from different queries (" + a.meta().source + " vs " +
                      b.meta().source + ") needs an explicit merge");
  FormalSum out(a_free ? b.meta() : a.meta());
  out.add_k(a.k_count());
  out.add_k(b.k_count());
  for (const auto& s : a.gw()) out.add_gw(s);
  for (const auto& s : b.gw()) out.add_gw(s);
  return out;
}

bool equals(const FormalSum& a, const FormalSum& b) {
  if (a.k_count() != b.k_count() || a.gw().size() != b.gw().size()) return false;
  auto all_have = [&](auto member) {
    auto has = [&](const GwSummand& s) { return (s.*member).has_value(); };
    return std::all_of(a.gw().begin(), a.gw().end(), has) && std::all_of(b.gw().begin(), b.gw().end(), has);
  };
  const bool keep_diagram = all_have(&GwSummand::diagram);
  const bool keep_t = all_have(&GwSummand::t_index);
  const bool keep_rho = all_have(&GwSummand::rho);
  auto strip = [&](const std::vector<GwSummand>& v) {
    std::vector<GwSummand> out = v;
    for (auto& s : out) {
      if (!keep_diagram) s.diagram.reset();
      if (!keep_t) s.t_index.reset();
      if (!keep_rho) s.rho.reset();
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  };
  return strip(a.gw()) == strip(b.gw());
}

FormalSum witt_specialize(const FormalSum& a) {
  SumMeta meta = a.meta();
  meta.mode = "witt";
  meta.mu_indices.clear();
  FormalSum out(std::move(meta));
  for (GwSummand s : a.gw()) {
    s.theory = Theory::W;
    s.shift = ((s.shift % 4) + 4) % 4;
    out.add_gw(std::move(s));
  }
  return out;
}

AbelianGroup::AbelianGroup(const std::vector<std::uint64_t>& orders) {
  for (auto o : orders)
    if (o != 1) factors_[o] += 1;
}

AbelianGroup AbelianGroup::free_of_rank(const BigInt& rank) {
  AbelianGroup g;
  if (rank > 0) g.factors_[0] = rank;
  return g;
}

BigInt AbelianGroup::rank() const {
  auto it = factors_.find(0);
  return it == factors_.end() ? BigInt(0) : it->second;
}

AbelianGroup& AbelianGroup::operator+=(const AbelianGroup& other) {
  for (const auto& [order, mult] : other.factors_) factors_[order] += mult;
  return *this;
}

AbelianGroup AbelianGroup::repeated(const BigInt& copies) const {
  AbelianGroup g;
  if (copies <= 0) return g;
  for (const auto& [order, mult] : factors_) g.factors_[order] = mult * copies;
  return g;
}

std::string AbelianGroup::str() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (const auto& [order, mult] : factors_) {
    if (!out.empty()) out += " + ";
    const std::string cyclic = order == 0 ? "Z" : "Z/" + std::to_string(order);
    if (mult == 1)
      out += cyclic;
    else if (order == 0)
      out += "Z^" + mult.str();
    else
      out += "(" + cyclic + ")^" + mult.str();
  }
  return out;
}

std::string BaseTheoryKey::str() const {
  return to_string(theory) + "[shift=" + std::to_string(shift) + ",twist=" + twist.str() +
         ",degree=" + std::to_string(degree) + "]";
}

BaseTheoryKey BaseTheoryTable::normalize(BaseTheoryKey key) {
  for (const auto& g : key.twist.generators())
    if (g.kind != PicGenerator::Kind::Base)
      throw DomainError("base-theory twists may only use base symbols, got " + key.twist.str());
  if (key.theory == Theory::K && (key.shift != 0 || !key.twist.is_zero()))
    throw DomainError("K entries carry no shift or twist: " + key.str());
  if (key.theory == Theory::W) key.shift = ((key.shift % 4) + 4) % 4;
  return key;
}

void BaseTheoryTable::insert(BaseTheoryKey key, AbelianGroup group) {
  key = normalize(std::move(key));
  if (!entries_.emplace(key, std::move(group)).second)
    throw DomainError("duplicate base-theory entry " + key.str());
}

const AbelianGroup* BaseTheoryTable::find(const BaseTheoryKey& key) const {
  auto it = entries_.find(normalize(key));
  return it == entries_.end() ? nullptr : &it->second;
}

AbelianGroup evaluate(const FormalSum& a, const BaseTheoryTable& table, std::int64_t degree) {
  AbelianGroup out;
  std::set<std::string> missing;
  if (a.k_count() > 0) {
    const BaseTheoryKey key{Theory::K, 0, {}, degree};
    if (const auto* g = table.find(key))
      out += g->repeated(a.k_count());
    else
      missing.insert(key.str());
  }
  for (const auto& s : a.gw()) {
    const BaseTheoryKey key{s.theory, s.shift, s.twist, degree};
    if (const auto* g = table.find(key))
      out += *g;
    else
      missing.insert(key.str());
  }
  if (!missing.empty()) throw MissingKeysError({missing.begin(), missing.end()});
  return out;
}

Counts counts(const FormalSum& a) {
  Counts c;
  c.k = a.k_count();
  const std::int64_t base = a.meta().shift.value_or(0);
  for (const auto& s : a.gw()) c.gw.push_back({s.shift - base, s.twist.str(), s.t_index.value_or(0)});
  std::sort(c.gw.begin(), c.gw.end());
  return c;
}

}  // namespace gwcell
