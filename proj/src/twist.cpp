#include "gwcell/twist.hpp"

#include "gwcell/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gwcell {

PicGenerator PicGenerator::base(std::string name) {
  if (name.empty()) throw DomainError("base generator needs a name");
  return {Kind::Base, std::move(name), 0};
}

PicGenerator PicGenerator::quotient(int j) {
  if (j < 1) throw DomainError("flag quotient index must be >= 1");
  return {Kind::FlagQuotient, {}, j};
}

PicGenerator PicGenerator::delta(int rank) {
  if (rank < 0) throw DomainError("Delta rank must be >= 0");
  return {Kind::Delta, {}, rank};
}

std::string PicGenerator::str() const {
  switch (kind) {
    case Kind::Base:
      return name;
    case Kind::FlagQuotient:
      return "q" + std::to_string(index);
    case Kind::Delta:
      return "Delta:" + std::to_string(index);
  }
  return {};
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw DomainError("malformed twist generator '" + std::string(token) + "'");
  return v;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PicGenerator PicGenerator::parse(std::string_view token, int default_delta_rank) {
  token = trim(token);
  if (token.empty()) throw DomainError("empty twist generator");
  if (token == "Delta") {
    if (default_delta_rank < 0) throw DomainError("'Delta' needs an explicit rank here, use Delta:<e>");
    return delta(default_delta_rank);
  }
  if (token.starts_with("Delta:")) return delta(parse_int(token.substr(6), token));
  if (token.size() > 1 && token[0] == 'q' && all_digits(token.substr(1)))
    return quotient(parse_int(token.substr(1), token));
  for (unsigned char c : token)
    if (!(std::isalnum(c) || c == '_' || c == '.'))
      throw DomainError("malformed twist generator '" + std::string(token) + "'");
  return base(std::string(token));
}

PicClass::PicClass(std::initializer_list<PicGenerator> gens) {
  for (const auto& g : gens) *this += g;
}

PicClass& PicClass::operator+=(const PicGenerator& g) {
  if (auto it = gens_.find(g); it != gens_.end())
    gens_.erase(it);
  else
    gens_.insert(g);
  return *this;
}

PicClass& PicClass::operator+=(const PicClass& other) {
  for (const auto& g : other.gens_) *this += g;
  return *this;
}

PicClass PicClass::base_part() const {
  PicClass out;
  for (const auto& g : gens_)
    if (g.kind == PicGenerator::Kind::Base) out.gens_.insert(g);
  return out;
}

PicClass PicClass::without(PicGenerator::Kind kind) const {
  PicClass out;
  for (const auto& g : gens_)
    if (g.kind != kind) out.gens_.insert(g);
  return out;
}

std::vector<std::string> PicClass::serialize() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.str());
  return out;
}

std::string PicClass::str() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += '+';
    out += g.str();
  }
  return out;
}

PicClass PicClass::parse(std::string_view text, int default_delta_rank) {
  PicClass out;
  text = trim(text);
  if (text.empty() || text == "0") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of(",+", start);
    if (end == std::string_view::npos) end = text.size();
    out += PicGenerator::parse(text.substr(start, end - start), default_delta_rank);
    start = end + 1;
  }
  return out;
}

FlagDescriptor::FlagDescriptor(std::vector<int> r, int ambient) : ranks(std::move(r)), ambient_rank(ambient) {
  if (ambient_rank < 0) throw DomainError("ambient rank must be >= 0");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || ranks[i] > ambient_rank)
      throw DomainError("flag ranks must lie in 1..r");
    if (i > 0 && ranks[i] <= ranks[i - 1]) throw DomainError("flag ranks must be strictly increasing");
  }
}

int pic_rank(const FlagDescriptor& flag, int base_pic_rank) {
  return base_pic_rank + static_cast<int>(flag.ranks.size());
}

int lambda_parity(const PicClass& t, int current_delta_rank) {
  return t.coefficient(PicGenerator::delta(current_delta_rank)) ? 1 : 0;
}

PicClass det_of_range(const FlagDescriptor& flag, int j, int k) {
  const int r = flag.ambient_rank;
  if (!(0 <= k && k < j && j <= r))
    throw DomainError("det_of_range needs 0 <= k < j <= r, got k=" + std::to_string(k) +
                      ", j=" + std::to_string(j) + ", r=" + std::to_string(r));
  PicClass out;
  for (int i = r - j + 1; i <= r - k; ++i) out += PicGenerator::quotient(i);
  return out;
}

FlaggedBundle FlaggedBundle::symbolic(int rank) {
  std::vector<PicClass> q;
  for (int i = 1; i <= rank; ++i) q.push_back(PicClass::of(PicGenerator::quotient(i)));
  return FlaggedBundle(std::move(q));
}

FlaggedBundle FlaggedBundle::trivial(int rank) {
  return FlaggedBundle(std::vector<PicClass>(static_cast<std::size_t>(std::max(rank, 0))));
}

PicClass FlaggedBundle::det() const { return top(rank()); }

PicClass FlaggedBundle::top(int k) const {
  if (k < 0 || k > rank()) throw DomainError("flag step out of range");
  PicClass out;
  for (int i = rank() - k; i < rank(); ++i) out += quotients_[static_cast<std::size_t>(i)];
  return out;
}

FlaggedBundle FlaggedBundle::sub(int k) const {
  if (k < 0 || k > rank()) throw DomainError("flag step out of range");
  return FlaggedBundle({quotients_.begin(), quotients_.end() - k});
}

FlaggedBundle FlaggedBundle::dual() const { return FlaggedBundle({quotients_.rbegin(), quotients_.rend()}); }

std::string to_string(const Site& s) {
  return std::string(s.k_site ? "K:" : "") + "Gr_" + std::to_string(s.rank) + "(V^" +
         std::to_string(s.level) + ")";
}

TwistFamily family_of(const PicClass& t, int d) {
  return lambda_parity(t, d) == ((d - 1) % 2 + 2) % 2 ? TwistFamily::HTilde : TwistFamily::H;
}

std::map<Site, PicClass> child_twists(TwistFamily family, int d, const PicClass& t, int j,
                                      const FlaggedBundle& ambient) {
  for (const auto& g : t.generators())
    if (g.kind == PicGenerator::Kind::Delta && g.index != d)
      throw DomainError("twist " + t.str() + " carries a Delta that does not belong to Gr_" +
                        std::to_string(d));
  const int lambda = lambda_parity(t, d);
  const int wanted = family == TwistFamily::HTilde ? (d + 1) % 2 : d % 2;
  if (lambda != wanted)
    throw DomainError("twist " + t.str() + " has lambda parity " + std::to_string(lambda) +
                      ", which does not belong to the requested family on Gr_" + std::to_string(d));
  if (j < 0 || j > ambient.rank()) throw DomainError("recursion level out of range");

  const FlaggedBundle v = ambient.sub(j);
  const int steps = family == TwistFamily::HTilde ? 1 : 2;
  const int min_d = family == TwistFamily::HTilde ? 1 : 2;
  if (d < min_d || v.rank() - d < steps)
    throw DomainError("Gr_" + std::to_string(d) + " of a rank " + std::to_string(v.rank()) +
                      " bundle is too small for this recursion step");

  // Base part: everything except the parent's Delta. It is pulled back from S.
  const PicClass base = t.without(PicGenerator::Kind::Delta);
  const bool d_odd = d % 2 == 1;
  const auto delta = [](int e) { return PicGenerator::delta(e); };
  std::map<Site, PicClass> out;

  if (family == TwistFamily::HTilde) {
    const PicClass q1 = v.top(1);  // V / V^1
    out[{d, j + 1, false}] = d_odd ? base + q1 + delta(d) : base;
    out[{d - 1, j + 1, false}] = d_odd ? base : base + q1 + delta(d - 1);
  } else {
    const PicClass q2 = v.top(2);          // V / V^2
    const PicClass q12 = v.sub(1).top(1);  // V^1 / V^2
    out[{d, j + 2, false}] = d_odd ? base + q2 + delta(d) : base;
    out[{d - 2, j + 2, false}] = d_odd ? base + q2 + delta(d - 2) : base;
    out[{d - 1, j + 2, true}] = d_odd ? base + v.top(1) : base + q12 + delta(d - 1);
  }
  return out;
}

}  // namespace gwcell
