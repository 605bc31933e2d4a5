#pragma once

// Formal direct sums of K(S) and shifted, twisted GW(S) summands, plus the
// machinery to compare them, pass to Witt groups, and evaluate them against a
// table describing the base scheme.

#include "gwcell/bigint.hpp"
#include "gwcell/twist.hpp"
#include "gwcell/young.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwcell {

enum class Theory { GW, K, W };

std::string to_string(Theory t);
Theory theory_from_string(const std::string& s);

/// One GW (or, after specialization, W) summand. K summands carry no data and
/// are only counted.
struct GwSummand {
  Theory theory = Theory::GW;
  std::int64_t shift = 0;
  PicClass twist;
  std::optional<YoungDiagram> diagram;
  std::optional<int> t_index;
  std::optional<int> rho;

  friend bool operator==(const GwSummand&, const GwSummand&) = default;
};

/// Canonical order: theory, shift, serialized twist, diagram, then labels.
bool canonical_less(const GwSummand& a, const GwSummand& b);

/// Echo of the query that produced a sum.
struct SumMeta {
  std::string source;  // empty: no context, compatible with anything
  std::optional<int> d;
  std::optional<int> m;
  std::optional<int> r;
  std::optional<std::int64_t> shift;
  std::string twist;
  std::string mode;
  std::string bundle;
  std::vector<int> mu_indices;  // which mu^m produced each K copy, when known

  friend bool operator==(const SumMeta&, const SumMeta&) = default;
};

class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(SumMeta meta) : meta_(std::move(meta)) {}

  const BigInt& k_count() const noexcept { return k_; }
  const std::vector<GwSummand>& gw() const noexcept { return gw_; }
  const SumMeta& meta() const noexcept { return meta_; }
  SumMeta& meta() noexcept { return meta_; }

  void add_k(const BigInt& count);
  void add_gw(GwSummand s);  // keeps gw() canonically sorted

  bool empty() const noexcept { return k_ == 0 && gw_.empty(); }

 private:
  BigInt k_ = 0;
  std::vector<GwSummand> gw_;
  SumMeta meta_;
};

enum class MergePolicy { RequireSameContext, Merge };

/// Multiset union. With RequireSameContext, both metas must agree unless one
/// of them is context-free; otherwise DomainError.
FormalSum direct_sum(const FormalSum& a, const FormalSum& b,
                     MergePolicy policy = MergePolicy::RequireSameContext);

/// Equality of canonical forms. Meta is ignored; a label (diagram, t, rho) is
/// compared only when every summand on both sides carries it.
bool equals(const FormalSum& a, const FormalSum& b);

/// Drops K summands and turns each GW[n] into W^{n mod 4}, twist unchanged.
FormalSum witt_specialize(const FormalSum& a);

/// Finitely generated abelian group as a multiset of cyclic orders (0 = Z).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(const std::vector<std::uint64_t>& orders);

  static AbelianGroup free_of_rank(const BigInt& rank);

  const std::map<std::uint64_t, BigInt>& factors() const noexcept { return factors_; }
  BigInt rank() const;  // number of Z factors
  bool trivial() const noexcept { return factors_.empty(); }

  AbelianGroup& operator+=(const AbelianGroup& other);
  friend AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b) { return a += b; }
  /// Direct sum of `copies` copies.
  AbelianGroup repeated(const BigInt& copies) const;

  /// "0", "Z^3 + Z/2", "(Z/2)^2".
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::map<std::uint64_t, BigInt> factors_;
};

struct BaseTheoryKey {
  Theory theory = Theory::GW;
  std::int64_t shift = 0;
  PicClass twist;
  std::int64_t degree = 0;

  std::string str() const;  // "GW[shift=-2,twist=L,degree=0]"
  friend auto operator<=>(const BaseTheoryKey&, const BaseTheoryKey&) = default;
};

/// Homotopy groups of the base scheme S, supplied by the user.
/// K entries must have shift 0 and an empty twist; W shifts are stored mod 4;
/// twists may only use base symbols.
class BaseTheoryTable {
 public:
  std::string name;

  void insert(BaseTheoryKey key, AbelianGroup group);
  const AbelianGroup* find(const BaseTheoryKey& key) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  static BaseTheoryKey normalize(BaseTheoryKey key);
  std::map<BaseTheoryKey, AbelianGroup> entries_;
};

/// Direct sum of the looked-up groups in degree i. Throws MissingKeysError
/// naming every absent key, or DomainError for twists that are not over S.
AbelianGroup evaluate(const FormalSum& a, const BaseTheoryTable& table, std::int64_t degree);

struct SummandProfile {
  std::int64_t shift_offset = 0;  // relative to meta().shift
  std::string twist;
  int t = 0;
  friend auto operator<=>(const SummandProfile&, const SummandProfile&) = default;
};

struct Counts {
  BigInt k;
  std::vector<SummandProfile> gw;  // sorted
};

Counts counts(const FormalSum& a);

struct LesTerm {
  std::string group;                // e.g. "GW^[n]_i(P(E))"
  std::optional<FormalSum> sum;     // when the term is a decomposed direct sum
};

/// Long exact sequence given by one period of terms and the maps between
/// them; the map after the last term returns to the first with degree i-1.
struct LongExactSequence {
  std::vector<LesTerm> terms;
  std::vector<std::string> maps;
  bool cyclic = true;
};

}  // namespace gwcell
