#pragma once

// Twists modulo squares. Only the class of a line bundle in Pic / 2 affects a
// Grothendieck-Witt group, so a twist is a finite set of generators, each with
// coefficient 1 mod 2.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gwcell {

struct PicGenerator {
  enum class Kind { Base, FlagQuotient, Delta };

  Kind kind = Kind::Base;
  std::string name;  // Base only
  int index = 0;     // FlagQuotient: j (class of V_j / V_{j-1}); Delta: rank e

  static PicGenerator base(std::string name);
  static PicGenerator quotient(int j);
  static PicGenerator delta(int rank);

  /// "L", "q3", "Delta:2".
  std::string str() const;
  /// Inverse of str(); also accepts "Delta" (rank given by default_delta_rank).
  static PicGenerator parse(std::string_view token, int default_delta_rank = -1);

  // Base < FlagQuotient < Delta, then by name / index.
  friend auto operator<=>(const PicGenerator&, const PicGenerator&) = default;
};

class PicClass {
 public:
  PicClass() = default;
  PicClass(std::initializer_list<PicGenerator> gens);

  static PicClass of(const PicGenerator& g) { return PicClass{g}; }

  bool coefficient(const PicGenerator& g) const { return gens_.contains(g); }
  bool is_zero() const noexcept { return gens_.empty(); }
  const std::set<PicGenerator>& generators() const noexcept { return gens_; }

  PicClass& operator+=(const PicClass& other);
  PicClass& operator+=(const PicGenerator& g);
  friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
  friend PicClass operator+(PicClass a, const PicGenerator& g) { return a += g; }

  /// Part spanned by Base generators.
  PicClass base_part() const;
  /// Drops every generator of the given kind.
  PicClass without(PicGenerator::Kind kind) const;

  /// Sorted generator strings, e.g. ["L", "q3", "Delta:2"].
  std::vector<std::string> serialize() const;
  /// Joined with '+', "0" for the trivial class.
  std::string str() const;
  /// Comma-separated generator tokens; the empty string and "0" give the zero class.
  static PicClass parse(std::string_view text, int default_delta_rank = -1);

  friend auto operator<=>(const PicClass&, const PicClass&) = default;

 private:
  std::set<PicGenerator> gens_;
};

/// Strict partition d_1 < ... < d_e inside a rank-r bundle carrying a complete flag.
struct FlagDescriptor {
  std::vector<int> ranks;
  int ambient_rank = 0;

  FlagDescriptor(std::vector<int> ranks, int ambient_rank);  // validates
  static FlagDescriptor grassmannian(int d, int r) { return FlagDescriptor({d}, r); }
};

/// Rank of Pic of the flag bundle: base rank plus one Delta per flag step.
int pic_rank(const FlagDescriptor& flag, int base_pic_rank);

/// Coefficient of Delta_{current_delta_rank} in t; every other generator contributes 0.
int lambda_parity(const PicClass& t, int current_delta_rank);

/// det(V^k / V^j) for 0 <= k < j <= r, where V^i = V_{r-i}: the sum of the
/// quotient classes q_{r-j+1}, ..., q_{r-k}.
PicClass det_of_range(const FlagDescriptor& flag, int j, int k);

/// A vector bundle with a complete flag, recorded by the mod-2 classes of its
/// graded pieces V_1/V_0, ..., V_r/V_{r-1} (bottom first).
class FlaggedBundle {
 public:
  explicit FlaggedBundle(std::vector<PicClass> quotients) : quotients_(std::move(quotients)) {}

  /// Quotients q_1, ..., q_r as independent symbols.
  static FlaggedBundle symbolic(int rank);
  /// O^r: every quotient is trivial.
  static FlaggedBundle trivial(int rank);

  int rank() const noexcept { return static_cast<int>(quotients_.size()); }
  const std::vector<PicClass>& quotients() const noexcept { return quotients_; }

  PicClass det() const;
  /// det(V / V^k): the top k quotients.
  PicClass top(int k) const;
  /// V^k = V_{r-k}.
  FlaggedBundle sub(int k) const;
  /// The dual with the annihilator flag; mod squares its quotients are ours reversed.
  FlaggedBundle dual() const;

 private:
  std::vector<PicClass> quotients_;
};

enum class TwistFamily { HTilde, H };

/// Where a child twist lives in the blow-up recursion: Gr_rank(V^level).
struct Site {
  int rank = 0;
  int level = 0;
  bool k_site = false;  // the K-theory summand of the H recursion
  friend auto operator<=>(const Site&, const Site&) = default;
};

std::string to_string(const Site& s);  // "Gr_2(V^1)", "K:Gr_1(V^2)"

/// Child twists of the line-bundle table instantiated at level j: V is
/// replaced by ambient.sub(j). t is a twist on Gr_d(V^j) whose Delta
/// coefficient must match the family (d - 1 for HTilde, d for H, mod 2).
/// HTilde yields Gr_d(V^{j+1}) and Gr_{d-1}(V^{j+1}); H yields Gr_d(V^{j+2}),
/// Gr_{d-2}(V^{j+2}) and the K-site Gr_{d-1}(V^{j+2}).
/// Throws DomainError on parity mismatch, stray Delta generators, or if the
/// levels run past the bundle.
std::map<Site, PicClass> child_twists(TwistFamily family, int d, const PicClass& t, int j,
                                      const FlaggedBundle& ambient);

/// Family selected by the Delta parity of t on Gr_d.
TwistFamily family_of(const PicClass& t, int d);

}  // namespace gwcell
