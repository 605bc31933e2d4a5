#pragma once

// Decomposition of GW groups of projective bundles and Grassmann bundles into
// K(S) and GW(S) summands.
//
// Grassmannians are handled by the blow-up recursion: with lambda the Delta
// parity of the twist on Gr_d(V), V of rank d + m,
//   lambda = d - 1 (mod 2):  Gr_d(V) ~ Gr_d(V^1)[shift - d] + Gr_{d-1}(V^1)
//   lambda = d     (mod 2):  Gr_d(V) ~ K(Gr_{d-1}(V^2)) + Gr_d(V^2)[shift - 2d]
//                                       + Gr_{d-2}(V^2)
// with the child twists from child_twists(). Projective bundles (d = 1) and
// points (d = 0 or m = 0) end the recursion; d > m is reduced through
// Gr_d(V) = Gr_m(V^dual).

#include "gwcell/expr.hpp"
#include "gwcell/twist.hpp"
#include "gwcell/young.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <variant>
#include <vector>

namespace gwcell {

enum class BundleKind { Trivial, FlaggedSymbolic };

std::string to_string(BundleKind b);

struct GrassmannQuery {
  int d = 0;
  int m = 0;
  std::int64_t shift = 0;
  /// Base symbols, flag quotients q_1..q_{d+m} and Delta:d are allowed.
  PicClass twist;
  BundleKind bundle = BundleKind::Trivial;
};

struct ProjBundleQuery {
  int r = 1;  // the bundle E has rank r + 1
  int twist_parity = 0;
  std::int64_t shift = 0;
  bool split = true;
};

/// The cells a projective bundle P(E), rank E = r + 1, contributes in a twist
/// class: K copies (with their mu indices), a GW[n] leaf, and a GW[n - r]
/// leaf twisted by det E.
struct ProjectiveCells {
  std::vector<int> mu_indices;
  bool base_leaf = false;
  bool det_leaf = false;
};

/// Cell bookkeeping for the projective bundle theorem (split case for odd r
/// and even twist).
ProjectiveCells projective_cells(int r, int twist_parity);

FormalSum decompose_point(std::int64_t shift, const PicClass& twist, Frame frame = Frame(0, 0));

/// Formal sum, or for odd r, even twist and split == false, the long exact
/// sequence that replaces the splitting. Base twist is "L"; det E is the base
/// symbol "detE".
std::variant<FormalSum, LongExactSequence> decompose_projective_bundle(const ProjBundleQuery& q);

/// The three-term exact cycle for odd r in the even twisted case; throws
/// DomainError for even r.
LongExactSequence les_projective_odd(int r, std::int64_t shift);

/// One GW leaf of a Grassmannian in the frame of its query.
struct LeafInfo {
  YoungDiagram diagram;
  int t = 0;    // Delta parity of the query twist
  int rho = 0;  // exponent of det V in the leaf twist
};

/// Memoizing evaluator. Results of a (d, m, lambda) sub-problem are cached as
/// bundle-independent structure, so one engine serves every query. All public
/// members are safe to call concurrently.
class Engine {
 public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  FormalSum decompose_grassmannian(const GrassmannQuery& q) const;

  /// Sum over the twists L and L + Delta_d. Requires d, m >= 1.
  FormalSum decompose_total(int d, int m, std::int64_t shift, const PicClass& base_twist,
                            BundleKind bundle = BundleKind::Trivial) const;

  /// beta^[l]_{d,m} K copies plus GW^[n - |diagram|](S, L + rho * detV) for
  /// each leaf in class l, with twists written through the base symbol "detV".
  FormalSum flag_closed_form(int d, int m, int l, std::int64_t shift) const;

  /// Leaves of both twist classes, each class in recursion order.
  std::vector<LeafInfo> leaf_table(int d, int m) const;

  std::size_t cache_size() const;

 private:
  struct Leaf {
    YoungDiagram diagram;
    std::uint64_t mask = 0;  // quotient positions (bottom first) added to the twist
  };
  struct Node {
    BigInt k;
    std::vector<Leaf> leaves;
  };
  using Key = std::tuple<int, int, int>;

  std::shared_ptr<const Node> node(int d, int m, int lambda) const;
  std::shared_ptr<const Node> build(int d, int m, int lambda) const;

  mutable std::mutex mutex_;
  mutable std::map<Key, std::shared_ptr<const Node>> cache_;
};

/// Largest d + m the engine accepts.
inline constexpr int kMaxAmbientRank = 64;

}  // namespace gwcell
