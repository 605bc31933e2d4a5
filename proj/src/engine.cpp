#include "gwcell/engine.hpp"

#include "gwcell/errors.hpp"

#include <stdexcept>

namespace gwcell {

std::string to_string(BundleKind b) { return b == BundleKind::Trivial ? "trivial" : "flagged"; }

namespace {

std::uint64_t full_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

std::uint64_t reverse_mask(std::uint64_t mask, int width) {
  std::uint64_t out = 0;
  for (int i = 0; i < width; ++i)
    if (mask >> i & 1U) out |= std::uint64_t{1} << (width - 1 - i);
  return out;
}

/// Flag-quotient part of a child twist as a position mask; anything else but
/// the child's own Delta is an engine bug.
std::uint64_t quotient_mask(const PicClass& cls, int child_rank) {
  std::uint64_t mask = 0;
  for (const auto& g : cls.generators()) {
    if (g.kind == PicGenerator::Kind::FlagQuotient)
      mask |= std::uint64_t{1} << (g.index - 1);
    else if (!(g.kind == PicGenerator::Kind::Delta && g.index == child_rank))
      throw std::logic_error("unexpected generator " + g.str() + " in a child twist");
  }
  return mask;
}

PicClass mask_class(std::uint64_t mask, const FlaggedBundle& bundle) {
  PicClass out;
  for (int i = 0; i < bundle.rank(); ++i)
    if (mask >> i & 1U) out += bundle.quotients()[static_cast<std::size_t>(i)];
  return out;
}

int rho_of(std::uint64_t mask, int width) {
  if (mask == 0) return 0;
  if (mask == full_mask(width)) return 1;
  throw std::logic_error("leaf twist does not telescope to a power of det V");
}

void check_leaf(const YoungDiagram& diagram, Frame frame) {
  if (diagram.frame() != frame || !is_even(diagram))
    throw std::logic_error("engine produced leaf diagram " + to_string(diagram) +
                           " that is not an even diagram of its frame");
}

std::vector<int> indices_in(int lo, int hi, int step) {
  std::vector<int> out;
  for (int i = lo; i <= hi; i += step) out.push_back(i);
  return out;
}

}  // namespace

ProjectiveCells projective_cells(int r, int twist_parity) {
  if (r < 1) throw DomainError("projective bundle needs r >= 1, got " + std::to_string(r));
  const bool l_odd = (twist_parity % 2 + 2) % 2 == 1;
  ProjectiveCells c;
  c.mu_indices = l_odd ? indices_in(1, r, 2) : indices_in(2, r, 2);
  if (r % 2 == 0) {
    c.base_leaf = !l_odd;
    c.det_leaf = l_odd;
  } else if (!l_odd) {
    c.base_leaf = true;
    c.det_leaf = true;
  }
  return c;
}

FormalSum decompose_point(std::int64_t shift, const PicClass& twist, Frame frame) {
  SumMeta meta;
  meta.source = "point";
  meta.d = frame.rows;
  meta.m = frame.cols;
  meta.shift = shift;
  meta.twist = twist.str();
  meta.mode = "formal";
  FormalSum out(std::move(meta));
  out.add_gw({Theory::GW, shift, twist, YoungDiagram::empty(frame), lambda_parity(twist, frame.rows), 0});
  return out;
}

namespace {

const PicClass& base_l() {
  static const PicClass l = PicClass::of(PicGenerator::base("L"));
  return l;
}

const PicClass& base_l_det_e() {
  static const PicClass l = base_l() + PicGenerator::base("detE");
  return l;
}

std::string shifted(std::int64_t n, std::int64_t offset) {
  return "[" + std::to_string(n - offset) + "]";
}

}  // namespace

LongExactSequence les_projective_odd(int r, std::int64_t shift) {
  if (r < 1 || r % 2 == 0)
    throw DomainError("the exact sequence is stated for odd r, got r=" + std::to_string(r));
  const auto cells = projective_cells(r, 0);

  SumMeta meta;
  meta.source = "projective_bundle";
  meta.r = r;
  meta.shift = shift;
  meta.twist = "even";
  meta.mode = "formal";

  FormalSum first(meta);
  first.meta().mu_indices = cells.mu_indices;
  first.add_k(cells.mu_indices.size());
  first.add_gw({Theory::GW, shift, base_l(), std::nullopt, 0, 0});

  FormalSum last(meta);
  last.add_gw({Theory::GW, shift - r, base_l_det_e(), std::nullopt, 0, 1});

  LongExactSequence les;
  les.terms.push_back({"(+)_{even m} K_i(S) + GW" + shifted(shift, 0) + "_i(S, L)", first});
  les.terms.push_back({"GW" + shifted(shift, 0) + "_i(P(E), L)", std::nullopt});
  les.terms.push_back({"GW" + shifted(shift, r) + "_i(S, L+detE)", last});
  les.maps = {"(Θ_even, q^*)", "q_*", "(0, η∪c(E))"};
  les.cyclic = true;
  return les;
}

std::variant<FormalSum, LongExactSequence> decompose_projective_bundle(const ProjBundleQuery& q) {
  const auto cells = projective_cells(q.r, q.twist_parity);
  const int l = (q.twist_parity % 2 + 2) % 2;
  if (q.r % 2 == 1 && l == 0 && !q.split) return les_projective_odd(q.r, q.shift);

  SumMeta meta;
  meta.source = "projective_bundle";
  meta.r = q.r;
  meta.shift = q.shift;
  meta.twist = l ? "odd" : "even";
  meta.mode = "formal";
  meta.mu_indices = cells.mu_indices;
  FormalSum out(std::move(meta));
  out.add_k(cells.mu_indices.size());
  const Frame frame(1, q.r);
  if (cells.base_leaf) out.add_gw({Theory::GW, q.shift, base_l(), YoungDiagram::empty(frame), l, 0});
  if (cells.det_leaf)
    out.add_gw({Theory::GW, q.shift - q.r, base_l_det_e(), YoungDiagram::full(frame), l, 1});
  return out;
}

std::shared_ptr<const Engine::Node> Engine::node(int d, int m, int lambda) const {
  const Key key{d, m, lambda};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto built = build(d, m, lambda);
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const Engine::Node> Engine::build(int d, int m, int lambda) const {
  auto out = std::make_shared<Node>();
  const int rank = d + m;
  const Frame frame(d, m);

  if (d == 0 || m == 0) {
    out->leaves.push_back({YoungDiagram::empty(frame), 0});
    return out;
  }

  if (d > m) {
    // Gr_d(W) = Gr_m(W^dual); Delta_d = Delta'_m + det W mod squares.
    const auto dual = node(m, d, lambda);
    out->k = dual->k;
    for (const auto& leaf : dual->leaves) {
      std::uint64_t mask = reverse_mask(leaf.mask, rank);
      if (lambda) mask ^= full_mask(rank);
      out->leaves.push_back({leaf.diagram.transposed(), mask});
    }
    return out;
  }

  if (d == 1) {
    const auto cells = projective_cells(m, lambda);
    out->k = cells.mu_indices.size();
    if (cells.base_leaf) out->leaves.push_back({YoungDiagram::empty(frame), 0});
    if (cells.det_leaf) out->leaves.push_back({YoungDiagram::full(frame), full_mask(rank)});
    return out;
  }

  // Child twists come from the line-bundle table on a symbolic flag with a
  // trivial base part; the base part of the real query passes through.
  const PicClass parent = lambda ? PicClass::of(PicGenerator::delta(d)) : PicClass{};
  const TwistFamily family = family_of(parent, d);
  const auto children = child_twists(family, d, parent, 0, FlaggedBundle::symbolic(rank));

  auto attach = [&](const Site& site, auto&& thread) {
    const PicClass& cls = children.at(site);
    const int child_m = rank - site.level - site.rank;
    const auto child = node(site.rank, child_m, lambda_parity(cls, site.rank));
    const std::uint64_t extra = quotient_mask(cls, site.rank);
    out->k += child->k;
    for (const auto& leaf : child->leaves) out->leaves.push_back({thread(leaf.diagram), leaf.mask ^ extra});
  };

  if (family == TwistFamily::HTilde) {
    attach({d, 1, false}, [](const YoungDiagram& y) { return y.with_full_columns(1); });
    attach({d - 1, 1, false}, [](const YoungDiagram& y) { return y.with_empty_rows(1); });
  } else {
    out->k += binomial(d + m - 2, d - 1);  // cells of Gr_{d-1}(V^2)
    attach({d, 2, false}, [](const YoungDiagram& y) { return y.with_full_columns(2); });
    attach({d - 2, 2, false}, [](const YoungDiagram& y) { return y.with_empty_rows(2); });
  }
  return out;
}

namespace {

PicClass validated_twist(const PicClass& twist, int d, int rank, BundleKind bundle) {
  PicClass out;
  for (const auto& g : twist.generators()) {
    switch (g.kind) {
      case PicGenerator::Kind::Base:
        break;
      case PicGenerator::Kind::FlagQuotient:
        if (bundle == BundleKind::Trivial)
          throw DomainError("flag quotient " + g.str() + " needs the flagged bundle");
        if (g.index > rank)
          throw DomainError("flag quotient " + g.str() + " exceeds the bundle rank " + std::to_string(rank));
        break;
      case PicGenerator::Kind::Delta:
        if (g.index == 0) continue;  // det of the zero bundle
        if (g.index != d)
          throw DomainError("twist on Gr_" + std::to_string(d) + " cannot contain " + g.str());
        break;
    }
    out += g;
  }
  return out;
}

}  // namespace

FormalSum Engine::decompose_grassmannian(const GrassmannQuery& q) const {
  if (q.d < 0 || q.m < 0) throw DomainError("Grassmannian needs d, m >= 0");
  const int rank = q.d + q.m;
  if (rank > kMaxAmbientRank)
    throw DomainError("d + m may not exceed " + std::to_string(kMaxAmbientRank));
  const PicClass twist = validated_twist(q.twist, q.d, rank, q.bundle);
  const int lambda = lambda_parity(twist, q.d);
  const PicClass base = twist.without(PicGenerator::Kind::Delta);
  const FlaggedBundle bundle =
      q.bundle == BundleKind::Trivial ? FlaggedBundle::trivial(rank) : FlaggedBundle::symbolic(rank);
  const Frame frame(q.d, q.m);

  SumMeta meta;
  meta.source = "grassmannian";
  meta.d = q.d;
  meta.m = q.m;
  meta.shift = q.shift;
  meta.twist = twist.str();
  meta.mode = "formal";
  meta.bundle = to_string(q.bundle);
  FormalSum out(std::move(meta));

  const auto n = node(q.d, q.m, lambda);
  out.add_k(n->k);
  for (const auto& leaf : n->leaves) {
    check_leaf(leaf.diagram, frame);
    out.add_gw({Theory::GW, q.shift - leaf.diagram.boxes(), base + mask_class(leaf.mask, bundle), leaf.diagram,
                lambda, rho_of(leaf.mask, rank)});
  }
  return out;
}

FormalSum Engine::decompose_total(int d, int m, std::int64_t shift, const PicClass& base_twist,
                                  BundleKind bundle) const {
  if (d < 1 || m < 1) throw DomainError("total GW group needs d, m >= 1");
  if (base_twist.coefficient(PicGenerator::delta(d)))
    throw DomainError("the base twist of a total GW group may not contain Delta");
  const FormalSum even = decompose_grassmannian({d, m, shift, base_twist, bundle});
  const FormalSum odd = decompose_grassmannian({d, m, shift, base_twist + PicGenerator::delta(d), bundle});
  FormalSum out = direct_sum(even, odd, MergePolicy::Merge);
  out.meta().source = "total";
  out.meta().twist = "both";
  return out;
}

FormalSum Engine::flag_closed_form(int d, int m, int l, std::int64_t shift) const {
  if (d < 1 || m < 1) throw DomainError("closed form needs d, m >= 1");
  if (d + m > kMaxAmbientRank) throw DomainError("d + m may not exceed " + std::to_string(kMaxAmbientRank));
  l = (l % 2 + 2) % 2;
  SumMeta meta;
  meta.source = "flag_closed_form";
  meta.d = d;
  meta.m = m;
  meta.shift = shift;
  meta.twist = l ? "odd" : "even";
  meta.mode = "formal";
  meta.bundle = "flagged";
  FormalSum out(std::move(meta));
  out.add_k(beta_parity(l, d, m));

  const PicClass det_v = PicClass::of(PicGenerator::base("detV"));
  for (const auto& leaf : leaf_table(d, m)) {
    if (leaf.t != l) continue;
    out.add_gw({Theory::GW, shift - leaf.diagram.boxes(), leaf.rho ? base_l() + det_v : base_l(), leaf.diagram,
                l, leaf.rho});
  }
  return out;
}

std::vector<LeafInfo> Engine::leaf_table(int d, int m) const {
  if (d < 0 || m < 0 || d + m > kMaxAmbientRank) throw DomainError("frame out of range for leaf_table");
  std::vector<LeafInfo> out;
  for (int l = 0; l < 2; ++l) {
    const auto n = node(d, m, l);
    for (const auto& leaf : n->leaves) {
      check_leaf(leaf.diagram, Frame(d, m));
      out.push_back({leaf.diagram, l, rho_of(leaf.mask, d + m)});
    }
  }
  return out;
}

std::size_t Engine::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

}  // namespace gwcell
