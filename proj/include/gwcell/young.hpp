#pragma once

// Young diagrams in a rectangular (rows x cols) frame, their even subset, and
// the beta numbers counting K-theory summands of Grassmannians.

#include "gwcell/bigint.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace gwcell {

struct Frame {
  int rows = 0;  // d
  int cols = 0;  // m

  Frame() = default;
  Frame(int rows, int cols);  // throws DomainError on negative sizes

  Frame transposed() const { return Frame(cols, rows); }
  friend auto operator<=>(const Frame&, const Frame&) = default;
};

/// A partition m >= l_1 >= ... >= l_d >= 0 drawn inside a d x m frame.
class YoungDiagram {
 public:
  /// Validates monotonicity and frame bounds; throws DomainError otherwise.
  YoungDiagram(Frame frame, std::vector<int> rows);

  static YoungDiagram empty(Frame frame);
  static YoungDiagram full(Frame frame);

  Frame frame() const noexcept { return frame_; }
  std::span<const int> rows() const noexcept { return rows_; }
  int row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

  int boxes() const noexcept;
  bool filled(int r, int c) const noexcept { return c < rows_[static_cast<std::size_t>(r)]; }

  /// Conjugate partition in the transposed frame.
  YoungDiagram transposed() const;
  /// Adds k full columns on the left: frame (d, m + k), every row grows by k.
  YoungDiagram with_full_columns(int k) const;
  /// Appends k empty rows at the bottom: frame (d + k, m).
  YoungDiagram with_empty_rows(int k) const;

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  Frame frame_;
  std::vector<int> rows_;
};

enum class Orientation { Horizontal, Vertical };

struct Segment {
  Orientation orientation;
  int length;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

using SegmentDecomposition = std::vector<Segment>;

/// All diagrams fitting the frame, in descending lexicographic order of rows.
/// There are C(d + m, d) of them.
std::vector<YoungDiagram> enumerate_diagrams(Frame frame);

/// Maximal straight runs of the filled/unfilled boundary, ordered from the
/// top-right corner to the bottom-left. Edges on the frame border are never
/// included since they do not separate two in-frame boxes.
SegmentDecomposition interface_segments(const YoungDiagram& diagram);

/// True iff every interface segment has even length.
bool is_even(const YoungDiagram& diagram);

std::vector<YoungDiagram> enumerate_even(Frame frame);

/// 2 * C(floor(d/2) + floor(m/2), floor(d/2)). Requires d, m >= 1.
BigInt even_cardinality(int d, int m);

/// C(d + m, d) - C(floor(d/2) + floor(m/2), floor(d/2)). Requires d, m >= 1.
BigInt beta(int d, int m);

/// Number of K summands in twist class l (mod 2). For d, m >= 1 the three-case
/// formula; zero when d == 0 or m == 0 (a point has no K summands).
BigInt beta_parity(int l, int d, int m);

struct PascalCheck {
  enum class Status { Holds, Fails, Skipped };
  int d = 0;
  int m = 0;
  int identity = 0;  // 1 or 2
  Status status = Status::Skipped;
};

/// Checks both recursions satisfied by beta_parity for 1 <= d <= d_max,
/// 1 <= m <= m_max:
///   (1) b[d+1](d,m) = b[d](d,m-1) + b[d-1](d-1,m)
///   (2) b[d](d,m)   = b[d](d,m-2) + C(d+m-2, m-1) + b[d-2](d-2,m)
/// Rows with a negative sub-index are reported as Skipped.
std::vector<PascalCheck> verify_pascal(int d_max, int m_max);

/// Frame drawn with '+', '-', '|'; '#' for filled boxes and '.' for empty.
std::string render_ascii(const YoungDiagram& diagram);

std::string to_string(const YoungDiagram& diagram);  // "(3,1,1)" or "()"

}  // namespace gwcell
