#include "gwcell/young.hpp"

#include "gwcell/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gwcell {

Frame::Frame(int rows, int cols) : rows(rows), cols(cols) {
  if (rows < 0 || cols < 0)
    throw DomainError("frame dimensions must be nonnegative, got " + std::to_string(rows) + "x" +
                      std::to_string(cols));
}

YoungDiagram::YoungDiagram(Frame frame, std::vector<int> rows) : frame_(frame), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != frame_.rows)
    throw DomainError("diagram needs exactly " + std::to_string(frame_.rows) + " rows");
  int prev = frame_.cols;
  for (int v : rows_) {
    if (v < 0 || v > prev) throw DomainError("rows must be weakly decreasing within the frame");
    prev = v;
  }
}

YoungDiagram YoungDiagram::empty(Frame frame) {
  return YoungDiagram(frame, std::vector<int>(static_cast<std::size_t>(frame.rows), 0));
}

YoungDiagram YoungDiagram::full(Frame frame) {
  return YoungDiagram(frame, std::vector<int>(static_cast<std::size_t>(frame.rows), frame.cols));
}

int YoungDiagram::boxes() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::transposed() const {
  std::vector<int> cols(static_cast<std::size_t>(frame_.cols), 0);
  for (int c = 0; c < frame_.cols; ++c)
    cols[static_cast<std::size_t>(c)] =
        static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [c](int v) { return v > c; }));
  return YoungDiagram(frame_.transposed(), std::move(cols));
}

YoungDiagram YoungDiagram::with_full_columns(int k) const {
  std::vector<int> rows = rows_;
  for (int& v : rows) v += k;
  return YoungDiagram(Frame(frame_.rows, frame_.cols + k), std::move(rows));
}

YoungDiagram YoungDiagram::with_empty_rows(int k) const {
  std::vector<int> rows = rows_;
  rows.resize(rows.size() + static_cast<std::size_t>(k), 0);
  return YoungDiagram(Frame(frame_.rows + k, frame_.cols), std::move(rows));
}

namespace {

void enumerate_rec(Frame frame, std::vector<int>& rows, int bound, std::vector<YoungDiagram>& out) {
  if (static_cast<int>(rows.size()) == frame.rows) {
    out.emplace_back(frame, rows);
    return;
  }
  for (int v = bound; v >= 0; --v) {
    rows.push_back(v);
    enumerate_rec(frame, rows, v, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(Frame frame) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(frame.rows));
  enumerate_rec(frame, rows, frame.cols, out);
  return out;
}

SegmentDecomposition interface_segments(const YoungDiagram& diagram) {
  // Walk the boundary lattice path from (x = m, y = 0) to (x = 0, y = d).
  // Horizontal steps at y = 0 or y = d and vertical steps at x = 0 or x = m lie
  // on the frame border and break nothing: the path is monotone, so internal
  // steps of one orientation are always collinear and contiguous.
  const Frame f = diagram.frame();
  SegmentDecomposition out;
  auto push = [&out](Orientation o, int len) {
    if (len <= 0) return;
    if (!out.empty() && out.back().orientation == o)
      out.back().length += len;
    else
      out.push_back({o, len});
  };
  int x = f.cols;
  for (int y = 0; y < f.rows; ++y) {
    const int target = diagram.row(y);
    if (y > 0) push(Orientation::Horizontal, x - target);
    x = target;
    if (x > 0 && x < f.cols) push(Orientation::Vertical, 1);
  }
  return out;
}

bool is_even(const YoungDiagram& diagram) {
  const auto segs = interface_segments(diagram);
  return std::all_of(segs.begin(), segs.end(), [](const Segment& s) { return s.length % 2 == 0; });
}

std::vector<YoungDiagram> enumerate_even(Frame frame) {
  auto all = enumerate_diagrams(frame);
  std::erase_if(all, [](const YoungDiagram& d) { return !is_even(d); });
  return all;
}

namespace {

void require_positive(int d, int m, const char* what) {
  if (d < 1 || m < 1)
    throw DomainError(std::string(what) + " requires d, m >= 1, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
}

BigInt half_binomial(int d, int m) { return binomial(d / 2 + m / 2, d / 2); }

}  // namespace

BigInt even_cardinality(int d, int m) {
  require_positive(d, m, "even_cardinality");
  return 2 * half_binomial(d, m);
}

BigInt beta(int d, int m) {
  require_positive(d, m, "beta");
  return binomial(d + m, d) - half_binomial(d, m);
}

BigInt beta_parity(int l, int d, int m) {
  if (d < 0 || m < 0) throw DomainError("beta_parity requires d, m >= 0");
  if (d == 0 || m == 0) return 0;
  const bool l_odd = (l % 2 + 2) % 2 == 1;
  const BigInt cells = binomial(d + m, d);
  if (d % 2 == 0 || m % 2 == 0) return (cells - half_binomial(d, m)) / 2;
  if (l_odd) return cells / 2;
  return cells / 2 - half_binomial(d, m);
}

std::vector<PascalCheck> verify_pascal(int d_max, int m_max) {
  std::vector<PascalCheck> out;
  for (int d = 1; d <= d_max; ++d) {
    for (int m = 1; m <= m_max; ++m) {
      PascalCheck first{d, m, 1, PascalCheck::Status::Skipped};
      first.status = beta_parity(d + 1, d, m) == beta_parity(d, d, m - 1) + beta_parity(d - 1, d - 1, m)
                         ? PascalCheck::Status::Holds
                         : PascalCheck::Status::Fails;
      out.push_back(first);

      PascalCheck second{d, m, 2, PascalCheck::Status::Skipped};
      if (d >= 2 && m >= 2) {
        const BigInt rhs =
            beta_parity(d, d, m - 2) + binomial(d + m - 2, m - 1) + beta_parity(d - 2, d - 2, m);
        second.status = beta_parity(d, d, m) == rhs ? PascalCheck::Status::Holds
                                                    : PascalCheck::Status::Fails;
      }
      out.push_back(second);
    }
  }
  return out;
}

std::string render_ascii(const YoungDiagram& diagram) {
  const Frame f = diagram.frame();
  const std::string border = "+" + std::string(static_cast<std::size_t>(f.cols), '-') + "+\n";
  std::string out = border;
  for (int r = 0; r < f.rows; ++r) {
    out += '|';
    for (int c = 0; c < f.cols; ++c) out += diagram.filled(r, c) ? '#' : '.';
    out += "|\n";
  }
  out += border;
  return out;
}

std::string to_string(const YoungDiagram& diagram) {
  std::string out = "(";
  bool first = true;
  for (int v : diagram.rows()) {
    if (v == 0) break;
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace gwcell
