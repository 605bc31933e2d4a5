#pragma once

// Cross-checks of the combinatorics and the decomposition engine, packaged as
// a report.

#include "gwcell/engine.hpp"
#include "gwcell/io.hpp"
#include "gwcell/young.hpp"

#include <string>
#include <vector>

namespace gwcell {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string params;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// Runs every check with sweeps over 1 <= d <= d_max, 1 <= m <= m_max.
/// Enumeration-based sweeps skip frames with more than kEnumerationLimit
/// diagrams. Checks run concurrently; the report order is fixed.
VerificationReport run_all(int d_max, int m_max);

inline constexpr long kEnumerationLimit = 2'000'000;

/// Independent interface oracle: scans every pair of adjacent in-frame boxes,
/// keeps the separating unit edges and groups them into maximal collinear
/// runs, ordered from the top-right corner. Frames up to 12 x 12.
SegmentDecomposition brute_force_interface(const YoungDiagram& diagram);

/// Reference even diagrams of the square frames 2, 3 and 4, as row vectors.
const std::vector<std::vector<int>>& reference_even_shapes(int size);

json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace gwcell
