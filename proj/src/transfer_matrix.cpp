#include "tfim/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "tfim/errors.hpp"

namespace tfim {

Eigen::Matrix2d transfer_step(double e) {
  Eigen::Matrix2d t;
  t << e, -1.0, 1.0, 0.0;
  return t;
}

TransferState propagate(const TransferState& state2, double e, int p) {
  if (p < 2) throw Error(ErrorCode::InvalidParameter, "propagate needs p >= 2");
  const Eigen::Matrix2d t = transfer_step(e);
  Eigen::Vector2d s(state2.current, state2.previous);
  for (int i = 2; i < p; ++i) s = t * s;
  return {s(0), s(1)};
}

std::vector<Segment> homogeneous_segments(const Eigen::VectorXd& couplings) {
  const int n = static_cast<int>(couplings.size()) + 1;
  std::vector<Segment> out;
  // Interior site i (1-based) sits between bonds i-1 and i, i.e. couplings(i-2), couplings(i-1).
  int i = 2;
  while (i <= n - 1) {
    if (couplings(i - 2) != couplings(i - 1)) {
      ++i;
      continue;
    }
    const double j = couplings(i - 1);
    int end = i;
    while (end + 1 <= n - 1 && couplings(end - 1) == j && couplings(end) == j) ++end;
    out.push_back({i - 1, end + 1, j});
    i = end + 1;
  }
  return out;
}

double segment_deviation(const Eigen::VectorXd& row, const Segment& segment, double e) {
  const int len = segment.last - segment.first + 1;
  if (len < 3) return 0.0;
  Eigen::VectorXd values = row.segment(segment.first - 1, len);
  const bool reverse = std::abs(values(len - 1)) + std::abs(values(len - 2)) <
                       std::abs(values(0)) + std::abs(values(1));
  if (reverse) values.reverseInPlace();
  // The recurrence is symmetric under reversal, so the same step works both ways.
  TransferState state{values(1), values(0)};
  double worst = 0.0;
  for (int p = 3; p <= len; ++p) {
    state = propagate(state, e, 3);
    worst = std::max(worst, std::abs(state.current - values(p - 1)));
  }
  return worst;
}

double max_segment_deviation(const Eigen::VectorXd& row, const Eigen::VectorXd& couplings,
                             const std::function<double(const Segment&)>& energy_of) {
  double worst = 0.0;
  for (const auto& s : homogeneous_segments(couplings)) {
    worst = std::max(worst, segment_deviation(row, s, energy_of(s)));
  }
  return worst;
}

}  // namespace tfim
