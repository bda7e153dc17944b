#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace tfim {

/// (phi_i, phi_{i-1}) for some site i.
struct TransferState {
  double current = 0.0;
  double previous = 0.0;
};

/// T = [[e, -1], [1, 0]], advancing phi_{i-1} + phi_{i+1} = e phi_i by one site.
Eigen::Matrix2d transfer_step(double e);

/// Applies T^(p-2) to the state at site 2, giving the state at site p.
TransferState propagate(const TransferState& state2, double e, int p);

/// Sites first..last (1-based, inclusive) over which every interior site sees
/// equal couplings on both of its bonds, so the bulk recurrence holds there.
struct Segment {
  int first = 0;
  int last = 0;
  double coupling = 0.0;
};

/// Maximal segments with at least three sites.
std::vector<Segment> homogeneous_segments(const Eigen::VectorXd& couplings);

/// Largest deviation between `row` and the sequence generated by transfer
/// steps inside `segment`, seeded with the two values at the end where the row
/// is smaller (propagation then runs in the growing direction).
double segment_deviation(const Eigen::VectorXd& row, const Segment& segment, double e);

/// Worst segment_deviation over all homogeneous segments; `energy_of` maps a
/// segment to its E = 2 cos k.
double max_segment_deviation(const Eigen::VectorXd& row, const Eigen::VectorXd& couplings,
                             const std::function<double(const Segment&)>& energy_of);

}  // namespace tfim
