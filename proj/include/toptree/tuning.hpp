#ifndef TOPTREE_TUNING_HPP
#define TOPTREE_TUNING_HPP

namespace toptree {

// Frozen regression thresholds for the leveled-contraction balancer.
//
// For a tree with s >= 2 edges the engine guarantees
//     height(top tree) <= kHeightC * log2(s) + kHeightK
// and for a single link/cut/expose touching trees with a total of n >= 2
// edges it guarantees
//     joins + splits    <= kOpsC * log2(n) + kOpsK.
//
// The constants were calibrated once against randomized and adversarial
// workloads (paths, stars, caterpillars, random trees, expose-heavy mixes,
// interleaved link/cut churn) at sizes up to 2^17 and then frozen; the
// calibration harness lives in tests/calibrate_constants.cpp. Observed
// worst cases were well below these values; the margin absorbs workload
// variation, not algorithmic regressions.
inline constexpr double kHeightC = 2.5;
inline constexpr double kHeightK = 4.0;
inline constexpr double kOpsC = 38.0;
inline constexpr double kOpsK = 24.0;

// Non-local search performs at most kSearchOpsPerLevel temporary joins
// plus splits per descent level, restoration included.
inline constexpr double kSearchOpsPerLevel = 24.0;

}  // namespace toptree

#endif  // TOPTREE_TUNING_HPP
