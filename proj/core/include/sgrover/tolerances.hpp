#pragma once

namespace sgrover::tol {

inline constexpr double kCluster = 1e-8;    // eigenvalue clustering / matching
inline constexpr double kIdentity = 1e-12;  // operator identity residuals
inline constexpr double kWalk = 1e-10;      // walk-level identities

}  // namespace sgrover::tol
