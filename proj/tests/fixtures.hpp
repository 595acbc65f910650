#pragma once

// Values frozen from a first run. Regression only: they must reproduce bit for
// bit, they are not checked against any published number.

/// threshold_x0(2) with tol 1e-12 and the default search range.
inline constexpr double kThresholdX0N2 = 0x1.803bb89292ea8p-1;  // 0.7504556349681097
