#pragma once

#include <cmath>

namespace fafd {

// All powers are carried internally as linear values on the milliwatt scale,
// i.e. dBm inputs map through 10^(x/10). Ratio quantities in dB use the same
// exponent rule, so "-40 dB" parses to 1e-4.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace fafd
