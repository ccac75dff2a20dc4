#pragma once

namespace matmor {

// Enumeration bound for ground sets; everything that walks 2^[n] refuses
// larger inputs. Overridable via the MATMOR_MAX_N environment variable.
int max_ground_size();

// Circuit/flat enumeration refuses beyond this regardless of MATMOR_MAX_N.
inline constexpr int kStructureEnumerationCap = 20;

inline constexpr int kDefaultMaxGroundSize = 22;

}  // namespace matmor
