#include "matmor/config.hpp"

#include <cstdlib>
#include <string>

namespace matmor {

int max_ground_size() {
  static const int value = [] {
    const char* env = std::getenv("MATMOR_MAX_N");
    if (env == nullptr) return kDefaultMaxGroundSize;
    try {
      int v = std::stoi(env);
      if (v < 1) return 1;
      if (v > 28) return 28;  // 2^28-entry tables are already 256 MiB
      return v;
    } catch (...) {
      return kDefaultMaxGroundSize;
    }
  }();
  return value;
}

}  // namespace matmor
