#include "saxl/limits.hpp"

#include <mutex>

namespace saxl {

namespace {
std::mutex g_limits_mutex;
Limits g_limits;
}  // namespace

const Limits& default_limits() { return g_limits; }

void set_default_limits(const Limits& limits) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = limits;
}

}  // namespace saxl
