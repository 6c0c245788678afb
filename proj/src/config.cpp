#include "holobrace/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "holobrace/error.hpp"

namespace holobrace {

unsigned EngineOptions::resolved_workers() const {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

EngineOptions EngineOptions::from_env() {
  EngineOptions opts;
  if (const char* s = std::getenv("HOLOBRACE_CAP"); s != nullptr && *s != '\0') {
    std::uint64_t v = 0;
    const char* end = s + std::strlen(s);
    auto [ptr, ec] = std::from_chars(s, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw InvalidInput(std::string("HOLOBRACE_CAP must be a positive integer, got '") + s + "'");
    }
    opts.cap = v;
  }
  return opts;
}

}  // namespace holobrace
