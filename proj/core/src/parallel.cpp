#include "meancx/parallel.hpp"

#include <atomic>

namespace meancx {

namespace {
std::atomic<unsigned> configured_threads{0};
}

void set_thread_count(unsigned threads) noexcept { configured_threads.store(threads); }

unsigned thread_count() noexcept {
  const unsigned t = configured_threads.load();
  if (t != 0) return t;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace meancx
