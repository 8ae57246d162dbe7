#include "sparse_ramsey/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sparse_ramsey {

int default_thread_count() {
  const char* env = std::getenv("SPARSE_RAMSEY_THREADS");
  if (env == nullptr) return 1;
  try {
    std::size_t used = 0;
    int n = std::stoi(env, &used);
    if (used != std::string(env).size() || n < 1) return 1;
    return n;
  } catch (const std::exception&) {
    return 1;
  }
}

void run_sharded(int threads, const std::function<void(Shard)>& body) {
  if (threads <= 1) {
    body(Shard{0, 1});
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) {
    pool.emplace_back([&, i] {
      try {
        body(Shard{i, threads});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sparse_ramsey
