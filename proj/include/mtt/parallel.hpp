#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mtt {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

class ScaleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExecPolicy {
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultCap;
};

/// base^exponent, throwing ScaleCapExceeded once the value passes `cap`.
inline std::uint64_t capped_power(std::uint64_t base, unsigned exponent, std::uint64_t cap, const std::string& what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > cap / base)
      throw ScaleCapExceeded(what + ": " + std::to_string(base) + "^" + std::to_string(exponent) + " exceeds cap " +
                             std::to_string(cap));
    r *= base;
  }
  if (r > cap) throw ScaleCapExceeded(what + " exceeds cap " + std::to_string(cap));
  return r;
}

/// Splits [0, total) into contiguous chunks, runs `work(begin, end)` for each
/// chunk on up to `jobs` threads and folds the chunk results in index order,
/// so the outcome does not depend on the worker count as long as `merge` is
/// associative.
template <class Result, class Work, class Merge>
Result parallel_reduce(std::uint64_t total, unsigned jobs, Result init, Work&& work, Merge&& merge) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2 * jobs) {
    merge(init, work(std::uint64_t{0}, total));
    return init;
  }
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{jobs} * 4);
  std::vector<Result> results(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  auto bounds = [&](std::uint64_t c) { return total * c / chunks; };

  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      for (std::uint64_t c = t; c < chunks; c += jobs) {
        try {
          results[c] = work(bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& r : results) merge(init, std::move(r));
  return init;
}

}  // namespace mtt
