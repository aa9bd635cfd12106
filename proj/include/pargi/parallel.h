#ifndef PARGI_PARALLEL_H_
#define PARGI_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pargi {

// Bulk-synchronous executor. `ForChunks` splits [0, count) into contiguous,
// writer-disjoint ranges, runs one range per worker and returns only after
// all of them finished (the barrier). Chunk boundaries depend on `count` and
// the worker count alone.
class Executor {
 public:
  // Ranges shorter than this are not worth a thread.
  static constexpr std::size_t kMinGrain = 64;

  explicit Executor(int workers = 1) : workers_(workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  }

  int workers() const { return workers_; }

  std::size_t NumChunks(std::size_t count) const {
    if (count == 0) return 0;
    const std::size_t by_grain = (count + kMinGrain - 1) / kMinGrain;
    return std::min<std::size_t>(static_cast<std::size_t>(workers_), by_grain);
  }

  // fn(chunk_index, begin, end). The first exception thrown by any worker is
  // rethrown on the calling thread after the barrier.
  template <class Fn>
  void ForChunks(std::size_t count, Fn&& fn) const {
    const std::size_t chunks = NumChunks(count);
    if (chunks <= 1) {
      if (chunks == 1) fn(std::size_t{0}, std::size_t{0}, count);
      return;
    }
    std::exception_ptr error;
    std::mutex error_mu;
    auto run = [&](std::size_t c) {
      const std::size_t begin = count * c / chunks;
      const std::size_t end = count * (c + 1) / chunks;
      try {
        fn(c, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    };
    {
      std::vector<std::jthread> threads;
      threads.reserve(chunks - 1);
      for (std::size_t c = 1; c < chunks; ++c) threads.emplace_back(run, c);
      run(0);
    }
    if (error) std::rethrow_exception(error);
  }

  // fn(i) for every i in [0, count).
  template <class Fn>
  void ForEach(std::size_t count, Fn&& fn) const {
    ForChunks(count, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }

 private:
  int workers_;
};

}  // namespace pargi

#endif  // PARGI_PARALLEL_H_
