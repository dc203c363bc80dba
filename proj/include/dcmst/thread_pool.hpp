#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dcmst {

// Persistent pool running index-parallel loops. parallel_for blocks until
// every index has been processed; indices are claimed atomically so the
// assignment of index to thread is arbitrary, which is why callers must
// write results into per-index slots and reduce afterwards.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned thread_count() const { return static_cast<unsigned>(workers_.size()) + 1; }

  // Runs fn(i) for all i in [0, count). The calling thread participates.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

 private:
  void worker_loop();

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable job_ready_;
  std::condition_variable job_done_;

  const std::function<void(std::size_t)>* job_fn_ = nullptr;
  std::size_t job_count_ = 0;
  std::uint64_t job_id_ = 0;
  std::atomic<std::size_t> next_index_{0};
  std::atomic<std::size_t> remaining_{0};
  bool shutdown_ = false;
};

}  // namespace dcmst
