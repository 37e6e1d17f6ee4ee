// Internal OpenMP helpers shared by the enumeration and census kernels.
#ifndef ODDPERM_SRC_PARALLEL_HPP
#define ODDPERM_SRC_PARALLEL_HPP

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oddperm::detail {

// Sets the OpenMP thread count for its lifetime when jobs > 0.
class ThreadCount {
 public:
  explicit ThreadCount(int jobs) {
#ifdef _OPENMP
    saved_ = omp_get_max_threads();
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
  }
  ~ThreadCount() {
#ifdef _OPENMP
    omp_set_num_threads(saved_);
#endif
  }
  ThreadCount(const ThreadCount&) = delete;
  ThreadCount& operator=(const ThreadCount&) = delete;

 private:
  int saved_ = 1;
};

// Dynamic-schedule loop over [0, count). The first exception thrown by any
// iteration is rethrown on the calling thread once the loop finishes.
template <class Fn>
void parallel_for(long count, Fn&& fn, int chunk = 1) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, chunk)
  for (long i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(oddperm_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace oddperm::detail

#endif  // ODDPERM_SRC_PARALLEL_HPP
