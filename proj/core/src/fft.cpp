#include "wds/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace wds {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

// FFTW planning is not thread safe; execution through the new-array
// interface is. Plans are unaligned and out-of-place so any std::vector
// buffer pair is acceptable.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

cvec run(const cvec& x, int sign) {
  if (x.empty()) return {};
  cvec in = x;
  cvec out(x.size());
  fftw_plan p = cache().get(x.size(), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

cvec fft(const cvec& x) { return run(x, FFTW_FORWARD); }
cvec ifft(const cvec& x) { return run(x, FFTW_BACKWARD); }

}  // namespace wds
