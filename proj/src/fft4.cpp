#include "cone/fft4.hpp"

#include <fftw3.h>

#include <mutex>

namespace cone {

namespace {
std::mutex g_plan_mutex;  // FFTW planning is not thread-safe

void run(std::complex<double>* data, const std::array<int, 4>& dims, int sign) {
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    // FFTW_ESTIMATE does not touch the array contents during planning.
    plan = fftw_plan_dft(4, dims.data(), buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace

void fft4_forward(std::complex<double>* data, const std::array<int, 4>& dims) {
  run(data, dims, FFTW_FORWARD);
}

void fft4_backward(std::complex<double>* data, const std::array<int, 4>& dims) {
  run(data, dims, FFTW_BACKWARD);
}

int fft_friendly_size(int n) {
  auto smooth = [](int m) {
    for (int p : {2, 3, 5})
      while (m % p == 0) m /= p;
    return m == 1;
  };
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  while (!smooth(n)) n += 2;
  return n;
}

}  // namespace cone
