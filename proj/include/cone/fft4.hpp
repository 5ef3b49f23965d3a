#ifndef CONE_FFT4_HPP_
#define CONE_FFT4_HPP_

#include <array>
#include <complex>
#include <vector>

namespace cone {

// In-place 4-D complex DFTs (FFTW backed, single-threaded plans so results
// are bitwise reproducible for any OpenMP setting).
void fft4_forward(std::complex<double>* data, const std::array<int, 4>& dims);
// Unnormalized inverse; callers divide by the point count.
void fft4_backward(std::complex<double>* data, const std::array<int, 4>& dims);

// Smallest 5-smooth even integer >= n (FFT-friendly sizes).
int fft_friendly_size(int n);

}  // namespace cone

#endif  // CONE_FFT4_HPP_
