#ifndef CONE_RNG_HPP_
#define CONE_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>

namespace cone {

// Counter-based generator: draw(key, counter) is a pure function, so any
// point of a sweep can be evaluated independently of thread or loop order.
// Mixer is the splitmix64 finalizer.
inline uint64_t rng_mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t rng_key(uint64_t seed, uint64_t stream) {
  return rng_mix(seed ^ rng_mix(stream + 0x1234567899abcdefull));
}

// Uniform in [0, 1).
inline double rng_u01(uint64_t key, uint64_t counter) {
  return static_cast<double>(rng_mix(key + counter * 0x9e3779b97f4a7c15ull) >> 11) *
         0x1.0p-53;
}

// Uniform in [-1, 1).
inline double rng_sym(uint64_t key, uint64_t counter) {
  return 2.0 * rng_u01(key, counter) - 1.0;
}

// Complex number uniform in the closed unit disc (polar map, 2 counters).
inline std::complex<double> rng_unit_disc(uint64_t key, uint64_t counter) {
  double r = std::sqrt(rng_u01(key, 2 * counter));
  double th = 6.283185307179586476925286766559 * rng_u01(key, 2 * counter + 1);
  return {r * std::cos(th), r * std::sin(th)};
}

// Standard normal (Box-Muller, 2 counters).
inline double rng_normal(uint64_t key, uint64_t counter) {
  double u1 = rng_u01(key, 2 * counter);
  double u2 = rng_u01(key, 2 * counter + 1);
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace cone

#endif  // CONE_RNG_HPP_
