#include "cone/geomcache.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "cone/exec.hpp"

namespace cone {

namespace {

struct CacheEntry {
  std::weak_ptr<const Grid> grid;
  std::shared_ptr<GeomArrays> arrays;
};

std::mutex g_mutex;
std::map<const Grid*, CacheEntry> g_registry;

std::shared_ptr<GeomArrays> build(const Grid& grid) {
  auto arrays = std::make_shared<GeomArrays>();
  long n = grid.n();
  size_t total = static_cast<size_t>(n) * n * n * n;
  arrays->det.resize(total);
  arrays->a11.resize(total);
  arrays->a12re.resize(total);
  arrays->a12im.resize(total);
  arrays->a22.resize(total);
  parallel_for(0, n, default_exec(), [&](long i) {
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l) {
          Point p = grid.point(i, j, k, l);
          double a = std::norm(p.v), b = std::norm(p.w);
          double s = 4.0 * a + b;
          double det = 16.0 * a * b + 4.0 * a * a + 4.0 * b * b;
          double a11 = std::sqrt(s);
          Complex a12 = p.v * std::conj(p.w) / a11;
          double a22 = std::sqrt(det / s);
          size_t t = static_cast<size_t>(grid.flat(i, j, k, l));
          arrays->det[t] = static_cast<float>(det);
          arrays->a11[t] = static_cast<float>(a11);
          arrays->a12re[t] = static_cast<float>(a12.real());
          arrays->a12im[t] = static_cast<float>(a12.imag());
          arrays->a22[t] = static_cast<float>(a22);
        }
  });
  return arrays;
}

}  // namespace

std::shared_ptr<const GeomArrays> geom_arrays(const GridPtr& grid) {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_registry.find(grid.get());
    if (it != g_registry.end()) {
      // guard against address reuse after the original grid died
      auto live = it->second.grid.lock();
      if (live.get() == grid.get()) return it->second.arrays;
      g_registry.erase(it);
    }
  }
  auto arrays = build(*grid);
  std::lock_guard<std::mutex> lock(g_mutex);
  for (auto probe = g_registry.begin(); probe != g_registry.end();)
    probe = probe->second.grid.expired() ? g_registry.erase(probe) : std::next(probe);
  g_registry[grid.get()] = CacheEntry{grid, arrays};
  return arrays;
}

}  // namespace cone
