#include "afflow/grid.hpp"

#include <cmath>
#include <map>
#include <memory>

namespace afflow {

namespace {

struct GridTables {
  std::vector<double> angles;
  std::vector<double> cosines;
  std::vector<double> sines;
};

const GridTables& tables_for(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<GridTables>> cache;
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<GridTables>();
    t->angles.resize(n);
    t->cosines.resize(n);
    t->sines.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      t->angles[j] = theta;
      t->cosines[j] = std::cos(theta);
      t->sines[j] = std::sin(theta);
    }
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace

bool valid_grid_size(std::size_t n) noexcept {
  return n >= kMinGridSize && (n & (n - 1)) == 0;
}

std::span<const double> grid_angles(std::size_t n) { return tables_for(n).angles; }
std::span<const double> grid_cos(std::size_t n) { return tables_for(n).cosines; }
std::span<const double> grid_sin(std::size_t n) { return tables_for(n).sines; }

double periodic_integral(std::span<const double> f) {
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum * kTwoPi / static_cast<double>(f.size());
}

}  // namespace afflow
