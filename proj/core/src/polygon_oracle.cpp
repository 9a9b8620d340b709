#include "afflow/polygon_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "afflow/grid.hpp"
#include "afflow/spectral.hpp"

namespace afflow {

PolygonAreas polygon_oracle(const ConvexBody& body, std::size_t num_vertices) {
  if (num_vertices < body.grid_size()) {
    throw std::invalid_argument("polygon oracle needs at least grid-size vertices");
  }

  const TrigInterpolant interp(body.support_samples());
  std::vector<double> x(num_vertices), y(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(num_vertices);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const double sv = interp(theta);
    const double sd = interp.derivative(theta);
    // boundary point gamma = s z + s' z_perp
    x[i] = sv * c - sd * sn;
    y[i] = sv * sn + sd * c;
  }

  auto shoelace = [](const std::vector<double>& px, const std::vector<double>& py) {
    double twice = 0.0;
    const std::size_t m = px.size();
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t next = (i + 1) % m;
      twice += px[i] * py[next] - px[next] * py[i];
    }
    return 0.5 * twice;
  };

  // Each edge of the inscribed polygon supplies a vertex of the dual:
  // the edge lies on {p : <nvec, p> = h}, so the dual vertex is nvec/h.
  std::vector<double> dx(num_vertices), dy(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) {
    const std::size_t next = (i + 1) % num_vertices;
    const double ex = x[next] - x[i];
    const double ey = y[next] - y[i];
    const double nx = ey;
    const double ny = -ex;
    const double h = nx * x[i] + ny * y[i];
    if (!(h > 0.0)) {
      throw std::logic_error("polygon edge does not separate the origin");
    }
    dx[i] = nx / h;
    dy[i] = ny / h;
  }

  return {shoelace(x, y), shoelace(dx, dy)};
}

}  // namespace afflow
