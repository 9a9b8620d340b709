#pragma once

#include <cstddef>

#include "afflow/convex_body.hpp"

namespace afflow {

struct PolygonAreas {
  double area;        // shoelace area of the inscribed boundary polygon
  double polar_area;  // shoelace area of its dual polygon
};

/// Cross-check oracle that bypasses the spectral quadratures entirely:
/// samples the boundary gamma = s z + s' z_perp at num_vertices angles,
/// takes the shoelace area, and dualizes (edges of K map to vertices of
/// K*) for the polar area. Converges to area()/polar_area() as
/// num_vertices grows. Requires num_vertices >= grid size.
PolygonAreas polygon_oracle(const ConvexBody& body, std::size_t num_vertices);

}  // namespace afflow
