#pragma once

#include "afflow/bodies.hpp"
#include "afflow/body_diagnostics.hpp"
#include "afflow/convex_body.hpp"
#include "afflow/errors.hpp"
#include "afflow/flow.hpp"
#include "afflow/functionals.hpp"
#include "afflow/grid.hpp"
#include "afflow/linear_map.hpp"
#include "afflow/polygon_oracle.hpp"
#include "afflow/serialization.hpp"
#include "afflow/spectral.hpp"
#include "afflow/support_function.hpp"
#include "afflow/trajectory_diagnostics.hpp"
