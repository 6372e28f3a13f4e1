#pragma once

#include "symm/vector_field.hpp"

namespace symm {

// Advances a point along the integral curve of v by parameter eps, i.e.
// numerically exponentiates the generator.  Dormand-Prince 5(4) with
// adaptive steps, relative tolerance 1e-12.  flow(v, pt, 0) is the exact
// identity.  Throws FlowEscapedDomain on non-finite states or derivatives
// and StepSizeUnderflow when step control collapses.
SpacePoint flow(const VectorField& v, const SpacePoint& pt, double eps);

// Pointwise flow of every stencil point; the template is unchanged.
StencilConfig prolonged_flow(const VectorField& v, const StencilConfig& config, double eps);

}  // namespace symm
