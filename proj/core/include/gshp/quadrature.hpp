#pragma once

#include <functional>

namespace gshp {

/// Adaptive Simpson integration of f over [a, b].
///
/// The error control is an absolute tolerance on the integral value; the
/// recursion is a fixed deterministic scheme, so results are bit-identical
/// across runs and thread counts.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

}  // namespace gshp
