#pragma once

// Derivative-free Nelder–Mead simplex minimizer.

#include <cstddef>
#include <functional>
#include <vector>

namespace geoup {

struct NelderMeadSettings {
    std::size_t max_evaluations = 500;
    double x_tolerance = 1e-10;  // absolute, on simplex vertex spread
    double f_tolerance = 1e-14;  // absolute, on simplex value spread
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Minimizes `f` starting from `x0` with an axis-aligned initial simplex of
/// edge `step[i]`. The returned value is never worse than f(x0).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const std::vector<double>& step,
                             const NelderMeadSettings& settings = {});

}  // namespace geoup
