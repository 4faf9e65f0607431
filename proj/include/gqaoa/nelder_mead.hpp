#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gqaoa {

struct NelderMeadOptions {
    double initial_step = 0.5;
    /// Stop once the largest pairwise vertex distance drops below this.
    double diameter_tolerance = 1e-6;
    std::size_t max_iterations = 2000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Downhill simplex minimization (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) from an axis-aligned initial simplex around `start`.
NelderMeadResult
nelder_mead(const std::function<double(std::span<const double>)> &f,
            std::vector<double> start, const NelderMeadOptions &options = {});

} // namespace gqaoa
