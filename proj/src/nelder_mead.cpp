#include "gqaoa/nelder_mead.hpp"

#include "gqaoa/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gqaoa {

namespace {

double diameter(const std::vector<std::vector<double>> &simplex) {
    double worst = 0.0;
    for (std::size_t a = 0; a < simplex.size(); ++a) {
        for (std::size_t b = a + 1; b < simplex.size(); ++b) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < simplex[a].size(); ++k) {
                const double d = simplex[a][k] - simplex[b][k];
                d2 += d * d;
            }
            worst = std::max(worst, d2);
        }
    }
    return std::sqrt(worst);
}

} // namespace

NelderMeadResult
nelder_mead(const std::function<double(std::span<const double>)> &f,
            std::vector<double> start, const NelderMeadOptions &options) {
    const std::size_t dim = start.size();
    require(dim >= 1, "Nelder-Mead needs at least one parameter");

    auto eval = [&](const std::vector<double> &x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            fail(ErrorKind::Domain, "objective returned a non-finite value");
        }
        return v;
    };

    std::vector<std::vector<double>> simplex(dim + 1, start);
    for (std::size_t k = 0; k < dim; ++k) {
        simplex[k + 1][k] += options.initial_step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
        values[k] = eval(simplex[k]);
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim);
    auto along = [&](double t, const std::vector<double> &worst) {
        std::vector<double> p(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
        return p;
    };

    NelderMeadResult result;
    for (;;) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // stable: equal values keep the lower vertex index first
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return values[a] < values[b];
                         });
        {
            std::vector<std::vector<double>> s2(dim + 1);
            std::vector<double> v2(dim + 1);
            for (std::size_t k = 0; k <= dim; ++k) {
                s2[k] = std::move(simplex[order[k]]);
                v2[k] = values[order[k]];
            }
            simplex = std::move(s2);
            values = std::move(v2);
        }
        if (diameter(simplex) < options.diameter_tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= options.max_iterations) {
            break;
        }
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[v][k] / static_cast<double>(dim);
            }
        }
        const auto &worst = simplex[dim];
        auto reflected = along(-1.0, worst);
        const double fr = eval(reflected);
        if (fr < values[0]) {
            auto expanded = along(-2.0, worst);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[dim] = std::move(expanded);
                values[dim] = fe;
            } else {
                simplex[dim] = std::move(reflected);
                values[dim] = fr;
            }
            continue;
        }
        if (fr < values[dim - 1]) {
            simplex[dim] = std::move(reflected);
            values[dim] = fr;
            continue;
        }
        const bool outside = fr < values[dim];
        auto contracted = along(outside ? -0.5 : 0.5, worst);
        const double fc = eval(contracted);
        if (fc < (outside ? fr : values[dim])) {
            simplex[dim] = std::move(contracted);
            values[dim] = fc;
            continue;
        }
        for (std::size_t v = 1; v <= dim; ++v) {
            for (std::size_t k = 0; k < dim; ++k) {
                simplex[v][k] = simplex[0][k] + 0.5 * (simplex[v][k] - simplex[0][k]);
            }
            values[v] = eval(simplex[v]);
        }
    }
    result.x = simplex[0];
    result.value = values[0];
    return result;
}

} // namespace gqaoa
