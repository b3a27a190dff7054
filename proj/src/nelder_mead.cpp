#include "geoup/nelder_mead.hpp"

#include "geoup/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geoup {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const std::vector<double>& step,
                             const NelderMeadSettings& settings) {
    const std::size_t dim = x0.size();
    if (dim == 0 || step.size() != dim) throw ValidationError("nelder_mead: dimension mismatch");

    // Standard coefficients: reflection, expansion, contraction, shrink.
    constexpr double kAlpha = 1.0;
    constexpr double kGamma = 2.0;
    constexpr double kRho = 0.5;
    constexpr double kSigma = 0.5;

    std::size_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    values[0] = eval(x0);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += step[i];
        values[i + 1] = eval(simplex[i + 1]);
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    bool converged = false;

    auto affine = [&](std::vector<double>& out, const std::vector<double>& from, double t) {
        // out = centroid + t * (from - centroid)
        for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (from[k] - centroid[k]);
    };

    while (evals < settings.max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i <= dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                spread = std::max(spread, std::abs(simplex[i][k] - simplex[best][k]));
        if (spread <= settings.x_tolerance && values[worst] - values[best] <= settings.f_tolerance) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        affine(trial, simplex[worst], -kAlpha);
        const double fr = eval(trial);
        if (fr < values[best]) {
            affine(trial2, simplex[worst], -kAlpha * kGamma);
            const double fe = eval(trial2);
            if (fe < fr) {
                simplex[worst] = trial2;
                values[worst] = fe;
            } else {
                simplex[worst] = trial;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = trial;
            values[worst] = fr;
            continue;
        }
        // Contraction: outside if the reflected point beats the worst, else inside.
        const bool outside = fr < values[worst];
        affine(trial2, outside ? trial : simplex[worst], kRho);
        const double fc = eval(trial2);
        if (fc < (outside ? fr : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k)
                simplex[i][k] = simplex[best][k] + kSigma * (simplex[i][k] - simplex[best][k]);
            values[i] = eval(simplex[i]);
        }
    }

    const auto it = std::min_element(values.begin(), values.end());
    const std::size_t idx = static_cast<std::size_t>(it - values.begin());
    return {simplex[idx], values[idx], evals, converged};
}

}  // namespace geoup
