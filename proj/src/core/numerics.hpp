#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tailfence {

struct RootResult {
    double x = 0.0;
    double f_x = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket{0.0, 0.0};
};

struct SimplexResult {
    std::vector<double> x;
    double f_x = 0.0;
    int iterations = 0;
    double diameter = 0.0;
    bool converged = false;
};

// Scans `points` log-spaced abscissae on [lo, hi] and returns the first
// consecutive pair with finite objective values of opposite sign.
// Non-finite values are skipped (the pair must be adjacent among finite ones).
std::optional<std::pair<double, double>> bracket_scan(
    const std::function<double(double)>& f, double lo, double hi, int points);

// Bisection on a sign-change bracket.  Terminates when the interval width
// drops to tol*max(1,|x|); returns the midpoint of the final interval.
RootResult bisect(const std::function<double(double)>& f,
                  std::pair<double, double> bracket, double tol);

// Standard Nelder-Mead simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5).  The objective is evaluated in long double so that residuals
// near the double-precision noise floor stay ordered.  Terminates when the
// simplex diameter falls to `tol` or after `cap` iterations.
SimplexResult nelder_mead(const std::function<long double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step, double tol, int cap);

} // namespace tailfence
