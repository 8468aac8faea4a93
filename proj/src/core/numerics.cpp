#include "core/numerics.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tailfence {

std::optional<std::pair<double, double>> bracket_scan(
    const std::function<double(double)>& f, double lo, double hi, int points) {
    if (!(lo < hi) || points < 2)
        throw domain_error("bracket_scan: need lo < hi and points >= 2");
    if (!(lo > 0.0))
        throw domain_error("bracket_scan: log spacing needs lo > 0");
    const double ratio = hi / lo;
    double prev_x = 0.0, prev_f = 0.0;
    bool have_prev = false;
    for (int i = 0; i < points; ++i) {
        const double x = lo * std::pow(ratio, double(i) / double(points - 1));
        const double fx = f(x);
        if (!std::isfinite(fx)) continue; // skip, do not reset the bracket side
        if (have_prev && prev_f != 0.0 && ((prev_f < 0.0) != (fx < 0.0)))
            return std::make_pair(prev_x, x);
        prev_x = x;
        prev_f = fx;
        have_prev = true;
    }
    return std::nullopt;
}

RootResult bisect(const std::function<double(double)>& f,
                  std::pair<double, double> bracket, double tol) {
    double lo = bracket.first, hi = bracket.second;
    if (!(lo < hi)) throw domain_error("bisect: invalid bracket");
    double flo = f(lo);
    const double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo < 0.0) == (fhi < 0.0))
        throw domain_error("bisect: bracket endpoints do not straddle a sign change");
    RootResult res;
    res.bracket = bracket;
    double mid = 0.5 * (lo + hi), fmid = flo;
    while (hi - lo > tol * std::max(1.0, std::fabs(mid))) {
        mid = 0.5 * (lo + hi);
        fmid = f(mid);
        ++res.iterations;
        if (fmid == 0.0) { lo = hi = mid; break; }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    res.x = 0.5 * (lo + hi);
    res.f_x = (res.x == mid) ? fmid : f(res.x);
    return res;
}

SimplexResult nelder_mead(const std::function<long double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step, double tol, int cap) {
    const size_t dim = x0.size();
    if (dim == 0) throw domain_error("nelder_mead: empty start point");

    std::vector<std::vector<double>> v(dim + 1, x0);
    for (size_t i = 0; i < dim; ++i) v[i + 1][i] += step;
    std::vector<long double> fv(dim + 1);
    for (size_t i = 0; i <= dim; ++i) fv[i] = f(v[i]);

    auto diameter = [&]() {
        double d = 0.0;
        for (size_t i = 1; i <= dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                d = std::max(d, std::fabs(v[i][j] - v[0][j]));
        return d;
    };

    SimplexResult res;
    int it = 0;
    for (; it < cap; ++it) {
        // order vertices ascending by objective;  v[0] best, v[dim] worst
        std::vector<size_t> idx(dim + 1);
        for (size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> vs(dim + 1);
        std::vector<long double> fs(dim + 1);
        for (size_t i = 0; i <= dim; ++i) { vs[i] = v[idx[i]]; fs[i] = fv[idx[i]]; }
        v = std::move(vs);
        fv = std::move(fs);

        if (diameter() <= tol) { res.converged = true; break; }

        std::vector<double> cen(dim, 0.0);
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) cen[j] += v[i][j];
        }
        for (size_t j = 0; j < dim; ++j) cen[j] /= double(dim);
        auto at = [&](double t) {
            std::vector<double> p(dim);
            for (size_t j = 0; j < dim; ++j) p[j] = cen[j] + t * (cen[j] - v[dim][j]);
            return p;
        };

        const auto xr = at(1.0);
        const long double fr = f(xr);
        if (fr < fv[0]) {
            const auto xe = at(2.0);
            const long double fe = f(xe);
            if (fe < fr) { v[dim] = xe; fv[dim] = fe; }
            else         { v[dim] = xr; fv[dim] = fr; }
        } else if (fr < fv[dim - 1]) {
            v[dim] = xr;
            fv[dim] = fr;
        } else {
            const bool outside = fr < fv[dim];
            const auto xc = at(outside ? 0.5 : -0.5);
            const long double fc = f(xc);
            if (fc < (outside ? fr : fv[dim])) {
                v[dim] = xc;
                fv[dim] = fc;
            } else {
                for (size_t i = 1; i <= dim; ++i) {
                    for (size_t j = 0; j < dim; ++j)
                        v[i][j] = v[0][j] + 0.5 * (v[i][j] - v[0][j]);
                    fv[i] = f(v[i]);
                }
            }
        }
    }

    size_t best = 0;
    for (size_t i = 1; i <= dim; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = v[best];
    res.f_x = double(fv[best]);
    res.iterations = it;
    res.diameter = diameter();
    if (it >= cap) res.converged = false;
    return res;
}

} // namespace tailfence
