#include "dio/growth.hpp"

#include <cmath>
#include <cstdio>

#include "dio/errors.hpp"

namespace dio {

namespace {

double to_double(const Int& v) { return v.convert_to<double>(); }

void fit_loglog(GrowthScan& scan) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [N, pi] : scan.samples)
        if (pi > 0) pts.emplace_back(std::log(static_cast<double>(N)), std::log(to_double(pi)));
    if (pts.size() < 2) return;

    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double xbar = sx / pts.size(), ybar = sy / pts.size();
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - xbar) * (x - xbar);
        sxy += (x - xbar) * (y - ybar);
        syy += (y - ybar) * (y - ybar);
    }
    if (sxx == 0) return;
    const double slope = sxy / sxx;
    scan.fitted_exponent = slope;
    scan.fit_log_constant = ybar - slope * xbar;
    if (syy == 0) {
        scan.r_squared = 1.0;
    } else {
        double ss_res = 0;
        for (const auto& [x, y] : pts) {
            double r = y - (*scan.fit_log_constant + slope * x);
            ss_res += r * r;
        }
        scan.r_squared = 1.0 - ss_res / syy;
    }
}

}  // namespace

GrowthScan growth_scan_with(const std::function<Int(long long)>& count,
                            const std::vector<long long>& ladder, int k,
                            const GrowthOptions& options) {
    if (ladder.size() < 3) throw Error("growth_scan: ladder needs at least 3 sizes");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (ladder[i] <= ladder[i - 1])
            throw Error("growth_scan: ladder must be strictly increasing");

    GrowthScan scan;
    for (long long N : ladder) scan.samples.emplace_back(N, count(N));

    bool all_zero = true;
    for (const auto& [N, pi] : scan.samples) all_zero = all_zero && pi == 0;
    if (all_zero) {
        scan.density_case = 1;  // never any solutions; exponent undefined
        return scan;
    }

    // Constant over the top half of the ladder: the count has stopped moving.
    const std::size_t m = scan.samples.size();
    const std::size_t top = m - (m + 1) / 2;
    bool constant_tail = true;
    for (std::size_t i = top + 1; i < m; ++i)
        constant_tail = constant_tail && scan.samples[i].second == scan.samples[top].second;

    fit_loglog(scan);
    if (constant_tail) {
        scan.density_case = 1;
        return scan;
    }
    if (scan.fitted_exponent && std::abs(*scan.fitted_exponent - k) < options.case3_tolerance) {
        scan.density_case = 3;
        const auto& [N, pi] = scan.samples.back();
        scan.limit_estimate = to_double(pi) / std::pow(static_cast<double>(N), k);
    } else {
        scan.density_case = 2;
    }
    return scan;
}

GrowthScan growth_scan(const Equation& eq, const std::vector<long long>& ladder, int k,
                       const GrowthOptions& options) {
    bool partial = false;
    auto counter = [&](long long N) {
        BoxDomain box{k, N};
        CountOptions copts = options.count;
        copts.collect_solutions = false;
        CountReport r = count_solutions(eq, box, copts);
        partial = partial || r.partial;
        return r.pi;
    };
    GrowthScan scan = growth_scan_with(counter, ladder, k, options);
    scan.partial = partial;
    return scan;
}

PowerLawFit fit_asymptotic(const GrowthScan& scan, int k) {
    if (scan.density_case == 1 || !scan.fitted_exponent)
        throw NoAsymptoteError("fit_asymptotic: the count is eventually constant");
    PowerLawFit fit;
    fit.count_exponent = *scan.fitted_exponent;
    fit.density_exponent = fit.count_exponent - k;
    fit.constant = std::exp(*scan.fit_log_constant);
    fit.r_squared = scan.r_squared;
    fit.clean_power_law = scan.r_squared >= 0.9999;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.4g*N^%.4g", fit.constant, fit.count_exponent);
    fit.count_form = buf;
    std::snprintf(buf, sizeof buf, "%.4g*N^%.4g", fit.constant, fit.density_exponent);
    fit.density_form = buf;
    return fit;
}

}  // namespace dio
