// Counts an equation across a ladder of box sizes, fits the growth exponent
// of pi(B_N) on a log-log scale and assigns the asymptotic-density case:
//   1  pi eventually constant (or identically zero),
//   2  pi grows like N^s with s < k,
//   3  s = k, so the density tends to a positive limit.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dio/count.hpp"

namespace dio {

struct GrowthScan {
    std::vector<std::pair<long long, Int>> samples;  // (N, pi), N strictly increasing
    std::optional<double> fitted_exponent;           // s, when some pi > 0
    std::optional<double> fit_log_constant;          // ln C
    double r_squared = 1.0;
    int density_case = 1;
    std::optional<double> limit_estimate;  // a, iff case 3
    bool partial = false;                  // some count timed out
};

struct GrowthOptions {
    CountOptions count;
    // Case 1 is declared when pi is constant over the last ceil(m/2) samples;
    // case 3 when |s - k| < case3_tolerance.
    double case3_tolerance = 0.1;
};

// Runs count_solutions per ladder entry. The ladder must be strictly
// increasing with at least 3 entries.
GrowthScan growth_scan(const Equation& eq, const std::vector<long long>& ladder, int k,
                       const GrowthOptions& options = {});

// Same scan driven by an arbitrary counting function (closed forms and
// test oracles plug in here).
GrowthScan growth_scan_with(const std::function<Int(long long)>& count,
                            const std::vector<long long>& ladder, int k,
                            const GrowthOptions& options = {});

// Power-law shapes pi ~ C*N^s and density ~ C*N^(s-k) from a scan in case 2
// or 3. Throws NoAsymptoteError for case 1.
struct PowerLawFit {
    double constant = 0;         // C
    double count_exponent = 0;   // s
    double density_exponent = 0; // s - k
    double r_squared = 1.0;
    bool clean_power_law = false;  // r^2 above the cleanliness threshold
    std::string count_form;        // "C*N^s" rendered
    std::string density_form;
};

PowerLawFit fit_asymptotic(const GrowthScan& scan, int k);

}  // namespace dio
