#pragma once

#include <string>
#include <vector>

#include "osa/conditions.hpp"

namespace osa {

// (p01, p11) region scan of a sufficient condition at fixed (N, k, m).
struct SweepConfig {
    enum class RegimeSel { Positive, Negative, Both };

    int n = 2;
    int k = 1;
    int m = 1;
    RegimeSel regime = RegimeSel::Both;
    double grid_step = 0.02;   // 0 < step <= 0.25; grid = {0, step, ..., 1}
    bool finite = false;       // finite horizon needs beta; infinite ignores it
    double beta = 0.0;
};

struct SweepRow {
    double p01 = 0.0;
    double p11 = 0.0;
    double r_upper = 0.0;
    double r_lower = 0.0;
    double lhs = 0.0;
    double threshold = 0.0;
    bool satisfied = false;
    bool unconditional = false;
};

// One row per grid cell in the selected half-triangle(s), in deterministic
// row-major (p01 outer, p11 inner) order.  Cells are evaluated in parallel;
// OSA_THREADS caps the worker count.
std::vector<SweepRow> region_sweep(const SweepConfig& config);

// CSV with the fixed header p01,p11,r_upper,r_lower,lhs,threshold,satisfied,
// unconditional; floats printed with 10 significant digits.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_csv(const std::string& csv);

// Self-contained static SVG scatter of the swept cells (axes, the p11 = p01
// diagonal, one marker class per verdict).  Byte-deterministic.
std::string sweep_to_svg(const std::vector<SweepRow>& rows, const SweepConfig& config);

// The hard-coded worked example where the myopic policy is strictly beaten:
// N=5, k=2, m=1, beta=0.8, T=5, p11=0.9, p01=0.1, beliefs
// (0.99, 0.95, 0.9, 0.9, 0.9).  Sensing {1,3} first beats sensing {1,2}.
struct CounterexampleReport {
    double w_myopic = 0.0;       // value of the myopic policy
    double w_deviation = 0.0;    // sense {1,3} at t=1, then myopic
    double gap = 0.0;            // w_deviation - w_myopic (> 0 here)
    bool myopic_optimal = true;
    std::vector<Action> optimal_first_actions;
};

CounterexampleReport run_counterexample();

// Number of worker threads: OSA_THREADS when set (>= 1), else the hardware
// concurrency, else 1.
int thread_budget();

}  // namespace osa
