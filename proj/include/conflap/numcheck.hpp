#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conflap/fn_elem.hpp"
#include "conflap/report.hpp"

namespace conflap {

// Sampling configuration for the floating-point shadow of exact identities.
struct SampleConfig {
    int sample_count = 20;
    double tolerance = 1e-8;
    std::uint64_t seed = 42;
    double box_lo = -2.0;  // per-variable sample box
    double box_hi = 2.0;
    double pole_margin = 1e-3;  // minimum |denominator| at accepted samples
    int max_retries = 200;      // redraw budget per sample
};

// Deterministic double stream: mt19937_64 with unit doubles built as
// (x >> 11) * 2^-53, so reports are bit-for-bit reproducible per seed across
// platforms (no distribution-object variance).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}
    double unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 gen_;
};

enum class SampleDomain {
    flat,    // box samples
    sphere,  // box samples normalized to |x| = 1, away from 1 + x_last = 0
};

struct CompareOutcome {
    bool ok = false;
    double max_error = 0.0;
    int samples = 0;
    std::string note;
};

// Evaluates both sides at random pole-free points; pass iff the max
// relative error (absolute below 1e-10 magnitude) stays within tolerance.
CompareOutcome sample_compare_outcome(const FnElem& lhs, const FnElem& rhs,
                                      const SampleConfig& cfg,
                                      SampleDomain domain = SampleDomain::flat);
Report sample_compare(const FnElem& lhs, const FnElem& rhs, const SampleConfig& cfg,
                      SampleDomain domain = SampleDomain::flat);

// One case for an enclosing report; id/description supplied by the caller.
ReportCase shadow_case(std::string id, const FnElem& lhs, const FnElem& rhs,
                       const SampleConfig& cfg, SampleDomain domain = SampleDomain::flat);

// Central difference vs exact derivative at one point. Throws PoleError when
// the stencil hits a denominator smaller than the margin.
Report fd_crosscheck(const FnElem& f, int var, const std::vector<double>& point,
                     double h = 1e-5);

// The random-function finite-difference sweep.
Report fd_suite(const SampleConfig& cfg, int function_count = 100, int points_per_fn = 5);

namespace detail {
// Guarded evaluation: false when a denominator magnitude (or a radical base)
// drops below margin at the point.
bool guarded_eval(const FnElem& f, const std::vector<double>& point, double margin,
                  double* out);
double error_metric(double a, double b);
}  // namespace detail

}  // namespace conflap
