#pragma once

#include <set>
#include <string>

#include "conflap/sphere.hpp"

namespace conflap {

// Seeded randomized property suites: algebraic laws that must hold on every
// generated instance. One report case per suite, witness = first failure.
Report run_property_suites(std::uint64_t seed, int instances = 200);

struct AllOptions {
    int n_max = 4;
    int k_max = 3;
    std::uint64_t seed = 42;
    bool shadow = true;
    SampleConfig shadow_cfg{};
    int property_instances = 200;
    // empty = run everything; otherwise a subset of
    // {rn, comm, covariance, conformality, yamabe, main, spectrum, properties}
    std::set<std::string> only;
};

// The whole verification battery as one report; deterministic for a fixed
// seed and idempotent.
Report run_all(const AllOptions& opt);

}  // namespace conflap
