#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypermaps {

struct PropertyResult {
    std::string name;
    int runs = 0;
    int failures = 0;
    std::vector<std::string> failing;  // instance descriptors, e.g. "seed=123"

    bool passed() const { return failures == 0; }
};

struct PropertyReport {
    std::vector<PropertyResult> results;  // sorted by property name

    bool all_passed() const;
    int total_runs() const;
    int total_failures() const;
    void record(const std::string& property, bool ok, const std::string& instance);

    /// One line per property: PASS/FAIL, run and failure counts, and for
    /// failures the reproducing instance descriptors.
    std::string to_text() const;
    std::string to_json() const;
};

/// Runs every model property against the built-in example hypermaps and
/// `count` random involution-model instances (n_flags even, at most
/// max_size), `count` random oriented instances (n at most max_size/2), and
/// `count` random [3]-colored graphs for the higher-dimensional recoloring
/// laws. Cell subsets are drawn uniformly from the power set of the cells of
/// a uniformly chosen type. Instance seeds come from an Lcg64 stream on
/// `seed`; a failing instance reproduces from its descriptor alone.
PropertyReport run_property_suite(int count, int max_size, std::uint64_t seed);

}  // namespace hypermaps
