#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace geom {

// Randomized property suite over the analytic model: every axiom or
// theorem the kernel claims, as a pass/fail check on one random
// rational configuration. The CLI axiom runner and the acceptance
// suite both draw from this registry.
struct Property {
    std::string id;
    std::string group;  // order | congruence | transforms | vectors | similarity
    std::function<bool(std::mt19937_64&)> once;
};

struct PropertyResult {
    std::string id;
    std::string group;
    int cases = 0;
    int failures = 0;
    bool pass() const { return failures == 0; }
};

const std::vector<Property>& property_registry();

PropertyResult run_property(const Property& p, int cases, std::uint64_t seed);

// runs every registered property (optionally one group) with a
// deterministic per-property seed derived from `seed`
std::vector<PropertyResult> run_axiom_suite(int cases, std::uint64_t seed,
                                            const std::string& group = "");

}  // namespace geom
