#pragma once

// Verification sweeps: run the per-module checks across all orders of the
// requested sizes with deterministically sampled coefficients, count the
// global structures, and assemble a reproducible JSON report. Reports carry
// deterministic work counters only, so identical (config, version) runs are
// byte-identical.

#include "sgx/fusion.hpp"
#include "sgx/orders.hpp"
#include "sgx/polytope.hpp"
#include "sgx/tableau.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgx {

inline constexpr const char* kToolVersion = "0.1.0";

// Cardinality of the union of symbolic vertex-function sets over all n!
// orders. Guarded to n <= 6.
long long count_functions(int n);
// Number of distinct symbolic function sets over all n! orders (two orders
// may induce the same graph). Guarded to n <= 6.
long long count_graphs(int n);

// Check tokens in canonical report order.
extern const std::vector<std::string> kAllChecks;
bool is_known_check(const std::string& token);

struct SweepConfig {
    std::vector<int> nValues;
    int trialsPerOrder = 1;
    std::uint64_t seed = 0;
    std::vector<Profile> profiles{Profile::generic};
    std::vector<std::string> checks;  // subset of kAllChecks; empty skips everything
    long long maxSteps = -1;          // forwarded to deconstruct / rebuild_heights
    // Restrict the sweep to a single order (and optionally pinned
    // coefficients, which require the order and replace sampling).
    std::optional<std::vector<int>> fixedOrder;
    std::optional<std::vector<Rational>> fixedCoeffs;
};

struct CheckOutcome {
    std::string check;
    std::string status = "skipped";  // "pass" | "fail" | "skipped"
    long long unitsRun = 0;
    long long failures = 0;
    nlohmann::json notes = nlohmann::json::object();  // check-specific counters
    nlohmann::json counterexamples = nlohmann::json::array();  // capped; full inputs included
};

struct VerificationReport {
    nlohmann::json configEcho;
    std::vector<CheckOutcome> outcomes;  // one per token, canonical order
    bool allPassed = true;
};

// Memoizes exact vertex enumerations keyed by (order, coefficients, variant).
// Sharing one cache across several sweeps avoids recomputing the expensive
// enumerations for identical inputs.
class VertexCache {
  public:
    const std::vector<std::vector<Rational>>& get(const CoeffOrder& order,
                                                  const NumericCoeffs& coeffs, Variant variant);
    std::size_t size() const { return cache_.size(); }

  private:
    std::map<std::string, std::vector<std::vector<Rational>>> cache_;
};

// Runs the requested checks over every (n, order, profile, trial) unit.
// Deterministic given the config; throws std::invalid_argument on a bad
// config. An external cache may be supplied to share enumerations.
VerificationReport run_sweep(const SweepConfig& cfg, VertexCache* cache = nullptr);

std::string report_to_json(const VerificationReport& rep);

}  // namespace sgx
