#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aperylab/congruences.hpp"
#include "aperylab/report.hpp"

namespace aperylab::cli {

// Exit codes: 0 = all required checks pass, 1 = at least one required
// failure, 2 = usage/configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct VerifyConfig {
    std::string statements = "proven";  // all | proven | draft | comma list of ids
    std::string primes = "7..199";      // "A..B", A >= 3
    std::string engine = "both";        // exact | padic | both
    int jobs = 1;
    std::string format = "text";  // text | json | csv
    std::string output = "-";
    bool strict = false;
};

// Which VerifyConfig fields were set explicitly on the command line; those
// win over config-file values.
struct VerifyFlagsGiven {
    bool statements = false, primes = false, engine = false, jobs = false, format = false,
         output = false, strict = false;
};

// Applies a line-oriented key=value config file ('#' comments allowed) to the
// fields not pinned by command-line flags. Returns false with a diagnostic
// naming the offending line on malformed input or unknown keys.
bool apply_verify_config_file(const std::string& path, const VerifyFlagsGiven& given,
                              VerifyConfig& config, std::string& error);

// Parses "A..B"; returns false (with a diagnostic) on malformed input or A < 3.
bool parse_prime_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi,
                       std::string& error);

// Resolves a selection string to registry instances; false + diagnostic on
// unknown ids.
bool resolve_selection(const std::string& statements,
                       std::vector<const CongruenceStatement*>& out, std::string& error);

// Runs the sweep described by the config and emits the report.
int run_verify(const VerifyConfig& config);

struct IdentitiesConfig {
    std::string family = "all";  // odd | even | ccc | invbinom | all
    int max_n = 60;
    std::vector<int> r_values;  // optional override for odd/even families
};

int run_identities(const IdentitiesConfig& config);

struct SharpnessConfig {
    std::string statement;
    std::string primes = "7..199";
};

int run_sharpness(const SharpnessConfig& config);

struct BernoulliConfig {
    int index = 0;
    std::uint64_t mod = 0;  // 0 = print the exact value
};

int run_bernoulli(const BernoulliConfig& config);

struct LimitsConfig {
    int terms = 60;
};

int run_limits(const LimitsConfig& config);

}  // namespace aperylab::cli
