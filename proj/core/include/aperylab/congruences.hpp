#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aperylab/context.hpp"
#include "aperylab/mhs.hpp"

namespace aperylab {

enum class Engine { Exact, Padic, Both };

std::string engine_name(Engine e);
Engine parse_engine(const std::string& name);  // throws std::invalid_argument

enum class StatementStatus { Proven, Draft };

inline std::string status_name(StatementStatus s) {
    return s == StatementStatus::Proven ? "proven" : "draft";
}

/*
 * One registry entry: a congruence lhs ≡ rhs (mod p^exponent) with both sides
 * evaluated through a field context. The verdict model: the congruence holds
 * at p iff val_p(lhs - rhs) >= exponent, with both sides p-integral after
 * their displayed divisions by powers of p. division_depth is the deepest
 * such division; the p-adic engine works at absolute precision
 * exponent + division_depth + 2 (two guard digits against benign cancellation).
 */
struct CongruenceStatement {
    std::string family;       // registry id, e.g. "lit_double"
    std::string params;       // "r=1;s=2" or "" for unparametrized statements
    std::string description;  // what the congruence asserts
    StatementStatus status = StatementStatus::Proven;
    int exponent = 1;          // e: required valuation of lhs - rhs
    int division_depth = 0;    // d: deepest division by a power of p
    std::uint64_t requires_p_above = 5;  // applicability: p > this

    std::function<BigRational(const ExactContext&, std::uint64_t)> lhs_exact, rhs_exact;
    std::function<PadicApprox(const PadicContext&, std::uint64_t)> lhs_padic, rhs_padic;

    // Registry-wide floor p > 3 on top of each statement's stated bound.
    bool applicable(std::uint64_t p) const { return p > requires_p_above && p > 3; }
    long long working_precision() const { return exponent + division_depth + 2; }
    std::string instance_label() const {
        return params.empty() ? family : family + "[" + params + "]";
    }
};

// The deterministic, complete statement list.
const std::vector<CongruenceStatement>& registry();

// Distinct family ids in registry order.
std::vector<std::string> registry_families();
bool registry_has_family(const std::string& family);

// Achieved valuation of lhs - rhs: an exact integer, a lower bound coming
// from a zero-at-precision difference, or infinite for an exactly-zero
// difference (exact engine only).
struct AchievedValuation {
    enum class Kind { Exact, AtLeast, Infinite } kind = Kind::Exact;
    long long value = 0;

    bool at_least(long long e) const { return kind == Kind::Infinite || value >= e; }
    std::string to_string() const;
};

enum class Outcome { Pass, Fail, NotApplicable, Error };

struct CongruenceResult {
    std::string family;
    std::string params;
    std::uint64_t prime = 0;
    int required_exponent = 0;
    StatementStatus status = StatementStatus::Proven;
    Outcome outcome = Outcome::NotApplicable;
    AchievedValuation achieved;
    std::string residue_lhs;  // decimal residue mod p^e
    std::string residue_rhs;
    std::string engine;  // "exact" | "padic" | "both"
    std::string error;   // set when outcome == Error
    long long micros = 0;
};

// Evaluate one statement at one prime with the chosen engine. Applicability
// failures yield Outcome::NotApplicable; engine exceptions are captured as
// Outcome::Error. In Both mode the engines must agree on verdict and residues
// or the cell becomes an error.
CongruenceResult evaluate_statement(const CongruenceStatement& stmt, std::uint64_t p,
                                    Engine engine);

struct SweepOptions {
    Engine engine = Engine::Both;
    std::uint64_t prime_lo = 7;
    std::uint64_t prime_hi = 199;
    int workers = 1;
};

struct SweepSummaryEntry {
    long long pass = 0;
    long long fail = 0;  // includes error cells
    long long na = 0;
};

struct SweepResult {
    std::vector<CongruenceResult> rows;  // applicable cells, ordered by (family, params, prime)
    std::vector<std::pair<std::string, SweepSummaryEntry>> summary;  // by family, sorted
};

// Evaluate every applicable (statement instance, prime) cell over the range.
// Output order is deterministic and independent of the worker count.
SweepResult verify_range(const std::vector<const CongruenceStatement*>& selection,
                         const SweepOptions& options);

// Instances of the named families, in registry order.
std::vector<const CongruenceStatement*> select_statements(const std::vector<std::string>& families);
std::vector<const CongruenceStatement*> select_by_status(StatementStatus status);
std::vector<const CongruenceStatement*> select_all();

struct SharpnessPoint {
    std::string params;
    std::uint64_t prime = 0;
    AchievedValuation achieved;
};

// Exact-engine valuation scan of lhs - rhs for every instance of a family; a
// congruence that verifies with huge slack at every prime signals an
// evaluator bug, so sharp primes are worth knowing.
std::vector<SharpnessPoint> sharpness_scan(const std::string& family, std::uint64_t prime_lo,
                                           std::uint64_t prime_hi);

}  // namespace aperylab
