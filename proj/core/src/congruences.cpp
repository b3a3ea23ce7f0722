#include "aperylab/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "aperylab/errors.hpp"
#include "aperylab/primes.hpp"

namespace aperylab {

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Exact: return "exact";
        case Engine::Padic: return "padic";
        case Engine::Both: return "both";
    }
    return {};
}

Engine parse_engine(const std::string& name) {
    if (name == "exact") return Engine::Exact;
    if (name == "padic") return Engine::Padic;
    if (name == "both") return Engine::Both;
    throw std::invalid_argument("unknown engine: " + name);
}

std::string AchievedValuation::to_string() const {
    return kind == Kind::Exact ? std::to_string(value) : "ge_precision";
}

namespace {

struct EngineVerdict {
    bool pass = false;
    AchievedValuation achieved;
    mpz_class residue_lhs;
    mpz_class residue_rhs;
};

EngineVerdict run_exact(const CongruenceStatement& stmt, std::uint64_t p) {
    ExactContext ctx;
    const BigRational lhs = stmt.lhs_exact(ctx, p);
    const BigRational rhs = stmt.rhs_exact(ctx, p);
    const BigRational diff = lhs - rhs;
    EngineVerdict v;
    const Valuation val = padic_valuation(diff, p);
    if (val.is_infinite) {
        v.achieved = {AchievedValuation::Kind::Infinite, 0};
        v.pass = true;
    } else {
        v.achieved = {AchievedValuation::Kind::Exact, val.v};
        v.pass = val.v >= stmt.exponent;
    }
    v.residue_lhs = residue_mod(lhs, p, stmt.exponent);
    v.residue_rhs = residue_mod(rhs, p, stmt.exponent);
    return v;
}

EngineVerdict run_padic(const CongruenceStatement& stmt, std::uint64_t p) {
    PadicContext ctx(p, stmt.working_precision());
    const PadicApprox lhs = stmt.lhs_padic(ctx, p);
    const PadicApprox rhs = stmt.rhs_padic(ctx, p);
    const PadicApprox diff = lhs - rhs;
    EngineVerdict v;
    if (diff.is_exact_zero()) {
        v.achieved = {AchievedValuation::Kind::Infinite, 0};
        v.pass = true;
    } else if (diff.is_zero()) {
        const long long bound = diff.abs_precision();
        if (bound < stmt.exponent) throw PrecisionExhausted(bound, stmt.exponent);
        v.achieved = {AchievedValuation::Kind::AtLeast, bound};
        v.pass = true;
    } else {
        // A non-zero truncated value has its valuation known exactly.
        v.achieved = {AchievedValuation::Kind::Exact, diff.valuation()};
        v.pass = diff.valuation() >= stmt.exponent;
    }
    v.residue_lhs = lhs.residue(stmt.exponent);
    v.residue_rhs = rhs.residue(stmt.exponent);
    return v;
}

}  // namespace

CongruenceResult evaluate_statement(const CongruenceStatement& stmt, std::uint64_t p,
                                    Engine engine) {
    CongruenceResult r;
    r.family = stmt.family;
    r.params = stmt.params;
    r.prime = p;
    r.required_exponent = stmt.exponent;
    r.status = stmt.status;
    r.engine = engine_name(engine);
    if (!stmt.applicable(p)) {
        r.outcome = Outcome::NotApplicable;
        return r;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
        EngineVerdict verdict;
        if (engine == Engine::Exact) {
            verdict = run_exact(stmt, p);
        } else if (engine == Engine::Padic) {
            verdict = run_padic(stmt, p);
        } else {
            const EngineVerdict ex = run_exact(stmt, p);
            const EngineVerdict pa = run_padic(stmt, p);
            if (ex.pass != pa.pass || ex.residue_lhs != pa.residue_lhs ||
                ex.residue_rhs != pa.residue_rhs) {
                r.outcome = Outcome::Error;
                r.error = "engine disagreement: exact(pass=" + std::to_string(ex.pass) +
                          ", lhs=" + ex.residue_lhs.get_str() + ", rhs=" + ex.residue_rhs.get_str() +
                          ") vs padic(pass=" + std::to_string(pa.pass) +
                          ", lhs=" + pa.residue_lhs.get_str() + ", rhs=" + pa.residue_rhs.get_str() +
                          ")";
                return r;
            }
            verdict = ex;  // exact achieved valuation is the sharper record
        }
        r.outcome = verdict.pass ? Outcome::Pass : Outcome::Fail;
        r.achieved = verdict.achieved;
        r.residue_lhs = verdict.residue_lhs.get_str();
        r.residue_rhs = verdict.residue_rhs.get_str();
    } catch (const std::exception& ex) {
        r.outcome = Outcome::Error;
        r.error = ex.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return r;
}

std::vector<const CongruenceStatement*> select_statements(
    const std::vector<std::string>& families) {
    std::set<std::string> wanted(families.begin(), families.end());
    for (const auto& f : wanted)
        if (!registry_has_family(f)) throw std::invalid_argument("unknown statement id: " + f);
    std::vector<const CongruenceStatement*> out;
    for (const auto& s : registry())
        if (wanted.count(s.family)) out.push_back(&s);
    return out;
}

std::vector<const CongruenceStatement*> select_by_status(StatementStatus status) {
    std::vector<const CongruenceStatement*> out;
    for (const auto& s : registry())
        if (s.status == status) out.push_back(&s);
    return out;
}

std::vector<const CongruenceStatement*> select_all() {
    std::vector<const CongruenceStatement*> out;
    for (const auto& s : registry()) out.push_back(&s);
    return out;
}

SweepResult verify_range(const std::vector<const CongruenceStatement*>& selection,
                         const SweepOptions& options) {
    struct Cell {
        const CongruenceStatement* stmt;
        std::uint64_t prime;
    };
    const auto primes = primes_in_range(options.prime_lo, options.prime_hi);

    std::map<std::string, SweepSummaryEntry> summary;
    std::vector<Cell> cells;
    for (const CongruenceStatement* stmt : selection) {
        auto& entry = summary[stmt->family];
        for (std::uint64_t p : primes) {
            if (stmt->applicable(p))
                cells.push_back({stmt, p});
            else
                ++entry.na;
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return std::tie(a.stmt->family, a.stmt->params, a.prime) <
               std::tie(b.stmt->family, b.stmt->params, b.prime);
    });

    std::vector<CongruenceResult> rows(cells.size());
    const int workers = std::max(1, options.workers);
    if (workers == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            rows[i] = evaluate_statement(*cells[i].stmt, cells[i].prime, options.engine);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                rows[i] = evaluate_statement(*cells[i].stmt, cells[i].prime, options.engine);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& row : rows) {
        auto& entry = summary[row.family];
        if (row.outcome == Outcome::Pass)
            ++entry.pass;
        else
            ++entry.fail;
    }

    SweepResult result;
    result.rows = std::move(rows);
    result.summary.assign(summary.begin(), summary.end());
    return result;
}

std::vector<SharpnessPoint> sharpness_scan(const std::string& family, std::uint64_t prime_lo,
                                           std::uint64_t prime_hi) {
    if (!registry_has_family(family))
        throw std::invalid_argument("unknown statement id: " + family);
    std::vector<SharpnessPoint> out;
    ExactContext ctx;
    for (const auto& stmt : registry()) {
        if (stmt.family != family) continue;
        for (std::uint64_t p : primes_in_range(prime_lo, prime_hi)) {
            if (!stmt.applicable(p)) continue;
            const BigRational diff = stmt.lhs_exact(ctx, p) - stmt.rhs_exact(ctx, p);
            const Valuation v = padic_valuation(diff, p);
            SharpnessPoint pt;
            pt.params = stmt.params;
            pt.prime = p;
            pt.achieved = v.is_infinite
                              ? AchievedValuation{AchievedValuation::Kind::Infinite, 0}
                              : AchievedValuation{AchievedValuation::Kind::Exact, v.v};
            out.push_back(std::move(pt));
        }
    }
    return out;
}

}  // namespace aperylab
