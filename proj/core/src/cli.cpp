#include "aperylab/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aperylab/bernoulli.hpp"
#include "aperylab/identities.hpp"
#include "aperylab/version.hpp"

namespace aperylab::cli {

bool parse_prime_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi,
                       std::string& error) {
    const auto dots = text.find("..");
    bool ok = dots != std::string::npos && dots > 0 && dots + 2 < text.size();
    if (ok) {
        try {
            std::size_t used = 0;
            lo = std::stoull(text.substr(0, dots), &used);
            ok = used == dots;
            std::size_t used2 = 0;
            const std::string hi_part = text.substr(dots + 2);
            hi = std::stoull(hi_part, &used2);
            ok = ok && used2 == hi_part.size();
        } catch (const std::exception&) {
            ok = false;
        }
    }
    if (!ok) {
        error = "malformed prime range: '" + text + "' (expected A..B)";
        return false;
    }
    if (lo < 3) {
        error = "prime range lower bound must be >= 3: '" + text + "'";
        return false;
    }
    if (hi < lo) {
        error = "empty prime range: '" + text + "'";
        return false;
    }
    return true;
}

bool resolve_selection(const std::string& statements,
                       std::vector<const CongruenceStatement*>& out, std::string& error) {
    if (statements == "all") {
        out = select_all();
        return true;
    }
    if (statements == "proven") {
        out = select_by_status(StatementStatus::Proven);
        return true;
    }
    if (statements == "draft") {
        out = select_by_status(StatementStatus::Draft);
        return true;
    }
    std::vector<std::string> names;
    std::stringstream ss(statements);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!registry_has_family(item)) {
            error = "unknown statement id: '" + item + "'";
            return false;
        }
        names.push_back(item);
    }
    if (names.empty()) {
        error = "empty statement selection: '" + statements + "'";
        return false;
    }
    out = select_statements(names);
    return true;
}

bool apply_verify_config_file(const std::string& path, const VerifyFlagsGiven& given,
                              VerifyConfig& config, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file: '" + path + "'";
        return false;
    }
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            error = "config line " + std::to_string(lineno) + " is not key=value: '" +
                    stripped + "'";
            return false;
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "statements") {
            if (!given.statements) config.statements = value;
        } else if (key == "primes") {
            if (!given.primes) config.primes = value;
        } else if (key == "engine") {
            if (!given.engine) config.engine = value;
        } else if (key == "jobs") {
            if (!given.jobs) {
                try {
                    config.jobs = std::stoi(value);
                } catch (const std::exception&) {
                    error = "config line " + std::to_string(lineno) + ": bad jobs value '" +
                            value + "'";
                    return false;
                }
            }
        } else if (key == "format") {
            if (!given.format) config.format = value;
        } else if (key == "output") {
            if (!given.output) config.output = value;
        } else if (key == "strict") {
            if (!given.strict) config.strict = (value == "true" || value == "1" || value == "yes");
        } else {
            error = "config line " + std::to_string(lineno) + ": unknown key '" + key + "'";
            return false;
        }
    }
    return true;
}

int run_verify(const VerifyConfig& config) {
    std::uint64_t lo = 0, hi = 0;
    std::string error;
    if (!parse_prime_range(config.primes, lo, hi, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    std::vector<const CongruenceStatement*> selection;
    if (!resolve_selection(config.statements, selection, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    Engine engine;
    ReportFormat format;
    try {
        engine = parse_engine(config.engine);
        format = parse_report_format(config.format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    if (config.jobs < 1) {
        std::cerr << "error: --jobs must be >= 1\n";
        return kExitUsage;
    }

    SweepOptions options;
    options.engine = engine;
    options.prime_lo = lo;
    options.prime_hi = hi;
    options.workers = config.jobs;

    Report report;
    report.meta.version = kVersion;
    report.meta.engine = config.engine;
    report.meta.statements = config.statements;
    report.meta.prime_lo = lo;
    report.meta.prime_hi = hi;
    report.meta.strict = config.strict;
    report.meta.jobs = config.jobs;
    report.meta.timestamp = rfc3339_utc_now();

    const auto t0 = std::chrono::steady_clock::now();
    report.sweep = verify_range(selection, options);
    const auto t1 = std::chrono::steady_clock::now();
    report.meta.total_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

    try {
        write_report(report, format, config.output);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return report.required_failures() == 0 ? kExitOk : kExitFailure;
}

namespace {

int default_max_r(const std::string& family) { return family == "even" ? 6 : 7; }

bool run_leshchiner_family(const std::string& family, int max_n, std::vector<int> rs,
                           long long& checks, std::vector<std::string>& failures) {
    const bool odd = family == "odd";
    if (rs.empty()) {
        for (int r = odd ? 1 : 2; r <= default_max_r(family); r += 2) rs.push_back(r);
    }
    for (int r : rs) {
        if (r < 1 || (odd ? r % 2 == 0 : r % 2 == 1)) {
            failures.push_back("invalid r=" + std::to_string(r) + " for family " + family);
            return false;
        }
        for (int n = 1; n <= max_n; ++n) {
            const IdentityCheck c = odd ? leshchiner_odd(n, r) : leshchiner_even(n, r);
            ++checks;
            if (!c.equal)
                failures.push_back(family + " identity fails at n=" + std::to_string(n) +
                                   ", r=" + std::to_string(r) + ": lhs=" + c.lhs.to_string() +
                                   " rhs=" + c.rhs.to_string());
        }
    }
    return true;
}

}  // namespace

int run_identities(const IdentitiesConfig& config) {
    if (config.max_n < 1) {
        std::cerr << "error: --max-n must be >= 1\n";
        return kExitUsage;
    }
    const std::string& fam = config.family;
    if (fam != "odd" && fam != "even" && fam != "ccc" && fam != "invbinom" && fam != "all") {
        std::cerr << "error: unknown identity family: '" << fam << "'\n";
        return kExitUsage;
    }
    if (!config.r_values.empty() && fam != "odd" && fam != "even") {
        std::cerr << "error: --r applies only to --family odd or even\n";
        return kExitUsage;
    }
    long long checks = 0;
    std::vector<std::string> failures;

    if (fam == "odd" || fam == "all")
        if (!run_leshchiner_family("odd", config.max_n, config.r_values, checks, failures))
            return kExitUsage;
    if (fam == "even" || fam == "all")
        if (!run_leshchiner_family("even", config.max_n, config.r_values, checks, failures))
            return kExitUsage;
    if (fam == "ccc" || fam == "all") {
        for (int n = 1; n <= config.max_n; ++n)
            for (int k = 0; k <= n; ++k) {
                ++checks;
                if (!ccc_product(n, k).all_equal)
                    failures.push_back("ccc fails at n=" + std::to_string(n) +
                                       ", k=" + std::to_string(k));
            }
    }
    if (fam == "invbinom" || fam == "all") {
        for (int n = 1; n <= config.max_n; ++n) {
            ++checks;
            const auto c = inverse_binomial_sums(n);
            if (!c.id1 || !c.id2)
                failures.push_back("inverse-binomial identity fails at n=" + std::to_string(n));
        }
    }

    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
    std::cout << "identities: family=" << fam << " max_n=" << config.max_n
              << " checks=" << checks << " failures=" << failures.size() << "\n";
    return failures.empty() ? kExitOk : kExitFailure;
}

int run_sharpness(const SharpnessConfig& config) {
    std::uint64_t lo = 0, hi = 0;
    std::string error;
    if (!parse_prime_range(config.primes, lo, hi, error)) {
        std::cerr << "error: " << error << "\n";
        return kExitUsage;
    }
    if (!registry_has_family(config.statement)) {
        std::cerr << "error: unknown statement id: '" << config.statement << "'\n";
        return kExitUsage;
    }
    const auto points = sharpness_scan(config.statement, lo, hi);
    for (const auto& pt : points) {
        std::cout << config.statement;
        if (!pt.params.empty()) std::cout << "[" << pt.params << "]";
        std::cout << " p=" << pt.prime << " achieved=";
        if (pt.achieved.kind == AchievedValuation::Kind::Infinite)
            std::cout << "exact_zero";
        else
            std::cout << pt.achieved.value;
        std::cout << "\n";
    }
    std::cout << "# " << points.size() << " points\n";
    return kExitOk;
}

int run_bernoulli(const BernoulliConfig& config) {
    try {
        if (config.mod == 0) {
            std::cout << bernoulli_exact(config.index).to_string() << "\n";
        } else {
            std::cout << bernoulli_mod_p(config.index, config.mod) << "\n";
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_limits(const LimitsConfig& config) {
    if (config.terms < 1) {
        std::cerr << "error: --terms must be >= 1\n";
        return kExitUsage;
    }
    for (SeriesId id : {SeriesId::arctan_pi3, SeriesId::zeta2_pi2_10, SeriesId::cube_7pi3_216,
                        SeriesId::h2_pi3_648}) {
        const SeriesLimit s = series_limit(id, config.terms);
        std::printf("%-14s terms=%d partial=%.15e target=%.15e abs_error=%.3e\n",
                    series_id_name(id).c_str(), config.terms, s.partial, s.target, s.abs_error);
    }
    return kExitOk;
}

}  // namespace aperylab::cli
