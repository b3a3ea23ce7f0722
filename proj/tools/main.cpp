#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "aperylab/cli.hpp"
#include "aperylab/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"aperylab: exact and p-adic verification of central-binomial "
                 "identities and prime-power congruences"};
    app.set_version_flag("--version", std::string(aperylab::kVersion));
    app.require_subcommand(1);

    aperylab::cli::VerifyConfig verify_cfg;
    std::string verify_config_path;
    auto* verify = app.add_subcommand(
        "verify", "Sweep congruence statements over a prime range and emit a report");
    auto* opt_statements =
        verify->add_option("--statements", verify_cfg.statements,
                           "all | proven | draft | comma-separated statement ids")
            ->capture_default_str();
    auto* opt_primes = verify->add_option("--primes", verify_cfg.primes,
                                          "Prime range A..B (A >= 3)")
                           ->capture_default_str();
    auto* opt_engine =
        verify->add_option("--engine", verify_cfg.engine, "exact | padic | both")
            ->capture_default_str();
    auto* opt_jobs = verify->add_option("--jobs", verify_cfg.jobs,
                                        "Worker threads (output-invariant)")
                         ->capture_default_str();
    auto* opt_format = verify->add_option("--format", verify_cfg.format, "text | json | csv")
                           ->capture_default_str();
    auto* opt_output =
        verify->add_option("--output", verify_cfg.output, "Output path, or - for stdout")
            ->capture_default_str();
    auto* opt_strict = verify->add_flag(
        "--strict", verify_cfg.strict, "Treat draft statements as required for the exit code");
    verify->add_option("--config", verify_config_path,
                       "Config file with key=value lines mirroring the flags (flags win)");

    aperylab::cli::IdentitiesConfig id_cfg;
    auto* identities =
        app.add_subcommand("identities", "Exact sweep of the finite identity suite");
    identities->add_option("--family", id_cfg.family, "odd | even | ccc | invbinom | all")
        ->capture_default_str();
    identities->add_option("--max-n", id_cfg.max_n, "Largest n to check")
        ->capture_default_str();
    identities->add_option("--r", id_cfg.r_values,
                           "Weights r for the odd/even families (comma separated)")
        ->delimiter(',');

    aperylab::cli::SharpnessConfig sharp_cfg;
    auto* sharpness = app.add_subcommand(
        "sharpness", "Exact-engine valuation scan of lhs - rhs for one statement family");
    sharpness->add_option("--statement", sharp_cfg.statement, "Statement family id")
        ->required();
    sharpness->add_option("--primes", sharp_cfg.primes, "Prime range A..B")
        ->capture_default_str();

    aperylab::cli::BernoulliConfig bern_cfg;
    auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli number queries");
    bernoulli->add_option("--index", bern_cfg.index, "Index m of B_m")->required();
    bernoulli->add_option("--mod", bern_cfg.mod, "Prime p: compute B_m mod p instead");

    aperylab::cli::LimitsConfig lim_cfg;
    auto* limits = app.add_subcommand("limits", "Partial sums of the four series limits");
    limits->add_option("--terms", lim_cfg.terms, "Number of terms")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return aperylab::cli::kExitUsage;
    }

    if (verify->parsed()) {
        if (!verify_config_path.empty()) {
            aperylab::cli::VerifyFlagsGiven given;
            given.statements = opt_statements->count() > 0;
            given.primes = opt_primes->count() > 0;
            given.engine = opt_engine->count() > 0;
            given.jobs = opt_jobs->count() > 0;
            given.format = opt_format->count() > 0;
            given.output = opt_output->count() > 0;
            given.strict = opt_strict->count() > 0;
            std::string error;
            if (!aperylab::cli::apply_verify_config_file(verify_config_path, given, verify_cfg,
                                                         error)) {
                std::cerr << "error: " << error << "\n";
                return aperylab::cli::kExitUsage;
            }
        }
        return aperylab::cli::run_verify(verify_cfg);
    }
    if (identities->parsed()) return aperylab::cli::run_identities(id_cfg);
    if (sharpness->parsed()) return aperylab::cli::run_sharpness(sharp_cfg);
    if (bernoulli->parsed()) return aperylab::cli::run_bernoulli(bern_cfg);
    if (limits->parsed()) return aperylab::cli::run_limits(lim_cfg);
    return aperylab::cli::kExitUsage;
}
