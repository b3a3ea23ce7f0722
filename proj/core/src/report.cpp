#include "aperylab/report.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace aperylab {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + name);
}

long long Report::required_failures() const {
    long long n = 0;
    for (const auto& row : sweep.rows) {
        if (row.outcome == Outcome::Pass || row.outcome == Outcome::NotApplicable) continue;
        if (row.status == StatementStatus::Proven || meta.strict) ++n;
    }
    return n;
}

std::string rfc3339_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

ordered_json achieved_json(const CongruenceResult& row) {
    if (row.outcome == Outcome::Error) return "error";
    if (row.achieved.kind == AchievedValuation::Kind::Exact) return row.achieved.value;
    return "ge_precision";
}

std::string achieved_text(const CongruenceResult& row) {
    if (row.outcome == Outcome::Error) return "error";
    return row.achieved.to_string();
}

}  // namespace

std::string render_json(const Report& report) {
    ordered_json j;
    j["meta"] = {
        {"tool", report.meta.tool},
        {"version", report.meta.version},
        {"engine", report.meta.engine},
        {"statements", report.meta.statements},
        {"prime_range", {report.meta.prime_lo, report.meta.prime_hi}},
        {"strict", report.meta.strict},
        {"jobs", report.meta.jobs},
        {"timestamp", report.meta.timestamp},
        {"total_micros", report.meta.total_micros},
    };
    j["rows"] = ordered_json::array();
    for (const auto& row : report.sweep.rows) {
        ordered_json r = {
            {"statement", row.family},
            {"params", row.params},
            {"prime", row.prime},
            {"required_exponent", row.required_exponent},
            {"achieved_valuation", achieved_json(row)},
            {"residue_lhs", row.residue_lhs},
            {"residue_rhs", row.residue_rhs},
            {"pass", row.outcome == Outcome::Pass},
            {"status", status_name(row.status)},
            {"micros", 0},
        };
        if (row.outcome == Outcome::Error) r["error"] = row.error;
        j["rows"].push_back(std::move(r));
    }
    j["summary"] = ordered_json::object();
    for (const auto& [family, entry] : report.sweep.summary)
        j["summary"][family] = {{"pass", entry.pass}, {"fail", entry.fail}, {"na", entry.na}};
    return j.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
    std::ostringstream os;
    os << "statement,params,prime,required_exponent,achieved_valuation,"
          "residue_lhs,residue_rhs,pass,status,micros\n";
    for (const auto& row : report.sweep.rows) {
        os << row.family << ',' << row.params << ',' << row.prime << ','
           << row.required_exponent << ',' << achieved_text(row) << ',' << row.residue_lhs << ','
           << row.residue_rhs << ',' << (row.outcome == Outcome::Pass ? "true" : "false") << ','
           << status_name(row.status) << ",0\n";
    }
    return os.str();
}

std::string render_text(const Report& report) {
    std::ostringstream os;
    os << "# " << report.meta.tool << " " << report.meta.version << " | engine="
       << report.meta.engine << " primes=" << report.meta.prime_lo << ".." << report.meta.prime_hi
       << " statements=" << report.meta.statements << (report.meta.strict ? " strict" : "")
       << "\n# generated: " << report.meta.timestamp << " (" << report.meta.total_micros
       << " us)\n";

    std::vector<std::vector<std::string>> table;
    table.push_back({"statement", "params", "p", "e", "achieved", "lhs_mod_p^e", "rhs_mod_p^e",
                     "pass", "status"});
    for (const auto& row : report.sweep.rows) {
        table.push_back({row.family, row.params, std::to_string(row.prime),
                         std::to_string(row.required_exponent), achieved_text(row),
                         row.residue_lhs, row.residue_rhs,
                         row.outcome == Outcome::Pass ? "yes" : "NO",
                         status_name(row.status)});
        if (row.outcome == Outcome::Error) table.back().back() += " (" + row.error + ")";
    }
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& r : table)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : table) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << r[c];
            if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << "\n";
    }
    os << "#\n";
    long long pass = 0, fail = 0, na = 0;
    for (const auto& [family, entry] : report.sweep.summary) {
        os << "# " << family << ": pass=" << entry.pass << " fail=" << entry.fail
           << " na=" << entry.na << "\n";
        pass += entry.pass;
        fail += entry.fail;
        na += entry.na;
    }
    os << "# total: pass=" << pass << " fail=" << fail << " na=" << na
       << " required_failures=" << report.required_failures() << "\n";
    return os.str();
}

std::string render(const Report& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return render_text(report);
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Csv: return render_csv(report);
    }
    return {};
}

std::size_t write_report(const Report& report, ReportFormat format,
                         const std::string& destination) {
    const std::string body = render(report, format);
    if (destination.empty() || destination == "-") {
        std::cout << body;
        std::cout.flush();
    } else {
        std::ofstream out(destination, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output path: " + destination);
        out << body;
        if (!out) throw std::runtime_error("write failed: " + destination);
    }
    return body.size();
}

}  // namespace aperylab
