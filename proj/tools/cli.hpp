#ifndef VERON_CLI_HPP
#define VERON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <veron/veronese.hpp>

namespace veron::cli {

/// Parameter grid for a verification campaign.
struct ScanGrid {
    std::vector<std::uint32_t> primes;
    std::uint32_t max_k = 1;
    std::pair<std::uint32_t, std::uint32_t> m_range{1, 1};  // inclusive
    std::pair<std::uint32_t, std::uint32_t> t_range{2, 2};  // inclusive
    bool require_q_ge_t = false;
};

struct ReportSummary {
    std::size_t matches = 0;           // q >= t and prediction confirmed
    std::size_t mismatches = 0;        // any violated invariant
    std::size_t small_field_cases = 0; // q < t with the lower bound holding

    friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

/// A set of nucleus verifications plus tallies, serializable to JSON
/// (schema_version "1") and CSV.
struct Report {
    std::string schema_version = "1";
    std::vector<NucleusReport> entries;
    ReportSummary summary;

    friend bool operator==(const Report&, const Report&) = default;
};

ReportSummary summarize(const std::vector<NucleusReport>& entries);

/// Evaluates every grid cell (optionally on several threads); entries are
/// in grid order regardless of completion order.
Report run_scan(const ScanGrid& grid, unsigned jobs = 1);

std::string to_json(const Report& report);
Report report_from_json(const std::string& text);

/// Fixed columns: p,k,q,m,t,predicted_dim,bruteforce_dim,basis_match,small_field.
std::string to_csv(const Report& report);

/// Runs one command line. Exit code 0 on success with all invariants
/// confirmed, 1 on a verification mismatch, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace veron::cli

#endif
