#include "cli.hpp"

#include <atomic>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace veron::cli {

namespace {

using nlohmann::json;

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw ParamOutOfRange("invalid list entry '" + item + "'");
        out.push_back(std::uint32_t(v));
    }
    if (out.empty()) throw ParamOutOfRange("expected a comma-separated list");
    return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const auto v = std::uint32_t(std::stoul(text));
        return {v, v};
    }
    const auto lo = std::uint32_t(std::stoul(text.substr(0, colon)));
    const auto hi = std::uint32_t(std::stoul(text.substr(colon + 1)));
    if (hi < lo) throw ParamOutOfRange("empty range '" + text + "'");
    return {lo, hi};
}

json entry_to_json(const NucleusReport& r) {
    return json{{"p", r.p},
                {"k", r.k},
                {"q", r.q},
                {"m", r.m},
                {"t", r.t},
                {"predicted_dim", r.predicted_dim},
                {"bruteforce_dim", r.bruteforce_dim},
                {"basis_match", r.basis_match},
                {"small_field", r.small_field}};
}

NucleusReport entry_from_json(const json& j) {
    NucleusReport r;
    r.p = j.at("p").get<std::uint32_t>();
    r.k = j.at("k").get<std::uint32_t>();
    r.q = j.at("q").get<std::uint32_t>();
    r.m = j.at("m").get<std::uint32_t>();
    r.t = j.at("t").get<std::uint32_t>();
    r.predicted_dim = j.at("predicted_dim").get<std::int64_t>();
    r.bruteforce_dim = j.at("bruteforce_dim").get<std::int64_t>();
    r.basis_match = j.at("basis_match").get<bool>();
    r.small_field = j.at("small_field").get<bool>();
    return r;
}

void print_entry_line(std::ostream& out, const NucleusReport& r) {
    out << "GF(" << r.q << ") m=" << r.m << " t=" << r.t << ": predicted " << r.predicted_dim
        << ", brute " << r.bruteforce_dim << ", ";
    if (r.small_field)
        out << (r.ok() ? "small field, lower bound holds" : "small field, LOWER BOUND VIOLATED");
    else
        out << (r.ok() ? "match" : "MISMATCH");
    out << "\n";
}

void print_report_table(std::ostream& out, const Report& report) {
    out << std::setw(6) << "p" << std::setw(4) << "k" << std::setw(6) << "q" << std::setw(4) << "m"
        << std::setw(4) << "t" << std::setw(11) << "predicted" << std::setw(7) << "brute"
        << std::setw(13) << "basis_match" << std::setw(13) << "small_field" << "\n";
    for (const auto& r : report.entries) {
        out << std::setw(6) << r.p << std::setw(4) << r.k << std::setw(6) << r.q << std::setw(4) << r.m
            << std::setw(4) << r.t << std::setw(11) << r.predicted_dim << std::setw(7) << r.bruteforce_dim
            << std::setw(13) << (r.basis_match ? "true" : "false") << std::setw(13)
            << (r.small_field ? "true" : "false") << "\n";
    }
    out << report.entries.size() << " cells: " << report.summary.matches << " match, "
        << report.summary.mismatches << " mismatch, " << report.summary.small_field_cases
        << " small-field\n";
}

}  // namespace

ReportSummary summarize(const std::vector<NucleusReport>& entries) {
    ReportSummary s;
    for (const auto& r : entries) {
        if (!r.ok())
            ++s.mismatches;
        else if (r.small_field)
            ++s.small_field_cases;
        else
            ++s.matches;
    }
    return s;
}

Report run_scan(const ScanGrid& grid, unsigned jobs) {
    if (grid.primes.empty()) throw ParamOutOfRange("scan needs at least one prime");
    if (grid.max_k < 1) throw ParamOutOfRange("max-k must be at least 1");
    if (grid.t_range.first < 1) throw ParamOutOfRange("degree t must be at least 1");

    struct Cell {
        std::uint32_t p, k, m, t;
    };
    std::vector<Cell> cells;
    for (const std::uint32_t p : grid.primes) {
        std::uint64_t q = 1;
        for (std::uint32_t k = 1; k <= grid.max_k; ++k) {
            q *= p;
            if (q > (1u << 16)) break;
            for (std::uint32_t m = grid.m_range.first; m <= grid.m_range.second; ++m)
                for (std::uint32_t t = grid.t_range.first; t <= grid.t_range.second; ++t) {
                    if (grid.require_q_ge_t && q < t) continue;
                    cells.push_back({p, k, m, t});
                }
        }
    }

    Report report;
    report.entries.resize(cells.size());
    const auto evaluate = [&](std::size_t i) {
        report.entries[i] = verify_nucleus(cells[i].p, cells[i].k, cells[i].m, cells[i].t);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const unsigned n = std::min<std::size_t>(jobs, cells.size() ? cells.size() : 1);
        workers.reserve(n);
        for (unsigned w = 0; w < n; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) evaluate(i);
            });
        for (auto& th : workers) th.join();
    }
    report.summary = summarize(report.entries);
    return report;
}

std::string to_json(const Report& report) {
    json j;
    j["schema_version"] = report.schema_version;
    j["entries"] = json::array();
    for (const auto& r : report.entries) j["entries"].push_back(entry_to_json(r));
    j["summary"] = json{{"matches", report.summary.matches},
                        {"mismatches", report.summary.mismatches},
                        {"small_field_cases", report.summary.small_field_cases}};
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    const json j = json::parse(text);
    Report report;
    report.schema_version = j.at("schema_version").get<std::string>();
    if (report.schema_version != "1")
        throw ParamOutOfRange("unsupported report schema_version '" + report.schema_version + "'");
    for (const auto& e : j.at("entries")) report.entries.push_back(entry_from_json(e));
    report.summary.matches = j.at("summary").at("matches").get<std::size_t>();
    report.summary.mismatches = j.at("summary").at("mismatches").get<std::size_t>();
    report.summary.small_field_cases = j.at("summary").at("small_field_cases").get<std::size_t>();
    return report;
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "p,k,q,m,t,predicted_dim,bruteforce_dim,basis_match,small_field\n";
    for (const auto& r : report.entries) {
        os << r.p << ',' << r.k << ',' << r.q << ',' << r.m << ',' << r.t << ',' << r.predicted_dim
           << ',' << r.bruteforce_dim << ',' << (r.basis_match ? "true" : "false") << ','
           << (r.small_field ? "true" : "false") << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact nucleus computations for Veronese varieties over finite fields"};
    app.set_version_flag("--version", "veronucleus 1.0.0");
    app.require_subcommand(1);

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "closed-form nucleus dimension and emptiness class");
    std::uint32_t dim_m = 0, dim_p = 0;
    std::uint64_t dim_t = 0;
    dim_cmd->add_option("--m", dim_m, "projective dimension of the source")->required();
    dim_cmd->add_option("--t", dim_t, "degree")->required();
    dim_cmd->add_option("--p", dim_p, "prime characteristic")->required();

    // multinomial
    auto* multi_cmd = app.add_subcommand("multinomial", "exact multinomial, residue mod p, carry flag");
    std::uint64_t multi_t = 0;
    std::uint32_t multi_p = 0;
    std::string multi_e;
    multi_cmd->add_option("--t", multi_t, "upper entry")->required();
    multi_cmd->add_option("--e", multi_e, "comma-separated exponents e0,e1,...")->required();
    multi_cmd->add_option("--p", multi_p, "prime characteristic")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "brute-force nucleus vs the dimension formula");
    std::string verify_field, verify_format = "text";
    std::uint32_t verify_m = 0, verify_t = 0;
    bool verify_fault = false;
    verify_cmd->add_option("--field", verify_field, "field spec p^k or p^k/c0,c1,...,ck")->required();
    verify_cmd->add_option("--m", verify_m, "projective dimension of the source")->required();
    verify_cmd->add_option("--t", verify_t, "degree")->required();
    verify_cmd->add_option("--format", verify_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_flag("--inject-fault", verify_fault, "corrupt the predicted dimension (self-test)")
        ->group("");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "verification campaign over a parameter grid");
    std::string scan_primes, scan_m_range, scan_t_range, scan_format = "text";
    std::uint32_t scan_max_k = 1;
    unsigned scan_jobs = 1;
    bool scan_require = false, scan_fault = false;
    scan_cmd->add_option("--primes", scan_primes, "comma-separated primes")->required();
    scan_cmd->add_option("--max-k", scan_max_k, "largest extension degree");
    scan_cmd->add_option("--m-range", scan_m_range, "inclusive range lo:hi")->required();
    scan_cmd->add_option("--t-range", scan_t_range, "inclusive range lo:hi")->required();
    scan_cmd->add_flag("--require-q-ge-t", scan_require, "skip cells with q < t");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads");
    scan_cmd->add_option("--format", scan_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    scan_cmd->add_flag("--inject-fault", scan_fault, "corrupt predicted dimensions (self-test)")->group("");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "empty/non-empty table over small m and t");
    std::uint32_t classify_p = 0, classify_m_max = 1;
    std::uint64_t classify_t_max = 2;
    classify_cmd->add_option("--p", classify_p, "prime characteristic")->required();
    classify_cmd->add_option("--m-max", classify_m_max, "largest m")->required();
    classify_cmd->add_option("--t-max", classify_t_max, "largest t")->required();

    // demo-projection
    auto* demo_cmd = app.add_subcommand("demo-projection",
                                        "project a one-point-nucleus Veronese surface from its nucleus");
    std::string demo_field = "2^2";
    std::uint32_t demo_t = 3;
    demo_cmd->add_option("--field", demo_field, "field spec (default 2^2)");
    demo_cmd->add_option("--t", demo_t, "degree (default 3)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("veronucleus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*dim_cmd) {
            out << nucleus_dim_formula(dim_m, dim_t, dim_p) << " ("
                << to_string(classify_empty(dim_m, dim_t, dim_p)) << ")\n";
            return 0;
        }
        if (*multi_cmd) {
            const ExponentTuple e = parse_uint_list(multi_e);
            out << multinomial_exact(multi_t, e) << ", residue " << multinomial_mod_p(multi_t, e, multi_p)
                << ", carry_free " << (carry_free(multi_t, e, multi_p) ? "true" : "false") << "\n";
            return 0;
        }
        if (*verify_cmd) {
            const Field field = Field::parse(verify_field);
            NucleusReport entry = verify_nucleus(field, verify_m, verify_t);
            if (verify_fault) entry.predicted_dim += 1;
            Report report;
            report.entries.push_back(entry);
            report.summary = summarize(report.entries);
            if (verify_format == "json")
                out << to_json(report) << "\n";
            else if (verify_format == "csv")
                out << to_csv(report);
            else
                print_entry_line(out, entry);
            return report.summary.mismatches == 0 ? 0 : 1;
        }
        if (*scan_cmd) {
            ScanGrid grid;
            grid.primes = parse_uint_list(scan_primes);
            grid.max_k = scan_max_k;
            grid.m_range = parse_range(scan_m_range);
            grid.t_range = parse_range(scan_t_range);
            grid.require_q_ge_t = scan_require;
            Report report = run_scan(grid, scan_jobs);
            if (scan_fault) {
                for (auto& entry : report.entries) entry.predicted_dim += 1;
                report.summary = summarize(report.entries);
            }
            if (scan_format == "json")
                out << to_json(report) << "\n";
            else if (scan_format == "csv")
                out << to_csv(report);
            else
                print_report_table(out, report);
            return report.summary.mismatches == 0 ? 0 : 1;
        }
        if (*classify_cmd) {
            out << std::setw(4) << "m" << std::setw(6) << "t" << std::setw(15) << "class"
                << std::setw(8) << "dim" << "\n";
            for (std::uint32_t m = 1; m <= classify_m_max; ++m)
                for (std::uint64_t t = 1; t <= classify_t_max; ++t)
                    out << std::setw(4) << m << std::setw(6) << t << std::setw(15)
                        << to_string(classify_empty(m, t, classify_p)) << std::setw(8)
                        << nucleus_dim_formula(m, t, classify_p) << "\n";
            return 0;
        }
        if (*demo_cmd) {
            const Field field = Field::parse(demo_field);
            const VeroContext ctx(field, 2, demo_t);
            const ProjectionDemoReport d = projection_demo(ctx);
            out << "field GF(" << d.q << "), m=2, t=" << demo_t << ", ambient vector dimension "
                << d.ambient_vector_dim << "\n";
            out << "nucleus: single point at coordinate " << d.nucleus_coordinate << "\n";
            out << "projection image: " << d.distinct_images << " of " << d.source_points
                << " points distinct, injective " << (d.injective ? "true" : "false") << "\n";
            out << "lines: " << d.lines << ", skew to nucleus " << d.lines_skew_to_nucleus
                << ", spanning a " << demo_t << "-space " << (d.line_spans_full ? "true" : "false")
                << "\n";
            out << "projected image spans projective dimension " << d.image_span_projective_dim << "\n";
            return d.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace veron::cli
