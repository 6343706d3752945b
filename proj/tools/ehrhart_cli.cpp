// Command-line front end: family construction from spec strings,
// computation, classification, grid and scan reports, JSON/CSV emission.
//
// Exit codes: 0 success, 1 verification or computation failure,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "ehrhart/all.hpp"
#include "ehrhart/serialize.hpp"

namespace {

using namespace ehrhart;

std::int64_t default_budget() {
    if (const char* env = std::getenv("EHRHART_BUDGET")) {
        try {
            std::int64_t b = std::stoll(env);
            if (b > 0)
                return b;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring malformed EHRHART_BUDGET='" << env << "'\n";
    }
    return kDefaultBudget;
}

PipelineMethod parse_method(const std::string& m) {
    if (m == "auto")
        return PipelineMethod::automatic;
    if (m == "counting")
        return PipelineMethod::counting;
    if (m == "parallelepiped")
        return PipelineMethod::parallelepiped;
    if (m == "zonotope")
        return PipelineMethod::zonotope;
    throw CLI::ValidationError("--method", "unknown method '" + m + "'");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string csv_field(std::string s) {
    // vector-valued fields are ';'-joined, so fields stay comma-free
    for (char& c : s)
        if (c == ',')
            c = ';';
    return s;
}

std::string join_fractions(const std::vector<Rational>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += (i ? ";" : "") + fraction_string(coeffs[i]);
    return s;
}

void print_report_pretty(const QuadrantReport& r) {
    std::cout << r.label << "  dim " << r.dim << "  [" << method_name(r.method) << "]\n"
              << "  quadrant  " << quadrant_string(r.positive, r.unimodal)
              << "  (positive: " << yesno(r.positive) << ", unimodal: " << yesno(r.unimodal)
              << ")\n"
              << "  i(t)      "
              << RationalPolynomial(r.ehrhart_coeffs).to_string() << "\n"
              << "  h*        " << r.hstar.to_string() << "\n";
    for (const std::string& n : r.notes)
        std::cout << "  note      " << n << "\n";
}

void print_reports(const std::vector<QuadrantReport>& reports, const std::string& format,
                   bool single = false) {
    if (format == "json") {
        if (single && reports.size() == 1) {
            std::cout << to_json(reports.front()).dump(2) << "\n";
            return;
        }
        ordered_json arr = ordered_json::array();
        for (const QuadrantReport& r : reports)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "label,dim,positive,unimodal,ehrhart,hstar\n";
        for (const QuadrantReport& r : reports) {
            std::string hs;
            for (std::size_t i = 0; i < r.hstar.entries().size(); ++i)
                hs += (i ? ";" : "") + r.hstar.entries()[i].get_str();
            std::cout << csv_field(r.label) << "," << r.dim << "," << yesno(r.positive) << ","
                      << yesno(r.unimodal) << "," << join_fractions(r.ehrhart_coeffs) << "," << hs
                      << "\n";
        }
    } else {
        for (const QuadrantReport& r : reports)
            print_report_pretty(r);
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart polynomial / h*-vector toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "pretty";
    std::int64_t budget = default_budget();
    app.add_option("--format", format, "Output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--budget", budget, "Enumeration budget (overrides EHRHART_BUDGET)");

    std::string spec, method_str = "auto";
    auto* cmd_compute = app.add_subcommand("compute", "Ehrhart polynomial and h* of a family spec");
    cmd_compute->add_option("spec", spec, "Family spec, e.g. reeve:h=6 or pyr^2:reeve:h=6")
        ->required();
    cmd_compute->add_option("--method", method_str,
                            "Pipeline: auto, counting, parallelepiped or zonotope");

    auto* cmd_classify = app.add_subcommand("classify", "Positivity/unimodality classification");
    cmd_classify->add_option("spec", spec, "Family spec")->required();

    int dmin = 3, dmax = 7;
    auto* cmd_grid = app.add_subcommand("grid", "Verified four-quadrant witnesses per dimension");
    cmd_grid->add_option("--dmin", dmin, "Lowest dimension (>= 3)");
    cmd_grid->add_option("--dmax", dmax, "Highest dimension (<= 7)");

    int scan_d = 3;
    long amax = 25, bmax = 25;
    auto* cmd_scan =
        app.add_subcommand("scan-lecture-hall", "Classify thin lecture hall simplices on a grid");
    cmd_scan->add_option("--d", scan_d, "Dimension (>= 3)");
    cmd_scan->add_option("--amax", amax, "Largest a");
    cmd_scan->add_option("--bmax", bmax, "Largest b");

    int pr = 0, ps = 3, pk = 2;
    double tol = 1e-8;
    auto* cmd_payne = app.add_subcommand("verify-payne", "Verify all claims for payne(r,s,k)");
    cmd_payne->add_option("--r", pr, "r >= 0");
    cmd_payne->add_option("--s", ps, "s >= 3");
    cmd_payne->add_option("--k", pk, "k >= r+2");
    cmd_payne->add_option("--tol", tol, "Tolerance for numeric root location checks");

    auto* cmd_conj = app.add_subcommand("conjectures",
                                        "Exploratory scans of open conjectures (non-blocking)");

    int n_samples = 200;
    long bound = 9;
    unsigned long seed = 424242;
    auto* cmd_poly = app.add_subcommand("polygons", "Random lattice polygon property suite");
    cmd_poly->add_option("--n", n_samples, "Number of random triangles");
    cmd_poly->add_option("--bound", bound, "Coordinate bound");
    cmd_poly->add_option("--seed", seed, "PRNG seed (reported for reproducibility)");

    int thr_d = 3;
    auto* cmd_thr = app.add_subcommand("threshold", "Reeve pyramid positivity threshold H(d)");
    cmd_thr->add_option("--d", thr_d, "Dimension (>= 3)")->required();

    try {
        app.parse(argc, argv);

        if (*cmd_compute) {
            Polytope p = parse_family_spec(spec);
            EhrhartResult r = compute(p, parse_method(method_str), budget);
            if (format == "json") {
                std::cout << to_json(r, p.label, p.dim).dump(2) << "\n";
            } else if (format == "csv") {
                std::string hs;
                for (std::size_t i = 0; i < r.hstar.entries().size(); ++i)
                    hs += (i ? ";" : "") + r.hstar.entries()[i].get_str();
                std::cout << "label,dim,method,ehrhart,hstar\n"
                          << csv_field(p.label) << "," << p.dim << "," << method_name(r.method)
                          << "," << join_fractions(r.ehrhart.coefficients()) << "," << hs << "\n";
            } else {
                std::cout << p.label << "  dim " << p.dim << "  [" << method_name(r.method)
                          << "]\n"
                          << "  i(t)  " << r.ehrhart.to_string() << "\n"
                          << "  h*    " << r.hstar.to_string() << "\n";
            }
        } else if (*cmd_classify) {
            Polytope p = parse_family_spec(spec);
            print_reports({classify(p, PipelineMethod::automatic, budget)}, format, true);
        } else if (*cmd_grid) {
            std::vector<QuadrantReport> rows = grid_report(dmin, dmax, budget);
            print_reports(rows, format);
            if (format == "pretty")
                std::cout << "grid verified: " << rows.size() << " witnesses, dimensions " << dmin
                          << ".." << dmax << "\n";
        } else if (*cmd_scan) {
            auto entries = scan_thin_lecture_hall(scan_d, amax, bmax);
            if (format == "csv") {
                std::cout << "a,b,positive,unimodal,linear_coeff_num,linear_coeff_den\n";
                for (const auto& e : entries) {
                    Rational lin = e.report.ehrhart_coeffs.size() > 1 ? e.report.ehrhart_coeffs[1]
                                                                      : Rational(0);
                    std::cout << e.a.get_str() << "," << e.b.get_str() << ","
                              << (e.report.positive ? 1 : 0) << "," << (e.report.unimodal ? 1 : 0)
                              << "," << lin.get_num().get_str() << "," << lin.get_den().get_str()
                              << "\n";
                }
            } else if (format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& e : entries) {
                    ordered_json j;
                    j["a"] = to_json_int(e.a);
                    j["b"] = to_json_int(e.b);
                    j["report"] = to_json(e.report);
                    arr.push_back(j);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& e : entries)
                    std::cout << "(" << e.a.get_str() << "," << e.b.get_str() << ")  "
                              << quadrant_string(e.report.positive, e.report.unimodal) << "  i(t) = "
                              << RationalPolynomial(e.report.ehrhart_coeffs).to_string() << "\n";
            }
        } else if (*cmd_payne) {
            print_reports({verify_payne_family(pr, ps, pk, tol)}, format, true);
            if (format == "pretty")
                std::cout << "payne(r=" << pr << ",s=" << ps << ",k=" << pk
                          << "): all claims verified\n";
        } else if (*cmd_conj) {
            ConjectureScanReport rep = conjecture_scans(budget);
            print_reports(rep.entries, format);
            for (const std::string& c : rep.counterexamples)
                std::cout << c << "\n";
            if (format == "pretty" && rep.counterexamples.empty())
                std::cout << "conjecture scans: no counterexamples in range\n";
        } else if (*cmd_poly) {
            PolygonSuiteReport rep = polygon_property_suite(n_samples, bound, seed, budget);
            if (format == "json") {
                ordered_json j;
                j["samples"] = rep.samples;
                j["coord_bound"] = rep.coord_bound;
                j["seed"] = rep.seed;
                j["all_ok"] = rep.all_ok;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "polygons: " << rep.samples << " random triangles (bound "
                          << rep.coord_bound << ", seed " << rep.seed
                          << "): all positive, unimodal, Pick-consistent\n";
            }
        } else if (*cmd_thr) {
            Int h = reeve_threshold(thr_d);
            if (format == "json") {
                ordered_json j;
                j["d"] = thr_d;
                j["threshold"] = to_json_int(h);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "H(" << thr_d << ") = " << h.get_str() << "\n";
            }
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ehrhart::verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (...) {
        std::cerr << "error: unexpected failure\n";
        return 1;
    }
}
