// plurichern: Chern-number criteria for pluri-cotangent maps of surfaces.
//
// Exit codes: 0 success, 1 verification or criterion failure, 2 usage
// error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plurichern/commands.hpp"
#include "plurichern/error.hpp"
#include "plurichern/geography.hpp"
#include "plurichern/verify.hpp"

using namespace plurichern;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr const char* kCellCapEnv = "PLURICHERN_CELL_CAP";

constexpr const char* kModelNote =
    "All verdicts assume a minimal surface of general type with ample canonical\n"
    "class; that is not decidable from Chern numbers and is not checked. Global\n"
    "generation of S^n Omega is taken from --gg-period, never inferred.";

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfRange:
    case ErrorKind::ResourceLimit:
        return kExitUsage;
    case ErrorKind::Io:
        return kExitIo;
    default:
        return kExitFailure;
    }
}

void emit(const ReportDocument& doc, bool json) {
    if (json) {
        std::cout << to_json(doc).dump(2) << '\n';
    } else {
        std::cout << to_text(doc);
    }
}

std::uint64_t cell_cap_from_env() {
    const char* raw = std::getenv(kCellCapEnv);
    if (!raw) {
        return kDefaultCellCap;
    }
    const auto r = parse_int_range(raw);
    if (r.lo < 1) {
        throw Error(ErrorKind::InvalidArgument, std::string(kCellCapEnv) + " must be positive");
    }
    return static_cast<std::uint64_t>(r.lo);
}

std::vector<SurfaceInvariants> parse_grid(const std::string& text) {
    std::vector<SurfaceInvariants> grid;
    std::stringstream ss(text);
    std::string point;
    while (std::getline(ss, point, ';')) {
        const auto v = parse_int_list(point);
        if (v.size() != 2) {
            throw Error(ErrorKind::InvalidArgument, "grid point '" + point + "' needs c1sq,c2");
        }
        grid.push_back({v[0], v[1], std::nullopt, std::nullopt});
    }
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty grid");
    }
    return grid;
}

InjectedFault parse_fault(const std::string& name) {
    if (name == "abc") return InjectedFault::AbcClosedForm;
    if (name == "chi") return InjectedFault::ChiClosedForm;
    if (name == "noether") return InjectedFault::CatalogNoether;
    if (name == "threshold") return InjectedFault::Threshold;
    throw Error(ErrorKind::InvalidArgument, "unknown fault '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chern-number criteria for pluri-cotangent maps of surfaces"};
    app.footer(kModelNote);
    app.require_subcommand(1);

    // chi
    auto* chi = app.add_subcommand("chi", "Euler characteristic of S^n Omega_X");
    ChiArgs chi_args;
    bool chi_json = false;
    chi->add_option("--n", chi_args.n, "Symmetric power n >= 1")->required();
    chi->add_option("--c1sq", chi_args.c1_sq, "c1^2 = K^2")->required();
    chi->add_option("--c2", chi_args.c2, "c2 (topological Euler number)")->required();
    chi->add_flag("--json", chi_json, "Machine-readable output");

    // criterion
    auto* crit = app.add_subcommand("criterion", "Finiteness verdicts for psi_n");
    crit->footer(kModelNote);
    CriterionArgs crit_args;
    std::string crit_n = "3";
    std::string crit_h0_exact;
    bool crit_json = false;
    crit->add_option("--n", crit_n, "n or range a..b (default 3)");
    crit->add_option("--c1sq", crit_args.c1_sq, "c1^2 = K^2")->required();
    crit->add_option("--c2", crit_args.c2, "c2")->required();
    crit->add_option("--pg", crit_args.pg, "Geometric genus (checked against Noether)");
    crit->add_option("--q", crit_args.q, "Irregularity (checked against Noether)");
    crit->add_option("--gg-period", crit_args.gg_period,
                     "Assert S^n Omega globally generated for multiples of this period");
    auto* h0_exact_opt = crit->add_option("--h0-exact", crit_h0_exact,
                                          "Exact h0(S^n Omega), or 'veronese' for (n+1)(n+2)/2");
    crit->add_option("--h0-lower", crit_args.h0_lower, "Known lower bound for h0(S^n Omega)")
        ->excludes(h0_exact_opt);
    crit->add_flag("--json", crit_json, "Machine-readable output");

    // catalog
    auto* cat = app.add_subcommand("catalog", "Worked example families");
    CatalogArgs cat_args;
    std::string cat_n = "1..6";
    std::string cat_type;
    bool cat_json = false;
    cat->add_option("family", cat_args.family, "product-quotient | abelian3fold | abelian4fold")
        ->required()
        ->check(CLI::IsMember({"product-quotient", "abelian3fold", "abelian4fold"}));
    cat->add_option("--k", cat_args.k, "product-quotient parameter k >= 2");
    cat->add_option("--type", cat_type, "Polarization type d1,d2,... with d1 | d2 | ...");
    cat->add_option("--n", cat_n, "n or range a..b (default 1..6)");
    cat->add_flag("--json", cat_json, "Machine-readable output");

    // geography
    auto* geo = app.add_subcommand("geography", "Chern-plane scans");
    geo->require_subcommand(1);
    auto* geo_scan = geo->add_subcommand("scan", "Classify every lattice point of a rectangle");
    std::string geo_c1 = "0..120";
    std::string geo_c2 = "0..120";
    std::string geo_out;
    unsigned geo_threads = 0;
    geo_scan->add_option("--c1sq", geo_c1, "c1^2 range a..b");
    geo_scan->add_option("--c2", geo_c2, "c2 range a..b");
    geo_scan->add_option("--out", geo_out, "Output CSV path (default: stdout)");
    geo_scan->add_option("--threads", geo_threads, "Worker threads (0 = all cores)");
    geo_scan->footer(std::string("Cell cap: ") + std::to_string(kDefaultCellCap) +
                     ", override with " + kCellCapEnv + ".");

    // verify
    auto* ver = app.add_subcommand("verify", "Run the built-in identity and consistency checks");
    VerifyOptions ver_opts;
    std::string ver_grid;
    std::string ver_fault;
    ver->add_option("--nmax", ver_opts.n_max, "Largest n checked (default 200)");
    ver->add_option("--grid", ver_grid, "Surface grid 'c1sq,c2;c1sq,c2;...'");
    ver->add_option("--inject-fault", ver_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*chi) {
            emit(cmd_chi(chi_args), chi_json);
        } else if (*crit) {
            crit_args.n = parse_n_range(crit_n);
            if (crit_h0_exact == "veronese") {
                crit_args.h0_exact_veronese = true;
            } else if (!crit_h0_exact.empty()) {
                const auto v = parse_int_list(crit_h0_exact);
                if (v.size() != 1) {
                    throw Error(ErrorKind::InvalidArgument, "--h0-exact takes one integer");
                }
                crit_args.h0_exact = v[0];
            }
            emit(cmd_criterion(crit_args), crit_json);
        } else if (*cat) {
            cat_args.n = parse_n_range(cat_n);
            if (!cat_type.empty()) {
                cat_args.type = parse_int_list(cat_type);
            }
            emit(cmd_catalog(cat_args), cat_json);
        } else if (*geo_scan) {
            const auto cells =
                scan(parse_int_range(geo_c1), parse_int_range(geo_c2), cell_cap_from_env(), geo_threads);
            if (geo_out.empty()) {
                write_csv(std::cout, cells);
                std::cerr << "rows: " << cells.size() << '\n';
            } else {
                std::ofstream out(geo_out, std::ios::binary);
                if (!out) {
                    throw Error(ErrorKind::Io, "cannot open '" + geo_out + "' for writing");
                }
                write_csv(out, cells);
                out.close();
                if (!out) {
                    throw Error(ErrorKind::Io, "write to '" + geo_out + "' failed");
                }
                std::cout << "rows: " << cells.size() << '\n';
            }
        } else if (*ver) {
            if (ver_opts.n_max < 1) {
                throw Error(ErrorKind::InvalidArgument, "--nmax must be >= 1");
            }
            if (!ver_grid.empty()) {
                ver_opts.grid = parse_grid(ver_grid);
            }
            if (!ver_fault.empty()) {
                ver_opts.fault = parse_fault(ver_fault);
            }
            const auto outcome = run_verification(ver_opts);
            for (const auto& c : outcome.checks) {
                std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
            }
            if (const auto failure = outcome.first_failure()) {
                std::cerr << "verification failed: " << failure->name << ": " << failure->detail << '\n';
                return kExitFailure;
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitOk;
}
