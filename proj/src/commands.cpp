#include "plurichern/commands.hpp"

#include <charconv>

#include "plurichern/catalog.hpp"
#include "plurichern/chern_calculus.hpp"
#include "plurichern/criteria.hpp"
#include "plurichern/error.hpp"

namespace plurichern {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::InvalidArgument, "malformed " + what + " '" + text + "'");
    }
    return v;
}

std::string render(const NRange& r) {
    return r.first == r.last ? std::to_string(r.first)
                             : std::to_string(r.first) + ".." + std::to_string(r.last);
}

std::string render(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "-";
}

void check_n_range(const NRange& r) {
    if (r.first < 1) {
        throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    }
}

constexpr const char* kGgWarning = "global generation of S^n Omega asserted by user, not verified";
constexpr const char* kStandingHypothesis =
    "surface assumed minimal of general type with ample canonical class (not checked)";

}  // namespace

IntRange parse_int_range(const std::string& text) {
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text, "range");
    } else {
        r.lo = parse_int(text.substr(0, dots), "range");
        r.hi = parse_int(text.substr(dots + 2), "range");
    }
    if (r.hi < r.lo) {
        throw Error(ErrorKind::InvalidArgument, "empty range '" + text + "'");
    }
    return r;
}

NRange parse_n_range(const std::string& text) {
    const auto r = parse_int_range(text);
    if (r.lo < 1 || r.hi > 100'000) {
        throw Error(ErrorKind::InvalidArgument, "n range '" + text + "' must lie in 1..100000");
    }
    return {static_cast<int>(r.lo), static_cast<int>(r.hi)};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start), "integer list"));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

ReportDocument cmd_chi(const ChiArgs& args) {
    if (args.n < 1) {
        throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    ReportDocument doc;
    doc.command = "chi";
    doc.input_echo = {{"n", std::to_string(args.n)},
                      {"c1_sq", std::to_string(args.c1_sq)},
                      {"c2", std::to_string(args.c2)}};
    const SurfaceInvariants s{args.c1_sq, args.c2, std::nullopt, std::nullopt};
    if (!s.noether_integral()) {
        doc.warnings.push_back("c1^2 + c2 = " + std::to_string(args.c1_sq + args.c2) +
                               " is not divisible by 12; no surface has these Chern numbers");
    }
    doc.results.push_back(ChiResult{args.n, s, chi_sym_cotangent(args.n, s)});
    return doc;
}

ReportDocument cmd_criterion(const CriterionArgs& args) {
    check_n_range(args.n);
    const auto s = SurfaceInvariants::checked(args.c1_sq, args.c2, args.pg, args.q);

    ReportDocument doc;
    doc.command = "criterion";
    doc.input_echo = {{"n", render(args.n)},
                      {"c1_sq", std::to_string(args.c1_sq)},
                      {"c2", std::to_string(args.c2)},
                      {"pg", render(args.pg)},
                      {"q", render(args.q)},
                      {"gg_period", render(args.gg_period)},
                      {"h0_exact", args.h0_exact_veronese ? "veronese" : render(args.h0_exact)},
                      {"h0_lower", render(args.h0_lower)}};
    doc.warnings.push_back(kStandingHypothesis);
    if (args.gg_period) {
        if (*args.gg_period < 1) {
            throw Error(ErrorKind::InvalidArgument, "gg-period must be >= 1");
        }
        doc.warnings.push_back(kGgWarning);
    } else {
        doc.warnings.push_back("no global-generation period given; no verdict can be GenericallyFinite");
    }

    for (int n = args.n.first; n <= args.n.last; ++n) {
        std::optional<H0Knowledge> h0;
        if (args.h0_exact_veronese) {
            h0 = H0Knowledge{veronese_bound(n), true};
        } else if (args.h0_exact) {
            h0 = H0Knowledge{make_integer(*args.h0_exact), true};
        } else if (args.h0_lower) {
            h0 = H0Knowledge{make_integer(*args.h0_lower), false};
        }
        const bool gg = args.gg_period && n % *args.gg_period == 0;
        doc.results.push_back(classify(n, s, gg, h0));
    }
    if (s.segre() > 0) {
        doc.results.push_back(corollary_c_threshold(s, args.gg_period.value_or(1)));
    }
    return doc;
}

ReportDocument cmd_catalog(const CatalogArgs& args) {
    check_n_range(args.n);
    ReportDocument doc;
    doc.command = "catalog";
    std::string params;
    FamilySurface member = [&] {
        if (args.family == "product-quotient") {
            if (!args.k) {
                throw Error(ErrorKind::InvalidArgument, "product-quotient needs --k");
            }
            params = std::to_string(*args.k);
            return product_quotient(*args.k);
        }
        for (std::size_t i = 0; i < args.type.size(); ++i) {
            params += (i ? "," : "") + std::to_string(args.type[i]);
        }
        if (args.family == "abelian3fold") {
            if (args.type.size() != 3) {
                throw Error(ErrorKind::InvalidPolarizationType, "abelian3fold needs --type d1,d2,d3");
            }
            return abelian3fold_divisor(args.type[0], args.type[1], args.type[2]);
        }
        if (args.family == "abelian4fold") {
            return abelian4fold_ci(args.type);
        }
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + args.family + "'");
    }();
    doc.input_echo = {{"family", args.family}, {"parameters", params}, {"n", render(args.n)}};
    doc.warnings.push_back(kStandingHypothesis);
    for (const auto& c : member.caveats) {
        doc.warnings.push_back(c);
    }
    doc.results.push_back(member);
    for (int n = args.n.first; n <= args.n.last; ++n) {
        doc.results.push_back(member.classify(n));
    }
    if (member.invariants.segre() > 0) {
        doc.results.push_back(corollary_c_threshold(member.invariants, member.gg_period));
    }
    return doc;
}

}  // namespace plurichern
