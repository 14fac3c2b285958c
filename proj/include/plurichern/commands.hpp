#pragma once

/**
 * The CLI's commands as library functions. Each builds a ReportDocument;
 * tools/plurichern only parses arguments and prints.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plurichern/geography.hpp"
#include "plurichern/report.hpp"

namespace plurichern {

/// Inclusive range of n; "4" or "3..6".
struct NRange {
    int first = 1;
    int last = 1;
};

/// Throws InvalidArgument on malformed text or an empty range.
NRange parse_n_range(const std::string& text);
IntRange parse_int_range(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

struct ChiArgs {
    int n = 1;
    std::int64_t c1_sq = 0;
    std::int64_t c2 = 0;
};

ReportDocument cmd_chi(const ChiArgs& args);

struct CriterionArgs {
    NRange n;
    std::int64_t c1_sq = 0;
    std::int64_t c2 = 0;
    std::optional<std::int64_t> pg;
    std::optional<std::int64_t> q;
    /// When set, SⁿΩ is taken to be globally generated for multiples of it.
    std::optional<std::int64_t> gg_period;
    std::optional<std::int64_t> h0_exact;
    bool h0_exact_veronese = false;  // h⁰ = ½(n+1)(n+2) at every n
    std::optional<std::int64_t> h0_lower;
};

/// Throws NoetherViolation when the Chern numbers (and p_g, q) are inconsistent.
ReportDocument cmd_criterion(const CriterionArgs& args);

struct CatalogArgs {
    std::string family;  // product-quotient | abelian3fold | abelian4fold
    std::optional<std::int64_t> k;
    std::vector<std::int64_t> type;
    NRange n;
};

ReportDocument cmd_catalog(const CatalogArgs& args);

}  // namespace plurichern
