#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "plurichern/rational.hpp"

namespace plurichern {

struct GeographyCell {
    std::int64_t c1_sq = 0;
    std::int64_t c2 = 0;
    bool noether_ok = false;       // c₁² + c₂ ≡ 0 mod 12
    bool bmy_ok = false;           // c₁² ≤ 3c₂
    bool noether_line_ok = false;  // c₁² ≥ 2χ(O) − 6
    bool segre_positive = false;
    std::optional<std::int64_t> min_n;  // threshold with m = 1
    std::optional<Rational> u;          // c₁²/c₂, absent when c₂ = 0

    friend bool operator==(const GeographyCell&, const GeographyCell&) = default;
};

/// Closed integer interval.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
};

inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;
inline constexpr const char* kGeographyCsvHeader =
    "c1_sq,c2,noether_ok,bmy_ok,segre_positive,u_num,u_den,min_n";

GeographyCell classify_point(std::int64_t c1_sq, std::int64_t c2);

/// Row-major (c1_sq outer, c2 inner) classification of every lattice point.
/// Rows are evaluated on up to `threads` workers (0 = hardware concurrency)
/// and assembled in order, so the result does not depend on scheduling.
std::vector<GeographyCell> scan(IntRange c1_sq, IntRange c2,
                                std::uint64_t cell_cap = kDefaultCellCap,
                                unsigned threads = 0);

void write_csv(std::ostream& os, const std::vector<GeographyCell>& cells);

}  // namespace plurichern
