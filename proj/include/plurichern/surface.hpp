#pragma once

#include <cstdint>
#include <optional>

#include "plurichern/rational.hpp"

namespace plurichern {

/// Chern numbers of a compact complex surface, with optional Hodge data.
///
/// c1_sq is c₁² = K² and c2 is the topological Euler number. When both pg
/// and q are known, the Noether formula c₁² + c₂ = 12(1 − q + p_g) must hold;
/// otherwise only its mod-12 shadow can be checked. Construction does not
/// validate: geography and the chi command need to look at lattice points
/// that no surface realizes. Use `checked()` where a real surface is meant.
struct SurfaceInvariants {
    std::int64_t c1_sq = 0;
    std::int64_t c2 = 0;
    std::optional<std::int64_t> pg;
    std::optional<std::int64_t> q;

    /// Throws NoetherViolation (or InvalidArgument for negative pg/q) when
    /// the data cannot belong to a surface.
    static SurfaceInvariants checked(std::int64_t c1_sq, std::int64_t c2,
                                     std::optional<std::int64_t> pg = std::nullopt,
                                     std::optional<std::int64_t> q = std::nullopt);

    bool noether_integral() const;
    /// True when pg and q are absent, otherwise the exact Noether formula.
    bool noether_exact() const;
    void validate() const;

    /// (c₁² + c₂)/12.
    Rational chi_O() const;
    /// c₁² − c₂, the second Segre number.
    std::int64_t segre() const { return c1_sq - c2; }
    std::int64_t K_sq() const { return c1_sq; }

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

}  // namespace plurichern
