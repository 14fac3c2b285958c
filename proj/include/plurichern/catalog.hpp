#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plurichern/criteria.hpp"
#include "plurichern/surface.hpp"

namespace plurichern {

enum class Family { Abelian3foldDivisor, Abelian4foldCI, ProductQuotient };

std::string_view to_string(Family f);

/// A member of one of the three worked example families.
struct FamilySurface {
    Family family;
    SurfaceInvariants invariants;
    std::int64_t gg_period = 1;             // smallest m with SᵐΩ globally generated
    std::vector<std::int64_t> parameters;   // polarization type, or {k}
    std::vector<std::string> caveats;

    bool globally_generated(int n) const { return n % gg_period == 0; }
    /// Known h⁰(SⁿΩ) data for this family, if any.
    std::optional<H0Knowledge> h0_knowledge(int n) const;
    /// classify() with this family's global-generation period and h⁰ rule.
    CriterionReport classify(int n) const;

    friend bool operator==(const FamilySurface&, const FamilySurface&) = default;
};

/// Theta-type divisor X ⊂ A in an abelian threefold with polarization
/// type (d1, d2, d3): K² = c₂ = 6·d1d2d3, p_g = d1d2d3 + 2, q = 3.
FamilySurface abelian3fold_divisor(std::int64_t d1, std::int64_t d2, std::int64_t d3);

/// Quotient by a free involution of a complete intersection in A × E,
/// A an abelian fourfold of polarization type d with M⁴ = 24·∏dᵢ:
/// c₁² = 2M⁴, c₂ = (3/2)M⁴.
FamilySurface abelian4fold_ci(std::span<const std::int64_t> type);

/// (C × F)/ℤ₂ with g(C) = 3 and g(F) = 2k+1: p_g = 3k+1, q = k+2, K² = 16k.
FamilySurface product_quotient(std::int64_t k);

/// Bracket of width ≤ 10⁻³ around h(k) = (32k + 3 + √(640k² + 384k + 9))/(16k),
/// certified by squaring rather than through Q.
RootBracket pq_threshold_h(std::int64_t k);

/// Throws InvalidPolarizationType unless every entry is positive and each
/// divides the next.
void check_polarization_type(std::span<const std::int64_t> type);

}  // namespace plurichern
