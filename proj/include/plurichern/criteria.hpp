#pragma once

/**
 * Finiteness criteria for the pluri-cotangent maps ψₙ of a surface.
 *
 * Two routes lead to "ψₙ is generically finite onto its image":
 *   - directly, when h⁰(SⁿΩ) > ½(n+1)(n+2) (the Veronese bound), and
 *   - for n ≥ 3, when the Chern-number inequality holds, because then
 *     h⁰(SⁿΩ) ≥ χ(SⁿΩ) > ½(n+1)(n+2).
 * Both assume SⁿΩ is globally generated; that is never inferred here.
 *
 * The inequality is equivalent to Q(n) = αn² − 2βn + γ > 0 with
 * α = 2(c₁²−c₂), β = c₁²+2c₂+3, γ = c₁²+c₂−12. Its larger root is bracketed
 * by exact bisection certified through the sign of Q.
 */

#include <cstdint>
#include <optional>
#include <string_view>

#include "plurichern/rational.hpp"
#include "plurichern/surface.hpp"

namespace plurichern {

/// Width below which the root bracket of corollary_c_threshold stops.
inline const Rational kRootBracketWidth{Integer(1), Integer(1'000'000)};

struct RootBracket {
    Rational lower;  // Q(lower) ≤ 0
    Rational upper;  // Q(upper) > 0

    friend bool operator==(const RootBracket&, const RootBracket&) = default;
};

struct ThresholdResult {
    std::int64_t m = 1;
    Integer alpha;
    Integer beta;
    Integer gamma;
    Integer delta;  // β² − αγ
    /// Absent iff delta < 0, in which case Q has no real root.
    std::optional<RootBracket> root;
    /// Smallest multiple of m that is ≥ 3 and beyond the larger root.
    std::optional<std::int64_t> min_n;

    friend bool operator==(const ThresholdResult&, const ThresholdResult&) = default;
};

struct DiscriminantAnalysis {
    Integer delta;
    Rational u;          // c₁²/c₂
    Rational delta_bar;  // 18(u−1)(13u+1), the reduced discriminant of δ in c₂
    int delta_bar_sign = 0;
};

enum class Verdict { GenericallyFinite, Inconclusive, VeroneseObstructed };
enum class Route { None, DirectH0, ChernInequality };

std::string_view to_string(Verdict v);
std::string_view to_string(Route r);

/// What is known about h⁰(SⁿΩ): an exact value or a lower bound.
struct H0Knowledge {
    Integer value;
    bool exact = true;
};

struct CriterionReport {
    int n = 1;
    Rational chi;
    std::optional<Rational> h0_lower;  // n ≥ 3 only; equals chi
    Integer veronese_dim;
    bool theorem_b_holds = false;      // false for n < 3
    Rational q_of_n;
    std::optional<Integer> deg_psi_upper;
    Verdict verdict = Verdict::Inconclusive;
    Route route = Route::None;

    friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

Rational h0_lower_bound(int n, const SurfaceInvariants& surface);

/// The inequality in its displayed form:
/// c₁² > (1 + (6n−2)/(2n²−2n+1))c₂ + (6n+12)/(2n²−2n+1).
/// Also evaluates χ(SⁿΩ) > ½(n+1)(n+2) and throws std::logic_error if the
/// two disagree.
bool theorem_b_holds(int n, const SurfaceInvariants& surface);

Rational quadratic_Q(std::int64_t n, const SurfaceInvariants& surface);

ThresholdResult corollary_c_threshold(const SurfaceInvariants& surface, std::int64_t m);

DiscriminantAnalysis discriminant_analysis(const SurfaceInvariants& surface);

/// floor(n³(c₁²−c₂)/(h0 − 3)).
Integer deg_psi_upper_bound(int n, const SurfaceInvariants& surface, const Integer& h0);

/// deg Xₙ = n³(c₁²−c₂)/deg ψₙ; throws InconsistentInput if not integral.
Rational degree_relation(int n, const SurfaceInvariants& surface, const Integer& deg_psi);

bool gauss_divisibility_check(const Integer& deg_psi, const Integer& deg_gauss);

/// ½(n+1)(n+2).
Integer veronese_bound(int n);

CriterionReport classify(int n, const SurfaceInvariants& surface, bool global_generation_asserted,
                         const std::optional<H0Knowledge>& h0 = std::nullopt);

}  // namespace plurichern
