#include "plurichern/catalog.hpp"

#include <string>

#include "plurichern/error.hpp"

namespace plurichern {

namespace {

std::int64_t product_of(std::span<const std::int64_t> values) {
    std::int64_t p = 1;
    for (auto v : values) {
        if (__builtin_mul_overflow(p, v, &p)) {
            throw Error(ErrorKind::InvalidArgument, "polarization type too large");
        }
    }
    return p;
}

std::string describe(std::span<const std::int64_t> type) {
    std::string out = "(";
    for (std::size_t i = 0; i < type.size(); ++i) {
        out += (i ? "," : "") + std::to_string(type[i]);
    }
    return out + ")";
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Abelian3foldDivisor: return "abelian3fold";
    case Family::Abelian4foldCI: return "abelian4fold";
    case Family::ProductQuotient: return "product-quotient";
    }
    return "?";
}

void check_polarization_type(std::span<const std::int64_t> type) {
    if (type.empty()) {
        throw Error(ErrorKind::InvalidPolarizationType, "empty polarization type");
    }
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 1) {
            throw Error(ErrorKind::InvalidPolarizationType,
                        "polarization type " + describe(type) + " has a nonpositive entry");
        }
        if (i > 0 && type[i] % type[i - 1] != 0) {
            throw Error(ErrorKind::InvalidPolarizationType,
                        "polarization type " + describe(type) + ": " + std::to_string(type[i - 1]) +
                            " does not divide " + std::to_string(type[i]));
        }
    }
}

std::optional<H0Knowledge> FamilySurface::h0_knowledge(int n) const {
    switch (family) {
    case Family::Abelian3foldDivisor:
        // H⁰(SⁿΩ) = SⁿH⁰(Ω) with q = 3.
        return H0Knowledge{veronese_bound(n), true};
    case Family::Abelian4foldCI:
        if (n % 2 == 0) {
            const Integer nn = n;
            return H0Knowledge{Integer((nn + 1) * (nn + 2) * (nn + 3) / 6), false};
        }
        return std::nullopt;
    case Family::ProductQuotient:
        if (n == 2) {
            return H0Knowledge{Integer(7), false};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

CriterionReport FamilySurface::classify(int n) const {
    return plurichern::classify(n, invariants, globally_generated(n), h0_knowledge(n));
}

FamilySurface abelian3fold_divisor(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    const std::int64_t type[] = {d1, d2, d3};
    check_polarization_type(type);
    // h⁰(A, M) = M³/6 = d1d2d3 = χ(O_X); K² = M³.
    const std::int64_t h = product_of(type);
    FamilySurface out{Family::Abelian3foldDivisor,
                      SurfaceInvariants::checked(6 * h, 6 * h, h + 2, 3),
                      1,
                      {d1, d2, d3},
                      {}};
    return out;
}

FamilySurface abelian4fold_ci(std::span<const std::int64_t> type) {
    if (type.size() != 4) {
        throw Error(ErrorKind::InvalidPolarizationType,
                    "abelian fourfold polarization type needs 4 entries, got " +
                        std::to_string(type.size()));
    }
    check_polarization_type(type);
    const std::int64_t m4 = 24 * product_of(type);
    // q = 0 (no invariant 1-forms); χ(O) = 7∏dᵢ fixes p_g.
    const std::int64_t c1_sq = 2 * m4;
    const std::int64_t c2 = 3 * m4 / 2;
    const std::int64_t chi = (c1_sq + c2) / 12;
    FamilySurface out{Family::Abelian4foldCI,
                      SurfaceInvariants::checked(c1_sq, c2, chi - 1, 0),
                      2,
                      {type.begin(), type.end()},
                      {"M^4 = 24 * product of the polarization type"}};
    return out;
}

FamilySurface product_quotient(std::int64_t k) {
    if (k < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "product_quotient: k must be >= 2, got " + std::to_string(k));
    }
    FamilySurface out{Family::ProductQuotient,
                      SurfaceInvariants::checked(16 * k, 8 * k, 3 * k + 1, k + 2),
                      2,
                      {k},
                      {"invariants reported unconditionally; existence of F with genus 2k+1 and "
                       "the required free involution is assumed"}};
    return out;
}

RootBracket pq_threshold_h(std::int64_t k) {
    if (k < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "pq_threshold_h: k must be >= 2, got " + std::to_string(k));
    }
    const Integer kk = make_integer(k);
    const Integer disc = 640 * kk * kk + 384 * kk + 9;
    const Rational denom(Integer(16 * kk));
    const Rational offset(Integer(32 * kk + 3));
    // x > h(k) ⇔ t := 16kx − 32k − 3 > 0 and t² > disc.
    auto above = [&](const Rational& x) {
        const Rational t = denom * x - offset;
        return t.sign() > 0 && t * t > Rational(disc);
    };
    Rational lo = offset / denom;  // h(k) − √disc/16k
    Rational hi = lo + Rational(1);
    while (!above(hi)) {
        hi += Rational(1);
    }
    const Rational width(Integer(1), Integer(1000));
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / Rational(2);
        if (above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

}  // namespace plurichern
