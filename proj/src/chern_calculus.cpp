#include "plurichern/chern_calculus.hpp"

#include <string>

#include "plurichern/error.hpp"

namespace plurichern {

namespace {

void require_positive_n(int n, const char* op) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(op) + ": n must be >= 1, got " + std::to_string(n));
    }
}

}  // namespace

Rank2BundleData Rank2BundleData::cotangent(const SurfaceInvariants& s) {
    return {make_integer(s.c1_sq), make_integer(s.c1_sq), make_integer(s.c2)};
}

Rational sym_power_c1_factor(int n) {
    require_positive_n(n, "sym_power_c1_factor");
    const Integer nn = n;
    return Rational(nn * (nn + 1), Integer(2));
}

SymPowerCoefficients abc_closed(int n) {
    require_positive_n(n, "abc_closed");
    const Integer nn = n;
    Rational a(Integer((nn - 1) * nn * (nn + 1) * (3 * nn + 2)), Integer(24));
    Rational b(Integer(nn * (nn + 1) * (3 * nn * nn + nn + 2)), Integer(12));
    return {a, b, a};
}

SymPowerCoefficients abc_bruteforce(int n) {
    require_positive_n(n, "abc_bruteforce");
    if (n > kBruteforceMaxN) {
        throw Error(ErrorKind::InvalidArgument,
                    "abc_bruteforce: n above " + std::to_string(kBruteforceMaxN));
    }
    Integer a = 0;
    Integer b = 0;
    Integer c = 0;
    // A row sum over j is below n⁴ ≤ 10¹⁶ and fits in 64 bits; the totals may not.
    for (long i = 0; i <= n; ++i) {
        long row_a = 0;
        long row_b = 0;
        long row_c = 0;
        for (long j = i + 1; j <= n; ++j) {
            row_a += i * j;
            row_b += i * (n - j) + (n - i) * j;
            row_c += (n - i) * (n - j);
        }
        a += row_a;
        b += row_b;
        c += row_c;
    }
    return {Rational(a), Rational(b), Rational(c)};
}

Rational sym_power_c2(int n, const Rank2BundleData& bundle) {
    require_positive_n(n, "sym_power_c2");
    const Integer nn = n;
    const Rational c1_coeff(Integer((nn - 1) * nn * (nn + 1) * (3 * nn + 2)), Integer(24));
    const Rational c2_coeff(Integer(nn * (nn + 1) * (nn + 2)), Integer(6));
    return c1_coeff * Rational(bundle.c1_self) + c2_coeff * Rational(bundle.c2);
}

SymPowerChernData sym_power_data(int n, const Rank2BundleData& bundle) {
    const auto abc = abc_closed(n);
    return {n, sym_power_c1_factor(n), sym_power_c2(n, bundle), abc.A, abc.B, abc.C};
}

Rational rr_chi(const Rational& c1_self, const Rational& c1_dot_K, const Rational& c2, int rank,
                const SurfaceInvariants& surface) {
    if (rank < 1) {
        throw Error(ErrorKind::InvalidArgument, "rr_chi: rank must be >= 1");
    }
    return (c1_self - c1_dot_K) / Rational(2) - c2 + Rational(rank) * surface.chi_O();
}

Rational chi_sym_cotangent(int n, const SurfaceInvariants& surface) {
    require_positive_n(n, "chi_sym_cotangent");
    const Integer nn = n;
    const Integer a = 2 * nn * nn - 2 * nn + 1;
    const Integer b = 2 * nn * nn + 4 * nn - 1;
    const Integer body = a * make_integer(surface.c1_sq) - b * make_integer(surface.c2);
    return Rational(Integer((nn + 1) * body), Integer(12));
}

Rational chi_sym_cotangent_rr(int n, const SurfaceInvariants& surface) {
    const auto omega = Rank2BundleData::cotangent(surface);
    const Rational f = sym_power_c1_factor(n);
    // c₁(SⁿΩ) = f·K, so c₁(SⁿΩ)² = f²K² and c₁(SⁿΩ)·K = f·K².
    const Rational k_sq(omega.c1_self);
    return rr_chi(f * f * k_sq, f * Rational(omega.c1_dot_K), sym_power_c2(n, omega), n + 1,
                  surface);
}

ChiIdentityReport verify_chi_identity(int n_max, std::span<const SurfaceInvariants> grid,
                                      const ChiClosedForm& closed_form) {
    if (n_max < 1) {
        throw Error(ErrorKind::InvalidArgument, "verify_chi_identity: n_max must be >= 1");
    }
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidArgument, "verify_chi_identity: empty surface grid");
    }
    ChiIdentityReport report;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& s : grid) {
            const Rational lhs = closed_form ? closed_form(n, s) : chi_sym_cotangent(n, s);
            const Rational rhs = chi_sym_cotangent_rr(n, s);
            ++report.checks;
            if (lhs != rhs) {
                report.passed = false;
                report.counterexample = ChiCounterexample{n, s, lhs, rhs};
                return report;
            }
        }
    }
    return report;
}

}  // namespace plurichern
