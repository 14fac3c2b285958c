#include "plurichern/criteria.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "plurichern/chern_calculus.hpp"
#include "plurichern/error.hpp"

namespace plurichern {

namespace {

struct QuadraticCoefficients {
    Integer alpha;
    Integer beta;
    Integer gamma;
};

QuadraticCoefficients coefficients(const SurfaceInvariants& s) {
    const Integer c1 = make_integer(s.c1_sq);
    const Integer c2 = make_integer(s.c2);
    return {2 * (c1 - c2), c1 + 2 * c2 + 3, c1 + c2 - 12};
}

// Q(x) = αx² − 2βx + γ.
Rational q_at(const Rational& x, const QuadraticCoefficients& k) {
    return Rational(k.alpha) * x * x - Rational(Integer(2 * k.beta)) * x + Rational(k.gamma);
}

void require_chern_range(int n, const char* op) {
    if (n < 3) {
        throw Error(ErrorKind::OutOfRange,
                    std::string(op) + ": only asserted for n >= 3, got " + std::to_string(n));
    }
}

bool displayed_inequality(int n, const SurfaceInvariants& s) {
    const Integer nn = n;
    const Rational d(Integer(2 * nn * nn - 2 * nn + 1));
    const Rational slope = Rational(1) + Rational(Integer(6 * nn - 2)) / d;
    const Rational rhs = slope * Rational(make_integer(s.c2)) + Rational(Integer(6 * nn + 12)) / d;
    return Rational(make_integer(s.c1_sq)) > rhs;
}

bool chi_exceeds_veronese(int n, const SurfaceInvariants& s) {
    return chi_sym_cotangent(n, s) > Rational(veronese_bound(n));
}

std::int64_t to_int64(const Integer& v) {
    if (!v.fits_slong_p()) {
        throw Error(ErrorKind::ResourceLimit, "value " + v.get_str() + " exceeds 64 bits");
    }
    return v.get_si();
}

std::int64_t smallest_multiple_at_least(std::int64_t m, std::int64_t bound) {
    if (bound <= 0) {
        return m;
    }
    return ((bound + m - 1) / m) * m;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::GenericallyFinite: return "GenericallyFinite";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::VeroneseObstructed: return "VeroneseObstructed";
    }
    return "?";
}

std::string_view to_string(Route r) {
    switch (r) {
    case Route::None: return "none";
    case Route::DirectH0: return "h0-above-veronese";
    case Route::ChernInequality: return "chern-inequality";
    }
    return "?";
}

Integer veronese_bound(int n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "veronese_bound: n must be >= 1");
    }
    const Integer nn = n;
    return (nn + 1) * (nn + 2) / 2;
}

Rational h0_lower_bound(int n, const SurfaceInvariants& surface) {
    require_chern_range(n, "h0_lower_bound");
    return chi_sym_cotangent(n, surface);
}

bool theorem_b_holds(int n, const SurfaceInvariants& surface) {
    require_chern_range(n, "theorem_b_holds");
    const bool displayed = displayed_inequality(n, surface);
    if (displayed != chi_exceeds_veronese(n, surface)) {
        throw std::logic_error("inequality and chi > veronese disagree at n = " +
                               std::to_string(n));
    }
    return displayed;
}

Rational quadratic_Q(std::int64_t n, const SurfaceInvariants& surface) {
    return q_at(Rational(make_integer(n)), coefficients(surface));
}

ThresholdResult corollary_c_threshold(const SurfaceInvariants& surface, std::int64_t m) {
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "corollary_c_threshold: m must be >= 1");
    }
    if (surface.c1_sq <= surface.c2) {
        throw Error(ErrorKind::PreconditionViolation,
                    "second Segre number not positive (c1^2 - c2 = " +
                        std::to_string(surface.segre()) + ")");
    }
    const auto k = coefficients(surface);
    ThresholdResult out;
    out.m = m;
    out.alpha = k.alpha;
    out.beta = k.beta;
    out.gamma = k.gamma;
    out.delta = k.beta * k.beta - k.alpha * k.gamma;

    const Rational vertex(k.beta, k.alpha);
    std::int64_t n = 0;
    if (sgn(out.delta) >= 0) {
        // Q(vertex) = −δ/α ≤ 0; walk right until Q turns positive, then bisect.
        Rational lo = vertex;
        Rational step(1);
        Rational hi = lo + step;
        while (q_at(hi, k).sign() <= 0) {
            step *= Rational(2);
            hi = lo + step;
        }
        while (hi - lo > kRootBracketWidth) {
            const Rational mid = (lo + hi) / Rational(2);
            if (q_at(mid, k).sign() <= 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.root = RootBracket{lo, hi};
        n = smallest_multiple_at_least(m, std::max<std::int64_t>(3, to_int64(lo.floor())));
        // n lies past the larger root iff n > lo ≥ vertex and Q(n) > 0.
        while (!(Rational(make_integer(n)) > lo && quadratic_Q(n, surface).sign() > 0)) {
            n += m;
        }
    } else {
        n = smallest_multiple_at_least(m, 3);
    }
    out.min_n = n;

    if (quadratic_Q(n, surface).sign() <= 0) {
        throw std::logic_error("threshold: Q(min_n) is not positive");
    }
    if (n <= std::numeric_limits<int>::max() && !theorem_b_holds(static_cast<int>(n), surface)) {
        throw std::logic_error("threshold: inequality fails at min_n");
    }
    const std::int64_t prev = n - m;
    if (out.root && prev >= 3 && Rational(make_integer(prev)) >= vertex &&
        theorem_b_holds(static_cast<int>(prev), surface)) {
        throw std::logic_error("threshold: inequality already holds at min_n - m");
    }
    return out;
}

DiscriminantAnalysis discriminant_analysis(const SurfaceInvariants& surface) {
    if (surface.c2 <= 0) {
        throw Error(ErrorKind::PreconditionViolation, "discriminant_analysis: c2 must be positive");
    }
    if (surface.c1_sq <= surface.c2) {
        throw Error(ErrorKind::PreconditionViolation, "discriminant_analysis: u = c1^2/c2 must exceed 1");
    }
    const auto k = coefficients(surface);
    DiscriminantAnalysis out;
    out.delta = k.beta * k.beta - k.alpha * k.gamma;

    const Rational c2(make_integer(surface.c2));
    const Rational u = Rational(make_integer(surface.c1_sq)) / c2;
    out.u = u;
    const Rational lead = -u * u + Rational(4) * u + Rational(6);
    const Rational mid = Rational(30) * u - Rational(12);
    const Rational delta_in_u = lead * c2 * c2 + mid * c2 + Rational(9);
    if (delta_in_u != Rational(out.delta)) {
        throw std::logic_error("discriminant: beta^2 - alpha*gamma disagrees with the u-form");
    }

    out.delta_bar = Rational(18) * (u - Rational(1)) * (Rational(13) * u + Rational(1));
    const Rational half_mid = mid / Rational(2);
    if (half_mid * half_mid - lead * Rational(9) != out.delta_bar) {
        throw std::logic_error("discriminant: factored reduced discriminant disagrees");
    }
    out.delta_bar_sign = out.delta_bar.sign();
    if (u <= Rational(3) && sgn(out.delta) <= 0) {
        throw std::logic_error("discriminant: delta not positive for u in (1, 3]");
    }
    return out;
}

Integer deg_psi_upper_bound(int n, const SurfaceInvariants& surface, const Integer& h0) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "deg_psi_upper_bound: n must be >= 1");
    }
    if (h0 <= 3) {
        throw Error(ErrorKind::InvalidArgument, "deg_psi_upper_bound: h0 must exceed 3");
    }
    if (h0 <= veronese_bound(n)) {
        throw Error(ErrorKind::HypothesisNotMet,
                    "h0 = " + h0.get_str() + " does not exceed (n+1)(n+2)/2 = " +
                        veronese_bound(n).get_str());
    }
    if (surface.segre() <= 0) {
        throw Error(ErrorKind::PreconditionViolation, "deg_psi_upper_bound: c1^2 - c2 must be positive");
    }
    const Integer nn = n;
    return Rational(Integer(nn * nn * nn * make_integer(surface.segre())), Integer(h0 - 3)).floor();
}

Rational degree_relation(int n, const SurfaceInvariants& surface, const Integer& deg_psi) {
    if (n < 1 || deg_psi < 1) {
        throw Error(ErrorKind::InvalidArgument, "degree_relation: n and deg_psi must be >= 1");
    }
    if (surface.segre() <= 0) {
        throw Error(ErrorKind::PreconditionViolation, "degree_relation: c1^2 - c2 must be positive");
    }
    const Integer nn = n;
    const Integer product = nn * nn * nn * make_integer(surface.segre());
    if (!mpz_divisible_p(product.get_mpz_t(), deg_psi.get_mpz_t())) {
        throw Error(ErrorKind::InconsistentInput,
                    "deg psi = " + deg_psi.get_str() + " does not divide n^3(c1^2 - c2) = " +
                        product.get_str());
    }
    return Rational(product, deg_psi);
}

bool gauss_divisibility_check(const Integer& deg_psi, const Integer& deg_gauss) {
    if (deg_psi < 1 || deg_gauss < 1) {
        throw Error(ErrorKind::InvalidArgument, "degrees must be >= 1");
    }
    return mpz_divisible_p(deg_psi.get_mpz_t(), deg_gauss.get_mpz_t()) != 0;
}

CriterionReport classify(int n, const SurfaceInvariants& surface, bool global_generation_asserted,
                         const std::optional<H0Knowledge>& h0) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "classify: n must be >= 1");
    }
    if (global_generation_asserted && h0 && h0->exact && h0->value < n + 1) {
        throw Error(ErrorKind::InconsistentInput,
                    "h0 = " + h0->value.get_str() + " is below rank S^n Omega = " +
                        std::to_string(n + 1) + " although S^n Omega is globally generated");
    }

    CriterionReport r;
    r.n = n;
    r.chi = chi_sym_cotangent(n, surface);
    r.veronese_dim = veronese_bound(n);
    r.q_of_n = quadratic_Q(n, surface);
    if (n >= 3) {
        r.h0_lower = r.chi;
        r.theorem_b_holds = theorem_b_holds(n, surface);
        if (r.theorem_b_holds != (r.q_of_n.sign() > 0)) {
            throw std::logic_error("classify: Q(n) sign disagrees with the inequality");
        }
    }

    const bool h0_above = h0 && h0->value > r.veronese_dim;
    if (h0 && h0->exact && h0->value == r.veronese_dim) {
        r.verdict = Verdict::VeroneseObstructed;
    } else if (global_generation_asserted && r.theorem_b_holds) {
        r.verdict = Verdict::GenericallyFinite;
        r.route = Route::ChernInequality;
    } else if (global_generation_asserted && n >= 2 && h0_above) {
        r.verdict = Verdict::GenericallyFinite;
        r.route = Route::DirectH0;
    }

    if (r.verdict == Verdict::GenericallyFinite && surface.segre() > 0) {
        // Any certified lower bound on h⁰ gives a valid degree bound; take the best.
        Integer best = 0;
        if (h0_above) {
            best = h0->value;
        }
        if (r.theorem_b_holds) {
            best = std::max(best, r.chi.ceil());
        }
        r.deg_psi_upper = deg_psi_upper_bound(n, surface, best);
    }
    return r;
}

}  // namespace plurichern
