#include "plurichern/verify.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <sstream>

#include "plurichern/catalog.hpp"
#include "plurichern/chern_calculus.hpp"
#include "plurichern/criteria.hpp"

namespace plurichern {

namespace {

std::string surface_str(const SurfaceInvariants& s) {
    return "(" + std::to_string(s.c1_sq) + "," + std::to_string(s.c2) + ")";
}

VerifyCheck check_abc(int n_max, InjectedFault fault) {
    VerifyCheck check{"abc closed form = pair sums", true, ""};
    for (int n = 1; n <= n_max; ++n) {
        auto closed = abc_closed(n);
        if (fault == InjectedFault::AbcClosedForm && n == std::min(n_max, 7)) {
            closed.B += Rational(1);
        }
        const auto brute = abc_bruteforce(n);
        if (closed != brute || closed.A != closed.C) {
            check.passed = false;
            check.detail = "n=" + std::to_string(n) + ": closed (" + closed.A.str() + "," +
                           closed.B.str() + "," + closed.C.str() + ") vs sums (" + brute.A.str() +
                           "," + brute.B.str() + "," + brute.C.str() + ")";
            return check;
        }
    }
    check.detail = "n=1.." + std::to_string(n_max);
    return check;
}

// c₂(SⁿE) for E = L₁ ⊕ L₂ straight from the summands L₁^i ⊗ L₂^(n−i).
Integer c2_from_summands(int n, const Integer& l1l1, const Integer& l1l2, const Integer& l2l2) {
    Integer total = 0;
    for (long i = 0; i <= n; ++i) {
        for (long j = i + 1; j <= n; ++j) {
            total += i * j * l1l1 + (i * (n - j) + (n - i) * j) * l1l2 + (n - i) * (n - j) * l2l2;
        }
    }
    return total;
}

VerifyCheck check_split_c2(int n_max) {
    VerifyCheck check{"c2(S^n E) closed form = split-bundle expansion", true, ""};
    const long samples[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {3, -2, 5}, {-4, 7, 2}};
    const int top = std::min(n_max, 40);
    for (int n = 1; n <= top; ++n) {
        for (const auto& s : samples) {
            const Integer l1l1 = s[0], l1l2 = s[1], l2l2 = s[2];
            const Rank2BundleData e{Integer(l1l1 + 2 * l1l2 + l2l2), 0, l1l2};
            const Integer expected = c2_from_summands(n, l1l1, l1l2, l2l2);
            if (sym_power_c2(n, e) != Rational(expected)) {
                check.passed = false;
                check.detail = "n=" + std::to_string(n);
                return check;
            }
        }
    }
    check.detail = "n=1.." + std::to_string(top);
    return check;
}

VerifyCheck check_chi(int n_max, const std::vector<SurfaceInvariants>& grid, InjectedFault fault) {
    VerifyCheck check{"chi(S^n Omega) closed form = Riemann-Roch pipeline", true, ""};
    ChiClosedForm closed;
    if (fault == InjectedFault::ChiClosedForm) {
        const int bad_n = std::min(n_max, 5);
        closed = [bad_n](int n, const SurfaceInvariants& s) {
            Rational v = chi_sym_cotangent(n, s);
            return n == bad_n ? v + Rational(1) : v;
        };
    }
    const auto report = verify_chi_identity(n_max, grid, closed);
    if (!report.passed) {
        const auto& ce = *report.counterexample;
        check.passed = false;
        check.detail = "n=" + std::to_string(ce.n) + " surface " + surface_str(ce.surface) +
                       ": closed form " + ce.closed_form.str() + " vs Riemann-Roch " +
                       ce.riemann_roch.str();
        return check;
    }
    check.detail = std::to_string(report.checks) + " evaluations";
    return check;
}

VerifyCheck check_catalog(InjectedFault fault) {
    VerifyCheck check{"catalog members satisfy Noether's formula", true, ""};
    std::vector<FamilySurface> members;
    using Type3 = std::array<std::int64_t, 3>;
    for (auto [a, b, c] : std::vector<Type3>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}}) {
        members.push_back(abelian3fold_divisor(a, b, c));
    }
    using Type4 = std::array<std::int64_t, 4>;
    for (const auto& type : std::vector<Type4>{{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 4}}) {
        members.push_back(abelian4fold_ci(type));
    }
    for (std::int64_t k = 2; k <= 50; ++k) {
        members.push_back(product_quotient(k));
    }
    if (fault == InjectedFault::CatalogNoether) {
        *members.front().invariants.pg += 1;
    }
    for (const auto& m : members) {
        if (!m.invariants.noether_integral() || !m.invariants.noether_exact()) {
            check.passed = false;
            check.detail = std::string(to_string(m.family)) + " " + surface_str(m.invariants);
            return check;
        }
    }
    check.detail = std::to_string(members.size()) + " members";
    return check;
}

// First multiple of m ≥ 3 from which the inequality holds on every multiple
// up to `limit`, found by direct evaluation.
std::optional<std::int64_t> scan_threshold(const SurfaceInvariants& s, std::int64_t m, int limit) {
    std::optional<std::int64_t> first;
    for (std::int64_t n = ((3 + m - 1) / m) * m; n <= limit; n += m) {
        if (theorem_b_holds(static_cast<int>(n), s)) {
            if (!first) {
                first = n;
            }
        } else {
            first.reset();
        }
    }
    return first;
}

VerifyCheck check_thresholds(InjectedFault fault) {
    VerifyCheck check{"threshold min_n = direct scan of the inequality", true, ""};
    struct Case {
        SurfaceInvariants surface;
        std::int64_t m;
    };
    std::vector<Case> cases;
    for (std::int64_t k = 2; k <= 50; ++k) {
        cases.push_back({product_quotient(k).invariants, 2});
    }
    cases.push_back({abelian4fold_ci(std::array<std::int64_t, 4>{1, 1, 1, 1}).invariants, 2});
    cases.push_back({{36, 12, std::nullopt, std::nullopt}, 1});
    cases.push_back({{13, 11, std::nullopt, std::nullopt}, 1});
    for (const auto& c : cases) {
        const auto t = corollary_c_threshold(c.surface, c.m);
        auto min_n = t.min_n;
        if (fault == InjectedFault::Threshold) {
            *min_n += c.m;
        }
        const auto scanned = scan_threshold(c.surface, c.m, static_cast<int>(*t.min_n + 40 * c.m));
        if (min_n != scanned) {
            check.passed = false;
            check.detail = "surface " + surface_str(c.surface) + " m=" + std::to_string(c.m) +
                           ": threshold " + std::to_string(*min_n) + " vs scan " +
                           (scanned ? std::to_string(*scanned) : "none");
            return check;
        }
    }
    // The product-quotient root has a closed form in k; both brackets must overlap.
    for (std::int64_t k = 2; k <= 50; ++k) {
        const auto t = corollary_c_threshold(product_quotient(k).invariants, 2);
        const auto h = pq_threshold_h(k);
        if (t.root->upper < h.lower || h.upper < t.root->lower) {
            check.passed = false;
            check.detail = "product-quotient k=" + std::to_string(k) + ": brackets disjoint";
            return check;
        }
    }
    check.detail = std::to_string(cases.size()) + " surfaces";
    return check;
}

VerifyCheck check_discriminant(const std::vector<SurfaceInvariants>& grid) {
    VerifyCheck check{"discriminant forms agree and delta > 0 for u in (1,3]", true, ""};
    std::size_t count = 0;
    for (const auto& s : grid) {
        if (s.c2 <= 0 || s.c1_sq <= s.c2 || s.c1_sq > 3 * s.c2) {
            continue;
        }
        // discriminant_analysis throws std::logic_error on any disagreement.
        const auto d = discriminant_analysis(s);
        ++count;
        if (sgn(d.delta) <= 0 || d.delta_bar_sign <= 0) {
            check.passed = false;
            check.detail = "surface " + surface_str(s);
            return check;
        }
    }
    check.detail = std::to_string(count) + " surfaces";
    return check;
}

}  // namespace

bool VerifyOutcome::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::optional<VerifyCheck> VerifyOutcome::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<SurfaceInvariants> default_verification_grid() {
    std::vector<SurfaceInvariants> grid;
    using Point = std::pair<std::int64_t, std::int64_t>;
    for (auto [a, b] : std::vector<Point>{{0, 0}, {1, -1}, {6, 6}, {32, 16}, {48, 36}, {36, 12},
                                          {13, 11}, {100, 44}, {-3, 15}}) {
        grid.push_back({a, b, std::nullopt, std::nullopt});
    }
    return grid;
}

VerifyOutcome run_verification(const VerifyOptions& options) {
    const auto grid = options.grid.empty() ? default_verification_grid() : options.grid;
    VerifyOutcome out;
    auto guarded = [&](auto&& fn) {
        try {
            out.checks.push_back(fn());
        } catch (const std::exception& e) {
            out.checks.push_back({"internal consistency", false, e.what()});
        }
    };
    guarded([&] { return check_abc(options.n_max, options.fault); });
    guarded([&] { return check_split_c2(options.n_max); });
    guarded([&] { return check_chi(options.n_max, grid, options.fault); });
    guarded([&] { return check_catalog(options.fault); });
    guarded([&] { return check_thresholds(options.fault); });
    guarded([&] { return check_discriminant(grid); });
    return out;
}

}  // namespace plurichern
