// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
// Usage: acceptance <path-to-plurichern-cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "plurichern/catalog.hpp"
#include "plurichern/chern_calculus.hpp"
#include "plurichern/criteria.hpp"
#include "plurichern/error.hpp"

using namespace plurichern;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Records the first failure; the summary is reported only on success.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && outcome_.passed) {
            outcome_.passed = false;
            outcome_.detail = what;
        }
    }
    Outcome done(std::string summary) {
        if (outcome_.passed) {
            outcome_.detail = std::move(summary);
        }
        return outcome_;
    }

private:
    Outcome outcome_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << "s";
    return os.str();
}

template <typename Fn>
bool throws_kind(Fn&& fn, ErrorKind kind) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

std::string point(const SurfaceInvariants& s) {
    return "(" + std::to_string(s.c1_sq) + "," + std::to_string(s.c2) + ")";
}

Outcome ac1_abc() {
    Checker c;
    const auto start = Clock::now();
    for (int n = 1; n <= 200; ++n) {
        c.expect(abc_closed(n) == abc_bruteforce(n), "abc mismatch at n=" + std::to_string(n));
    }
    const double t = seconds_since(start);
    c.expect(t < 5.0, "runtime " + fmt_seconds(t) + " exceeds 5s");
    return c.done("n=1..200 exact, " + fmt_seconds(t));
}

Outcome ac2_chi_identity() {
    Checker c;
    const std::vector<SurfaceInvariants> grid{{0, 0, {}, {}},   {6, 6, {}, {}},   {32, 16, {}, {}},
                                              {48, 36, {}, {}}, {36, 12, {}, {}}, {1, -1, {}, {}}};
    const auto start = Clock::now();
    const auto report = verify_chi_identity(50, grid);
    const double t = seconds_since(start);
    std::string where;
    if (report.counterexample) {
        where = " at n=" + std::to_string(report.counterexample->n);
    }
    c.expect(report.passed, "identity fails" + where);
    c.expect(t < 1.0, "runtime " + fmt_seconds(t) + " exceeds 1s");
    return c.done(std::to_string(report.checks) + " exact evaluations, " + fmt_seconds(t));
}

Outcome ac3_product_quotient_threshold() {
    Checker c;
    const Rational lo(Integer(389), Integer(100));
    const Rational hi(Integer(391), Integer(100));
    const auto t = corollary_c_threshold(product_quotient(2).invariants, 2);
    c.expect(t.root.has_value(), "no root bracket");
    if (t.root) {
        c.expect(t.root->upper - t.root->lower <= kRootBracketWidth, "bracket wider than 1e-6");
        c.expect(lo <= t.root->lower && t.root->upper <= hi, "bracket outside [3.89, 3.91]");
        c.expect(t.root->lower.approx() == "~3.899" && t.root->upper.approx() == "~3.899",
                 "bracket does not render as ~3.899");
    }
    c.expect(t.min_n == 4, "min_n != 4 at k=2");
    for (std::int64_t k = 2; k <= 50; ++k) {
        const auto member = product_quotient(k);
        c.expect(corollary_c_threshold(member.invariants, member.gg_period).min_n == 4,
                 "min even n != 4 at k=" + std::to_string(k));
    }
    return c.done("h(2) ~3.899 with width <= 1e-6, min even n = 4 for k=2..50");
}

Outcome ac4_veronese_counterexamples() {
    Checker c;
    for (auto [a, b, d] : std::vector<std::array<std::int64_t, 3>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}}) {
        const auto x = abelian3fold_divisor(a, b, d);
        const std::string name =
            "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")";
        for (int n = 1; n <= 50; ++n) {
            const auto r = classify(n, x.invariants, true, H0Knowledge{veronese_bound(n), true});
            c.expect(r.verdict == Verdict::VeroneseObstructed, name + " n=" + std::to_string(n));
        }
        c.expect(throws_kind([&] { (void)corollary_c_threshold(x.invariants, 1); },
                             ErrorKind::PreconditionViolation),
                 name + " threshold did not raise the degenerate-quadratic precondition");
    }
    return c.done("3 types x n=1..50 VeroneseObstructed; thresholds rejected");
}

Outcome ac5_abelian_fourfold() {
    Checker c;
    const auto x = abelian4fold_ci(std::array<std::int64_t, 4>{1, 1, 1, 1});
    for (int n = 2; n <= 50; n += 2) {
        const Integer nn = n;
        const Integer h0 = (nn + 1) * (nn + 2) * (nn + 3) / 6;
        const auto r = classify(n, x.invariants, x.globally_generated(n), H0Knowledge{h0, true});
        c.expect(r.verdict == Verdict::GenericallyFinite, "n=" + std::to_string(n));
    }
    const Integer bound = deg_psi_upper_bound(2, x.invariants, 10);
    c.expect(bound == 13, "deg bound " + bound.get_str() + " != 13");
    return c.done("even n=2..50 GenericallyFinite; deg psi_2 <= 13");
}

std::vector<SurfaceInvariants> random_population() {
    std::mt19937_64 rng(20240611);
    std::vector<SurfaceInvariants> out;
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t c2 = std::uniform_int_distribution<std::int64_t>(1, 500)(rng);
        const std::int64_t c1 = std::uniform_int_distribution<std::int64_t>(c2 + 1, 3 * c2)(rng);
        out.push_back({c1, c2, std::nullopt, std::nullopt});
    }
    return out;
}

Outcome ac6_three_way_equivalence(const std::vector<SurfaceInvariants>& population) {
    Checker c;
    std::size_t checks = 0;
    for (const auto& s : population) {
        for (int n = 3; n <= 30; ++n) {
            const bool b = theorem_b_holds(n, s);
            const bool q = quadratic_Q(n, s) > Rational(0);
            const bool chi = chi_sym_cotangent(n, s) > Rational(veronese_bound(n));
            ++checks;
            c.expect(b == q && q == chi, "disagreement at " + point(s) + " n=" + std::to_string(n));
        }
    }
    return c.done(std::to_string(checks) + " (surface, n) pairs agree");
}

Outcome ac7_discriminant(const std::vector<SurfaceInvariants>& population) {
    Checker c;
    std::size_t used = 0;
    for (const auto& s : population) {
        const Rational u(make_integer(s.c1_sq), make_integer(s.c2));
        if (!(u > Rational(1) && u <= Rational(3))) {
            continue;
        }
        ++used;
        try {
            const auto d = discriminant_analysis(s);
            // Both forms recomputed independently of the library.
            const Integer a = make_integer(s.c1_sq), b = make_integer(s.c2);
            const Integer alpha = 2 * (a - b), beta = a + 2 * b + 3, gamma = a + b - 12;
            const Integer coeff_form = beta * beta - alpha * gamma;
            const Rational c2(b);
            const Rational u_form = (-u * u + Rational(4) * u + Rational(6)) * c2 * c2 +
                                    (Rational(30) * u - Rational(12)) * c2 + Rational(9);
            const Rational delta_bar = Rational(18) * (u - Rational(1)) * (Rational(13) * u + Rational(1));
            c.expect(Rational(coeff_form) == u_form, point(s) + " forms differ");
            c.expect(Rational(d.delta) == u_form, point(s) + " library delta differs");
            c.expect(coeff_form > 0, point(s) + " delta <= 0");
            c.expect(delta_bar > Rational(0) && d.delta_bar_sign > 0, point(s) + " delta_bar <= 0");
        } catch (const std::exception& e) {
            c.expect(false, point(s) + ": " + e.what());
        }
    }
    c.expect(used == population.size(), "population not inside u in (1,3]");
    return c.done(std::to_string(used) + " surfaces, delta > 0 and delta_bar > 0, forms agree");
}

Outcome ac8_noether_and_hodge() {
    Checker c;
    std::vector<FamilySurface> members;
    for (auto [a, b, d] : std::vector<std::array<std::int64_t, 3>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 4}}) {
        members.push_back(abelian3fold_divisor(a, b, d));
    }
    for (const auto& t : std::vector<std::array<std::int64_t, 4>>{{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}}) {
        members.push_back(abelian4fold_ci(t));
    }
    for (std::int64_t k = 2; k <= 50; ++k) {
        members.push_back(product_quotient(k));
    }
    for (const auto& m : members) {
        const auto& s = m.invariants;
        c.expect(s.pg && s.q && s.c1_sq + s.c2 == 12 * (1 - *s.q + *s.pg),
                 std::string(to_string(m.family)) + " violates Noether");
    }
    const auto theta = abelian3fold_divisor(1, 1, 1).invariants;
    const Rational rr = chi_sym_cotangent_rr(1, theta);
    const Rational closed = chi_sym_cotangent(1, theta);
    const std::int64_t h11 = theta.c2 - 2 + 4 * *theta.q - 2 * *theta.pg;
    c.expect(rr == Rational(-4), "Riemann-Roch chi(Omega) = " + rr.str());
    c.expect(closed == Rational(-4), "closed-form chi(Omega) = " + closed.str());
    c.expect(2 * *theta.q - h11 == -4, "Hodge oracle disagrees");
    return c.done(std::to_string(members.size()) + " members exact; chi(Omega) = -4 three ways");
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome ac9_determinism(const std::string& cli) {
    Checker c;
    if (cli.empty()) {
        c.expect(false, "no CLI path given");
        return c.done("");
    }
    const auto dir = std::filesystem::temp_directory_path() /
                     ("plurichern-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto first = dir / "run1.csv";
    const auto second = dir / "run2.csv";
    auto run = [&](const std::string& args) {
        const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    c.expect(run("geography scan --c1sq 0..120 --c2 0..120 --out \"" + first.string() + "\"") == 0,
             "first scan failed");
    c.expect(run("geography scan --c1sq 0..120 --c2 0..120 --threads 3 --out \"" + second.string() + "\"") == 0,
             "second scan failed");
    const std::string a = slurp(first);
    const std::string b = slurp(second);
    c.expect(!a.empty() && a == b, "CSV outputs differ");
    const auto rows = std::count(a.begin(), a.end(), '\n');
    c.expect(rows == 121 * 121 + 1, "unexpected line count " + std::to_string(rows));
    c.expect(run("verify") == 0, "verify did not exit 0");
    std::filesystem::remove_all(dir);
    return c.done("121x121 scan byte-identical (" + std::to_string(a.size()) + " bytes); verify exit 0");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto population = random_population();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 closed-form/brute-force equivalence", ac1_abc},
        {"AC2 chi identity certification", ac2_chi_identity},
        {"AC3 product-quotient threshold", ac3_product_quotient_threshold},
        {"AC4 Veronese counterexamples", ac4_veronese_counterexamples},
        {"AC5 abelian fourfold family", ac5_abelian_fourfold},
        {"AC6 three-way criterion equivalence", [&] { return ac6_three_way_equivalence(population); }},
        {"AC7 discriminant positivity", [&] { return ac7_discriminant(population); }},
        {"AC8 Noether and Hodge consistency", ac8_noether_and_hodge},
        {"AC9 determinism", [&] { return ac9_determinism(cli); }},
    };

    int failures = 0;
    const auto start = Clock::now();
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.passed ? 0 : 1;
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << " in " << fmt_seconds(seconds_since(start)) << '\n';
    return failures == 0 ? 0 : 1;
}
