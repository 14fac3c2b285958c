#include "plurichern/report.hpp"

#include <sstream>

#include "plurichern/error.hpp"

namespace plurichern {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorKind::InvalidArgument, "malformed report: " + what);
}

json big(const Integer& v) { return v.get_str(); }

Integer big_from(const json& j) {
    if (!j.is_string()) {
        malformed("expected integer string");
    }
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
        malformed("bad integer '" + j.get<std::string>() + "'");
    }
    return v;
}

json rat(const Rational& r) {
    return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rat_from(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        malformed("expected {num, den}");
    }
    const Integer den = big_from(j.at("den"));
    if (den <= 0) {
        malformed("nonpositive denominator");
    }
    Rational r(big_from(j.at("num")), den);
    if (r.denominator() != den) {
        malformed("rational not in lowest terms");
    }
    return r;
}

template <typename T, typename F>
json opt(const std::optional<T>& v, F&& encode) {
    return v ? encode(*v) : json(nullptr);
}

template <typename F>
auto opt_from(const json& j, F&& decode) -> std::optional<decltype(decode(j))> {
    if (j.is_null()) {
        return std::nullopt;
    }
    return decode(j);
}

std::int64_t i64_from(const json& j) {
    if (!j.is_number_integer()) {
        malformed("expected integer");
    }
    return j.get<std::int64_t>();
}

json surface_json(const SurfaceInvariants& s) {
    auto self = [](std::int64_t v) { return json(v); };
    return {{"c1_sq", s.c1_sq}, {"c2", s.c2}, {"pg", opt(s.pg, self)}, {"q", opt(s.q, self)}};
}

SurfaceInvariants surface_from(const json& j) {
    return {i64_from(j.at("c1_sq")), i64_from(j.at("c2")), opt_from(j.at("pg"), i64_from),
            opt_from(j.at("q"), i64_from)};
}

Verdict verdict_from(const std::string& s) {
    for (auto v : {Verdict::GenericallyFinite, Verdict::Inconclusive, Verdict::VeroneseObstructed}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    malformed("unknown verdict '" + s + "'");
}

Route route_from(const std::string& s) {
    for (auto r : {Route::None, Route::DirectH0, Route::ChernInequality}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    malformed("unknown route '" + s + "'");
}

Family family_from(const std::string& s) {
    for (auto f : {Family::Abelian3foldDivisor, Family::Abelian4foldCI, Family::ProductQuotient}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    malformed("unknown family '" + s + "'");
}

struct ItemToJson {
    json operator()(const ChiResult& c) const {
        return {{"type", "chi"}, {"n", c.n}, {"surface", surface_json(c.surface)}, {"chi", rat(c.chi)}};
    }
    json operator()(const CriterionReport& r) const {
        return {{"type", "criterion"},
                {"n", r.n},
                {"chi", rat(r.chi)},
                {"h0_lower", opt(r.h0_lower, rat)},
                {"veronese_dim", big(r.veronese_dim)},
                {"theorem_b_holds", r.theorem_b_holds},
                {"q_of_n", rat(r.q_of_n)},
                {"deg_psi_upper", opt(r.deg_psi_upper, big)},
                {"verdict", std::string(to_string(r.verdict))},
                {"route", std::string(to_string(r.route))}};
    }
    json operator()(const ThresholdResult& t) const {
        json root = nullptr;
        if (t.root) {
            root = {{"lower", rat(t.root->lower)}, {"upper", rat(t.root->upper)}};
        }
        auto self = [](std::int64_t v) { return json(v); };
        return {{"type", "threshold"},  {"m", t.m},
                {"alpha", big(t.alpha)}, {"beta", big(t.beta)},
                {"gamma", big(t.gamma)}, {"delta", big(t.delta)},
                {"root", root},          {"min_n", opt(t.min_n, self)}};
    }
    json operator()(const FamilySurface& f) const {
        return {{"type", "family"},
                {"family", std::string(to_string(f.family))},
                {"surface", surface_json(f.invariants)},
                {"gg_period", f.gg_period},
                {"parameters", f.parameters},
                {"caveats", f.caveats}};
    }
};

ReportItem item_from(const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "chi") {
        return ChiResult{static_cast<int>(i64_from(j.at("n"))), surface_from(j.at("surface")),
                         rat_from(j.at("chi"))};
    }
    if (type == "criterion") {
        CriterionReport r;
        r.n = static_cast<int>(i64_from(j.at("n")));
        r.chi = rat_from(j.at("chi"));
        r.h0_lower = opt_from(j.at("h0_lower"), rat_from);
        r.veronese_dim = big_from(j.at("veronese_dim"));
        r.theorem_b_holds = j.at("theorem_b_holds").get<bool>();
        r.q_of_n = rat_from(j.at("q_of_n"));
        r.deg_psi_upper = opt_from(j.at("deg_psi_upper"), big_from);
        r.verdict = verdict_from(j.at("verdict").get<std::string>());
        r.route = route_from(j.at("route").get<std::string>());
        return r;
    }
    if (type == "threshold") {
        ThresholdResult t;
        t.m = i64_from(j.at("m"));
        t.alpha = big_from(j.at("alpha"));
        t.beta = big_from(j.at("beta"));
        t.gamma = big_from(j.at("gamma"));
        t.delta = big_from(j.at("delta"));
        if (!j.at("root").is_null()) {
            t.root = RootBracket{rat_from(j.at("root").at("lower")), rat_from(j.at("root").at("upper"))};
        }
        t.min_n = opt_from(j.at("min_n"), i64_from);
        return t;
    }
    if (type == "family") {
        FamilySurface f{family_from(j.at("family").get<std::string>()),
                        surface_from(j.at("surface")),
                        i64_from(j.at("gg_period")),
                        j.at("parameters").get<std::vector<std::int64_t>>(),
                        j.at("caveats").get<std::vector<std::string>>()};
        return f;
    }
    malformed("unknown result type '" + type + "'");
}

std::string exact_and_approx(const Rational& r) {
    return r.is_integer() ? r.str() : r.str() + "  (" + r.approx() + ")";
}

std::string optional_int(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "-";
}

struct ItemToText {
    std::ostream& os;

    void operator()(const ChiResult& c) const {
        os << "  - chi:\n"
           << "      n: " << c.n << '\n'
           << "      c1_sq: " << c.surface.c1_sq << '\n'
           << "      c2: " << c.surface.c2 << '\n'
           << "      chi_sym_cotangent: " << exact_and_approx(c.chi) << '\n';
    }
    void operator()(const CriterionReport& r) const {
        os << "  - criterion:\n"
           << "      n: " << r.n << '\n'
           << "      chi: " << exact_and_approx(r.chi) << '\n'
           << "      h0_lower: " << (r.h0_lower ? exact_and_approx(*r.h0_lower) : "-") << '\n'
           << "      veronese_dim: " << r.veronese_dim.get_str() << '\n'
           << "      theorem_b_holds: " << (r.theorem_b_holds ? "true" : "false") << '\n'
           << "      q_of_n: " << exact_and_approx(r.q_of_n) << '\n'
           << "      deg_psi_upper: " << (r.deg_psi_upper ? r.deg_psi_upper->get_str() : "-") << '\n'
           << "      verdict: " << to_string(r.verdict) << '\n'
           << "      route: " << to_string(r.route) << '\n';
        if (r.verdict == Verdict::GenericallyFinite) {
            os << "      note: exceptional locus of psi_n has dimension at most 1\n";
        }
    }
    void operator()(const ThresholdResult& t) const {
        os << "  - threshold:\n"
           << "      m: " << t.m << '\n'
           << "      alpha: " << t.alpha.get_str() << '\n'
           << "      beta: " << t.beta.get_str() << '\n'
           << "      gamma: " << t.gamma.get_str() << '\n'
           << "      delta: " << t.delta.get_str() << '\n';
        if (t.root) {
            os << "      root_lower: " << exact_and_approx(t.root->lower) << '\n'
               << "      root_upper: " << exact_and_approx(t.root->upper) << '\n';
        } else {
            os << "      root: none (delta < 0, Q(n) > 0 for all n)\n";
        }
        os << "      min_n: " << optional_int(t.min_n) << '\n';
    }
    void operator()(const FamilySurface& f) const {
        os << "  - family:\n"
           << "      name: " << to_string(f.family) << '\n'
           << "      parameters: [";
        for (std::size_t i = 0; i < f.parameters.size(); ++i) {
            os << (i ? ", " : "") << f.parameters[i];
        }
        os << "]\n"
           << "      c1_sq: " << f.invariants.c1_sq << '\n'
           << "      c2: " << f.invariants.c2 << '\n'
           << "      pg: " << optional_int(f.invariants.pg) << '\n'
           << "      q: " << optional_int(f.invariants.q) << '\n'
           << "      chi_O: " << exact_and_approx(f.invariants.chi_O()) << '\n'
           << "      segre: " << f.invariants.segre() << '\n'
           << "      gg_period: " << f.gg_period << '\n';
        for (const auto& c : f.caveats) {
            os << "      caveat: " << c << '\n';
        }
    }
};

}  // namespace

json to_json(const ReportDocument& doc) {
    json input = json::array();
    for (const auto& [k, v] : doc.input_echo) {
        input.push_back({{"key", k}, {"value", v}});
    }
    json results = json::array();
    for (const auto& item : doc.results) {
        results.push_back(std::visit(ItemToJson{}, item));
    }
    return {{"schema_version", doc.schema_version},
            {"command", doc.command},
            {"input", input},
            {"results", results},
            {"warnings", doc.warnings}};
}

ReportDocument report_from_json(const json& j) {
    try {
        ReportDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != kSchemaVersion) {
            malformed("unsupported schema_version " + doc.schema_version);
        }
        doc.command = j.at("command").get<std::string>();
        for (const auto& e : j.at("input")) {
            doc.input_echo.emplace_back(e.at("key").get<std::string>(), e.at("value").get<std::string>());
        }
        for (const auto& r : j.at("results")) {
            doc.results.push_back(item_from(r));
        }
        doc.warnings = j.at("warnings").get<std::vector<std::string>>();
        return doc;
    } catch (const json::exception& e) {
        malformed(e.what());
    }
}

std::string to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << "schema_version: " << doc.schema_version << '\n' << "command: " << doc.command << '\n';
    os << "input:\n";
    for (const auto& [k, v] : doc.input_echo) {
        os << "  " << k << ": " << v << '\n';
    }
    os << "results:\n";
    for (const auto& item : doc.results) {
        std::visit(ItemToText{os}, item);
    }
    os << "warnings:\n";
    for (const auto& w : doc.warnings) {
        os << "  - " << w << '\n';
    }
    return os.str();
}

}  // namespace plurichern
