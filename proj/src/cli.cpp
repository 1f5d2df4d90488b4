#include "tamecft/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamecft/error.hpp"
#include "tamecft/milnor.hpp"
#include "tamecft/report.hpp"
#include "tamecft/selftest.hpp"
#include "tamecft/tame_cft.hpp"

namespace tamecft::cli {

namespace {

using nlohmann::json;

struct CliConfig {
    std::string command;
    std::optional<std::int64_t> prime;
    std::optional<std::int64_t> modulus;
    std::string points;
    std::string instance_path;
    std::string f;
    std::string g;
    std::string a;
    std::string b;
    std::string point = "inf";
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::size_t size = 100;
    int precision = PAdicContext::default_precision;
};

std::vector<std::string> split_points(const std::string& s)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

Rational parse_rational(const std::string& text)
{
    const Poly p = parse_poly(text);
    if (p.degree() > 0) {
        throw Error(ErrorKind::ParseError, "expected a rational number, got \"" + text + "\"");
    }
    return p.coeff(0);
}

json tool_header()
{
    return {{"name", tool_name}, {"version", tool_version}};
}

std::int64_t default_modulus(std::int64_t p)
{
    return p > 2 ? p - 1 : 3;
}

Instance load_instance(const CliConfig& cfg)
{
    if (!cfg.instance_path.empty()) {
        std::ifstream in(cfg.instance_path);
        if (!in) {
            throw Error(ErrorKind::InvalidInstance, "cannot open instance file " + cfg.instance_path);
        }
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::InvalidInstance, std::string("instance file is not valid JSON: ") + e.what());
        }
        if (cfg.modulus && !doc.contains("m")) {
            doc["m"] = *cfg.modulus;
        }
        if (!doc.contains("m") && doc.contains("p") && doc["p"].is_number_integer()) {
            doc["m"] = default_modulus(doc["p"].get<std::int64_t>());
        }
        return instance_from_json(doc);
    }
    if (!cfg.prime) {
        throw Error(ErrorKind::InvalidInstance, "either --instance or --prime is required");
    }
    if (cfg.points.empty()) {
        throw Error(ErrorKind::InvalidInstance, "--points is required (comma separated, must include inf)");
    }
    return Instance::make(*cfg.prime, cfg.modulus.value_or(default_modulus(*cfg.prime)), split_points(cfg.points));
}

std::string factor_list(const FinAbGroup& g)
{
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        s << (i ? ", " : "") << g.factors[i].get_str();
    }
    s << "]";
    return s.str();
}

int cmd_jt(const CliConfig& cfg, std::ostream& out)
{
    const Instance inst = load_instance(cfg);
    const JtResult jt = jt_group(inst);
    const FinAbGroup mod_m = jt.group.mod(static_cast<long>(inst.modulus()));
    const bool ok = jt.order_prime_to_p && jt.inclusion_row_agrees;
    if (cfg.format == "json") {
        json j = {{"tool", tool_header()},
                  {"normalization", reciprocity_normalization},
                  {"instance", instance_to_json(inst)},
                  {"jt", group_to_json(jt.group)},
                  {"jt_mod_m", group_to_json(mod_m)},
                  {"certificates",
                   {{"prime_to_p_only", jt.prime_to_p_only},
                    {"order_prime_to_p", jt.order_prime_to_p},
                    {"inclusion_row_agrees", jt.inclusion_row_agrees}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "J^t(X)    invariant factors " << factor_list(jt.group)
            << (jt.prime_to_p_only ? "  (prime-to-p part only)" : "") << "\n";
        out << "J^t(X)/" << inst.modulus() << "  invariant factors " << factor_list(mod_m) << "\n";
        out << "order " << jt.group.order().get_str() << (jt.order_prime_to_p ? " (prime to p)" : " (NOT prime to p)")
            << "\n";
    }
    return ok ? exit_ok : exit_verdict_failed;
}

int cmd_et(const CliConfig& cfg, std::ostream& out)
{
    const Instance inst = load_instance(cfg);
    const FinAbGroup et = et_group_mod_m(inst);
    if (cfg.format == "json") {
        out << json{{"tool", tool_header()},
                    {"normalization", reciprocity_normalization},
                    {"instance", instance_to_json(inst)},
                    {"et_mod_m", group_to_json(et)}}
                   .dump(2)
            << "\n";
    } else {
        out << "E^t(X)/" << inst.modulus() << "  invariant factors " << factor_list(et) << "\n";
    }
    return exit_ok;
}

int cmd_recip(const CliConfig& cfg, std::ostream& out)
{
    const Instance inst = load_instance(cfg);
    const Gr0Result gr0 = gr0_reciprocity(inst);
    const Gr1Result gr1 = gr1_reciprocity(inst);
    const bool square = check_hilbert_square(inst);
    const bool ok = gr0.verdict.isomorphism() && gr1.verdict.isomorphism() && square;
    if (cfg.format == "json") {
        out << json{{"tool", tool_header()},
                    {"normalization", reciprocity_normalization},
                    {"instance", instance_to_json(inst)},
                    {"gr0",
                     {{"source", group_to_json(gr0.map.source_group())},
                      {"isomorphism", gr0.verdict.isomorphism()},
                      {"graded_cokernel_order", gr0.graded_cokernel_order.get_str()}}},
                    {"gr1",
                     {{"source", group_to_json(gr1.map.source_group())},
                      {"target", group_to_json(gr1.map.target_group())},
                      {"surjective", gr1.verdict.surjective},
                      {"injective", gr1.verdict.injective}}},
                    {"square_12_5", square}}
                   .dump(2)
            << "\n";
    } else {
        out << "gr0: " << gr0.map.source_group().to_string() << " -> " << gr0.map.target_group().to_string() << "  "
            << (gr0.verdict.isomorphism() ? "isomorphism" : "NOT an isomorphism")
            << ", graded cokernel order " << gr0.graded_cokernel_order.get_str() << "\n";
        out << "gr1: " << gr1.map.source_group().to_string() << " -> " << gr1.map.target_group().to_string() << "  "
            << (gr1.verdict.surjective ? "surjective" : "NOT surjective") << ", "
            << (gr1.verdict.injective ? "injective" : "NOT injective") << "\n";
        out << "Hilbert square " << (square ? "commutes" : "DOES NOT COMMUTE") << "\n";
    }
    return ok ? exit_ok : exit_verdict_failed;
}

int cmd_weil(const CliConfig& cfg, std::ostream& out)
{
    if (cfg.f.empty() || cfg.g.empty()) {
        throw Error(ErrorKind::ParseError, "weil needs --f and --g");
    }
    const RatFunc f = RatFunc::parse(cfg.f);
    const RatFunc g = RatFunc::parse(cfg.g);
    const WeilReport report = weil_check(f, g);
    if (cfg.format == "json") {
        json points = json::array();
        for (const auto& v : report.per_point) {
            points.push_back({{"point", v.place.to_string()}, {"value", v.value.get_str()}});
        }
        out << json{{"tool", tool_header()},
                    {"f", f.to_string()},
                    {"g", g.to_string()},
                    {"product", report.product.get_str()},
                    {"ok", report.ok},
                    {"per_point", points}}
                   .dump(2)
            << "\n";
    } else {
        out << "f = " << f.to_string() << "\n" << "g = " << g.to_string() << "\n";
        for (const auto& v : report.per_point) {
            out << "  N d_x{f,g} at " << v.place.to_string() << " = " << v.value.get_str() << "\n";
        }
        out << "product " << report.product.get_str() << (report.ok ? "  (reciprocity holds)" : "  (VIOLATED)")
            << "\n";
    }
    return report.ok ? exit_ok : exit_verdict_failed;
}

int cmd_hilbert(const CliConfig& cfg, std::ostream& out)
{
    if (!cfg.prime) {
        throw Error(ErrorKind::InvalidInstance, "hilbert needs --prime");
    }
    if (cfg.a.empty() || cfg.b.empty()) {
        throw Error(ErrorKind::ParseError, "hilbert needs --a and --b");
    }
    const std::int64_t p = *cfg.prime;
    const std::int64_t m = cfg.modulus.value_or(default_modulus(p));
    const ClosedPoint x = classify_point(cfg.point, p);
    const Rational a = parse_rational(cfg.a);
    const Rational b = parse_rational(cfg.b);
    const std::int64_t value = tame_hilbert(a, b, x, m);
    const std::int64_t d = x.tame_modulus(m);
    if (cfg.format == "json") {
        out << json{{"tool", tool_header()},
                    {"p", p},
                    {"m", m},
                    {"point", x.to_string()},
                    {"a", a.get_str()},
                    {"b", b.get_str()},
                    {"class", value},
                    {"group", group_to_json(FinAbGroup::cyclic(static_cast<long>(d)))}}
                   .dump(2)
            << "\n";
    } else {
        out << "(" << a.get_str() << ", " << b.get_str() << ") at " << x.to_string() << " over Q_" << p
            << ": class " << value << " in Z/" << d << "\n";
    }
    return exit_ok;
}

int cmd_report(const CliConfig& cfg, std::ostream& out)
{
    const Report r = full_report(load_instance(cfg));
    if (cfg.format == "json") {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << render_text(r);
    }
    return r.all_pass() ? exit_ok : exit_verdict_failed;
}

int cmd_selftest(const CliConfig& cfg, std::ostream& out)
{
    std::uint64_t seed = default_selftest_seed;
    if (cfg.seed) {
        seed = *cfg.seed;
    } else if (const char* env = std::getenv("TAMECFT_SEED"); env != nullptr && *env != '\0') {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "TAMECFT_SEED is not an unsigned integer");
        }
    }
    const SelftestSummary summary = run_selftest(seed, cfg.size, cfg.precision);
    if (cfg.format == "json") {
        json suites = json::array();
        for (const auto& s : summary.suites) {
            suites.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
        }
        out << json{{"tool", tool_header()}, {"seed", seed}, {"suites", suites}, {"ok", summary.ok()}}.dump(2)
            << "\n";
    } else {
        out << summary.transcript;
        out << (summary.ok() ? "all suites pass" : "FAILURES") << "\n";
    }
    return summary.ok() ? exit_ok : exit_verdict_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact tame class field theory invariants of punctured projective lines over Q_p", "tamecft"};
    app.require_subcommand(1, 1);
    CliConfig cfg;

    const auto add_instance_flags = [&cfg](CLI::App* sub) {
        sub->add_option("--prime,-p", cfg.prime, "the prime p");
        sub->add_option("--modulus,-m", cfg.modulus, "coefficient modulus m, prime to p (default p-1, or 3 for p=2)");
        sub->add_option("--points", cfg.points, "comma separated points of S, e.g. inf,t,t-1");
        sub->add_option("--instance", cfg.instance_path, "instance file {\"p\":5,\"m\":4,\"points\":[...]}");
    };
    const auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"jt", "invariant factors of J^t(X)"},
             {"et", "invariant factors of E^t(X)/m"},
             {"recip", "graded reciprocity verdicts"},
             {"report", "full report with certificates"}}) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_instance_flags(sub);
        add_format(sub);
    }

    CLI::App* weil = app.add_subcommand("weil", "check Weil reciprocity for a pair of rational functions");
    weil->add_option("--f", cfg.f, "rational function, e.g. \"2 * (t-1)^2 * (t^2+2)^-1\"")->required();
    weil->add_option("--g", cfg.g, "rational function")->required();
    weil->add_option("--prime,-p", cfg.prime, "accepted for symmetry with other commands");
    add_format(weil);

    CLI::App* hilbert = app.add_subcommand("hilbert", "tame Hilbert symbol of two rationals");
    hilbert->add_option("--prime,-p", cfg.prime, "the prime p")->required();
    hilbert->add_option("--modulus,-m", cfg.modulus, "modulus m prime to p");
    hilbert->add_option("--a", cfg.a, "first argument (rational)")->required();
    hilbert->add_option("--b", cfg.b, "second argument (rational)")->required();
    hilbert->add_option("--point", cfg.point, "closed point whose residue field is used (default inf = Q_p)");
    add_format(hilbert);

    CLI::App* selftest = app.add_subcommand("selftest", "randomised property suites");
    selftest->add_option("--seed", cfg.seed, "seed (falls back to TAMECFT_SEED)");
    selftest->add_option("--size", cfg.size, "cases per suite");
    selftest->add_option("--precision", cfg.precision, "p-adic precision for the unit suite")
        ->check(CLI::Range(1, 200));
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        if (command == "jt") {
            return cmd_jt(cfg, out);
        }
        if (command == "et") {
            return cmd_et(cfg, out);
        }
        if (command == "recip") {
            return cmd_recip(cfg, out);
        }
        if (command == "weil") {
            return cmd_weil(cfg, out);
        }
        if (command == "hilbert") {
            return cmd_hilbert(cfg, out);
        }
        if (command == "report") {
            return cmd_report(cfg, out);
        }
        return cmd_selftest(cfg, out);
    } catch (const Error& e) {
        err << "tamecft: " << e.what() << "\n";
        if (e.kind() == ErrorKind::InternalInconsistency || e.kind() == ErrorKind::NonCommutingSquare) {
            return exit_verdict_failed;
        }
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "tamecft: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

}  // namespace tamecft::cli
