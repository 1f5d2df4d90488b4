#include "tamecft/report.hpp"

#include <sstream>

#include "tamecft/error.hpp"
#include "tamecft/milnor.hpp"

namespace tamecft {

using nlohmann::json;

bool Report::all_pass() const
{
    for (const auto& c : certificates) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

Report full_report(const Instance& inst)
{
    Report r;
    r.normalization = std::string(reciprocity_normalization);
    r.p = inst.prime();
    r.m = inst.modulus();
    for (const auto& x : inst.points()) {
        r.points.push_back({x.to_string(), std::string(to_string(x.kind())), x.residue_degree(),
                            x.ramification_index(), x.degree(), x.residue_order(), x.wild_possible()});
    }
    const JtResult jt = jt_group(inst);
    r.jt = jt.group;
    r.jt_mod_m = jt.group.mod(static_cast<long>(inst.modulus()));
    r.prime_to_p_only = jt.prime_to_p_only;
    r.et_mod_m = et_group_mod_m(inst);

    const Gr0Result gr0 = gr0_reciprocity(inst);
    r.gr0 = {gr0.verdict.surjective, gr0.verdict.injective, gr0.verdict.isomorphism()};
    r.gr0_graded_cokernel_order = gr0.graded_cokernel_order;

    bool square = false;
    try {
        square = check_hilbert_square(inst);
        const Gr1Result gr1 = gr1_reciprocity(inst);
        r.gr1 = {gr1.verdict.surjective, gr1.verdict.injective, gr1.verdict.isomorphism()};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonCommutingSquare && e.kind() != ErrorKind::InternalInconsistency) {
            throw;
        }
        r.gr1 = {};
    }
    r.hilbert_square = square;

    r.certificates = {
        {"jt_order_prime_to_p", "J^t(X) is finite of order prime to p", jt.order_prime_to_p},
        {"jt_inclusion_row_agrees", "both presentations of J^t(X) have equal invariant factors",
         jt.inclusion_row_agrees},
        {"et_equals_jt_mod_m", "E^t(X)/m = J^t(X)/m: split exactness with uniquely divisible kernel",
         r.et_mod_m == r.jt_mod_m},
        {"gr1_surjective", "tame reciprocity E^t(X) -> J^t(X) is surjective mod m", r.gr1.surjective},
        {"gr1_injective", "graded tame reciprocity is injective mod m", r.gr1.injective},
        {"gr0_isomorphism", "local reciprocity Q_p^x/m -> G_k/m is an isomorphism", r.gr0.isomorphism},
        {"gr0_cokernel_finite", "graded cokernel of reciprocity is finite (trivial Albanese)",
         r.gr0_graded_cokernel_order == 1},
        {"hilbert_square", "Hilbert symbols commute with the base-to-point maps", square},
    };
    return r;
}

namespace {

json integer_to_json(const Integer& x)
{
    if (x.fits_slong_p()) {
        return x.get_si();
    }
    return x.get_str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    return Integer(static_cast<long>(j.get<std::int64_t>()));
}

json verdict_to_json(const VerdictReport& v)
{
    return {{"isomorphism", v.isomorphism}, {"surjective", v.surjective}, {"injective", v.injective}};
}

VerdictReport verdict_from_json(const json& j)
{
    return {j.at("surjective").get<bool>(), j.at("injective").get<bool>(), j.at("isomorphism").get<bool>()};
}

}  // namespace

json group_to_json(const FinAbGroup& g)
{
    json factors = json::array();
    for (const auto& d : g.factors) {
        factors.push_back(integer_to_json(d));
    }
    return {{"free_rank", g.free_rank}, {"factors", factors}};
}

FinAbGroup group_from_json(const json& j)
{
    FinAbGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& d : j.at("factors")) {
        g.factors.push_back(integer_from_json(d));
    }
    return g;
}

json to_json(const Report& r)
{
    json points = json::array();
    for (const auto& x : r.points) {
        points.push_back({{"point", x.point},
                          {"kind", x.kind},
                          {"f", x.f},
                          {"e", x.e},
                          {"n", x.n},
                          {"q", x.q},
                          {"wild_possible", x.wild_possible}});
    }
    json jt = group_to_json(r.jt);
    jt["prime_to_p_only"] = r.prime_to_p_only;
    jt["mod_m"] = group_to_json(r.jt_mod_m);
    json gr0 = verdict_to_json(r.gr0);
    gr0["graded_cokernel_order"] = integer_to_json(r.gr0_graded_cokernel_order);
    json certificates = json::array();
    for (const auto& c : r.certificates) {
        certificates.push_back({{"name", c.name}, {"certifies", c.certifies}, {"passed", c.passed}});
    }
    return {{"tool", {{"name", tool_name}, {"version", r.version}}},
            {"normalization", r.normalization},
            {"p", r.p},
            {"m", r.m},
            {"points", points},
            {"jt", jt},
            {"et_mod_m", group_to_json(r.et_mod_m)},
            {"gr0", gr0},
            {"gr1", verdict_to_json(r.gr1)},
            {"square_12_5", r.hilbert_square},
            {"certificates", certificates},
            {"all_pass", r.all_pass()}};
}

Report report_from_json(const json& j)
{
    Report r;
    r.version = j.at("tool").at("version").get<std::string>();
    r.normalization = j.at("normalization").get<std::string>();
    r.p = j.at("p").get<std::int64_t>();
    r.m = j.at("m").get<std::int64_t>();
    for (const auto& x : j.at("points")) {
        r.points.push_back({x.at("point").get<std::string>(), x.at("kind").get<std::string>(), x.at("f").get<int>(),
                            x.at("e").get<int>(), x.at("n").get<int>(), x.at("q").get<std::uint64_t>(),
                            x.at("wild_possible").get<bool>()});
    }
    r.jt = group_from_json(j.at("jt"));
    r.jt_mod_m = group_from_json(j.at("jt").at("mod_m"));
    r.prime_to_p_only = j.at("jt").at("prime_to_p_only").get<bool>();
    r.et_mod_m = group_from_json(j.at("et_mod_m"));
    r.gr0 = verdict_from_json(j.at("gr0"));
    r.gr0_graded_cokernel_order = integer_from_json(j.at("gr0").at("graded_cokernel_order"));
    r.gr1 = verdict_from_json(j.at("gr1"));
    r.hilbert_square = j.at("square_12_5").get<bool>();
    for (const auto& c : j.at("certificates")) {
        r.certificates.push_back(
            {c.at("name").get<std::string>(), c.at("certifies").get<std::string>(), c.at("passed").get<bool>()});
    }
    return r;
}

Instance instance_from_json(const json& j)
{
    try {
        const auto p = j.at("p").get<std::int64_t>();
        const auto m = j.at("m").get<std::int64_t>();
        const auto points = j.at("points").get<std::vector<std::string>>();
        return Instance::make(p, m, points);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInstance, std::string("malformed instance document: ") + e.what());
    }
}

json instance_to_json(const Instance& inst)
{
    json points = json::array();
    for (const auto& x : inst.points()) {
        points.push_back(x.to_string());
    }
    return {{"p", inst.prime()}, {"m", inst.modulus()}, {"points", points}};
}

std::string render_text(const Report& r)
{
    std::ostringstream out;
    out << "instance: p = " << r.p << ", m = " << r.m << "\n";
    out << "points:\n";
    for (const auto& x : r.points) {
        out << "  " << x.point << "  " << x.kind << "  f=" << x.f << " e=" << x.e << " q=" << x.q
            << (x.wild_possible ? "  (wild part not ruled out)" : "") << "\n";
    }
    const auto factors = [](const FinAbGroup& g) {
        std::ostringstream s;
        s << "[";
        for (std::size_t i = 0; i < g.factors.size(); ++i) {
            s << (i ? ", " : "") << g.factors[i].get_str();
        }
        s << "]";
        if (g.free_rank > 0) {
            s << " + Z^" << g.free_rank;
        }
        return s.str();
    };
    out << "J^t(X)         " << factors(r.jt) << (r.prime_to_p_only ? "  (prime-to-p part)" : "") << "\n";
    out << "J^t(X)/m       " << factors(r.jt_mod_m) << "\n";
    out << "E^t(X)/m       " << factors(r.et_mod_m) << "\n";
    out << "gr0 reciprocity " << (r.gr0.isomorphism ? "isomorphism" : "NOT an isomorphism") << "\n";
    out << "gr1 reciprocity " << (r.gr1.surjective ? "surjective" : "NOT surjective") << ", "
        << (r.gr1.injective ? "injective" : "NOT injective") << "\n";
    out << "Hilbert square " << (r.hilbert_square ? "commutes" : "DOES NOT COMMUTE") << "\n";
    out << "normalization: " << r.normalization << "\n";
    for (const auto& c : r.certificates) {
        out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.certifies << "\n";
    }
    return out.str();
}

}  // namespace tamecft
