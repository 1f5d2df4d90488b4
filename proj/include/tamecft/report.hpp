#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamecft/abgroup.hpp"
#include "tamecft/tame_cft.hpp"

namespace tamecft {

inline constexpr std::string_view tool_name = "tamecft";
inline constexpr std::string_view tool_version = "0.1.0";

struct PointReport {
    std::string point;
    std::string kind;
    int f = 1;
    int e = 1;
    int n = 1;
    std::uint64_t q = 0;
    bool wild_possible = false;

    bool operator==(const PointReport&) const = default;
};

struct Certificate {
    std::string name;
    std::string certifies;
    bool passed = false;

    bool operator==(const Certificate&) const = default;
};

struct VerdictReport {
    bool surjective = false;
    bool injective = false;
    bool isomorphism = false;

    bool operator==(const VerdictReport&) const = default;
};

struct Report {
    std::string version{tool_version};
    std::string normalization;
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::vector<PointReport> points;
    FinAbGroup jt;
    FinAbGroup jt_mod_m;
    bool prime_to_p_only = false;
    FinAbGroup et_mod_m;
    VerdictReport gr0;
    Integer gr0_graded_cokernel_order;
    VerdictReport gr1;
    bool hilbert_square = false;
    std::vector<Certificate> certificates;

    bool all_pass() const;
    bool operator==(const Report&) const = default;
};

/// Runs every computation on the instance and collects the verdicts.
Report full_report(const Instance& inst);

nlohmann::json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// {"p":5,"m":4,"points":["inf","t","t-1"]}
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

std::string render_text(const Report& r);

}  // namespace tamecft
