#include "commat/grading.hpp"

namespace commat {

std::string render_group(const FinAbGroup& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    if (g.z2_rank > 0) {
        if (!out.empty()) out += " + ";
        if (g.z2_rank == 1)
            out += "Z/2";
        else
            out += "(Z/2)^" + std::to_string(g.z2_rank);
    }
    return out;
}

nlohmann::json to_json(const FinAbGroup& g) {
    return {{"free_rank", g.free_rank}, {"z2_rank", g.z2_rank}};
}

nlohmann::json to_json(const GradedAbGroup& g) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [d, grp] : g.support()) out[std::to_string(d)] = to_json(grp);
    return out;
}

GradedAbGroup direct_sum(std::span<const GradedAbGroup> xs) {
    GradedAbGroup out;
    for (const auto& x : xs)
        for (const auto& [d, g] : x.support()) out.add(d, g);
    return out;
}

GradedAbGroup direct_sum(std::initializer_list<GradedAbGroup> xs) {
    return direct_sum(std::span<const GradedAbGroup>(xs.begin(), xs.size()));
}

GradedAbGroup shift(const GradedAbGroup& g, int k) {
    GradedAbGroup out;
    for (const auto& [d, grp] : g.support()) out.set(d + k, grp);
    return out;
}

GradedAbGroup with_multiplicity(const GradedAbGroup& g, long long c) {
    if (c < 0) throw InvalidParameter("with_multiplicity: multiplicity must be non-negative");
    GradedAbGroup out;
    if (c == 0) return out;
    for (const auto& [d, grp] : g.support())
        out.set(d, FinAbGroup{grp.free_rank * c, grp.z2_rank * c});
    return out;
}

}  // namespace commat
