#include "commat/hz.hpp"

#include <vector>

namespace commat {

namespace {
Int mod2(const Int& c) { return ((c % 2) + 2) % 2; }
}

HZElement HZElement::monomial(const HZMonomial& m, Int coeff) {
    HZElement e;
    e.add_term(m, std::move(coeff));
    return e;
}

void HZElement::add_term(HZMonomial m, Int coeff) {
    if (m.is_torsion()) coeff = mod2(coeff);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (m.is_torsion()) it->second = mod2(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

HZElement& HZElement::operator+=(const HZElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

HZElement operator*(const Int& c, const HZElement& x) {
    HZElement out;
    for (const auto& [m, co] : x.terms()) out.add_term(m, c * co);
    return out;
}

HZElement hz_mul(const HZElement& x, const HZElement& y) {
    HZElement out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            out.add_term({mx.a_exp + my.a_exp, mx.u_exp + my.u_exp}, cx * cy);
    return out;
}

FinAbGroup hz_group_at(RODegree d) {
    if (d.p < d.q) throw OutOfRegion("hz_group_at: degree has p < q");
    long long free_rank = 0, z2_rank = 0;
    for (int c = 0; 2 * c <= d.p; ++c) {
        if (2 * c != d.p) continue;
        int i = -d.q - 2 * c;
        if (i < 0) continue;
        if (i == 0)
            ++free_rank;
        else
            ++z2_rank;
    }
    return {free_rank, z2_rank};
}

HZElement postnikov(const KRElement& x) {
    HZElement out;
    for (const auto& [m, c] : x.terms()) {
        if (m.v_exp >= 1) continue;  // vb -> 0
        Int coeff = c;
        for (int i = 0; i < m.w_exp; ++i) coeff *= 2;  // w -> 2u
        out.add_term({m.a_exp, m.w_exp + 2 * m.u_cap_exp}, coeff);
    }
    return out;
}

bool is_in_postnikov_image(const HZElement& x) {
    for (const auto& [m, c] : x.terms()) {
        if (m.u_exp % 2 == 0) continue;  // u^even and a^i u^even are hit
        if (m.is_torsion()) return false;     // a^i u^odd is not in the image
        if (mod2(c) != 0) return false;       // only 2 * u^odd is hit
    }
    return true;
}

nlohmann::json to_json(const HZElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back({{"coeff", coeff_json(c)}, {"a", m.a_exp}, {"u", m.u_exp}});
    return out;
}

std::string render(const HZElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::vector<std::string> factors;
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            factors.push_back(exp == 1 ? std::string(name)
                                       : std::string(name) + "^" + std::to_string(exp));
        };
        emit("a", m.a_exp);
        emit("u", m.u_exp);
        std::string term;
        if (abs_c != 1 || factors.empty()) term = abs_c.str();
        for (const auto& f : factors) {
            if (!term.empty()) term += "*";
            term += f;
        }
        out += term;
    }
    return out;
}

}  // namespace commat
