#include "commat/kr.hpp"

#include <vector>

namespace commat {

namespace {

Int mod2(const Int& c) { return ((c % 2) + 2) % 2; }

// Rewrites a raw exponent vector to canonical form, scaling coeff. Returns
// false when the monomial dies (aw = 0, a^3 vb = 0, or coefficient 0).
// Order: kill a&w, rewrite w^j -> 4^(j/2) U^(j/2) w^(j%2), kill a^3 vb,
// reduce coefficient mod 2 in the torsion part.
bool reduce(KRMonomial& m, Int& coeff) {
    if (coeff == 0) return false;
    if (m.a_exp >= 1 && m.w_exp >= 1) return false;
    if (m.w_exp >= 2) {
        int half = m.w_exp / 2;
        for (int i = 0; i < half; ++i) coeff *= 4;
        m.u_cap_exp += half;
        m.w_exp %= 2;
    }
    if (m.a_exp >= 3 && m.v_exp >= 1) return false;
    if (m.a_exp >= 1) {
        coeff = mod2(coeff);
        if (coeff == 0) return false;
    }
    return true;
}

}  // namespace

KRElement KRElement::monomial(const KRMonomial& m, Int coeff) {
    KRElement e;
    e.add_term(m, std::move(coeff));
    return e;
}

void KRElement::add_term(KRMonomial m, Int coeff) {
    if (!reduce(m, coeff)) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (m.is_torsion()) it->second = mod2(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

KRElement& KRElement::operator+=(const KRElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

KRElement operator*(const Int& c, const KRElement& x) {
    KRElement out;
    for (const auto& [m, co] : x.terms_) out.add_term(m, c * co);
    return out;
}

bool KRElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    RODegree d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::optional<RODegree> KRElement::degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
}

KRElement kr_mul(const KRElement& x, const KRElement& y) {
    KRElement out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            KRMonomial m{mx.a_exp + my.a_exp, mx.w_exp + my.w_exp,
                         mx.u_cap_exp + my.u_cap_exp, mx.v_exp + my.v_exp};
            out.add_term(m, cx * cy);
        }
    return out;
}

KRElement kr_pow(const KRElement& x, int e) {
    KRElement out = KRElement::one();
    for (int i = 0; i < e; ++i) out = kr_mul(out, x);
    return out;
}

FinAbGroup kr_group_at(RODegree d) {
    if (d.p < d.q) throw OutOfRegion("kr_group_at: degree has p < q");
    long long free_rank = 0, z2_rank = 0;
    // Enumerate canonical monomials of degree exactly d: p determines
    // (m, e, c) via m = p - 2e - 4c, and then q forces i.
    for (int e = 0; e <= 1; ++e) {
        for (int c = 0; 2 * e + 4 * c <= d.p; ++c) {
            int m = d.p - 2 * e - 4 * c;
            int i = m - 2 * e - 4 * c - d.q;
            if (i < 0) continue;
            if (i >= 1 && e >= 1) continue;       // aw = 0
            if (i >= 3 && m >= 1) continue;       // a^3 vb = 0
            if (i == 0)
                ++free_rank;
            else
                ++z2_rank;
        }
    }
    return {free_rank, z2_rank};
}

FinAbGroup ko_group(int d) {
    if (d < 0) return {};
    return kr_group_at({d, 0});
}

nlohmann::json to_json(const KRElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back({{"coeff", coeff_json(c)},
                       {"a", m.a_exp},
                       {"w", m.w_exp},
                       {"U", m.u_cap_exp},
                       {"vb", m.v_exp}});
    return out;
}

std::string render(const KRElement& x) {
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
        emit("w", m.w_exp);
        emit("U", m.u_cap_exp);
        emit("vb", m.v_exp);
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
