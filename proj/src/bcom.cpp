#include "commat/bcom.hpp"

#include <algorithm>
#include <vector>

namespace commat {

KuElement KuElement::monomial(const KuMonomial& m, Int coeff) {
    KuElement e;
    e.add_term(m, coeff);
    return e;
}

void KuElement::add_term(const KuMonomial& m, const Int& coeff) {
    if (coeff == 0) return;
    if (m.y_index < 0 || m.v_exp < 0) throw InvalidParameter("KuElement: negative exponent");
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

KuElement& KuElement::operator+=(const KuElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

KuElement operator*(const Int& c, const KuElement& x) {
    KuElement out;
    for (const auto& [m, co] : x.terms()) out.add_term(m, c * co);
    return out;
}

KuElement ku_y_product(long long k, long long l) {
    if (k < 0 || l < 0) throw InvalidParameter("ku_y_product: negative index");
    KuElement out;
    for (long long i = std::max(k, l); i <= k + l; ++i)
        out.add_term({i, k + l - i}, y_product_coefficient(k, l, i));
    return out;
}

KuElement ku_mul(const KuElement& x, const KuElement& y) {
    KuElement out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            KuElement base = ku_y_product(mx.y_index, my.y_index);
            Int c = cx * cy;
            for (const auto& [mb, cb] : base.terms())
                out.add_term({mb.y_index, mb.v_exp + mx.v_exp + my.v_exp}, c * cb);
        }
    return out;
}

namespace {

// Truncated polynomial in s, t whose coefficients are polynomials in v:
// (s_deg, t_deg) -> (v_exp -> coefficient).
using STPoly = std::map<std::pair<long long, long long>, std::map<long long, Int>>;

STPoly st_mul(const STPoly& x, const STPoly& y, long long order) {
    STPoly out;
    for (const auto& [dx, px] : x)
        for (const auto& [dy, py] : y) {
            long long s = dx.first + dy.first, t = dx.second + dy.second;
            if (s + t > order) continue;
            auto& target = out[{s, t}];
            for (const auto& [vx, cx] : px)
                for (const auto& [vy, cy] : py) target[vx + vy] += cx * cy;
        }
    return out;
}

}  // namespace

KuElement series_oracle(long long k, long long l, long long order) {
    if (k < 0 || l < 0 || order < 1) throw InvalidParameter("series_oracle: bad arguments");
    if (k + l > order) throw OrderTooSmall("series_oracle: order < k + l");
    // arg = s + t + v s t
    STPoly arg;
    arg[{1, 0}][0] = 1;
    arg[{0, 1}][0] = 1;
    arg[{1, 1}][1] = 1;
    KuElement out;
    STPoly power;  // arg^i, starting at i = 0
    power[{0, 0}][0] = 1;
    for (long long i = 0; i <= order; ++i) {
        if (i > 0) power = st_mul(power, arg, order);
        auto it = power.find({k, l});
        if (it == power.end()) continue;
        for (const auto& [v_exp, c] : it->second) out.add_term({i, v_exp}, c);
    }
    return out;
}

BcomElement BcomElement::from_term(long long ybar_index, const KRElement& coeff) {
    BcomElement e;
    e.add_term(ybar_index, coeff);
    return e;
}

KRElement BcomElement::coefficient(long long ybar_index) const {
    auto it = terms_.find(ybar_index);
    return it == terms_.end() ? KRElement::zero() : it->second;
}

void BcomElement::add_term(long long ybar_index, const KRElement& coeff) {
    if (coeff.is_zero()) return;
    if (ybar_index < 0) throw InvalidParameter("BcomElement: negative ybar index");
    auto [it, inserted] = terms_.try_emplace(ybar_index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BcomElement& BcomElement::operator+=(const BcomElement& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

BcomElement operator*(const Int& c, const BcomElement& x) {
    BcomElement out;
    for (const auto& [k, co] : x.terms()) out.add_term(k, c * co);
    return out;
}

BcomElement operator*(const KRElement& c, const BcomElement& x) {
    BcomElement out;
    for (const auto& [k, co] : x.terms()) out.add_term(k, kr_mul(c, co));
    return out;
}

bool BcomElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::optional<long long> total;
    for (const auto& [k, alpha] : terms_) {
        auto d = alpha.degree();
        if (!d) return false;
        if (d->q != -k) return false;
        long long dk = d->p + k;
        if (total && *total != dk) return false;
        total = dk;
    }
    return true;
}

std::optional<long long> BcomElement::total_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    auto d = terms_.begin()->second.degree();
    return d->p + terms_.begin()->first;
}

BcomElement bcom_y_product(long long k, long long l) {
    if (k < 0 || l < 0) throw InvalidParameter("bcom_y_product: negative index");
    BcomElement out;
    for (long long i = std::max(k, l); i <= k + l; ++i) {
        KRMonomial vb_pow{.v_exp = static_cast<int>(k + l - i)};
        out.add_term(i, KRElement::monomial(vb_pow, y_product_coefficient(k, l, i)));
    }
    return out;
}

BcomElement bcom_mul(const BcomElement& x, const BcomElement& y) {
    BcomElement out;
    for (const auto& [k, alpha] : x.terms())
        for (const auto& [l, beta] : y.terms()) {
            KRElement ab = kr_mul(alpha, beta);
            for (long long i = std::max(k, l); i <= k + l; ++i) {
                KRMonomial vb_pow{.v_exp = static_cast<int>(k + l - i)};
                KRElement m_ikl = kr_mul(ab, KRElement::monomial(vb_pow, 1));
                out.add_term(i, y_product_coefficient(k, l, i) * m_ikl);
            }
        }
    return out;
}

KuElement restrict_to_ku(const BcomElement& x) {
    KuElement out;
    for (const auto& [k, alpha] : x.terms())
        for (const auto& [m, c] : alpha.terms()) {
            if (m.a_exp >= 1) continue;  // the Euler class restricts to 0
            Int coeff = c;
            for (int i = 0; i < m.w_exp; ++i) coeff *= 2;  // w -> 2, U -> 1
            out.add_term({k, m.v_exp}, coeff);
        }
    return out;
}

nlohmann::json to_json(const KuElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : x.terms())
        out.push_back({{"coeff", coeff_json(c)}, {"v", m.v_exp}, {"y", m.y_index}});
    return out;
}

nlohmann::json to_json(const BcomElement& x) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, alpha] : x.terms())
        for (const auto& [m, c] : alpha.terms())
            out.push_back({{"coeff", coeff_json(c)},
                           {"a", m.a_exp},
                           {"w", m.w_exp},
                           {"U", m.u_cap_exp},
                           {"vb", m.v_exp},
                           {"yb", k}});
    return out;
}

std::string render(const KuElement& x) {
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
        if (m.v_exp == 1)
            factors.push_back("v");
        else if (m.v_exp > 1)
            factors.push_back("v^" + std::to_string(m.v_exp));
        if (m.y_index > 0) factors.push_back("y" + std::to_string(m.y_index));
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

std::string render(const BcomElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, alpha] : x.terms()) {
        for (const auto& [m, c] : alpha.terms()) {
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
            if (k > 0) factors.push_back("yb" + std::to_string(k));
            std::string term;
            if (abs_c != 1 || factors.empty()) term = abs_c.str();
            for (const auto& f : factors) {
                if (!term.empty()) term += "*";
                term += f;
            }
            out += term;
        }
    }
    return out;
}

}  // namespace commat
