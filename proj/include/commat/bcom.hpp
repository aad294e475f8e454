#pragma once

#include <map>
#include <string>

#include "commat/bigint.hpp"
#include "commat/kr.hpp"

namespace commat {

/// Monomial v^v_exp * y_{y_index} in the homology of CP^infinity with
/// ku coefficients; {y_i} is a free pi_*(ku)-basis and y_0 is the unit.
struct KuMonomial {
    long long y_index = 0;
    long long v_exp = 0;

    long long degree() const { return 2 * y_index + 2 * v_exp; }

    friend bool operator==(const KuMonomial& x, const KuMonomial& y) {
        return x.y_index == y.y_index && x.v_exp == y.v_exp;
    }
    friend bool operator<(const KuMonomial& x, const KuMonomial& y) {
        if (x.y_index != y.y_index) return x.y_index < y.y_index;
        return x.v_exp < y.v_exp;
    }
};

class KuElement {
public:
    KuElement() = default;

    static KuElement zero() { return {}; }
    static KuElement one() { return monomial({0, 0}, 1); }
    static KuElement monomial(const KuMonomial& m, Int coeff);
    static KuElement gen_v() { return monomial({0, 1}, 1); }
    static KuElement gen_y(long long k) { return monomial({k, 0}, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<KuMonomial, Int>& terms() const { return terms_; }

    void add_term(const KuMonomial& m, const Int& coeff);

    KuElement& operator+=(const KuElement& other);
    friend KuElement operator+(KuElement x, const KuElement& y) { return x += y; }
    friend KuElement operator*(const Int& c, const KuElement& x);

    friend bool operator==(const KuElement& x, const KuElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const KuElement& x, const KuElement& y) { return !(x == y); }

private:
    std::map<KuMonomial, Int> terms_;
};

/// y_k y_l = sum_{i=max(k,l)}^{k+l} i!/((i-k)!(i-l)!(k+l-i)!) v^{k+l-i} y_i.
KuElement ku_y_product(long long k, long long l);

KuElement ku_mul(const KuElement& x, const KuElement& y);

/// Independent check of ku_y_product: expands y(s)y(t) = y(s+t+vst) term by
/// term, truncated to total (s,t)-degree <= order, and reads off the
/// coefficient of s^k t^l. Throws OrderTooSmall when k+l > order.
KuElement series_oracle(long long k, long long l, long long order);

/// Formal sum of ybar_k with coefficients in the KR coefficient ring.
/// Index 0 is the unit class of the unital variant; the non-unital rings
/// are the sub-objects supported in indices >= 1 (closed under products).
class BcomElement {
public:
    BcomElement() = default;

    static BcomElement zero() { return {}; }
    static BcomElement one() { return from_term(0, KRElement::one()); }
    static BcomElement from_term(long long ybar_index, const KRElement& coeff);
    static BcomElement gen_ybar(long long k) { return from_term(k, KRElement::one()); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, KRElement>& terms() const { return terms_; }
    KRElement coefficient(long long ybar_index) const;

    void add_term(long long ybar_index, const KRElement& coeff);

    BcomElement& operator+=(const BcomElement& other);
    friend BcomElement operator+(BcomElement x, const BcomElement& y) { return x += y; }
    friend BcomElement operator*(const Int& c, const BcomElement& x);
    /// Scales by an element of the coefficient ring.
    friend BcomElement operator*(const KRElement& c, const BcomElement& x);

    friend bool operator==(const BcomElement& x, const BcomElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const BcomElement& x, const BcomElement& y) { return !(x == y); }

    /// True if every term alpha * ybar_k is a homogeneous KR class of
    /// RO-degree (d-k) + (-k)*sigma for one common total degree d.
    bool is_homogeneous() const;
    std::optional<long long> total_degree() const;

private:
    std::map<long long, KRElement> terms_;
};

/// Same coefficients as ku_y_product with v replaced by vb.
BcomElement bcom_y_product(long long k, long long l);

BcomElement bcom_mul(const BcomElement& x, const BcomElement& y);

/// Restriction to underlying non-equivariant classes:
/// a -> 0, vb -> v, w -> 2, U -> 1, ybar_i -> y_i.
KuElement restrict_to_ku(const BcomElement& x);

std::string render(const KuElement& x);
std::string render(const BcomElement& x);

/// Sorted lists of {"coeff", "v", "y"} resp. {"coeff", "a", "w", "U", "vb", "yb"}.
nlohmann::json to_json(const KuElement& x);
nlohmann::json to_json(const BcomElement& x);

}  // namespace commat
