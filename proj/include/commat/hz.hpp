#pragma once

#include <map>
#include <string>

#include "commat/bigint.hpp"
#include "commat/grading.hpp"
#include "commat/kr.hpp"

namespace commat {

/// Canonical monomial a^i u^c in the region p >= q of the RO(C_2)-graded
/// coefficients of the integral Eilenberg-MacLane spectrum of the constant
/// Mackey functor. Generators: a in degree (0,-1), u in degree (2,-2).
/// The only relation is 2a = 0.
struct HZMonomial {
    int a_exp = 0;
    int u_exp = 0;

    RODegree degree() const { return {2 * u_exp, -a_exp - 2 * u_exp}; }
    bool is_torsion() const { return a_exp >= 1; }

    friend bool operator==(const HZMonomial& x, const HZMonomial& y) {
        return x.a_exp == y.a_exp && x.u_exp == y.u_exp;
    }
    friend bool operator<(const HZMonomial& x, const HZMonomial& y) {
        if (x.a_exp != y.a_exp) return x.a_exp < y.a_exp;
        return x.u_exp < y.u_exp;
    }
};

class HZElement {
public:
    HZElement() = default;

    static HZElement zero() { return {}; }
    static HZElement one() { return monomial({}, 1); }
    static HZElement monomial(const HZMonomial& m, Int coeff);
    static HZElement gen_a() { return monomial({.a_exp = 1}, 1); }
    static HZElement gen_u() { return monomial({.u_exp = 1}, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<HZMonomial, Int>& terms() const { return terms_; }

    void add_term(HZMonomial m, Int coeff);

    HZElement& operator+=(const HZElement& other);
    friend HZElement operator+(HZElement x, const HZElement& y) { return x += y; }
    friend HZElement operator*(const Int& c, const HZElement& x);

    friend bool operator==(const HZElement& x, const HZElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const HZElement& x, const HZElement& y) { return !(x == y); }

private:
    std::map<HZMonomial, Int> terms_;
};

HZElement hz_mul(const HZElement& x, const HZElement& y);

/// Additive group at degree d by monomial count. Throws OutOfRegion for p < q.
FinAbGroup hz_group_at(RODegree d);

/// Postnikov-section ring map: a -> a, vb -> 0, w -> 2u, U -> u^2.
HZElement postnikov(const KRElement& x);

/// True iff x lies in the image of the Postnikov map. The image misses u
/// itself (only 2u is hit) and every torsion class a^i u^c with c odd.
bool is_in_postnikov_image(const HZElement& x);

std::string render(const HZElement& x);

/// Sorted list of {"coeff": c, "a": i, "u": c2}.
nlohmann::json to_json(const HZElement& x);

}  // namespace commat
