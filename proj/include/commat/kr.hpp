#pragma once

#include <map>
#include <optional>
#include <string>

#include "commat/bigint.hpp"
#include "commat/grading.hpp"

namespace commat {

/// Canonical monomial a^i w^e U^c vb^m in the subring of the RO(C_2)-graded
/// coefficients of connective Real K-theory on the region p >= q.
///
/// Generators (degree p + q*sigma):
///   vb (Bott class)  : (1, 1)
///   a  (Euler class) : (0, -1)
///   w                : (2, -2)
///   U                : (4, -4)
/// Relations: 2a = 0, aw = 0, a^3 vb = 0, w^2 = 4U.
///
/// Canonical form: w_exp <= 1, never both a and w, never a^3 together with
/// vb. Coefficients of monomials with a_exp >= 1 are reduced mod 2.
struct KRMonomial {
    int a_exp = 0;
    int w_exp = 0;
    int u_cap_exp = 0;
    int v_exp = 0;

    RODegree degree() const {
        int p = v_exp + 2 * w_exp + 4 * u_cap_exp;
        int q = v_exp - a_exp - 2 * w_exp - 4 * u_cap_exp;
        return {p, q};
    }

    bool is_torsion() const { return a_exp >= 1; }

    friend bool operator==(const KRMonomial& x, const KRMonomial& y) {
        return x.a_exp == y.a_exp && x.w_exp == y.w_exp && x.u_cap_exp == y.u_cap_exp &&
               x.v_exp == y.v_exp;
    }
    friend bool operator<(const KRMonomial& x, const KRMonomial& y) {
        if (x.a_exp != y.a_exp) return x.a_exp < y.a_exp;
        if (x.w_exp != y.w_exp) return x.w_exp < y.w_exp;
        if (x.u_cap_exp != y.u_cap_exp) return x.u_cap_exp < y.u_cap_exp;
        return x.v_exp < y.v_exp;
    }
};

/// Integer linear combination of canonical KR monomials. The empty sum is
/// zero; stored coefficients are never zero, and torsion coefficients are 1.
class KRElement {
public:
    KRElement() = default;

    static KRElement zero() { return {}; }
    static KRElement one() { return monomial({}, 1); }

    /// Reduces (mono, coeff) to canonical form and returns it as an element.
    static KRElement monomial(const KRMonomial& m, Int coeff);

    static KRElement gen_a() { return monomial({.a_exp = 1}, 1); }
    static KRElement gen_w() { return monomial({.w_exp = 1}, 1); }
    static KRElement gen_u_cap() { return monomial({.u_cap_exp = 1}, 1); }
    static KRElement gen_vb() { return monomial({.v_exp = 1}, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<KRMonomial, Int>& terms() const { return terms_; }

    /// Adds coeff * mono, canonicalizing (merges, reduces, drops zeros).
    void add_term(KRMonomial m, Int coeff);

    KRElement& operator+=(const KRElement& other);
    friend KRElement operator+(KRElement x, const KRElement& y) { return x += y; }
    friend KRElement operator*(const Int& c, const KRElement& x);

    friend bool operator==(const KRElement& x, const KRElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const KRElement& x, const KRElement& y) { return !(x == y); }

    /// True if every term has the same RO-degree (vacuously true for zero).
    bool is_homogeneous() const;
    std::optional<RODegree> degree() const;  // degree of a homogeneous element

private:
    std::map<KRMonomial, Int> terms_;
};

KRElement kr_mul(const KRElement& x, const KRElement& y);
KRElement kr_pow(const KRElement& x, int e);

/// Additive group at degree d, by enumerating canonical monomials: free rank
/// counts monomials with a_exp = 0, Z/2 rank those with a_exp >= 1.
/// Throws OutOfRegion when d.p < d.q.
FinAbGroup kr_group_at(RODegree d);

/// pi_d(ko) = kr_group_at({d, 0}); zero for d < 0. Follows the period-8
/// pattern Z, Z/2, Z/2, 0, Z, 0, 0, 0.
FinAbGroup ko_group(int d);

std::string render(const KRElement& x);

/// Sorted list of {"coeff": c, "a": i, "w": e, "U": c2, "vb": m}.
nlohmann::json to_json(const KRElement& x);

}  // namespace commat
