#pragma once

#include <string>

#include "commat/grading.hpp"

namespace commat {

/// The stable space families whose homotopy groups this module computes.
/// BcomU/BcomO do not depend on n. Spin exposes pi_0 by its own formula,
/// pi_1 = 0, and delegates pi_k for k >= 2 to CnO.
enum class SpaceFamily { CnU, RepNU, CnO, RepNO, BcomU, BcomO, Spin };

SpaceFamily parse_space(const std::string& name);  // cnu, repu, cno, repo, bcomu, bcomo, spin
std::string space_name(SpaceFamily f);

/// The graded ko-module A(k): the k-th coefficient summand of the commuting
/// tuple spaces over the orthogonal group, window-computed.
struct AkModule {
    int k = 0;
    GradedAbGroup graded;
};

/// Closed-form evaluation, casewise in k mod 4, built from the Bott-pattern
/// groups of ko, its augmentation ideal I, and the ideal J = (eta^2, x, y)
/// (J agrees with I except in degree 1, where it vanishes).
FinAbGroup ak_formula_at(int k, int d);
AkModule ak_formula(int k, int d_lo, int d_hi);

/// Independent path: A(k)_d is the coefficient group in RO-degree d - k*sigma,
/// computed by canonical-monomial enumeration.
FinAbGroup ak_oracle_at(int k, int d);
AkModule ak_oracle(int k, int d_lo, int d_hi);

/// pi_k of the family at parameter n (ignored for BcomU/BcomO).
/// Throws InvalidParameter for n < 1 on the n-dependent families, or k < 0.
FinAbGroup pi_group(SpaceFamily family, int k, long long n = 1);

/// Coefficient-enumeration path for CnO and RepNO (direct sums of
/// kr_group_at / hz_group_at over binomial multiplicities); used to
/// cross-check the closed formulas.
FinAbGroup pi_group_oracle(SpaceFamily family, int k, long long n);

enum class TableFormat { Json, Csv, Markdown };
TableFormat parse_format(const std::string& name);

/// Rows k = 0..k_max, columns n = 1..n_max ascending (single column for the
/// n-independent families). Cells follow the render_group convention.
std::string render_table(SpaceFamily family, int k_max, long long n_max, TableFormat format);

/// Exact binomial coefficient as a rank (throws InvalidParameter on overflow).
long long binom_rank(long long n, long long k);

/// Whether the natural map pi_k(C_n(O)) -> pi_k(Rep_n(O)) is surjective.
/// It fails exactly when a coefficient summand contains a class outside the
/// image of the Postnikov map (an odd power of the orientation class u), so
/// the answer is computed by testing the canonical basis monomials summand
/// by summand.
bool postnikov_onto(int k, long long n);

}  // namespace commat
