#include "commat/fi.hpp"

#include "commat/hz.hpp"
#include "commat/kr.hpp"

namespace commat {

namespace {

void require_supported(SpaceFamily family, const char* who) {
    switch (family) {
        case SpaceFamily::CnU:
        case SpaceFamily::RepNU:
        case SpaceFamily::CnO:
        case SpaceFamily::RepNO:
            return;
        default:
            throw UnsupportedFamily(std::string(who) + ": family has no FI-module description here");
    }
}

}  // namespace

FinAbGroup fi_coefficient_group(SpaceFamily family, int k, long long n) {
    require_supported(family, "fi_coefficient_group");
    if (n < 1) throw InvalidParameter("fi_coefficient_group: n must be positive");
    if (n > 1000000) throw InvalidParameter("fi_coefficient_group: n too large");
    switch (family) {
        case SpaceFamily::CnU:
            return (k - n >= 0 && (k - n) % 2 == 0) ? FinAbGroup{1, 0} : FinAbGroup{};
        case SpaceFamily::RepNU:
            return (n == k) ? FinAbGroup{1, 0} : FinAbGroup{};
        case SpaceFamily::CnO:
            return kr_group_at({k, static_cast<int>(-n)});
        case SpaceFamily::RepNO:
            return hz_group_at({k, static_cast<int>(-n)});
        default:
            return {};
    }
}

StabilityCutoff stability_cutoff(SpaceFamily family, int k) {
    require_supported(family, "stability_cutoff");
    switch (family) {
        case SpaceFamily::CnU:
        case SpaceFamily::RepNU:
            // coefficient theories are connective: zero beyond n = k
            return {true, k};
        case SpaceFamily::CnO:
            // A monomial a^i w^e U^c vb^m contributing in degree k - n*sigma
            // has k = m + 2e + 4c and n = k - 2m + i. Free (i = 0) and
            // torsion-with-vb (i <= 2, m >= 1) classes force n <= k. The
            // unbounded towers a^i U^c (m = e = 0) need 4c = k, so they
            // exist iff k == 0 mod 4.
            return k % 4 == 0 ? StabilityCutoff{false, 0} : StabilityCutoff{true, k};
        case SpaceFamily::RepNO:
            // a^i u^c contributes iff 2c = k and i = n - k >= 0: towers for
            // every even k, nothing at all for odd k.
            return k % 2 == 0 ? StabilityCutoff{false, 0} : StabilityCutoff{true, 0};
        default:
            return {};
    }
}

FIDecomposition fi_decomposition(SpaceFamily family, int k, long long n_max) {
    require_supported(family, "fi_decomposition");
    if (k < 0) throw InvalidParameter("fi_decomposition: k must be non-negative");
    if (n_max < 0) throw InvalidParameter("fi_decomposition: n_max must be non-negative");
    FIDecomposition out;
    out.family = family;
    out.k = k;
    for (long long n = 1; n <= n_max; ++n) {
        FinAbGroup g = fi_coefficient_group(family, k, n);
        if (!g.is_zero()) out.summands.push_back({n, g});
    }
    StabilityCutoff cutoff = stability_cutoff(family, k);
    out.exact = cutoff.finite && n_max >= cutoff.bound;
    return out;
}

StabilityVerdict is_rep_stable(SpaceFamily family, int k) {
    require_supported(family, "is_rep_stable");
    if (k < 0) throw InvalidParameter("is_rep_stable: k must be non-negative");
    StabilityCutoff cutoff = stability_cutoff(family, k);
    if (!cutoff.finite) return {false, std::nullopt};
    StabilityVerdict v{true, std::nullopt};
    for (long long n = 1; n <= cutoff.bound; ++n)
        if (!fi_coefficient_group(family, k, n).is_zero()) v.stable_from = n;
    return v;
}

}  // namespace commat
