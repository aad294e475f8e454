#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "commat/errors.hpp"

namespace commat {

/// A bidegree p + q*sigma, with sigma the sign representation of C_2.
struct RODegree {
    int p = 0;
    int q = 0;

    friend RODegree operator+(RODegree a, RODegree b) { return {a.p + b.p, a.q + b.q}; }
    friend bool operator==(RODegree a, RODegree b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(RODegree a, RODegree b) { return !(a == b); }
};

/// Z^free_rank + (Z/2)^z2_rank. Every torsion group arising here has
/// exponent 2, so no other torsion is representable.
struct FinAbGroup {
    long long free_rank = 0;
    long long z2_rank = 0;

    FinAbGroup() = default;
    FinAbGroup(long long free, long long z2) : free_rank(free), z2_rank(z2) {
        if (free < 0 || z2 < 0)
            throw InvalidParameter("FinAbGroup: ranks must be non-negative");
    }

    bool is_zero() const { return free_rank == 0 && z2_rank == 0; }

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank == b.free_rank && a.z2_rank == b.z2_rank;
    }
    friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

    friend FinAbGroup operator+(const FinAbGroup& a, const FinAbGroup& b) {
        return {a.free_rank + b.free_rank, a.z2_rank + b.z2_rank};
    }
};

/// Rendering convention: "Z^r + (Z/2)^s" with trivial factors omitted and
/// exponent 1 suppressed; "0" for the trivial group.
std::string render_group(const FinAbGroup& g);

/// Integer-graded abelian group, stored sparsely: degrees with zero group are
/// absent. All gradeds in this project are window-computable; bulk producers
/// take an explicit degree window and queries outside it return zero.
class GradedAbGroup {
public:
    GradedAbGroup() = default;

    FinAbGroup at(int degree) const {
        auto it = support_.find(degree);
        return it == support_.end() ? FinAbGroup{} : it->second;
    }

    void set(int degree, const FinAbGroup& g) {
        if (g.is_zero())
            support_.erase(degree);
        else
            support_[degree] = g;
    }

    void add(int degree, const FinAbGroup& g) { set(degree, at(degree) + g); }

    const std::map<int, FinAbGroup>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    friend bool operator==(const GradedAbGroup& a, const GradedAbGroup& b) {
        return a.support_ == b.support_;
    }

private:
    std::map<int, FinAbGroup> support_;
};

/// {"free_rank": r, "z2_rank": s}
nlohmann::json to_json(const FinAbGroup& g);
/// {"<degree>": {"free_rank": r, "z2_rank": s}, ...}
nlohmann::json to_json(const GradedAbGroup& g);

GradedAbGroup direct_sum(std::span<const GradedAbGroup> xs);
GradedAbGroup direct_sum(std::initializer_list<GradedAbGroup> xs);

/// Result at degree d equals g at degree d - k.
GradedAbGroup shift(const GradedAbGroup& g, int k);

/// All ranks multiplied by c (c = 0 gives the zero group).
GradedAbGroup with_multiplicity(const GradedAbGroup& g, long long c);

}  // namespace commat
