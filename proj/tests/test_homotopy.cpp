#include <doctest.h>

#include <string>

#include <json.hpp>

#include "commat/grading.hpp"
#include "commat/homotopy.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"

using namespace commat;

TEST_SUITE("homotopy") {

TEST_CASE("A(k) formula examples") {
    CHECK(ak_formula_at(1, 0) == FinAbGroup{0, 1});  // I_1 shifted by -1
    CHECK(ak_formula_at(4, 4) == FinAbGroup{1, 0});  // pi_0(ko) shifted by 4
    CHECK(ak_formula_at(2, 2) == FinAbGroup{1, 0});  // J_4 shifted by -2
    CHECK_THROWS_AS(ak_formula_at(0, 0), InvalidParameter);
}

TEST_CASE("A(k) oracle examples") {
    CHECK(ak_oracle_at(1, 3) == FinAbGroup{1, 0});  // w vb in degree 3 - sigma
    CHECK(ak_oracle_at(2, 1) == FinAbGroup{});      // a^3 vb killed
    CHECK(ak_oracle_at(1, 0) == FinAbGroup{0, 1});
    CHECK(ak_oracle_at(3, -1) == FinAbGroup{});
}

TEST_CASE("formula equals oracle on a window") {
    for (int k = 1; k <= 8; ++k)
        for (int d = 0; d <= 24; ++d) {
            CAPTURE(k);
            CAPTURE(d);
            CHECK(ak_formula_at(k, d) == ak_oracle_at(k, d));
        }
}

TEST_CASE("pi examples") {
    for (long long n = 1; n <= 6; ++n) {
        CHECK(pi_group(SpaceFamily::CnO, 0, n) == FinAbGroup{0, (1LL << n) - 1});
        CHECK(pi_group(SpaceFamily::CnO, 1, n) == FinAbGroup{0, n});
        CHECK(pi_group(SpaceFamily::CnO, 6, n) ==
              FinAbGroup{binom_rank(n, 2) + binom_rank(n, 6),
                         binom_rank(n, 3) + binom_rank(n, 4)});
    }
    CHECK(pi_group(SpaceFamily::RepNO, 2, 3) == FinAbGroup{3, 1});
    CHECK(pi_group(SpaceFamily::BcomU, 6) == FinAbGroup{3, 0});
    CHECK(pi_group(SpaceFamily::Spin, 0, 3) == FinAbGroup{0, 1});
    CHECK(pi_group(SpaceFamily::CnU, 2, 2) == FinAbGroup{1, 0});

    CHECK_THROWS_AS(pi_group(SpaceFamily::CnO, 1, 0), InvalidParameter);
    CHECK_THROWS_AS(pi_group(SpaceFamily::CnO, -1, 1), InvalidParameter);
}

TEST_CASE("spin family") {
    // pi_0 exponent 2^n - n - 1 - C(n,2)
    CHECK(pi_group(SpaceFamily::Spin, 0, 1) == FinAbGroup{});
    CHECK(pi_group(SpaceFamily::Spin, 0, 2) == FinAbGroup{});
    CHECK(pi_group(SpaceFamily::Spin, 0, 4) == FinAbGroup{0, 5});
    CHECK(pi_group(SpaceFamily::Spin, 1, 5) == FinAbGroup{});
    for (int k = 2; k <= 8; ++k)
        CHECK(pi_group(SpaceFamily::Spin, k, 5) == pi_group(SpaceFamily::CnO, k, 5));
}

TEST_CASE("two-path equality for CnO") {
    for (long long n = 1; n <= 10; ++n)
        for (int k = 0; k <= 12; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(pi_group(SpaceFamily::CnO, k, n) ==
                  pi_group_oracle(SpaceFamily::CnO, k, n));
        }
}

TEST_CASE("two-path equality for RepNO") {
    for (long long n = 1; n <= 12; ++n)
        for (int k = 0; k <= 20; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(pi_group(SpaceFamily::RepNO, k, n) ==
                  pi_group_oracle(SpaceFamily::RepNO, k, n));
        }
}

TEST_CASE("pi_0 consistency") {
    // sum_j C(n,j) * z2rank(A(j)_0) = 2^n - 1
    for (long long n = 1; n <= 16; ++n) {
        long long total = 0;
        for (long long j = 1; j <= n; ++j) {
            FinAbGroup a = ak_formula_at(static_cast<int>(j), 0);
            CHECK(a.free_rank == 0);
            total += binom_rank(n, j) * a.z2_rank;
        }
        CHECK(total == (1LL << n) - 1);
    }
}

TEST_CASE("CnU parity formulas") {
    for (long long n = 1; n <= 10; ++n)
        for (int k = 0; k <= 20; ++k) {
            long long expect = 0;
            if (k % 2 == 0) {
                for (long long j = 1; 2 * j <= k; ++j) expect += binom_rank(n, 2 * j);
            } else {
                for (long long j = 0; 2 * j + 1 <= k; ++j) expect += binom_rank(n, 2 * j + 1);
            }
            CHECK(pi_group(SpaceFamily::CnU, k, n) == FinAbGroup{expect, 0});
        }
}

TEST_CASE("unitary postnikov collapse") {
    // pi_k(RepNU) = Z^C(n,k) for k >= 1, trivial pi_0
    CHECK(pi_group(SpaceFamily::RepNU, 0, 4) == FinAbGroup{});
    CHECK(pi_group(SpaceFamily::RepNU, 2, 3) == FinAbGroup{3, 0});
    CHECK(pi_group(SpaceFamily::RepNU, 5, 3) == FinAbGroup{});
}

TEST_CASE("BcomO low degrees") {
    CHECK(pi_group(SpaceFamily::BcomO, 0) == FinAbGroup{});
    CHECK(pi_group(SpaceFamily::BcomO, 1) == FinAbGroup{0, 1});   // A(1)_0
    CHECK(pi_group(SpaceFamily::BcomO, 2) == FinAbGroup{0, 2});   // A(1)_1 + A(2)_0
}

TEST_CASE("tables") {
    std::string md = render_table(SpaceFamily::RepNU, 3, 3, TableFormat::Markdown);
    CHECK(md.find("| 2 | 0 | Z | Z^3 |") != std::string::npos);

    std::string bc = render_table(SpaceFamily::BcomO, 2, 1, TableFormat::Csv);
    CHECK(bc.find("1,Z/2") != std::string::npos);
    CHECK(bc.find("2,(Z/2)^2") != std::string::npos);

    // json table cells carry the raw ranks
    std::string js = render_table(SpaceFamily::CnO, 2, 2, TableFormat::Json);
    CHECK(js.find("\"free_rank\"") != std::string::npos);
}

TEST_CASE("surjectivity onto the representation-space groups") {
    // fails exactly when an odd power of u shows up in a summand: k = 2 mod 4
    // and n >= k
    CHECK(postnikov_onto(0, 5));
    CHECK(postnikov_onto(3, 8));
    CHECK(postnikov_onto(4, 12));
    CHECK(postnikov_onto(2, 1));
    CHECK(!postnikov_onto(2, 2));
    CHECK(!postnikov_onto(2, 7));
    CHECK(postnikov_onto(6, 5));
    CHECK(!postnikov_onto(6, 6));
    CHECK(!postnikov_onto(10, 11));
}

TEST_CASE("graded group json") {
    GradedAbGroup g;
    g.set(0, {1, 2});
    g.set(-3, {0, 1});
    nlohmann::json j = to_json(g);
    CHECK(j["0"]["free_rank"] == 1);
    CHECK(j["0"]["z2_rank"] == 2);
    CHECK(j["-3"]["z2_rank"] == 1);
    CHECK(j.size() == 2);
}

TEST_CASE("space family names") {
    CHECK(parse_space("cno") == SpaceFamily::CnO);
    CHECK(parse_space("bcomu") == SpaceFamily::BcomU);
    CHECK(space_name(parse_space("repo")) == "repo");
    CHECK_THROWS_AS(parse_space("nope"), InvalidParameter);
}

}
