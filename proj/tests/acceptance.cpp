// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commat/bcom.hpp"
#include "commat/fi.hpp"
#include "commat/homotopy.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"
#include "commat/parse.hpp"
#include "commat/spectral.hpp"

using namespace commat;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double run_timed(const std::function<bool()>& body, bool& ok) {
    auto start = std::chrono::steady_clock::now();
    ok = body();
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(end - start).count();
}

struct WindowCell {
    int p, q;
    FinAbGroup group;
};

std::vector<WindowCell> load_window(const std::string& filename) {
    std::ifstream in(std::string(COMMAT_TEST_DATA_DIR) + "/" + filename);
    if (!in) throw std::runtime_error("missing data file " + filename);
    std::vector<WindowCell> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int p, q;
        std::string kind;
        ss >> p >> q >> kind;
        cells.push_back({p, q, kind == "Z" ? FinAbGroup{1, 0} : FinAbGroup{0, 1}});
    }
    return cells;
}

FinAbGroup window_lookup(const std::vector<WindowCell>& cells, int p, int q) {
    for (const auto& c : cells)
        if (c.p == p && c.q == q) return c.group;
    return {};
}

struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

KRElement random_kr(TestRng& rng, int max_exp = 6) {
    KRElement e;
    long long terms = rng.range(1, 3);
    for (long long t = 0; t < terms; ++t) {
        KRMonomial m;
        m.a_exp = static_cast<int>(rng.range(0, max_exp));
        m.w_exp = static_cast<int>(rng.range(0, 2));
        m.u_cap_exp = static_cast<int>(rng.range(0, 3));
        m.v_exp = static_cast<int>(rng.range(0, max_exp));
        e += KRElement::monomial(m, rng.range(-4, 4));
    }
    return e;
}

HZElement random_hz(TestRng& rng) {
    HZElement e;
    long long terms = rng.range(1, 3);
    for (long long t = 0; t < terms; ++t)
        e += HZElement::monomial({static_cast<int>(rng.range(0, 6)),
                                  static_cast<int>(rng.range(0, 6))},
                                 rng.range(-4, 4));
    return e;
}

KuElement random_ku(TestRng& rng) {
    KuElement e;
    long long terms = rng.range(1, 3);
    for (long long t = 0; t < terms; ++t)
        e.add_term({rng.range(0, 6), rng.range(0, 3)}, rng.range(-4, 4));
    return e;
}

BcomElement random_bcom(TestRng& rng) {
    BcomElement e;
    long long terms = rng.range(1, 2);
    for (long long t = 0; t < terms; ++t) e.add_term(rng.range(0, 6), random_kr(rng, 4));
    return e;
}

// ---- criteria ----

void criterion_1() {
    bool ok = true;
    std::string detail;
    double secs = run_timed(
        [&] {
            nlohmann::json table = nlohmann::json::parse(
                render_table(SpaceFamily::CnO, 7, 10, TableFormat::Json));
            for (long long n = 1; n <= 10; ++n) {
                FinAbGroup rows[8] = {
                    {0, (1LL << n) - 1},
                    {0, n},
                    {binom_rank(n, 2), 0},
                    {n, 0},
                    {binom_rank(n, 4), 0},
                    {binom_rank(n, 3), binom_rank(n, 4) + binom_rank(n, 5)},
                    {binom_rank(n, 2) + binom_rank(n, 6), binom_rank(n, 3) + binom_rank(n, 4)},
                    {n + binom_rank(n, 5), binom_rank(n, 2) + binom_rank(n, 3)},
                };
                long long tors4 = 0;
                for (long long i = 5; i <= n; ++i) tors4 += binom_rank(n, i);
                rows[4].z2_rank = tors4;
                for (int k = 0; k <= 7; ++k) {
                    const nlohmann::json& cell = table["rows"][k]["cells"][n - 1];
                    FinAbGroup got{cell["free_rank"].get<long long>(),
                                   cell["z2_rank"].get<long long>()};
                    if (got != rows[k]) return false;
                    if (pi_group(SpaceFamily::CnO, k, n) != rows[k]) return false;
                }
            }
            return true;
        },
        ok);
    if (secs >= 1.0) {
        ok = false;
        detail = "exceeded 1 s";
    }
    report(1, "low-degree table of pi_k(C_n(O)) for n <= 10", ok, detail);
}

void criterion_2() {
    bool ok = true;
    std::string detail;
    double secs = run_timed(
        [&] {
            for (int k = 1; k <= 16; ++k)
                for (int d = 0; d <= 40; ++d)
                    if (ak_formula_at(k, d) != ak_oracle_at(k, d)) return false;
            return true;
        },
        ok);
    if (secs >= 5.0) {
        ok = false;
        detail = "exceeded 5 s";
    }
    report(2, "A(k) closed formula equals monomial oracle (k <= 16, d <= 40)", ok, detail);
}

void criterion_3() {
    auto fig1 = load_window("fig1_window.dat");
    auto fig2 = load_window("fig2_window.dat");
    bool ok = true;
    for (int p = -12; p <= 12 && ok; ++p)
        for (int q = -12; q <= std::min(p, 12) && ok; ++q) {
            if (kr_group_at({p, q}) != window_lookup(fig1, p, q)) ok = false;
            if (hz_group_at({p, q}) != window_lookup(fig2, p, q)) ok = false;
        }
    report(3, "coefficient charts match transcribed windows (|p|,|q| <= 12)", ok);
}

void criterion_4() {
    bool ok = true;
    const FinAbGroup pattern[8] = {{1, 0}, {0, 1}, {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}};
    for (int d = 0; d <= 48; ++d)
        if (ko_group(d) != pattern[d % 8]) ok = false;

    KRElement a = KRElement::gen_a(), w = KRElement::gen_w();
    KRElement U = KRElement::gen_u_cap(), vb = KRElement::gen_vb();
    KRElement eta = kr_mul(a, vb);
    KRElement x = kr_mul(w, kr_pow(vb, 2));
    KRElement y = kr_mul(U, kr_pow(vb, 4));
    ok = ok && kr_mul(w, w) == Int(4) * U;
    ok = ok && kr_mul(a, w).is_zero();
    ok = ok && kr_mul(kr_pow(a, 3), vb).is_zero();
    ok = ok && kr_pow(eta, 3).is_zero();
    ok = ok && kr_mul(eta, x).is_zero();
    ok = ok && kr_mul(x, x) == Int(4) * y;
    report(4, "ko Bott pattern (d <= 48) and subring relations", ok);
}

void criterion_5() {
    BcomElement product = bcom_mul(parse_bcom("a*U*yb5"), parse_bcom("U*vb*yb3"));
    bool ok = product == parse_bcom("a*U^2*vb^2*yb7");

    BcomElement pre = bcom_y_product(5, 3);
    const Int want[4] = {10, 60, 105, 56};
    for (long long i = 5; i <= 8; ++i) {
        KRMonomial vb_pow{.v_exp = static_cast<int>(8 - i)};
        if (pre.coefficient(i) != KRElement::monomial(vb_pow, want[i - 5])) ok = false;
    }
    report(5, "worked ybar product with pre-reduction coefficients (10,60,105,56)", ok);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    double secs = run_timed(
        [&] {
            for (long long k = 0; k <= 8; ++k)
                for (long long l = 0; l <= 8; ++l) {
                    long long order = std::max<long long>(k + l, 1);
                    if (ku_y_product(k, l) != series_oracle(k, l, order)) return false;
                }
            return true;
        },
        ok);
    if (secs >= 2.0) {
        ok = false;
        detail = "exceeded 2 s";
    }
    report(6, "y-product formula equals power-series oracle (k,l <= 8)", ok, detail);
}

void criterion_7() {
    bool ok = true;
    TestRng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        KRElement x = random_kr(rng), y = random_kr(rng);
        if (postnikov(kr_mul(x, y)) != hz_mul(postnikov(x), postnikov(y))) ok = false;
    }
    ok = ok && postnikov(KRElement::gen_a()) == HZElement::gen_a();
    ok = ok && postnikov(KRElement::gen_vb()).is_zero();
    ok = ok && postnikov(KRElement::gen_w()) == Int(2) * HZElement::gen_u();
    ok = ok && postnikov(KRElement::gen_u_cap()) == hz_mul(HZElement::gen_u(), HZElement::gen_u());
    report(7, "Postnikov map is a ring homomorphism with the stated images", ok);
}

void criterion_8() {
    bool ok = true;
    for (long long n = 1; n <= 12; ++n)
        for (int k = 0; k <= 20; ++k)
            if (pi_group(SpaceFamily::RepNO, k, n) != pi_group_oracle(SpaceFamily::RepNO, k, n))
                ok = false;
    report(8, "pi_k(Rep_n(O)) closed formula equals monomial path (n <= 12, k <= 20)", ok);
}

void criterion_9() {
    bool ok = true;
    for (int k = 0; k <= 24; ++k) {
        StabilityVerdict cu = is_rep_stable(SpaceFamily::CnU, k);
        StabilityVerdict ru = is_rep_stable(SpaceFamily::RepNU, k);
        StabilityVerdict co = is_rep_stable(SpaceFamily::CnO, k);
        StabilityVerdict ro = is_rep_stable(SpaceFamily::RepNO, k);
        if (!cu.stable || !ru.stable) ok = false;
        if (k >= 1 && (cu.stable_from != k || ru.stable_from != k)) ok = false;
        if (co.stable != (k % 4 != 0)) ok = false;
        if ((k % 4 == 1 || k % 4 == 2) && co.stable_from != k) ok = false;
        if (k % 4 == 3 && co.stable_from != k - 2) ok = false;
        if (ro.stable != (k % 2 == 1)) ok = false;
        if (ro.stable && ro.stable_from.has_value()) ok = false;  // the zero module
    }
    report(9, "representation stability verdicts for k <= 24", ok);
}

void criterion_10() {
    bool ok = true;
    std::string detail;
    double secs = run_timed(
        [&] {
            double worst = 0.0;
            for (int trial = 0; trial < 200; ++trial) {
                int n = 1 + trial % 4;
                int dim = 4 + (trial * 7) % 13;  // 4..16
                std::uint64_t seed = 9000 + trial;
                auto spec = random_label_spec(n, dim, seed);
                CommutingTuple t = random_commuting(n, dim, spec, seed ^ 0xabcdef);
                LabeledConfig c = decompose(t);
                CommutingTuple back = realize(c, n);
                worst = std::max(worst, tuple_distance(back, t));

                LabeledConfig expected;
                expected.ambient_dim = dim;
                for (const auto& b : spec)
                    expected.blocks.push_back({Matrix::Zero(dim, b.dim), b.label});
                if (!same_label_multiset(c, expected, 1e-8)) return false;
            }
            return worst <= 1e-8;
        },
        ok);
    if (secs >= 30.0) {
        ok = false;
        detail = "exceeded 30 s";
    }
    report(10, "200 spectral round trips within 1e-8 with exact label recovery", ok, detail);
}

void criterion_11() {
    bool ok = true;

    // invariance under 100 random orthogonal conjugations
    TestRng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 3;
        int dim = 5;
        std::vector<BlockSpec> spec;
        int blocks = 1 + static_cast<int>(rng.next() % 2);
        for (int b = 0; b < blocks; ++b) {
            BlockSpec bs;
            bs.dim = 1;
            bool nontrivial = false;
            for (int j = 0; j < n; ++j) {
                bool minus = rng.next() % 2;
                nontrivial |= minus;
                bs.label.push_back(Complex(minus ? -1 : 1, 0));
            }
            if (nontrivial) spec.push_back(bs);
        }
        CommutingTuple t = random_commuting(n, dim, spec, 5000 + trial);
        std::vector<int> base = component_invariant(t);

        Eigen::MatrixXd g(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                g(r, c) = static_cast<double>(rng.next() >> 11) * 0x1.0p-53 - 0.5;
        Matrix q = Eigen::MatrixXd(Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ())
                       .cast<Complex>();
        CommutingTuple t2 = t;
        for (int j = 0; j < n; ++j) t2.matrices[j] = q * t.matrices[j] * q.transpose();
        if (component_invariant(t2) != base) ok = false;
    }

    // all 2^(2^n - 1) values realized for n <= 3, matching pi_0(C_n(O))
    for (int n = 1; n <= 3 && ok; ++n) {
        int patterns = (1 << n) - 1;
        FinAbGroup pi0 = pi_group(SpaceFamily::CnO, 0, n);
        if (pi0.z2_rank != patterns) ok = false;
        std::vector<std::vector<int>> seen;
        for (unsigned subset = 0; subset < (1u << patterns); ++subset) {
            std::vector<BlockSpec> spec;
            for (int b = 1; b <= patterns; ++b) {
                if (!(subset >> (b - 1) & 1)) continue;
                BlockSpec bs;
                bs.dim = 1;
                for (int j = 0; j < n; ++j)
                    bs.label.push_back(Complex((b >> j) & 1 ? -1 : 1, 0));
                spec.push_back(bs);
            }
            int dim = std::max<int>(1, static_cast<int>(spec.size()));
            CommutingTuple t = random_commuting(n, dim, spec, 31 * subset + 7);
            std::vector<int> inv = component_invariant(t);
            std::vector<int> expect(patterns, 0);
            for (int b = 1; b <= patterns; ++b) expect[b - 1] = (subset >> (b - 1)) & 1;
            if (inv != expect) ok = false;
            if (std::find(seen.begin(), seen.end(), inv) == seen.end()) seen.push_back(inv);
        }
        if (seen.size() != (1u << patterns)) ok = false;
    }
    report(11, "component invariant: conjugation invariance and full surjectivity", ok);
}

void criterion_12() {
    bool ok = true;
    TestRng rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        KRElement x = random_kr(rng), y = random_kr(rng), z = random_kr(rng);
        if (kr_mul(x, y) != kr_mul(y, x)) ok = false;
        if (kr_mul(kr_mul(x, y), z) != kr_mul(x, kr_mul(y, z))) ok = false;
    }
    for (int trial = 0; trial < 200; ++trial) {
        HZElement x = random_hz(rng), y = random_hz(rng), z = random_hz(rng);
        if (hz_mul(x, y) != hz_mul(y, x)) ok = false;
        if (hz_mul(hz_mul(x, y), z) != hz_mul(x, hz_mul(y, z))) ok = false;
    }
    for (int trial = 0; trial < 200; ++trial) {
        KuElement x = random_ku(rng), y = random_ku(rng), z = random_ku(rng);
        if (ku_mul(x, y) != ku_mul(y, x)) ok = false;
        if (ku_mul(ku_mul(x, y), z) != ku_mul(x, ku_mul(y, z))) ok = false;
    }
    for (int trial = 0; trial < 200; ++trial) {
        BcomElement x = random_bcom(rng), y = random_bcom(rng), z = random_bcom(rng);
        if (bcom_mul(x, y) != bcom_mul(y, x)) ok = false;
        if (bcom_mul(bcom_mul(x, y), z) != bcom_mul(x, bcom_mul(y, z))) ok = false;
    }
    report(12, "ring laws for kr, hz, ku, bcom on 200 random triples each", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures)
        std::printf("%d criteria FAILED\n", failures);
    else
        std::printf("all 12 criteria passed\n");
    return failures ? 1 : 0;
}
