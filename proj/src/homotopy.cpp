#include "commat/homotopy.hpp"

#include <json.hpp>

#include "commat/bigint.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"

namespace commat {

namespace {

FinAbGroup z2_if(bool cond) { return cond ? FinAbGroup{0, 1} : FinAbGroup{}; }

// Augmentation ideal of the ko coefficients: positive-degree part.
FinAbGroup ideal_i_at(int d) { return d >= 1 ? ko_group(d) : FinAbGroup{}; }

// J = (eta^2, x, y): all of I except the degree-1 class eta.
FinAbGroup ideal_j_at(int d) { return d == 1 ? FinAbGroup{} : ideal_i_at(d); }

}  // namespace

SpaceFamily parse_space(const std::string& name) {
    if (name == "cnu") return SpaceFamily::CnU;
    if (name == "repu") return SpaceFamily::RepNU;
    if (name == "cno") return SpaceFamily::CnO;
    if (name == "repo") return SpaceFamily::RepNO;
    if (name == "bcomu") return SpaceFamily::BcomU;
    if (name == "bcomo") return SpaceFamily::BcomO;
    if (name == "spin") return SpaceFamily::Spin;
    throw InvalidParameter("unknown space family: " + name);
}

std::string space_name(SpaceFamily f) {
    switch (f) {
        case SpaceFamily::CnU: return "cnu";
        case SpaceFamily::RepNU: return "repu";
        case SpaceFamily::CnO: return "cno";
        case SpaceFamily::RepNO: return "repo";
        case SpaceFamily::BcomU: return "bcomu";
        case SpaceFamily::BcomO: return "bcomo";
        case SpaceFamily::Spin: return "spin";
    }
    throw InvalidParameter("unknown space family");
}

long long binom_rank(long long n, long long k) {
    return to_long_checked(binomial(n, k), "binomial rank");
}

FinAbGroup ak_formula_at(int k, int d) {
    if (k < 1) throw InvalidParameter("ak_formula_at: k must be positive");
    FinAbGroup out;
    int j = k / 4;
    switch (k % 4) {
        case 0:  // k = 4j, j >= 1
            out = out + z2_if(d % 4 == 0 && d >= 0 && d <= 4 * (j - 1));
            out = out + ko_group(d - 4 * j);
            break;
        case 1:  // k = 4j + 1
            out = out + z2_if(d % 4 == 0 && d >= 0 && d <= 4 * (j - 1));
            out = out + ideal_i_at(d - 4 * j + 1);
            break;
        case 2:  // k = 4j + 2
            out = out + z2_if(d % 4 == 0 && d >= 0 && d <= 4 * (j - 1));
            out = out + ideal_j_at(d - 4 * j + 2);
            break;
        case 3:  // k = 4j + 3
            out = out + z2_if(d % 4 == 0 && d >= 0 && d <= 4 * j);
            out = out + ko_group(d - 4 * j - 5);
            break;
    }
    return out;
}

AkModule ak_formula(int k, int d_lo, int d_hi) {
    AkModule m{k, {}};
    for (int d = d_lo; d <= d_hi; ++d) m.graded.set(d, ak_formula_at(k, d));
    return m;
}

FinAbGroup ak_oracle_at(int k, int d) {
    if (k < 1) throw InvalidParameter("ak_oracle_at: k must be positive");
    if (d < 0) return {};  // connective: nothing below degree 0
    return kr_group_at({d, -k});
}

AkModule ak_oracle(int k, int d_lo, int d_hi) {
    AkModule m{k, {}};
    for (int d = d_lo; d <= d_hi; ++d) m.graded.set(d, ak_oracle_at(k, d));
    return m;
}

namespace {

FinAbGroup pi_cnu(int k, long long n) {
    // pi_*(ku) contributes Z in even non-negative degrees.
    long long rank = 0;
    for (long long j = 1; j <= n && j <= k; ++j)
        if ((k - j) % 2 == 0) rank += binom_rank(n, j);
    return {rank, 0};
}

FinAbGroup pi_cno(int k, long long n) {
    FinAbGroup out;
    for (long long j = 1; j <= n; ++j) {
        FinAbGroup a = ak_formula_at(static_cast<int>(j), k);
        long long c = binom_rank(n, j);
        out = out + FinAbGroup{a.free_rank * c, a.z2_rank * c};
    }
    return out;
}

FinAbGroup pi_repno(int k, long long n) {
    if (k == 0) return {0, (1LL << n) - 1};
    if (k % 2 == 1) return {};
    long long tors = 0;
    for (long long j = k + 1; j <= n; ++j) tors += binom_rank(n, j);
    return {binom_rank(n, k), tors};
}

FinAbGroup pi_bcomo(int k) {
    FinAbGroup out;
    for (int j = 1; j <= k; ++j) out = out + ak_formula_at(j, k - j);
    return out;
}

}  // namespace

FinAbGroup pi_group(SpaceFamily family, int k, long long n) {
    if (k < 0) throw InvalidParameter("pi_group: k must be non-negative");
    bool needs_n = family != SpaceFamily::BcomU && family != SpaceFamily::BcomO;
    if (needs_n && n < 1) throw InvalidParameter("pi_group: n must be positive");
    if (needs_n && n > 60) throw InvalidParameter("pi_group: n too large for exact ranks");
    switch (family) {
        case SpaceFamily::CnU:
            return pi_cnu(k, n);
        case SpaceFamily::RepNU:
            return k == 0 ? FinAbGroup{} : FinAbGroup{binom_rank(n, k), 0};
        case SpaceFamily::CnO:
            return pi_cno(k, n);
        case SpaceFamily::RepNO:
            return pi_repno(k, n);
        case SpaceFamily::BcomU:
            return k % 2 == 0 ? FinAbGroup{k / 2, 0} : FinAbGroup{};
        case SpaceFamily::BcomO:
            return pi_bcomo(k);
        case SpaceFamily::Spin: {
            if (k == 0) {
                long long e = (1LL << n) - n - 1 - binom_rank(n, 2);
                return {0, e};
            }
            if (k == 1) return {};
            return pi_cno(k, n);
        }
    }
    throw InvalidParameter("pi_group: unknown family");
}

FinAbGroup pi_group_oracle(SpaceFamily family, int k, long long n) {
    if (k < 0) throw InvalidParameter("pi_group_oracle: k must be non-negative");
    if (n < 1) throw InvalidParameter("pi_group_oracle: n must be positive");
    FinAbGroup out;
    for (long long j = 1; j <= n; ++j) {
        FinAbGroup coeff;
        switch (family) {
            case SpaceFamily::CnO:
                coeff = kr_group_at({k, static_cast<int>(-j)});
                break;
            case SpaceFamily::RepNO:
                coeff = hz_group_at({k, static_cast<int>(-j)});
                break;
            default:
                throw UnsupportedFamily("pi_group_oracle: only cno/repo have a coefficient path");
        }
        long long c = binom_rank(n, j);
        out = out + FinAbGroup{coeff.free_rank * c, coeff.z2_rank * c};
    }
    return out;
}

bool postnikov_onto(int k, long long n) {
    if (k < 0) throw InvalidParameter("postnikov_onto: k must be non-negative");
    if (n < 1) throw InvalidParameter("postnikov_onto: n must be positive");
    for (long long j = 1; j <= n; ++j) {
        // canonical basis monomial in degree k - j*sigma, if any: u^c with
        // c = k/2 and a-exponent i = j - k
        if (k % 2 != 0) continue;
        int c = k / 2;
        int i = static_cast<int>(j) - k;
        if (i < 0) continue;
        HZElement basis = HZElement::monomial({i, c}, 1);
        if (!is_in_postnikov_image(basis)) return false;
    }
    return true;
}

TableFormat parse_format(const std::string& name) {
    if (name == "json") return TableFormat::Json;
    if (name == "csv") return TableFormat::Csv;
    if (name == "markdown") return TableFormat::Markdown;
    throw InvalidParameter("unknown format: " + name);
}

std::string render_table(SpaceFamily family, int k_max, long long n_max, TableFormat format) {
    if (k_max < 0 || n_max < 0) throw InvalidParameter("render_table: bounds must be >= 0");
    bool needs_n = family != SpaceFamily::BcomU && family != SpaceFamily::BcomO;
    std::vector<long long> cols;
    if (needs_n)
        for (long long n = 1; n <= n_max; ++n) cols.push_back(n);
    else
        cols.push_back(1);

    auto cell = [&](int k, long long n) { return pi_group(family, k, n); };

    if (format == TableFormat::Json) {
        nlohmann::json out;
        out["space"] = space_name(family);
        out["k_max"] = k_max;
        if (needs_n) out["n"] = cols;
        nlohmann::json rows = nlohmann::json::array();
        for (int k = 0; k <= k_max; ++k) {
            nlohmann::json row;
            row["k"] = k;
            nlohmann::json cells = nlohmann::json::array();
            for (long long n : cols) {
                FinAbGroup g = cell(k, n);
                cells.push_back({{"free_rank", g.free_rank}, {"z2_rank", g.z2_rank}});
            }
            row["cells"] = cells;
            rows.push_back(row);
        }
        out["rows"] = rows;
        return out.dump(2) + "\n";
    }

    std::string head_cell = needs_n ? "" : space_name(family);
    std::string out;
    if (format == TableFormat::Csv) {
        out = "k";
        for (long long n : cols)
            out += "," + (needs_n ? "n=" + std::to_string(n) : head_cell);
        out += "\n";
        for (int k = 0; k <= k_max; ++k) {
            out += std::to_string(k);
            for (long long n : cols) out += "," + render_group(cell(k, n));
            out += "\n";
        }
        return out;
    }

    // markdown
    out = "| k |";
    for (long long n : cols)
        out += " " + (needs_n ? "n=" + std::to_string(n) : head_cell) + " |";
    out += "\n|---|";
    for (size_t i = 0; i < cols.size(); ++i) out += "---|";
    out += "\n";
    for (int k = 0; k <= k_max; ++k) {
        out += "| " + std::to_string(k) + " |";
        for (long long n : cols) out += " " + render_group(cell(k, n)) + " |";
        out += "\n";
    }
    return out;
}

}  // namespace commat
