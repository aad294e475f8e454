#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "commat/bcom.hpp"
#include "commat/fi.hpp"
#include "commat/homotopy.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"
#include "commat/parse.hpp"
#include "commat/spectral.hpp"

namespace {

using namespace commat;

// Exit codes: 0 ok, 2 usage/parse, 3 domain, 4 numerical validation, 5 I/O.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitIo = 5;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void write_output(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

nlohmann::json group_json(const FinAbGroup& g) {
    return {{"free_rank", g.free_rank}, {"z2_rank", g.z2_rank}};
}

struct Options {
    std::uint64_t seed = 0;
    double tol_commute = 1e-9;
    double tol_cluster = 1e-6;
    std::string format = "json";
};

SpectralOptions spectral_options(const Options& o) {
    SpectralOptions s;
    s.tol_commute = o.tol_commute;
    s.tol_cluster = o.tol_cluster;
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact calculators for homotopy groups and coefficient rings of "
                 "commuting-matrix spaces, with a numerical eigenspace-configuration module"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "random seed for seeded subcommands");
    app.add_option("--tol-commute", opt.tol_commute, "unitarity/commutator tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-cluster", opt.tol_cluster, "eigenvalue clustering tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format for tables")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    // pi
    auto* cmd_pi = app.add_subcommand("pi", "homotopy group of a space family");
    cmd_pi->fallthrough();
    std::string pi_space;
    int pi_k = 0;
    long long pi_n = 1;
    cmd_pi->add_option("--space", pi_space, "cnu|repu|cno|repo|bcomu|bcomo|spin")->required();
    cmd_pi->add_option("--k", pi_k, "degree")->required();
    cmd_pi->add_option("--n", pi_n, "number of commuting elements");

    // coeff
    auto* cmd_coeff = app.add_subcommand("coeff", "coefficient group at bidegree p + q*sigma");
    cmd_coeff->fallthrough();
    std::string coeff_ring;
    int coeff_p = 0, coeff_q = 0;
    cmd_coeff->add_option("--ring", coeff_ring, "kr|hz")->required()
        ->check(CLI::IsMember({"kr", "hz"}));
    cmd_coeff->add_option("--p", coeff_p)->required();
    cmd_coeff->add_option("--q", coeff_q)->required();

    // mul
    auto* cmd_mul = app.add_subcommand("mul", "product of two ring expressions");
    cmd_mul->fallthrough();
    std::string mul_ring;
    std::vector<std::string> mul_exprs;
    cmd_mul->add_option("--ring", mul_ring, "kr|hz|ku|bcom-kr")->required()
        ->check(CLI::IsMember({"kr", "hz", "ku", "bcom", "bcom-kr"}));
    cmd_mul->add_option("exprs", mul_exprs, "two expressions")->expected(2);

    // table
    auto* cmd_table = app.add_subcommand("table", "table of homotopy groups");
    cmd_table->fallthrough();
    std::string table_space;
    int table_kmax = 7;
    long long table_nmax = 6;
    cmd_table->add_option("--space", table_space)->required();
    cmd_table->add_option("--kmax", table_kmax);
    cmd_table->add_option("--nmax", table_nmax);

    // stability
    auto* cmd_stab = app.add_subcommand("stability", "representation stability verdict");
    cmd_stab->fallthrough();
    std::string stab_family;
    int stab_k = 0;
    long long stab_nmax = -1;
    cmd_stab->add_option("--family", stab_family, "cnu|repu|cno|repo")->required();
    cmd_stab->add_option("--k", stab_k)->required();
    cmd_stab->add_option("--nmax", stab_nmax, "list summands up to this n");

    // spectral
    auto* cmd_spec = app.add_subcommand("spectral", "commuting-tuple numerics");
    cmd_spec->fallthrough();
    cmd_spec->require_subcommand(1);

    auto* spec_round = cmd_spec->add_subcommand("roundtrip", "decompose-then-realize residuals");
    spec_round->fallthrough();
    int sr_n = 2, sr_dim = 8, sr_trials = 25;
    double sr_max_error = 1e-8;
    spec_round->add_option("--n", sr_n);
    spec_round->add_option("--dim", sr_dim);
    spec_round->add_option("--trials", sr_trials);
    spec_round->add_option("--max-error", sr_max_error);

    auto* spec_kappa = cmd_spec->add_subcommand("kappa", "mod-2 component invariant");
    spec_kappa->fallthrough();
    std::string kappa_input;
    spec_kappa->add_option("--input", kappa_input, "tuple JSON file")->required();

    auto* spec_dec = cmd_spec->add_subcommand("decompose", "joint eigenspace configuration");
    spec_dec->fallthrough();
    std::string dec_input, dec_output;
    spec_dec->add_option("--input", dec_input, "tuple JSON file")->required();
    spec_dec->add_option("--output", dec_output, "config JSON file (stdout if absent)");

    auto* spec_real = cmd_spec->add_subcommand("realize", "tuple from a configuration");
    spec_real->fallthrough();
    std::string real_input, real_output;
    int real_n = -1;
    spec_real->add_option("--input", real_input, "config JSON file")->required();
    spec_real->add_option("--output", real_output, "tuple JSON file (stdout if absent)");
    spec_real->add_option("--n", real_n, "tuple length (required for empty configs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_pi->parsed()) {
        SpaceFamily f = parse_space(pi_space);
        std::cout << render_group(pi_group(f, pi_k, pi_n)) << "\n";
        return kExitOk;
    }

    if (cmd_coeff->parsed()) {
        FinAbGroup g = coeff_ring == "kr" ? kr_group_at({coeff_p, coeff_q})
                                          : hz_group_at({coeff_p, coeff_q});
        std::cout << render_group(g) << "\n";
        return kExitOk;
    }

    if (cmd_mul->parsed()) {
        const std::string& e1 = mul_exprs.at(0);
        const std::string& e2 = mul_exprs.at(1);
        // rendered string by default; term list when --format json was given
        bool as_json = app.count("--format") > 0 && opt.format == "json";
        auto emit = [&](const std::string& text, const nlohmann::json& terms) {
            if (as_json)
                write_output({{"render", text}, {"terms", terms}}, "");
            else
                std::cout << text << "\n";
        };
        if (mul_ring == "kr") {
            KRElement p = kr_mul(parse_kr(e1), parse_kr(e2));
            emit(render(p), to_json(p));
        } else if (mul_ring == "hz") {
            HZElement p = hz_mul(parse_hz(e1), parse_hz(e2));
            emit(render(p), to_json(p));
        } else if (mul_ring == "ku") {
            KuElement p = ku_mul(parse_ku(e1), parse_ku(e2));
            emit(render(p), to_json(p));
        } else {
            BcomElement p = bcom_mul(parse_bcom(e1), parse_bcom(e2));
            emit(render(p), to_json(p));
        }
        return kExitOk;
    }

    if (cmd_table->parsed()) {
        SpaceFamily f = parse_space(table_space);
        std::cout << render_table(f, table_kmax, table_nmax, parse_format(opt.format));
        return kExitOk;
    }

    if (cmd_stab->parsed()) {
        SpaceFamily f = parse_space(stab_family);
        StabilityVerdict v = is_rep_stable(f, stab_k);
        nlohmann::json out;
        out["stable"] = v.stable;
        out["stable_from"] = v.stable_from ? nlohmann::json(*v.stable_from) : nlohmann::json();
        long long nmax = stab_nmax;
        if (nmax < 0) nmax = v.stable_from ? *v.stable_from : std::max(stab_k, 8);
        FIDecomposition dec = fi_decomposition(f, stab_k, nmax);
        nlohmann::json summands = nlohmann::json::array();
        for (const auto& s : dec.summands)
            summands.push_back({s.n, group_json(s.coeff_group)});
        out["summands"] = summands;
        out["summands_exact"] = dec.exact;
        write_output(out, "");
        return kExitOk;
    }

    if (spec_round->parsed()) {
        if (sr_n < 1 || sr_dim < 1 || sr_trials < 1)
            throw InvalidParameter("roundtrip: n, dim, trials must be positive");
        SpectralOptions so = spectral_options(opt);
        double worst = 0.0;
        bool labels_ok = true;
        for (int trial = 0; trial < sr_trials; ++trial) {
            std::uint64_t s = opt.seed + static_cast<std::uint64_t>(trial);
            auto spec = random_label_spec(sr_n, sr_dim, s);
            CommutingTuple t = random_commuting(sr_n, sr_dim, spec, s ^ 0x5bd1e995u);
            LabeledConfig c = decompose(t, so);
            CommutingTuple back = realize(c, sr_n, so);
            worst = std::max(worst, tuple_distance(back, t));
            LabeledConfig expected;
            expected.ambient_dim = sr_dim;
            for (const auto& bs : spec)
                expected.blocks.push_back(
                    {Matrix::Zero(sr_dim, bs.dim), bs.label});
            if (!same_label_multiset(c, expected, 1e-8)) labels_ok = false;
        }
        nlohmann::json out;
        out["trials"] = sr_trials;
        out["max_frobenius_error"] = worst;
        out["labels_recovered"] = labels_ok;
        bool pass = labels_ok && worst <= sr_max_error;
        out["pass"] = pass;
        write_output(out, "");
        return pass ? kExitOk : kExitNumerical;
    }

    if (spec_kappa->parsed()) {
        CommutingTuple t = tuple_from_json(load_json(kappa_input));
        std::vector<int> inv = component_invariant(t, spectral_options(opt));
        nlohmann::json out;
        out["n"] = t.n;
        out["invariant"] = inv;
        nlohmann::json nonzero = nlohmann::json::array();
        for (std::size_t b = 1; b <= inv.size(); ++b) {
            if (!inv[b - 1]) continue;
            std::string pattern;
            for (int j = 0; j < t.n; ++j) pattern += (b >> j) & 1 ? '-' : '+';
            nonzero.push_back(pattern);
        }
        out["nonzero_patterns"] = nonzero;
        write_output(out, "");
        return kExitOk;
    }

    if (spec_dec->parsed()) {
        CommutingTuple t = tuple_from_json(load_json(dec_input));
        LabeledConfig c = decompose(t, spectral_options(opt));
        write_output(to_json(c), dec_output);
        return kExitOk;
    }

    if (spec_real->parsed()) {
        LabeledConfig c = config_from_json(load_json(real_input));
        CommutingTuple t = realize(c, real_n, spectral_options(opt));
        write_output(to_json(t), real_output);
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfRegion& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvalidParameter& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const UnsupportedFamily& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const OrderTooSmall& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        // remaining taxonomy: numerical validation failures
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
