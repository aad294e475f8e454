#include "commat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace commat {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

void require_shapes(const CommutingTuple& t) {
    if (t.n < 1 || t.dim < 1 || static_cast<int>(t.matrices.size()) != t.n)
        throw DimensionMismatch("tuple: expected n >= 1 matrices");
    for (const auto& m : t.matrices)
        if (m.rows() != t.dim || m.cols() != t.dim)
            throw DimensionMismatch("tuple: matrix shape disagrees with dim");
}

double max_unitarity_defect(const CommutingTuple& t) {
    double worst = 0.0;
    Matrix id = Matrix::Identity(t.dim, t.dim);
    for (const auto& m : t.matrices)
        worst = std::max(worst, operator_norm(m.adjoint() * m - id));
    return worst;
}

double max_commutator(const CommutingTuple& t) {
    double worst = 0.0;
    for (std::size_t i = 0; i < t.matrices.size(); ++i)
        for (std::size_t j = i + 1; j < t.matrices.size(); ++j)
            worst = std::max(worst, operator_norm(t.matrices[i] * t.matrices[j] -
                                                  t.matrices[j] * t.matrices[i]));
    return worst;
}

// Principal argument in [0, 2pi).
double arg_principal(Complex z) {
    double a = std::arg(z);
    if (a < 0) a += two_pi;
    if (a >= two_pi) a = 0;
    return a;
}

// Angular distance on the circle.
double circle_dist(Complex z, Complex w) {
    double d = std::abs(arg_principal(z) - arg_principal(w));
    return std::min(d, two_pi - d);
}

// Refines every block by the Hermitian (or skew-Hermitian) part of the
// restriction of A, splitting along eigenvalue clusters.
std::vector<Matrix> refine_blocks(const std::vector<Matrix>& blocks, const Matrix& a,
                                  bool skew_part, double ctol) {
    std::vector<Matrix> out;
    for (const auto& b : blocks) {
        Matrix m = b.adjoint() * a * b;
        Matrix h = skew_part ? Matrix((m - m.adjoint()) / Complex(0, 2.0))
                             : Matrix((m + m.adjoint()) / 2.0);
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        const auto& vals = es.eigenvalues();
        const Matrix& vecs = es.eigenvectors();
        int d = static_cast<int>(vals.size());
        int start = 0;
        for (int i = 1; i <= d; ++i) {
            if (i == d || vals(i) - vals(i - 1) > ctol) {
                out.push_back(b * vecs.middleCols(start, i - start));
                start = i;
            }
        }
    }
    return out;
}

std::vector<Complex> block_label(const Matrix& basis, const CommutingTuple& t) {
    std::vector<Complex> label;
    label.reserve(t.matrices.size());
    double cols = static_cast<double>(basis.cols());
    for (const auto& a : t.matrices) {
        Complex lambda = (basis.adjoint() * a * basis).trace() / cols;
        double mod = std::abs(lambda);
        if (mod < 0.5) throw NotUnitary("block eigenvalue far from the unit circle");
        label.push_back(lambda / mod);
    }
    return label;
}

bool label_less(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        double ax = arg_principal(x[i]), ay = arg_principal(y[i]);
        if (ax != ay) return ax < ay;
    }
    return x.size() < y.size();
}

// -1 / +1 when within tol_pm of that axis point, 0 otherwise.
int snap_pm(Complex z, double tol_pm) {
    if (circle_dist(z, Complex(1, 0)) < tol_pm) return 1;
    if (circle_dist(z, Complex(-1, 0)) < tol_pm) return -1;
    return 0;
}

bool labels_conjugate(const std::vector<Complex>& x, const std::vector<Complex>& y, double tol) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (circle_dist(x[i], std::conj(y[i])) > tol) return false;
    return true;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {  // splitmix64
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * uniform());
    }
};

Matrix haar_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        Complex d = r(i, i);
        double mod = std::abs(d);
        q.col(i) *= mod > 0 ? d / mod : Complex(1, 0);
    }
    return q;
}

Matrix haar_orthogonal(int dim, Rng& rng) {
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i)
        if (r(i, i) < 0) q.col(i) *= -1.0;
    return q.cast<Complex>();
}

}  // namespace

bool check_commuting(const CommutingTuple& t) {
    require_shapes(t);
    return max_unitarity_defect(t) <= t.tol && max_commutator(t) <= t.tol;
}

LabeledConfig decompose(const CommutingTuple& t, const SpectralOptions& opts) {
    require_shapes(t);
    if (max_unitarity_defect(t) > t.tol) throw NotUnitary("decompose: matrices not unitary");
    if (max_commutator(t) > t.tol) throw NotCommuting("decompose: matrices do not commute");

    std::vector<Matrix> blocks{Matrix::Identity(t.dim, t.dim)};
    for (const auto& a : t.matrices) {
        blocks = refine_blocks(blocks, a, false, opts.tol_cluster);
        blocks = refine_blocks(blocks, a, true, opts.tol_cluster);
    }

    LabeledConfig out;
    out.ambient_dim = t.dim;
    for (const auto& b : blocks) {
        std::vector<Complex> label = block_label(b, t);
        bool trivial = true;
        for (const Complex& z : label)
            if (circle_dist(z, Complex(1, 0)) > opts.tol_cluster) trivial = false;
        if (trivial) continue;
        out.blocks.push_back({b, std::move(label)});
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const LabeledBlock& x, const LabeledBlock& y) {
                  return label_less(x.label, y.label);
              });
    return out;
}

CommutingTuple realize(const LabeledConfig& c, int n, const SpectralOptions& opts) {
    if (n < 0) {
        if (c.blocks.empty())
            throw InvalidParameter("realize: n required for an empty configuration");
        n = static_cast<int>(c.blocks.front().label.size());
    }
    if (n < 1) throw InvalidParameter("realize: n must be positive");
    if (c.ambient_dim < 1) throw DimensionMismatch("realize: ambient_dim must be positive");

    for (const auto& b : c.blocks) {
        if (static_cast<int>(b.label.size()) != n)
            throw DimensionMismatch("realize: label length disagrees with n");
        if (b.basis.rows() != c.ambient_dim || b.basis.cols() < 1)
            throw DimensionMismatch("realize: block basis has wrong shape");
    }
    // orthonormal columns, pairwise orthogonal blocks
    double otol = std::max(opts.tol_commute, 1e-12);
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        const Matrix& bi = c.blocks[i].basis;
        Matrix gram = bi.adjoint() * bi;
        gram -= Matrix::Identity(bi.cols(), bi.cols());
        if (operator_norm(gram) > otol)
            throw NonOrthogonalBlocks("realize: block basis not orthonormal");
        for (std::size_t j = i + 1; j < c.blocks.size(); ++j)
            if (operator_norm(bi.adjoint() * c.blocks[j].basis) > otol)
                throw NonOrthogonalBlocks("realize: blocks not pairwise orthogonal");
    }

    CommutingTuple t;
    t.n = n;
    t.dim = c.ambient_dim;
    t.tol = opts.tol_commute;
    for (int j = 0; j < n; ++j) {
        Matrix a = Matrix::Identity(c.ambient_dim, c.ambient_dim);
        for (const auto& b : c.blocks) {
            Complex lambda = b.label[j];
            double mod = std::abs(lambda);
            if (mod < 1e-8) throw InvalidSpec("realize: label not on the unit circle");
            lambda /= mod;
            a += (lambda - Complex(1, 0)) * (b.basis * b.basis.adjoint());
        }
        t.matrices.push_back(std::move(a));
    }
    return t;
}

std::vector<int> component_invariant(const CommutingTuple& t, const SpectralOptions& opts) {
    require_shapes(t);
    if (t.n > 20) throw InvalidParameter("component_invariant: n too large");
    double realness = 0.0;
    for (const auto& m : t.matrices) realness = std::max(realness, m.imag().cwiseAbs().maxCoeff());
    if (realness > t.tol) throw NotReal("component_invariant: matrices not real");

    LabeledConfig config = decompose(t, opts);  // throws NotUnitary / NotCommuting

    std::vector<int> invariant((1u << t.n) - 1, 0);
    std::vector<const LabeledBlock*> unpaired;
    for (const auto& b : config.blocks) {
        unsigned mask = 0;
        bool all_pm = true;
        for (int j = 0; j < t.n; ++j) {
            int s = snap_pm(b.label[j], opts.tol_pm);
            if (s == 0) {
                all_pm = false;
                break;
            }
            if (s == -1) mask |= 1u << j;
        }
        if (all_pm) {
            if (mask != 0) invariant[mask - 1] ^= static_cast<int>(b.basis.cols() % 2);
        } else {
            unpaired.push_back(&b);
        }
    }
    // non-real labels must occur in conjugate pairs with equal dimensions
    std::vector<bool> used(unpaired.size(), false);
    for (std::size_t i = 0; i < unpaired.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < unpaired.size(); ++j) {
            if (used[j]) continue;
            if (unpaired[i]->basis.cols() == unpaired[j]->basis.cols() &&
                labels_conjugate(unpaired[i]->label, unpaired[j]->label, opts.tol_pm)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) throw NotReal("component_invariant: eigenvalues not in conjugate pairs");
    }
    return invariant;
}

CommutingTuple real_form(const LabeledConfig& c, const SpectralOptions& opts) {
    if (c.blocks.empty()) throw InvalidParameter("real_form: empty configuration");
    int n = static_cast<int>(c.blocks.front().label.size());
    for (const auto& b : c.blocks)
        if (static_cast<int>(b.label.size()) != n)
            throw DimensionMismatch("real_form: inconsistent label lengths");

    struct Entry {
        std::vector<Complex> label;
        int dim;
    };
    std::vector<Entry> self_blocks;
    std::vector<std::pair<Entry, Entry>> pairs;
    std::vector<Entry> pending;
    for (const auto& b : c.blocks) {
        Entry e{b.label, static_cast<int>(b.basis.cols())};
        bool all_pm = true;
        for (const Complex& z : e.label)
            if (snap_pm(z, opts.tol_pm) == 0) all_pm = false;
        if (all_pm)
            self_blocks.push_back(std::move(e));
        else
            pending.push_back(std::move(e));
    }
    std::vector<bool> used(pending.size(), false);
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < pending.size(); ++j) {
            if (used[j]) continue;
            if (pending[i].dim == pending[j].dim &&
                labels_conjugate(pending[i].label, pending[j].label, opts.tol_pm)) {
                pairs.emplace_back(pending[i], pending[j]);
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw NotConjugationClosed("real_form: label multiset not closed under conjugation");
    }

    int needed = 0;
    for (const auto& e : self_blocks) needed += e.dim;
    for (const auto& [x, y] : pairs) needed += 2 * x.dim;
    if (needed > c.ambient_dim)
        throw DimensionMismatch("real_form: blocks exceed the ambient dimension");

    CommutingTuple t;
    t.n = n;
    t.dim = c.ambient_dim;
    t.tol = opts.tol_commute;
    for (int j = 0; j < n; ++j) t.matrices.push_back(Matrix::Identity(t.dim, t.dim));

    int pos = 0;
    for (const auto& e : self_blocks) {
        for (int j = 0; j < n; ++j) {
            double sign = snap_pm(e.label[j], opts.tol_pm);
            for (int d = 0; d < e.dim; ++d) t.matrices[j](pos + d, pos + d) = sign;
        }
        pos += e.dim;
    }
    // A conjugate pair (V, Vbar) with V spanned by (e_a - i e_b)/sqrt(2)
    // yields the rotation by arg(label) on the real plane span(e_a, e_b).
    for (const auto& [x, y] : pairs) {
        (void)y;
        for (int d = 0; d < x.dim; ++d) {
            for (int j = 0; j < n; ++j) {
                double theta = std::arg(x.label[j]);
                t.matrices[j](pos, pos) = std::cos(theta);
                t.matrices[j](pos, pos + 1) = -std::sin(theta);
                t.matrices[j](pos + 1, pos) = std::sin(theta);
                t.matrices[j](pos + 1, pos + 1) = std::cos(theta);
            }
            pos += 2;
        }
    }
    return t;
}

CommutingTuple random_commuting(int n, int dim, const std::vector<BlockSpec>& spec,
                                std::uint64_t seed) {
    if (n < 1 || dim < 1) throw InvalidSpec("random_commuting: n and dim must be positive");
    int total = 0;
    bool all_real = true;
    for (const auto& b : spec) {
        if (b.dim < 1) throw InvalidSpec("random_commuting: block dimension must be positive");
        if (static_cast<int>(b.label.size()) != n)
            throw InvalidSpec("random_commuting: label length must equal n");
        for (const Complex& z : b.label) {
            if (std::abs(z) < 1e-12) throw InvalidSpec("random_commuting: zero label entry");
            if (std::imag(z) != 0.0) all_real = false;
        }
        total += b.dim;
    }
    if (total > dim) throw InvalidSpec("random_commuting: block dimensions exceed dim");

    CommutingTuple t;
    t.n = n;
    t.dim = dim;
    t.tol = 1e-10;
    if (spec.empty()) {
        for (int j = 0; j < n; ++j) t.matrices.push_back(Matrix::Identity(dim, dim));
        return t;
    }

    Rng rng(seed);
    Matrix q = all_real ? haar_orthogonal(dim, rng) : haar_unitary(dim, rng);

    for (int j = 0; j < n; ++j) {
        Matrix d = Matrix::Identity(dim, dim);
        int pos = 0;
        for (const auto& b : spec) {
            Complex lambda = b.label[j] / std::abs(b.label[j]);
            for (int i = 0; i < b.dim; ++i) d(pos + i, pos + i) = lambda;
            pos += b.dim;
        }
        t.matrices.push_back(q * d * q.adjoint());
    }
    return t;
}

std::vector<BlockSpec> random_label_spec(int n, int dim, std::uint64_t seed) {
    if (n < 1 || dim < 1) throw InvalidSpec("random_label_spec: n and dim must be positive");
    Rng rng(seed);
    constexpr int grid = 64;
    int max_blocks = std::min<int>(dim, 4);
    int count = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_blocks));

    std::vector<std::vector<int>> used_angles;
    std::vector<BlockSpec> spec;
    int capacity = dim;
    for (int b = 0; b < count && capacity > 0; ++b) {
        std::vector<int> angles(n);
        for (int attempt = 0; attempt < 200; ++attempt) {
            bool nontrivial = false;
            for (int j = 0; j < n; ++j) {
                angles[j] = static_cast<int>(rng.next() % grid);
                if (angles[j] != 0) nontrivial = true;
            }
            if (nontrivial &&
                std::find(used_angles.begin(), used_angles.end(), angles) == used_angles.end())
                break;
        }
        used_angles.push_back(angles);
        BlockSpec bs;
        bs.dim = 1 + static_cast<int>(rng.next() % 2);
        bs.dim = std::min(bs.dim, capacity);
        capacity -= bs.dim;
        for (int j = 0; j < n; ++j) {
            double theta = two_pi * angles[j] / grid;
            bs.label.push_back(Complex(std::cos(theta), std::sin(theta)));
        }
        spec.push_back(std::move(bs));
    }
    return spec;
}

double tuple_distance(const CommutingTuple& a, const CommutingTuple& b) {
    if (a.n != b.n || a.dim != b.dim)
        throw DimensionMismatch("tuple_distance: shapes disagree");
    double sq = 0.0;
    for (int j = 0; j < a.n; ++j) sq += (a.matrices[j] - b.matrices[j]).squaredNorm();
    return std::sqrt(sq);
}

bool same_label_multiset(const LabeledConfig& a, const LabeledConfig& b, double tol) {
    if (a.blocks.size() != b.blocks.size()) return false;
    std::vector<bool> used(b.blocks.size(), false);
    for (const auto& ba : a.blocks) {
        bool found = false;
        for (std::size_t j = 0; j < b.blocks.size(); ++j) {
            if (used[j]) continue;
            const auto& bb = b.blocks[j];
            if (ba.basis.cols() != bb.basis.cols()) continue;
            if (ba.label.size() != bb.label.size()) continue;
            bool match = true;
            for (std::size_t i = 0; i < ba.label.size(); ++i)
                if (std::abs(ba.label[i] - bb.label[i]) > tol) match = false;
            if (match) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

nlohmann::json real_part_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).real());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json imag_part_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).imag());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& re, const nlohmann::json* im) {
    if (!re.is_array() || re.empty()) throw IoError("matrix: expected non-empty array of rows");
    int rows = static_cast<int>(re.size());
    int cols = static_cast<int>(re.at(0).size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(re.at(i).size()) != cols) throw IoError("matrix: ragged rows");
        for (int j = 0; j < cols; ++j) {
            double x = re.at(i).at(j).get<double>();
            double y = 0.0;
            if (im) y = im->at(i).at(j).get<double>();
            m(i, j) = Complex(x, y);
        }
    }
    return m;
}

}  // namespace

nlohmann::json to_json(const CommutingTuple& t) {
    nlohmann::json out;
    out["n"] = t.n;
    out["dim"] = t.dim;
    out["tol"] = t.tol;
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : t.matrices) {
        nlohmann::json jm;
        jm["re"] = real_part_json(m);
        if (m.imag().cwiseAbs().maxCoeff() != 0.0) jm["im"] = imag_part_json(m);
        mats.push_back(jm);
    }
    out["matrices"] = mats;
    return out;
}

CommutingTuple tuple_from_json(const nlohmann::json& j) {
    CommutingTuple t;
    try {
        t.n = j.at("n").get<int>();
        t.dim = j.at("dim").get<int>();
        t.tol = j.value("tol", 1e-9);
        for (const auto& jm : j.at("matrices")) {
            const nlohmann::json* im = jm.contains("im") ? &jm.at("im") : nullptr;
            t.matrices.push_back(matrix_from_json(jm.at("re"), im));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("tuple: ") + e.what());
    }
    require_shapes(t);
    return t;
}

nlohmann::json to_json(const LabeledConfig& c) {
    nlohmann::json out;
    out["ambient_dim"] = c.ambient_dim;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : c.blocks) {
        nlohmann::json jb;
        jb["basis_re"] = real_part_json(b.basis);
        jb["basis_im"] = imag_part_json(b.basis);
        nlohmann::json label = nlohmann::json::array();
        for (const Complex& z : b.label)
            label.push_back({{"re", z.real()}, {"im", z.imag()}});
        jb["label"] = label;
        blocks.push_back(jb);
    }
    out["blocks"] = blocks;
    return out;
}

LabeledConfig config_from_json(const nlohmann::json& j) {
    LabeledConfig c;
    try {
        c.ambient_dim = j.at("ambient_dim").get<int>();
        for (const auto& jb : j.at("blocks")) {
            LabeledBlock b;
            const nlohmann::json* im = jb.contains("basis_im") ? &jb.at("basis_im") : nullptr;
            b.basis = matrix_from_json(jb.at("basis_re"), im);
            for (const auto& jl : jb.at("label"))
                b.label.push_back(Complex(jl.at("re").get<double>(), jl.value("im", 0.0)));
            c.blocks.push_back(std::move(b));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("config: ") + e.what());
    }
    return c;
}

}  // namespace commat
