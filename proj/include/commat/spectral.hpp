#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "commat/errors.hpp"

namespace commat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// n complex dim x dim matrices, unitary and pairwise commuting within tol
/// (operator norm).
struct CommutingTuple {
    int n = 0;
    int dim = 0;
    std::vector<Matrix> matrices;
    double tol = 1e-9;
};

/// A joint eigenspace: orthonormal basis columns plus the tuple of unit
/// eigenvalues the matrices act by on it.
struct LabeledBlock {
    Matrix basis;  // ambient_dim x d, orthonormal columns
    std::vector<Complex> label;
};

/// Finite configuration of pairwise orthogonal labeled subspaces. Blocks
/// carrying the trivial label (1,...,1) are dropped, and labels are pairwise
/// distinct (coarsest decomposition).
struct LabeledConfig {
    int ambient_dim = 0;
    std::vector<LabeledBlock> blocks;
};

struct SpectralOptions {
    double tol_commute = 1e-9;  // unitarity / commutator / realness bound
    double tol_cluster = 1e-6;  // eigenvalue clustering (angular scale)
    double tol_pm = 1e-3;       // snap distance to the +-1 axis points
};

/// True iff all matrices are unitary and pairwise commute at the stored
/// tolerance. Throws DimensionMismatch on inconsistent shapes.
bool check_commuting(const CommutingTuple& t);

/// The coarsest joint-eigenspace decomposition (unique up to permutation):
/// eigendecompose the first matrix through its commuting Hermitian and
/// skew-Hermitian parts, cluster, then refine each cluster by the next
/// matrix, and so on. Blocks are sorted by label (principal argument in
/// [0, 2pi), lexicographic per coordinate); the trivial block is omitted.
LabeledConfig decompose(const CommutingTuple& t, const SpectralOptions& opts = {});

/// Inverse construction: A_j = I + sum_i (label_i^(j) - 1) B_i B_i^*.
/// n is inferred from the labels when n < 0 (required for empty configs).
CommutingTuple realize(const LabeledConfig& c, int n = -1, const SpectralOptions& opts = {});

/// Mod-2 component data of a commuting tuple of real orthogonal matrices:
/// entry for the sign pattern x in {-1,1}^n \ {(1,..,1)} is dim V_x mod 2,
/// where V_x is the joint eigenspace with eigenvalue -1 exactly at the
/// pattern's positions. Index: bit j of (index+1) set <=> coordinate j is -1.
std::vector<int> component_invariant(const CommutingTuple& t, const SpectralOptions& opts = {});

/// Real orthogonal tuple realizing a conjugation-closed label multiset:
/// self-conjugate (+-1) labels give real eigenblocks, conjugate label pairs
/// give 2x2 rotation blocks.
CommutingTuple real_form(const LabeledConfig& c, const SpectralOptions& opts = {});

struct BlockSpec {
    std::vector<Complex> label;
    int dim = 1;
};

/// Conjugates the prescribed label pattern by a seeded Haar-random unitary
/// (orthogonal when every label is real). Deterministic per seed.
CommutingTuple random_commuting(int n, int dim, const std::vector<BlockSpec>& spec,
                                std::uint64_t seed);

/// Random block specs with labels on a coarse 64-point angular grid, so all
/// distinct labels have coordinate gaps well above 1e-3.
std::vector<BlockSpec> random_label_spec(int n, int dim, std::uint64_t seed);

/// Frobenius norm of the stacked difference of two tuples.
double tuple_distance(const CommutingTuple& a, const CommutingTuple& b);

/// Label multisets (with dimensions) agree within tol, up to permutation.
bool same_label_multiset(const LabeledConfig& a, const LabeledConfig& b, double tol = 1e-8);

nlohmann::json to_json(const CommutingTuple& t);
CommutingTuple tuple_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LabeledConfig& c);
LabeledConfig config_from_json(const nlohmann::json& j);

}  // namespace commat
