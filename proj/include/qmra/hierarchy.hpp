#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmra/angular_momentum.hpp"
#include "qmra/linalg.hpp"

namespace qmra {

/// Multiplicities and dimensions grow like 2^N, so they are kept exact.
using BigInt = boost::multiprecision::cpp_int;

struct SpinMultiplicity {
    SpinLabel spin;
    BigInt count;

    friend bool operator==(const SpinMultiplicity&, const SpinMultiplicity&) = default;
};

/// Reachable total spins of a block, descending J.
using SpinContent = std::vector<SpinMultiplicity>;

/// Content of the product of two blocks.
SpinContent couple_contents(const SpinContent& left, const SpinContent& right);

/// Content of `num_qubits` spin-1/2 coupled in any order. Works for any
/// register size, not only powers of two.
SpinContent register_content(int num_qubits);

/// Sum over the content of (2J+1) * multiplicity.
BigInt content_dimension(const SpinContent& content);

inline constexpr int max_tree_qubits = 4096;
/// Dense matrices are limited to 2^12 amplitudes.
inline constexpr int max_dense_log_dim = 12;

/// Balanced binary coupling plan over 2^M spin-1/2 leaves. Internal nodes
/// are numbered in heap order: the root is 1 and the children of node k are
/// 2k and 2k+1. Leaves are 2^M ... 2^(M+1)-1 and map to qubits 0 ... 2^M-1.
class CouplingTree {
public:
    struct Node {
        int level;       // 0 for leaves, M for the root
        int first_qubit;
        int qubit_count; // 2^level
        std::shared_ptr<const SpinContent> content;
    };

    int num_qubits() const noexcept { return num_qubits_; }
    int levels() const noexcept { return levels_; }

    /// Node by heap index, 1 <= index < 2 * num_qubits.
    const Node& node(std::size_t heap_index) const;
    std::size_t internal_node_count() const noexcept {
        return static_cast<std::size_t>(num_qubits_) - 1;
    }

    /// All nodes at a level couple the same number of leaves and share content.
    const SpinContent& level_content(int level) const;
    const SpinContent& root_content() const { return level_content(levels_); }

    friend CouplingTree build_coupling_tree(int num_qubits);

private:
    int num_qubits_ = 1;
    int levels_ = 0;
    std::vector<Node> nodes_; // index 0 unused
    std::vector<std::shared_ptr<const SpinContent>> per_level_;
};

/// Throws InvalidSize unless num_qubits is a power of two in [1, 4096].
CouplingTree build_coupling_tree(int num_qubits);

/// Column label of the hierarchic transform. `path` holds the intermediate
/// spin of every internal node in heap order, so path[0] is the total spin.
struct MultipletBasisState {
    std::vector<SpinLabel> path;
    MultipletLabel terminal;

    friend bool operator==(const MultipletBasisState&, const MultipletBasisState&) = default;
};

/// Canonical column order: descending J, ascending M, then the path
/// compared lexicographically.
bool canonical_less(const MultipletBasisState& a, const MultipletBasisState& b);

inline constexpr const char* canonical_ordering_description =
    "descending J, ascending M, lexicographic heap-order path";

std::string describe(const MultipletBasisState& s);

/// Hierarchic basis of a whole register: column labels plus the real
/// orthogonal matrix whose columns are those states in the product basis.
struct HierarchicBasis {
    std::vector<MultipletBasisState> states;
    RealMatrix columns;
};

/// Basis of a single block of 2^level qubits. Every block at one level of
/// a tree shares it.
HierarchicBasis block_basis(int level);

/// Hierarchic basis of the tree's full register.
HierarchicBasis hierarchic_basis(const CouplingTree& tree);

/// U with U(product index, hierarchic index) = <product|multiplet state>.
/// Hierarchic amplitudes of a state psi are U^dagger psi.
UnitaryMatrix hierarchic_transform(const CouplingTree& tree);

RegisterState to_hierarchic(const RegisterState& product_amplitudes, const CouplingTree& tree);
RegisterState from_hierarchic(const ComplexVector& hierarchic_amplitudes, const CouplingTree& tree);

/// dim V_j for j = 0..M and dim W_j for j = 1..M (stored at index j - 1).
struct LadderDimensions {
    std::vector<BigInt> approximation;
    std::vector<BigInt> detail;
};

/// dim V_j = (2^j + 1)^(2^(M-j)); dim W_j = dim V_(j-1) - dim V_j.
/// Throws InvalidSize outside 0 <= M <= 12.
LadderDimensions ladder_dimensions(int levels);

/// Orthogonal projector onto V_j in the product basis: every block of 2^j
/// qubits held at its maximal spin 2^(j-1). V_0 is the whole space.
RealMatrix approximation_projector(const CouplingTree& tree, int level);

/// Projector onto W_j = V_(j-1) minus V_j, 1 <= j <= M.
RealMatrix detail_projector(const CouplingTree& tree, int level);

/// Squared norms of a state's projections onto W_1 ... W_M and V_M.
struct LadderProfile {
    std::vector<double> detail;
    double approximation = 0.0;

    double total() const;
};

/// Throws NormalizationError if | |psi| - 1 | > 1e-6.
LadderProfile analyze_state(const RegisterState& state, const CouplingTree& tree);

/// Operators keyed by the total-spin label of a level-alpha block.
using BlockOperators = std::map<MultipletLabel, ComplexMatrix>;

/// Hierarchic basis states of a level-alpha block carrying a given terminal
/// label, in canonical order. Their count is the size a block operator for
/// that label must have.
std::vector<MultipletBasisState> conditioned_subspace(int level, const MultipletLabel& label);

/// Block-diagonal operator in the hierarchic basis of one level-alpha block
/// (2^alpha qubits). The block for label (J, M) acts on the states below that
/// block's root which carry (J, M); missing labels get the identity.
/// Throws ShapeError if a block has the wrong size or names an absent label.
ComplexMatrix conditioned_operator(const CouplingTree& tree, int level, const BlockOperators& blocks);

/// The same operator applied to every level-alpha block of the register,
/// expressed in the register's product basis.
ComplexMatrix conditioned_register_operator(const CouplingTree& tree, int level,
                                            const BlockOperators& blocks);

/// Label of a hierarchic basis state at one level. At the root it is the
/// terminal (J, M); below the root it is the tuple of intermediate spins of
/// that level's nodes, left to right.
struct LevelLabel {
    std::vector<SpinLabel> spins;
    std::optional<int> twice_M;

    friend auto operator<=>(const LevelLabel&, const LevelLabel&) = default;
};

std::string describe(const LevelLabel& l);

struct ReducedDensity {
    std::vector<LevelLabel> labels;
    ComplexMatrix rho;
};

/// Density matrix over the level-alpha labels, 1 <= alpha <= M, obtained by
/// summing out every other part of the hierarchic label. Diagonal entry for
/// a label is the weight of hierarchic basis states carrying it.
ReducedDensity reduce_to_level(const RegisterState& state, const CouplingTree& tree, int level);

} // namespace qmra
