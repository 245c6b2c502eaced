#include "qmra/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qmra/error.hpp"

namespace qmra {

namespace {

bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

int log2_exact(int n) { return std::countr_zero(static_cast<unsigned>(n)); }

void require_dense_levels(int levels) {
    // 2^(2^levels) amplitudes must stay within the dense cap.
    if (levels < 0 || (1 << std::min(levels, 5)) > max_dense_log_dim) {
        throw InvalidSize("dense hierarchic matrices are limited to 2^" +
                          std::to_string(max_dense_log_dim) + " amplitudes");
    }
}

void require_level(const CouplingTree& tree, int level, int lowest) {
    if (level < lowest || level > tree.levels()) {
        throw InvalidSize("level " + std::to_string(level) + " outside " + std::to_string(lowest) +
                          ".." + std::to_string(tree.levels()));
    }
}

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

template <class Matrix>
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <class Matrix>
Matrix kron_power(const Matrix& block, int copies) {
    Matrix out = block;
    for (int i = 1; i < copies; ++i) out = kron(out, block);
    return out;
}

// Places a child's heap-ordered path inside its parent's path.
void embed_child_path(const std::vector<SpinLabel>& child, bool right,
                      std::vector<SpinLabel>& parent) {
    for (std::size_t pos = 0; pos < child.size(); ++pos) {
        const std::size_t local = pos + 1;
        const std::size_t depth_start = std::bit_floor(local);
        const std::size_t target = 2 * depth_start + (right ? depth_start : 0) + (local - depth_start);
        parent[target - 1] = child[pos];
    }
}

HierarchicBasis leaf_basis() {
    HierarchicBasis b;
    b.states.push_back({{}, MultipletLabel(1, -1)});
    b.states.push_back({{}, MultipletLabel(1, 1)});
    b.columns = RealMatrix::Identity(2, 2);
    return b;
}

HierarchicBasis couple_blocks(const HierarchicBasis& child, int child_level) {
    // Group child columns by (path, J); each group is one multiplet, indexed by M.
    struct Multiplet {
        std::vector<SpinLabel> path;
        int twice_J;
        std::map<int, Eigen::Index> column_by_M;
    };
    std::vector<Multiplet> multiplets;
    for (std::size_t i = 0; i < child.states.size(); ++i) {
        const auto& s = child.states[i];
        auto it = std::find_if(multiplets.begin(), multiplets.end(), [&](const Multiplet& m) {
            return m.twice_J == s.terminal.twice_J() && m.path == s.path;
        });
        if (it == multiplets.end()) {
            multiplets.push_back({s.path, s.terminal.twice_J(), {}});
            it = std::prev(multiplets.end());
        }
        it->column_by_M[s.terminal.twice_M()] = static_cast<Eigen::Index>(i);
    }

    const Eigen::Index child_dim = child.columns.rows();
    const std::size_t path_len = (std::size_t{2} << child_level) - 1;

    std::vector<MultipletBasisState> states;
    std::vector<Eigen::VectorXd> columns;
    for (const auto& left : multiplets) {
        for (const auto& right : multiplets) {
            const SpinLabel jl(left.twice_J), jr(right.twice_J);
            for (SpinLabel total : multiplet_content(jl, jr)) {
                std::vector<SpinLabel> path(path_len);
                path[0] = total;
                embed_child_path(left.path, false, path);
                embed_child_path(right.path, true, path);
                for (int tM : total.twice_m_values()) {
                    Eigen::VectorXd col = Eigen::VectorXd::Zero(child_dim * child_dim);
                    for (const auto& [ml, il] : left.column_by_M) {
                        const int mr = tM - ml;
                        auto jt = right.column_by_M.find(mr);
                        if (jt == right.column_by_M.end()) continue;
                        const double c = cg(jl, ml, jr, mr, MultipletLabel(total.twice(), tM));
                        if (c == 0.0) continue;
                        col += c * kron(Eigen::VectorXd(child.columns.col(il)),
                                        Eigen::VectorXd(child.columns.col(jt->second)));
                    }
                    states.push_back({path, MultipletLabel(total.twice(), tM)});
                    columns.push_back(std::move(col));
                }
            }
        }
    }

    std::vector<std::size_t> order(states.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(states[a], states[b]); });

    HierarchicBasis out;
    out.states.reserve(states.size());
    out.columns.resize(child_dim * child_dim, static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.states.push_back(std::move(states[order[k]]));
        out.columns.col(static_cast<Eigen::Index>(k)) = columns[order[k]];
    }
    return out;
}

double checked_norm(const RegisterState& state, const CouplingTree& tree) {
    const Eigen::Index expected = Eigen::Index{1} << tree.num_qubits();
    if (state.size() != expected) {
        throw ShapeError("state has " + std::to_string(state.size()) + " amplitudes, register needs " +
                         std::to_string(expected));
    }
    const double norm = state.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "state norm " << norm << " deviates from 1";
        throw NormalizationError(msg.str());
    }
    return norm;
}

} // namespace

SpinContent couple_contents(const SpinContent& left, const SpinContent& right) {
    if (left.empty() || right.empty()) return {};
    int top = 0;
    for (const auto& l : left) top = std::max(top, l.spin.twice());
    int top_r = 0;
    for (const auto& r : right) top_r = std::max(top_r, r.spin.twice());
    top += top_r;

    // Every (JL, JR) pair adds its product to the interval |JL-JR| .. JL+JR
    // (step 2 in doubled units); a difference array makes that O(1) per pair.
    std::vector<BigInt> diff(static_cast<std::size_t>(top) + 3);
    for (const auto& l : left) {
        for (const auto& r : right) {
            const BigInt w = l.count * r.count;
            const int lo = std::abs(l.spin.twice() - r.spin.twice());
            const int hi = l.spin.twice() + r.spin.twice();
            diff[static_cast<std::size_t>(lo)] += w;
            diff[static_cast<std::size_t>(hi) + 2] -= w;
        }
    }
    for (std::size_t i = 2; i < diff.size(); ++i) diff[i] += diff[i - 2];

    SpinContent out;
    for (int tJ = top; tJ >= 0; --tJ) {
        const auto& n = diff[static_cast<std::size_t>(tJ)];
        if (n != 0) out.push_back({SpinLabel(tJ), n});
    }
    return out;
}

SpinContent register_content(int num_qubits) {
    if (num_qubits < 1) throw InvalidSize("register needs at least one qubit");
    const SpinContent half{{SpinLabel::half(), 1}};
    SpinContent content = half;
    for (int i = 1; i < num_qubits; ++i) content = couple_contents(content, half);
    return content;
}

BigInt content_dimension(const SpinContent& content) {
    BigInt dim = 0;
    for (const auto& e : content) dim += e.count * e.spin.multiplicity();
    return dim;
}

const CouplingTree::Node& CouplingTree::node(std::size_t heap_index) const {
    if (heap_index == 0 || heap_index >= nodes_.size()) {
        throw InvalidSize("node index " + std::to_string(heap_index) + " out of range");
    }
    return nodes_[heap_index];
}

const SpinContent& CouplingTree::level_content(int level) const {
    if (level < 0 || level > levels_) {
        throw InvalidSize("level " + std::to_string(level) + " out of range");
    }
    return *per_level_[static_cast<std::size_t>(level)];
}

CouplingTree build_coupling_tree(int num_qubits) {
    if (!is_power_of_two(num_qubits) || num_qubits > max_tree_qubits) {
        throw InvalidSize("register size must be a power of two in [1, " +
                          std::to_string(max_tree_qubits) + "], got " + std::to_string(num_qubits));
    }
    CouplingTree tree;
    tree.num_qubits_ = num_qubits;
    tree.levels_ = log2_exact(num_qubits);

    auto content = std::make_shared<const SpinContent>(SpinContent{{SpinLabel::half(), 1}});
    tree.per_level_.push_back(content);
    for (int level = 1; level <= tree.levels_; ++level) {
        content = std::make_shared<const SpinContent>(couple_contents(*content, *content));
        tree.per_level_.push_back(content);
    }

    const std::size_t count = 2 * static_cast<std::size_t>(num_qubits);
    tree.nodes_.resize(count);
    for (std::size_t k = 1; k < count; ++k) {
        const int depth = static_cast<int>(std::bit_width(k)) - 1;
        const int level = tree.levels_ - depth;
        const int size = 1 << level;
        const int position = static_cast<int>(k - (std::size_t{1} << depth));
        tree.nodes_[k] = {level, position * size, size, tree.per_level_[static_cast<std::size_t>(level)]};
    }
    return tree;
}

bool canonical_less(const MultipletBasisState& a, const MultipletBasisState& b) {
    if (a.terminal.twice_J() != b.terminal.twice_J()) {
        return a.terminal.twice_J() > b.terminal.twice_J();
    }
    if (a.terminal.twice_M() != b.terminal.twice_M()) {
        return a.terminal.twice_M() < b.terminal.twice_M();
    }
    return std::lexicographical_compare(a.path.begin(), a.path.end(), b.path.begin(), b.path.end());
}

std::string describe(const MultipletBasisState& s) {
    std::ostringstream out;
    out << "|J=" << format_spin(s.terminal.twice_J()) << ", M=" << format_spin(s.terminal.twice_M())
        << "; path";
    for (const auto& j : s.path) out << ' ' << format_spin(j.twice());
    out << '>';
    return out.str();
}

HierarchicBasis block_basis(int level) {
    require_dense_levels(level);
    HierarchicBasis basis = leaf_basis();
    for (int l = 0; l < level; ++l) basis = couple_blocks(basis, l);
    return basis;
}

HierarchicBasis hierarchic_basis(const CouplingTree& tree) { return block_basis(tree.levels()); }

UnitaryMatrix hierarchic_transform(const CouplingTree& tree) {
    return UnitaryMatrix::trusted(hierarchic_basis(tree).columns.cast<Complex>());
}

RegisterState to_hierarchic(const RegisterState& product_amplitudes, const CouplingTree& tree) {
    const auto basis = hierarchic_basis(tree);
    if (product_amplitudes.size() != basis.columns.rows()) {
        throw ShapeError("amplitude count does not match the register");
    }
    return basis.columns.transpose().cast<Complex>() * product_amplitudes;
}

RegisterState from_hierarchic(const ComplexVector& hierarchic_amplitudes, const CouplingTree& tree) {
    const auto basis = hierarchic_basis(tree);
    if (hierarchic_amplitudes.size() != basis.columns.cols()) {
        throw ShapeError("amplitude count does not match the register");
    }
    return basis.columns.cast<Complex>() * hierarchic_amplitudes;
}

LadderDimensions ladder_dimensions(int levels) {
    if (levels < 0 || levels > max_dense_log_dim) {
        throw InvalidSize("level count must lie in 0..12, got " + std::to_string(levels));
    }
    LadderDimensions dims;
    for (int j = 0; j <= levels; ++j) {
        const BigInt base = (BigInt(1) << j) + 1;
        // For j = 0 the formula reduces to 2^(2^M), the full register.
        const BigInt v = j == 0 ? BigInt(1) << (1u << levels)
                                : boost::multiprecision::pow(base, 1u << (levels - j));
        dims.approximation.push_back(v);
    }
    for (int j = 1; j <= levels; ++j) {
        dims.detail.push_back(dims.approximation[static_cast<std::size_t>(j - 1)] -
                              dims.approximation[static_cast<std::size_t>(j)]);
    }
    return dims;
}

RealMatrix approximation_projector(const CouplingTree& tree, int level) {
    require_dense_levels(tree.levels());
    require_level(tree, level, 0);
    const Eigen::Index dim = Eigen::Index{1} << tree.num_qubits();
    if (level == 0) return RealMatrix::Identity(dim, dim);

    // Maximal-spin columns of the block's own hierarchic basis.
    const auto block = block_basis(level);
    const int twice_max = 1 << level;
    RealMatrix p = RealMatrix::Zero(block.columns.rows(), block.columns.rows());
    for (std::size_t i = 0; i < block.states.size(); ++i) {
        if (block.states[i].terminal.twice_J() == twice_max) {
            const auto col = block.columns.col(static_cast<Eigen::Index>(i));
            p += col * col.transpose();
        }
    }
    return kron_power(p, 1 << (tree.levels() - level));
}

RealMatrix detail_projector(const CouplingTree& tree, int level) {
    require_level(tree, level, 1);
    return approximation_projector(tree, level - 1) - approximation_projector(tree, level);
}

double LadderProfile::total() const {
    return std::accumulate(detail.begin(), detail.end(), approximation);
}

LadderProfile analyze_state(const RegisterState& state, const CouplingTree& tree) {
    require_dense_levels(tree.levels());
    checked_norm(state, tree);
    LadderProfile profile;
    RealMatrix previous = approximation_projector(tree, 0);
    for (int j = 1; j <= tree.levels(); ++j) {
        RealMatrix current = approximation_projector(tree, j);
        const RealMatrix w = previous - current;
        profile.detail.push_back((w.cast<Complex>() * state).squaredNorm());
        previous = std::move(current);
    }
    profile.approximation = (previous.cast<Complex>() * state).squaredNorm();
    return profile;
}

std::vector<MultipletBasisState> conditioned_subspace(int level, const MultipletLabel& label) {
    std::vector<MultipletBasisState> out;
    for (auto& s : block_basis(level).states) {
        if (s.terminal == label) out.push_back(std::move(s));
    }
    return out;
}

ComplexMatrix conditioned_operator(const CouplingTree& tree, int level, const BlockOperators& blocks) {
    require_level(tree, level, 1);
    const auto basis = block_basis(level);
    const auto n = static_cast<Eigen::Index>(basis.states.size());

    std::map<MultipletLabel, std::vector<Eigen::Index>> members;
    for (Eigen::Index i = 0; i < n; ++i) {
        members[basis.states[static_cast<std::size_t>(i)].terminal].push_back(i);
    }

    ComplexMatrix op = ComplexMatrix::Identity(n, n);
    for (const auto& [label, block] : blocks) {
        auto it = members.find(label);
        if (it == members.end()) {
            throw ShapeError("label (2J=" + std::to_string(label.twice_J()) + ", 2M=" +
                             std::to_string(label.twice_M()) + ") does not occur at level " +
                             std::to_string(level));
        }
        const auto& idx = it->second;
        const auto k = static_cast<Eigen::Index>(idx.size());
        if (block.rows() != k || block.cols() != k) {
            throw ShapeError("block for 2J=" + std::to_string(label.twice_J()) + " must be " +
                             std::to_string(k) + "x" + std::to_string(k));
        }
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) {
                op(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]) = block(r, c);
            }
        }
    }
    return op;
}

ComplexMatrix conditioned_register_operator(const CouplingTree& tree, int level,
                                            const BlockOperators& blocks) {
    require_dense_levels(tree.levels());
    const ComplexMatrix hier = conditioned_operator(tree, level, blocks);
    const ComplexMatrix u = block_basis(level).columns.cast<Complex>();
    const ComplexMatrix block_op = u * hier * u.adjoint();
    return kron_power(block_op, 1 << (tree.levels() - level));
}

std::string describe(const LevelLabel& l) {
    std::ostringstream out;
    if (l.twice_M) {
        out << "(J=" << format_spin(l.spins.front().twice()) << ", M=" << format_spin(*l.twice_M) << ')';
        return out.str();
    }
    out << '(';
    for (std::size_t i = 0; i < l.spins.size(); ++i) {
        out << (i ? ", " : "") << format_spin(l.spins[i].twice());
    }
    out << ')';
    return out.str();
}

ReducedDensity reduce_to_level(const RegisterState& state, const CouplingTree& tree, int level) {
    require_dense_levels(tree.levels());
    require_level(tree, level, 1);
    checked_norm(state, tree);

    const auto basis = hierarchic_basis(tree);
    const ComplexVector amps = basis.columns.transpose().cast<Complex>() * state;

    const std::size_t first = std::size_t{1} << (tree.levels() - level);
    const std::size_t last = 2 * first; // heap indices [first, last) sit at this level

    // Split every label into (level label, remainder).
    std::map<LevelLabel, std::size_t> label_index;
    std::map<std::vector<int>, std::size_t> rest_index;
    std::vector<std::pair<LevelLabel, std::vector<int>>> split;
    for (const auto& s : basis.states) {
        LevelLabel label;
        std::vector<int> rest;
        for (std::size_t k = 1; k <= s.path.size(); ++k) {
            if (k >= first && k < last) {
                label.spins.push_back(s.path[k - 1]);
            } else {
                rest.push_back(s.path[k - 1].twice());
            }
        }
        if (level == tree.levels()) {
            label.twice_M = s.terminal.twice_M();
        } else {
            rest.push_back(s.terminal.twice_M());
        }
        label_index.emplace(label, 0);
        rest_index.emplace(rest, 0);
        split.emplace_back(std::move(label), std::move(rest));
    }

    ReducedDensity out;
    std::size_t i = 0;
    for (auto& [label, idx] : label_index) {
        idx = i++;
        out.labels.push_back(label);
    }
    i = 0;
    for (auto& entry : rest_index) entry.second = i++;

    ComplexMatrix c = ComplexMatrix::Zero(static_cast<Eigen::Index>(label_index.size()),
                                          static_cast<Eigen::Index>(rest_index.size()));
    for (std::size_t k = 0; k < split.size(); ++k) {
        c(static_cast<Eigen::Index>(label_index.at(split[k].first)),
          static_cast<Eigen::Index>(rest_index.at(split[k].second))) = amps(static_cast<Eigen::Index>(k));
    }
    out.rho = c * c.adjoint();
    return out;
}

} // namespace qmra
