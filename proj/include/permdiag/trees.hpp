// Leveled trees, planar rooted trees and the projections from P onto the
// multiplihedra J and associahedra K.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdiag/core.hpp"

namespace pd {

// A label interval [a,b] of a node; the node has leaves a..b+1.
using Interval = std::pair<int, int>;
using FacePairIndex = std::pair<int, int>;  // (i, l) of d_(i,l)

// d_{level_k} ... d_{level_1}; levels[0] is applied first.  Each level is a
// batch of disjoint pairs (i, l) in increasing order of i.
struct FaceWord {
    int labels = 0;
    std::vector<std::vector<FacePairIndex>> levels;

    auto operator<=>(const FaceWord&) const = default;
    bool operator==(const FaceWord&) const = default;
};

// Planar rooted tree on labels+1 leaves, as its set of node intervals
// (root included), sorted.
struct PlanarTree {
    int labels = 0;
    std::vector<Interval> nodes;

    int dim() const { return labels - static_cast<int>(nodes.size()); }
    auto operator<=>(const PlanarTree&) const = default;
    bool operator==(const PlanarTree&) const = default;
};

// A face of the multiplihedron: the planar tree together with the position
// of every node off the left-most branch relative to the levels of that
// branch (2a: on the level of the a-th branch node, 2a+1: strictly between
// the a-th and (a+1)-th).
struct JCell {
    PlanarTree tree;
    std::vector<std::pair<Interval, int>> slots;

    int levels() const;
    int dim() const { return tree.labels - levels(); }
    auto operator<=>(const JCell&) const = default;
    bool operator==(const JCell&) const = default;
};

enum class Target { J, K };

struct LeveledNode {
    int level;  // 0-based block index
    Interval interval;
};

std::vector<LeveledNode> leveled_nodes(const OrderedPartition& u);
OrderedPartition partition_from_levels(int labels, const std::vector<std::vector<Interval>>& levels);

FaceWord partition_to_faceword(const OrderedPartition& u);
OrderedPartition faceword_to_partition(const FaceWord& w);
std::string render_faceword(const FaceWord& w);
FaceWord parse_faceword(const std::string& text, int labels);

std::string render_parenthesization(const OrderedPartition& u);
std::string render_tree(const PlanarTree& t);

PlanarTree tree_of(const OrderedPartition& u);
JCell jcell_of(const OrderedPartition& u);

bool is_degenerate(const OrderedPartition& u, Target target);
// The same predicate read off the face word instead of the blocks.
bool is_degenerate_by_word(const OrderedPartition& u, Target target);

std::optional<PlanarTree> project_k(const OrderedPartition& u);
std::optional<JCell> project_j(const OrderedPartition& u);
// J cell to K cell.
PlanarTree forget_levels(const JCell& c);

// Canonical non-degenerate preimages in P.
OrderedPartition preimage(const PlanarTree& t);
OrderedPartition preimage(const JCell& c);
// Canonical face word of a planar tree (one pair per level, post-order).
FaceWord canonical_word(const PlanarTree& t);
// Lexicographically least non-degenerate member of the fiber of c.
OrderedPartition representative(const JCell& c);

// Fibers of the projection on all faces of P_n, each sorted, in order of
// their least member.
std::vector<std::vector<OrderedPartition>> fibers(int n, Target target);

// Sign with which a face maps onto its image cell (0 when degenerate).
Coef orientation_sign(const OrderedPartition& u, Target target);

using KChain = LinComb<PlanarTree>;
using KTensorChain = LinComb<std::pair<PlanarTree, PlanarTree>>;
using JChain = LinComb<JCell>;
using JTensorChain = LinComb<std::pair<JCell, JCell>>;

KChain push_k(const Chain& c);
KTensorChain push_k(const TensorChain& t);
JChain push_j(const Chain& c);
JTensorChain push_j(const TensorChain& t);
KChain push_jk(const JChain& c);
KTensorChain push_jk(const JTensorChain& t);

enum class AssocMethod { projection, direct };

// Diagonal of e^n, the top cell of K_{n+2}.
KTensorChain diagonal_assoc(int n, AssocMethod method = AssocMethod::projection);

// The upper bound on i_k subtracts a partial sum of lengths indexed by
// o'(t_k), an index into the left factor.  left_partial_sums uses the left
// lengths l_(o'(t_k)); verbatim uses the right lengths l'_(o'(t_k)),
// which overcounts from n = 3 on and is kept for diagnostics.
enum class DirectBound { verbatim, left_partial_sums };
KTensorChain diagonal_assoc_direct(int n, DirectBound bound = DirectBound::left_partial_sums);

KTensorChain diagonal_k(const PlanarTree& t);
KTensorChain diagonal_k(const KChain& c);
KChain boundary_k(const PlanarTree& t);
KChain boundary_k(const KChain& c);
KTensorChain tensor_boundary_k(const KTensorChain& t);

// Diagonal of the top cell of J_{n+1}.
JTensorChain diagonal_multi(int n);
JTensorChain diagonal_j(const JCell& c);
JTensorChain diagonal_j(const JChain& c);
JChain boundary_j(const JCell& c);
JChain boundary_j(const JChain& c);
JTensorChain tensor_boundary_j(const JTensorChain& t);

// Boundary of the top cell of P_{n+1} pushed down.
KChain boundary_projected_k(int n);
JChain boundary_projected_j(int n);

}  // namespace pd
