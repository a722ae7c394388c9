// Ordered partitions as faces of the permutahedron, sign functions and the
// cellular chain complex C_*(P_n).
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permdiag/error.hpp"
#include "permdiag/linear.hpp"

namespace pd {

using Block = std::vector<int>;
using Blocks = std::vector<Block>;

// A face U_1|...|U_p of P_n. Blocks are non-empty, disjoint, cover {1..n}
// and are stored increasing.
class OrderedPartition {
public:
    OrderedPartition() = default;
    OrderedPartition(int n, Blocks blocks);

    static OrderedPartition top(int n);
    // The vertex x_1|x_2|...|x_n given by a permutation in one-line form.
    static OrderedPartition vertex(std::span<const int> perm);

    int ground_size() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    int dim() const { return n_ - size(); }
    bool is_vertex() const { return size() == n_; }
    bool is_top() const { return size() == 1; }
    const Block& block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
    const Blocks& blocks() const { return blocks_; }

    // Index of the block holding x, or -1.
    int block_of(int x) const;

    OrderedPartition reversed() const;

    // Blocks counted first, then lexicographic on the block sequence.
    std::strong_ordering operator<=>(const OrderedPartition& o) const;
    bool operator==(const OrderedPartition& o) const = default;

private:
    int n_ = 0;
    Blocks blocks_;
};

struct SignedFace {
    int coefficient = 1;
    OrderedPartition face;
};

using Chain = LinComb<OrderedPartition>;
using FacePair = std::pair<OrderedPartition, OrderedPartition>;
using TensorChain = LinComb<FacePair>;

struct PartitionSigns {
    int psgn = 1;
    int rsgn = 1;
    int sgn1 = 1;
    int sgn2 = 1;
};

// Sign of a sequence of distinct integers relative to its sorted order.
int permutation_sign(std::span<const int> seq);
// Sign of the permutation that sorts M followed by N (both increasing).
int shuffle_sign(std::span<const int> m, std::span<const int> n);

PartitionSigns partition_signs(const OrderedPartition& u);

enum class Side { left, right };

// Face operator on block k (0-based). With Side::left this is d^k_M, with
// Side::right it is the dual operator splitting the block as (U_k\M)|M.
SignedFace face(const OrderedPartition& u, int k, std::span<const int> m, Side side = Side::left);

Chain boundary(const OrderedPartition& u);
Chain boundary(const Chain& c);
TensorChain tensor_boundary(const TensorChain& t);

// All ordered partitions of {1..n}, optionally with exactly p blocks.
std::vector<OrderedPartition> enumerate_faces(int n, std::optional<int> p = std::nullopt);

// Relabel a partition of {1..#target} onto the increasing set target.
Blocks relabel(const OrderedPartition& u, std::span<const int> target);
// Concatenate block lists over disjoint ground sets into a partition of {1..n}.
OrderedPartition concat(int n, const std::vector<Blocks>& parts);

// Parsing and rendering in the bar notation ("12|3", or "1,10|2,...,9").
OrderedPartition parse_partition(const std::string& text);
std::string render_partition(const OrderedPartition& u);

}  // namespace pd
