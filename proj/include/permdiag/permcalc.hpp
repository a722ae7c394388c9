// Vertex and face maps between permutahedra: the projections Delta_{r,s},
// the cube maps rho and gamma, singular coface and codegeneracy operators,
// and the set operations behind their structure relations.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdiag/core.hpp"

namespace pd {

// A vertex of P_n in one-line form a_1|...|a_n.
using Perm = std::vector<int>;

// A vertex of I^{n-1}: for each i the pair {i, i+1} in some order.
struct CubicalVertex {
    std::vector<std::pair<int, int>> pairs;

    int n() const { return static_cast<int>(pairs.size()) + 1; }
    bool operator==(const CubicalVertex&) const = default;
};

// (n_1, ..., n_k) with n_1 + ... + n_k = n - 1, indices 1-based.
struct Decomposition {
    std::vector<int> parts;

    int k() const { return static_cast<int>(parts.size()); }
    int n() const;
    int partial(int i) const;  // n_(i) = n_1 + ... + n_i
    int p(int i) const { return 1 + partial(i - 1); }
    int q(int i) const { return 1 + partial(k()) - partial(i); }
    Block c(int i) const;  // {p_i, ..., p_i + n_i}
};

// Faces over an arbitrary finite ground set, rendered like partitions.
std::string render_blocks(const Blocks& b);
std::string render_perm(const Perm& v);
std::string render_cubical(const CubicalVertex& c);
Perm parse_perm(const std::string& text);

struct RSImage {
    Blocks left, right;
    bool degenerate = false;
};

// Delta_{r,s} on a face whose ground set U has r + s - 1 elements; r and s
// refer to the first r and the last s elements of U.
RSImage delta_rs_face(const Blocks& u, int r, int s);
std::pair<Perm, Perm> delta_rs_vertex(const Perm& v, int r, int s);

CubicalVertex rho(const Perm& v);
Perm gamma(const CubicalVertex& c);
bool is_cubical(const Perm& v);

// The sizes (l, m) of A|B: m counts the block holding n.
std::pair<int, int> split_sizes(const OrderedPartition& ab);
// The two faces of P_n whose product presents A|B as P_l x P_m.
std::pair<OrderedPartition, OrderedPartition> embedding(const OrderedPartition& ab);
// h_{A|B} on vertices: x in P_l, y in P_m, both in standard labels.
Perm embed_h(const OrderedPartition& ab, const Perm& x, const Perm& y);
Perm embed_h(const OrderedPartition& ab, const std::pair<Perm, Perm>& xy);
std::pair<Perm, Perm> project_phi(const OrderedPartition& ab, const Perm& c);

// delta_{A|B}: (n-1)! -> n! and beta_{A|B}: n! -> (n-1)!.
Perm coface_delta(const OrderedPartition& ab, const Perm& x);
Perm codegeneracy_beta(const OrderedPartition& ab, const Perm& y);
// f_{A_1|...|A_k} from (n-k+1)! to n!, blocks fed in order of their maxima.
Perm morphism_f(const OrderedPartition& a, const Perm& x);

// Lower and upper disjoint unions with respect to U.
Block lower_union(const Block& a, const Block& b, const Block& u);
Block upper_union(const Block& a, const Block& b, const Block& u);
// A box (B_1|...|B_k); the operation is symmetric in its two arguments.
Blocks box(const Block& a, const Blocks& bs);

struct Factorization {
    std::vector<OrderedPartition> word1, word2;  // leftmost factor applied last
};

Factorization faceword_factorizations(const OrderedPartition& u);
// Applies a word of cofaces, rightmost first.
Perm apply_cofaces(const std::vector<OrderedPartition>& word, const Perm& x);

bool in_q(const OrderedPartition& uv, int p, int q);
// [A|B; C|D] when delta_{A|B} delta_{C|D} is a single f_{X|Y|Z}.
std::optional<OrderedPartition> quadratic_condition(const OrderedPartition& ab, const OrderedPartition& cd);

struct MultipSplit {
    OrderedPartition kl, mn, cd;
};

MultipSplit multip_split(const OrderedPartition& ab, int r, int s);

struct FormalCounts {
    int n_prime = 0, n_second = 0;
};

FormalCounts formal_counts(const OrderedPartition& ab, const Decomposition& d, int i);
// Coefficient of d_{A|B} in the differential on the (n_1..n_k) summand.
Coef differential_sign(const OrderedPartition& ab, const Decomposition& d, int i);

}  // namespace pd
