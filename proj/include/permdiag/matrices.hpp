// Ordered, step and configuration matrices and the shift operators on them.
#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permdiag/core.hpp"

namespace pd {

// q x p grid; row 0 is the top row. Zero marks an empty cell.
class OrderedMatrix {
public:
    OrderedMatrix() = default;
    OrderedMatrix(int q, int p, std::vector<int> entries);
    static OrderedMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return q_; }
    int cols() const { return p_; }
    int at(int i, int j) const { return e_[static_cast<std::size_t>(i * p_ + j)]; }
    int& at(int i, int j) { return e_[static_cast<std::size_t>(i * p_ + j)]; }
    int order() const { return p_ + q_ - 1; }
    const std::vector<int>& entries() const { return e_; }
    std::vector<std::vector<int>> row_lists() const;

    // Position of a non-zero entry.
    std::pair<int, int> find(int value) const;

    std::vector<int> row_set(int i) const;
    std::vector<int> col_set(int j) const;

    auto operator<=>(const OrderedMatrix&) const = default;
    bool operator==(const OrderedMatrix&) const = default;

private:
    int q_ = 0;
    int p_ = 0;
    std::vector<int> e_;
};

// True when the grid satisfies the ordered-matrix conditions.
bool is_ordered(const OrderedMatrix& o);

OrderedMatrix step_from_permutation(std::span<const int> sigma);
std::vector<int> permutation_from_step(const OrderedMatrix& e);
bool is_step(const OrderedMatrix& e);
bool is_edge(const OrderedMatrix& e);

struct MatrixFaces {
    OrderedPartition column_face;
    OrderedPartition row_face;
};
MatrixFaces faces_of_matrix(const OrderedMatrix& o);

enum class ShiftKind { down, right };
// D_{i,j} or R_{i,j} with 0-based indices; nullopt means no action.
std::optional<OrderedMatrix> shift(const OrderedMatrix& o, ShiftKind kind, int i, int j);

OrderedMatrix transpose(const OrderedMatrix& o);

struct Derivation {
    OrderedMatrix base;
    // (column j, M_j) and (row i, N_i), 0-based indices, sets increasing.
    std::vector<std::pair<int, std::vector<int>>> right_moves;
    std::vector<std::pair<int, std::vector<int>>> down_moves;
};

// Replays a derivation; throws if any individual shift does not act.
OrderedMatrix replay(const Derivation& d);

int csgn(const OrderedMatrix& f, const Derivation& d);

struct Configuration {
    OrderedMatrix matrix;
    Derivation derivation;
    int sign = 1;
};

// All configuration matrices over {1..n+1}, sorted by matrix content.
std::vector<Configuration> enumerate_configurations(int n);
// Configuration matrices derived from one step matrix.
std::vector<Configuration> configurations_from(const OrderedMatrix& e);

// Closure of the step matrices under shift words whose down rows and right
// columns never decrease, where each row or column batch moves only entries
// above the target's maximum at the start of the batch.  Independent check
// of the normal form enumeration.
std::vector<OrderedMatrix> configurations_by_closure(int n);

// Sign change of a single down-shift predicted from the row contents.
int down_shift_sign_ratio(const OrderedMatrix& f, int i, int j);

std::string render_matrix(const OrderedMatrix& o);

}  // namespace pd
