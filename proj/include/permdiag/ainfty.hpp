// Tensor-product operations of A-infinity (co)algebras generated from the
// associahedral diagonal, the quadratic relations, and a numeric evaluator
// over small graded models.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permdiag/core.hpp"
#include "permdiag/trees.hpp"

namespace pd {

enum class Variance { algebra, coalgebra };

// f^{arity}_{left,right} = 1^left (x) f (x) 1^right.
struct Step {
    int arity = 1;
    int left = 0;
    int right = 0;

    auto operator<=>(const Step&) const = default;
};

// A composite of phi's (algebra) or psi's (coalgebra).  steps[0] is applied
// first; no steps is the identity of width 1.
struct CompositionTerm {
    Variance variance = Variance::coalgebra;
    std::vector<Step> steps;
    int sign = 1;

    // Inputs and outputs of the composite.
    int source_width() const;
    int target_width() const;
    int degree() const;
    auto operator<=>(const CompositionTerm&) const = default;
};

// sign * sigma(left (x) right); the permutation is sigma_{2,n} for algebras
// and sigma_{n,2} for coalgebras, kept symbolic.
struct TensorOpTerm {
    int n = 1;
    Coef sign = 1;
    CompositionTerm left, right;
};

// literal: composites carry +1, except the top cell of an algebra, which
// carries (-1)^n; a tensor term carries the diagonal coefficient times both
// composite signs.
// coherent: every cell of K_n carries the orientation for which the map to
// composites commutes with the differentials, and a tensor term carries the
// coefficient times both orientations times (-1)^{floor((n-2)/2)} for
// coalgebras, (-1)^{floor((n-1)/2)} for algebras.  Only this rule yields
// A-infinity structures on tensor products in every arity.
enum class SignRule { literal, coherent };

// The composite attached to a face of K_n.
CompositionTerm tree_to_composition(const PlanarTree& t, Variance variance, SignRule rule = SignRule::literal);
CompositionTerm faceword_to_composition(const FaceWord& w, int n, Variance variance,
                                        SignRule rule = SignRule::literal);

std::vector<TensorOpTerm> tensor_operations(int n, Variance variance, SignRule rule = SignRule::literal);

// The summands (-1)^{...} f^{n-l} f^{l+1}_{i,n-l-1-i} (algebra) or
// f^{l+1}_{i,n-l-1-i} f^{n-l} (coalgebra) of the n-th relation, with the sign
// stored in each term.
std::vector<CompositionTerm> quadratic_relations(int n, Variance variance);

// Rendering: outermost operation first, left pads as
// subscripts, the subscript dropped on a single operation.
std::string render_composition(const CompositionTerm& c);
std::string render_tensor_op(const TensorOpTerm& t);
std::string render_tensor_ops(int n, Variance variance, const std::vector<TensorOpTerm>& terms);

// Numeric models: a free graded Z-module with a basis, and operations given
// on basis words.  Missing operations and missing table entries are zero.
using Word = std::vector<int>;
using Tensor = LinComb<Word>;

struct Operation {
    int arity = 1;
    std::map<Word, Tensor> table;  // keyed by the input word
};

struct Model {
    Variance variance = Variance::coalgebra;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::map<int, Operation> ops;  // keyed by arity; the operation has degree arity - 2

    int rank() const { return static_cast<int>(degrees.size()); }
    int degree(const Word& w) const;
};

struct Matrix {
    std::vector<Word> rows, cols;
    std::vector<std::vector<Coef>> entries;  // entries[row][col]

    bool is_zero() const;
};

// Applies one step with its Koszul sign.
Tensor apply_step(const Model& m, Variance variance, const Step& s, const Tensor& x);
Tensor numeric_evaluate(const CompositionTerm& c, const Model& m, const Tensor& x);
// The composite as a matrix from all basis words of the source width to all
// basis words of the target width.
Matrix numeric_evaluate(const CompositionTerm& c, const Model& m);

// Two vertices and an edge with the cellular differential and coproduct;
// psi^k = 0 for k >= 3.
Model interval_model();
// The interval model transported along a pseudo-random automorphism of its
// cobar construction that is the identity on generators.  The result is an
// A-infinity coalgebra with non-zero psi^k for 3 <= k <= max_arity, and the
// same seed gives the same model on every platform.
Model perturbed_interval_model(std::uint32_t seed, int max_arity);
// The linear dual of a model: degrees negated, every operation transposed and
// scaled by (-1)^{floor(k/2)}, which preserves the quadratic relations.
Model dual_model(const Model& m);
// A (x) B with operations of arity 1..max_arity built from tensor_operations.
Model tensor_model(const Model& a, const Model& b, int max_arity, SignRule rule = SignRule::literal);
// The same with explicitly given operations, keyed by arity.
Model tensor_model(const Model& a, const Model& b, const std::map<int, std::vector<TensorOpTerm>>& ops);
// The left side of the n-th quadratic relation as a matrix.
Matrix relation_matrix(const Model& m, int n);

std::string render_word(const Model& m, const Word& w);

}  // namespace pd
