// The diagonal on C_*(P_n) built from configuration matrices.
#pragma once

#include "permdiag/core.hpp"

namespace pd {

// Diagonal of the top cell of P_{n+1}.
TensorChain diagonal_top(int n);

// Comultiplicative extension to an arbitrary face.
TensorChain diagonal_face(const OrderedPartition& u);
TensorChain diagonal(const Chain& c);

// Swap the factors and reverse both partitions (the matrix transpose).
FacePair transpose_term(const FacePair& t);

struct CoderivationReport {
    bool ok = false;
    TensorChain residual;
};

// Compares the diagonal of the boundary with the boundary of the diagonal
// on the top cell of P_{n+1}.
CoderivationReport verify_coderivation(int n);

}  // namespace pd
