// Text, JSON and LaTeX forms of the library's values, and JSON parsers for
// every JSON form that is emitted.
#pragma once

#include <string>
#include <vector>

#include "permdiag/ainfty.hpp"
#include "permdiag/core.hpp"
#include "permdiag/matrices.hpp"
#include "permdiag/trees.hpp"

namespace pd {

enum class Format { text, json, latex };

Format parse_format(const std::string& name);

// Text chains list terms in decreasing order of their cells; a chain sits on
// one line ("+ 2|1  - 1|2"), a tensor chain has one term per line.
std::string format_chain(const Chain& c, Format f);
std::string format_tensor_chain(const TensorChain& t, Format f);
// K cells are written as their canonical face words, 1 for the top cell.
std::string format_k_chain(const KChain& c, Format f);
std::string format_k_tensor_chain(const KTensorChain& t, Format f);
std::string format_j_tensor_chain(const JTensorChain& t, Format f);
std::string format_partition(const OrderedPartition& u, Format f);
std::string format_matrix(const OrderedMatrix& m, Format f);
std::string format_faceword(const FaceWord& w, Format f);
std::string format_composition(const CompositionTerm& c, Format f);
std::string format_tensor_ops(int n, Variance variance, const std::vector<TensorOpTerm>& terms, Format f);

std::string render_jcell(const JCell& c);
std::string render_k_cell(const PlanarTree& t);

OrderedPartition partition_from_json(const std::string& text);
Chain chain_from_json(const std::string& text);
TensorChain tensor_chain_from_json(const std::string& text);
KChain k_chain_from_json(const std::string& text);
KTensorChain k_tensor_chain_from_json(const std::string& text);
JTensorChain j_tensor_chain_from_json(const std::string& text);
OrderedMatrix matrix_from_json(const std::string& text);
FaceWord faceword_from_json(const std::string& text);
CompositionTerm composition_from_json(const std::string& text);

struct TensorOps {
    int n = 1;
    Variance variance = Variance::coalgebra;
    std::vector<TensorOpTerm> terms;
};
TensorOps tensor_ops_from_json(const std::string& text);

}  // namespace pd
