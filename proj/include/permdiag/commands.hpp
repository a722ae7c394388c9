// The command surface behind the CLI: every command renders its result in
// the requested format and reports whether a verification failed.
#pragma once

#include <string>

#include "permdiag/ainfty.hpp"
#include "permdiag/serialize.hpp"

namespace pd {

struct Options {
    Format format = Format::text;
    int cap = 8;   // largest accepted size argument
    int jobs = 1;  // worker threads for verify
};

struct Output {
    int status = 0;  // 0 success, 1 verification failure
    std::string text;
};

// Delta_P on the top cell of P_n.
Output cmd_perm_diagonal(const Options& o, int n);
// Delta_K(e^n); method is projection, direct or both.
Output cmd_assoc_diagonal(const Options& o, int n, const std::string& method);
// Delta_J on the top cell of J_{n+1}.
Output cmd_multi_diagonal(const Options& o, int n);
Output cmd_boundary(const Options& o, const std::string& partition);
// Configuration matrices over {1..n+1}.
Output cmd_configs(const Options& o, int n, bool count_only);
Output cmd_faceword(const Options& o, const std::string& partition);
// Classes of faces of P_n with more than one element and their cells in K_{n+1}.
Output cmd_tonks_classes(const Options& o, int n);
Output cmd_relations(const Options& o, const std::string& partition);
Output cmd_qcheck(const Options& o, const std::string& ab, const std::string& cd);
Output cmd_tensor_ops(const Options& o, int n, Variance variance, SignRule rule);
// Runs the invariant suites; strict makes known deviations count as failures.
Output cmd_verify(const Options& o, int max_n, bool strict, const std::string& filter);

}  // namespace pd
