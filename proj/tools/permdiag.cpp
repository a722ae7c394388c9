// Command-line front end.  Links only against the C interface.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "permdiag/permdiag.h"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

int exit_code(pd_status s)
{
    switch (s) {
    case PD_OK: return 0;
    case PD_VERIFY_FAILED: return 1;
    case PD_INVALID_ARGUMENT:
    case PD_PARSE_ERROR:
    case PD_OUT_OF_RANGE:
    case PD_PRECONDITION: return exit_usage;
    case PD_OVERFLOW:
    case PD_INTERNAL: return exit_internal;
    }
    return exit_internal;
}

struct Handles {
    pd_options* options = pd_options_create();
    pd_result* result = nullptr;
    ~Handles()
    {
        pd_result_destroy(result);
        pd_options_destroy(options);
    }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cellular diagonals on permutahedra, associahedra and multiplihedra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pd_version()));

    std::string format = "text";
    std::string output;
    int jobs = 1;
    int cap = 8;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    app.add_option("--output,-o", output, "Write the result to FILE instead of standard output");
    app.add_option("--jobs,-j", jobs, "Worker threads for verify")->check(CLI::Range(1, 256))->capture_default_str();
    app.add_option("--cap", cap, "Largest accepted size argument")->check(CLI::Range(1, 12))->capture_default_str();
    app.fallthrough();

    std::function<pd_status(const pd_options*, pd_result**)> command;
    int n = 0;
    std::string part, part2;

    auto sized = [&](const char* name, const char* help, pd_status (*fn)(const pd_options*, int, pd_result**)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("N", n, "Size argument")->required();
        sub->callback([&, fn] { command = [&, fn](const pd_options* o, pd_result** r) { return fn(o, n, r); }; });
        return sub;
    };
    auto on_partition = [&](const char* name, const char* help,
                            pd_status (*fn)(const pd_options*, const char*, pd_result**)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("PART", part, "Ordered partition such as 13|2 or 1,10|2,...")->required();
        sub->callback(
            [&, fn] { command = [&, fn](const pd_options* o, pd_result** r) { return fn(o, part.c_str(), r); }; });
        return sub;
    };

    sized("perm-diagonal", "Diagonal on the top cell of P_N", pd_perm_diagonal);
    sized("multi-diagonal", "Diagonal on the top cell of J_{N+1}", pd_multi_diagonal);
    sized("tonks-classes", "Multi-element Tonks classes of faces of P_N", pd_tonks_classes);
    on_partition("boundary", "Cellular boundary of a face of the permutahedron", pd_boundary);
    on_partition("faceword", "Face word, tree and projections of a face", pd_faceword);
    on_partition("relations", "Both coface factorizations of a face and their vertex maps", pd_relations);

    std::string method = "projection";
    CLI::App* assoc = app.add_subcommand("assoc-diagonal", "Diagonal on the top cell of K_{N+2}");
    assoc->add_option("N", n, "Size argument")->required();
    assoc->add_option("--method", method, "Construction route")
        ->check(CLI::IsMember({"projection", "direct", "both"}))
        ->capture_default_str();
    assoc->callback([&] {
        command = [&](const pd_options* o, pd_result** r) {
            const pd_assoc_method m = method == "direct" ? PD_METHOD_DIRECT
                                      : method == "both" ? PD_METHOD_BOTH
                                                         : PD_METHOD_PROJECTION;
            return pd_assoc_diagonal(o, n, m, r);
        };
    });

    bool count_only = false;
    CLI::App* configs = app.add_subcommand("configs", "Configuration matrices over {1..N+1}");
    configs->add_option("N", n, "Size argument")->required();
    configs->add_flag("--count", count_only, "Print only the number of matrices");
    configs->callback([&] {
        command = [&](const pd_options* o, pd_result** r) { return pd_configs(o, n, count_only ? 1 : 0, r); };
    });

    CLI::App* qcheck = app.add_subcommand("qcheck", "Bracket [A|B; C|D] of a quadratic coface composite");
    qcheck->add_option("AB", part, "First two-block partition")->required();
    qcheck->add_option("CD", part2, "Second two-block partition")->required();
    qcheck->callback([&] {
        command = [&](const pd_options* o, pd_result** r) { return pd_qcheck(o, part.c_str(), part2.c_str(), r); };
    });

    std::string variance, signs = "literal";
    CLI::App* tensor = app.add_subcommand("tensor-ops", "Structure operations on a tensor product of A-infinity objects");
    tensor->add_option("N", n, "Arity")->required();
    tensor->add_option("--variance", variance, "alg or coalg")->required()->check(CLI::IsMember({"alg", "coalg"}));
    tensor->add_option("--signs", signs, "Sign rule for composites")
        ->check(CLI::IsMember({"literal", "coherent"}))
        ->capture_default_str();
    tensor->callback([&] {
        command = [&](const pd_options* o, pd_result** r) {
            return pd_tensor_ops(o, n, variance == "alg" ? PD_ALGEBRA : PD_COALGEBRA,
                                 signs == "coherent" ? PD_SIGNS_COHERENT : PD_SIGNS_LITERAL, r);
        };
    });

    int max_n = 5;
    bool strict = false;
    std::string filter;
    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--max-n", max_n, "Exhaustiveness bound")->capture_default_str();
    verify->add_flag("--strict", strict, "Count known deviations as failures");
    verify->add_option("--only", filter, "Run only the suites of one module or one suite by name");
    verify->callback([&] {
        command = [&](const pd_options* o, pd_result** r) {
            return pd_verify(o, max_n, strict ? 1 : 0, filter.c_str(), r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    Handles h;
    if (!h.options) {
        std::cerr << "error: out of memory\n";
        return exit_internal;
    }
    pd_options_set_format(h.options, format == "json" ? PD_FORMAT_JSON : format == "latex" ? PD_FORMAT_LATEX : PD_FORMAT_TEXT);
    pd_options_set_cap(h.options, cap);
    pd_options_set_jobs(h.options, jobs);

    const pd_status s = command(h.options, &h.result);
    if (s != PD_OK && s != PD_VERIFY_FAILED) {
        std::cerr << "error: " << pd_last_error() << "\n";
        return exit_code(s);
    }
    if (output.empty()) {
        std::fwrite(pd_result_text(h.result), 1, pd_result_size(h.result), stdout);
    } else {
        std::ofstream file(output, std::ios::binary);
        file.write(pd_result_text(h.result), static_cast<std::streamsize>(pd_result_size(h.result)));
        if (!file) {
            std::cerr << "error: cannot write " << output << "\n";
            return exit_usage;
        }
    }
    return exit_code(s);
}
