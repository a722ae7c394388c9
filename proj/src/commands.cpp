#include "permdiag/commands.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "permdiag/checks.hpp"
#include "permdiag/diagonal.hpp"
#include "permdiag/matrices.hpp"
#include "permdiag/permcalc.hpp"
#include "permdiag/trees.hpp"

namespace pd {

using nlohmann::json;

namespace {

void check_size(const Options& o, int n, int lowest, const char* what)
{
    if (n < lowest || n > o.cap)
        fail(Errc::out_of_range, std::string(what) + " must lie in " + std::to_string(lowest) + ".." +
                                     std::to_string(o.cap) + " (raise the cap with --cap)");
}

OrderedPartition parse_checked(const Options& o, const std::string& text)
{
    OrderedPartition u = parse_partition(text);
    check_size(o, u.ground_size(), 1, "partition size");
    return u;
}

json as_json(const std::string& text) { return json::parse(text); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string word_text(const std::vector<OrderedPartition>& w, Format f)
{
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += " ";
        out += f == Format::latex ? "\\delta_{" + render_partition(w[k]) + "}"
                                  : "\xCE\xB4_{" + render_partition(w[k]) + "}";
    }
    return out;
}

std::vector<Perm> permutations(int n)
{
    Perm v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

Output cmd_perm_diagonal(const Options& o, int n)
{
    check_size(o, n, 1, "n");
    return {0, format_tensor_chain(diagonal_top(n - 1), o.format)};
}

Output cmd_assoc_diagonal(const Options& o, int n, const std::string& method)
{
    check_size(o, n, 0, "n");
    if (method == "projection") return {0, format_k_tensor_chain(diagonal_assoc(n, AssocMethod::projection), o.format)};
    if (method == "direct") return {0, format_k_tensor_chain(diagonal_assoc(n, AssocMethod::direct), o.format)};
    require(method == "both", Errc::invalid_argument, "method must be projection, direct or both");
    KTensorChain a = diagonal_assoc(n, AssocMethod::projection);
    KTensorChain b = diagonal_assoc(n, AssocMethod::direct);
    bool agree = a == b;
    if (o.format == Format::json) {
        json j{{"projection", as_json(format_k_tensor_chain(a, Format::json))},
               {"direct", as_json(format_k_tensor_chain(b, Format::json))},
               {"agree", agree}};
        return {agree ? 0 : 1, dump(j)};
    }
    if (o.format == Format::latex) {
        std::string out = format_k_tensor_chain(a, Format::latex);
        return {agree ? 0 : 1, out + (agree ? "% OK\n" : "% MISMATCH\n")};
    }
    std::set<std::pair<PlanarTree, PlanarTree>> keys;
    for (const auto& [p, c] : a) keys.insert(p);
    for (const auto& [p, c] : b) keys.insert(p);
    std::ostringstream os;
    for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
        Coef ca = a.coefficient(*it), cb = b.coefficient(*it);
        std::string term = render_k_cell(it->first) + " (x) " + render_k_cell(it->second);
        os << "projection " << (ca > 0 ? "+" : "") << ca << "  direct " << (cb > 0 ? "+" : "") << cb << "   " << term
           << (ca == cb ? "" : "   MISMATCH") << "\n";
    }
    os << (agree ? "OK" : "MISMATCH") << "\n";
    return {agree ? 0 : 1, os.str()};
}

Output cmd_multi_diagonal(const Options& o, int n)
{
    check_size(o, n, 0, "n");
    return {0, format_j_tensor_chain(diagonal_multi(n), o.format)};
}

Output cmd_boundary(const Options& o, const std::string& partition)
{
    return {0, format_chain(boundary(parse_checked(o, partition)), o.format)};
}

Output cmd_configs(const Options& o, int n, bool count_only)
{
    check_size(o, n, 0, "n");
    std::vector<Configuration> all = enumerate_configurations(n);
    if (count_only) {
        if (o.format == Format::json) return {0, dump(json{{"n", n}, {"count", all.size()}})};
        return {0, std::to_string(all.size()) + "\n"};
    }
    if (o.format == Format::json) {
        json arr = json::array();
        for (const Configuration& c : all) {
            MatrixFaces f = faces_of_matrix(c.matrix);
            arr.push_back({{"matrix", as_json(format_matrix(c.matrix, Format::json))},
                           {"sign", c.sign},
                           {"column_face", as_json(format_partition(f.column_face, Format::json))},
                           {"row_face", as_json(format_partition(f.row_face, Format::json))}});
        }
        return {0, dump(arr)};
    }
    std::ostringstream os;
    for (const Configuration& c : all) {
        MatrixFaces f = faces_of_matrix(c.matrix);
        std::string term = render_partition(f.column_face) + (o.format == Format::latex ? "\\otimes " : " (x) ") +
                           render_partition(f.row_face);
        if (o.format == Format::latex) {
            os << format_matrix(c.matrix, Format::latex) << "$" << (c.sign < 0 ? "-" : "+") << term << "$\n\n";
        } else {
            os << format_matrix(c.matrix, Format::text) << (c.sign < 0 ? "- " : "+ ") << term << "\n\n";
        }
    }
    return {0, os.str()};
}

Output cmd_faceword(const Options& o, const std::string& partition)
{
    OrderedPartition u = parse_checked(o, partition);
    FaceWord w = partition_to_faceword(u);
    auto k = project_k(u);
    auto j = project_j(u);
    if (o.format == Format::json) {
        json out{{"partition", as_json(format_partition(u, Format::json))},
                 {"faceword", as_json(format_faceword(w, Format::json))},
                 {"parenthesization", render_parenthesization(u)},
                 {"k_cell", k ? json(render_k_cell(*k)) : json(nullptr)},
                 {"j_cell", j ? json(render_jcell(*j)) : json(nullptr)}};
        return {0, dump(out)};
    }
    if (o.format == Format::latex) return {0, format_faceword(w, Format::latex)};
    std::ostringstream os;
    os << "partition         " << render_partition(u) << "\n";
    os << "face word         " << render_faceword(w) << "\n";
    os << "parenthesization  " << render_parenthesization(u) << "\n";
    os << "K cell            " << (k ? render_k_cell(*k) + "  " + render_tree(*k) : std::string("degenerate")) << "\n";
    os << "J cell            " << (j ? render_jcell(*j) : std::string("degenerate")) << "\n";
    return {0, os.str()};
}

Output cmd_tonks_classes(const Options& o, int n)
{
    check_size(o, n, 1, "n");
    struct Class {
        PlanarTree cell;
        std::vector<std::string> names;
    };
    // Within a class '|' sorts before every digit; classes of higher
    // dimensional cells come first, then smaller classes.
    auto key = [](std::string s) {
        std::replace(s.begin(), s.end(), '|', ' ');
        return s;
    };
    std::vector<Class> classes;
    for (const auto& cls : fibers(n, Target::K)) {
        if (cls.size() < 2) continue;
        Class c{tree_of(cls.front()), {}};
        for (const OrderedPartition& u : cls) c.names.push_back(render_partition(u));
        std::sort(c.names.begin(), c.names.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
        classes.push_back(std::move(c));
    }
    std::stable_sort(classes.begin(), classes.end(), [&](const Class& a, const Class& b) {
        if (a.cell.dim() != b.cell.dim()) return a.cell.dim() > b.cell.dim();
        if (a.names.size() != b.names.size()) return a.names.size() < b.names.size();
        return key(a.names.front()) < key(b.names.front());
    });
    json arr = json::array();
    std::ostringstream os;
    for (const Class& c : classes) {
        const PlanarTree& t = c.cell;
        const std::vector<std::string>& names = c.names;
        if (o.format == Format::json) {
            arr.push_back({{"class", names}, {"cell", render_tree(t)}, {"word", render_k_cell(t)}});
            continue;
        }
        std::string joined;
        for (std::size_t k = 0; k < names.size(); ++k) joined += (k ? ", " : "") + names[k];
        if (o.format == Format::latex)
            os << "\\left[" << joined << "\\right]\\overset{\\theta}{\\longrightarrow}" << render_k_cell(t) << "\\\\\n";
        else
            os << "[" << joined << "] -> " << render_tree(t) << "\n";
    }
    if (o.format == Format::json) return {0, dump(arr)};
    return {0, os.str()};
}

Output cmd_relations(const Options& o, const std::string& partition)
{
    OrderedPartition u = parse_checked(o, partition);
    require(u.size() >= 3, Errc::invalid_argument, "relations need a partition with at least three blocks");
    Factorization f = faceword_factorizations(u);
    int agree = 0, total = 0;
    for (const Perm& x : permutations(u.ground_size() - u.size() + 1)) {
        ++total;
        if (apply_cofaces(f.word1, x) == apply_cofaces(f.word2, x)) ++agree;
    }
    if (o.format == Format::json) {
        json w1 = json::array(), w2 = json::array();
        for (const auto& p : f.word1) w1.push_back(render_partition(p));
        for (const auto& p : f.word2) w2.push_back(render_partition(p));
        return {0, dump(json{{"partition", render_partition(u)},
                             {"word1", w1},
                             {"word2", w2},
                             {"vertices", total},
                             {"agreeing_vertices", agree}})};
    }
    if (o.format == Format::latex)
        return {0, "$" + word_text(f.word1, Format::latex) + "=" + word_text(f.word2, Format::latex) + "$\n"};
    std::ostringstream os;
    os << "word 1       " << word_text(f.word1, Format::text) << "\n";
    os << "word 2       " << word_text(f.word2, Format::text) << "\n";
    os << "vertex maps  agree on " << agree << " of " << total << " vertices\n";
    return {0, os.str()};
}

Output cmd_qcheck(const Options& o, const std::string& ab, const std::string& cd)
{
    OrderedPartition a = parse_checked(o, ab);
    OrderedPartition c = parse_checked(o, cd);
    require(a.size() == 2 && c.size() == 2, Errc::invalid_argument, "qcheck needs two two-block partitions");
    auto r = quadratic_condition(a, c);
    if (o.format == Format::json)
        return {0, dump(json{{"ab", render_partition(a)},
                             {"cd", render_partition(c)},
                             {"bracket", r ? json(render_partition(*r)) : json(nullptr)}})};
    return {0, (r ? render_partition(*r) : std::string("degenerate")) + "\n"};
}

Output cmd_tensor_ops(const Options& o, int n, Variance variance, SignRule rule)
{
    check_size(o, n, 1, "n");
    return {0, format_tensor_ops(n, variance, tensor_operations(n, variance, rule), o.format)};
}

Output cmd_verify(const Options& o, int max_n, bool strict, const std::string& filter)
{
    check_size(o, max_n, 1, "max-n");
    std::vector<CheckReport> reports = run_checks(max_n, o.jobs, filter);
    int passed = 0, failed = 0, known = 0;
    for (const CheckReport& r : reports) {
        if (r.result.ok) ++passed;
        else if (r.check->known_deviation && !strict) ++known;
        else ++failed;
    }
    int status = failed ? 1 : 0;
    if (o.format == Format::json) {
        json arr = json::array();
        for (const CheckReport& r : reports)
            arr.push_back({{"module", r.check->module},
                           {"name", r.check->name},
                           {"bound", r.bound},
                           {"ok", r.result.ok},
                           {"known_deviation", r.check->known_deviation},
                           {"detail", r.result.detail}});
        return {status, dump(json{{"checks", arr}, {"passed", passed}, {"failed", failed}, {"known_deviations", known}})};
    }
    std::ostringstream os;
    for (const CheckReport& r : reports) {
        os << (r.result.ok ? "PASS " : "FAIL ") << r.check->module << "/" << r.check->name << " (bound " << r.bound
           << "): " << r.result.detail;
        if (r.check->known_deviation) os << (r.result.ok ? " [known deviation no longer reproduces]" : " [known deviation]");
        os << "\n";
    }
    os << passed << " passed, " << failed << " failed";
    if (known) os << ", " << known << " known deviation" << (known > 1 ? "s" : "");
    os << "\n";
    return {status, os.str()};
}

}  // namespace pd
