#include "permdiag/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pd {

using nlohmann::json;

namespace {

std::string coefficient_prefix(Coef c)
{
    std::string out = c < 0 ? "- " : "+ ";
    Coef a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + " ";
    return out;
}

std::string latex_prefix(Coef c, bool first)
{
    std::string out = c < 0 ? "-" : (first ? "" : "+");
    Coef a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    return out;
}

template <class Key>
std::vector<std::pair<Key, Coef>> descending(const LinComb<Key>& c)
{
    std::vector<std::pair<Key, Coef>> v(c.begin(), c.end());
    std::reverse(v.begin(), v.end());
    return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("unexpected JSON shape: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::overflow || e.code() == Errc::internal) throw;
        fail(Errc::parse_error, e.what());
    }
}

json partition_json(const OrderedPartition& u)
{
    return json{{"n", u.ground_size()}, {"blocks", u.blocks()}};
}

OrderedPartition partition_of(const json& j)
{
    return OrderedPartition(j.at("n").get<int>(), j.at("blocks").get<Blocks>());
}

std::string latex_partition(const OrderedPartition& u) { return render_partition(u); }

json tree_json(const PlanarTree& t)
{
    json nodes = json::array();
    for (const auto& [a, b] : t.nodes) nodes.push_back({a, b});
    return json{{"labels", t.labels}, {"nodes", nodes}, {"word", render_k_cell(t)}};
}

PlanarTree tree_of_json(const json& j)
{
    PlanarTree t;
    t.labels = j.at("labels").get<int>();
    require(t.labels >= 1, Errc::parse_error, "a tree needs at least one label");
    for (const auto& n : j.at("nodes")) t.nodes.push_back({n.at(0).get<int>(), n.at(1).get<int>()});
    std::sort(t.nodes.begin(), t.nodes.end());
    for (const auto& [a, b] : t.nodes)
        require(1 <= a && a <= b && b <= t.labels, Errc::parse_error, "node interval out of range");
    require(std::adjacent_find(t.nodes.begin(), t.nodes.end()) == t.nodes.end(), Errc::parse_error,
            "repeated node");
    std::optional<PlanarTree> back = project_k(preimage(t));
    require(back && *back == t, Errc::parse_error, "nodes do not form a planar tree");
    return t;
}

json jcell_json(const JCell& c)
{
    json slots = json::array();
    for (const auto& [iv, s] : c.slots) slots.push_back({json{iv.first, iv.second}, s});
    return json{{"tree", tree_json(c.tree)}, {"slots", slots}};
}

JCell jcell_of_json(const json& j)
{
    JCell c;
    c.tree = tree_of_json(j.at("tree"));
    for (const auto& s : j.at("slots"))
        c.slots.push_back({{s.at(0).at(0).get<int>(), s.at(0).at(1).get<int>()}, s.at(1).get<int>()});
    std::sort(c.slots.begin(), c.slots.end());
    std::optional<JCell> back = project_j(preimage(c));
    require(back && *back == c, Errc::parse_error, "slots do not describe a multiplihedron cell");
    return c;
}

const char* variance_name(Variance v) { return v == Variance::algebra ? "algebra" : "coalgebra"; }

Variance variance_of(const std::string& s)
{
    if (s == "algebra") return Variance::algebra;
    if (s == "coalgebra") return Variance::coalgebra;
    fail(Errc::parse_error, "unknown variance: " + s);
}

json steps_json(const CompositionTerm& c)
{
    json steps = json::array();
    for (const Step& s : c.steps) steps.push_back({s.arity, s.left, s.right});
    return steps;
}

CompositionTerm composition_of(const json& j, Variance v)
{
    CompositionTerm c;
    c.variance = v;
    c.sign = j.value("sign", 1);
    require(c.sign == 1 || c.sign == -1, Errc::parse_error, "composite sign must be +1 or -1");
    int width = 1;
    if (v == Variance::algebra)
        for (const auto& s : j.at("steps")) width += s.at(0).get<int>() - 1;
    for (const auto& s : j.at("steps")) {
        Step st{s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>()};
        require(st.arity >= 1 && st.left >= 0 && st.right >= 0, Errc::parse_error, "malformed step");
        int in = v == Variance::algebra ? st.left + st.arity + st.right : st.left + 1 + st.right;
        require(in == width, Errc::parse_error, "step pads do not match the running width");
        width = v == Variance::algebra ? st.left + 1 + st.right : st.left + st.arity + st.right;
        c.steps.push_back(st);
    }
    return c;
}

std::string latex_composition(const CompositionTerm& c)
{
    if (c.steps.empty()) return "1";
    std::string sym = c.variance == Variance::coalgebra ? "\\psi" : "\\phi";
    std::string out;
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        out += sym + "^{" + std::to_string(it->arity) + "}";
        if (c.steps.size() > 1) out += "_{" + std::to_string(it->left) + "}";
    }
    return out;
}

std::string latex_faceword(const FaceWord& w)
{
    if (w.levels.empty()) return "1";
    std::string out;
    for (auto it = w.levels.rbegin(); it != w.levels.rend(); ++it) {
        out += "d_{";
        for (const auto& [i, l] : *it) out += "(" + std::to_string(i) + "," + std::to_string(l) + ")";
        out += "}";
    }
    return out;
}

std::string latex_jcell(const JCell& c) { return "\\text{" + render_jcell(c) + "}"; }

// One aligned display with a term per line.
template <class Terms, class Fn>
std::string latex_lines(const Terms& terms, Fn&& term_latex)
{
    std::ostringstream os;
    os << "\\begin{align*}\n";
    if (terms.empty()) os << "&0\n";
    bool first = true;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        os << "&" << latex_prefix(terms[k].second, first) << term_latex(terms[k].first);
        os << (k + 1 < terms.size() ? "\\\\\n" : "\n");
        first = false;
    }
    os << "\\end{align*}\n";
    return os.str();
}

template <class Terms, class Fn>
std::string text_lines(const Terms& terms, Fn&& term_text)
{
    if (terms.empty()) return "0\n";
    std::string out;
    for (const auto& [k, c] : terms) out += coefficient_prefix(c) + term_text(k) + "\n";
    return out;
}

}  // namespace

Format parse_format(const std::string& name)
{
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    fail(Errc::invalid_argument, "unknown format: " + name);
}

std::string render_k_cell(const PlanarTree& t) { return render_faceword(canonical_word(t)); }

std::string render_jcell(const JCell& c)
{
    std::string out = render_tree(c.tree);
    if (c.slots.empty()) return out;
    out += " [";
    for (std::size_t k = 0; k < c.slots.size(); ++k) {
        if (k) out += " ";
        const auto& [iv, s] = c.slots[k];
        out += std::to_string(iv.first) + "-" + std::to_string(iv.second) + "@" + std::to_string(s);
    }
    return out + "]";
}

std::string format_partition(const OrderedPartition& u, Format f)
{
    if (f == Format::json) return dump(partition_json(u));
    return render_partition(u) + "\n";
}

std::string format_chain(const Chain& c, Format f)
{
    auto terms = descending(c);
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& [u, k] : terms) arr.push_back({{"coef", k}, {"face", partition_json(u)}});
        return dump(arr);
    }
    if (f == Format::latex) {
        std::string out = "$";
        if (terms.empty()) out += "0";
        for (std::size_t k = 0; k < terms.size(); ++k)
            out += (k ? " " : "") + latex_prefix(terms[k].second, k == 0) + latex_partition(terms[k].first);
        return out + "$\n";
    }
    if (terms.empty()) return "0\n";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k)
        out += (k ? "  " : "") + coefficient_prefix(terms[k].second) + render_partition(terms[k].first);
    return out + "\n";
}

std::string format_tensor_chain(const TensorChain& t, Format f)
{
    auto terms = descending(t);
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& [p, k] : terms)
            arr.push_back({{"coef", k}, {"left", partition_json(p.first)}, {"right", partition_json(p.second)}});
        return dump(arr);
    }
    if (f == Format::latex)
        return latex_lines(terms, [](const FacePair& p) {
            return latex_partition(p.first) + "\\otimes " + latex_partition(p.second);
        });
    return text_lines(terms, [](const FacePair& p) {
        return render_partition(p.first) + " (x) " + render_partition(p.second);
    });
}

std::string format_k_chain(const KChain& c, Format f)
{
    auto terms = descending(c);
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& [t, k] : terms) arr.push_back({{"coef", k}, {"cell", tree_json(t)}});
        return dump(arr);
    }
    if (f == Format::latex)
        return latex_lines(terms, [](const PlanarTree& t) { return latex_faceword(canonical_word(t)); });
    return text_lines(terms, [](const PlanarTree& t) { return render_k_cell(t) + "  " + render_tree(t); });
}

std::string format_k_tensor_chain(const KTensorChain& t, Format f)
{
    auto terms = descending(t);
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& [p, k] : terms)
            arr.push_back({{"coef", k}, {"left", tree_json(p.first)}, {"right", tree_json(p.second)}});
        return dump(arr);
    }
    using Pair = std::pair<PlanarTree, PlanarTree>;
    if (f == Format::latex)
        return latex_lines(terms, [](const Pair& p) {
            return latex_faceword(canonical_word(p.first)) + "\\otimes " + latex_faceword(canonical_word(p.second));
        });
    return text_lines(terms, [](const Pair& p) {
        return render_k_cell(p.first) + " (x) " + render_k_cell(p.second) + "    " + render_tree(p.first) +
               " (x) " + render_tree(p.second);
    });
}

std::string format_j_tensor_chain(const JTensorChain& t, Format f)
{
    auto terms = descending(t);
    if (f == Format::json) {
        json arr = json::array();
        for (const auto& [p, k] : terms)
            arr.push_back({{"coef", k}, {"left", jcell_json(p.first)}, {"right", jcell_json(p.second)}});
        return dump(arr);
    }
    using Pair = std::pair<JCell, JCell>;
    if (f == Format::latex)
        return latex_lines(terms, [](const Pair& p) { return latex_jcell(p.first) + "\\otimes " + latex_jcell(p.second); });
    return text_lines(terms, [](const Pair& p) { return render_jcell(p.first) + " (x) " + render_jcell(p.second); });
}

std::string format_matrix(const OrderedMatrix& m, Format f)
{
    if (f == Format::json) return dump(json{{"q", m.rows()}, {"p", m.cols()}, {"rows", m.row_lists()}});
    if (f == Format::latex) {
        std::ostringstream os;
        os << "\\begin{tabular}{|" ;
        for (int j = 0; j < m.cols(); ++j) os << "l|";
        os << "}\\hline\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << " & ";
                if (m.at(i, j)) os << m.at(i, j);
            }
            os << "\\\\\\hline\n";
        }
        os << "\\end{tabular}\n";
        return os.str();
    }
    return render_matrix(m);
}

std::string format_faceword(const FaceWord& w, Format f)
{
    if (f == Format::json) {
        json levels = json::array();
        for (const auto& level : w.levels) {
            json batch = json::array();
            for (const auto& [i, l] : level) batch.push_back({i, l});
            levels.push_back(batch);
        }
        return dump(json{{"labels", w.labels}, {"levels", levels}, {"word", render_faceword(w)}});
    }
    if (f == Format::latex) return "$" + latex_faceword(w) + "$\n";
    return render_faceword(w) + "\n";
}

std::string format_composition(const CompositionTerm& c, Format f)
{
    if (f == Format::json)
        return dump(json{{"variance", variance_name(c.variance)}, {"sign", c.sign}, {"steps", steps_json(c)}});
    std::string sign = c.sign < 0 ? "-" : "";
    if (f == Format::latex) return "$" + sign + latex_composition(c) + "$\n";
    return sign + render_composition(c) + "\n";
}

std::string format_tensor_ops(int n, Variance variance, const std::vector<TensorOpTerm>& terms, Format f)
{
    std::string wrapper = variance == Variance::coalgebra ? "sigma_{" + std::to_string(n) + ",2}"
                                                          : "sigma_{2," + std::to_string(n) + "}";
    if (f == Format::json) {
        json arr = json::array();
        for (const TensorOpTerm& t : terms)
            arr.push_back({{"sign", t.sign},
                           {"left", {{"sign", t.left.sign}, {"steps", steps_json(t.left)}}},
                           {"right", {{"sign", t.right.sign}, {"steps", steps_json(t.right)}}}});
        json j{{"n", n}, {"variance", variance_name(variance)}, {"terms", arr}};
        if (n > 1) j["wrapper"] = wrapper;
        return dump(j);
    }
    if (f == Format::latex) {
        std::string out = variance == Variance::coalgebra ? "\\Psi" : "\\Phi";
        out += "^{" + std::to_string(n) + "}=";
        std::string body;
        for (std::size_t k = 0; k < terms.size(); ++k)
            body += latex_prefix(terms[k].sign, k == 0) + latex_composition(terms[k].left) + "\\otimes " +
                    latex_composition(terms[k].right);
        if (n > 1) {
            std::string sub = variance == Variance::coalgebra ? std::to_string(n) + ",2" : "2," + std::to_string(n);
            body = "\\sigma_{" + sub + "}\\left(" + body + "\\right)";
        }
        return "$" + out + body + "$\n";
    }
    return render_tensor_ops(n, variance, terms) + "\n";
}

OrderedPartition partition_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] { return partition_of(j); });
}

Chain chain_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        Chain c;
        for (const auto& t : j) c.add(partition_of(t.at("face")), t.at("coef").get<Coef>());
        return c;
    });
}

TensorChain tensor_chain_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        TensorChain c;
        for (const auto& t : j)
            c.add(FacePair{partition_of(t.at("left")), partition_of(t.at("right"))}, t.at("coef").get<Coef>());
        return c;
    });
}

KChain k_chain_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        KChain c;
        for (const auto& t : j) c.add(tree_of_json(t.at("cell")), t.at("coef").get<Coef>());
        return c;
    });
}

KTensorChain k_tensor_chain_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        KTensorChain c;
        for (const auto& t : j)
            c.add({tree_of_json(t.at("left")), tree_of_json(t.at("right"))}, t.at("coef").get<Coef>());
        return c;
    });
}

JTensorChain j_tensor_chain_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        JTensorChain c;
        for (const auto& t : j)
            c.add({jcell_of_json(t.at("left")), jcell_of_json(t.at("right"))}, t.at("coef").get<Coef>());
        return c;
    });
}

OrderedMatrix matrix_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        OrderedMatrix m = OrderedMatrix::from_rows(rows);
        require(m.rows() == j.at("q").get<int>() && m.cols() == j.at("p").get<int>(), Errc::parse_error,
                "matrix dimensions do not match q and p");
        return m;
    });
}

FaceWord faceword_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        FaceWord w;
        w.labels = j.at("labels").get<int>();
        for (const auto& batch : j.at("levels")) {
            std::vector<FacePairIndex> level;
            for (const auto& p : batch) level.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            w.levels.push_back(level);
        }
        require(partition_to_faceword(faceword_to_partition(w)) == w, Errc::parse_error, "not a reduced face word");
        return w;
    });
}

CompositionTerm composition_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] { return composition_of(j, variance_of(j.at("variance").get<std::string>())); });
}

TensorOps tensor_ops_from_json(const std::string& text)
{
    json j = parse_json(text);
    return guarded([&] {
        TensorOps ops;
        ops.n = j.at("n").get<int>();
        ops.variance = variance_of(j.at("variance").get<std::string>());
        for (const auto& t : j.at("terms")) {
            TensorOpTerm term;
            term.n = ops.n;
            term.sign = t.at("sign").get<Coef>();
            term.left = composition_of(t.at("left"), ops.variance);
            term.right = composition_of(t.at("right"), ops.variance);
            ops.terms.push_back(term);
        }
        return ops;
    });
}

}  // namespace pd
