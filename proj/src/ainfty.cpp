#include "permdiag/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <set>

#include "permdiag/diagonal.hpp"

namespace pd {

int CompositionTerm::source_width() const
{
    if (variance == Variance::coalgebra) return 1;
    int w = 1;
    for (const Step& s : steps) w += s.arity - 1;
    return w;
}

int CompositionTerm::target_width() const
{
    if (variance == Variance::algebra) return 1;
    int w = 1;
    for (const Step& s : steps) w += s.arity - 1;
    return w;
}

int CompositionTerm::degree() const
{
    int d = 0;
    for (const Step& s : steps) d += s.arity - 2;
    return d;
}

namespace {

struct Node {
    Interval iv;
    int arity;
};

// Nodes in pre-order (parent before children, left to right) with arities.
std::vector<Node> pre_order(const PlanarTree& t)
{
    std::vector<Interval> v = t.nodes;
    std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });
    std::vector<Node> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int arity = v[i].second - v[i].first + 2;
        // Maximal proper sub-intervals are the children.
        int reach = v[i].first - 1;
        for (std::size_t j = i + 1; j < v.size() && v[j].first <= v[i].second; ++j) {
            if (v[j].first <= reach) continue;
            arity -= v[j].second - v[j].first + 1;
            reach = v[j].second;
        }
        out.push_back({v[i], arity});
    }
    return out;
}

}  // namespace

namespace {

// The composite of a tree with its steps in canonical order: pre-order for
// coalgebras (root first), reverse pre-order for algebras (leaves first).
CompositionTerm canonical_composite(const PlanarTree& t, Variance variance)
{
    std::vector<Node> nodes = pre_order(t);
    CompositionTerm c;
    c.variance = variance;
    if (variance == Variance::coalgebra) {
        int width = 1;
        for (const Node& node : nodes) {
            int left = node.iv.first - 1;
            c.steps.push_back({node.arity, left, width - 1 - left});
            width += node.arity - 1;
        }
    } else {
        int width = t.labels + 1;
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
            int left = it->iv.first - 1;
            c.steps.push_back({it->arity, left, width - it->arity - left});
            width -= it->arity - 1;
        }
    }
    return c;
}

// Reads a sequence of steps as a tree.  The sign is the Koszul sign of
// moving the steps into canonical order by the interchange law.
std::pair<PlanarTree, Coef> normalize(const std::vector<Step>& steps, Variance variance)
{
    int m = static_cast<int>(steps.size());
    std::vector<std::vector<int>> wires;  // per wire: the nodes it belongs to
    int leaves = 1;
    for (const Step& s : steps) leaves += s.arity - 1;
    if (variance == Variance::coalgebra) {
        wires.assign(1, {});
        for (int j = 0; j < m; ++j) {
            const Step& s = steps[static_cast<std::size_t>(j)];
            require(s.left + 1 + s.right == static_cast<int>(wires.size()), Errc::internal, "step width mismatch");
            std::vector<int> anc = wires[static_cast<std::size_t>(s.left)];
            anc.push_back(j);
            wires.erase(wires.begin() + s.left);
            wires.insert(wires.begin() + s.left, static_cast<std::size_t>(s.arity), anc);
        }
    }
    std::vector<int> lo(static_cast<std::size_t>(m), leaves), hi(static_cast<std::size_t>(m), -1);
    if (variance == Variance::coalgebra) {
        for (int pos = 0; pos < leaves; ++pos) {
            for (int j : wires[static_cast<std::size_t>(pos)]) {
                lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], pos);
                hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], pos);
            }
        }
    } else {
        std::vector<std::pair<int, int>> spans;
        for (int pos = 0; pos < leaves; ++pos) spans.push_back({pos, pos});
        for (int j = 0; j < m; ++j) {
            const Step& s = steps[static_cast<std::size_t>(j)];
            require(s.left + s.arity + s.right == static_cast<int>(spans.size()), Errc::internal, "step width mismatch");
            std::pair<int, int> span{spans[static_cast<std::size_t>(s.left)].first,
                                     spans[static_cast<std::size_t>(s.left + s.arity - 1)].second};
            lo[static_cast<std::size_t>(j)] = span.first;
            hi[static_cast<std::size_t>(j)] = span.second;
            spans.erase(spans.begin() + s.left, spans.begin() + s.left + s.arity);
            spans.insert(spans.begin() + s.left, span);
        }
    }
    PlanarTree t;
    t.labels = leaves - 1;
    std::vector<std::pair<Interval, int>> keyed;
    for (int j = 0; j < m; ++j) {
        Interval iv{lo[static_cast<std::size_t>(j)] + 1, hi[static_cast<std::size_t>(j)]};
        t.nodes.push_back(iv);
        keyed.push_back({iv, j});
    }
    std::sort(t.nodes.begin(), t.nodes.end());
    // Canonical position of each step.
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first < y.first.first;
        return x.first.second > y.first.second;
    });
    if (variance == Variance::algebra) std::reverse(keyed.begin(), keyed.end());
    std::vector<int> rank(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) rank[static_cast<std::size_t>(keyed[static_cast<std::size_t>(r)].second)] = r;
    int e = 0;
    for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
            bool odd = (steps[static_cast<std::size_t>(x)].arity % 2) && (steps[static_cast<std::size_t>(y)].arity % 2);
            if (odd && rank[static_cast<std::size_t>(x)] > rank[static_cast<std::size_t>(y)]) ++e;
        }
    }
    return {t, e % 2 ? -1 : 1};
}

// The Hom differential of a composite, each D(f^k) expanded through the k-th
// quadratic relation, returned in canonical form.
LinComb<PlanarTree> differential(const std::vector<Step>& steps, Variance variance)
{
    LinComb<PlanarTree> out;
    int m = static_cast<int>(steps.size());
    for (int j = 0; j < m; ++j) {
        // D passes the steps applied after step j.
        int passed = 0;
        for (int r = j + 1; r < m; ++r) passed += steps[static_cast<std::size_t>(r)].arity - 2;
        const Step& s = steps[static_cast<std::size_t>(j)];
        int k = s.arity;
        for (int l = 1; l <= k - 2; ++l) {
            for (int i = 0; i <= k - l - 1; ++i) {
                Step outer{k - l, s.left, s.right};
                Step inner{l + 1, s.left + i, s.right + k - l - 1 - i};
                int e = 1 + passed;
                std::vector<Step> split(steps.begin(), steps.begin() + j);
                if (variance == Variance::coalgebra) {
                    e += l * (k + i + 1);
                    split.push_back(outer);
                    split.push_back(inner);
                } else {
                    e += (k - 1) + l * (i + 1);
                    split.push_back(inner);
                    split.push_back(outer);
                }
                split.insert(split.end(), steps.begin() + j + 1, steps.end());
                auto [tree, sign] = normalize(split, variance);
                out.add(tree, e % 2 ? -sign : sign);
            }
        }
    }
    return out;
}

using SignTable = std::map<PlanarTree, Coef>;

// Orients every cell of K_{labels+1} so that the association is a chain map:
// the top cell goes to (-1)^n phi^n, resp. psi^n, and every facet sign is
// read off D of the composite of a cell above it.
SignTable association_signs(int labels, Variance variance)
{
    std::set<PlanarTree> cells;
    for (const OrderedPartition& u : enumerate_faces(labels))
        if (auto t = project_k(u)) cells.insert(*t);
    std::vector<PlanarTree> by_dim(cells.begin(), cells.end());
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [](const PlanarTree& x, const PlanarTree& y) { return x.dim() > y.dim(); });
    SignTable sign;
    PlanarTree top{labels, {{1, labels}}};
    int leaves = labels + 1;
    sign[top] = variance == Variance::algebra && leaves % 2 ? -1 : 1;
    for (const PlanarTree& t : by_dim) {
        if (t.dim() == 0) continue;
        auto it = sign.find(t);
        require(it != sign.end(), Errc::internal, "cell reached before its orientation");
        LinComb<PlanarTree> d = differential(canonical_composite(t, variance).steps, variance);
        KChain b = boundary_k(t);
        require(d.size() == b.size(), Errc::internal, "boundary and differential have different support");
        for (const auto& [f, c] : b) {
            Coef want = checked_mul(d.coefficient(f), it->second);
            require(want == c || want == -c, Errc::internal, "incidence is not a unit");
            Coef s = want == c ? 1 : -1;
            auto [pos, inserted] = sign.try_emplace(f, s);
            require(inserted || pos->second == s, Errc::internal, "inconsistent cell orientation");
        }
    }
    return sign;
}

Coef association_sign(const PlanarTree& t, Variance variance)
{
    static std::mutex mu;
    static std::map<std::pair<int, Variance>, std::shared_ptr<const SignTable>> cache;
    std::shared_ptr<const SignTable> table;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[{t.labels, variance}];
        if (!slot) slot = std::make_shared<const SignTable>(association_signs(t.labels, variance));
        table = slot;
    }
    auto it = table->find(t);
    require(it != table->end(), Errc::invalid_argument, "not a cell of the associahedron");
    return it->second;
}

}  // namespace

CompositionTerm tree_to_composition(const PlanarTree& t, Variance variance, SignRule rule)
{
    require(t.labels >= 1 && t.labels <= 8, Errc::out_of_range, "tree size out of range");
    CompositionTerm c = canonical_composite(t, variance);
    if (rule == SignRule::coherent) {
        c.sign = static_cast<int>(association_sign(t, variance));
    } else {
        bool top = t.dim() == t.labels - 1;
        c.sign = top && variance == Variance::algebra && (t.labels + 1) % 2 ? -1 : 1;
    }
    return c;
}

CompositionTerm faceword_to_composition(const FaceWord& w, int n, Variance variance, SignRule rule)
{
    require(n >= 2, Errc::out_of_range, "K_n needs n >= 2");
    require(w.labels == n - 1, Errc::invalid_argument, "face word does not live on K_n");
    return tree_to_composition(tree_of(faceword_to_partition(w)), variance, rule);
}

std::vector<TensorOpTerm> tensor_operations(int n, Variance variance, SignRule rule)
{
    require(n >= 1, Errc::out_of_range, "n must be positive");
    std::vector<TensorOpTerm> out;
    if (n == 1) {
        CompositionTerm d{variance, {{1, 0, 0}}, 1};
        CompositionTerm id{variance, {}, 1};
        out.push_back({1, 1, d, id});
        out.push_back({1, 1, id, d});
        return out;
    }
    for (const auto& [cell, coef] : diagonal_assoc(n - 2)) {
        TensorOpTerm t;
        t.n = n;
        t.left = tree_to_composition(cell.first, variance, rule);
        t.right = tree_to_composition(cell.second, variance, rule);
        t.sign = checked_mul(coef, t.left.sign * t.right.sign);
        int shift = variance == Variance::coalgebra ? n - 2 : n - 1;
        if (rule == SignRule::coherent && (shift / 2) % 2) t.sign = -t.sign;
        out.push_back(t);
    }
    return out;
}

std::vector<CompositionTerm> quadratic_relations(int n, Variance variance)
{
    require(n >= 1, Errc::out_of_range, "n must be positive");
    std::vector<CompositionTerm> out;
    for (int l = 0; l <= n - 1; ++l) {
        for (int i = 0; i <= n - l - 1; ++i) {
            CompositionTerm c;
            c.variance = variance;
            Step outer{n - l, 0, 0}, inner{l + 1, i, n - l - 1 - i};
            if (variance == Variance::algebra) {
                c.steps = {inner, outer};
                c.sign = (l * (i + 1)) % 2 ? -1 : 1;
            } else {
                c.steps = {outer, inner};
                c.sign = (l * (n + i + 1)) % 2 ? -1 : 1;
            }
            out.push_back(c);
        }
    }
    return out;
}

namespace {

std::string digits(int v, const char* const table[10])
{
    std::string out;
    for (char ch : std::to_string(v)) out += table[ch - '0'];
    return out;
}

const char* const kSup[10] = {"\xE2\x81\xB0", "\xC2\xB9", "\xC2\xB2", "\xC2\xB3", "\xE2\x81\xB4",
                              "\xE2\x81\xB5", "\xE2\x81\xB6", "\xE2\x81\xB7", "\xE2\x81\xB8", "\xE2\x81\xB9"};
const char* const kSub[10] = {"\xE2\x82\x80", "\xE2\x82\x81", "\xE2\x82\x82", "\xE2\x82\x83", "\xE2\x82\x84",
                              "\xE2\x82\x85", "\xE2\x82\x86", "\xE2\x82\x87", "\xE2\x82\x88", "\xE2\x82\x89"};

const char* symbol(Variance v) { return v == Variance::coalgebra ? "\xCF\x88" : "\xCF\x86"; }

}  // namespace

std::string render_composition(const CompositionTerm& c)
{
    if (c.steps.empty()) return "1";
    std::string out;
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        out += symbol(c.variance);
        out += digits(it->arity, kSup);
        if (c.steps.size() > 1) out += digits(it->left, kSub);
    }
    return out;
}

std::string render_tensor_op(const TensorOpTerm& t)
{
    return render_composition(t.left) + "\xE2\x8A\x97" + render_composition(t.right);
}

std::string render_tensor_ops(int n, Variance variance, const std::vector<TensorOpTerm>& terms)
{
    std::string out = variance == Variance::coalgebra ? "\xCE\xA8" : "\xCE\xA6";
    out += digits(n, kSup) + " = ";
    std::string body;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0) body += terms[k].sign < 0 ? "-" : "";
        else body += terms[k].sign < 0 ? " - " : " + ";
        if (terms[k].sign != 1 && terms[k].sign != -1) body += std::to_string(terms[k].sign < 0 ? -terms[k].sign : terms[k].sign);
        body += render_tensor_op(terms[k]);
    }
    if (n == 1) return out + body;
    std::string sigma = "\xCF\x83";
    sigma += variance == Variance::coalgebra ? digits(n, kSub) + "," + kSub[2] : std::string(kSub[2]) + "," + digits(n, kSub);
    return out + sigma + "(" + body + ")";
}

int Model::degree(const Word& w) const
{
    int d = 0;
    for (int x : w) d += degrees.at(static_cast<std::size_t>(x));
    return d;
}

bool Matrix::is_zero() const
{
    for (const auto& row : entries)
        for (Coef c : row)
            if (c != 0) return false;
    return true;
}

Tensor apply_step(const Model& m, Variance variance, const Step& s, const Tensor& x)
{
    Tensor out;
    auto op = m.ops.find(s.arity);
    if (op == m.ops.end()) return out;
    int in = variance == Variance::algebra ? s.arity : 1;
    int op_degree = s.arity - 2;
    for (const auto& [w, coef] : x) {
        int width = static_cast<int>(w.size());
        require(s.left + in + s.right == width, Errc::invalid_argument, "step does not fit the tensor width");
        Word prefix(w.begin(), w.begin() + s.left);
        Word middle(w.begin() + s.left, w.begin() + s.left + in);
        Word suffix(w.begin() + s.left + in, w.end());
        auto entry = op->second.table.find(middle);
        if (entry == op->second.table.end()) continue;
        Coef sign = (op_degree * m.degree(prefix)) % 2 ? -1 : 1;
        for (const auto& [y, c] : entry->second) {
            Word v = prefix;
            v.insert(v.end(), y.begin(), y.end());
            v.insert(v.end(), suffix.begin(), suffix.end());
            out.add(v, checked_mul(checked_mul(coef, c), sign));
        }
    }
    return out;
}

Tensor numeric_evaluate(const CompositionTerm& c, const Model& m, const Tensor& x)
{
    Tensor cur = x;
    for (const Step& s : c.steps) cur = apply_step(m, c.variance, s, cur);
    Tensor out;
    out.add(cur, c.sign);
    return out;
}

namespace {

std::vector<Word> all_words(int rank, int width)
{
    std::vector<Word> out{Word{}};
    for (int k = 0; k < width; ++k) {
        std::vector<Word> next;
        for (const Word& w : out) {
            for (int x = 0; x < rank; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

Matrix to_matrix(const Model& m, int source, int target, const std::function<Tensor(const Word&)>& f)
{
    Matrix mat;
    mat.cols = all_words(m.rank(), source);
    mat.rows = all_words(m.rank(), target);
    std::map<Word, std::size_t> row_index;
    for (std::size_t r = 0; r < mat.rows.size(); ++r) row_index[mat.rows[r]] = r;
    mat.entries.assign(mat.rows.size(), std::vector<Coef>(mat.cols.size(), 0));
    for (std::size_t col = 0; col < mat.cols.size(); ++col)
        for (const auto& [w, c] : f(mat.cols[col])) mat.entries[row_index.at(w)][col] = c;
    return mat;
}

}  // namespace

Matrix numeric_evaluate(const CompositionTerm& c, const Model& m)
{
    return to_matrix(m, c.source_width(), c.target_width(),
                     [&](const Word& w) { return numeric_evaluate(c, m, Tensor(w)); });
}

Model interval_model()
{
    Model m;
    m.variance = Variance::coalgebra;
    m.names = {"v0", "v1", "e"};
    m.degrees = {0, 0, 1};
    enum { v0, v1, e };
    Operation d{1, {}};
    Tensor de;
    de.add(Word{v1}, 1);
    de.add(Word{v0}, -1);
    d.table[{e}] = de;
    Operation delta{2, {}};
    delta.table[{v0}] = Tensor(Word{v0, v0});
    delta.table[{v1}] = Tensor(Word{v1, v1});
    Tensor ce;
    ce.add(Word{v0, e}, 1);
    ce.add(Word{e, v1}, 1);
    delta.table[{e}] = ce;
    m.ops[1] = d;
    m.ops[2] = delta;
    return m;
}

namespace {

// Generators of the cobar construction are the basis elements desuspended; a
// word y of length k picks up (-1)^{sum_j |y_j| (k-1-j)} from the
// desuspensions.
class CobarGauge {
public:
    CobarGauge(const Model& m, int max_arity) : m_(m), max_(max_arity) {}

    Coef desuspension(const Word& y) const
    {
        int k = static_cast<int>(y.size()), e = 0;
        for (int j = 0; j < k; ++j) e += m_.degrees[static_cast<std::size_t>(y[static_cast<std::size_t>(j)])] * (k - 1 - j);
        return e % 2 ? -1 : 1;
    }

    int cobar_degree(int x) const { return m_.degrees[static_cast<std::size_t>(x)] - 1; }

    // D on a generator, read off the operations.
    Tensor differential(const Model& m, int x) const
    {
        Tensor out;
        for (const auto& [k, op] : m.ops) {
            auto it = op.table.find(Word{x});
            if (it == op.table.end()) continue;
            for (const auto& [y, c] : it->second) out.add(y, checked_mul(c, desuspension(y)));
        }
        return out;
    }

    // G on a generator: x plus the perturbation.
    Tensor on_generator(int x) const
    {
        Tensor out(Word{x});
        auto it = g_.find(x);
        if (it == g_.end()) return out;
        for (const auto& [y, c] : it->second) out.add(y, checked_mul(c, desuspension(y)));
        return out;
    }

    // G is multiplicative; words longer than max_arity are dropped.
    Tensor apply(const Tensor& t) const
    {
        Tensor out;
        for (const auto& [w, c] : t) {
            Tensor cur(Word{});
            for (int x : w) {
                Tensor gx = on_generator(x), next;
                for (const auto& [u, cu] : cur) {
                    for (const auto& [v, cv] : gx) {
                        if (static_cast<int>(u.size() + v.size()) > max_) continue;
                        Word z = u;
                        z.insert(z.end(), v.begin(), v.end());
                        next.add(z, checked_mul(cu, cv));
                    }
                }
                cur = std::move(next);
            }
            out.add(cur, c);
        }
        return out;
    }

    void randomize(std::uint32_t seed)
    {
        std::uint64_t state = seed;
        auto next = [&state] {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<int>((state >> 33) % 5) - 2;
        };
        for (int k = 2; k <= std::min(3, max_); ++k) {
            for (int x = 0; x < m_.rank(); ++x) {
                for (const Word& w : all_words(m_.rank(), k)) {
                    if (m_.degree(w) != m_.degrees[static_cast<std::size_t>(x)] + k - 1) continue;
                    g_[x].add(w, next());
                }
            }
        }
    }

    // Solves D' G = G D weight by weight and reads off the new operations.
    Model transport() const
    {
        std::map<int, Tensor> dnew;
        for (int weight = 1; weight <= max_; ++weight) {
            for (int x = 0; x < m_.rank(); ++x) {
                Tensor lhs = apply(differential(m_, x));
                Tensor rest = on_generator(x);
                rest.add(Word{x}, -1);
                Tensor correction;
                for (const auto& [w, c] : rest) {
                    int before = 0;
                    for (std::size_t j = 0; j < w.size(); ++j) {
                        for (const auto& [y, cy] : dnew[w[j]]) {
                            if (static_cast<int>(w.size() - 1 + y.size()) != weight) continue;
                            Word z(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
                            z.insert(z.end(), y.begin(), y.end());
                            z.insert(z.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
                            Coef s = checked_mul(c, cy);
                            correction.add(z, before % 2 ? -s : s);
                        }
                        before += cobar_degree(w[j]);
                    }
                }
                for (const auto& [z, c] : lhs)
                    if (static_cast<int>(z.size()) == weight) dnew[x].add(z, c);
                for (const auto& [z, c] : correction)
                    if (static_cast<int>(z.size()) == weight) dnew[x].add(z, -c);
            }
        }
        Model out = m_;
        out.ops.clear();
        for (const auto& [x, t] : dnew) {
            for (const auto& [y, c] : t) {
                int k = static_cast<int>(y.size());
                out.ops[k].arity = k;
                out.ops[k].table[Word{x}].add(y, checked_mul(c, desuspension(y)));
            }
        }
        return out;
    }

private:
    const Model& m_;
    int max_;
    std::map<int, Tensor> g_;
};

}  // namespace

Model perturbed_interval_model(std::uint32_t seed, int max_arity)
{
    require(max_arity >= 2 && max_arity <= 8, Errc::out_of_range, "arity out of range");
    Model base = interval_model();
    CobarGauge gauge(base, max_arity);
    gauge.randomize(seed);
    Model m = gauge.transport();
    m.names = base.names;
    return m;
}

Model dual_model(const Model& m)
{
    Model out;
    out.variance = m.variance == Variance::algebra ? Variance::coalgebra : Variance::algebra;
    out.names = m.names;
    for (int d : m.degrees) out.degrees.push_back(-d);
    for (const auto& [k, op] : m.ops) {
        Coef tau = (k / 2) % 2 ? -1 : 1;
        Operation t{k, {}};
        for (const auto& [in, value] : op.table)
            for (const auto& [w, c] : value) t.table[w].add(in, checked_mul(c, tau));
        out.ops[k] = t;
    }
    return out;
}

namespace {

// Koszul sign of interleaving x_1..x_k y_1..y_k into x_1 y_1 .. x_k y_k.
Coef interleave_sign(const Model& a, const Word& x, const Model& b, const Word& y)
{
    int e = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) e += b.degrees[y[i]] * a.degrees[x[j]];
    return e % 2 ? -1 : 1;
}

}  // namespace

Model tensor_model(const Model& a, const Model& b, int max_arity, SignRule rule)
{
    require(max_arity >= 1 && max_arity <= 8, Errc::out_of_range, "arity out of range");
    std::map<int, std::vector<TensorOpTerm>> ops;
    for (int n = 1; n <= max_arity; ++n) ops[n] = tensor_operations(n, a.variance, rule);
    return tensor_model(a, b, ops);
}

Model tensor_model(const Model& a, const Model& b, const std::map<int, std::vector<TensorOpTerm>>& ops)
{
    require(a.variance == b.variance, Errc::invalid_argument, "models of different variance");
    Variance var = a.variance;
    Model m;
    m.variance = var;
    int rb = b.rank();
    auto pair_index = [rb](int x, int y) { return x * rb + y; };
    for (int x = 0; x < a.rank(); ++x) {
        for (int y = 0; y < rb; ++y) {
            m.names.push_back(a.names[x] + "." + b.names[y]);
            m.degrees.push_back(a.degrees[x] + b.degrees[y]);
        }
    }
    for (const auto& [n, terms] : ops) {
        Operation op{n, {}};
        int in = var == Variance::algebra ? n : 1;
        for (const Word& w : all_words(m.rank(), in)) {
            Word xs, ys;
            for (int v : w) {
                xs.push_back(v / rb);
                ys.push_back(v % rb);
            }
            // sigma_{2,n} on the input for algebras.
            Coef pre = var == Variance::algebra ? interleave_sign(a, xs, b, ys) : 1;
            Tensor value;
            for (const TensorOpTerm& t : terms) {
                // t.sign already carries the signs of both composites.
                CompositionTerm left = t.left, right = t.right;
                left.sign = right.sign = 1;
                Tensor fx = numeric_evaluate(left, a, Tensor(xs));
                if (fx.empty()) continue;
                Tensor gy = numeric_evaluate(right, b, Tensor(ys));
                int gdeg = t.right.degree();
                for (const auto& [u, cu] : fx) {
                    for (const auto& [v, cv] : gy) {
                        Coef c = checked_mul(checked_mul(cu, cv), checked_mul(t.sign, pre));
                        if ((gdeg * a.degree(xs)) % 2) c = -c;
                        if (var == Variance::coalgebra) c = checked_mul(c, interleave_sign(a, u, b, v));
                        Word out;
                        for (std::size_t k = 0; k < u.size(); ++k) out.push_back(pair_index(u[k], v[k]));
                        value.add(out, c);
                    }
                }
            }
            if (!value.empty()) op.table[w] = value;
        }
        if (!op.table.empty()) m.ops[n] = op;
    }
    return m;
}

Matrix relation_matrix(const Model& m, int n)
{
    std::vector<CompositionTerm> terms = quadratic_relations(n, m.variance);
    int source = m.variance == Variance::algebra ? n : 1;
    int target = m.variance == Variance::algebra ? 1 : n;
    return to_matrix(m, source, target, [&](const Word& w) {
        Tensor sum;
        for (const CompositionTerm& c : terms) sum += numeric_evaluate(c, m, Tensor(w));
        return sum;
    });
}

std::string render_word(const Model& m, const Word& w)
{
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += "\xE2\x8A\x97";
        out += m.names.at(static_cast<std::size_t>(w[k]));
    }
    return out.empty() ? "1" : out;
}

}  // namespace pd
