#include "permdiag/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "permdiag/diagonal.hpp"

namespace pd {

std::vector<LeveledNode> leveled_nodes(const OrderedPartition& u)
{
    const int n = u.ground_size();
    std::vector<char> in_w(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> owner(static_cast<std::size_t>(n) + 2, -1);
    std::vector<LeveledNode> out;
    for (int k = 0; k < u.size(); ++k) {
        for (int x : u.block(k)) {
            in_w[static_cast<std::size_t>(x)] = 1;
            owner[static_cast<std::size_t>(x)] = k;
        }
        int x = 1;
        while (x <= n) {
            if (!in_w[static_cast<std::size_t>(x)]) {
                ++x;
                continue;
            }
            int y = x;
            bool fresh = false;
            while (y <= n && in_w[static_cast<std::size_t>(y)]) {
                if (owner[static_cast<std::size_t>(y)] == k) fresh = true;
                ++y;
            }
            if (fresh) out.push_back({k, {x, y - 1}});
            x = y;
        }
    }
    return out;
}

OrderedPartition partition_from_levels(int labels, const std::vector<std::vector<Interval>>& levels)
{
    std::vector<int> level_of(static_cast<std::size_t>(labels) + 1, -1);
    std::vector<int> width(static_cast<std::size_t>(labels) + 1, labels + 1);
    for (int k = 0; k < static_cast<int>(levels.size()); ++k)
        for (const auto& [a, b] : levels[static_cast<std::size_t>(k)]) {
            require(1 <= a && a <= b && b <= labels, Errc::invalid_argument, "node interval out of range");
            for (int x = a; x <= b; ++x)
                if (b - a < width[static_cast<std::size_t>(x)]) {
                    width[static_cast<std::size_t>(x)] = b - a;
                    level_of[static_cast<std::size_t>(x)] = k;
                }
        }
    Blocks blocks(levels.size());
    for (int x = 1; x <= labels; ++x) {
        require(level_of[static_cast<std::size_t>(x)] >= 0, Errc::invalid_argument, "label not covered by any node");
        blocks[static_cast<std::size_t>(level_of[static_cast<std::size_t>(x)])].push_back(x);
    }
    return OrderedPartition(labels, std::move(blocks));
}

FaceWord partition_to_faceword(const OrderedPartition& u)
{
    FaceWord w;
    w.labels = u.ground_size();
    std::vector<int> remaining(static_cast<std::size_t>(w.labels));
    for (int x = 1; x <= w.labels; ++x) remaining[static_cast<std::size_t>(x - 1)] = x;
    for (int k = 0; k + 1 < u.size(); ++k) {
        std::vector<int> pos;
        for (int x : u.block(k)) {
            auto it = std::lower_bound(remaining.begin(), remaining.end(), x);
            pos.push_back(static_cast<int>(it - remaining.begin()) + 1);
        }
        std::vector<FacePairIndex> level;
        std::size_t s = 0;
        while (s < pos.size()) {
            std::size_t e = s;
            while (e + 1 < pos.size() && pos[e + 1] == pos[e] + 1) ++e;
            level.emplace_back(pos[s] - 1, pos[e] - pos[s] + 1);
            s = e + 1;
        }
        w.levels.push_back(std::move(level));
        std::vector<int> rest;
        std::set_difference(remaining.begin(), remaining.end(), u.block(k).begin(), u.block(k).end(),
                            std::back_inserter(rest));
        remaining = std::move(rest);
    }
    return w;
}

OrderedPartition faceword_to_partition(const FaceWord& w)
{
    require(w.labels >= 1, Errc::invalid_argument, "face word needs at least one label");
    std::vector<int> remaining(static_cast<std::size_t>(w.labels));
    for (int x = 1; x <= w.labels; ++x) remaining[static_cast<std::size_t>(x - 1)] = x;
    Blocks blocks;
    for (const auto& level : w.levels) {
        require(!level.empty(), Errc::invalid_argument, "empty level in face word");
        const int gaps = static_cast<int>(remaining.size());
        int next_free = 0;
        std::vector<char> take(remaining.size(), 0);
        Block b;
        for (const auto& [i, l] : level) {
            require(i >= next_free, Errc::invalid_argument, "overlapping or unordered pairs in face word");
            require(l >= 1, Errc::invalid_argument, "pair length must be positive");
            require(i + l <= gaps, Errc::invalid_argument, "pair exceeds the current width");
            for (int g = i + 1; g <= i + l; ++g) {
                take[static_cast<std::size_t>(g - 1)] = 1;
                b.push_back(remaining[static_cast<std::size_t>(g - 1)]);
            }
            next_free = i + l + 1;
        }
        require(static_cast<int>(b.size()) < gaps, Errc::invalid_argument, "level encloses every indeterminate");
        std::vector<int> rest;
        for (std::size_t t = 0; t < remaining.size(); ++t)
            if (!take[t]) rest.push_back(remaining[t]);
        remaining = std::move(rest);
        blocks.push_back(std::move(b));
    }
    blocks.push_back(remaining);
    return OrderedPartition(w.labels, std::move(blocks));
}

std::string render_faceword(const FaceWord& w)
{
    if (w.levels.empty()) return "1";
    std::string out;
    for (auto it = w.levels.rbegin(); it != w.levels.rend(); ++it) {
        out += "d";
        for (const auto& [i, l] : *it) out += "(" + std::to_string(i) + "," + std::to_string(l) + ")";
    }
    return out;
}

FaceWord parse_faceword(const std::string& text, int labels)
{
    FaceWord w;
    w.labels = labels;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "1") return w;
    std::size_t pos = 0;
    std::vector<std::vector<FacePairIndex>> outer_first;
    auto read_int = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start || p - start > 6) fail(Errc::parse_error, "bad integer in face word '" + text + "'");
        return std::stoi(s.substr(start, p - start));
    };
    while (pos < s.size()) {
        if (s[pos] != 'd') fail(Errc::parse_error, "expected 'd' in face word '" + text + "'");
        ++pos;
        std::vector<FacePairIndex> level;
        while (pos < s.size() && s[pos] == '(') {
            ++pos;
            int i = read_int(pos);
            if (pos >= s.size() || s[pos] != ',') fail(Errc::parse_error, "expected ',' in face word '" + text + "'");
            ++pos;
            int l = read_int(pos);
            if (pos >= s.size() || s[pos] != ')') fail(Errc::parse_error, "expected ')' in face word '" + text + "'");
            ++pos;
            level.emplace_back(i, l);
        }
        if (level.empty()) fail(Errc::parse_error, "operator without pairs in face word '" + text + "'");
        outer_first.push_back(std::move(level));
    }
    w.levels.assign(outer_first.rbegin(), outer_first.rend());
    try {
        faceword_to_partition(w);
    } catch (const Error& e) {
        fail(Errc::parse_error, std::string(e.what()) + " in '" + text + "'");
    }
    return w;
}

namespace {

const char* const kBullet = "\xE2\x80\xA2";

std::string subscript(int v)
{
    std::string digits = std::to_string(v), out;
    for (char c : digits) {
        out += "\xE2\x82";
        out.push_back(static_cast<char>(0x80 + (c - '0')));
    }
    return out;
}

struct TreeNode {
    Interval iv;
    int label;  // subscript, or -1 for none
};

// Leaves a..b+1 belong to the node with label interval [a,b].
void render_node(const std::vector<TreeNode>& nodes, std::size_t self, std::string& out)
{
    const Interval iv = nodes[self].iv;
    out += "(";
    int leaf = iv.first;
    const int last_leaf = iv.second + 1;
    while (leaf <= last_leaf) {
        std::size_t best = nodes.size();
        for (std::size_t t = 0; t < nodes.size(); ++t) {
            if (t == self) continue;
            const Interval c = nodes[t].iv;
            if (c.first != leaf || c.second + 1 > last_leaf || c == iv) continue;
            if (best == nodes.size() || c.second > nodes[best].iv.second) best = t;
        }
        if (best == nodes.size()) {
            out += kBullet;
            ++leaf;
        } else {
            render_node(nodes, best, out);
            leaf = nodes[best].iv.second + 2;
        }
    }
    out += ")";
    if (nodes[self].label >= 0) out += subscript(nodes[self].label);
}

std::string render_nodes(int labels, std::vector<TreeNode> nodes)
{
    std::size_t root = nodes.size();
    for (std::size_t t = 0; t < nodes.size(); ++t)
        if (nodes[t].iv == Interval{1, labels}) root = t;
    require(root < nodes.size(), Errc::internal, "tree has no root");
    nodes[root].label = -1;
    std::string out;
    render_node(nodes, root, out);
    return out;
}

bool is_left(const Interval& iv) { return iv.first == 1; }

std::vector<Interval> post_order(std::vector<Interval> v)
{
    std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.second - x.first < y.second - y.first;
    });
    return v;
}

}  // namespace

std::string render_parenthesization(const OrderedPartition& u)
{
    std::vector<TreeNode> nodes;
    for (const auto& ln : leveled_nodes(u)) nodes.push_back({ln.interval, ln.level + 1});
    return render_nodes(u.ground_size(), std::move(nodes));
}

std::string render_tree(const PlanarTree& t)
{
    std::vector<TreeNode> nodes;
    for (const auto& iv : t.nodes) nodes.push_back({iv, -1});
    return render_nodes(t.labels, std::move(nodes));
}

int JCell::levels() const
{
    int count = 0;
    for (const auto& iv : tree.nodes)
        if (is_left(iv)) ++count;
    for (const auto& [iv, slot] : slots)
        if (slot % 2) ++count;
    return count;
}

PlanarTree tree_of(const OrderedPartition& u)
{
    PlanarTree t;
    t.labels = u.ground_size();
    for (const auto& ln : leveled_nodes(u)) t.nodes.push_back(ln.interval);
    std::sort(t.nodes.begin(), t.nodes.end());
    return t;
}

JCell jcell_of(const OrderedPartition& u)
{
    auto nodes = leveled_nodes(u);
    JCell c;
    c.tree.labels = u.ground_size();
    std::vector<int> left_levels;
    for (const auto& ln : nodes) {
        c.tree.nodes.push_back(ln.interval);
        if (is_left(ln.interval)) left_levels.push_back(ln.level);
    }
    std::sort(c.tree.nodes.begin(), c.tree.nodes.end());
    std::sort(left_levels.begin(), left_levels.end());
    for (const auto& ln : nodes) {
        if (is_left(ln.interval)) continue;
        const int a = static_cast<int>(std::upper_bound(left_levels.begin(), left_levels.end(), ln.level) -
                                       left_levels.begin());
        const bool on = a > 0 && left_levels[static_cast<std::size_t>(a - 1)] == ln.level;
        c.slots.emplace_back(ln.interval, on ? 2 * a : 2 * a + 1);
    }
    std::sort(c.slots.begin(), c.slots.end());
    return c;
}

bool is_degenerate(const OrderedPartition& u, Target target)
{
    const int p = u.size();
    for (int j = 0; j + 1 < p; ++j) {
        const Block& a = u.block(j);
        int later_min = u.ground_size() + 1;
        bool exceptional = false;
        for (int k = j + 1; k < p; ++k)
            for (int x : u.block(k)) {
                later_min = std::min(later_min, x);
                if (a.front() < x && x < a.back()) exceptional = true;
            }
        if (!exceptional) continue;
        if (target == Target::K || a.front() > later_min) return true;
    }
    return false;
}

bool is_degenerate_by_word(const OrderedPartition& u, Target target)
{
    for (const auto& level : partition_to_faceword(u).levels) {
        if (level.size() < 2) continue;
        if (target == Target::K || level.front().first > 0) return true;
    }
    return false;
}

std::optional<PlanarTree> project_k(const OrderedPartition& u)
{
    if (is_degenerate(u, Target::K)) return std::nullopt;
    return tree_of(u);
}

std::optional<JCell> project_j(const OrderedPartition& u)
{
    if (is_degenerate(u, Target::J)) return std::nullopt;
    return jcell_of(u);
}

PlanarTree forget_levels(const JCell& c) { return c.tree; }

OrderedPartition preimage(const PlanarTree& t)
{
    std::vector<std::vector<Interval>> levels;
    for (const auto& iv : post_order(t.nodes)) levels.push_back({iv});
    return partition_from_levels(t.labels, levels);
}

OrderedPartition preimage(const JCell& c)
{
    std::vector<Interval> left;
    for (const auto& iv : c.tree.nodes)
        if (is_left(iv)) left.push_back(iv);
    std::sort(left.begin(), left.end(), [](const Interval& x, const Interval& y) { return x.second < y.second; });
    std::map<int, std::vector<Interval>> by_slot;
    for (const auto& [iv, slot] : c.slots) by_slot[slot].push_back(iv);
    std::vector<std::vector<Interval>> levels;
    for (std::size_t a = 0; a <= left.size(); ++a) {
        const int between = 2 * static_cast<int>(a) + 1;
        if (auto it = by_slot.find(between); it != by_slot.end())
            for (const auto& iv : post_order(it->second)) levels.push_back({iv});
        if (a == left.size()) break;
        std::vector<Interval> level{left[a]};
        if (auto it = by_slot.find(2 * static_cast<int>(a + 1)); it != by_slot.end())
            level.insert(level.end(), it->second.begin(), it->second.end());
        levels.push_back(std::move(level));
    }
    return partition_from_levels(c.tree.labels, levels);
}

FaceWord canonical_word(const PlanarTree& t) { return partition_to_faceword(preimage(t)); }

OrderedPartition representative(const JCell& c)
{
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::map<JCell, OrderedPartition>>> cache;
    const int n = c.tree.labels;
    std::shared_ptr<const std::map<JCell, OrderedPartition>> table;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) table = it->second;
    }
    if (!table && n <= 8) {
        auto t = std::make_shared<std::map<JCell, OrderedPartition>>();
        for (const auto& u : enumerate_faces(n)) {
            if (is_degenerate(u, Target::J)) continue;
            t->try_emplace(jcell_of(u), u);  // faces arrive in increasing order
        }
        std::lock_guard<std::mutex> lock(mu);
        table = cache.try_emplace(n, std::move(t)).first->second;
    }
    if (table) {
        auto it = table->find(c);
        require(it != table->end(), Errc::invalid_argument, "not a multiplihedron cell");
        return it->second;
    }
    return preimage(c);
}

std::vector<std::vector<OrderedPartition>> fibers(int n, Target target)
{
    std::vector<std::vector<OrderedPartition>> out;
    if (target == Target::K) {
        std::map<PlanarTree, std::size_t> index;
        for (const auto& u : enumerate_faces(n)) {
            auto [it, inserted] = index.try_emplace(tree_of(u), out.size());
            if (inserted) out.emplace_back();
            out[it->second].push_back(u);
        }
    } else {
        std::map<JCell, std::size_t> index;
        for (const auto& u : enumerate_faces(n)) {
            auto [it, inserted] = index.try_emplace(jcell_of(u), out.size());
            if (inserted) out.emplace_back();
            out[it->second].push_back(u);
        }
    }
    return out;
}

// Members of a fiber carry the same blocks in different orders; a member
// maps onto the cell with the Koszul sign of reordering its blocks into those
// of the canonical preimage.
static Coef orientation(const OrderedPartition& u, const OrderedPartition& canonical)
{
    std::map<Block, int> index;
    for (int k = 0; k < canonical.size(); ++k) index.emplace(canonical.block(k), k);
    std::vector<int> pos, deg;
    for (const auto& b : u.blocks()) {
        auto it = index.find(b);
        require(it != index.end(), Errc::internal, "fiber member with foreign blocks");
        pos.push_back(it->second);
        deg.push_back(static_cast<int>(b.size()) - 1);
    }
    int parity = 0;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) parity ^= (deg[i] * deg[j]) & 1;
    return parity ? -1 : 1;
}

static std::optional<std::pair<PlanarTree, Coef>> signed_k(const OrderedPartition& u)
{
    auto t = project_k(u);
    if (!t) return std::nullopt;
    return std::make_pair(*t, orientation(u, preimage(*t)));
}

static std::optional<std::pair<JCell, Coef>> signed_j(const OrderedPartition& u)
{
    auto c = project_j(u);
    if (!c) return std::nullopt;
    return std::make_pair(*c, orientation(u, preimage(*c)));
}

Coef orientation_sign(const OrderedPartition& u, Target target)
{
    if (target == Target::K) {
        auto t = signed_k(u);
        return t ? t->second : 0;
    }
    auto c = signed_j(u);
    return c ? c->second : 0;
}

KChain push_k(const Chain& c)
{
    KChain out;
    for (const auto& [u, coef] : c)
        if (auto t = signed_k(u)) out.add(t->first, checked_mul(coef, t->second));
    return out;
}

KTensorChain push_k(const TensorChain& t)
{
    KTensorChain out;
    for (const auto& [pr, coef] : t) {
        auto a = signed_k(pr.first);
        if (!a) continue;
        auto b = signed_k(pr.second);
        if (!b) continue;
        out.add({a->first, b->first}, checked_mul(coef, a->second * b->second));
    }
    return out;
}

JChain push_j(const Chain& c)
{
    JChain out;
    for (const auto& [u, coef] : c)
        if (auto t = signed_j(u)) out.add(t->first, checked_mul(coef, t->second));
    return out;
}

JTensorChain push_j(const TensorChain& t)
{
    JTensorChain out;
    for (const auto& [pr, coef] : t) {
        auto a = signed_j(pr.first);
        if (!a) continue;
        auto b = signed_j(pr.second);
        if (!b) continue;
        out.add({a->first, b->first}, checked_mul(coef, a->second * b->second));
    }
    return out;
}

static std::optional<std::pair<PlanarTree, Coef>> jk(const JCell& c)
{
    if (c.tree.dim() < c.dim()) return std::nullopt;
    return std::make_pair(c.tree, orientation(preimage(c), preimage(c.tree)));
}

KChain push_jk(const JChain& c)
{
    KChain out;
    for (const auto& [cell, coef] : c)
        if (auto t = jk(cell)) out.add(t->first, checked_mul(coef, t->second));
    return out;
}

KTensorChain push_jk(const JTensorChain& t)
{
    KTensorChain out;
    for (const auto& [pr, coef] : t) {
        auto a = jk(pr.first);
        if (!a) continue;
        auto b = jk(pr.second);
        if (!b) continue;
        out.add({a->first, b->first}, checked_mul(coef, a->second * b->second));
    }
    return out;
}

namespace {

struct DirectSolver {
    int n;
    DirectBound bound;
    int p = 0, q = 0;
    std::vector<int> ip, lp, lp_sum;  // i'_r, l'_r, l'_(r) for r = 0..q
    std::vector<int> eps;             // eps_0..eps_p
    std::vector<int> il, ll, ll_sum;  // i_k, l_k, l_(k) for k = 0..p
    KTensorChain out;

    int o(int u) const
    {
        int best = 0;
        for (int r = 0; r <= q; ++r)
            if (ip[static_cast<std::size_t>(r)] >= eps[static_cast<std::size_t>(u)]) best = r;
        return best;
    }

    std::optional<int> t(int u) const
    {
        const int ou = lp_sum[static_cast<std::size_t>(o(u))];
        const int e = eps[static_cast<std::size_t>(u)];
        for (int r = 0; r <= q; ++r) {
            const int a = ip[static_cast<std::size_t>(r)];
            if (a + lp_sum[static_cast<std::size_t>(r)] - ou > e && e > a) return r;
        }
        return std::nullopt;
    }

    int o_prime(int u) const
    {
        int best = 0;
        for (int r = 0; r <= p; ++r)
            if (eps[static_cast<std::size_t>(r)] <= ip[static_cast<std::size_t>(u)]) best = r;
        return best;
    }

    void emit()
    {
        long e = 0;
        for (int j = 1; j <= p - 1; ++j) e += static_cast<long>(il[j]) * (ll[j] + 1);
        for (int k = 1; k <= q - 1; ++k) e += static_cast<long>(ip[k] + k + q) * lp[k];
        FaceWord left, right;
        left.labels = right.labels = n + 1;
        for (int j = 1; j <= p - 1; ++j) left.levels.push_back({{il[j], ll[j]}});
        for (int k = 1; k <= q - 1; ++k) right.levels.push_back({{ip[k], lp[k]}});
        const OrderedPartition a = faceword_to_partition(left);
        const OrderedPartition b = faceword_to_partition(right);
        // The word names a leveled cell; push it onto K like any other face.
        auto ta = signed_k(a), tb = signed_k(b);
        require(ta && tb, Errc::internal, "direct solver produced a degenerate word");
        out.add({ta->first, tb->first}, (e % 2 ? -1 : 1) * ta->second * tb->second);
    }

    void left_rec(int k)
    {
        if (k == p) {
            if (ll_sum[static_cast<std::size_t>(p - 1)] == 0 && p > 1) return;
            emit();
            return;
        }
        auto tk = t(k);
        if (!tk) return;
        const int op = o_prime(*tk);
        int cap;
        if (bound == DirectBound::verbatim) {
            const int idx = std::min(op, q);
            cap = ip[static_cast<std::size_t>(*tk)] - lp_sum[static_cast<std::size_t>(idx)];
        } else {
            const int idx = std::min(op, k - 1);
            cap = ip[static_cast<std::size_t>(*tk)] - ll_sum[static_cast<std::size_t>(idx)];
        }
        for (int r = op + 1; r < k; ++r) cap = std::min(cap, il[static_cast<std::size_t>(r)]);
        for (int i = 0; i <= cap; ++i) {
            const int l = eps[static_cast<std::size_t>(k)] - i - ll_sum[static_cast<std::size_t>(k - 1)];
            if (l < 1) continue;
            il[static_cast<std::size_t>(k)] = i;
            ll[static_cast<std::size_t>(k)] = l;
            ll_sum[static_cast<std::size_t>(k)] = ll_sum[static_cast<std::size_t>(k - 1)] + l;
            left_rec(k + 1);
        }
    }

    void start_left()
    {
        eps.assign(static_cast<std::size_t>(p) + 1, 0);
        std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
        for (int r = 1; r <= q - 1; ++r) used[static_cast<std::size_t>(ip[static_cast<std::size_t>(r)])] = 1;
        int k = 1;
        for (int x = 1; x <= n; ++x)
            if (!used[static_cast<std::size_t>(x)]) eps[static_cast<std::size_t>(k++)] = x;
        require(k == p, Errc::internal, "complement size mismatch");
        eps[static_cast<std::size_t>(p)] = n + 1;
        il.assign(static_cast<std::size_t>(p) + 1, 0);
        ll.assign(static_cast<std::size_t>(p) + 1, 0);
        ll_sum.assign(static_cast<std::size_t>(p) + 1, 0);
        il[0] = n + 1;
        ll_sum[static_cast<std::size_t>(p)] = n + 1;
        left_rec(1);
    }

    void right_rec(int j)
    {
        if (j == q) {
            start_left();
            return;
        }
        for (int i = 1; i < ip[static_cast<std::size_t>(j - 1)]; ++i) {
            const int lmax = n + 1 - i - lp_sum[static_cast<std::size_t>(j - 1)];
            for (int l = 1; l <= lmax; ++l) {
                ip[static_cast<std::size_t>(j)] = i;
                lp[static_cast<std::size_t>(j)] = l;
                lp_sum[static_cast<std::size_t>(j)] = lp_sum[static_cast<std::size_t>(j - 1)] + l;
                right_rec(j + 1);
            }
        }
    }

    void run()
    {
        for (q = 1; q <= n + 1; ++q) {
            p = n + 2 - q;
            ip.assign(static_cast<std::size_t>(q) + 1, 0);
            lp.assign(static_cast<std::size_t>(q) + 1, 0);
            lp_sum.assign(static_cast<std::size_t>(q) + 1, 0);
            ip[0] = n + 1;
            ip[static_cast<std::size_t>(q)] = 0;
            lp_sum[static_cast<std::size_t>(q)] = n + 1;
            right_rec(1);
        }
    }
};

}  // namespace

KTensorChain diagonal_assoc_direct(int n, DirectBound bound)
{
    require(n >= 0, Errc::out_of_range, "n must be non-negative");
    DirectSolver s;
    s.n = n;
    s.bound = bound;
    s.run();
    return s.out;
}

KTensorChain diagonal_assoc(int n, AssocMethod method)
{
    require(n >= 0, Errc::out_of_range, "n must be non-negative");
    if (method == AssocMethod::direct) return diagonal_assoc_direct(n);
    return push_k(diagonal_top(n));
}

KTensorChain diagonal_k(const PlanarTree& t) { return push_k(diagonal_face(preimage(t))); }

KTensorChain diagonal_k(const KChain& c)
{
    KTensorChain out;
    for (const auto& [t, coef] : c) out.add(diagonal_k(t), coef);
    return out;
}

KChain boundary_k(const PlanarTree& t) { return push_k(boundary(preimage(t))); }

KChain boundary_k(const KChain& c)
{
    KChain out;
    for (const auto& [t, coef] : c) out.add(boundary_k(t), coef);
    return out;
}

KTensorChain tensor_boundary_k(const KTensorChain& t)
{
    KTensorChain out;
    for (const auto& [pr, coef] : t) {
        for (const auto& [da, c] : boundary_k(pr.first)) out.add({da, pr.second}, checked_mul(coef, c));
        const Coef s = pr.first.dim() % 2 ? -coef : coef;
        for (const auto& [db, c] : boundary_k(pr.second)) out.add({pr.first, db}, checked_mul(s, c));
    }
    return out;
}

JTensorChain diagonal_multi(int n)
{
    require(n >= 0, Errc::out_of_range, "n must be non-negative");
    return push_j(diagonal_top(n));
}

JTensorChain diagonal_j(const JCell& c) { return push_j(diagonal_face(preimage(c))); }

JTensorChain diagonal_j(const JChain& c)
{
    JTensorChain out;
    for (const auto& [cell, coef] : c) out.add(diagonal_j(cell), coef);
    return out;
}

JChain boundary_j(const JCell& c) { return push_j(boundary(preimage(c))); }

JChain boundary_j(const JChain& c)
{
    JChain out;
    for (const auto& [cell, coef] : c) out.add(boundary_j(cell), coef);
    return out;
}

JTensorChain tensor_boundary_j(const JTensorChain& t)
{
    JTensorChain out;
    for (const auto& [pr, coef] : t) {
        for (const auto& [da, c] : boundary_j(pr.first)) out.add({da, pr.second}, checked_mul(coef, c));
        const Coef s = pr.first.dim() % 2 ? -coef : coef;
        for (const auto& [db, c] : boundary_j(pr.second)) out.add({pr.first, db}, checked_mul(s, c));
    }
    return out;
}

KChain boundary_projected_k(int n)
{
    require(n >= 1, Errc::out_of_range, "n must be at least 1");
    return push_k(boundary(OrderedPartition::top(n + 1)));
}

JChain boundary_projected_j(int n)
{
    require(n >= 1, Errc::out_of_range, "n must be at least 1");
    return push_j(boundary(OrderedPartition::top(n + 1)));
}

}  // namespace pd
