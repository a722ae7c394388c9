#include "permdiag/permcalc.hpp"

#include <algorithm>
#include <iterator>

namespace pd {

namespace {

Block sorted_union(const Blocks& bs)
{
    Block u;
    for (const auto& b : bs) u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
}

Block set_minus(const Block& a, const Block& b)
{
    Block out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Block set_and(const Block& a, const Block& b)
{
    Block out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Block set_or(const Block& a, const Block& b)
{
    Block out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const Block& big, const Block& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Block range(int lo, int hi)
{
    Block out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

Block shifted(Block b, int z)
{
    for (int& x : b) x += z;
    return b;
}

// I_M restricted to a subset of M.
Block index_in(const Block& m, const Block& x)
{
    Block out;
    for (int v : x) {
        auto it = std::lower_bound(m.begin(), m.end(), v);
        require(it != m.end() && *it == v, Errc::invalid_argument, "element outside the indexing set");
        out.push_back(static_cast<int>(it - m.begin()) + 1);
    }
    return out;
}

// I_M^{-1}.
Block unindex(const Block& m, const Block& x)
{
    Block out;
    for (int v : x) {
        require(1 <= v && v <= static_cast<int>(m.size()), Errc::invalid_argument, "index outside the indexing set");
        out.push_back(m[static_cast<std::size_t>(v - 1)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int blocks_dim(const Blocks& b)
{
    int d = 0;
    for (const auto& x : b) d += static_cast<int>(x.size()) - 1;
    return d;
}

Blocks strip(const Blocks& u, const Block& drop)
{
    Blocks out;
    for (const auto& b : u) {
        Block r = set_minus(b, drop);
        if (!r.empty()) out.push_back(std::move(r));
    }
    return out;
}

void check_perm(const Perm& v)
{
    Perm s = v;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        require(s[i] == static_cast<int>(i) + 1, Errc::invalid_argument, "not a permutation of 1..n");
}

// Subsequence of c with entries in m, relabelled through I_m.
Perm unshuffle(const Perm& c, const Block& m)
{
    Perm out;
    for (int x : c)
        if (std::binary_search(m.begin(), m.end(), x)) out.push_back(index_in(m, {x})[0]);
    return out;
}

Perm relabel_perm(const Perm& x, const Block& m)
{
    Perm out;
    for (int v : x) out.push_back(m.at(static_cast<std::size_t>(v - 1)));
    return out;
}

void check_two_blocks(const OrderedPartition& ab)
{
    require(ab.size() == 2, Errc::invalid_argument, "expected a two-block partition A|B");
}

CubicalVertex slice(const CubicalVertex& c, int from, int count)
{
    CubicalVertex out;
    for (int t = 0; t < count; ++t) {
        auto [a, b] = c.pairs.at(static_cast<std::size_t>(from + t));
        out.pairs.emplace_back(a - from, b - from);
    }
    return out;
}

void append_shifted(CubicalVertex& into, const CubicalVertex& c, int shift)
{
    for (auto [a, b] : c.pairs) into.pairs.emplace_back(a + shift, b + shift);
}

}  // namespace

int Decomposition::n() const { return partial(k()) + 1; }

int Decomposition::partial(int i) const
{
    require(0 <= i && i <= k(), Errc::out_of_range, "decomposition index out of range");
    int total = 0;
    for (int t = 0; t < i; ++t) total += parts[static_cast<std::size_t>(t)];
    return total;
}

Block Decomposition::c(int i) const
{
    require(1 <= i && i <= k(), Errc::out_of_range, "decomposition index out of range");
    return range(p(i), p(i) + parts[static_cast<std::size_t>(i - 1)]);
}

std::string render_blocks(const Blocks& b)
{
    bool commas = false;
    for (const auto& x : b)
        for (int v : x) commas = commas || v > 9;
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k) out.push_back('|');
        for (std::size_t t = 0; t < b[k].size(); ++t) {
            if (commas && t) out.push_back(',');
            out += std::to_string(b[k][t]);
        }
    }
    return out;
}

std::string render_perm(const Perm& v)
{
    Blocks b;
    for (int x : v) b.push_back({x});
    return render_blocks(b);
}

std::string render_cubical(const CubicalVertex& c)
{
    if (c.pairs.empty()) return "*";
    std::string out;
    for (std::size_t t = 0; t < c.pairs.size(); ++t) {
        if (t) out += " x ";
        out += render_blocks({{c.pairs[t].first}, {c.pairs[t].second}});
    }
    return out;
}

Perm parse_perm(const std::string& text)
{
    const OrderedPartition u = parse_partition(text);
    Perm v;
    if (u.is_vertex()) {
        for (const auto& b : u.blocks()) v.push_back(b[0]);
    } else if (u.is_top() && text.find('|') == std::string::npos && text.find(',') == std::string::npos) {
        // "2413" in digit mode parses as a single block; read it as one-line form.
        for (char ch : text)
            if (ch >= '1' && ch <= '9') v.push_back(ch - '0');
        check_perm(v);
    } else {
        fail(Errc::parse_error, "'" + text + "' is not a vertex");
    }
    return v;
}

RSImage delta_rs_face(const Blocks& u, int r, int s)
{
    const Block ground = sorted_union(u);
    const int n = static_cast<int>(ground.size());
    require(r >= 1 && s >= 1 && r + s == n + 1, Errc::invalid_argument, "Delta_{r,s} needs r + s = n + 1");
    const Block first_r(ground.begin(), ground.begin() + r);
    const Block first_r1(ground.begin(), ground.begin() + (r - 1));
    const Block last_s(ground.end() - s, ground.end());
    const Block last_s1(ground.end() - (s - 1), ground.end());
    RSImage out;
    auto holds = [&](const Block& x) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (includes(u[i], x)) return static_cast<int>(i);
        return -1;
    };
    if (int i = holds(first_r); i >= 0) {
        out.left = {first_r};
        out.right = u;
        out.right[static_cast<std::size_t>(i)] = set_minus(u[static_cast<std::size_t>(i)], first_r1);
    } else if (int j = holds(last_s); j >= 0) {
        out.left = u;
        out.left[static_cast<std::size_t>(j)] = set_minus(u[static_cast<std::size_t>(j)], last_s1);
        out.right = {last_s};
    } else {
        out.left = strip(u, last_s1);
        out.right = strip(u, first_r1);
    }
    out.degenerate = blocks_dim(out.left) + blocks_dim(out.right) < blocks_dim(u);
    return out;
}

std::pair<Perm, Perm> delta_rs_vertex(const Perm& v, int r, int s)
{
    Blocks u;
    for (int x : v) u.push_back({x});
    RSImage img = delta_rs_face(u, r, s);
    std::pair<Perm, Perm> out;
    for (const auto& b : img.left) out.first.push_back(b[0]);
    for (const auto& b : img.right) out.second.push_back(b[0]);
    return out;
}

CubicalVertex rho(const Perm& v)
{
    check_perm(v);
    const int n = static_cast<int>(v.size());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t < n; ++t) pos[static_cast<std::size_t>(v[static_cast<std::size_t>(t)])] = t;
    CubicalVertex c;
    for (int i = 1; i < n; ++i) {
        if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i + 1)])
            c.pairs.emplace_back(i, i + 1);
        else
            c.pairs.emplace_back(i + 1, i);
    }
    return c;
}

Perm gamma(const CubicalVertex& c)
{
    for (std::size_t t = 0; t < c.pairs.size(); ++t) {
        const int i = static_cast<int>(t) + 1;
        auto [a, b] = c.pairs[t];
        if (!((a == i && b == i + 1) || (a == i + 1 && b == i)))
            fail(Errc::invalid_argument, "cube coordinate " + std::to_string(i) + " is not a pair {i, i+1}");
    }
    if (c.pairs.empty()) return {1};
    Perm a{c.pairs[0].first, c.pairs[0].second};
    for (int k = 3; k <= c.n(); ++k) {
        if (c.pairs[static_cast<std::size_t>(k - 2)].second == k)
            a.push_back(k);
        else
            a.insert(a.begin(), k);
    }
    return a;
}

bool is_cubical(const Perm& v) { return gamma(rho(v)) == v; }

std::pair<int, int> split_sizes(const OrderedPartition& ab)
{
    check_two_blocks(ab);
    const int n = ab.ground_size();
    const bool n_in_a = ab.block_of(n) == 0;
    const int m = static_cast<int>(ab.block(n_in_a ? 0 : 1).size());
    return {n - m, m};
}

std::pair<OrderedPartition, OrderedPartition> embedding(const OrderedPartition& ab)
{
    check_two_blocks(ab);
    const int n = ab.ground_size();
    const Block& a = ab.block(0);
    const Block& b = ab.block(1);
    Blocks first, second;
    if (ab.block_of(n) == 0) {
        for (int x : a) first.push_back({x});
        first.push_back(b);
        second.push_back(a);
        for (int x : b) second.push_back({x});
    } else {
        first.push_back(a);
        for (int x : b) first.push_back({x});
        for (int x : a) second.push_back({x});
        second.push_back(b);
    }
    return {OrderedPartition(n, std::move(first)), OrderedPartition(n, std::move(second))};
}

Perm embed_h(const OrderedPartition& ab, const Perm& x, const Perm& y)
{
    auto [l, m] = split_sizes(ab);
    require(static_cast<int>(x.size()) == l && static_cast<int>(y.size()) == m, Errc::invalid_argument,
            "h_{A|B} expects vertices of P_l x P_m");
    check_perm(x);
    check_perm(y);
    const bool n_in_a = ab.block_of(ab.ground_size()) == 0;
    const Block& without = ab.block(n_in_a ? 1 : 0);
    const Block& with = ab.block(n_in_a ? 0 : 1);
    Perm ox = relabel_perm(x, without), oy = relabel_perm(y, with);
    Perm out = n_in_a ? oy : ox;
    const Perm& tail = n_in_a ? ox : oy;
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Perm embed_h(const OrderedPartition& ab, const std::pair<Perm, Perm>& xy) { return embed_h(ab, xy.first, xy.second); }

std::pair<Perm, Perm> project_phi(const OrderedPartition& ab, const Perm& c)
{
    check_two_blocks(ab);
    require(static_cast<int>(c.size()) == ab.ground_size(), Errc::invalid_argument, "vertex size mismatch");
    check_perm(c);
    const bool n_in_a = ab.block_of(ab.ground_size()) == 0;
    return {unshuffle(c, ab.block(n_in_a ? 1 : 0)), unshuffle(c, ab.block(n_in_a ? 0 : 1))};
}

Perm coface_delta(const OrderedPartition& ab, const Perm& x)
{
    auto [l, m] = split_sizes(ab);
    require(static_cast<int>(x.size()) == ab.ground_size() - 1, Errc::invalid_argument,
            "delta_{A|B} acts on vertices of P_{n-1}");
    const CubicalVertex c = rho(x);
    return embed_h(ab, gamma(slice(c, 0, l - 1)), gamma(slice(c, l - 1, m - 1)));
}

Perm codegeneracy_beta(const OrderedPartition& ab, const Perm& y)
{
    auto [first, second] = project_phi(ab, y);
    CubicalVertex c = rho(first);
    append_shifted(c, rho(second), static_cast<int>(first.size()) - 1);
    return gamma(c);
}

Perm morphism_f(const OrderedPartition& a, const Perm& x)
{
    const int n = a.ground_size(), k = a.size();
    require(static_cast<int>(x.size()) == n - k + 1, Errc::invalid_argument, "f_{A} acts on vertices of P_{n-k+1}");
    const CubicalVertex c = rho(x);
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) order[static_cast<std::size_t>(t)] = t;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a.block(i).back() < a.block(j).back(); });
    std::vector<Perm> parts(static_cast<std::size_t>(k));
    int from = 0;
    for (int t : order) {
        const Block& b = a.block(t);
        const int len = static_cast<int>(b.size()) - 1;
        parts[static_cast<std::size_t>(t)] = relabel_perm(gamma(slice(c, from, len)), b);
        from += len;
    }
    Perm out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

static void check_disjoint_in(const Block& a, const Block& b, const Block& u)
{
    require(std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()) &&
                std::is_sorted(u.begin(), u.end()),
            Errc::invalid_argument, "sets must be increasing");
    require(set_and(a, b).empty(), Errc::invalid_argument, "disjoint union of intersecting sets");
    require(includes(u, a) && includes(u, b), Errc::invalid_argument, "sets must lie in U");
}

Block lower_union(const Block& a, const Block& b, const Block& u)
{
    check_disjoint_in(a, b, u);
    if (a.empty() || b.empty()) return set_or(a, b);
    const Block rest = set_minus(u, a);
    const int na = static_cast<int>(a.size());
    Block out = shifted(index_in(rest, b), na - 1);
    if (b.front() == rest.front()) out = set_or(out, range(1, na));
    return out;
}

Block upper_union(const Block& a, const Block& b, const Block& u)
{
    check_disjoint_in(a, b, u);
    if (a.empty() || b.empty()) return set_or(a, b);
    const Block rest = set_minus(u, b);
    const int total = static_cast<int>(u.size()), nb = static_cast<int>(b.size());
    Block out = index_in(rest, a);
    if (a.back() == rest.back()) out = set_or(out, range(total - nb, total - 1));
    return out;
}

Blocks box(const Block& a, const Blocks& bs)
{
    require(!a.empty() && !bs.empty(), Errc::invalid_argument, "box needs non-empty arguments");
    Blocks all = bs;
    all.push_back(a);
    const Block u = sorted_union(all);
    require(std::adjacent_find(u.begin(), u.end()) == u.end(), Errc::invalid_argument, "box of intersecting sets");
    Blocks out;
    const bool lower = a.back() < u.back();
    for (const auto& b : bs) {
        require(!b.empty(), Errc::invalid_argument, "box needs non-empty blocks");
        out.push_back(lower ? lower_union(a, b, u) : upper_union(b, a, u));
    }
    return out;
}

static OrderedPartition two_blocks(const Block& x, const Block& y)
{
    Block all = set_or(x, y);
    return OrderedPartition(static_cast<int>(all.size()), {x, y});
}

Factorization faceword_factorizations(const OrderedPartition& u)
{
    require(u.size() >= 2, Errc::invalid_argument, "factorization needs at least two blocks");
    const int k = u.size() - 1;
    Factorization f;
    Blocks upper = u.blocks();
    for (int i = 1; i <= k; ++i) {
        Blocks rest(upper.begin() + 1, upper.end());
        f.word1.push_back(two_blocks(upper.front(), sorted_union(rest)));
        if (i < k) upper = box(upper.front(), rest);
    }
    Blocks lower = u.blocks();
    for (int i = 1; i <= k; ++i) {
        Blocks rest(lower.begin(), lower.end() - 1);
        f.word2.push_back(two_blocks(sorted_union(rest), lower.back()));
        if (i < k) lower = box(lower.back(), rest);
    }
    return f;
}

Perm apply_cofaces(const std::vector<OrderedPartition>& word, const Perm& x)
{
    Perm v = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = coface_delta(*it, v);
    return v;
}

bool in_q(const OrderedPartition& uv, int p, int q)
{
    check_two_blocks(uv);
    const int n = uv.ground_size();
    if (p < 1 || q < 1 || p > n || q > n) return false;
    const Block lo = range(1, p), hi = range(n - q + 1, n);
    auto inside = [&](const Block& x) { return includes(uv.block(0), x) || includes(uv.block(1), x); };
    return inside(lo) && inside(hi);
}

std::optional<OrderedPartition> quadratic_condition(const OrderedPartition& ab, const OrderedPartition& cd)
{
    check_two_blocks(ab);
    check_two_blocks(cd);
    const int n = cd.ground_size();
    require(ab.ground_size() == n + 1, Errc::invalid_argument, "C|D must partition one element fewer than A|B");
    const Block& a = ab.block(0);
    const Block& b = ab.block(1);
    const Block& c = cd.block(0);
    const Block& d = cd.block(1);
    const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
    auto make = [&](Block x, Block y, Block z) -> std::optional<OrderedPartition> {
        if (x.empty() || y.empty() || z.empty()) return std::nullopt;
        return OrderedPartition(n + 1, {std::move(x), std::move(y), std::move(z)});
    };
    std::optional<OrderedPartition> out;
    if (ab.block_of(n + 1) == 1) {
        if (in_q(cd, p, 1)) {
            const Block hi = range(n - q + 1, n);
            out = make(a, unindex(b, shifted(set_and(hi, c), 1 - p)), unindex(b, shifted(set_and(hi, d), 1 - p)));
        }
        if (!out && in_q(cd, 1, q)) {
            const Block lo = range(1, p);
            out = make(unindex(a, set_and(lo, c)), unindex(a, set_and(lo, d)), b);
        }
    } else {
        if (in_q(cd, 1, p)) {
            const Block lo = range(1, q);
            out = make(a, unindex(b, set_and(lo, c)), unindex(b, set_and(lo, d)));
        }
        if (!out && in_q(cd, q, 1)) {
            const Block hi = range(n - p + 1, n);
            out = make(unindex(a, shifted(set_and(hi, c), 1 - q)), unindex(a, shifted(set_and(hi, d), 1 - q)), b);
        }
    }
    return out;
}

MultipSplit multip_split(const OrderedPartition& ab, int r, int s)
{
    check_two_blocks(ab);
    const int n = ab.ground_size();
    require(r >= 1 && s >= 1 && r + s == n + 1, Errc::invalid_argument, "multip_split needs r + s = n + 1");
    require(!in_q(ab, r, 1) && !in_q(ab, 1, s), Errc::precondition, "A|B already lies in Q_{r,1} or Q_{1,s}");
    const Block& a = ab.block(0);
    const Block& b = ab.block(1);
    const Block all = range(1, n), all1 = range(1, n - 1);
    const Block lo = range(1, r), hi = range(n - s + 1, n);
    const bool r_in_a = ab.block_of(r) == 0, n_in_a = ab.block_of(n) == 0;
    auto part = [](int size, Block x, Block y) {
        try {
            return OrderedPartition(size, {std::move(x), std::move(y)});
        } catch (const Error& e) {
            fail(Errc::internal, std::string("split produced an invalid partition: ") + e.what());
        }
    };
    MultipSplit out;
    Block l;
    if (r_in_a) {
        l = set_and(lo, b);
        out.kl = part(n, set_or(set_and(lo, a), hi), l);
    } else {
        l = set_or(set_and(lo, b), hi);
        out.kl = part(n, set_and(lo, a), l);
    }
    const int nl = static_cast<int>(l.size());
    if (!r_in_a) {
        Block m = shifted(set_and(hi, a), -1);
        out.mn = part(n - 1, m, set_minus(all1, m));
    } else if (n_in_a) {
        Block nn = shifted(set_and(hi, b), -nl);
        out.mn = part(n - 1, set_minus(all1, nn), nn);
    } else {
        Block m = index_in(set_minus(all, l), a);
        out.mn = part(n - 1, m, set_minus(all1, m));
    }
    if (!r_in_a && !n_in_a) {
        Block x = index_in(set_minus(all, b), set_and(lo, a));
        out.cd = part(n - 1, x, set_minus(all1, x));
    } else if (r_in_a && !n_in_a) {
        Block x = index_in(set_minus(all, a), set_and(hi, b));
        out.cd = part(n - 1, x, set_minus(all1, x));
    } else if (!r_in_a && n_in_a) {
        Block y = index_in(set_minus(all, b), set_and(hi, a));
        out.cd = part(n - 1, set_minus(all1, y), y);
    } else {
        Block y = index_in(set_minus(all, a), set_and(lo, b));
        out.cd = part(n - 1, set_minus(all1, y), y);
    }
    return out;
}

FormalCounts formal_counts(const OrderedPartition& ab, const Decomposition& d, int i)
{
    check_two_blocks(ab);
    for (int x : d.parts) require(x >= 0, Errc::invalid_argument, "decomposition parts must be non-negative");
    require(d.k() >= 1 && d.n() == ab.ground_size(), Errc::invalid_argument, "decomposition does not sum to n - 1");
    require(1 <= i && i <= d.k(), Errc::out_of_range, "decomposition index out of range");
    require(in_q(ab, d.p(i), d.q(i)), Errc::precondition, "A|B is not in Q_{p_i,q_i}(n)");
    const Block c = d.c(i);
    return {static_cast<int>(set_and(c, ab.block(0)).size()) - 1, static_cast<int>(set_and(c, ab.block(1)).size()) - 1};
}

Coef differential_sign(const OrderedPartition& ab, const Decomposition& d, int i)
{
    const FormalCounts fc = formal_counts(ab, d, i);
    const Block c = d.c(i);
    const int e = d.partial(i - 1) + fc.n_prime;
    const int sh = shuffle_sign(set_and(c, ab.block(0)), set_and(c, ab.block(1)));
    const Coef sign = (e % 2 == 0) ? 1 : -1;
    return -sign * sh;
}

}  // namespace pd
