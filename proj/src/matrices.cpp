#include "permdiag/matrices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pd {

OrderedMatrix::OrderedMatrix(int q, int p, std::vector<int> entries) : q_(q), p_(p), e_(std::move(entries))
{
    require(q_ >= 1 && p_ >= 1, Errc::invalid_argument, "matrix shape must be positive");
    require(e_.size() == static_cast<std::size_t>(q_ * p_), Errc::invalid_argument, "matrix entry count mismatch");
}

OrderedMatrix OrderedMatrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    require(!rows.empty() && !rows[0].empty(), Errc::invalid_argument, "empty matrix");
    const int q = static_cast<int>(rows.size());
    const int p = static_cast<int>(rows[0].size());
    std::vector<int> e;
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == p, Errc::invalid_argument, "ragged matrix rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return OrderedMatrix(q, p, std::move(e));
}

std::vector<std::vector<int>> OrderedMatrix::row_lists() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < p_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
    return out;
}

std::pair<int, int> OrderedMatrix::find(int value) const
{
    for (int i = 0; i < q_; ++i)
        for (int j = 0; j < p_; ++j)
            if (at(i, j) == value) return {i, j};
    fail(Errc::invalid_argument, "entry not in matrix");
}

std::vector<int> OrderedMatrix::row_set(int i) const
{
    std::vector<int> out;
    for (int j = 0; j < p_; ++j)
        if (at(i, j)) out.push_back(at(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> OrderedMatrix::col_set(int j) const
{
    std::vector<int> out;
    for (int i = 0; i < q_; ++i)
        if (at(i, j)) out.push_back(at(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_ordered(const OrderedMatrix& o)
{
    const int m = o.order();
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : o.entries()) {
        if (v == 0) continue;
        if (v < 0 || v > m || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= m; ++v)
        if (!seen[static_cast<std::size_t>(v)]) return false;
    for (int i = 0; i < o.rows(); ++i) {
        int last = 0;
        for (int j = 0; j < o.cols(); ++j) {
            int v = o.at(i, j);
            if (!v) continue;
            if (v < last) return false;
            last = v;
        }
        if (last == 0) return false;
    }
    for (int j = 0; j < o.cols(); ++j) {
        int last = 0;
        for (int i = 0; i < o.rows(); ++i) {
            int v = o.at(i, j);
            if (!v) continue;
            if (v < last) return false;
            last = v;
        }
        if (last == 0) return false;
    }
    return true;
}

OrderedMatrix step_from_permutation(std::span<const int> sigma)
{
    const int m = static_cast<int>(sigma.size());
    require(m >= 1, Errc::invalid_argument, "empty permutation");
    std::vector<int> sorted(sigma.begin(), sigma.end());
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < m; ++k)
        require(sorted[static_cast<std::size_t>(k)] == k + 1, Errc::invalid_argument, "not a permutation");
    int desc = 0;
    for (int k = 1; k < m; ++k)
        if (sigma[static_cast<std::size_t>(k - 1)] > sigma[static_cast<std::size_t>(k)]) ++desc;
    const int q = desc + 1;
    const int p = m - desc;
    OrderedMatrix e(q, p, std::vector<int>(static_cast<std::size_t>(q * p), 0));
    int i = q - 1, j = 0;
    e.at(i, j) = sigma[0];
    for (int k = 1; k < m; ++k) {
        if (sigma[static_cast<std::size_t>(k - 1)] < sigma[static_cast<std::size_t>(k)]) ++j;
        else --i;
        e.at(i, j) = sigma[static_cast<std::size_t>(k)];
    }
    return e;
}

static std::optional<std::vector<int>> staircase_reading(const OrderedMatrix& e)
{
    std::vector<int> sigma;
    int i = e.rows() - 1, j = 0;
    if (!e.at(i, j)) return std::nullopt;
    sigma.push_back(e.at(i, j));
    while (i > 0 || j < e.cols() - 1) {
        const bool right = j + 1 < e.cols() && e.at(i, j + 1);
        const bool up = i > 0 && e.at(i - 1, j);
        if (right == up) return std::nullopt;
        if (right) ++j;
        else --i;
        sigma.push_back(e.at(i, j));
    }
    return sigma;
}

bool is_step(const OrderedMatrix& e)
{
    auto s = staircase_reading(e);
    if (!s || static_cast<int>(s->size()) != e.order()) return false;
    std::vector<int> sorted = *s;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < e.order(); ++k)
        if (sorted[static_cast<std::size_t>(k)] != k + 1) return false;
    return step_from_permutation(*s) == e;
}

std::vector<int> permutation_from_step(const OrderedMatrix& e)
{
    require(is_step(e), Errc::precondition, "not a step matrix");
    return *staircase_reading(e);
}

bool is_edge(const OrderedMatrix& e) { return is_step(e) && e.at(0, 0) == 1; }

MatrixFaces faces_of_matrix(const OrderedMatrix& o)
{
    const int n = o.order();
    Blocks cols, rows;
    for (int j = 0; j < o.cols(); ++j) cols.push_back(o.col_set(j));
    for (int i = o.rows() - 1; i >= 0; --i) rows.push_back(o.row_set(i));
    return {OrderedPartition(n, std::move(cols)), OrderedPartition(n, std::move(rows))};
}

std::optional<OrderedMatrix> shift(const OrderedMatrix& o, ShiftKind kind, int i, int j)
{
    require(i >= 0 && i < o.rows() && j >= 0 && j < o.cols(), Errc::out_of_range, "shift index out of range");
    const int x = o.at(i, j);
    if (!x) return std::nullopt;
    if (kind == ShiftKind::down) {
        if (i + 1 >= o.rows() || o.at(i + 1, j) != 0) return std::nullopt;
        bool other = false;
        for (int k = 0; k < o.cols(); ++k)
            if (k != j && o.at(i, k)) other = true;
        if (!other) return std::nullopt;
        for (int l = 0; l < j; ++l)
            if (!(x > o.at(i + 1, l))) return std::nullopt;
        for (int l = j + 1; l < o.cols(); ++l)
            if (o.at(i + 1, l) > 0 && !(o.at(i + 1, l) > x)) return std::nullopt;
        OrderedMatrix r = o;
        std::swap(r.at(i, j), r.at(i + 1, j));
        return r;
    }
    if (j + 1 >= o.cols() || o.at(i, j + 1) != 0) return std::nullopt;
    bool other = false;
    for (int k = 0; k < o.rows(); ++k)
        if (k != i && o.at(k, j)) other = true;
    if (!other) return std::nullopt;
    for (int l = 0; l < i; ++l)
        if (!(x > o.at(l, j + 1))) return std::nullopt;
    for (int l = i + 1; l < o.rows(); ++l)
        if (o.at(l, j + 1) > 0 && !(o.at(l, j + 1) > x)) return std::nullopt;
    OrderedMatrix r = o;
    std::swap(r.at(i, j), r.at(i, j + 1));
    return r;
}

OrderedMatrix transpose(const OrderedMatrix& o)
{
    std::vector<int> e(static_cast<std::size_t>(o.rows() * o.cols()));
    OrderedMatrix t(o.cols(), o.rows(), std::move(e));
    for (int i = 0; i < o.rows(); ++i)
        for (int j = 0; j < o.cols(); ++j) t.at(j, i) = o.at(i, j);
    return t;
}

static std::optional<OrderedMatrix> apply_batch(OrderedMatrix f, ShiftKind kind, const std::vector<int>& set)
{
    for (int x : set) {
        auto [i, j] = f.find(x);
        auto g = shift(f, kind, i, j);
        if (!g) return std::nullopt;
        f = std::move(*g);
    }
    return f;
}

OrderedMatrix replay(const Derivation& d)
{
    OrderedMatrix f = d.base;
    int last = -1;
    for (const auto& [j, m] : d.right_moves) {
        require(j >= last, Errc::precondition, "right-move columns must weakly increase");
        last = j;
        for (int x : m) require(f.find(x).second == j, Errc::precondition, "right-move entry not in its column");
        auto g = apply_batch(f, ShiftKind::right, m);
        require(g.has_value(), Errc::precondition, "right-move does not act");
        f = std::move(*g);
    }
    last = -1;
    for (const auto& [i, n] : d.down_moves) {
        require(i >= last, Errc::precondition, "down-move rows must weakly increase");
        last = i;
        for (int x : n) require(f.find(x).first == i, Errc::precondition, "down-move entry not in its row");
        auto g = apply_batch(f, ShiftKind::down, n);
        require(g.has_value(), Errc::precondition, "down-move does not act");
        f = std::move(*g);
    }
    return f;
}

int csgn(const OrderedMatrix& f, const Derivation& d)
{
    require(is_step(d.base), Errc::precondition, "derivation base is not a step matrix");
    require(f.rows() == d.base.rows() && f.cols() == d.base.cols(), Errc::precondition, "derivation shape mismatch");
    const MatrixFaces fe = faces_of_matrix(d.base);
    const MatrixFaces ff = faces_of_matrix(f);
    const int q = f.rows();
    const int binom = q * (q - 1) / 2;
    int s = binom % 2 ? -1 : 1;
    s *= partition_signs(fe.column_face).rsgn;
    s *= partition_signs(ff.row_face).sgn1;
    s *= partition_signs(fe.column_face).sgn2;
    s *= partition_signs(ff.column_face).sgn2;
    return s;
}

// Subsets of `pool` whose elements all exceed `bound`, leaving at least one
// element of pool behind.  Includes the empty set.
static std::vector<std::vector<int>> admissible_subsets(const std::vector<int>& pool, int bound)
{
    std::vector<int> big;
    for (int x : pool)
        if (x > bound) big.push_back(x);
    std::vector<std::vector<int>> out;
    const std::size_t r = big.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<int> s;
        for (std::size_t t = 0; t < r; ++t)
            if (mask >> t & 1) s.push_back(big[t]);
        if (s.size() == pool.size()) continue;
        out.push_back(std::move(s));
    }
    return out;
}

static int max_of(const std::vector<int>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

static void down_stage(const OrderedMatrix& f, int i, Derivation& d, std::vector<Configuration>& out)
{
    if (i >= f.rows() - 1) {
        out.push_back({f, d, 0});
        return;
    }
    for (const auto& n : admissible_subsets(f.row_set(i), max_of(f.row_set(i + 1)))) {
        if (n.empty()) {
            down_stage(f, i + 1, d, out);
            continue;
        }
        auto g = apply_batch(f, ShiftKind::down, n);
        if (!g) continue;
        d.down_moves.emplace_back(i, n);
        down_stage(*g, i + 1, d, out);
        d.down_moves.pop_back();
    }
}

static void right_stage(const OrderedMatrix& f, int j, Derivation& d, std::vector<Configuration>& out)
{
    if (j >= f.cols() - 1) {
        down_stage(f, 0, d, out);
        return;
    }
    for (const auto& m : admissible_subsets(f.col_set(j), max_of(f.col_set(j + 1)))) {
        if (m.empty()) {
            right_stage(f, j + 1, d, out);
            continue;
        }
        auto g = apply_batch(f, ShiftKind::right, m);
        if (!g) continue;
        d.right_moves.emplace_back(j, m);
        right_stage(*g, j + 1, d, out);
        d.right_moves.pop_back();
    }
}

std::vector<Configuration> configurations_from(const OrderedMatrix& e)
{
    require(is_step(e), Errc::precondition, "not a step matrix");
    Derivation d;
    d.base = e;
    std::vector<Configuration> raw;
    right_stage(e, 0, d, raw);
    std::map<OrderedMatrix, Configuration> uniq;
    for (auto& c : raw) {
        c.sign = csgn(c.matrix, c.derivation);
        auto [it, inserted] = uniq.try_emplace(c.matrix, c);
        if (!inserted && it->second.sign != c.sign)
            fail(Errc::internal, "two derivations of one matrix disagree on csgn");
    }
    std::vector<Configuration> out;
    for (auto& [m, c] : uniq) out.push_back(std::move(c));
    return out;
}

std::vector<Configuration> enumerate_configurations(int n)
{
    require(n >= 0, Errc::out_of_range, "n must be non-negative");
    std::vector<int> sigma(static_cast<std::size_t>(n + 1));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::map<OrderedMatrix, Configuration> uniq;
    do {
        for (auto& c : configurations_from(step_from_permutation(sigma))) {
            auto [it, inserted] = uniq.try_emplace(c.matrix, c);
            if (!inserted && it->second.sign != c.sign)
                fail(Errc::internal, "two derivations of one matrix disagree on csgn");
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::vector<Configuration> out;
    out.reserve(uniq.size());
    for (auto& [m, c] : uniq) out.push_back(std::move(c));
    return out;
}

namespace {

int row_max(const OrderedMatrix& m, int i)
{
    int r = 0;
    if (i < m.rows())
        for (int j = 0; j < m.cols(); ++j) r = std::max(r, m.at(i, j));
    return r;
}

int col_max(const OrderedMatrix& m, int j)
{
    int r = 0;
    if (j < m.cols())
        for (int i = 0; i < m.rows(); ++i) r = std::max(r, m.at(i, j));
    return r;
}

}  // namespace

std::vector<OrderedMatrix> configurations_by_closure(int n)
{
    require(n >= 0 && n <= 6, Errc::out_of_range, "closure oracle limited to n <= 6");
    // last_down/last_right are the rows and columns of the current batches;
    // a batch only moves entries above the maximum its target row or column
    // held when the batch began.
    struct State {
        OrderedMatrix m;
        int last_down;
        int last_right;
        int down_floor;
        int right_floor;
        auto operator<=>(const State&) const = default;
    };
    std::set<OrderedMatrix> found;
    std::vector<int> sigma(static_cast<std::size_t>(n + 1));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::set<State> seen;
        std::vector<State> stack{{step_from_permutation(sigma), -1, -1, 0, 0}};
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            if (!seen.insert(s).second) continue;
            found.insert(s.m);
            for (int i = 0; i < s.m.rows(); ++i)
                for (int j = 0; j < s.m.cols(); ++j) {
                    if (i >= s.last_down) {
                        const int floor = i == s.last_down ? s.down_floor : row_max(s.m, i + 1);
                        if (s.m.at(i, j) > floor)
                            if (auto g = shift(s.m, ShiftKind::down, i, j))
                                stack.push_back({*g, i, s.last_right, floor, s.right_floor});
                    }
                    if (j >= s.last_right) {
                        const int floor = j == s.last_right ? s.right_floor : col_max(s.m, j + 1);
                        if (s.m.at(i, j) > floor)
                            if (auto g = shift(s.m, ShiftKind::right, i, j))
                                stack.push_back({*g, s.last_down, j, s.down_floor, floor});
                    }
                }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {found.begin(), found.end()};
}

int down_shift_sign_ratio(const OrderedMatrix& f, int i, int j)
{
    auto g = shift(f, ShiftKind::down, i, j);
    require(g.has_value(), Errc::precondition, "down-shift does not act");
    const int x = f.at(i, j);
    int count = 0;
    for (int y : g->row_set(i + 1))
        if (y > x) ++count;
    for (int y : f.row_set(i))
        if (y < x) ++count;
    return count % 2 ? 1 : -1;
}

std::string render_matrix(const OrderedMatrix& o)
{
    int width = 1;
    for (int v : o.entries()) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    std::string rule = "+";
    for (int j = 0; j < o.cols(); ++j) rule += std::string(static_cast<std::size_t>(width + 2), '-') + "+";
    os << rule << '\n';
    for (int i = 0; i < o.rows(); ++i) {
        os << '|';
        for (int j = 0; j < o.cols(); ++j) {
            std::string cell = o.at(i, j) ? std::to_string(o.at(i, j)) : "";
            os << ' ' << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell << " |";
        }
        os << '\n' << rule << '\n';
    }
    return os.str();
}

}  // namespace pd
