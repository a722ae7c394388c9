#include "permdiag/checks.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "permdiag/ainfty.hpp"
#include "permdiag/core.hpp"
#include "permdiag/diagonal.hpp"
#include "permdiag/matrices.hpp"
#include "permdiag/permcalc.hpp"
#include "permdiag/serialize.hpp"
#include "permdiag/trees.hpp"

namespace pd {

namespace {

std::vector<Perm> permutations(int n)
{
    Perm v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Proper non-empty subsets of an increasing block.
std::vector<Block> proper_subsets(const Block& b)
{
    std::vector<Block> out;
    const std::size_t m = b.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
        Block s;
        for (std::size_t t = 0; t < m; ++t)
            if (mask >> t & 1) s.push_back(b[t]);
        out.push_back(s);
    }
    return out;
}

Block merged(const Block& a, const Block& b)
{
    Block out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Collects failures and a short summary for the detail line.
class Tally {
public:
    void step() { ++cases_; }
    void fail(const std::string& example)
    {
        if (failures_++ == 0) example_ = example;
    }
    CheckResult result(const std::string& what) const
    {
        std::ostringstream os;
        os << cases_ << " " << what;
        if (failures_) os << ", " << failures_ << " failed, first: " << example_;
        return {failures_ == 0 && cases_ > 0, os.str()};
    }

private:
    long cases_ = 0;
    long failures_ = 0;
    std::string example_;
};

// core

CheckResult boundary_squared(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n) {
        t.step();
        if (!boundary(boundary(OrderedPartition::top(n))).empty()) t.fail("n=" + std::to_string(n));
    }
    return t.result("top cells");
}

CheckResult face_coefficients(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n))
            for (int k = 0; k < u.size(); ++k)
                for (const Block& m : proper_subsets(u.block(k))) {
                    t.step();
                    SignedFace f = face(u, k, m, Side::left);
                    if (f.coefficient != 1 && f.coefficient != -1) t.fail(render_partition(u));
                }
    return t.result("face operators");
}

CheckResult top_boundary_size(int bound)
{
    Tally t;
    for (int n = 0; n + 1 <= bound; ++n) {
        t.step();
        Chain c = boundary(OrderedPartition::top(n + 1));
        bool units = std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second == 1 || kv.second == -1; });
        if (static_cast<long>(c.size()) != (1L << (n + 1)) - 2 || !units) t.fail("n=" + std::to_string(n));
    }
    return t.result("top cells");
}

CheckResult sign_ratio(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            t.step();
            PartitionSigns s = partition_signs(u);
            int p = u.size();
            int want = ((p - 1) * (p - 2) / 2) % 2 ? -1 : 1;
            if (s.sgn2 * s.sgn1 != want) t.fail(render_partition(u));
        }
    return t.result("partitions");
}

CheckResult partition_round_trip(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            t.step();
            std::string s = render_partition(u);
            if (parse_partition(s) != u || render_partition(parse_partition(s)) != s) t.fail(s);
        }
    for (const char* s : {"1,10|2,3,4,5,6,7,8,9", "10|9|8|7|6|5|4|3|2|1", "1,2,3,4,5,6,7,8,9,10,11"}) {
        t.step();
        if (render_partition(parse_partition(s)) != s) t.fail(s);
    }
    return t.result("partitions");
}

// matrices

CheckResult step_bijection(int bound)
{
    Tally t;
    for (int m = 1; m <= bound; ++m) {
        std::set<OrderedMatrix> seen;
        for (const Perm& s : permutations(m)) {
            t.step();
            OrderedMatrix e = step_from_permutation(s);
            seen.insert(e);
            if (!is_step(e) || permutation_from_step(e) != s) t.fail(render_perm(s));
        }
        long fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        if (static_cast<long>(seen.size()) != fact) t.fail("count for m=" + std::to_string(m));
    }
    return t.result("permutations");
}

CheckResult configuration_transpose(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        std::set<OrderedMatrix> all;
        for (const Configuration& c : enumerate_configurations(n)) all.insert(c.matrix);
        for (const OrderedMatrix& m : all) {
            t.step();
            if (!all.count(transpose(m))) t.fail(render_matrix(m));
        }
    }
    return t.result("configuration matrices");
}

CheckResult shift_commutation(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n)
        for (const Configuration& c : enumerate_configurations(n)) {
            const OrderedMatrix& f = c.matrix;
            for (int i = 0; i + 1 < f.rows(); ++i)
                for (int j = 0; j + 1 < f.cols(); ++j) {
                    auto r = shift(f, ShiftKind::right, i, j);
                    auto d = shift(f, ShiftKind::down, i, j);
                    if (!r || !d) continue;
                    auto lhs = shift(*r, ShiftKind::down, i, j + 1);
                    auto rhs = shift(*d, ShiftKind::right, i + 1, j);
                    if (!lhs || !rhs) continue;
                    t.step();
                    if (*lhs != *rhs) t.fail(render_matrix(f));
                }
        }
    return t.result("commuting shift pairs");
}

CheckResult incremental_sign(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n)
        for (const Configuration& c : enumerate_configurations(n)) {
            Derivation base{c.derivation.base, {}, {}};
            Derivation rights = base;
            rights.right_moves = c.derivation.right_moves;
            OrderedMatrix f = replay(rights);
            for (const auto& [row, set] : c.derivation.down_moves) {
                for (int x : set) {
                    auto [i, j] = f.find(x);
                    auto g = shift(f, ShiftKind::down, i, j);
                    if (!g) {
                        t.fail("replay of " + render_matrix(c.matrix));
                        break;
                    }
                    t.step();
                    int actual = csgn(*g, base) * csgn(f, base);
                    if (actual != down_shift_sign_ratio(f, i, j)) t.fail(render_matrix(f));
                    f = *g;
                }
            }
        }
    return t.result("down-shifts");
}

CheckResult edge_sign(int bound)
{
    Tally t;
    for (int m = 1; m <= bound; ++m)
        for (const Perm& s : permutations(m)) {
            OrderedMatrix e = step_from_permutation(s);
            if (!is_edge(e)) continue;
            t.step();
            std::vector<int> a, b;
            for (int j = 1; j < e.cols(); ++j) a.push_back(e.row_set(0)[static_cast<std::size_t>(j)]);
            for (int i = 1; i < e.rows(); ++i) b.push_back(e.col_set(0)[static_cast<std::size_t>(i)]);
            if (csgn(e, Derivation{e, {}, {}}) != shuffle_sign(b, a)) t.fail(render_perm(s));
        }
    return t.result("edge matrices");
}

CheckResult matrix_faces(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n)
        for (const Configuration& c : enumerate_configurations(n)) {
            t.step();
            try {
                MatrixFaces f = faces_of_matrix(c.matrix);
                if (f.column_face.ground_size() != n + 1 || f.row_face.ground_size() != n + 1)
                    t.fail(render_matrix(c.matrix));
                if (!is_ordered(c.matrix)) t.fail(render_matrix(c.matrix));
            } catch (const Error&) {
                t.fail(render_matrix(c.matrix));
            }
        }
    return t.result("configuration matrices");
}

CheckResult closure_oracle(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        t.step();
        std::vector<OrderedMatrix> a;
        for (const Configuration& c : enumerate_configurations(n)) a.push_back(c.matrix);
        std::vector<OrderedMatrix> b = configurations_by_closure(n);
        std::sort(a.begin(), a.end());
        if (a != b) t.fail("n=" + std::to_string(n));
    }
    return t.result("ground sets");
}

// diagonal

CheckResult diagonal_units(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n)
        for (const auto& [p, c] : diagonal_top(n)) {
            t.step();
            if (c != 1 && c != -1) t.fail(render_partition(p.first) + " (x) " + render_partition(p.second));
        }
    return t.result("terms");
}

CheckResult diagonal_transpose(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        TensorChain d = diagonal_top(n);
        for (const auto& [p, c] : d) {
            t.step();
            if (d.coefficient(transpose_term(p)) == 0)
                t.fail(render_partition(p.first) + " (x) " + render_partition(p.second));
        }
    }
    return t.result("terms");
}

CheckResult diagonal_primitive(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        t.step();
        int left = 0, right = 0;
        bool expected = true;
        OrderedPartition top = OrderedPartition::top(n + 1);
        Perm id(static_cast<std::size_t>(n + 1)), rev;
        std::iota(id.begin(), id.end(), 1);
        rev.assign(id.rbegin(), id.rend());
        for (const auto& [p, c] : diagonal_top(n)) {
            if (p.first.is_vertex()) {
                ++left;
                expected = expected && p.first == OrderedPartition::vertex(id) && p.second == top;
            }
            if (p.second.is_vertex()) {
                ++right;
                expected = expected && p.second == OrderedPartition::vertex(rev) && p.first == top;
            }
        }
        if (!expected || left != 1 || right != 1) t.fail("n=" + std::to_string(n));
    }
    return t.result("diagonals");
}

CheckResult coderivation(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n) {
        t.step();
        if (!verify_coderivation(n).ok) t.fail("n=" + std::to_string(n));
    }
    return t.result("top cells");
}

CheckResult diagonal_degree(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n)
        for (const auto& [p, c] : diagonal_top(n)) {
            t.step();
            if (p.first.dim() + p.second.dim() != n)
                t.fail(render_partition(p.first) + " (x) " + render_partition(p.second));
        }
    return t.result("terms");
}

// trees

CheckResult faceword_round_trip(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            t.step();
            FaceWord w = partition_to_faceword(u);
            if (faceword_to_partition(w) != u || partition_to_faceword(faceword_to_partition(w)) != w ||
                parse_faceword(render_faceword(w), n) != w)
                t.fail(render_partition(u));
        }
    return t.result("faces");
}

CheckResult degeneracy_criteria(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n))
            for (Target target : {Target::J, Target::K}) {
                t.step();
                if (is_degenerate(u, target) != is_degenerate_by_word(u, target)) t.fail(render_partition(u));
            }
    return t.result("face and target pairs");
}

CheckResult assoc_two_routes(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        t.step();
        if (diagonal_assoc(n, AssocMethod::projection) != diagonal_assoc(n, AssocMethod::direct))
            t.fail("n=" + std::to_string(n));
    }
    return t.result("diagonals");
}

CheckResult catalan_vertices(int bound)
{
    Tally t;
    // Bracketings of m letters: b(1) = 1, b(m) = sum b(i) b(m-i).
    std::vector<long> b(static_cast<std::size_t>(bound) + 3, 0);
    b[1] = 1;
    for (int m = 2; m <= bound + 2; ++m)
        for (int i = 1; i < m; ++i) b[static_cast<std::size_t>(m)] += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(m - i)];
    for (int n = 0; n <= bound; ++n) {
        t.step();
        long vertices = 0;
        for (const auto& cls : fibers(n + 1, Target::K)) {
            auto nd = std::find_if(cls.begin(), cls.end(), [](const OrderedPartition& u) { return !is_degenerate(u, Target::K); });
            if (nd != cls.end() && tree_of(*nd).dim() == 0) ++vertices;
        }
        if (vertices != b[static_cast<std::size_t>(n + 2)]) t.fail("n=" + std::to_string(n));
    }
    return t.result("associahedra");
}

CheckResult chain_maps(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n) {
        t.step();
        KChain dk = boundary_projected_k(n);
        JChain dj = boundary_projected_j(n);
        if (tensor_boundary_k(diagonal_assoc(n)) != diagonal_k(dk)) t.fail("K, n=" + std::to_string(n));
        if (tensor_boundary_j(diagonal_multi(n)) != diagonal_j(dj)) t.fail("J, n=" + std::to_string(n));
        if (!boundary_k(dk).empty() || !boundary_j(dj).empty()) t.fail("boundary squared, n=" + std::to_string(n));
    }
    return t.result("diagonals");
}

CheckResult multi_factorization(int bound)
{
    Tally t;
    for (int n = 0; n <= bound; ++n) {
        t.step();
        if (push_jk(diagonal_multi(n)) != diagonal_assoc(n)) t.fail("n=" + std::to_string(n));
    }
    return t.result("diagonals");
}

CheckResult projections_refine(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            auto j = project_j(u);
            auto k = project_k(u);
            if (!j) {
                if (k) t.fail(render_partition(u));
                continue;
            }
            t.step();
            if (forget_levels(*j) != tree_of(u) || (k && *k != tree_of(u))) t.fail(render_partition(u));
        }
    return t.result("J-non-degenerate faces");
}

// permcalc

CheckResult cubical_fixed_points(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const Perm& v : permutations(n)) {
            t.step();
            if ((gamma(rho(v)) == v) != is_cubical(v)) t.fail(render_perm(v));
        }
    return t.result("vertices");
}

CheckResult delta_coassociative(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n))
            for (int r = 1; r <= n; ++r)
                for (int s = 1; r + s <= n + 1; ++s) {
                    int q = n + 2 - r - s;
                    if (q < 1) continue;
                    t.step();
                    RSImage a = delta_rs_face(u.blocks(), r + s - 1, q);
                    RSImage a2 = delta_rs_face(a.left, r, s);
                    RSImage b = delta_rs_face(u.blocks(), r, s + q - 1);
                    RSImage b2 = delta_rs_face(b.right, s, q);
                    if (a2.left != b.left || a2.right != b2.left || a.right != b2.right) t.fail(render_partition(u));
                }
    return t.result("faces and splittings");
}

CheckResult projection_embedding(int bound)
{
    Tally t;
    for (int n = 2; n <= bound; ++n)
        for (const OrderedPartition& ab : enumerate_faces(n, 2)) {
            auto [l, m] = split_sizes(ab);
            for (const Perm& x : permutations(l))
                for (const Perm& y : permutations(m)) {
                    t.step();
                    Perm c = embed_h(ab, x, y);
                    if (project_phi(ab, c) != std::make_pair(x, y) || project_phi(ab.reversed(), c) != std::make_pair(x, y))
                        t.fail(render_partition(ab));
                }
        }
    return t.result("vertex pairs");
}

CheckResult high_relations_vertices(int bound)
{
    Tally t;
    for (int n = 3; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            if (u.size() < 3 || u.size() > 4) continue;
            t.step();
            Factorization f = faceword_factorizations(u);
            for (const Perm& x : permutations(n - u.size() + 1))
                if (apply_cofaces(f.word1, x) != apply_cofaces(f.word2, x)) {
                    t.fail(render_partition(u));
                    break;
                }
        }
    return t.result("partitions with 3 or 4 blocks");
}

CheckResult high_relations_reference(int)
{
    Tally t;
    struct Reference {
        const char* u;
        std::vector<const char*> w1, w2;
    };
    const std::vector<Reference> reference = {
        {"12|345|678", {"12|345678", "1234|567"}, {"12345|678", "12|34567"}},
        {"345|12|678", {"345|12678", "1234|567"}, {"12345|678", "34567|12"}},
    };
    for (const Reference& p : reference) {
        t.step();
        Factorization f = faceword_factorizations(parse_partition(p.u));
        auto same = [](const std::vector<OrderedPartition>& a, const std::vector<const char*>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] != parse_partition(b[k])) return false;
            return true;
        };
        if (!same(f.word1, p.w1) || !same(f.word2, p.w2)) t.fail(p.u);
    }
    return t.result("reference relations");
}

CheckResult bracket_round_trip(int bound)
{
    Tally t;
    for (int n = 3; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n, 3)) {
            const Block &x = u.block(0), &y = u.block(1), &z = u.block(2);
            std::vector<std::pair<OrderedPartition, OrderedPartition>> cases = {
                {OrderedPartition(n, {x, merged(y, z)}), OrderedPartition(n - 1, box(x, {y, z}))},
                {OrderedPartition(n, {merged(x, y), z}), OrderedPartition(n - 1, box(z, {x, y}))},
            };
            for (const auto& [ab, cd] : cases) {
                t.step();
                auto r = quadratic_condition(ab, cd);
                if (!r || *r != u) t.fail(render_partition(u));
            }
        }
    return t.result("bracket cases");
}

CheckResult unions_valid(int bound)
{
    Tally t;
    for (int n = 2; n <= bound; ++n) {
        Block whole(static_cast<std::size_t>(n)), below(static_cast<std::size_t>(n - 1));
        std::iota(whole.begin(), whole.end(), 1);
        std::iota(below.begin(), below.end(), 1);
        for (const OrderedPartition& ab : enumerate_faces(n, 2)) {
            t.step();
            if (lower_union(ab.block(0), ab.block(1), whole) != below ||
                upper_union(ab.block(0), ab.block(1), whole) != below)
                t.fail(render_partition(ab));
        }
        if (n < 3) continue;
        for (const OrderedPartition& u : enumerate_faces(n, 3))
            for (int a = 0; a < 3; ++a) {
                t.step();
                Blocks rest;
                for (int k = 0; k < 3; ++k)
                    if (k != a) rest.push_back(u.block(k));
                try {
                    OrderedPartition out(n - 1, box(u.block(a), rest));
                    if (out.size() != 2) t.fail(render_partition(u));
                } catch (const Error&) {
                    t.fail(render_partition(u));
                }
            }
    }
    return t.result("unions and boxes");
}

// ainfty

CheckResult tensor_op_widths(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (Variance v : {Variance::algebra, Variance::coalgebra})
            for (const TensorOpTerm& term : tensor_operations(n, v)) {
                t.step();
                auto width = [v](const CompositionTerm& c) {
                    return v == Variance::algebra ? c.source_width() : c.target_width();
                };
                bool ok = width(term.left) == n && width(term.right) == n &&
                          term.left.degree() + term.right.degree() == n - 2;
                if (!ok) t.fail(render_tensor_op(term));
            }
    return t.result("tensor terms");
}

CheckResult interval_relations(int bound)
{
    Tally t;
    Model i = interval_model();
    for (SignRule rule : {SignRule::literal, SignRule::coherent}) {
        Model ii = tensor_model(i, i, bound, rule);
        for (int n = 1; n <= bound; ++n) {
            t.step();
            if (!relation_matrix(ii, n).is_zero()) t.fail("n=" + std::to_string(n));
        }
    }
    return t.result("relations");
}

CheckResult relation_counts(int bound)
{
    Tally t;
    for (int n = 1; n <= bound; ++n)
        for (Variance v : {Variance::algebra, Variance::coalgebra}) {
            t.step();
            if (static_cast<int>(quadratic_relations(n, v).size()) != n * (n + 1) / 2) t.fail("n=" + std::to_string(n));
        }
    return t.result("relation sets");
}

CheckResult coherent_relations(int bound)
{
    Tally t;
    Model a = perturbed_interval_model(1, std::max(bound, 3));
    Model b = interval_model();
    for (int n = 1; n <= bound; ++n) {
        t.step();
        if (!relation_matrix(a, n).is_zero()) t.fail("model, n=" + std::to_string(n));
    }
    Model ab = tensor_model(a, b, bound, SignRule::coherent);
    Model aa = tensor_model(a, a, bound, SignRule::coherent);
    for (int n = 1; n <= bound; ++n) {
        t.step();
        if (!relation_matrix(ab, n).is_zero() || !relation_matrix(aa, n).is_zero()) t.fail("coalgebra, n=" + std::to_string(n));
    }
    int alg = std::min(bound, 4);
    Model da = dual_model(a);
    Model dd = tensor_model(da, da, alg, SignRule::coherent);
    for (int n = 1; n <= alg; ++n) {
        t.step();
        if (!relation_matrix(dd, n).is_zero()) t.fail("algebra, n=" + std::to_string(n));
    }
    return t.result("relations on perturbed models");
}

// serialization

CheckResult json_round_trips(int bound)
{
    Tally t;
    auto check = [&t](bool ok, const std::string& what) {
        t.step();
        if (!ok) t.fail(what);
    };
    for (int n = 0; n <= std::min(bound, 5); ++n) {
        TensorChain d = diagonal_top(n);
        check(tensor_chain_from_json(format_tensor_chain(d, Format::json)) == d, "diagonal " + std::to_string(n));
        Chain b = boundary(OrderedPartition::top(n + 1));
        check(chain_from_json(format_chain(b, Format::json)) == b, "boundary " + std::to_string(n));
        KTensorChain k = diagonal_assoc(n);
        check(k_tensor_chain_from_json(format_k_tensor_chain(k, Format::json)) == k, "assoc " + std::to_string(n));
        if (n >= 1) {
            KChain kb = boundary_projected_k(n);
            check(k_chain_from_json(format_k_chain(kb, Format::json)) == kb, "assoc boundary " + std::to_string(n));
        }
        JTensorChain j = diagonal_multi(n);
        check(j_tensor_chain_from_json(format_j_tensor_chain(j, Format::json)) == j, "multi " + std::to_string(n));
        for (const Configuration& c : enumerate_configurations(std::min(n, 3)))
            check(matrix_from_json(format_matrix(c.matrix, Format::json)) == c.matrix, render_matrix(c.matrix));
    }
    for (int n = 1; n <= bound; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) {
            check(partition_from_json(format_partition(u, Format::json)) == u, render_partition(u));
            FaceWord w = partition_to_faceword(u);
            check(faceword_from_json(format_faceword(w, Format::json)) == w, render_faceword(w));
        }
    for (int n = 1; n <= bound; ++n)
        for (Variance v : {Variance::algebra, Variance::coalgebra})
            for (SignRule r : {SignRule::literal, SignRule::coherent}) {
                std::vector<TensorOpTerm> ops = tensor_operations(n, v, r);
                TensorOps back = tensor_ops_from_json(format_tensor_ops(n, v, ops, Format::json));
                bool same = back.n == n && back.variance == v && back.terms.size() == ops.size();
                for (std::size_t k = 0; same && k < ops.size(); ++k)
                    same = back.terms[k].sign == ops[k].sign && back.terms[k].left == ops[k].left &&
                           back.terms[k].right == ops[k].right;
                check(same, "tensor operations " + std::to_string(n));
                for (const TensorOpTerm& term : ops)
                    check(composition_from_json(format_composition(term.left, Format::json)) == term.left,
                          render_composition(term.left));
            }
    return t.result("values");
}

std::vector<Check> build_checks()
{
    return {
        {"core", "boundary-squared", 7, false, boundary_squared},
        {"core", "face-coefficients", 6, false, face_coefficients, 2},
        {"core", "top-boundary-size", 8, false, top_boundary_size},
        {"core", "sign-ratio", 6, false, sign_ratio},
        {"core", "partition-round-trip", 6, false, partition_round_trip},
        {"matrices", "step-bijection", 7, false, step_bijection},
        {"matrices", "configuration-transpose", 5, false, configuration_transpose},
        {"matrices", "shift-commutation", 5, false, shift_commutation, 4},
        {"matrices", "incremental-sign", 5, false, incremental_sign, 2},
        {"matrices", "edge-sign", 7, false, edge_sign},
        {"matrices", "matrix-faces", 5, false, matrix_faces},
        {"matrices", "closure-oracle", 5, false, closure_oracle},
        {"diagonal", "unit-coefficients", 6, false, diagonal_units},
        {"diagonal", "transpose-closure", 5, false, diagonal_transpose},
        {"diagonal", "primitive-terms", 6, false, diagonal_primitive},
        {"diagonal", "coderivation", 6, false, coderivation},
        {"diagonal", "term-degree", 6, false, diagonal_degree},
        {"trees", "faceword-round-trip", 6, false, faceword_round_trip},
        {"trees", "degeneracy-criteria", 6, false, degeneracy_criteria},
        {"trees", "assoc-two-routes", 5, false, assoc_two_routes},
        {"trees", "catalan-vertices", 5, false, catalan_vertices},
        {"trees", "chain-maps", 5, false, chain_maps},
        {"trees", "multi-factorization", 5, false, multi_factorization},
        {"trees", "projections-refine", 5, false, projections_refine},
        {"permcalc", "cubical-fixed-points", 6, false, cubical_fixed_points},
        {"permcalc", "delta-coassociative", 5, false, delta_coassociative},
        {"permcalc", "projection-embedding", 5, false, projection_embedding, 2},
        {"permcalc", "high-relations-vertices", 6, true, high_relations_vertices, 4},
        {"permcalc", "high-relations-reference", 8, false, high_relations_reference},
        {"permcalc", "bracket-round-trip", 6, false, bracket_round_trip, 3},
        {"permcalc", "unions-valid", 6, false, unions_valid, 2},
        {"ainfty", "tensor-op-widths", 8, false, tensor_op_widths},
        {"ainfty", "interval-relations", 3, false, interval_relations},
        {"ainfty", "relation-counts", 8, false, relation_counts},
        {"ainfty", "coherent-relations", 5, false, coherent_relations},
        {"cli", "json-round-trips", 5, false, json_round_trips},
    };
}

}  // namespace

const std::vector<Check>& all_checks()
{
    static const std::vector<Check> checks = build_checks();
    return checks;
}

const Check& find_check(const std::string& name)
{
    for (const Check& c : all_checks())
        if (c.name == name) return c;
    fail(Errc::invalid_argument, "unknown check: " + name);
}

std::vector<CheckReport> run_checks(int max_n, int jobs, const std::string& filter)
{
    require(max_n >= 1, Errc::out_of_range, "max-n must be positive");
    std::vector<CheckReport> reports;
    for (const Check& c : all_checks())
        if (filter.empty() || c.module == filter || c.name == filter)
            reports.push_back({&c, std::clamp(max_n, c.floor, c.limit), {}});
    require(!reports.empty(), Errc::invalid_argument, "no check matches the filter");
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < reports.size(); k = next++) {
            try {
                reports[k].result = reports[k].check->run(reports[k].bound);
            } catch (const std::exception& e) {
                reports[k].result = {false, std::string("error: ") + e.what()};
            }
        }
    };
    int threads = std::max(1, std::min<int>(jobs, static_cast<int>(reports.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return reports;
}

}  // namespace pd
