#include <numeric>
#include <set>

#include "doctest.h"
#include "permdiag/core.hpp"
#include "permdiag/permcalc.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

std::vector<Perm> permutations(int n)
{
    Perm v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<OrderedPartition> word(std::initializer_list<const char*> w)
{
    std::vector<OrderedPartition> out;
    for (const char* s : w) out.push_back(P(s));
    return out;
}

}  // namespace

TEST_CASE("Delta_{r,s} on faces")
{
    RSImage a = delta_rs_face(P("2|4|1|3").blocks(), 2, 3);
    CHECK(render_blocks(a.left) == "2|1");
    CHECK(render_blocks(a.right) == "2|4|3");
    RSImage b = delta_rs_face(P("1|23").blocks(), 2, 2);
    CHECK(render_blocks(b.left) == "1|2");
    CHECK(render_blocks(b.right) == "23");
    CHECK_FALSE(b.degenerate);
    RSImage c = delta_rs_face(P("13|2").blocks(), 2, 2);
    CHECK(render_blocks(c.left) == "1|2");
    CHECK(render_blocks(c.right) == "3|2");
    CHECK(c.degenerate);
}

TEST_CASE("cubical vertices")
{
    CHECK(render_perm(gamma(rho(parse_perm("3|2|1|4")))) == "3|2|1|4");
    CHECK(render_cubical(rho(parse_perm("2|3|1"))) == "2|1 x 2|3");
    CubicalVertex c{{{2, 1}, {3, 2}, {3, 4}}};
    CHECK(render_perm(gamma(c)) == "3|2|1|4");
}

TEST_CASE("embeddings")
{
    auto [l, r] = embedding(P("14|23"));
    CHECK(l == P("1|4|23"));
    CHECK(r == P("14|2|3"));
}

TEST_CASE("codegeneracy after coface is gamma rho")
{
    for (int n = 2; n <= 5; ++n)
        for (const OrderedPartition& ab : enumerate_faces(n, 2))
            for (const Perm& x : permutations(n - 1)) {
                const Perm back = codegeneracy_beta(ab, coface_delta(ab, x));
                CHECK(back == gamma(rho(x)));
                if (is_cubical(x)) CHECK(back == x);
            }
}

TEST_CASE("a constant composite of cofaces")
{
    std::set<Perm> images;
    for (const Perm& x : permutations(2)) images.insert(apply_cofaces(word({"12|34", "13|2"}), x));
    CHECK(images.size() == 1);
}

TEST_CASE("disjoint unions and boxes")
{
    for (int n = 2; n <= 6; ++n) {
        Block whole(static_cast<std::size_t>(n)), below(static_cast<std::size_t>(n - 1));
        std::iota(whole.begin(), whole.end(), 1);
        std::iota(below.begin(), below.end(), 1);
        for (const OrderedPartition& ab : enumerate_faces(n, 2)) {
            CHECK(lower_union(ab.block(0), ab.block(1), whole) == below);
            CHECK(upper_union(ab.block(0), ab.block(1), whole) == below);
        }
    }
    CHECK(render_blocks(box({1, 2}, {{3, 4, 5}, {6, 7, 8}})) == "1234|567");
}

TEST_CASE("the reference quadratic relations")
{
    Factorization a = faceword_factorizations(P("12|345|678"));
    CHECK(a.word1 == word({"12|345678", "1234|567"}));
    CHECK(a.word2 == word({"12345|678", "12|34567"}));
    Factorization b = faceword_factorizations(P("345|12|678"));
    CHECK(b.word1 == word({"345|12678", "1234|567"}));
    CHECK(b.word2 == word({"12345|678", "34567|12"}));
    CHECK(quadratic_condition(P("12|345678"), P("1234|567")) == P("12|345|678"));
}

TEST_CASE("bracket round trip")
{
    for (int n = 3; n <= 6; ++n)
        for (const OrderedPartition& u : enumerate_faces(n, 3)) {
            const Block yz = [&] {
                Block m;
                std::merge(u.block(1).begin(), u.block(1).end(), u.block(2).begin(), u.block(2).end(),
                           std::back_inserter(m));
                return m;
            }();
            const OrderedPartition first = concat(n, {{u.block(0)}, {yz}});
            Blocks rest = box(u.block(0), {u.block(1), u.block(2)});
            const OrderedPartition second(n - 1, rest);
            CHECK(quadratic_condition(first, second) == u);
        }
}

TEST_CASE("multiplicative splitting")
{
    MultipSplit m = multip_split(P("13|2"), 2, 2);
    CHECK(m.kl == P("1|23"));
    CHECK(m.mn == P("2|1"));
    CHECK(m.cd == P("1|2"));
}

TEST_CASE("formal counts")
{
    FormalCounts f = formal_counts(P("1234|56"), Decomposition{{3, 2}}, 2);
    CHECK(f.n_prime == 0);
    CHECK(f.n_second == 1);
}
