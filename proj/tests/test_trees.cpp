#include <set>

#include "doctest.h"
#include "permdiag/core.hpp"
#include "permdiag/diagonal.hpp"
#include "permdiag/serialize.hpp"
#include "permdiag/trees.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

std::set<std::pair<Coef, std::string>> rendered(const KTensorChain& k)
{
    std::set<std::pair<Coef, std::string>> out;
    for (const auto& [p, c] : k) out.insert({c, render_k_cell(p.first) + " (x) " + render_k_cell(p.second)});
    return out;
}

long catalan(int n)
{
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace

TEST_CASE("face words")
{
    CHECK(render_faceword(partition_to_faceword(P("256|1|34"))) == "d(0,1)d(1,1)(4,2)");
    CHECK(render_faceword(partition_to_faceword(P("12|3"))) == "d(0,2)");
    CHECK(faceword_to_partition(parse_faceword("d(0,1)d(1,1)(4,2)", 6)) == P("256|1|34"));
    for (int n = 1; n <= 5; ++n)
        for (const OrderedPartition& u : enumerate_faces(n)) CHECK(faceword_to_partition(partition_to_faceword(u)) == u);
}

TEST_CASE("parenthesizations and trees")
{
    CHECK(render_parenthesization(P("256|1|34")) == "((•(••)₁)₂•(•••)₁)");
    CHECK(render_parenthesization(P("1|2")) == "((••)₁•)");
    CHECK(render_tree(tree_of(P("13|2"))) == "((••)(••))");
    CHECK(render_tree(tree_of(P("12|4|3"))) == "((•••)(••))");
}

TEST_CASE("degeneracy")
{
    CHECK(is_degenerate(P("13|24"), Target::K));
    CHECK_FALSE(is_degenerate(P("13|24"), Target::J));
    for (int n = 1; n <= 5; ++n)
        for (const OrderedPartition& u : enumerate_faces(n))
            for (Target t : {Target::J, Target::K}) CHECK(is_degenerate(u, t) == is_degenerate_by_word(u, t));
}

TEST_CASE("Tonks classes")
{
    int multi = 0;
    for (const auto& cls : fibers(3, Target::K))
        if (cls.size() > 1) {
            ++multi;
            CHECK(std::set<OrderedPartition>(cls.begin(), cls.end()) ==
                  std::set<OrderedPartition>{P("1|3|2"), P("13|2"), P("3|1|2")});
        }
    CHECK(multi == 1);
    multi = 0;
    for (const auto& cls : fibers(4, Target::K))
        if (cls.size() > 1) ++multi;
    CHECK(multi == 11);
}

TEST_CASE("vertex counts of the associahedra")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<PlanarTree> vertices;
        for (const OrderedPartition& u : enumerate_faces(n, n)) vertices.insert(tree_of(u));
        CHECK(static_cast<long>(vertices.size()) == catalan(n));
    }
}

TEST_CASE("diagonal on K_3 and K_4")
{
    CHECK(rendered(diagonal_assoc(1)) == std::set<std::pair<Coef, std::string>>{{1, "d(0,1) (x) 1"}, {1, "1 (x) d(1,1)"}});
    const std::set<std::pair<Coef, std::string>> k4 = {
        {1, "d(0,1)d(0,1) (x) 1"}, {1, "1 (x) d(1,1)d(2,1)"}, {1, "d(0,2) (x) d(1,1)"},
        {1, "d(0,2) (x) d(1,2)"},  {1, "d(1,1) (x) d(1,2)"},  {-1, "d(0,1) (x) d(2,1)"},
    };
    CHECK(rendered(diagonal_assoc(2)) == k4);
    CHECK(rendered(diagonal_assoc(2, AssocMethod::direct)) == k4);
}

TEST_CASE("boundaries on the associahedra")
{
    KChain k3 = boundary_projected_k(1);
    std::set<std::pair<Coef, std::string>> got;
    for (const auto& [t, c] : k3) got.insert({c, render_k_cell(t)});
    CHECK(got == std::set<std::pair<Coef, std::string>>{{1, "d(1,1)"}, {-1, "d(0,1)"}});
    CHECK(boundary_projected_k(2).size() == 5);
    for (int n = 1; n <= 4; ++n) CHECK(boundary_k(boundary_projected_k(n)).empty());
}

TEST_CASE("two routes and the multiplihedron factorization")
{
    for (int n = 0; n <= 4; ++n) {
        CHECK(diagonal_assoc(n, AssocMethod::projection) == diagonal_assoc(n, AssocMethod::direct));
        CHECK(push_jk(diagonal_multi(n)) == diagonal_assoc(n));
    }
    CHECK(push_j(diagonal_top(2)).size() == diagonal_top(2).size());
}

TEST_CASE("chain maps on the quotients")
{
    for (int n = 1; n <= 4; ++n) {
        const OrderedPartition top = OrderedPartition::top(n + 1);
        CHECK(diagonal_k(push_k(boundary(top))) == tensor_boundary_k(diagonal_assoc(n)));
        CHECK(diagonal_j(push_j(boundary(top))) == tensor_boundary_j(diagonal_multi(n)));
    }
}

TEST_CASE("preimages project back")
{
    for (const OrderedPartition& u : enumerate_faces(4)) {
        if (auto t = project_k(u)) CHECK(project_k(preimage(*t)) == t);
        if (auto c = project_j(u)) CHECK(project_j(preimage(*c)) == c);
    }
}
