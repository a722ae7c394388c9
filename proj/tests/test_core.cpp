#include <limits>
#include <vector>

#include "doctest.h"
#include "permdiag/core.hpp"
#include "permdiag/error.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

Chain chain(std::initializer_list<std::pair<const char*, Coef>> terms)
{
    Chain c;
    for (const auto& [u, k] : terms) c.add(P(u), k);
    return c;
}

}  // namespace

TEST_CASE("partition signs")
{
    CHECK(partition_signs(P("123")).rsgn == -1);
    CHECK(partition_signs(P("2|13")).psgn == -1);
    std::vector<int> m{2}, n{1};
    CHECK(shuffle_sign(m, n) == -1);
    std::vector<int> seq{2, 1, 3};
    CHECK(permutation_sign(seq) == -1);
}

TEST_CASE("face operators on the top cell of P_2")
{
    std::vector<int> one{1}, two{2};
    SignedFace a = face(P("12"), 0, one);
    CHECK(a.coefficient == -1);
    CHECK(a.face == P("1|2"));
    SignedFace b = face(P("12"), 0, two);
    CHECK(b.coefficient == 1);
    CHECK(b.face == P("2|1"));
}

TEST_CASE("boundary")
{
    CHECK(boundary(P("12")) == chain({{"2|1", 1}, {"1|2", -1}}));
    CHECK(boundary(boundary(P("1234"))).empty());
    CHECK(boundary(P("1|2|3")).empty());
    for (int n = 1; n <= 6; ++n) CHECK(boundary(boundary(OrderedPartition::top(n))).empty());
}

TEST_CASE("tensor boundary uses the Koszul sign")
{
    TensorChain a;
    a.add({P("1|2"), P("12")}, 1);
    TensorChain want;
    want.add({P("1|2"), P("2|1")}, 1);
    want.add({P("1|2"), P("1|2")}, -1);
    CHECK(tensor_boundary(a) == want);

    TensorChain b;
    b.add({P("12"), P("2|1")}, 1);
    TensorChain want_b;
    want_b.add({P("2|1"), P("2|1")}, 1);
    want_b.add({P("1|2"), P("2|1")}, -1);
    CHECK(tensor_boundary(b) == want_b);
}

TEST_CASE("face enumeration counts")
{
    CHECK(enumerate_faces(4, 4).size() == 24);
    CHECK(enumerate_faces(4).size() == 75);
    CHECK(enumerate_faces(3).size() == 13);
}

TEST_CASE("parsing and rendering")
{
    CHECK(render_partition(P(" 13|2 ")) == "13|2");
    CHECK(P("1,10|2,3,4,5,6,7,8,9").ground_size() == 10);
    CHECK(render_partition(P("10|9|8|7|6|5|4|3|2|1")) == "10|9|8|7|6|5|4|3|2|1");
    for (const char* bad : {"", "1||2", "12|", "1|1", "13", "1|a", "0|1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(P(bad), Error);
    }
    try {
        P("1|3");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse_error);
    }
}

TEST_CASE("coefficients overflow loudly")
{
    Chain c;
    c.add(P("1"), std::numeric_limits<Coef>::max());
    CHECK_THROWS_AS(c.add(P("1"), 1), Error);
}
