#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "permdiag/core.hpp"
#include "permdiag/matrices.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

const OrderedMatrix nine_step =
    OrderedMatrix::from_rows({{0, 0, 0, 2}, {0, 0, 0, 5}, {0, 0, 4, 6}, {1, 3, 8, 0}, {7, 0, 0, 0}, {9, 0, 0, 0}});
const OrderedMatrix three_step = OrderedMatrix::from_rows({{0, 2, 3}, {1, 5, 0}, {4, 0, 0}});

}  // namespace

TEST_CASE("step matrices from permutations")
{
    CHECK(step_from_permutation(std::vector<int>{9, 7, 1, 3, 8, 4, 6, 5, 2}) == nine_step);
    CHECK(step_from_permutation(std::vector<int>{2, 1}) == OrderedMatrix::from_rows({{1}, {2}}));
    CHECK(permutation_from_step(nine_step) == std::vector<int>{9, 7, 1, 3, 8, 4, 6, 5, 2});
    CHECK(permutation_from_step(OrderedMatrix::from_rows({{1, 2}})) == std::vector<int>{1, 2});
    CHECK(is_step(nine_step));
    CHECK_FALSE(is_step(OrderedMatrix::from_rows({{1, 0}, {0, 2}})));
}

TEST_CASE("faces of a matrix")
{
    MatrixFaces f = faces_of_matrix(nine_step);
    CHECK(f.column_face == P("971|3|84|652"));
    CHECK(f.row_face == P("9|7|138|46|5|2"));
    MatrixFaces g = faces_of_matrix(OrderedMatrix::from_rows({{1}, {2}}));
    CHECK(g.column_face == P("12"));
    CHECK(g.row_face == P("2|1"));
}

TEST_CASE("shifts on a 3x3 step matrix")
{
    auto right = shift(three_step, ShiftKind::right, 1, 1);
    REQUIRE(right.has_value());
    CHECK(faces_of_matrix(*right).column_face == P("14|2|35"));
    auto down = shift(three_step, ShiftKind::down, 1, 1);
    REQUIRE(down.has_value());
    CHECK(faces_of_matrix(*down).row_face == P("45|1|23"));
    CHECK_FALSE(shift(three_step, ShiftKind::down, 0, 1).has_value());
}

TEST_CASE("configurations derived from one step matrix")
{
    std::set<std::pair<OrderedPartition, OrderedPartition>> pairs;
    for (const Configuration& c : configurations_from(three_step)) {
        MatrixFaces f = faces_of_matrix(c.matrix);
        pairs.insert({f.column_face, f.row_face});
    }
    const std::set<std::pair<OrderedPartition, OrderedPartition>> reference = {
        {P("14|25|3"), P("4|15|23")},
        {P("14|2|35"), P("4|15|23")},
        {P("14|25|3"), P("45|1|23")},
        {P("14|2|35"), P("45|1|23")},
    };
    CHECK(pairs == reference);
}

TEST_CASE("configuration counts")
{
    const std::vector<std::size_t> counts{1, 2, 8, 50, 432};
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_configurations(n).size() == counts[static_cast<std::size_t>(n)]);
    int steps = 0;
    for (const Configuration& c : enumerate_configurations(2))
        if (is_step(c.matrix)) ++steps;
    CHECK(steps == 6);
}

TEST_CASE("the closure oracle matches the enumeration")
{
    for (int n = 0; n <= 4; ++n) {
        std::vector<OrderedMatrix> a;
        for (const Configuration& c : enumerate_configurations(n)) a.push_back(c.matrix);
        std::sort(a.begin(), a.end());
        CHECK(configurations_by_closure(n) == a);
    }
}

TEST_CASE("configuration signs of the size-2 matrices")
{
    for (const Configuration& c : enumerate_configurations(1)) CHECK(c.sign == 1);
}

TEST_CASE("edge matrix of the cubical vertex 2|1|3")
{
    OrderedMatrix e = step_from_permutation(std::vector<int>{2, 1, 3});
    REQUIRE(is_edge(e));
    int found = 0;
    for (const Configuration& c : enumerate_configurations(2))
        if (c.matrix == e) {
            ++found;
            CHECK(c.sign == 1);
        }
    CHECK(found == 1);
}

TEST_CASE("transpose")
{
    OrderedMatrix row = OrderedMatrix::from_rows({{1, 2, 3}});
    CHECK(transpose(row) == OrderedMatrix::from_rows({{1}, {2}, {3}}));
    const OrderedMatrix r3 = OrderedMatrix::from_rows({{1, 2}, {0, 3}});
    const OrderedMatrix d3 = OrderedMatrix::from_rows({{1, 0}, {2, 3}});
    CHECK(transpose(r3) == d3);
    std::set<OrderedMatrix> all;
    for (const Configuration& c : enumerate_configurations(3)) all.insert(c.matrix);
    for (const OrderedMatrix& m : all) CHECK(all.count(transpose(m)) == 1);
}
