#include "doctest.h"
#include "permdiag/core.hpp"
#include "permdiag/diagonal.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

TensorChain terms(std::initializer_list<std::tuple<Coef, const char*, const char*>> list)
{
    TensorChain t;
    for (const auto& [c, u, v] : list) t.add({P(u), P(v)}, c);
    return t;
}

}  // namespace

TEST_CASE("diagonal on P_2 and P_3")
{
    CHECK(diagonal_top(1) == terms({{1, "1|2", "12"}, {1, "12", "2|1"}}));
    CHECK(diagonal_top(2) == terms({{1, "1|2|3", "123"},
                                    {1, "123", "3|2|1"},
                                    {-1, "1|23", "13|2"},
                                    {1, "2|13", "23|1"},
                                    {-1, "13|2", "3|12"},
                                    {1, "12|3", "2|13"},
                                    {-1, "1|23", "3|12"},
                                    {1, "12|3", "23|1"}}));
    CHECK(diagonal_top(0) == terms({{1, "1", "1"}}));
}

TEST_CASE("diagonal of a face is the product of the block diagonals")
{
    CHECK(diagonal_face(P("12|3")) == terms({{1, "1|2|3", "12|3"}, {1, "12|3", "2|1|3"}}));
}

TEST_CASE("term counts")
{
    const std::vector<std::size_t> counts{1, 2, 8, 50, 432};
    for (int n = 0; n <= 4; ++n) CHECK(diagonal_top(n).size() == counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("coderivation")
{
    CoderivationReport r = verify_coderivation(1);
    CHECK(r.ok);
    CHECK(r.residual.empty());
    for (int n = 2; n <= 4; ++n) CHECK(verify_coderivation(n).ok);
}

TEST_CASE("transposes")
{
    FacePair t{P("12|3"), P("2|13")};
    CHECK(transpose_term(t) == FacePair{P("13|2"), P("3|12")});
    TensorChain d = diagonal_top(3);
    for (const auto& [p, c] : d) CHECK(d.coefficient(transpose_term(p)) != 0);
}
