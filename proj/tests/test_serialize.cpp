#include "doctest.h"
#include "json.hpp"
#include "permdiag/ainfty.hpp"
#include "permdiag/core.hpp"
#include "permdiag/diagonal.hpp"
#include "permdiag/error.hpp"
#include "permdiag/matrices.hpp"
#include "permdiag/serialize.hpp"
#include "permdiag/trees.hpp"

using namespace pd;

namespace {

OrderedPartition P(const char* s) { return parse_partition(s); }

}  // namespace

TEST_CASE("text forms")
{
    CHECK(format_chain(boundary(P("12")), Format::text) == "+ 2|1  - 1|2\n");
    CHECK(format_chain(Chain{}, Format::text) == "0\n");
    TensorChain d = diagonal_top(1);
    CHECK(format_tensor_chain(d, Format::text) == "+ 1|2 (x) 12\n+ 12 (x) 2|1\n");
    Chain c;
    c.add(P("1|2"), -3);
    CHECK(format_chain(c, Format::text) == "- 3 1|2\n");
}

TEST_CASE("json forms")
{
    nlohmann::json p = nlohmann::json::parse(format_partition(P("13|2"), Format::json));
    CHECK(p["n"] == 3);
    CHECK(p["blocks"] == nlohmann::json::parse("[[1,3],[2]]"));
    nlohmann::json m = nlohmann::json::parse(format_matrix(OrderedMatrix::from_rows({{0, 2, 3}, {1, 5, 0}}), Format::json));
    CHECK(m == nlohmann::json::parse(R"({"q":2,"p":3,"rows":[[0,2,3],[1,5,0]]})"));
}

TEST_CASE("json round trips")
{
    for (int n = 0; n <= 3; ++n) {
        TensorChain d = diagonal_top(n);
        CHECK(tensor_chain_from_json(format_tensor_chain(d, Format::json)) == d);
        KTensorChain k = diagonal_assoc(n);
        CHECK(k_tensor_chain_from_json(format_k_tensor_chain(k, Format::json)) == k);
        JTensorChain j = diagonal_multi(n);
        CHECK(j_tensor_chain_from_json(format_j_tensor_chain(j, Format::json)) == j);
    }
    for (const OrderedPartition& u : enumerate_faces(4)) {
        CHECK(partition_from_json(format_partition(u, Format::json)) == u);
        FaceWord w = partition_to_faceword(u);
        CHECK(faceword_from_json(format_faceword(w, Format::json)) == w);
    }
    for (Variance v : {Variance::algebra, Variance::coalgebra})
        for (const TensorOpTerm& t : tensor_operations(4, v, SignRule::coherent)) {
            CHECK(composition_from_json(format_composition(t.left, Format::json)) == t.left);
            CHECK(composition_from_json(format_composition(t.right, Format::json)) == t.right);
        }
}

TEST_CASE("malformed json is a parse error")
{
    for (const char* bad : {"", "{", R"({"n":2,"blocks":[[1],[1]]})", R"({"n":2})", R"([{"coef":1}])"}) {
        CAPTURE(bad);
        try {
            (void)partition_from_json(bad);
            (void)chain_from_json(bad);
            FAIL("accepted malformed input");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
        }
    }
    CHECK_THROWS_AS(composition_from_json(R"({"variance":"coalgebra","steps":[[2,0,0],[2,0,0],[2,3,0]]})"), Error);
}

TEST_CASE("latex forms")
{
    CHECK(format_faceword(parse_faceword("d(0,1)d(1,1)(4,2)", 6), Format::latex) == "$d_{(0,1)}d_{(1,1)(4,2)}$\n");
    const std::string t = format_tensor_chain(diagonal_top(1), Format::latex);
    CHECK(t.find("\\begin{align*}") != std::string::npos);
    CHECK(t.find("\\otimes") != std::string::npos);
}

TEST_CASE("format names")
{
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("latex") == Format::latex);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}
