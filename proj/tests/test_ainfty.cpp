#include <set>

#include "doctest.h"
#include "permdiag/ainfty.hpp"
#include "permdiag/trees.hpp"

using namespace pd;

namespace {

std::set<std::pair<Coef, std::string>> rendered(int n, Variance v, SignRule rule = SignRule::literal)
{
    std::set<std::pair<Coef, std::string>> out;
    for (const TensorOpTerm& t : tensor_operations(n, v, rule)) out.insert({t.sign, render_tensor_op(t)});
    return out;
}

bool relations_vanish(const Model& m, int upto)
{
    for (int n = 1; n <= upto; ++n)
        if (!relation_matrix(m, n).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("composites attached to faces")
{
    for (int n = 2; n <= 6; ++n) {
        FaceWord top{n - 1, {}};
        CompositionTerm c = faceword_to_composition(top, n, Variance::coalgebra);
        REQUIRE(c.steps.size() == 1);
        CHECK(c.steps[0].arity == n);
    }
    CompositionTerm a = faceword_to_composition(parse_faceword("d(0,1)", 2), 3, Variance::algebra);
    REQUIRE(a.steps.size() == 2);
    CHECK(a.steps[0] == Step{2, 0, 1});
    CHECK(a.steps[1] == Step{2, 0, 0});
    CompositionTerm b = faceword_to_composition(parse_faceword("d(1,1)d(2,1)", 3), 4, Variance::coalgebra);
    CHECK(b.source_width() == 1);
    CHECK(b.target_width() == 4);
    CHECK(b.degree() == 0);
}

TEST_CASE("the reference iterates on A (x) A")
{
    using Set = std::set<std::pair<Coef, std::string>>;
    CHECK(rendered(1, Variance::coalgebra) == Set{{1, "ψ¹⊗1"}, {1, "1⊗ψ¹"}});
    CHECK(rendered(2, Variance::coalgebra) == Set{{1, "ψ²⊗ψ²"}});
    CHECK(rendered(3, Variance::coalgebra) == Set{{1, "ψ²₀ψ²₀⊗ψ³"}, {1, "ψ³⊗ψ²₁ψ²₀"}});
    CHECK(rendered(4, Variance::coalgebra) == Set{{1, "ψ²₀ψ²₀ψ²₀⊗ψ⁴"},
                                                  {1, "ψ⁴⊗ψ²₂ψ²₁ψ²₀"},
                                                  {1, "ψ³₀ψ²₀⊗ψ²₁ψ³₀"},
                                                  {1, "ψ³₀ψ²₀⊗ψ³₁ψ²₀"},
                                                  {1, "ψ²₁ψ³₀⊗ψ³₁ψ²₀"},
                                                  {-1, "ψ²₀ψ³₀⊗ψ²₂ψ³₀"}});
    CHECK(render_tensor_ops(2, Variance::coalgebra, tensor_operations(2, Variance::coalgebra)) == "Ψ² = σ₂,₂(ψ²⊗ψ²)");
}

TEST_CASE("relation sizes")
{
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(quadratic_relations(n, Variance::algebra).size()) == n * (n + 1) / 2);
        CHECK(static_cast<int>(quadratic_relations(n, Variance::coalgebra).size()) == n * (n + 1) / 2);
    }
    CHECK(quadratic_relations(3, Variance::algebra).size() == 6);
}

TEST_CASE("the interval model")
{
    Model i = interval_model();
    CHECK(i.rank() == 3);
    CHECK(relations_vanish(i, 4));
    CHECK(relations_vanish(tensor_model(i, i, 3), 3));
    CHECK(relations_vanish(tensor_model(i, i, 4, SignRule::coherent), 4));
}

TEST_CASE("perturbed models")
{
    Model a = perturbed_interval_model(1, 5);
    CHECK(relations_vanish(a, 5));
    CHECK(perturbed_interval_model(1, 5).ops.at(4).table == a.ops.at(4).table);
    bool nonzero = false;
    for (const auto& [w, t] : a.ops.at(3).table) nonzero = nonzero || !t.empty();
    CHECK(nonzero);
    CHECK(relations_vanish(dual_model(a), 5));
}

TEST_CASE("only the coherent rule gives tensor products in every arity")
{
    Model a = perturbed_interval_model(1, 5);
    Model i = interval_model();
    CHECK(relations_vanish(tensor_model(a, i, 3), 3));
    CHECK_FALSE(relations_vanish(tensor_model(a, a, 4), 4));
    CHECK(relations_vanish(tensor_model(a, a, 5, SignRule::coherent), 5));
    Model d = dual_model(a);
    CHECK_FALSE(relations_vanish(tensor_model(d, d, 3), 3));
    CHECK(relations_vanish(tensor_model(d, d, 4, SignRule::coherent), 4));
}
