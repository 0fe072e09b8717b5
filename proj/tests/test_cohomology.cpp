#include "fixtures.hpp"

#include <doctest.h>

using namespace cokahler;
using fx::basis;

TEST_CASE("zero differential: cohomology is the algebra") {
    auto pa = fx::present("T3", {{"x", 1}, {"y", 1}, {"z", 1}}, {}, 3);
    auto h = cohomology(pa.cdga);
    CHECK(h.algebra().betti() == std::vector<int>{1, 3, 3, 1});
    CHECK(bettiNumbers(h.algebra()) == std::vector<int>{1, 3, 3, 1});
    CHECK(h.productWellDefined());
}

TEST_CASE("nilmanifold cohomology") {
    // ∧(e1..e4), d e4 = e1 e2
    auto pa = fx::present("KT", {{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}}, {}, 4,
                          {{"e4", {{1, {"e1", "e2"}}}}});
    auto h = cohomology(pa.cdga);
    CHECK(h.algebra().betti() == std::vector<int>{1, 3, 4, 3, 1});
    for (const auto& rep : h.representatives())
        CHECK(pa.cdga->differential(rep).isZero());
    CHECK(h.isExact(basis(pa.algebra(), "e1*e2")));
    CHECK_THROWS_AS(h.classOf(basis(pa.algebra(), "e4")), std::invalid_argument);
}

TEST_CASE("truncated source drops its top degree") {
    auto pa = fx::present("C", {{"t", 1}, {"u", 2}, {"v", 3}}, {}, 4, {{"v", {{1, {"u", "u"}}}}});
    auto h = cohomology(pa.cdga);
    CHECK(h.droppedDegrees() == std::vector<int>{4});
    CHECK(h.algebra().truncation() == 3);
}

TEST_CASE("zero-truncated algebra") {
    auto g = GradedAlgebra::ground();
    CHECK(bettiNumbers(g) == std::vector<int>{1});
}

TEST_CASE("rotation invariants of the torus") {
    auto l = fx::example1().load();
    REQUIRE(l.action);
    auto inv = invariantSubalgebra(l.presented.algebraPtr(), *l.action);
    CHECK(inv.algebra->betti() == std::vector<int>{1, 0, 1});
    for (int p = 0; p <= 2; ++p) {
        auto pr = averagingProjector(*l.action, p);
        CHECK(pr * pr == pr);
    }
}

TEST_CASE("swap invariants of CP1 x CP1") {
    auto l = fx::example2().load();
    auto h = l.presented.algebraPtr();
    auto inv = invariantSubalgebra(h, *l.action);
    CHECK(inv.algebra->betti() == std::vector<int>{1, 0, 1, 0, 1});
    auto two = inv.algebra->basis().inDegree(2);
    REQUIRE(two.size() == 1);
    auto image = inv.inclusion.apply(inv.algebra->basisElement(two[0]));
    auto ab = basis(*h, "a") + basis(*h, "b");
    // image is a nonzero multiple of a + b
    auto ca = image.coefficient(*h->basis().find("a"));
    CHECK(ca != 0);
    CHECK(image == ca * ab);
}

TEST_CASE("trivial action keeps everything") {
    auto h = fx::torus(3);
    auto inv = invariantSubalgebra(h, GroupActionSpec::trivial(h));
    CHECK(inv.algebra->betti() == h->betti());
}

TEST_CASE("projector image equals the fixed space") {
    auto l = fx::example2().load();
    const auto& g = *l.action;
    for (int p = 0; p <= 4; ++p) {
        auto pr = averagingProjector(g, p);
        auto gm = g.generator.matrix(p);
        auto fixed = (gm - Matrix::identity(gm.rows())).kernel();
        CHECK(pr.rank() == fixed.size());
        for (const auto& v : fixed)
            CHECK(pr * v == v);
    }
}

TEST_CASE("action of the wrong order is rejected") {
    // x -> y, y -> x has order 2, declared as 4
    auto doc = fx::DocBuilder("T2", {{"x", 1}, {"y", 1}}, 2)
                   .action(4, {{"x", {{1, {"y"}}}}, {"y", {{1, {"x"}}}}});
    CHECK_THROWS_AS(doc.load(), InputError);
}

TEST_CASE("non-multiplicative action is rejected") {
    auto doc = fx::DocBuilder("P", {{"a", 2}, {"b", 2}}, 4)
                   .relation({{1, {"a", "a"}}})
                   .action(2, {{"a", {{1, {"b"}}}}, {"b", {{1, {"a"}}}}});
    CHECK_THROWS_AS(doc.load(), InputError);
}

TEST_CASE("poincare duality") {
    CHECK(poincareDualityCheck(*fx::projective(2), 4).passed());
    CHECK(poincareDualityCheck(*fx::torus(3), 3).passed());
    // Q ⊕ Q s ⊕ Q t, |s| = 1, t on top, all products of s and t zero
    GradedBasis b({{"1", 0}, {"s", 1}, {"t", 2}}, 2);
    std::vector<Element> table(9);
    for (std::size_t i = 0; i < 3; ++i) {
        Element e;
        e.terms[i] = 1;
        e.degree = b.degree(i);
        table[i] = table[i * 3] = e;
    }
    GradedAlgebra spurious("X", b, table, true);
    auto r = poincareDualityCheck(spurious, 2);
    CHECK_FALSE(r.passed());
    REQUIRE(r.firstFailure());
    CHECK(r.firstFailure()->name == "pairing p=1");
    CHECK_THROWS_AS(poincareDualityCheck(*fx::torus(2), 1), InputError);
}
