#include "fixtures.hpp"

#include "cokahler/kahler.hpp"
#include "cokahler/sullivan.hpp"

#include <doctest.h>

using namespace cokahler;
using fx::basis;

TEST_CASE("model of S^2") {
    auto h = fx::projective(1);
    auto m = minimalModelOfFormal(h, 4);
    REQUIRE(m.source.generators.size() == 2);
    CHECK(m.source.generators[0].degree == 2);
    CHECK(m.source.generators[1].degree == 3);
    auto f = m.source.free();
    CHECK(m.source.differential[1] == f.product({0, 0}));
    CHECK(checkSullivan(m.source).passed());
    CHECK(verifyQuasiIso(m, 4).passed());
    auto fp = modelFingerprint(m.source, 4);
    CHECK(fp.generatorDims == std::vector<std::size_t>{0, 0, 1, 1, 0});
    CHECK(fp.quadraticRanks == std::vector<std::size_t>{0, 0, 0, 1, 0});
}

TEST_CASE("model of a torus has no differential") {
    auto m = minimalModelOfFormal(fx::torus(3), 3);
    CHECK(m.source.generatorCount(1) == 3);
    CHECK(m.source.generators.size() == 3);
    for (const auto& d : m.source.differential)
        CHECK(d.empty());
}

TEST_CASE("killing the generator breaks the quasi-isomorphism") {
    auto h = fx::projective(1);
    auto m = minimalModelOfFormal(h, 4);
    m.images[0] = Element{};
    auto r = verifyQuasiIso(m, 4);
    CHECK_FALSE(r.passed());
    REQUIRE(r.firstFailure());
    CHECK(r.firstFailure()->name == "H^2 iso");
}

TEST_CASE("linear differential is not minimal") {
    SullivanAlgebra s;
    s.generators = {{"b", 2}, {"a", 1}};
    s.truncation = 3;
    auto f = s.free();
    s.differential = {{}, {{f.generator(0), 1}}};
    auto r = checkSullivan(s);
    CHECK_FALSE(r.passed());
    REQUIRE(r.firstFailure());
    CHECK(r.firstFailure()->name == "minimal: d(V) has no linear terms");
}

TEST_CASE("seeded rebuild is isomorphic") {
    auto t = fx::share(tensorProduct(*fx::projective(1), *fx::torus(1)));
    auto a = minimalModelOfFormal(t, 4);
    MinimalModelOptions o;
    o.seed = 11;
    auto b = minimalModelOfFormal(t, 4, o);
    CHECK(verifyQuasiIso(b, 4).passed());
    CHECK(modelFingerprint(a.source, 4) == modelFingerprint(b.source, 4));
    auto iso = findModelIsomorphism(a.source, b.source, 4);
    REQUIRE((iso.status == Status::Pass));
    CHECK(verifyModelIsomorphism(a.source, b.source, iso.images, 4));
}

TEST_CASE("different models are told apart") {
    auto a = minimalModelOfFormal(fx::projective(1), 4);
    auto b = minimalModelOfFormal(fx::projective(2), 4);
    CHECK_FALSE(modelFingerprint(a.source, 4) == modelFingerprint(b.source, 4));
    CHECK((findModelIsomorphism(a.source, b.source, 4).status == Status::Fail));
}

TEST_CASE("non-convergent kernel killing is reported") {
    auto pa = fx::present("W", {{"x", 1}, {"y", 1}}, {{{1, {"x", "y"}}}}, 2);
    CHECK_THROWS_AS(minimalModelOfFormal(pa.algebraPtr(), 2), InputError);
}

TEST_CASE("model degree above a non-closed truncation is rejected") {
    auto pa = fx::present("Q[u]", {{"u", 2}}, {}, 4);
    CHECK_THROWS_AS(minimalModelOfFormal(pa.algebraPtr(), 5), InputError);
}

TEST_CASE("tensor split on the T2 rotation") {
    auto l = fx::example1().load();
    auto m = mappingTorusAlgebra(l.presented.algebraPtr(), *l.action, l.namedClass("omega"));
    auto r = modelTensorSplitCheck(m, 3);
    CHECK(r.passed());
    auto circle = tensorWithCircle(minimalModelOfFormal(m.basePtr(), 3).source);
    CHECK(circle.generators.back().name == "eta");
    CHECK(circle.generators.back().degree == 1);
}
