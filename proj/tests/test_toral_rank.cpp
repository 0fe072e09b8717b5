#include "fixtures.hpp"

#include "cokahler/kahler.hpp"
#include "cokahler/toral_rank.hpp"

#include <doctest.h>

using namespace cokahler;
using fx::basis;

namespace {

std::string slack(const Report& r) {
    for (const auto& c : r.checks)
        if (c.name == "dim H >= 2^r")
            return c.detail;
    return {};
}

}  // namespace

TEST_CASE("odd tori are extremal") {
    for (int k : {1, 3, 5}) {
        auto h = fx::torus(k);
        auto c = maxExteriorRank(*h);
        CHECK(c.r == k);
        CHECK(verifyCertificate(*h, c));
        auto r = trcCheck(*h);
        CHECK(r.passed());
        CHECK(slack(r).ends_with("slack 0"));
    }
}

TEST_CASE("mapping torus certificate uses eta") {
    auto l = fx::example2().load();
    auto m = mappingTorusAlgebra(l.presented.algebraPtr(), *l.action, l.namedClass("omega"));
    auto c = maxExteriorRank(m.algebra(), m.eta());
    CHECK(c.r == 1);
    REQUIRE(c.witnesses.size() == 1);
    CHECK(c.witnesses[0] == m.eta());
    auto r = trcCheck(m.algebra(), m.eta());
    CHECK(r.passed());
    CHECK(slack(r).ends_with("slack 4"));
}

TEST_CASE("CP2 x S1") {
    auto t = tensorProduct(*fx::projective(2), *fx::torus(1));
    auto c = maxExteriorRank(t);
    CHECK(c.r == 1);
    CHECK(slack(trcCheck(t)).ends_with("slack 4"));
}

TEST_CASE("simply connected algebra has rank 0") {
    auto c = maxExteriorRank(*fx::projective(2));
    CHECK(c.r == 0);
    CHECK(verifyCertificate(*fx::projective(2), c));
}

TEST_CASE("fixed exterior rank and bound") {
    auto e1 = fx::example1().load();
    CHECK(alphaTilde1(e1.presented.algebra(), *e1.action) == 0);
    CHECK(toralRankBound(e1.presented.algebra(), *e1.action) == 1);
    auto t2 = fx::torus(2);
    CHECK(alphaTilde1(*t2, GroupActionSpec::trivial(t2)) == 2);
    CHECK(toralRankBound(*t2, GroupActionSpec::trivial(t2)) == 3);
    auto e2 = fx::example2().load();
    CHECK(alphaTilde1(e2.presented.algebra(), *e2.action) == 0);
    CHECK(toralRankBound(e2.presented.algebra(), *e2.action) == 1);
}

TEST_CASE("broken certificate is rejected") {
    auto h = fx::torus(2);
    TorusCertificate c;
    c.r = 2;
    c.witnesses = {basis(*h, "x1"), basis(*h, "x1")};
    c.product = h->multiply(c.witnesses[0], c.witnesses[1]);
    CHECK_FALSE(verifyCertificate(*h, c));
}
