#pragma once

#include "cokahler/cohomology.hpp"
#include "cokahler/graded.hpp"

#include <optional>
#include <vector>

namespace cokahler {

/// r degree-1 classes with nonzero product: a cohomological r-torus.
struct TorusCertificate {
    int r = 0;
    std::vector<Element> witnesses;
    Element product;  // unit when r = 0
};

/// Largest r with Λ^r H^1 -> H^r nonzero. Degree-1 classes are taken from
/// the basis; when `preferred` is given it is placed first, so a witness
/// set containing it is returned whenever one of maximal size exists.
TorusCertificate maxExteriorRank(const GradedAlgebra& h, const std::optional<Element>& preferred = std::nullopt);

/// Same, restricted to the span of the given degree-1 elements of h.
TorusCertificate maxExteriorRankOn(const GradedAlgebra& h, const std::vector<Element>& degreeOne);

/// Nonzero product, and the 2^r sub-products are linearly independent.
bool verifyCertificate(const GradedAlgebra& h, const TorusCertificate& c);

/// Exterior rank of the fixed part of H^1 under g.
int alphaTilde1(const GradedAlgebra& hk, const GroupActionSpec& g);

/// alphaTilde1 + 1.
int toralRankBound(const GradedAlgebra& hk, const GroupActionSpec& g);

/// dim H >= 2^r for the maximal certificate, reporting the slack.
Report trcCheck(const GradedAlgebra& h, const std::optional<Element>& preferred = std::nullopt);

}  // namespace cokahler
