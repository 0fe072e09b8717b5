#pragma once

#include "cokahler/graded.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cokahler {

/// Linear map θ of degree k given by its value on every basis element.
struct Derivation {
    int degree = 0;
    std::vector<Element> images;

    Element apply(const Element& x) const;
};

struct DerivationSpace {
    int degree = 0;
    std::vector<Derivation> basis;
    /// False when some Leibniz constraint could not be imposed because the
    /// product it involves lies above a non-closed truncation.
    bool complete = true;

    std::size_t dim() const { return basis.size(); }
};

/// All degree-k derivations θ(xy) = θ(x)y + (-1)^{k|x|} x θ(y), solved as a
/// linear system in the matrix entries of θ on the whole basis. With
/// `vanishOnDegreeOne`, θ is additionally required to kill H^1.
DerivationSpace derivationSpace(const GradedAlgebra& h, int k, bool vanishOnDegreeOne);

/// Checks the Leibniz rule for θ on every basis pair within the truncation.
bool isDerivation(const GradedAlgebra& h, const Derivation& theta);

std::string formatDerivation(const GradedAlgebra& h, const Derivation& theta);

struct PropertyBResult {
    Report report;
    /// Lowest |k| failure, first basis vector of its derivation space.
    std::optional<Derivation> witness;

    bool passed() const { return report.passed(); }
};

/// Every negative-degree derivation vanishing on H^1 vanishes identically.
PropertyBResult propertyBCheck(const GradedAlgebra& h);

/// Property B on H ⊗ G, for H and G that each have it.
Report tensorPropertyBProbe(const GradedAlgebra& h, const GradedAlgebra& g);

}  // namespace cokahler
