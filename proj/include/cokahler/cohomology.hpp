#pragma once

#include "cokahler/graded.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cokahler {

/// H^*(A, d) with a chosen cocycle representative for each basis class.
///
/// For a non-closed source truncated at D, degree D is dropped (cocycles
/// there are not determined) and the ring is truncated at D - 1.
class CohomologyRing {
public:
    const GradedAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebraPtr() const { return algebra_; }
    const ChainComplexAlgebra& source() const { return *source_; }
    const Element& representative(std::size_t classIndex) const { return representatives_.at(classIndex); }
    const std::vector<Element>& representatives() const { return representatives_; }

    /// Class of a cocycle of the source. Throws std::invalid_argument when x
    /// is not a cocycle or lives in a dropped degree.
    Element classOf(const Element& cocycle) const;
    bool isExact(const Element& x) const;

    /// Result of checking that rep * (exact) is exact on basis pairs.
    bool productWellDefined() const { return wellDefinedWitness_.empty(); }
    const std::string& productWitness() const { return wellDefinedWitness_; }
    /// Source degrees that were dropped as truncation-unreliable.
    const std::vector<int>& droppedDegrees() const { return dropped_; }

private:
    friend CohomologyRing cohomology(std::shared_ptr<const ChainComplexAlgebra> c);

    AlgebraPtr algebra_;
    std::shared_ptr<const ChainComplexAlgebra> source_;
    std::vector<Element> representatives_;
    // Per degree: columns = class representatives then a boundary basis.
    std::vector<Matrix> solvers_;
    std::vector<std::size_t> classCount_;
    std::string wellDefinedWitness_;
    std::vector<int> dropped_;
};

CohomologyRing cohomology(std::shared_ptr<const ChainComplexAlgebra> c);
inline CohomologyRing cohomology(const ChainComplexAlgebra& c) {
    return cohomology(std::make_shared<const ChainComplexAlgebra>(c));
}

/// Cyclic group Z_m acting through the algebra automorphism `generator`.
struct GroupActionSpec {
    int order = 1;
    AlgebraMap generator;

    static GroupActionSpec trivial(const AlgebraPtr& a);
};

/// Throws InputError unless the generator is a degree-preserving algebra
/// automorphism (and chain map, when d is given) of exact order m.
void validateAction(const GroupActionSpec& g, const ChainComplexAlgebra* d = nullptr);

/// Transports an action on a CDGA to its cohomology.
GroupActionSpec inducedAction(const CohomologyRing& h, const GroupActionSpec& g);

struct InvariantSubalgebra {
    AlgebraPtr algebra;
    AlgebraMap inclusion;  // algebra -> ambient
};

/// Fixed subalgebra, computed as the image of the averaging projector
/// (1/m) Σ g^i and cross-checked against ker(g - id).
InvariantSubalgebra invariantSubalgebra(const AlgebraPtr& h, const GroupActionSpec& g);

/// Per-degree averaging projector (1/m) Σ_{i<m} g^i.
Matrix averagingProjector(const GroupActionSpec& g, int p);

std::vector<int> bettiNumbers(const GradedAlgebra& h);

/// Nondegeneracy of H^p x H^{n-p} -> H^n for every p. Throws InputError when
/// dim H^n != 1.
Report poincareDualityCheck(const GradedAlgebra& h, int topDegree);

}  // namespace cokahler
