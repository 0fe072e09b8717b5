#pragma once

#include "cokahler/cohomology.hpp"
#include "cokahler/graded.hpp"

#include <utility>
#include <vector>

namespace cokahler {

struct LefschetzEntry {
    int p = 0;
    Matrix matrix;  // H^p -> target degree
    std::size_t rank = 0;
    std::size_t sourceDim = 0;
    std::size_t targetDim = 0;
    bool iso = false;
    bool inconclusive = false;  // some product crossed a non-closed truncation
};

struct LefschetzReport {
    int n = 0;
    std::vector<LefschetzEntry> entries;
    Report checks;  // one entry per p, plus Poincaré duality for hard Lefschetz

    bool passed() const { return checks.passed(); }
    const LefschetzEntry* firstFailure() const;
};

/// Hard Lefschetz: ω^{n-p} : H^p -> H^{2n-p} bijective for 0 <= p <= n, on
/// an algebra with Poincaré duality in degree 2n.
LefschetzReport hardLefschetzCheck(const GradedAlgebra& h, const Element& omega, int n);

/// Hard Lefschetz on H^G for a G-invariant ω, after checking that the
/// ambient algebra is itself hard Lefschetz.
Report invariantKahlerCheck(const AlgebraPtr& hk, const GroupActionSpec& g, const Element& omega, int n);

/// Cohomology model B ⊗ ∧(η) of a co-Kähler manifold of dimension 2n+1.
class CoKahlerModel {
public:
    /// Builds B ⊗ ∧(η) from a hard-Lefschetz algebra B of top degree 2n and
    /// its Kähler class. Throws InputError if ω^n η does not span the top.
    CoKahlerModel(AlgebraPtr base, const Element& omegaInBase, int n);

    const GradedAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebraPtr() const { return algebra_; }
    const GradedAlgebra& base() const { return *base_; }
    const AlgebraPtr& basePtr() const { return base_; }
    int n() const { return n_; }
    const Element& omega() const { return omega_; }
    const Element& omegaInBase() const { return omegaBase_; }
    std::size_t etaIndex() const { return eta_; }
    Element eta() const { return algebra_->basisElement(eta_); }

    /// (index in B, carries η) for a model basis element.
    std::pair<std::size_t, bool> factor(std::size_t i) const;
    /// Model element b ⊗ 1 for b in B.
    Element embedBase(const Element& b) const;

private:
    AlgebraPtr base_;
    AlgebraPtr algebra_;
    std::vector<std::pair<std::size_t, bool>> factors_;
    std::vector<std::size_t> baseIndex_;  // B index -> model index of b ⊗ 1
    Element omega_;
    Element omegaBase_;
    std::size_t eta_ = 0;
    int n_ = 0;
};

/// H^*(K)^G ⊗ ∧(η) for a hard-Lefschetz H^*(K) of top degree 2n and
/// invariant Kähler class ω.
CoKahlerModel mappingTorusAlgebra(const AlgebraPtr& hk, const GroupActionSpec& g, const Element& omega);

/// Reconstructs the model from an algebra M known to split as B ⊗ ∧(η),
/// where B is generated by `baseGenerators`. Throws InputError when the
/// multiplication map B ⊗ ∧(η) -> M is not an isomorphism.
CoKahlerModel coKahlerModelFromSplit(const AlgebraPtr& m, const std::vector<Element>& baseGenerators,
                                     const Element& eta, const Element& omega);

Report bettiRelationChecks(const CoKahlerModel& model);

/// The odd derivation with ι(η) = 1 and ι(B) = 0.
Element contractXi(const CoKahlerModel& model, const Element& x);

/// (x - η∧ιx, η∧ιx).
std::pair<Element, Element> etaSplit(const CoKahlerModel& model, const Element& x);

/// Matrix of a -> ω^{n-p+1} ∧ ι a + ω^{n-p} ∧ η ∧ a from H^p to H^{2n+1-p}.
LefschetzEntry cokahlerLefschetz(const CoKahlerModel& model, int p);
LefschetzReport cokahlerLefschetzAll(const CoKahlerModel& model);

}  // namespace cokahler
