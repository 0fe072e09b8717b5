#pragma once

#include "cokahler/cohomology.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cokahler {

/// Free graded-commutative algebra (∧V, d) described through degree
/// `truncation`. Generators are listed so that d of each one only involves
/// earlier generators.
struct SullivanAlgebra {
    std::string name = "M";
    std::vector<Generator> generators;
    std::vector<FreePolynomial> differential;
    int truncation = 0;

    FreeAlgebra free() const { return FreeAlgebra(generators); }
    /// Presentation without relations, truncated at `degree`.
    Presentation presentation(int degree) const;
    std::size_t generatorCount(int degree) const;
    std::string format() const;
};

/// Minimality (no linear terms in d), d² = 0 in the free algebra,
/// well-ordering and positive generator degrees.
Report checkSullivan(const SullivanAlgebra& s);

/// Algebra map from a Sullivan algebra to a graded algebra with zero
/// differential, given on generators.
struct ModelMap {
    SullivanAlgebra source;
    AlgebraPtr target;
    std::vector<Element> images;
};

struct MinimalModelOptions {
    /// When set, basis choices are permuted and rescaled deterministically
    /// from this seed; the result is a different but isomorphic model.
    std::optional<std::uint64_t> seed;
    /// Rounds of kernel-killing per degree before giving up.
    int maxRounds = 8;
    /// Generators allowed in a single degree.
    std::size_t maxGeneratorsPerDegree = 32;
};

/// Minimal model of (H, 0) through degree N, generators named v{deg}_{k}.
/// Throws InputError when N exceeds the truncation of a non-closed H, or
/// when kernel-killing does not terminate within the budget.
ModelMap minimalModelOfFormal(const AlgebraPtr& h, int n, const MinimalModelOptions& options = {});

/// Chain-map property and bijectivity of H(∧V) -> H for degrees < N.
Report verifyQuasiIso(const ModelMap& m, int n);

struct ModelFingerprint {
    /// Indexed by degree 0..N (entry 0 unused).
    std::vector<std::size_t> generatorDims;
    std::vector<std::size_t> quadraticRanks;

    bool operator==(const ModelFingerprint&) const = default;
    std::string format() const;
};

ModelFingerprint modelFingerprint(const SullivanAlgebra& s, int n);

struct IsoSearchResult {
    Status status = Status::Inconclusive;  // Pass: found, Fail: fingerprints differ
    /// Image in ∧V_b of each generator of a of degree <= N.
    std::vector<FreePolynomial> images;
    std::string detail;
};

/// Bounded search for a dga isomorphism a -> b through degree N, built
/// generator by generator as a particular solution of d X = f(dx) plus
/// small combinations of cocycles.
IsoSearchResult findModelIsomorphism(const SullivanAlgebra& a, const SullivanAlgebra& b, int n,
                                     std::size_t nodeBudget = 20000);

/// f d = d f on generators and invertible linear part in every degree.
bool verifyModelIsomorphism(const SullivanAlgebra& a, const SullivanAlgebra& b,
                            const std::vector<FreePolynomial>& images, int n);

/// Appends a degree-1 generator with zero differential.
SullivanAlgebra tensorWithCircle(const SullivanAlgebra& s, const std::string& name = "eta");

/// Compares the minimal model of M = B ⊗ ∧(η) with (model of B) ⊗ ∧(η).
Report modelTensorSplitCheck(const CoKahlerModel& model, int n);

}  // namespace cokahler
