#pragma once

#include "cokahler/graded.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cokahler {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Exponent vector over an ordered generator list. Odd generators have
/// exponent 0 or 1. The monomial denotes the product of its generators in
/// declaration order.
using Monomial = std::vector<int>;
using FreePolynomial = std::map<Monomial, Scalar>;

/// Free graded-commutative algebra on an ordered list of generators.
class FreeAlgebra {
public:
    FreeAlgebra() = default;
    explicit FreeAlgebra(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    std::optional<std::size_t> find(const std::string& name) const;
    int maxGeneratorDegree() const;

    int degree(const Monomial& m) const;
    /// Degree of a homogeneous polynomial; nullopt for zero, throws on mixed.
    std::optional<int> degree(const FreePolynomial& p) const;

    Monomial one() const { return Monomial(generators_.size(), 0); }
    Monomial generator(std::size_t i) const;
    /// Sign (+1, -1) of m1 * m2 after Koszul normalization, 0 if it vanishes.
    int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;
    FreePolynomial multiply(const FreePolynomial& a, const FreePolynomial& b) const;
    /// Product of generators in the written order, Koszul-normalized.
    FreePolynomial product(const std::vector<std::size_t>& word) const;

    /// All nonvanishing monomials of degree n, in descending exponent-lex
    /// order (so x, y, z order gives xy, xz, yz).
    std::vector<Monomial> monomials(int n) const;

    /// Extends d (given per generator) by the Leibniz rule.
    FreePolynomial differential(const std::vector<FreePolynomial>& dOfGenerators, const FreePolynomial& p) const;
    FreePolynomial differential(const std::vector<FreePolynomial>& dOfGenerators, const Monomial& m) const;

    /// Returns true when no generator is linear (word length 1) in p, i.e.
    /// p lies in the decomposables ∧^{≥2}.
    static bool isDecomposable(const FreePolynomial& p);
    static int wordLength(const Monomial& m);

    std::string format(const Monomial& m) const;
    std::string format(const FreePolynomial& p) const;

private:
    std::vector<Generator> generators_;
    std::map<std::string, std::size_t> byName_;
};

/// Algebra presented by generators, relations and a differential on the
/// generators, truncated at degree `truncation`.
struct Presentation {
    std::string name = "A";
    std::vector<Generator> generators;
    std::vector<FreePolynomial> relations;
    /// One entry per generator; an empty polynomial means d = 0.
    std::vector<FreePolynomial> differential;
    int truncation = 0;

    FreeAlgebra freeAlgebra() const { return FreeAlgebra(generators); }
};

/// Result of buildFromPresentation: the algebra plus the data needed to map
/// free polynomials into it.
struct PresentedAlgebra {
    Presentation presentation;
    FreeAlgebra free;
    std::shared_ptr<const ChainComplexAlgebra> cdga;
    /// Standard monomial of each basis element.
    std::vector<Monomial> basisMonomials;
    /// Normal form of each generator in the quotient.
    std::vector<Element> generatorElements;

    const GradedAlgebra& algebra() const { return cdga->algebra(); }
    AlgebraPtr algebraPtr() const { return cdga->algebraPtr(); }
    /// Image of a free polynomial in the quotient algebra.
    Element evaluate(const FreePolynomial& p) const;
    /// Image of a free polynomial under generator -> images[generator].
    Element evaluateWith(const FreePolynomial& p, const std::vector<Element>& images,
                         const GradedAlgebra& target) const;
};

/// Builds the truncated quotient ∧V / (relations) with its induced
/// differential. Throws InputError on invalid presentations: non-positive
/// generator degrees, inhomogeneous relations or relations above the
/// truncation, differentials of the wrong degree, d(relation) outside the
/// ideal, or d² ≠ 0 modulo relations (naming the offending generator).
///
/// When the quotient vanishes in every degree above the truncation the
/// result is closed and its truncation is lowered to the top nonzero degree.
PresentedAlgebra buildFromPresentation(const Presentation& p);

/// Minimal presentation of a graded algebra: generators are chosen to span
/// the indecomposables degreewise, relations span the kernel of the free
/// algebra modulo the ideal generated in lower degrees. For closed algebras
/// the relations run up to topDegree + max generator degree, so the rebuilt
/// algebra is closed again.
struct AlgebraPresentation {
    Presentation presentation;
    /// H-element represented by each generator.
    std::vector<Element> generatorImages;

    /// Some free polynomial mapping onto x.
    FreePolynomial lift(const GradedAlgebra& h, const Element& x) const;
};

AlgebraPresentation presentationOf(const GradedAlgebra& h, const std::string& name = {});

}  // namespace cokahler
