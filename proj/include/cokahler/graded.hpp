#pragma once

#include "cokahler/linalg.hpp"
#include "cokahler/report.hpp"
#include "cokahler/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cokahler {

inline int koszulSign(int degreeA, int degreeB) { return (degreeA % 2 != 0 && degreeB % 2 != 0) ? -1 : 1; }

/// Sparse linear combination of basis elements of one algebra.
///
/// The zero element has no terms and no degree. `truncated` is raised when
/// some contribution to this value was dropped because it lived above the
/// truncation degree of a non-closed algebra; anything computed from a
/// truncated element is only reliable up to that degree.
struct Element {
    std::map<std::size_t, Scalar> terms;
    std::optional<int> degree;
    bool truncated = false;

    bool isZero() const { return terms.empty(); }
    Scalar coefficient(std::size_t index) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Scalar& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    Element operator-() const { return Scalar(-1) * *this; }

    /// Equality of values; the truncation flag is ignored.
    bool operator==(const Element& other) const { return terms == other.terms; }
};

struct BasisElement {
    std::string name;
    int degree = 0;
};

/// Per-degree ordered basis. Index 0 is always the unit (degree 0, and the
/// only element of degree 0).
class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(std::vector<BasisElement> elements, int truncation);

    std::size_t size() const { return elements_.size(); }
    int truncation() const { return truncation_; }
    const BasisElement& operator[](std::size_t i) const { return elements_.at(i); }
    const std::vector<BasisElement>& elements() const { return elements_; }
    int degree(std::size_t i) const { return elements_.at(i).degree; }
    const std::string& name(std::size_t i) const { return elements_.at(i).name; }

    /// Indices of degree p in order; empty outside [0, truncation].
    const std::vector<std::size_t>& inDegree(int p) const;
    std::size_t dim(int p) const { return inDegree(p).size(); }
    /// Position of basis index i inside its degree.
    std::size_t position(std::size_t i) const { return position_.at(i); }
    std::optional<std::size_t> find(const std::string& name) const;

private:
    std::vector<BasisElement> elements_;
    std::vector<std::vector<std::size_t>> byDegree_;
    std::vector<std::size_t> position_;
    std::map<std::string, std::size_t> byName_;
    int truncation_ = 0;
};

/// Finite graded algebra over Q given by a structure-constant table.
///
/// A closed algebra is known to vanish above its truncation degree, so its
/// products landing there are exactly zero. Products above the truncation of
/// a non-closed algebra are unknown: they are dropped and flagged.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    /// `products` is row-major basis.size() x basis.size(); entries for pairs
    /// whose degree exceeds the truncation are overwritten with (flagged) zero.
    GradedAlgebra(std::string name, GradedBasis basis, std::vector<Element> products, bool closed);

    /// Algebra with one basis element (the unit) and truncation 0.
    static GradedAlgebra ground(std::string name = "Q");

    const std::string& name() const { return name_; }
    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t dim(int p) const { return basis_.dim(p); }
    int truncation() const { return basis_.truncation(); }
    bool closed() const { return closed_; }
    /// Highest degree with a nonzero basis element.
    int topDegree() const;

    Element basisElement(std::size_t i) const;
    Element unit() const { return basisElement(0); }
    const Element& product(std::size_t i, std::size_t j) const;
    /// Bilinear extension of the table. Throws std::out_of_range on indices
    /// that are not in this algebra's basis.
    Element multiply(const Element& x, const Element& y) const;
    Element power(const Element& x, int k) const;

    /// Coordinates of the degree-p part of x in basis_.inDegree(p) order.
    Vector coordinates(const Element& x, int p) const;
    Element fromCoordinates(const Vector& v, int p) const;
    /// Validates that every index is in range; recomputes the degree.
    Element normalize(Element x) const;

    /// Matrix of y -> x * y from degree p to degree p + |x| (x homogeneous).
    Matrix leftMultiplicationMatrix(const Element& x, int p) const;

    std::string format(const Element& x) const;
    /// Dimensions through the top degree (closed) or the truncation.
    std::vector<int> betti() const;

private:
    std::string name_;
    GradedBasis basis_;
    std::vector<Element> products_;
    bool closed_ = true;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Graded algebra with a degree +1 differential, stored per basis element.
class ChainComplexAlgebra {
public:
    ChainComplexAlgebra() = default;
    ChainComplexAlgebra(AlgebraPtr algebra, std::vector<Element> differentialOfBasis);

    static ChainComplexAlgebra withZeroDifferential(AlgebraPtr algebra);

    const GradedAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebraPtr() const { return algebra_; }
    const Element& differentialOf(std::size_t i) const { return d_.at(i); }
    Element differential(const Element& x) const;
    /// dim(p+1) x dim(p) matrix of d restricted to degree p.
    Matrix differentialMatrix(int p) const;
    bool isZeroDifferential() const;

private:
    AlgebraPtr algebra_;
    std::vector<Element> d_;
};

/// Degree-preserving linear map between two algebras, given by the images
/// of the source basis.
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<Element> images;

    Element apply(const Element& x) const;
    /// target.dim(p) x source.dim(p)
    Matrix matrix(int p) const;
    /// Degree preservation, multiplicativity on basis pairs (within both
    /// truncations) and, when differentials are given, d-compatibility.
    Report verify(const ChainComplexAlgebra* sourceDifferential = nullptr,
                  const ChainComplexAlgebra* targetDifferential = nullptr) const;
};

/// Subalgebra spanned by all products of the given homogeneous elements,
/// with its inclusion into `ambient`.
struct Subalgebra {
    AlgebraPtr algebra;
    AlgebraMap inclusion;

    /// Preimage of an ambient element lying in the subalgebra; throws
    /// std::invalid_argument otherwise.
    Element restrict(const Element& x) const;
};

Subalgebra generatedSubalgebra(const AlgebraPtr& ambient, const std::vector<Element>& generators,
                               const std::string& name = {});

/// Subalgebra whose degree-p part is spanned by spans[p] (coordinates in
/// ambient degree p). Throws std::logic_error if the spans are not closed
/// under the product.
Subalgebra subalgebraFromSpans(const AlgebraPtr& ambient, const std::vector<std::vector<Vector>>& spans,
                               const std::string& name);

/// Basis name when x is a single basis element, else "(a+2*b)".
std::string compactName(const GradedAlgebra& a, const Element& x);

Report verifyAlgebraAxioms(const GradedAlgebra& a);
Report verifyAlgebraAxioms(const ChainComplexAlgebra& c);

/// Graded tensor product with (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'.
/// Basis ordered by total degree, then by A index, then by B index.
/// Result truncation is min(D_A + D_B, maxTruncation).
GradedAlgebra tensorProduct(const GradedAlgebra& a, const GradedAlgebra& b,
                            std::optional<int> maxTruncation = std::nullopt);

/// tensorProduct plus the factor bookkeeping: factors[k] = (i, j) for the
/// basis element a_i ⊗ b_j of the result.
struct TensorProduct {
    GradedAlgebra algebra;
    std::vector<std::pair<std::size_t, std::size_t>> factors;

    std::optional<std::size_t> index(std::size_t i, std::size_t j) const;
};

TensorProduct tensorProductWithFactors(const GradedAlgebra& a, const GradedAlgebra& b,
                                       std::optional<int> maxTruncation = std::nullopt);

}  // namespace cokahler
