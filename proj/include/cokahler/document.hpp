#pragma once

#include "cokahler/cohomology.hpp"
#include "cokahler/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cokahler {

struct Term {
    Scalar coeff;
    std::vector<std::string> monomial;  // generator names, written order
};
using TermList = std::vector<Term>;

struct ActionDocument {
    int order = 1;
    /// Generator name -> image; generators not listed are fixed.
    std::map<std::string, TermList> images;
};

/// Structured-text (JSON) description of a presented algebra.
struct AlgebraDocument {
    std::string name = "A";
    std::string coefficientField = "Q";
    int truncationDegree = 0;
    std::vector<Generator> generators;
    std::vector<TermList> relations;
    std::map<std::string, TermList> differential;
    std::map<std::string, TermList> classes;
    std::optional<ActionDocument> action;
};

/// Parses and validates a document. Throws InputError naming the offending
/// field (or the line, for syntax errors). Polynomials come back
/// Koszul-normalized, so serializing the result gives the canonical form.
AlgebraDocument parseAlgebraDocument(std::string_view text);
std::string serializeAlgebraDocument(const AlgebraDocument& doc);

FreePolynomial toPolynomial(const FreeAlgebra& f, const TermList& terms, const std::string& field);
TermList toTerms(const FreeAlgebra& f, const FreePolynomial& p);

/// Document with everything built: the CDGA, the action on it and the
/// named classes evaluated in the algebra.
struct LoadedAlgebra {
    AlgebraDocument document;
    PresentedAlgebra presented;
    std::optional<GroupActionSpec> action;
    std::map<std::string, Element> classes;

    const ChainComplexAlgebra& cdga() const { return *presented.cdga; }
    const Element& namedClass(const std::string& label) const;
};

/// Builds the algebra. With `maxDegree` below the document truncation, the
/// algebra is truncated there and relations above it are dropped; above
/// the truncation it is an InputError.
LoadedAlgebra loadAlgebra(const AlgebraDocument& doc, std::optional<int> maxDegree = std::nullopt);
LoadedAlgebra loadAlgebraFile(const std::string& path, std::optional<int> maxDegree = std::nullopt);

/// Document for a presentation, with named classes given as polynomials.
AlgebraDocument documentFromPresentation(const Presentation& p,
                                         const std::map<std::string, FreePolynomial>& classes = {});

/// Minimal presentation of h as a document, with named elements of h
/// lifted to polynomials in the new generators.
AlgebraDocument documentFromAlgebra(const GradedAlgebra& h, const std::map<std::string, Element>& classes = {},
                                    const std::string& name = {});

}  // namespace cokahler
