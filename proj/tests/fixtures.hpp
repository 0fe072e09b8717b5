#pragma once

#include "cokahler/cohomology.hpp"
#include "cokahler/document.hpp"
#include "cokahler/graded.hpp"
#include "cokahler/presentation.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fx {

using namespace cokahler;

using TermSpec = std::vector<std::pair<Scalar, std::vector<std::string>>>;

inline FreePolynomial poly(const FreeAlgebra& f, const TermSpec& terms) {
    TermList t;
    for (const auto& [c, m] : terms)
        t.push_back({c, m});
    return toPolynomial(f, t, "test");
}

inline PresentedAlgebra present(const std::string& name, std::vector<Generator> gens,
                                const std::vector<TermSpec>& relations, int truncation,
                                const std::vector<std::pair<std::string, TermSpec>>& differential = {}) {
    Presentation p;
    p.name = name;
    p.generators = std::move(gens);
    p.truncation = truncation;
    FreeAlgebra f(p.generators);
    for (const auto& r : relations)
        p.relations.push_back(poly(f, r));
    p.differential.resize(f.size());
    for (const auto& [g, d] : differential)
        p.differential[*f.find(g)] = poly(f, d);
    return buildFromPresentation(p);
}

/// H(T^k) = ∧(x1..xk).
inline AlgebraPtr torus(int k, const std::string& prefix = "x") {
    std::vector<Generator> g;
    for (int i = 1; i <= k; ++i)
        g.push_back({prefix + std::to_string(i), 1});
    return present("T" + std::to_string(k), g, {}, k).algebraPtr();
}

/// H(T^{2n}) on x1,y1,...,xn,yn.
inline AlgebraPtr evenTorus(int n) {
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) {
        g.push_back({"x" + std::to_string(i), 1});
        g.push_back({"y" + std::to_string(i), 1});
    }
    return present("T" + std::to_string(2 * n), g, {}, 2 * n).algebraPtr();
}

/// Σ x_i y_i in evenTorus(n).
inline Element torusOmega(const GradedAlgebra& h, int n) {
    Element w;
    for (int i = 1; i <= n; ++i)
        w += h.basisElement(*h.basis().find("x" + std::to_string(i) + "*y" + std::to_string(i)));
    return w;
}

/// H(CP^n) = Q[u]/(u^{n+1}), |u| = 2.
inline AlgebraPtr projective(int n, const std::string& u = "u") {
    std::vector<std::string> word(static_cast<std::size_t>(n) + 1, u);
    return present("CP" + std::to_string(n), {{u, 2}}, {{{Scalar(1), word}}}, 2 * n + 2).algebraPtr();
}

inline Element basis(const GradedAlgebra& h, const std::string& name) {
    auto i = h.basis().find(name);
    if (!i)
        throw std::invalid_argument("no basis element " + name);
    return h.basisElement(*i);
}

/// a ⊗ 1 and 1 ⊗ b in a tensor product.
inline Element left(const TensorProduct& t, const Element& a) {
    Element out;
    for (const auto& [i, c] : a.terms)
        out.terms[*t.index(i, 0)] = c;
    return t.algebra.normalize(out);
}
inline Element right(const TensorProduct& t, const Element& b) {
    Element out;
    for (const auto& [j, c] : b.terms)
        out.terms[*t.index(0, j)] = c;
    return t.algebra.normalize(out);
}

inline AlgebraPtr share(GradedAlgebra a) { return std::make_shared<const GradedAlgebra>(std::move(a)); }

/// Document text for a presented algebra with optional action and classes.
struct DocBuilder {
    AlgebraDocument doc;

    DocBuilder(std::string name, std::vector<Generator> gens, int truncation) {
        doc.name = std::move(name);
        doc.generators = std::move(gens);
        doc.truncationDegree = truncation;
    }
    static TermList terms(const TermSpec& spec) {
        TermList t;
        for (const auto& [c, m] : spec)
            t.push_back({c, m});
        return t;
    }
    DocBuilder& relation(const TermSpec& r) {
        doc.relations.push_back(terms(r));
        return *this;
    }
    DocBuilder& differential(const std::string& g, const TermSpec& d) {
        doc.differential[g] = terms(d);
        return *this;
    }
    DocBuilder& cls(const std::string& label, const TermSpec& c) {
        doc.classes[label] = terms(c);
        return *this;
    }
    DocBuilder& action(int order, const std::vector<std::pair<std::string, TermSpec>>& images) {
        ActionDocument a;
        a.order = order;
        for (const auto& [g, t] : images)
            a.images[g] = terms(t);
        doc.action = a;
        return *this;
    }
    std::string text() const { return serializeAlgebraDocument(doc); }
    LoadedAlgebra load() const { return loadAlgebra(parseAlgebraDocument(text())); }
};

/// T^2 with the order-4 rotation x -> y, y -> -x and ω = xy.
inline DocBuilder example1() {
    return DocBuilder("T2", {{"x", 1}, {"y", 1}}, 2)
        .cls("omega", {{1, {"x", "y"}}})
        .action(4, {{"x", {{1, {"y"}}}}, {"y", {{-1, {"x"}}}}});
}

/// CP^1 x CP^1 with the factor swap and ω = a + b.
inline DocBuilder example2() {
    return DocBuilder("CP1xCP1", {{"a", 2}, {"b", 2}}, 4)
        .relation({{1, {"a", "a"}}})
        .relation({{1, {"b", "b"}}})
        .cls("omega", {{1, {"a"}}, {1, {"b"}}})
        .action(2, {{"a", {{1, {"b"}}}}, {"b", {{1, {"a"}}}}});
}

/// Random CDGA: free algebra on generators of degree 1..3 truncated at D,
/// with d(x_i) a random combination of products of earlier cocycle
/// generators (so d² = 0 holds by construction).
inline PresentedAlgebra randomCdga(std::mt19937_64& rng, std::size_t maxDim) {
    for (;;) {
        std::uniform_int_distribution<int> count(2, 5), degree(1, 3), coeff(-2, 2), truncation(3, 6);
        int k = count(rng);
        std::vector<Generator> gens;
        for (int i = 0; i < k; ++i)
            gens.push_back({"g" + std::to_string(i), degree(rng)});
        FreeAlgebra f(gens);
        std::vector<FreePolynomial> d(gens.size());
        std::vector<std::size_t> closedGens;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            FreePolynomial di;
            for (std::size_t a = 0; a < closedGens.size(); ++a)
                for (std::size_t b = a; b < closedGens.size(); ++b) {
                    std::size_t ga = closedGens[a], gb = closedGens[b];
                    if (gens[ga].degree + gens[gb].degree != gens[i].degree + 1)
                        continue;
                    int c = coeff(rng);
                    if (c == 0)
                        continue;
                    for (const auto& [m, v] : f.product({ga, gb}))
                        di[m] += c * v;
                }
            std::erase_if(di, [](const auto& kv) { return kv.second == 0; });
            d[i] = di;
            if (di.empty())
                closedGens.push_back(i);
        }
        Presentation p;
        p.name = "R";
        p.generators = gens;
        p.differential = d;
        p.truncation = truncation(rng);
        PresentedAlgebra pa = buildFromPresentation(p);
        if (pa.algebra().dim() <= maxDim)
            return pa;
    }
}

}  // namespace fx
