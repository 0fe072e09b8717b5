#include "cokahler/derivations.hpp"

#include <sstream>
#include <stdexcept>

namespace cokahler {

Element Derivation::apply(const Element& x) const {
    Element out;
    for (const auto& [i, c] : x.terms)
        out += c * images.at(i);
    return out;
}

DerivationSpace derivationSpace(const GradedAlgebra& h, int k, bool vanishOnDegreeOne) {
    if (k >= 0)
        throw std::invalid_argument("derivationSpace: degree must be negative");
    const auto& basis = h.basis();
    const std::size_t n = h.dim();
    const int D = h.truncation();

    // variable (i, position in target degree) -> column
    std::vector<std::size_t> firstVar(n, 0);
    std::vector<bool> hasVars(n, false);
    std::size_t vars = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int q = basis.degree(i) + k;
        if (q < 0 || h.dim(q) == 0 || (vanishOnDegreeOne && basis.degree(i) == 1))
            continue;
        hasVars[i] = true;
        firstVar[i] = vars;
        vars += h.dim(q);
    }

    DerivationSpace out;
    out.degree = k;
    if (vars == 0)
        return out;

    SparseEchelon system(vars);
    auto var = [&](std::size_t i, std::size_t targetIndex) { return firstVar[i] + basis.position(targetIndex); };

    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) {
            int q = basis.degree(a) + basis.degree(b) + k;
            if (q < 0 || q > D || h.dim(q) == 0)
                continue;
            const Element& ab = h.product(a, b);
            if (ab.truncated) {
                out.complete = false;
                continue;
            }
            const int sign = (k * basis.degree(a)) % 2 != 0 ? -1 : 1;
            std::map<std::size_t, SparseVector> rows;  // target basis index -> row
            // θ(ab)
            for (const auto& [c, coef] : ab.terms) {
                if (!hasVars[c])
                    continue;
                for (std::size_t t : basis.inDegree(q))
                    rows[t][var(c, t)] += coef;
            }
            // - θ(a) b
            if (hasVars[a])
                for (std::size_t j : basis.inDegree(basis.degree(a) + k))
                    for (const auto& [t, coef] : h.product(j, b).terms)
                        rows[t][var(a, j)] -= coef;
            // - sign a θ(b)
            if (hasVars[b])
                for (std::size_t j : basis.inDegree(basis.degree(b) + k))
                    for (const auto& [t, coef] : h.product(a, j).terms)
                        rows[t][var(b, j)] -= sign * coef;
            for (auto& [t, row] : rows)
                system.insert(std::move(row));
        }

    for (const auto& kv : system.kernel()) {
        Derivation theta;
        theta.degree = k;
        theta.images.assign(n, Element{});
        for (std::size_t i = 0; i < n; ++i) {
            if (!hasVars[i])
                continue;
            int q = basis.degree(i) + k;
            Element img;
            for (std::size_t t : basis.inDegree(q)) {
                auto it = kv.find(var(i, t));
                if (it != kv.end())
                    img.terms[t] = it->second;
            }
            theta.images[i] = h.normalize(img);
        }
        out.basis.push_back(std::move(theta));
    }
    return out;
}

bool isDerivation(const GradedAlgebra& h, const Derivation& theta) {
    const auto& basis = h.basis();
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b) {
            const Element& ab = h.product(a, b);
            if (ab.truncated)
                continue;
            Element lhs = theta.apply(ab);
            Element rhs = h.multiply(theta.images[a], h.basisElement(b));
            Element second = h.multiply(h.basisElement(a), theta.images[b]);
            if ((theta.degree * basis.degree(a)) % 2 != 0)
                rhs -= second;
            else
                rhs += second;
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

std::string formatDerivation(const GradedAlgebra& h, const Derivation& theta) {
    std::ostringstream os;
    os << "theta(deg " << theta.degree << "):";
    bool any = false;
    for (std::size_t i = 0; i < theta.images.size(); ++i) {
        if (theta.images[i].isZero())
            continue;
        os << (any ? ", " : " ") << h.basis().name(i) << " -> " << h.format(theta.images[i]);
        any = true;
    }
    if (!any)
        os << " 0";
    return os.str();
}

PropertyBResult propertyBCheck(const GradedAlgebra& h) {
    PropertyBResult out;
    out.report.command = "property-b";
    const int top = h.topDegree();
    bool complete = true;
    for (int k = -1; k >= -top; --k) {
        DerivationSpace space = derivationSpace(h, k, true);
        complete = complete && space.complete;
        std::string label = "derivations of degree " + std::to_string(k) + " vanishing on H^1";
        std::string detail = "dimension " + std::to_string(space.dim());
        if (space.dim() == 0) {
            out.report.add(label, Status::Pass, {}, detail);
            continue;
        }
        std::string witness = formatDerivation(h, space.basis.front());
        out.report.add(label, Status::Fail, witness, detail);
        if (!out.witness)
            out.witness = space.basis.front();
    }
    if (!complete)
        out.report.add("truncation", Status::Inconclusive, {},
                       "some Leibniz constraints involve products above the truncation degree");
    return out;
}

Report tensorPropertyBProbe(const GradedAlgebra& h, const GradedAlgebra& g) {
    Report rep;
    rep.command = "property-b-tensor";
    bool hOk = propertyBCheck(h).passed();
    bool gOk = propertyBCheck(g).passed();
    rep.add("first factor has Property B", hOk ? Status::Pass : Status::InputError, hOk ? "" : h.name());
    rep.add("second factor has Property B", gOk ? Status::Pass : Status::InputError, gOk ? "" : g.name());
    if (!hOk || !gOk)
        return rep;
    GradedAlgebra product = tensorProduct(h, g);
    PropertyBResult res = propertyBCheck(product);
    if (res.passed())
        rep.add("tensor product has Property B", Status::Pass);
    else
        rep.add("tensor product has Property B", res.report.verdict(),
                res.witness ? formatDerivation(product, *res.witness) : std::string{},
                "implementation inconsistency: Property B is closed under tensor products");
    return rep;
}

}  // namespace cokahler
