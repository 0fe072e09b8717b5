#include "cokahler/toral_rank.hpp"

#include <sstream>
#include <stdexcept>

namespace cokahler {

namespace {

bool nextCombination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Element productOf(const GradedAlgebra& h, const std::vector<Element>& xs) {
    Element p = h.unit();
    for (const auto& x : xs)
        p = h.multiply(p, x);
    return p;
}

// Global-coordinate sparse vector of an element.
SparseVector flatten(const Element& x) {
    SparseVector v;
    for (const auto& [i, c] : x.terms)
        v[i] = c;
    return v;
}

}  // namespace

TorusCertificate maxExteriorRankOn(const GradedAlgebra& h, const std::vector<Element>& degreeOne) {
    // Independent subfamily, in the given order.
    std::vector<Element> span;
    SparseEchelon echelon(h.dim());
    for (const auto& x : degreeOne) {
        Element y = h.normalize(x);
        if (y.isZero())
            continue;
        if (y.degree != 1)
            throw std::invalid_argument("maxExteriorRankOn: element is not of degree 1");
        if (echelon.insert(flatten(y)))
            span.push_back(y);
    }

    TorusCertificate out;
    out.product = h.unit();
    const std::size_t limit = std::min<std::size_t>(span.size(), h.truncation());
    for (std::size_t k = limit; k >= 1; --k) {
        std::vector<std::size_t> combo(k);
        for (std::size_t i = 0; i < k; ++i)
            combo[i] = i;
        do {
            std::vector<Element> chosen;
            for (std::size_t i : combo)
                chosen.push_back(span[i]);
            Element p = productOf(h, chosen);
            if (!p.isZero() && !p.truncated) {
                out.r = static_cast<int>(k);
                out.witnesses = std::move(chosen);
                out.product = std::move(p);
                return out;
            }
        } while (nextCombination(combo, span.size()));
    }
    return out;
}

TorusCertificate maxExteriorRank(const GradedAlgebra& h, const std::optional<Element>& preferred) {
    std::vector<Element> candidates;
    if (preferred)
        candidates.push_back(*preferred);
    for (std::size_t i : h.basis().inDegree(1))
        candidates.push_back(h.basisElement(i));
    return maxExteriorRankOn(h, candidates);
}

bool verifyCertificate(const GradedAlgebra& h, const TorusCertificate& c) {
    const std::size_t r = c.witnesses.size();
    if (static_cast<int>(r) != c.r || r >= 8 * sizeof(std::size_t))
        return false;
    if (!(productOf(h, c.witnesses) == c.product) || c.product.isZero())
        return false;
    SparseEchelon echelon(h.dim());
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<Element> chosen;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i))
                chosen.push_back(c.witnesses[i]);
        if (!echelon.insert(flatten(productOf(h, chosen))))
            return false;
    }
    return true;
}

int alphaTilde1(const GradedAlgebra& hk, const GroupActionSpec& g) {
    std::vector<Element> fixed;
    for (const auto& v : averagingProjector(g, 1).image())
        fixed.push_back(hk.fromCoordinates(v, 1));
    return maxExteriorRankOn(hk, fixed).r;
}

int toralRankBound(const GradedAlgebra& hk, const GroupActionSpec& g) { return alphaTilde1(hk, g) + 1; }

Report trcCheck(const GradedAlgebra& h, const std::optional<Element>& preferred) {
    Report rep;
    rep.command = "trc";
    TorusCertificate c = maxExteriorRank(h, preferred);
    std::ostringstream witness;
    for (std::size_t i = 0; i < c.witnesses.size(); ++i)
        witness << (i ? ", " : "") << compactName(h, c.witnesses[i]);
    rep.add("exterior certificate r=" + std::to_string(c.r), verifyCertificate(h, c), witness.str(),
            "spans " + std::to_string(std::size_t{1} << c.r) + " independent products");
    const std::size_t total = h.dim();
    const std::size_t bound = std::size_t{1} << c.r;
    rep.add("dim H >= 2^r", total >= bound, {},
            "dim " + std::to_string(total) + " >= " + std::to_string(bound) + ", slack " +
                std::to_string(total - std::min(total, bound)));
    return rep;
}

}  // namespace cokahler
