#include "cokahler/kahler.hpp"

#include <stdexcept>

namespace cokahler {

namespace {

/// Matrix of a -> f(a) from degree p to degree q.
template <class F>
LefschetzEntry entryFor(const GradedAlgebra& a, int p, int q, F&& f) {
    LefschetzEntry e;
    e.p = p;
    const auto& src = a.basis().inDegree(p);
    e.matrix = Matrix(a.dim(q), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Element img = f(a.basisElement(src[c]));
        e.inconclusive = e.inconclusive || img.truncated;
        Vector col = a.coordinates(img, q);
        for (std::size_t r = 0; r < col.size(); ++r)
            e.matrix(r, c) = col[r];
    }
    e.sourceDim = src.size();
    e.targetDim = a.dim(q);
    e.rank = e.matrix.rank();
    e.iso = e.sourceDim == e.targetDim && e.rank == e.sourceDim;
    return e;
}

void record(LefschetzReport& rep, const LefschetzEntry& e, const std::string& label) {
    std::string detail = std::to_string(e.targetDim) + "x" + std::to_string(e.sourceDim) + ", rank " +
                         std::to_string(e.rank);
    Status s = e.iso ? Status::Pass : (e.inconclusive ? Status::Inconclusive : Status::Fail);
    rep.checks.add(label, s, e.iso ? std::string{} : "p=" + std::to_string(e.p), detail);
}

void requireDegree(const Element& omega, int degree, const char* what) {
    if (!omega.isZero() && (!omega.degree || *omega.degree != degree))
        throw InputError(what, std::string(what) + " must be homogeneous of degree " + std::to_string(degree));
}

}  // namespace

const LefschetzEntry* LefschetzReport::firstFailure() const {
    for (const auto& e : entries)
        if (!e.iso)
            return &e;
    return nullptr;
}

LefschetzReport hardLefschetzCheck(const GradedAlgebra& h, const Element& omegaIn, int n) {
    Element omega = h.normalize(omegaIn);
    requireDegree(omega, 2, "omega");
    if (n < 0 || 2 * n > h.truncation())
        throw InputError("n", "degree 2n = " + std::to_string(2 * n) + " is outside the algebra's truncation " +
                                  std::to_string(h.truncation()));
    LefschetzReport rep;
    rep.n = n;
    rep.checks.command = "check-kahler";
    if (h.dim(2 * n) == 1)
        rep.checks.append(poincareDualityCheck(h, 2 * n), "Poincaré duality ");
    else
        rep.checks.add("Poincaré duality", Status::Fail, "degree " + std::to_string(2 * n),
                       "dim H^" + std::to_string(2 * n) + " = " + std::to_string(h.dim(2 * n)));
    for (int p = 0; p <= n; ++p) {
        Element lp = h.power(omega, n - p);
        auto e = entryFor(h, p, 2 * n - p, [&](const Element& a) { return h.multiply(lp, a); });
        record(rep, e, "L^" + std::to_string(n - p) + ": H^" + std::to_string(p) + " -> H^" + std::to_string(2 * n - p));
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

Report invariantKahlerCheck(const AlgebraPtr& hk, const GroupActionSpec& g, const Element& omegaIn, int n) {
    validateAction(g);
    Element omega = hk->normalize(omegaIn);
    requireDegree(omega, 2, "omega");
    if (!(g.generator.apply(omega) == omega))
        throw InputError("omega", "omega is not invariant under the action");

    Report rep;
    rep.command = "check-kahler";
    LefschetzReport ambient = hardLefschetzCheck(*hk, omega, n);
    if (ambient.passed())
        rep.add("ambient hard Lefschetz", Status::Pass);
    else
        rep.add("ambient hard Lefschetz", Status::InputError,
                ambient.checks.firstFailure() ? ambient.checks.firstFailure()->witness : std::string{},
                "input algebra is not cohomologically Kählerian");

    InvariantSubalgebra inv = invariantSubalgebra(hk, g);
    Subalgebra sub{inv.algebra, inv.inclusion};
    LefschetzReport invariant = hardLefschetzCheck(*inv.algebra, sub.restrict(omega), n);
    rep.append(invariant.checks, "invariant ");
    rep.betti = inv.algebra->betti();
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

GradedAlgebra circleAlgebra() {
    GradedBasis basis({{"1", 0}, {"eta", 1}}, 1);
    auto e = [](std::size_t i, int d) {
        Element x;
        x.terms[i] = 1;
        x.degree = d;
        return x;
    };
    std::vector<Element> products{e(0, 0), e(1, 1), e(1, 1), Element{}};
    return GradedAlgebra("∧(eta)", std::move(basis), std::move(products), true);
}

}  // namespace

CoKahlerModel::CoKahlerModel(AlgebraPtr base, const Element& omegaInBase, int n) : base_(std::move(base)), n_(n) {
    if (!base_->closed())
        throw InputError("model", "base algebra must be closed (known to vanish above its truncation)");
    if (n < 0 || base_->topDegree() > 2 * n)
        throw InputError("model", "base algebra has classes above degree 2n = " + std::to_string(2 * n));
    omegaBase_ = base_->normalize(omegaInBase);
    requireDegree(omegaBase_, 2, "omega");

    TensorProduct tp = tensorProductWithFactors(*base_, circleAlgebra());
    for (auto [i, j] : tp.factors)
        factors_.emplace_back(i, j == 1);
    baseIndex_.resize(base_->dim());
    for (std::size_t i = 0; i < base_->dim(); ++i)
        baseIndex_[i] = *tp.index(i, 0);
    eta_ = *tp.index(0, 1);
    algebra_ = std::make_shared<const GradedAlgebra>(std::move(tp.algebra));
    omega_ = embedBase(omegaBase_);

    const int top = 2 * n + 1;
    Element volume = algebra_->multiply(algebra_->power(omega_, n), eta());
    if (algebra_->dim(top) != 1 || volume.isZero())
        throw InputError("model", "omega^n * eta does not span the top degree " + std::to_string(top));
}

std::pair<std::size_t, bool> CoKahlerModel::factor(std::size_t i) const { return factors_.at(i); }

Element CoKahlerModel::embedBase(const Element& b) const {
    Element out;
    for (const auto& [i, c] : b.terms)
        out.terms[baseIndex_.at(i)] = c;
    return algebra_->normalize(out);
}

CoKahlerModel mappingTorusAlgebra(const AlgebraPtr& hk, const GroupActionSpec& g, const Element& omegaIn) {
    validateAction(g);
    if (!hk->closed())
        throw InputError("algebra", "mapping torus needs a closed (finite) algebra");
    int top = hk->topDegree();
    if (top % 2 != 0)
        throw InputError("algebra", "Kähler fiber must have even top degree, got " + std::to_string(top));
    Element omega = hk->normalize(omegaIn);
    requireDegree(omega, 2, "omega");
    if (!(g.generator.apply(omega) == omega))
        throw InputError("omega", "omega is not invariant under the action");
    InvariantSubalgebra inv = invariantSubalgebra(hk, g);
    Subalgebra sub{inv.algebra, inv.inclusion};
    return CoKahlerModel(inv.algebra, sub.restrict(omega), top / 2);
}

CoKahlerModel coKahlerModelFromSplit(const AlgebraPtr& m, const std::vector<Element>& baseGenerators,
                                     const Element& etaIn, const Element& omegaIn) {
    Element eta = m->normalize(etaIn);
    requireDegree(eta, 1, "eta");
    if (eta.isZero())
        throw InputError("eta", "eta must be nonzero");
    Subalgebra sub = generatedSubalgebra(m, baseGenerators, m->name() + "_basic");
    const GradedAlgebra& b = *sub.algebra;
    for (int p = 0; p <= m->truncation(); ++p) {
        std::vector<Vector> cols;
        for (std::size_t i : b.basis().inDegree(p))
            cols.push_back(m->coordinates(sub.inclusion.images[i], p));
        for (std::size_t i : b.basis().inDegree(p - 1))
            cols.push_back(m->coordinates(m->multiply(sub.inclusion.images[i], eta), p));
        Matrix mat = Matrix::fromColumns(cols, m->dim(p));
        if (cols.size() != m->dim(p) || mat.rank() != cols.size())
            throw InputError("eta", "algebra does not split as B ⊗ ∧(eta) in degree " + std::to_string(p));
    }
    if (!m->closed() || m->topDegree() % 2 == 0)
        throw InputError("algebra", "co-Kähler model must be closed with odd top degree");
    Element omegaB;
    try {
        omegaB = sub.restrict(m->normalize(omegaIn));
    } catch (const std::invalid_argument&) {
        throw InputError("omega", "omega must lie in the eta-free subalgebra");
    }
    return CoKahlerModel(sub.algebra, omegaB, (m->topDegree() - 1) / 2);
}

Report bettiRelationChecks(const CoKahlerModel& model) {
    Report rep;
    rep.command = "betti-relations";
    const int n = model.n();
    std::vector<int> b = model.algebra().betti();
    std::vector<int> bbar = model.base().betti();
    rep.betti = b;
    b.resize(static_cast<std::size_t>(2 * n + 2), 0);
    bbar.resize(static_cast<std::size_t>(2 * n + 2), 0);
    auto at = [](const std::vector<int>& v, int i) { return i < 0 ? 0 : v[static_cast<std::size_t>(i)]; };

    std::string wang;
    for (int s = 0; s <= 2 * n + 1 && wang.empty(); ++s)
        if (at(b, s) != at(bbar, s) + at(bbar, s - 1))
            wang = "s=" + std::to_string(s);
    rep.add("b_s = bbar_s + bbar_{s-1}", wang.empty(), wang);

    std::string mono;
    for (int i = 1; i < n && mono.empty(); ++i)
        if (at(b, i) > at(b, i + 1))
            mono = "b_" + std::to_string(i) + " > b_" + std::to_string(i + 1);
    rep.add("b_1 <= ... <= b_n", mono.empty(), mono);
    rep.add("b_n = b_{n+1}", at(b, n) == at(b, n + 1),
            at(b, n) == at(b, n + 1) ? std::string{} : std::to_string(at(b, n)) + " != " + std::to_string(at(b, n + 1)));

    std::string even, nonneg;
    for (int i = 0; i <= n; ++i) {
        int diff = at(b, 2 * i + 1) - at(b, 2 * i);
        if (diff % 2 != 0 && even.empty())
            even = "i=" + std::to_string(i) + " difference " + std::to_string(diff);
        if (i <= n / 2 && diff < 0 && nonneg.empty())
            nonneg = "i=" + std::to_string(i) + " difference " + std::to_string(diff);
    }
    rep.add("b_{2i+1} - b_{2i} even", even.empty(), even);
    rep.add("b_{2i+1} - b_{2i} >= 0 for i <= n/2", nonneg.empty(), nonneg);
    return rep;
}

Element contractXi(const CoKahlerModel& model, const Element& x) {
    Element out;
    const GradedAlgebra& b = model.base();
    for (const auto& [k, c] : x.terms) {
        auto [i, hasEta] = model.factor(k);
        if (!hasEta)
            continue;
        Element term;
        term.terms[i] = b.basis().degree(i) % 2 != 0 ? Scalar(-c) : c;
        out += model.embedBase(term);
    }
    return model.algebra().normalize(out);
}

std::pair<Element, Element> etaSplit(const CoKahlerModel& model, const Element& xIn) {
    const GradedAlgebra& a = model.algebra();
    Element x = a.normalize(xIn);
    Element x2 = a.multiply(model.eta(), contractXi(model, x));
    Element x1 = x - x2;
    return {a.normalize(x1), a.normalize(x2)};
}

LefschetzEntry cokahlerLefschetz(const CoKahlerModel& model, int p) {
    const int n = model.n();
    if (p < 0 || p > n)
        throw InputError("p", "p must satisfy 0 <= p <= n = " + std::to_string(n));
    const GradedAlgebra& a = model.algebra();
    Element first = a.power(model.omega(), n - p + 1);
    Element second = a.multiply(a.power(model.omega(), n - p), model.eta());
    return entryFor(a, p, 2 * n + 1 - p, [&](const Element& x) {
        return a.multiply(first, contractXi(model, x)) + a.multiply(second, x);
    });
}

LefschetzReport cokahlerLefschetzAll(const CoKahlerModel& model) {
    LefschetzReport rep;
    rep.n = model.n();
    rep.checks.command = "check-cokahler-lefschetz";
    for (int p = 0; p <= model.n(); ++p) {
        auto e = cokahlerLefschetz(model, p);
        record(rep, e, "L^" + std::to_string(model.n() - p) + ": H^" + std::to_string(p) + " -> H^" +
                           std::to_string(2 * model.n() + 1 - p));
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace cokahler
