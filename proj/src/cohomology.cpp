#include "cokahler/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace cokahler {


CohomologyRing cohomology(std::shared_ptr<const ChainComplexAlgebra> c) {
    const GradedAlgebra& a = c->algebra();
    const int top = a.closed() ? a.truncation() : a.truncation() - 1;

    CohomologyRing ring;
    ring.source_ = c;
    if (!a.closed())
        ring.dropped_.push_back(a.truncation());

    std::vector<BasisElement> elements;
    std::vector<std::vector<Vector>> boundaries;
    for (int p = 0; p <= std::max(top, 0); ++p) {
        std::vector<Vector> image = p > 0 ? c->differentialMatrix(p - 1).image() : std::vector<Vector>{};
        std::vector<Vector> cycles = c->differentialMatrix(p).kernel();
        if (p == 0 && top < 0)
            cycles = {Vector{Scalar(1)}};
        SparseEchelon span(a.dim(p));
        for (const auto& b : image)
            span.insert(toSparse(b));
        std::vector<Vector> reps;
        for (const auto& z : cycles)
            if (span.insert(toSparse(z)))
                reps.push_back(z);
        std::vector<Vector> columns = reps;
        columns.insert(columns.end(), image.begin(), image.end());
        ring.solvers_.push_back(Matrix::fromColumns(columns, a.dim(p)));
        ring.classCount_.push_back(reps.size());
        for (const auto& r : reps) {
            Element rep = a.fromCoordinates(r, p);
            // Scale so the leading coefficient is 1, giving tidier names.
            if (!rep.isZero())
                rep *= 1 / rep.terms.begin()->second;
            elements.push_back({compactName(a, rep), p});
            ring.representatives_.push_back(rep);
        }
        boundaries.push_back(std::move(image));
    }
    // Representatives were rescaled: rebuild the solvers from them.
    for (int p = 0; p < static_cast<int>(ring.solvers_.size()); ++p) {
        std::vector<Vector> columns;
        for (const auto& rep : ring.representatives_)
            if (a.basis().degree(rep.terms.begin()->first) == p)
                columns.push_back(a.coordinates(rep, p));
        for (const auto& b : boundaries[static_cast<std::size_t>(p)])
            columns.push_back(b);
        ring.solvers_[static_cast<std::size_t>(p)] = Matrix::fromColumns(columns, a.dim(p));
    }

    const int truncation = std::max(top, 0);
    const std::size_t n = elements.size();
    GradedBasis basis(std::move(elements), truncation);
    auto classCoordinates = [&](const Element& x, int p) -> Element {
        Vector v = a.coordinates(x, p);
        auto sol = ring.solvers_.at(static_cast<std::size_t>(p)).solve(v);
        if (!sol)
            throw std::logic_error("cohomology: product of cocycles is not a cocycle");
        Element out;
        std::size_t k = ring.classCount_[static_cast<std::size_t>(p)];
        const auto& idx = basis.inDegree(p);
        for (std::size_t i = 0; i < k; ++i)
            if ((*sol)[i] != 0)
                out.terms[idx[i]] = (*sol)[i];
        return out;
    };

    std::vector<Element> products(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int p = basis.degree(i) + basis.degree(j);
            if (p > truncation)
                continue;
            Element prod = a.multiply(ring.representatives_[i], ring.representatives_[j]);
            Element cls = classCoordinates(prod, p);
            cls.truncated = prod.truncated;
            products[i * n + j] = std::move(cls);
        }

    // rep_i * (boundary) must again be a boundary
    for (std::size_t i = 0; i < n && ring.wellDefinedWitness_.empty(); ++i)
        for (int q = 1; q <= truncation && ring.wellDefinedWitness_.empty(); ++q) {
            int p = basis.degree(i) + q;
            if (p > truncation)
                break;
            for (const auto& b : boundaries[static_cast<std::size_t>(q)]) {
                Element prod = a.multiply(ring.representatives_[i], a.fromCoordinates(b, q));
                if (!classCoordinates(prod, p).isZero()) {
                    ring.wellDefinedWitness_ = basis.name(i) + " * " + a.format(a.fromCoordinates(b, q));
                    break;
                }
            }
        }

    std::string name = "H(" + a.name() + ")";
    ring.algebra_ = std::make_shared<const GradedAlgebra>(name, std::move(basis), std::move(products), a.closed());
    return ring;
}

Element CohomologyRing::classOf(const Element& cocycle) const {
    const GradedAlgebra& a = source_->algebra();
    Element x = a.normalize(cocycle);
    if (!source_->differential(x).isZero())
        throw std::invalid_argument("classOf: " + a.format(x) + " is not a cocycle");
    Element out;
    std::map<int, bool> seen;
    for (const auto& [i, c] : x.terms)
        seen[a.basis().degree(i)] = true;
    for (const auto& [p, unused] : seen) {
        if (p >= static_cast<int>(solvers_.size()))
            throw std::invalid_argument("classOf: degree " + std::to_string(p) + " is beyond the reliable range");
        auto sol = solvers_[static_cast<std::size_t>(p)].solve(a.coordinates(x, p));
        if (!sol)
            throw std::logic_error("classOf: cocycle outside Z^p");
        const auto& idx = algebra_->basis().inDegree(p);
        for (std::size_t k = 0; k < classCount_[static_cast<std::size_t>(p)]; ++k)
            if ((*sol)[k] != 0)
                out.terms[idx[k]] = (*sol)[k];
    }
    return algebra_->normalize(out);
}

bool CohomologyRing::isExact(const Element& x) const {
    return source_->differential(x).isZero() && classOf(x).isZero();
}

// ---------------------------------------------------------------------------

GroupActionSpec GroupActionSpec::trivial(const AlgebraPtr& a) {
    GroupActionSpec g;
    g.order = 1;
    g.generator.source = a;
    g.generator.target = a;
    for (std::size_t i = 0; i < a->dim(); ++i)
        g.generator.images.push_back(a->basisElement(i));
    return g;
}

void validateAction(const GroupActionSpec& g, const ChainComplexAlgebra* d) {
    if (g.order < 1)
        throw InputError("action.order", "order must be a positive integer");
    const AlgebraMap& f = g.generator;
    if (!f.source || f.source != f.target)
        throw InputError("action", "automorphism must map the algebra to itself");
    Report rep = f.verify(d, d);
    if (const CheckEntry* bad = rep.firstFailure())
        throw InputError("action", "not an algebra automorphism (" + bad->name + " fails at " + bad->witness + ")");
    const GradedAlgebra& a = *f.source;

    auto iterate = [&](int k, std::size_t i) {
        Element x = a.basisElement(i);
        for (int s = 0; s < k; ++s)
            x = f.apply(x);
        return x;
    };
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!(iterate(g.order, i) == a.basisElement(i)))
            throw InputError("action", "order mismatch: g^" + std::to_string(g.order) + " moves basis element '" +
                                           a.basis().name(i) + "'");
    for (int k = 1; k < g.order; ++k) {
        if (g.order % k != 0)
            continue;
        bool identity = true;
        for (std::size_t i = 0; i < a.dim() && identity; ++i)
            identity = iterate(k, i) == a.basisElement(i);
        if (identity)
            throw InputError("action", "order mismatch: automorphism already has order " + std::to_string(k) +
                                           ", declared " + std::to_string(g.order));
    }
}

GroupActionSpec inducedAction(const CohomologyRing& h, const GroupActionSpec& g) {
    GroupActionSpec out;
    out.order = g.order;
    out.generator.source = h.algebraPtr();
    out.generator.target = h.algebraPtr();
    for (const auto& rep : h.representatives())
        out.generator.images.push_back(h.classOf(g.generator.apply(rep)));
    return out;
}

Matrix averagingProjector(const GroupActionSpec& g, int p) {
    Matrix gp = g.generator.matrix(p);
    std::size_t n = gp.rows();
    Matrix sum(n, n), power = Matrix::identity(n);
    for (int i = 0; i < g.order; ++i) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                sum(r, c) += power(r, c);
        power = gp * power;
    }
    Scalar inv = Scalar(1) / g.order;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            sum(r, c) *= inv;
    return sum;
}

InvariantSubalgebra invariantSubalgebra(const AlgebraPtr& h, const GroupActionSpec& g) {
    validateAction(g);
    const GradedAlgebra& a = *h;
    std::vector<std::vector<Vector>> spans;
    for (int p = 0; p <= a.truncation(); ++p) {
        Matrix proj = averagingProjector(g, p);
        auto image = proj.image();
        // Fixed space ker(g - id) must agree with the projector image.
        Matrix gp = g.generator.matrix(p);
        auto fixed = (gp - Matrix::identity(gp.rows())).kernel();
        if (fixed.size() != image.size())
            throw std::logic_error("invariantSubalgebra: averaging image and fixed space differ in degree " +
                                   std::to_string(p));
        for (const auto& v : image)
            if (!(gp * v == v))
                throw std::logic_error("invariantSubalgebra: averaged vector is not fixed");
        spans.push_back(std::move(image));
    }
    Subalgebra sub = subalgebraFromSpans(h, spans, a.name() + "^G");
    return {sub.algebra, sub.inclusion};
}

std::vector<int> bettiNumbers(const GradedAlgebra& h) { return h.betti(); }

Report poincareDualityCheck(const GradedAlgebra& h, int topDegree) {
    if (topDegree < 0 || topDegree > h.truncation() || h.dim(topDegree) != 1)
        throw InputError("n_top", "Poincaré duality needs a one-dimensional top degree " + std::to_string(topDegree));
    Report rep;
    rep.command = "poincare-duality";
    const std::size_t topIndex = h.basis().inDegree(topDegree).front();
    for (int p = 0; p <= topDegree; ++p) {
        const auto& rows = h.basis().inDegree(p);
        const auto& cols = h.basis().inDegree(topDegree - p);
        Matrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                m(r, c) = h.product(rows[r], cols[c]).coefficient(topIndex);
        std::size_t rank = m.rank();
        std::size_t need = std::max(rows.size(), cols.size());
        bool ok = rows.size() == cols.size() && rank == need;
        rep.add("pairing p=" + std::to_string(p), ok, ok ? std::string{} : "degree " + std::to_string(p),
                "rank " + std::to_string(rank) + ", deficit " + std::to_string(need - rank));
    }
    return rep;
}

}  // namespace cokahler
