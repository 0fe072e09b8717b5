#include "cokahler/sullivan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cokahler {

namespace {

void addTo(FreePolynomial& p, const Monomial& m, const Scalar& c) {
    if (c == 0)
        return;
    Scalar& slot = p[m];
    slot += c;
    if (slot == 0)
        p.erase(m);
}

FreePolynomial cleaned(const FreePolynomial& p) {
    FreePolynomial out;
    for (const auto& [m, c] : p)
        addTo(out, m, c);
    return out;
}

// Generators of degree <= n, with differentials re-indexed.
SullivanAlgebra restrictTo(const SullivanAlgebra& s, int n) {
    SullivanAlgebra out;
    out.name = s.name;
    out.truncation = n;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < s.generators.size(); ++i)
        if (s.generators[i].degree <= n)
            keep.push_back(i);
    for (std::size_t i : keep) {
        out.generators.push_back(s.generators[i]);
        FreePolynomial d;
        if (i < s.differential.size())
            for (const auto& [m, c] : s.differential[i]) {
                Monomial r(keep.size(), 0);
                for (std::size_t j = 0; j < m.size(); ++j) {
                    if (m[j] == 0)
                        continue;
                    auto it = std::find(keep.begin(), keep.end(), j);
                    if (it == keep.end())
                        throw std::invalid_argument("differential involves a generator of too high degree");
                    r[static_cast<std::size_t>(it - keep.begin())] = m[j];
                }
                addTo(d, r, c);
            }
        out.differential.push_back(std::move(d));
    }
    return out;
}

struct Stage {
    PresentedAlgebra model;
    CohomologyRing cohomology;
};

Stage buildStage(const SullivanAlgebra& s, int truncation) {
    Stage st{buildFromPresentation(s.presentation(truncation)), {}};
    st.cohomology = cohomology(st.model.cdga);
    return st;
}

Element evaluateElement(const PresentedAlgebra& pa, const Element& x, const std::vector<Element>& images,
                        const GradedAlgebra& target) {
    FreePolynomial p;
    for (const auto& [i, c] : x.terms)
        addTo(p, pa.basisMonomials.at(i), c);
    return pa.evaluateWith(p, images, target);
}

FreePolynomial toFree(const PresentedAlgebra& pa, const Element& x) {
    FreePolynomial p;
    for (const auto& [i, c] : x.terms)
        addTo(p, pa.basisMonomials.at(i), c);
    return p;
}

// H^p(model) -> H^p, columns indexed by the model's cohomology classes.
Matrix inducedMatrix(const Stage& st, const std::vector<Element>& images, const GradedAlgebra& h, int p,
                     bool& flagged) {
    std::vector<Vector> columns;
    for (std::size_t c : st.cohomology.algebra().basis().inDegree(p)) {
        Element phi = evaluateElement(st.model, st.cohomology.representative(c), images, h);
        flagged = flagged || phi.truncated;
        columns.push_back(h.coordinates(phi, p));
    }
    return Matrix::fromColumns(columns, h.dim(p));
}

std::string formatVector(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 1; i < v.size(); ++i)
        os << (i > 1 ? "," : "") << v[i];
    os << ")";
    return os.str();
}

FreePolynomial applyMap(const FreeAlgebra& source, const FreeAlgebra& target, const FreePolynomial& p,
                        const std::vector<FreePolynomial>& images) {
    FreePolynomial out;
    for (const auto& [m, c] : p) {
        FreePolynomial term{{target.one(), Scalar(1)}};
        for (std::size_t j = 0; j < source.size(); ++j)
            for (int e = 0; e < m[j]; ++e)
                term = target.multiply(term, images.at(j));
        for (const auto& [tm, tc] : term)
            addTo(out, tm, c * tc);
    }
    return out;
}

struct DegreeSpace {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> column;
    std::vector<std::size_t> generatorColumns;  // columns of the generators of this degree

    Vector coordinates(const FreePolynomial& p) const {
        Vector v(monomials.size());
        for (const auto& [m, c] : p)
            v[column.at(m)] = c;
        return v;
    }
    FreePolynomial polynomial(const Vector& v) const {
        FreePolynomial p;
        for (std::size_t i = 0; i < v.size(); ++i)
            addTo(p, monomials[i], v[i]);
        return p;
    }
    Vector linearPart(const Vector& v) const {
        Vector out;
        for (std::size_t c : generatorColumns)
            out.push_back(v[c]);
        return out;
    }
};

DegreeSpace degreeSpace(const FreeAlgebra& f, int n) {
    DegreeSpace s;
    s.monomials = f.monomials(n);
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        s.column.emplace(s.monomials[i], i);
    for (std::size_t g = 0; g < f.size(); ++g)
        if (f.generators()[g].degree == n)
            s.generatorColumns.push_back(s.column.at(f.generator(g)));
    return s;
}

}  // namespace

Presentation SullivanAlgebra::presentation(int degree) const {
    Presentation p;
    p.name = name;
    p.generators = generators;
    p.differential = differential;
    p.differential.resize(generators.size());
    p.truncation = degree;
    return p;
}

std::size_t SullivanAlgebra::generatorCount(int degree) const {
    return static_cast<std::size_t>(
        std::count_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.degree == degree; }));
}

std::string SullivanAlgebra::format() const {
    FreeAlgebra f = free();
    std::ostringstream os;
    os << "∧(";
    for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? ", " : "") << generators[i].name << "[" << generators[i].degree << "]";
    os << ")";
    bool any = false;
    for (std::size_t i = 0; i < generators.size() && i < differential.size(); ++i) {
        if (differential[i].empty())
            continue;
        os << (any ? ", " : "; ") << "d " << generators[i].name << " = " << f.format(differential[i]);
        any = true;
    }
    if (!any)
        os << ", d = 0";
    return os.str();
}

Report checkSullivan(const SullivanAlgebra& s) {
    Report rep;
    rep.command = "check-sullivan";
    FreeAlgebra f;
    try {
        f = s.free();
    } catch (const InputError& e) {
        rep.add("generators", Status::InputError, e.where(), e.what());
        return rep;
    }
    if (s.differential.size() > s.generators.size()) {
        rep.add("differential", Status::InputError, {}, "more entries than generators");
        return rep;
    }
    std::vector<FreePolynomial> d = s.differential;
    d.resize(s.generators.size());

    std::string nonMinimal, disordered, wrongDegree, nonClosed;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string& name = s.generators[i].name;
        FreePolynomial di = cleaned(d[i]);
        if (di.empty())
            continue;
        std::optional<int> deg;
        try {
            deg = f.degree(di);
        } catch (const InputError&) {
            deg = -1;
        }
        if (deg != s.generators[i].degree + 1 && wrongDegree.empty())
            wrongDegree = name;
        if (!FreeAlgebra::isDecomposable(di) && nonMinimal.empty())
            nonMinimal = "d " + name + " = " + f.format(di);
        for (const auto& [m, c] : di)
            for (std::size_t j = i; j < m.size(); ++j)
                if (m[j] != 0 && disordered.empty())
                    disordered = name;
        if (!cleaned(f.differential(d, di)).empty() && nonClosed.empty())
            nonClosed = name;
    }
    rep.add("differential raises degree by one", wrongDegree.empty(), wrongDegree);
    rep.add("minimal: d(V) has no linear terms", nonMinimal.empty(), nonMinimal);
    rep.add("well-ordered: d only involves earlier generators", disordered.empty(), disordered);
    rep.add("d^2 = 0", nonClosed.empty(), nonClosed);
    return rep;
}

ModelMap minimalModelOfFormal(const AlgebraPtr& hp, int n, const MinimalModelOptions& options) {
    const GradedAlgebra& h = *hp;
    if (n < 1)
        throw InputError("max-degree", "must be at least 1");
    if (!h.closed() && n > h.truncation())
        throw InputError("max-degree", "degree " + std::to_string(n) + " exceeds the truncation degree " +
                                           std::to_string(h.truncation()) + " of " + h.name());
    auto reliable = [&](int p) { return h.closed() || p <= h.truncation(); };

    std::optional<std::mt19937_64> rng;
    if (options.seed)
        rng.emplace(*options.seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(*rng); };

    ModelMap out;
    out.target = hp;
    SullivanAlgebra& s = out.source;
    s.name = "M(" + h.name() + ")";
    s.truncation = n;
    std::vector<std::size_t> perDegree(static_cast<std::size_t>(n) + 1, 0);
    auto addGenerator = [&](int deg, FreePolynomial d, Element image) {
        std::string name = "v" + std::to_string(deg) + "_" + std::to_string(perDegree[static_cast<std::size_t>(deg)]++);
        s.generators.push_back({name, deg});
        s.differential.push_back(std::move(d));
        for (auto& poly : s.differential) {
            FreePolynomial widened;
            for (const auto& [m, c] : poly) {
                Monomial w = m;
                w.resize(s.generators.size(), 0);
                widened[w] = c;
            }
            poly = std::move(widened);
        }
        out.images.push_back(std::move(image));
    };

    for (int deg = 1; deg <= n; ++deg) {
        // Hit the cokernel of H^deg(model) -> H^deg with cocycle generators.
        {
            Stage st = buildStage(s, deg + 2);
            bool flagged = false;
            Matrix phi = inducedMatrix(st, out.images, h, deg, flagged);
            SparseEchelon span(h.dim(deg));
            for (const auto& v : phi.image())
                span.insert(toSparse(v));
            std::vector<std::size_t> order(h.dim(deg));
            std::iota(order.begin(), order.end(), 0);
            if (rng)
                std::shuffle(order.begin(), order.end(), *rng);
            for (std::size_t j : order) {
                if (!span.insert(SparseVector{{j, Scalar(1)}}))
                    continue;
                Scalar scale = 1;
                if (rng) {
                    int k = pick(1, 3);
                    scale = pick(0, 1) ? k : -k;
                }
                addGenerator(deg, {}, scale * h.basisElement(h.basis().inDegree(deg)[j]));
            }
        }
        // Kill the kernel of H^{deg+1}(model) -> H^{deg+1}.
        if (!reliable(deg + 1))
            continue;
        for (int round = 0;; ++round) {
            Stage st = buildStage(s, deg + 2);
            bool flagged = false;
            Matrix phi = inducedMatrix(st, out.images, h, deg + 1, flagged);
            std::vector<Vector> kernel = phi.kernel();
            if (kernel.empty())
                break;
            const auto& classes = st.cohomology.algebra().basis().inDegree(deg + 1);
            auto cocycle = [&](const Vector& c) {
                Element z;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (c[j] != 0)
                        z += c[j] * st.cohomology.representative(classes[j]);
                return z;
            };
            if (round >= options.maxRounds ||
                perDegree[static_cast<std::size_t>(deg)] + kernel.size() > options.maxGeneratorsPerDegree) {
                std::ostringstream os;
                os << "degree-" << deg << " generators do not converge (" << perDegree[static_cast<std::size_t>(deg)]
                   << " generators after " << round << " rounds); classes still in the kernel:";
                for (std::size_t k = 0; k < kernel.size() && k < 6; ++k)
                    os << (k ? ", " : " ") << st.model.free.format(toFree(st.model, cocycle(kernel[k])));
                if (kernel.size() > 6)
                    os << ", ...";
                throw InputError("minimal model", os.str());
            }
            if (rng) {
                std::shuffle(kernel.begin(), kernel.end(), *rng);
                for (std::size_t k = 0; k < kernel.size(); ++k) {
                    Vector v = kernel[k];
                    if (pick(0, 1))
                        for (auto& x : v)
                            x = -x;
                    for (std::size_t l = k + 1; l < kernel.size(); ++l)
                        if (pick(0, 1))
                            for (std::size_t j = 0; j < v.size(); ++j)
                                v[j] += kernel[l][j];
                    kernel[k] = std::move(v);
                }
            }
            std::vector<FreePolynomial> killers;
            for (const auto& c : kernel)
                killers.push_back(toFree(st.model, cocycle(c)));
            for (auto& z : killers)
                addGenerator(deg, std::move(z), Element{});
        }
    }
    return out;
}

Report verifyQuasiIso(const ModelMap& m, int n) {
    Report rep;
    rep.command = "verify-quasi-iso";
    rep.append(checkSullivan(m.source), "model ");
    if (!rep.passed())
        return rep;
    if (m.images.size() != m.source.generators.size()) {
        rep.add("images", Status::InputError, {}, "one image per generator required");
        return rep;
    }
    const GradedAlgebra& h = *m.target;
    SullivanAlgebra s = m.source;
    std::vector<Element> images;
    {
        std::vector<Element> kept;
        for (std::size_t i = 0; i < s.generators.size(); ++i)
            if (s.generators[i].degree <= n)
                kept.push_back(h.normalize(m.images[i]));
        s = restrictTo(s, n);
        images = std::move(kept);
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i].degree && *images[i].degree != s.generators[i].degree) {
            rep.add("images preserve degree", Status::Fail, s.generators[i].name);
            return rep;
        }

    Stage st = buildStage(s, n);
    std::string notChain;
    bool chainFlagged = false;
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        Element v = st.model.evaluateWith(s.differential[i], images, h);
        chainFlagged = chainFlagged || v.truncated;
        if (!v.isZero() && notChain.empty())
            notChain = s.generators[i].name;
    }
    if (!notChain.empty() || !chainFlagged)
        rep.add("chain map: image of d vanishes", notChain.empty(), notChain);
    else
        rep.add("chain map: image of d vanishes", Status::Inconclusive, {}, "products above the target truncation");

    const GradedAlgebra& hm = st.cohomology.algebra();
    for (int p = 0; p < n; ++p) {
        std::string label = "H^" + std::to_string(p) + " iso";
        if (!h.closed() && p > h.truncation()) {
            rep.add(label, Status::Inconclusive, {}, "above the target truncation");
            continue;
        }
        bool flagged = false;
        Matrix phi = inducedMatrix(st, images, h, p, flagged);
        std::size_t r = phi.rank();
        std::string detail = "dim " + std::to_string(phi.cols()) + " -> " + std::to_string(phi.rows()) + ", rank " +
                             std::to_string(r);
        if (p == n - 1)
            detail += "; degree " + std::to_string(n) + " not checked (truncation-unreliable)";
        if (r == phi.cols() && r == phi.rows()) {
            rep.add(label, flagged ? Status::Inconclusive : Status::Pass, {}, detail);
            continue;
        }
        std::string witness;
        if (r < phi.cols()) {
            Element k = hm.fromCoordinates(phi.kernel().front(), p);
            witness = "class " + hm.format(k) + " maps to 0";
        } else {
            SparseEchelon span(phi.rows());
            for (const auto& v : phi.image())
                span.insert(toSparse(v));
            for (std::size_t j = 0; j < phi.rows(); ++j)
                if (span.insert(SparseVector{{j, Scalar(1)}})) {
                    witness = "class " + h.basis().name(h.basis().inDegree(p)[j]) + " not hit";
                    break;
                }
        }
        rep.add(label, Status::Fail, witness, detail);
    }
    return rep;
}

std::string ModelFingerprint::format() const {
    return "V-dims " + formatVector(generatorDims) + ", quadratic ranks " + formatVector(quadraticRanks);
}

ModelFingerprint modelFingerprint(const SullivanAlgebra& s0, int n) {
    SullivanAlgebra s = restrictTo(s0, n);
    FreeAlgebra f = s.free();
    ModelFingerprint fp;
    fp.generatorDims.assign(static_cast<std::size_t>(n) + 1, 0);
    fp.quadraticRanks.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int deg = 1; deg <= n; ++deg) {
        DegreeSpace target = degreeSpace(f, deg + 1);
        SparseEchelon quadratic(target.monomials.size());
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
            if (s.generators[i].degree != deg)
                continue;
            ++fp.generatorDims[static_cast<std::size_t>(deg)];
            SparseVector row;
            for (const auto& [m, c] : s.differential[i])
                if (FreeAlgebra::wordLength(m) == 2)
                    row[target.column.at(m)] = c;
            quadratic.insert(std::move(row));
        }
        fp.quadraticRanks[static_cast<std::size_t>(deg)] = quadratic.rank();
    }
    return fp;
}

IsoSearchResult findModelIsomorphism(const SullivanAlgebra& a0, const SullivanAlgebra& b0, int n,
                                     std::size_t nodeBudget) {
    IsoSearchResult result;
    ModelFingerprint fa = modelFingerprint(a0, n);
    ModelFingerprint fb = modelFingerprint(b0, n);
    if (!(fa == fb)) {
        result.status = Status::Fail;
        result.detail = "fingerprints differ: " + fa.format() + " vs " + fb.format();
        return result;
    }
    SullivanAlgebra a = restrictTo(a0, n);
    SullivanAlgebra b = restrictTo(b0, n);
    FreeAlgebra fA = a.free();
    FreeAlgebra fB = b.free();

    std::vector<DegreeSpace> spaces;
    std::vector<Matrix> dMatrix;
    std::vector<std::vector<Vector>> kernels;
    for (int q = 0; q <= n + 1; ++q)
        spaces.push_back(degreeSpace(fB, q));
    for (int q = 0; q <= n; ++q) {
        const DegreeSpace& src = spaces[static_cast<std::size_t>(q)];
        const DegreeSpace& dst = spaces[static_cast<std::size_t>(q) + 1];
        std::vector<Vector> columns;
        for (const auto& m : src.monomials)
            columns.push_back(dst.coordinates(fB.differential(b.differential, m)));
        dMatrix.push_back(Matrix::fromColumns(columns, dst.monomials.size()));
        kernels.push_back(dMatrix.back().kernel());
    }

    std::vector<std::size_t> order(a.generators.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.generators[x].degree < a.generators[y].degree; });

    std::vector<FreePolynomial> images(a.generators.size());
    std::vector<SparseEchelon> linear;
    for (int q = 0; q <= n; ++q)
        linear.emplace_back(spaces[static_cast<std::size_t>(q)].generatorColumns.size());
    std::size_t nodes = 0;
    bool exhausted = false;

    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size())
            return true;
        const std::size_t i = order[pos];
        const int deg = a.generators[i].degree;
        const DegreeSpace& space = spaces[static_cast<std::size_t>(deg)];
        FreePolynomial rhs = applyMap(fA, fB, a.differential[i], images);
        std::optional<Vector> x0 =
            dMatrix[static_cast<std::size_t>(deg)].solve(spaces[static_cast<std::size_t>(deg) + 1].coordinates(rhs));
        if (!x0)
            return false;
        const auto& ker = kernels[static_cast<std::size_t>(deg)];
        std::vector<Vector> shifts{Vector(space.monomials.size())};
        auto combine = [&](const Vector& u, const Vector& v, int sign) {
            Vector w = u;
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] += sign * v[j];
            return w;
        };
        for (const auto& k : ker)
            shifts.push_back(k);
        for (const auto& k : ker)
            shifts.push_back(combine(Vector(k.size()), k, -1));
        for (std::size_t p = 0; p < ker.size() && shifts.size() < 256; ++p)
            for (std::size_t q = p + 1; q < ker.size() && shifts.size() < 256; ++q) {
                shifts.push_back(combine(ker[p], ker[q], 1));
                shifts.push_back(combine(ker[p], ker[q], -1));
            }
        for (const auto& shift : shifts) {
            if (++nodes > nodeBudget) {
                exhausted = true;
                return false;
            }
            Vector x = combine(*x0, shift, 1);
            SparseEchelon saved = linear[static_cast<std::size_t>(deg)];
            if (!linear[static_cast<std::size_t>(deg)].insert(toSparse(space.linearPart(x))))
                continue;
            images[i] = space.polynomial(x);
            if (self(self, pos + 1))
                return true;
            linear[static_cast<std::size_t>(deg)] = std::move(saved);
            images[i].clear();
            if (exhausted)
                return false;
        }
        return false;
    };

    if (search(search, 0) && verifyModelIsomorphism(a, b, images, n)) {
        result.status = Status::Pass;
        result.images = std::move(images);
        result.detail = "isomorphism found after " + std::to_string(nodes) + " candidates";
    } else {
        result.status = Status::Inconclusive;
        result.detail = exhausted ? "search budget of " + std::to_string(nodeBudget) + " candidates exhausted"
                                  : "no isomorphism among the bounded candidates";
    }
    return result;
}

bool verifyModelIsomorphism(const SullivanAlgebra& a0, const SullivanAlgebra& b0,
                            const std::vector<FreePolynomial>& images, int n) {
    SullivanAlgebra a = restrictTo(a0, n);
    SullivanAlgebra b = restrictTo(b0, n);
    if (images.size() != a.generators.size())
        return false;
    FreeAlgebra fA = a.free();
    FreeAlgebra fB = b.free();
    for (std::size_t i = 0; i < images.size(); ++i) {
        FreePolynomial img = cleaned(images[i]);
        if (!img.empty() && fB.degree(img) != a.generators[i].degree)
            return false;
        if (cleaned(applyMap(fA, fB, a.differential[i], images)) != cleaned(fB.differential(b.differential, img)))
            return false;
    }
    for (int deg = 1; deg <= n; ++deg) {
        DegreeSpace space = degreeSpace(fB, deg);
        std::vector<Vector> columns;
        for (std::size_t i = 0; i < images.size(); ++i)
            if (a.generators[i].degree == deg)
                columns.push_back(space.linearPart(space.coordinates(cleaned(images[i]))));
        if (columns.size() != space.generatorColumns.size())
            return false;
        if (Matrix::fromColumns(columns, columns.size()).rank() != columns.size())
            return false;
    }
    return true;
}

SullivanAlgebra tensorWithCircle(const SullivanAlgebra& s, const std::string& name) {
    SullivanAlgebra out = s;
    std::string unique = name;
    FreeAlgebra f = s.free();
    while (f.find(unique))
        unique += "'";
    out.name = s.name + "⊗∧(" + unique + ")";
    out.generators.push_back({unique, 1});
    out.differential.resize(s.generators.size());
    for (auto& d : out.differential) {
        FreePolynomial widened;
        for (const auto& [m, c] : d) {
            Monomial w = m;
            w.push_back(0);
            widened[w] = c;
        }
        d = std::move(widened);
    }
    out.differential.emplace_back();
    return out;
}

Report modelTensorSplitCheck(const CoKahlerModel& model, int n) {
    Report rep;
    rep.command = "check-split";
    ModelMap baseModel = minimalModelOfFormal(model.basePtr(), n);
    ModelMap fullModel = minimalModelOfFormal(model.algebraPtr(), n);

    ModelMap tensor;
    tensor.source = tensorWithCircle(baseModel.source);
    tensor.target = model.algebraPtr();
    for (const auto& img : baseModel.images)
        tensor.images.push_back(model.embedBase(img));
    tensor.images.push_back(model.eta());

    rep.append(verifyQuasiIso(fullModel, n), "model of M: ");
    rep.append(verifyQuasiIso(tensor, n), "model of B ⊗ ∧(eta) -> H(M): ");

    ModelFingerprint fs = modelFingerprint(tensor.source, n);
    ModelFingerprint fm = modelFingerprint(fullModel.source, n);
    rep.add("fingerprints agree", fs == fm, fs == fm ? std::string{} : fs.format() + " vs " + fm.format(), fm.format());
    if (fs == fm) {
        IsoSearchResult iso = findModelIsomorphism(tensor.source, fullModel.source, n);
        std::ostringstream witness;
        if (iso.status == Status::Pass) {
            FreeAlgebra target = fullModel.source.free();
            for (std::size_t i = 0; i < iso.images.size(); ++i)
                witness << (i ? ", " : "") << tensor.source.generators[i].name << " -> "
                        << target.format(iso.images[i]);
        }
        rep.add("isomorphism (model of B) ⊗ ∧(eta) -> model of M", iso.status, witness.str(), iso.detail);
    }
    rep.betti = model.algebra().betti();
    return rep;
}

}  // namespace cokahler
