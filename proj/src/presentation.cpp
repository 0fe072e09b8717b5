#include "cokahler/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cokahler {

FreeAlgebra::FreeAlgebra(std::vector<Generator> generators) : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].degree < 1)
            throw InputError(generators_[i].name, "generator degree must be >= 1");
        if (!byName_.emplace(generators_[i].name, i).second)
            throw InputError(generators_[i].name, "duplicate generator name");
    }
}

std::optional<std::size_t> FreeAlgebra::find(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end())
        return std::nullopt;
    return it->second;
}

int FreeAlgebra::maxGeneratorDegree() const {
    int m = 0;
    for (const auto& g : generators_)
        m = std::max(m, g.degree);
    return m;
}

int FreeAlgebra::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * generators_[i].degree;
    return d;
}

std::optional<int> FreeAlgebra::degree(const FreePolynomial& p) const {
    std::optional<int> deg;
    for (const auto& [m, c] : p) {
        if (c == 0)
            continue;
        int d = degree(m);
        if (deg && *deg != d)
            throw InputError("", "polynomial " + format(p) + " is not homogeneous");
        deg = d;
    }
    return deg;
}

Monomial FreeAlgebra::generator(std::size_t i) const {
    Monomial m = one();
    m.at(i) = 1;
    return m;
}

int FreeAlgebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
    out.assign(generators_.size(), 0);
    int sign = 1;
    // Moving each odd generator of b leftwards past the odd generators of a
    // with larger index.
    int oddAbove = 0;  // odd generators of a with index > i
    for (std::size_t i = generators_.size(); i-- > 0;) {
        bool odd = generators_[i].degree % 2 != 0;
        if (odd) {
            if (a[i] > 0 && b[i] > 0)
                return 0;
            if (b[i] > 0 && oddAbove % 2 != 0)
                sign = -sign;
            if (a[i] > 0)
                ++oddAbove;
        }
        out[i] = a[i] + b[i];
    }
    return sign;
}

FreePolynomial FreeAlgebra::multiply(const FreePolynomial& a, const FreePolynomial& b) const {
    FreePolynomial out;
    Monomial m;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            int s = multiply(ma, mb, m);
            if (s == 0)
                continue;
            Scalar& slot = out[m];
            slot += s * ca * cb;
            if (slot == 0)
                out.erase(m);
        }
    return out;
}

FreePolynomial FreeAlgebra::product(const std::vector<std::size_t>& word) const {
    FreePolynomial p{{one(), Scalar(1)}};
    for (auto g : word) {
        if (g >= generators_.size())
            throw std::out_of_range("FreeAlgebra::product: generator index out of range");
        p = multiply(p, FreePolynomial{{generator(g), Scalar(1)}});
    }
    return p;
}

std::vector<Monomial> FreeAlgebra::monomials(int n) const {
    std::vector<Monomial> out;
    Monomial cur = one();
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == generators_.size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        int g = generators_[i].degree;
        int maxExp = remaining / g;
        if (g % 2 != 0)
            maxExp = std::min(maxExp, 1);
        for (int e = 0; e <= maxExp; ++e) {
            cur[i] = e;
            rec(i + 1, remaining - e * g);
        }
        cur[i] = 0;
    };
    if (n >= 0)
        rec(0, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

FreePolynomial FreeAlgebra::differential(const std::vector<FreePolynomial>& dGen, const Monomial& m) const {
    auto first = std::find_if(m.begin(), m.end(), [](int e) { return e > 0; });
    if (first == m.end())
        return {};
    std::size_t i = static_cast<std::size_t>(first - m.begin());
    Monomial rest = m;
    --rest[i];
    FreePolynomial restPoly{{rest, Scalar(1)}};
    FreePolynomial out;
    if (i < dGen.size() && !dGen[i].empty())
        out = multiply(dGen[i], restPoly);
    FreePolynomial tail = multiply(FreePolynomial{{generator(i), Scalar(1)}}, differential(dGen, rest));
    Scalar sign = generators_[i].degree % 2 != 0 ? -1 : 1;
    for (const auto& [mm, c] : tail) {
        Scalar& slot = out[mm];
        slot += sign * c;
        if (slot == 0)
            out.erase(mm);
    }
    return out;
}

FreePolynomial FreeAlgebra::differential(const std::vector<FreePolynomial>& dGen, const FreePolynomial& p) const {
    FreePolynomial out;
    for (const auto& [m, c] : p)
        for (const auto& [mm, cc] : differential(dGen, m)) {
            Scalar& slot = out[mm];
            slot += c * cc;
            if (slot == 0)
                out.erase(mm);
        }
    return out;
}

int FreeAlgebra::wordLength(const Monomial& m) {
    int n = 0;
    for (int e : m)
        n += e;
    return n;
}

bool FreeAlgebra::isDecomposable(const FreePolynomial& p) {
    for (const auto& [m, c] : p)
        if (c != 0 && wordLength(m) < 2)
            return false;
    return true;
}

std::string FreeAlgebra::format(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += generators_[i].name;
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string FreeAlgebra::format(const FreePolynomial& p) const {
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p) {
        Scalar a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0)
            a = -a;
        bool unit = wordLength(m) == 0;
        if (a != 1 || unit)
            os << toString(a) << (unit ? "" : "*");
        if (!unit)
            os << format(m);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct DegreeIdeal {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> column;
    SparseEchelon echelon{0};

    SparseVector toColumns(const FreePolynomial& p) const {
        SparseVector v;
        for (const auto& [m, c] : p)
            if (c != 0)
                v[column.at(m)] = c;
        return v;
    }
};

DegreeIdeal makeDegree(const FreeAlgebra& f, int n) {
    DegreeIdeal d;
    d.monomials = f.monomials(n);
    for (std::size_t i = 0; i < d.monomials.size(); ++i)
        d.column.emplace(d.monomials[i], i);
    d.echelon = SparseEchelon(d.monomials.size());
    return d;
}

Element multiplyChain(const GradedAlgebra& a, const Monomial& m, const std::vector<Element>& images) {
    Element out = a.unit();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e)
            out = a.multiply(out, images.at(i));
    return out;
}

}  // namespace

Element PresentedAlgebra::evaluate(const FreePolynomial& p) const {
    return evaluateWith(p, generatorElements, algebra());
}

Element PresentedAlgebra::evaluateWith(const FreePolynomial& p, const std::vector<Element>& images,
                                       const GradedAlgebra& target) const {
    Element out;
    for (const auto& [m, c] : p) {
        Element term = multiplyChain(target, m, images);
        bool flag = out.truncated || term.truncated;
        out += c * term;
        out.truncated = flag;
    }
    return out;
}

PresentedAlgebra buildFromPresentation(const Presentation& p) {
    if (p.truncation < 0)
        throw InputError("truncation_degree", "must be non-negative");
    FreeAlgebra f(p.generators);
    const int D = p.truncation;
    const int gmax = f.maxGeneratorDegree();
    const int E = D + gmax;

    std::vector<FreePolynomial> dGen = p.differential;
    if (dGen.size() > f.size())
        throw InputError("differential", "more entries than generators");
    dGen.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::optional<int> dd;
        try {
            dd = f.degree(dGen[i]);
        } catch (const InputError& e) {
            throw InputError("differential." + p.generators[i].name, e.what());
        }
        if (dd && *dd != p.generators[i].degree + 1)
            throw InputError("differential." + p.generators[i].name,
                             "differential must raise degree by exactly 1 (got degree " + std::to_string(*dd) + ")");
    }

    std::vector<int> relDeg;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        std::optional<int> d;
        try {
            d = f.degree(p.relations[r]);
        } catch (const InputError& e) {
            throw InputError("relations[" + std::to_string(r) + "]", e.what());
        }
        if (!d) {
            relDeg.push_back(-1);  // zero relation, ignored
            continue;
        }
        if (*d == 0)
            throw InputError("relations[" + std::to_string(r) + "]", "relation of degree 0 would kill the unit");
        if (*d > D)
            throw InputError("relations[" + std::to_string(r) + "]",
                             "relation of degree " + std::to_string(*d) + " exceeds truncation degree " +
                                 std::to_string(D));
        relDeg.push_back(*d);
    }

    std::vector<DegreeIdeal> ideal;
    for (int n = 0; n <= E; ++n) {
        DegreeIdeal deg = makeDegree(f, n);
        for (std::size_t r = 0; r < p.relations.size(); ++r) {
            if (relDeg[r] < 0 || relDeg[r] > n)
                continue;
            for (const auto& m : ideal[static_cast<std::size_t>(n - relDeg[r])].monomials)
                deg.echelon.insert(deg.toColumns(f.multiply(p.relations[r], FreePolynomial{{m, Scalar(1)}})));
        }
        ideal.push_back(std::move(deg));
    }

    auto inIdeal = [&](int n, const FreePolynomial& poly) {
        if (poly.empty())
            return true;
        return ideal.at(static_cast<std::size_t>(n)).echelon.contains(ideal[static_cast<std::size_t>(n)].toColumns(poly));
    };
    for (std::size_t i = 0; i < f.size(); ++i) {
        int n = p.generators[i].degree + 2;
        if (dGen[i].empty() || n > D)
            continue;
        if (!inIdeal(n, f.differential(dGen, dGen[i])))
            throw InputError(p.generators[i].name, "inconsistent differential: d^2 != 0 modulo relations");
    }
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        if (relDeg[r] < 0 || relDeg[r] + 1 > D)
            continue;
        if (!inIdeal(relDeg[r] + 1, f.differential(dGen, p.relations[r])))
            throw InputError("relations[" + std::to_string(r) + "]",
                             "inconsistent differential: d(" + f.format(p.relations[r]) + ") is not in the ideal");
    }

    bool closed = true;
    for (int n = D + 1; n <= E; ++n) {
        const auto& deg = ideal[static_cast<std::size_t>(n)];
        closed = closed && deg.echelon.rank() == deg.monomials.size();
    }
    int top = D;
    if (closed) {
        top = 0;
        for (int n = D; n > 0; --n)
            if (ideal[static_cast<std::size_t>(n)].echelon.rank() < ideal[static_cast<std::size_t>(n)].monomials.size()) {
                top = n;
                break;
            }
    }

    PresentedAlgebra out;
    out.presentation = p;
    out.free = f;
    std::vector<BasisElement> elements;
    std::vector<std::map<std::size_t, std::size_t>> basisOfColumn(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const auto& deg = ideal[static_cast<std::size_t>(n)];
        for (std::size_t c : deg.echelon.freeColumns()) {
            basisOfColumn[static_cast<std::size_t>(n)][c] = elements.size();
            elements.push_back({f.format(deg.monomials[c]), n});
            out.basisMonomials.push_back(deg.monomials[c]);
        }
    }

    auto reduce = [&](int n, const FreePolynomial& poly) {
        Element e;
        if (poly.empty())
            return e;
        if (n > top) {
            e.truncated = !closed;
            return e;
        }
        const auto& deg = ideal[static_cast<std::size_t>(n)];
        for (const auto& [c, x] : deg.echelon.reduce(deg.toColumns(poly)))
            e.terms[basisOfColumn[static_cast<std::size_t>(n)].at(c)] = x;
        if (!e.terms.empty())
            e.degree = n;
        return e;
    };

    const std::size_t N = elements.size();
    std::vector<Element> products(N * N);
    Monomial prod;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            int n = elements[i].degree + elements[j].degree;
            if (n > top)
                continue;
            int s = f.multiply(out.basisMonomials[i], out.basisMonomials[j], prod);
            if (s == 0)
                continue;
            products[i * N + j] = reduce(n, FreePolynomial{{prod, Scalar(s)}});
        }

    std::vector<Element> d(N);
    for (std::size_t i = 0; i < N; ++i)
        d[i] = reduce(elements[i].degree + 1, f.differential(dGen, out.basisMonomials[i]));

    auto algebra = std::make_shared<const GradedAlgebra>(p.name, GradedBasis(std::move(elements), top),
                                                         std::move(products), closed);
    out.cdga = std::make_shared<const ChainComplexAlgebra>(algebra, std::move(d));
    for (std::size_t i = 0; i < f.size(); ++i)
        out.generatorElements.push_back(reduce(p.generators[i].degree, FreePolynomial{{f.generator(i), Scalar(1)}}));
    out.presentation.differential = dGen;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool isIdentifier(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Columns: monomials of degree n; rows: coordinates in H^n.
Matrix evaluationMatrix(const GradedAlgebra& h, const std::vector<Element>& images, int n,
                        const std::vector<Monomial>& monomials) {
    Matrix m(h.dim(n), monomials.size());
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        Vector col = h.coordinates(multiplyChain(h, monomials[c], images), n);
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

}  // namespace

AlgebraPresentation presentationOf(const GradedAlgebra& h, const std::string& name) {
    AlgebraPresentation out;
    Presentation& pres = out.presentation;
    pres.name = name.empty() ? h.name() : name;
    const int T = h.closed() ? h.topDegree() : h.truncation();
    const auto& basis = h.basis();

    std::set<std::string> used;
    for (int n = 1; n <= T; ++n) {
        SparseEchelon span(h.dim(n));
        for (std::size_t i = 1; i < h.dim(); ++i)
            for (std::size_t j = 1; j < h.dim(); ++j)
                if (basis.degree(i) + basis.degree(j) == n)
                    span.insert(toSparse(h.coordinates(h.product(i, j), n)));
        std::size_t k = 0;
        for (std::size_t idx : basis.inDegree(n)) {
            SparseVector v{{basis.position(idx), Scalar(1)}};
            if (!span.insert(v))
                continue;
            std::string gname = basis.name(idx);
            if (!isIdentifier(gname) || used.contains(gname))
                gname = "x" + std::to_string(n) + "_" + std::to_string(++k);
            while (used.contains(gname))
                gname += "_";
            used.insert(gname);
            pres.generators.push_back({gname, n});
            out.generatorImages.push_back(h.basisElement(idx));
        }
    }

    FreeAlgebra f(pres.generators);
    const int gmax = f.maxGeneratorDegree();
    const int E = h.closed() ? T + gmax : T;
    pres.truncation = E;
    pres.differential.assign(f.size(), {});

    std::vector<std::pair<FreePolynomial, int>> rels;
    for (int n = 1; n <= E; ++n) {
        auto monomials = f.monomials(n);
        if (monomials.empty())
            continue;
        std::map<Monomial, std::size_t> column;
        for (std::size_t i = 0; i < monomials.size(); ++i)
            column.emplace(monomials[i], i);
        SparseEchelon idealSpan(monomials.size());
        for (const auto& [r, dr] : rels)
            for (const auto& m : f.monomials(n - dr)) {
                SparseVector v;
                for (const auto& [mm, c] : f.multiply(r, FreePolynomial{{m, Scalar(1)}}))
                    v[column.at(mm)] = c;
                idealSpan.insert(v);
            }
        std::vector<Vector> kernel;
        if (n > T)
            for (std::size_t c = 0; c < monomials.size(); ++c) {
                Vector e(monomials.size());
                e[c] = 1;
                kernel.push_back(std::move(e));
            }
        else
            kernel = evaluationMatrix(h, out.generatorImages, n, monomials).kernel();
        for (const auto& kv : kernel) {
            SparseVector sv = toSparse(kv);
            if (!idealSpan.insert(sv))
                continue;
            FreePolynomial poly;
            for (const auto& [c, x] : sv)
                poly[monomials[c]] = x;
            rels.emplace_back(std::move(poly), n);
        }
    }
    for (auto& [r, dr] : rels)
        pres.relations.push_back(std::move(r));
    return out;
}

FreePolynomial AlgebraPresentation::lift(const GradedAlgebra& h, const Element& x) const {
    FreeAlgebra f(presentation.generators);
    FreePolynomial out;
    std::set<int> degrees;
    for (const auto& [i, c] : x.terms)
        degrees.insert(h.basis().degree(i));
    for (int n : degrees) {
        auto monomials = f.monomials(n);
        Matrix m = evaluationMatrix(h, generatorImages, n, monomials);
        auto sol = m.solve(h.coordinates(x, n));
        if (!sol)
            throw std::logic_error("presentationOf: generators do not span degree " + std::to_string(n));
        for (std::size_t c = 0; c < monomials.size(); ++c)
            if ((*sol)[c] != 0)
                out[monomials[c]] = (*sol)[c];
    }
    return out;
}

}  // namespace cokahler
