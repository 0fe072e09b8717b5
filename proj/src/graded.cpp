#include "cokahler/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cokahler {

namespace {

std::optional<int> mergeDegree(const Element& a, const Element& b) {
    if (a.isZero())
        return b.degree;
    if (b.isZero())
        return a.degree;
    if (a.degree && b.degree && *a.degree == *b.degree)
        return a.degree;
    return std::nullopt;
}

void addScaled(Element& into, const Element& x, const Scalar& c) {
    if (c == 0)
        return;
    for (const auto& [i, v] : x.terms) {
        Scalar& slot = into.terms[i];
        slot += c * v;
        if (slot == 0)
            into.terms.erase(i);
    }
}

}  // namespace

Scalar Element::coefficient(std::size_t index) const {
    auto it = terms.find(index);
    return it == terms.end() ? Scalar(0) : it->second;
}

Element& Element::operator+=(const Element& other) {
    auto deg = mergeDegree(*this, other);
    addScaled(*this, other, 1);
    degree = terms.empty() ? std::nullopt : deg;
    truncated = truncated || other.truncated;
    return *this;
}

Element& Element::operator-=(const Element& other) {
    auto deg = mergeDegree(*this, other);
    addScaled(*this, other, -1);
    degree = terms.empty() ? std::nullopt : deg;
    truncated = truncated || other.truncated;
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (c == 0) {
        terms.clear();
        degree.reset();
        return *this;
    }
    for (auto& [i, v] : terms)
        v *= c;
    return *this;
}

// ---------------------------------------------------------------------------

GradedBasis::GradedBasis(std::vector<BasisElement> elements, int truncation)
    : elements_(std::move(elements)), truncation_(truncation) {
    if (truncation_ < 0)
        throw std::invalid_argument("GradedBasis: negative truncation degree");
    if (elements_.empty() || elements_[0].degree != 0)
        throw std::invalid_argument("GradedBasis: index 0 must be the degree-0 unit");
    byDegree_.assign(static_cast<std::size_t>(truncation_) + 1, {});
    position_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.degree < 0 || e.degree > truncation_)
            throw std::invalid_argument("GradedBasis: element '" + e.name + "' outside degrees [0, " +
                                        std::to_string(truncation_) + "]");
        if (e.degree == 0 && i != 0)
            throw std::invalid_argument("GradedBasis: degree 0 must be spanned by the unit alone");
        if (!byName_.emplace(e.name, i).second)
            throw std::invalid_argument("GradedBasis: duplicate basis name '" + e.name + "'");
        auto& bucket = byDegree_[static_cast<std::size_t>(e.degree)];
        position_[i] = bucket.size();
        bucket.push_back(i);
    }
}

const std::vector<std::size_t>& GradedBasis::inDegree(int p) const {
    static const std::vector<std::size_t> empty;
    if (p < 0 || p > truncation_)
        return empty;
    return byDegree_[static_cast<std::size_t>(p)];
}

std::optional<std::size_t> GradedBasis::find(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end())
        return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------

GradedAlgebra::GradedAlgebra(std::string name, GradedBasis basis, std::vector<Element> products, bool closed)
    : name_(std::move(name)), basis_(std::move(basis)), products_(std::move(products)), closed_(closed) {
    const std::size_t n = basis_.size();
    if (products_.size() != n * n)
        throw std::invalid_argument("GradedAlgebra: product table has wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element& e = products_[i * n + j];
            if (basis_.degree(i) + basis_.degree(j) > truncation()) {
                e = Element{};
                e.truncated = !closed_;
            } else {
                bool flag = e.truncated;
                e = normalize(std::move(e));
                e.truncated = flag;
            }
        }
}

GradedAlgebra GradedAlgebra::ground(std::string name) {
    GradedBasis basis({{"1", 0}}, 0);
    Element one;
    one.terms[0] = 1;
    one.degree = 0;
    return GradedAlgebra(std::move(name), std::move(basis), {one}, true);
}

int GradedAlgebra::topDegree() const {
    for (int p = truncation(); p > 0; --p)
        if (dim(p) > 0)
            return p;
    return 0;
}

Element GradedAlgebra::basisElement(std::size_t i) const {
    if (i >= dim())
        throw std::out_of_range("basis index " + std::to_string(i) + " not in algebra '" + name_ + "'");
    Element e;
    e.terms[i] = 1;
    e.degree = basis_.degree(i);
    return e;
}

const Element& GradedAlgebra::product(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim())
        throw std::out_of_range("foreign basis element in product on algebra '" + name_ + "'");
    return products_[i * dim() + j];
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
    Element out;
    out.truncated = x.truncated || y.truncated;
    for (const auto& [i, a] : x.terms) {
        if (i >= dim())
            throw std::out_of_range("foreign basis element " + std::to_string(i) + " in multiply on '" + name_ + "'");
        for (const auto& [j, b] : y.terms) {
            if (j >= dim())
                throw std::out_of_range("foreign basis element " + std::to_string(j) + " in multiply on '" +
                                        name_ + "'");
            const Element& p = product(i, j);
            out.truncated = out.truncated || p.truncated;
            addScaled(out, p, a * b);
        }
    }
    bool flag = out.truncated;
    out = normalize(std::move(out));
    out.truncated = flag;
    return out;
}

Element GradedAlgebra::power(const Element& x, int k) const {
    if (k < 0)
        throw std::invalid_argument("GradedAlgebra::power: negative exponent");
    Element out = unit();
    for (int i = 0; i < k; ++i)
        out = multiply(out, x);
    return out;
}

Vector GradedAlgebra::coordinates(const Element& x, int p) const {
    const auto& idx = basis_.inDegree(p);
    Vector v(idx.size());
    for (const auto& [i, c] : x.terms) {
        if (i >= dim())
            throw std::out_of_range("foreign basis element in coordinates on '" + name_ + "'");
        if (basis_.degree(i) == p)
            v[basis_.position(i)] = c;
    }
    return v;
}

Element GradedAlgebra::fromCoordinates(const Vector& v, int p) const {
    const auto& idx = basis_.inDegree(p);
    if (v.size() != idx.size())
        throw std::invalid_argument("GradedAlgebra::fromCoordinates: length mismatch in degree " + std::to_string(p));
    Element e;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0)
            e.terms[idx[k]] = v[k];
    if (!e.terms.empty())
        e.degree = p;
    return e;
}

Element GradedAlgebra::normalize(Element x) const {
    std::optional<int> deg;
    bool mixed = false;
    for (auto it = x.terms.begin(); it != x.terms.end();) {
        if (it->first >= dim())
            throw std::out_of_range("foreign basis element " + std::to_string(it->first) + " on '" + name_ + "'");
        if (it->second == 0) {
            it = x.terms.erase(it);
            continue;
        }
        int d = basis_.degree(it->first);
        if (deg && *deg != d)
            mixed = true;
        deg = d;
        ++it;
    }
    x.degree = (mixed || x.terms.empty()) ? std::nullopt : deg;
    return x;
}

Matrix GradedAlgebra::leftMultiplicationMatrix(const Element& x, int p) const {
    if (!x.isZero() && !x.degree)
        throw std::invalid_argument("leftMultiplicationMatrix: element is not homogeneous");
    int q = p + (x.degree ? *x.degree : 0);
    const auto& src = basis_.inDegree(p);
    Matrix m(dim(q), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Element y = multiply(x, basisElement(src[c]));
        Vector col = coordinates(y, q);
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

std::string GradedAlgebra::format(const Element& x) const {
    if (x.isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.terms) {
        Scalar a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        if (a < 0)
            a = -a;
        first = false;
        if (i == 0) {
            os << toString(a);
        } else {
            if (a != 1)
                os << toString(a) << "*";
            os << basis_.name(i);
        }
    }
    if (x.truncated)
        os << " [truncated]";
    return os.str();
}

std::vector<int> GradedAlgebra::betti() const {
    std::vector<int> out;
    const int last = closed_ ? topDegree() : truncation();
    for (int p = 0; p <= last; ++p)
        out.push_back(static_cast<int>(dim(p)));
    return out;
}

// ---------------------------------------------------------------------------

ChainComplexAlgebra::ChainComplexAlgebra(AlgebraPtr algebra, std::vector<Element> differentialOfBasis)
    : algebra_(std::move(algebra)), d_(std::move(differentialOfBasis)) {
    if (!algebra_)
        throw std::invalid_argument("ChainComplexAlgebra: null algebra");
    if (d_.size() != algebra_->dim())
        throw std::invalid_argument("ChainComplexAlgebra: differential size mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) {
        bool flag = d_[i].truncated;
        d_[i] = algebra_->normalize(std::move(d_[i]));
        d_[i].truncated = flag;
        if (algebra_->basis().degree(i) >= algebra_->truncation()) {
            bool drop = !d_[i].isZero() || !algebra_->closed();
            d_[i] = Element{};
            d_[i].truncated = drop && !algebra_->closed();
        }
    }
}

ChainComplexAlgebra ChainComplexAlgebra::withZeroDifferential(AlgebraPtr algebra) {
    std::vector<Element> d(algebra->dim());
    ChainComplexAlgebra c(std::move(algebra), std::move(d));
    // A zero differential is known exactly, even at the truncation degree.
    for (auto& e : c.d_)
        e.truncated = false;
    return c;
}

Element ChainComplexAlgebra::differential(const Element& x) const {
    Element out;
    out.truncated = x.truncated;
    for (const auto& [i, c] : x.terms) {
        out += c * d_.at(i);
        out.truncated = out.truncated || d_[i].truncated;
    }
    return out;
}

Matrix ChainComplexAlgebra::differentialMatrix(int p) const {
    const auto& src = algebra_->basis().inDegree(p);
    Matrix m(algebra_->dim(p + 1), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Vector col = algebra_->coordinates(d_[src[c]], p + 1);
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

bool ChainComplexAlgebra::isZeroDifferential() const {
    return std::all_of(d_.begin(), d_.end(), [](const Element& e) { return e.isZero(); });
}

// ---------------------------------------------------------------------------

Element AlgebraMap::apply(const Element& x) const {
    Element out;
    out.truncated = x.truncated;
    for (const auto& [i, c] : x.terms) {
        if (i >= images.size())
            throw std::out_of_range("AlgebraMap::apply: foreign basis element");
        out += c * images[i];
        out.truncated = out.truncated || images[i].truncated;
    }
    return out;
}

Matrix AlgebraMap::matrix(int p) const {
    const auto& src = source->basis().inDegree(p);
    Matrix m(target->dim(p), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Vector col = target->coordinates(images.at(src[c]), p);
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

Report AlgebraMap::verify(const ChainComplexAlgebra* sourceDifferential,
                          const ChainComplexAlgebra* targetDifferential) const {
    Report rep;
    rep.command = "verify-map";
    const auto& sb = source->basis();
    if (images.size() != source->dim()) {
        rep.add("image count", Status::InputError, {}, "expected " + std::to_string(source->dim()));
        return rep;
    }
    std::string degreeWitness;
    for (std::size_t i = 0; i < images.size() && degreeWitness.empty(); ++i) {
        Element e = target->normalize(images[i]);
        if (!e.isZero() && (!e.degree || *e.degree != sb.degree(i)))
            degreeWitness = sb.name(i);
    }
    rep.add("degree-preserving", degreeWitness.empty(), degreeWitness);
    rep.add("unit", apply(source->unit()) == target->unit(), sb.name(0));

    int limit = std::min(source->truncation(), target->truncation());
    std::string multWitness;
    bool multInconclusive = false;
    for (std::size_t i = 0; i < sb.size() && multWitness.empty(); ++i)
        for (std::size_t j = 0; j < sb.size() && multWitness.empty(); ++j) {
            if (sb.degree(i) + sb.degree(j) > limit)
                continue;
            Element lhs = apply(source->product(i, j));
            Element rhs = target->multiply(images[i], images[j]);
            if (lhs.truncated || rhs.truncated) {
                multInconclusive = true;
                continue;
            }
            if (!(lhs == rhs))
                multWitness = "(" + sb.name(i) + ", " + sb.name(j) + ")";
        }
    if (!multWitness.empty())
        rep.add("multiplicative", Status::Fail, multWitness);
    else
        rep.add("multiplicative", multInconclusive ? Status::Inconclusive : Status::Pass);

    if (sourceDifferential && targetDifferential) {
        std::string dWitness;
        for (std::size_t i = 0; i < sb.size() && dWitness.empty(); ++i) {
            if (sb.degree(i) + 1 > limit)
                continue;
            Element lhs = apply(sourceDifferential->differentialOf(i));
            Element rhs = targetDifferential->differential(images[i]);
            if (!(lhs == rhs))
                dWitness = sb.name(i);
        }
        rep.add("chain map", dWitness.empty(), dWitness);
    }
    return rep;
}

// ---------------------------------------------------------------------------

Report verifyAlgebraAxioms(const GradedAlgebra& a) {
    Report rep;
    rep.command = "check-axioms";
    const auto& b = a.basis();
    const std::size_t n = a.dim();
    const int D = a.truncation();

    std::string degWitness;
    for (std::size_t i = 0; i < n && degWitness.empty(); ++i)
        for (std::size_t j = 0; j < n && degWitness.empty(); ++j) {
            const Element& p = a.product(i, j);
            if (!p.isZero() && (!p.degree || *p.degree != b.degree(i) + b.degree(j)))
                degWitness = "(" + b.name(i) + ", " + b.name(j) + ")";
        }
    rep.add("product degrees", degWitness.empty(), degWitness);

    std::string unitWitness;
    for (std::size_t i = 0; i < n && unitWitness.empty(); ++i) {
        Element e = a.basisElement(i);
        if (!(a.product(0, i) == e) || !(a.product(i, 0) == e))
            unitWitness = "(" + b.name(0) + ", " + b.name(i) + ")";
    }
    rep.add("unit", unitWitness.empty(), unitWitness);

    std::string commWitness;
    for (std::size_t i = 0; i < n && commWitness.empty(); ++i)
        for (std::size_t j = i; j < n && commWitness.empty(); ++j) {
            if (b.degree(i) + b.degree(j) > D)
                continue;
            Element swapped = Scalar(koszulSign(b.degree(i), b.degree(j))) * a.product(j, i);
            if (!(a.product(i, j) == swapped))
                commWitness = "(" + b.name(i) + ", " + b.name(j) + ")";
        }
    rep.add("graded commutativity", commWitness.empty(), commWitness);

    std::string assocWitness;
    for (std::size_t i = 1; i < n && assocWitness.empty(); ++i)
        for (std::size_t j = 1; j < n && assocWitness.empty(); ++j) {
            if (b.degree(i) + b.degree(j) > D)
                continue;
            for (std::size_t k = 1; k < n && assocWitness.empty(); ++k) {
                if (b.degree(i) + b.degree(j) + b.degree(k) > D)
                    continue;
                Element left = a.multiply(a.product(i, j), a.basisElement(k));
                Element right = a.multiply(a.basisElement(i), a.product(j, k));
                if (!(left == right))
                    assocWitness = "(" + b.name(i) + ", " + b.name(j) + ", " + b.name(k) + ")";
            }
        }
    rep.add("associativity", assocWitness.empty(), assocWitness);
    return rep;
}

Report verifyAlgebraAxioms(const ChainComplexAlgebra& c) {
    Report rep = verifyAlgebraAxioms(c.algebra());
    const auto& a = c.algebra();
    const auto& b = a.basis();
    const std::size_t n = a.dim();
    const int D = a.truncation();

    std::string degWitness;
    for (std::size_t i = 0; i < n && degWitness.empty(); ++i) {
        const Element& d = c.differentialOf(i);
        if (!d.isZero() && (!d.degree || *d.degree != b.degree(i) + 1))
            degWitness = b.name(i);
    }
    rep.add("differential degree", degWitness.empty(), degWitness);

    std::string ddWitness;
    for (std::size_t i = 0; i < n && ddWitness.empty(); ++i)
        if (!c.differential(c.differentialOf(i)).isZero())
            ddWitness = b.name(i);
    rep.add("d^2 = 0", ddWitness.empty(), ddWitness);

    std::string leibnizWitness;
    for (std::size_t i = 0; i < n && leibnizWitness.empty(); ++i)
        for (std::size_t j = 0; j < n && leibnizWitness.empty(); ++j) {
            if (b.degree(i) + b.degree(j) + 1 > D)
                continue;
            Element lhs = c.differential(a.product(i, j));
            Element rhs = a.multiply(c.differentialOf(i), a.basisElement(j));
            Element second = a.multiply(a.basisElement(i), c.differentialOf(j));
            if (b.degree(i) % 2 != 0)
                rhs -= second;
            else
                rhs += second;
            if (!(lhs == rhs))
                leibnizWitness = "(" + b.name(i) + ", " + b.name(j) + ")";
        }
    rep.add("Leibniz", leibnizWitness.empty(), leibnizWitness);
    return rep;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> TensorProduct::index(std::size_t i, std::size_t j) const {
    auto it = std::find(factors.begin(), factors.end(), std::make_pair(i, j));
    if (it == factors.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - factors.begin());
}

TensorProduct tensorProductWithFactors(const GradedAlgebra& a, const GradedAlgebra& b,
                                       std::optional<int> maxTruncation) {
    const auto& ab = a.basis();
    const auto& bb = b.basis();
    int T = a.truncation() + b.truncation();
    if (maxTruncation)
        T = std::min(T, *maxTruncation);
    bool closed = a.closed() && b.closed() && a.topDegree() + b.topDegree() <= T;

    std::set<std::string> namesA, namesB;
    for (std::size_t i = 1; i < ab.size(); ++i)
        namesA.insert(ab.name(i));
    for (std::size_t j = 1; j < bb.size(); ++j)
        namesB.insert(bb.name(j));
    bool collide = std::any_of(namesA.begin(), namesA.end(), [&](const std::string& s) { return namesB.contains(s); });
    std::string prefixA, prefixB;
    if (collide) {
        prefixA = (a.name() == b.name() || a.name().empty()) ? "l." : a.name() + ".";
        prefixB = (a.name() == b.name() || b.name().empty()) ? "r." : b.name() + ".";
    }

    TensorProduct out;
    for (int deg = 0; deg <= T; ++deg)
        for (std::size_t i = 0; i < ab.size(); ++i) {
            int rest = deg - ab.degree(i);
            if (rest < 0)
                continue;
            for (std::size_t j : bb.inDegree(rest))
                out.factors.emplace_back(i, j);
        }

    auto compose = [&](std::size_t i, std::size_t j, bool bracket) {
        if (i == 0 && j == 0)
            return ab.name(0);
        if (j == 0)
            return prefixA + ab.name(i);
        if (i == 0)
            return prefixB + bb.name(j);
        if (bracket)
            return "(" + prefixA + ab.name(i) + ")*(" + prefixB + bb.name(j) + ")";
        return prefixA + ab.name(i) + "*" + prefixB + bb.name(j);
    };
    std::vector<BasisElement> elements;
    std::set<std::string> seen;
    bool unique = true;
    for (auto [i, j] : out.factors) {
        elements.push_back({compose(i, j, false), ab.degree(i) + bb.degree(j)});
        unique = unique && seen.insert(elements.back().name).second;
    }
    if (!unique)
        for (std::size_t k = 0; k < out.factors.size(); ++k)
            elements[k].name = compose(out.factors[k].first, out.factors[k].second, true);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
    for (std::size_t k = 0; k < out.factors.size(); ++k)
        lookup.emplace(out.factors[k], k);

    const std::size_t n = out.factors.size();
    std::vector<Element> products(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        auto [i, j] = out.factors[x];
        for (std::size_t y = 0; y < n; ++y) {
            auto [k, l] = out.factors[y];
            if (ab.degree(i) + bb.degree(j) + ab.degree(k) + bb.degree(l) > T)
                continue;
            Scalar sign = koszulSign(bb.degree(j), ab.degree(k));
            const Element& pa = a.product(i, k);
            const Element& pb = b.product(j, l);
            Element e;
            e.truncated = pa.truncated || pb.truncated;
            for (const auto& [s, cs] : pa.terms)
                for (const auto& [t, ct] : pb.terms) {
                    auto hit = lookup.find({s, t});
                    if (hit == lookup.end()) {
                        e.truncated = e.truncated || !closed;
                        continue;
                    }
                    e.terms[hit->second] += sign * cs * ct;
                }
            products[x * n + y] = std::move(e);
        }
    }
    std::string name = a.name() + "⊗" + b.name();
    out.algebra = GradedAlgebra(name, GradedBasis(std::move(elements), T), std::move(products), closed);
    return out;
}

GradedAlgebra tensorProduct(const GradedAlgebra& a, const GradedAlgebra& b, std::optional<int> maxTruncation) {
    return tensorProductWithFactors(a, b, maxTruncation).algebra;
}

}  // namespace cokahler

// ---------------------------------------------------------------------------

namespace cokahler {

std::string compactName(const GradedAlgebra& a, const Element& x) {
    if (x.terms.size() == 1 && x.terms.begin()->second == 1)
        return a.basis().name(x.terms.begin()->first);
    std::string s = a.format(x);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return "(" + s + ")";
}

Element Subalgebra::restrict(const Element& x) const {
    const GradedAlgebra& amb = *inclusion.target;
    const GradedAlgebra& sub = *algebra;
    Element out;
    std::set<int> degrees;
    for (const auto& [i, c] : x.terms)
        degrees.insert(amb.basis().degree(i));
    for (int p : degrees) {
        std::vector<Vector> cols;
        for (std::size_t i : sub.basis().inDegree(p))
            cols.push_back(amb.coordinates(inclusion.images[i], p));
        auto sol = Matrix::fromColumns(cols, amb.dim(p)).solve(amb.coordinates(x, p));
        if (!sol)
            throw std::invalid_argument("element " + amb.format(x) + " is not in the subalgebra");
        out += sub.fromCoordinates(*sol, p);
    }
    return out;
}

Subalgebra subalgebraFromSpans(const AlgebraPtr& ambient, const std::vector<std::vector<Vector>>& spans,
                               const std::string& name) {
    const GradedAlgebra& a = *ambient;
    std::vector<BasisElement> elements;
    std::vector<Element> vectors;
    std::vector<Matrix> spanMatrices;
    for (int p = 0; p <= a.truncation(); ++p) {
        const auto& span = p < static_cast<int>(spans.size()) ? spans[static_cast<std::size_t>(p)] : std::vector<Vector>{};
        for (const auto& v : span) {
            Element e = a.fromCoordinates(v, p);
            elements.push_back({compactName(a, e), p});
            vectors.push_back(std::move(e));
        }
        spanMatrices.push_back(Matrix::fromColumns(span, a.dim(p)));
    }
    const std::size_t n = elements.size();
    GradedBasis basis(std::move(elements), a.truncation());
    std::vector<Element> products(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int p = basis.degree(i) + basis.degree(j);
            if (p > a.truncation())
                continue;
            Element prod = a.multiply(vectors[i], vectors[j]);
            auto sol = spanMatrices[static_cast<std::size_t>(p)].solve(a.coordinates(prod, p));
            if (!sol)
                throw std::logic_error("subalgebra: product of " + basis.name(i) + " and " + basis.name(j) +
                                       " leaves the span");
            Element e;
            const auto& idx = basis.inDegree(p);
            for (std::size_t k = 0; k < sol->size(); ++k)
                if ((*sol)[k] != 0)
                    e.terms[idx[k]] = (*sol)[k];
            e.truncated = prod.truncated;
            products[i * n + j] = std::move(e);
        }
    Subalgebra out;
    out.algebra = std::make_shared<const GradedAlgebra>(name, std::move(basis), std::move(products), a.closed());
    out.inclusion.source = out.algebra;
    out.inclusion.target = ambient;
    out.inclusion.images = std::move(vectors);
    return out;
}

Subalgebra generatedSubalgebra(const AlgebraPtr& ambient, const std::vector<Element>& generators,
                               const std::string& name) {
    const GradedAlgebra& a = *ambient;
    std::vector<std::vector<Vector>> spans(static_cast<std::size_t>(a.truncation()) + 1);
    std::vector<std::vector<Element>> members(spans.size());
    members[0] = {a.unit()};
    spans[0] = {Vector{Scalar(1)}};
    for (const auto& g : generators)
        if (!g.isZero() && (!g.degree || *g.degree < 1))
            throw std::invalid_argument("generatedSubalgebra: generators must be homogeneous of positive degree");
    for (int p = 1; p <= a.truncation(); ++p) {
        SparseEchelon ech(a.dim(p));
        for (const auto& g : generators) {
            if (g.isZero() || *g.degree > p)
                continue;
            for (const auto& m : members[static_cast<std::size_t>(p - *g.degree)])
                ech.insert(toSparse(a.coordinates(a.multiply(g, m), p)));
        }
        for (const auto& row : ech.rows()) {
            Vector v = toDense(row, a.dim(p));
            spans[static_cast<std::size_t>(p)].push_back(v);
            members[static_cast<std::size_t>(p)].push_back(a.fromCoordinates(v, p));
        }
    }
    return subalgebraFromSpans(ambient, spans, name.empty() ? "<" + a.name() + ">" : name);
}

}  // namespace cokahler
