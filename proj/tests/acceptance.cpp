// Acceptance suite: one pass/fail line per criterion.
//
//   cokahler_acceptance               run all criteria
//   cokahler_acceptance --criterion 3 run one

#include "fixtures.hpp"

#include "cokahler/cli.hpp"
#include "cokahler/derivations.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/sullivan.hpp"
#include "cokahler/toral_rank.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace cokahler;
using fx::basis;
using Json = nlohmann::json;

namespace {

constexpr double timeLimitSeconds = 10.0;

/// Collects failed expectations of one criterion.
struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    }
};

std::string dataFile(const std::string& name) { return std::string(COKAHLER_DATA_DIR) + "/" + name; }

struct Scratch {
    std::filesystem::path path;
    Scratch() : path(std::filesystem::temp_directory_path() / ("cokahler-acceptance-" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path);
    }
    ~Scratch() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int status = 0;
    Json report;
};

Run cli(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("structured");
    std::ostringstream out, err;
    Run r;
    r.status = runCli(args, out, err);
    r.report = Json::parse(out.str());
    return r;
}

std::vector<int> bettiOf(const Json& report) {
    return report.contains("betti") ? report["betti"].get<std::vector<int>>() : std::vector<int>{};
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

/// Generator degrees of a model document, and whether the one generator of
/// degree `top` has d = (degree-2 generator)^power with coefficient 1.
void checkModelDocument(Checker& c, const std::string& path, std::vector<int> degrees, int top, int power) {
    auto doc = loadAlgebraFile(path).document;
    std::vector<int> got;
    std::string u, v;
    for (const auto& g : doc.generators) {
        got.push_back(g.degree);
        if (g.degree == 2)
            u = g.name;
        if (g.degree == top)
            v = g.name;
    }
    c.expect(got == degrees, "model generator degrees " + join(got) + ", expected " + join(degrees));
    if (u.empty() || v.empty())
        return;
    auto d = doc.differential.find(v);
    bool ok = d != doc.differential.end() && d->second.size() == 1 && d->second[0].coeff == 1 &&
              d->second[0].monomial == std::vector<std::string>(static_cast<std::size_t>(power), u);
    c.expect(ok, "d " + v + " is not " + u + "^" + std::to_string(power));
    for (const auto& [g, t] : doc.differential)
        c.expect(g == v || t.empty(), "unexpected differential on " + g);
}

// ---------------------------------------------------------------------------

void rotationEndToEnd(Checker& c) {
    Scratch s;
    auto torus = s.file("torus.alg"), model = s.file("model.alg");
    auto mt = cli({"mapping-torus", dataFile("t2_rotation.alg"), "--out", torus});
    c.expect(mt.status == 0, "mapping-torus exit status " + std::to_string(mt.status));
    c.expect(bettiOf(mt.report) == std::vector<int>{1, 1, 1, 1}, "mapping torus betti " + join(bettiOf(mt.report)));
    auto mm = cli({"minimal-model", torus, "--max-degree", "4", "--out", model});
    c.expect(mm.status == 0, "minimal-model exit status " + std::to_string(mm.status));
    if (mm.status == 0)
        checkModelDocument(c, model, {1, 2, 3}, 3, 2);
    auto split = cli({"check-split", torus});
    c.expect(split.status == 0, "check-split exit status " + std::to_string(split.status));
}

void swapEndToEnd(Checker& c) {
    Scratch s;
    auto torus = s.file("torus.alg"), model = s.file("model.alg");
    auto mt = cli({"mapping-torus", dataFile("example2.alg"), "--out", torus});
    c.expect(mt.status == 0, "mapping-torus exit status " + std::to_string(mt.status));
    c.expect(bettiOf(mt.report) == std::vector<int>{1, 1, 1, 1, 1, 1}, "betti " + join(bettiOf(mt.report)));
    auto mm = cli({"minimal-model", torus, "--max-degree", "6", "--out", model});
    c.expect(mm.status == 0, "minimal-model exit status " + std::to_string(mm.status));
    if (mm.status == 0)
        checkModelDocument(c, model, {1, 2, 5}, 5, 3);
    auto lef = cli({"check-cokahler-lefschetz", torus});
    c.expect(lef.status == 0, "check-cokahler-lefschetz exit status " + std::to_string(lef.status));

    auto l = loadAlgebraFile(dataFile("example2.alg"));
    const auto& h = l.presented.algebra();
    // (a + b)² = a² + 2ab + b² with a² = b² = 0
    auto ab = h.multiply(basis(h, "a"), basis(h, "b"));
    c.expect(h.power(l.namedClass("omega"), 2) == Scalar(2) * ab, "omega^2 != 2ab in H(K)");
    auto m = mappingTorusAlgebra(l.presented.algebraPtr(), *l.action, l.namedClass("omega"));
    for (int p = 0; p <= 2; ++p)
        c.expect(cokahlerLefschetz(m, p).iso, "co-Kähler Lefschetz not an isomorphism at p=" + std::to_string(p));
    auto e = cokahlerLefschetz(m, 1);
    const auto& a = m.algebra();
    auto image = a.fromCoordinates(e.matrix.column(0), 4);
    auto omega2 = a.power(m.omega(), 2);
    c.expect(image == omega2, "L(eta) = " + a.format(image) + ", expected omega^2 = " + a.format(omega2));
    c.expect(!omega2.isZero() && m.base().dim(4) == 1, "omega^2 does not span the top of the base");
}

/// rank of ω·(-) : H^1 -> H^3 from raw cochain matrices.
std::size_t rawLefschetzRank(const ChainComplexAlgebra& cdga, const Element& omega, const std::vector<Element>& h1) {
    const auto& a = cdga.algebra();
    Matrix boundaries = cdga.differentialMatrix(2);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < boundaries.cols(); ++j)
        cols.push_back(boundaries.column(j));
    std::size_t base = Matrix::fromColumns(cols, a.dim(3)).rank();
    for (const auto& x : h1)
        cols.push_back(a.coordinates(a.multiply(omega, x), 3));
    return Matrix::fromColumns(cols, a.dim(3)).rank() - base;
}

void hardLefschetzDiscrimination(Checker& c) {
    for (int n = 1; n <= 4; ++n) {
        auto h = fx::projective(n);
        c.expect(hardLefschetzCheck(*h, basis(*h, "u"), n).passed(), "CP" + std::to_string(n) + " not hard Lefschetz");
    }
    for (int n = 1; n <= 2; ++n) {
        auto h = fx::evenTorus(n);
        c.expect(hardLefschetzCheck(*h, fx::torusOmega(*h, n), n).passed(),
                 "T" + std::to_string(2 * n) + " not hard Lefschetz");
    }
    auto pa = fx::present("KT", {{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}}, {}, 4, {{"e4", {{1, {"e1", "e2"}}}}});
    const auto& a = pa.algebra();
    auto h = cohomology(pa.cdga);
    auto w = basis(a, "e1*e3") + basis(a, "e2*e4");
    auto rep = hardLefschetzCheck(h.algebra(), h.classOf(w), 2);
    auto f = rep.firstFailure();
    c.expect(f != nullptr && f->p == 1, "Kodaira-Thurston ring: expected failure at p=1");
    std::size_t oracle = rawLefschetzRank(*pa.cdga, w, {basis(a, "e1"), basis(a, "e2"), basis(a, "e3")});
    c.expect(oracle == 2, "raw H^1 -> H^3 rank " + std::to_string(oracle) + ", expected 2");
    if (f)
        c.expect(f->rank == oracle, "engine rank " + std::to_string(f->rank) + " differs from oracle");
}

void propertyBSuite(Checker& c) {
    for (int r = 1; r <= 4; ++r)
        c.expect(propertyBCheck(*fx::torus(r)).passed(), "T" + std::to_string(r) + " fails property B");
    for (int n = 1; n <= 4; ++n)
        c.expect(propertyBCheck(*fx::projective(n)).passed(), "CP" + std::to_string(n) + " fails property B");

    // θ(x) = 1: Leibniz only sees x·x = 0, which imposes nothing
    auto s3 = fx::present("S3", {{"x", 3}}, {}, 3);
    auto res = propertyBCheck(s3.algebra());
    c.expect(!res.passed() && res.witness, "S3 passes property B");
    if (res.witness) {
        Derivation oracle{-3, std::vector<Element>(s3.algebra().dim())};
        oracle.images[*s3.algebra().basis().find("x")] = s3.algebra().unit();
        c.expect(isDerivation(s3.algebra(), oracle), "x -> 1 is not a derivation");
        auto x = basis(s3.algebra(), "x");
        c.expect(res.witness->apply(x) != Element{}, "S3 witness vanishes on x");
    }

    // pool of algebras with property B
    std::vector<AlgebraPtr> pool;
    for (int r = 1; r <= 3; ++r)
        pool.push_back(fx::torus(r));
    for (int n = 1; n <= 4; ++n)
        pool.push_back(fx::projective(n));
    pool.push_back(fx::share(tensorProduct(*fx::projective(1), *fx::torus(1))));
    pool.push_back(fx::share(tensorProduct(*fx::projective(1), *fx::projective(1, "w"))));
    pool.push_back(fx::share(tensorProduct(*fx::projective(2), *fx::torus(2))));
    std::vector<AlgebraPtr> passing;
    for (const auto& h : pool)
        if (propertyBCheck(*h).passed())
            passing.push_back(h);
    c.expect(passing.size() == pool.size(), "some pool algebra fails property B");

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, passing.size() - 1);
    int probes = 0;
    while (probes < 25) {
        const auto& h = passing[pick(rng)];
        const auto& g = passing[pick(rng)];
        if (h->dim() * g->dim() > 40)
            continue;
        ++probes;
        auto r = tensorPropertyBProbe(*h, *g);
        c.expect(r.passed(), "tensor probe " + h->name() + " x " + g->name() + ": " +
                                 (r.firstFailure() ? r.firstFailure()->name : std::string{}));
    }
}

struct TorusCase {
    std::string label;
    fx::DocBuilder doc;
};

/// Mapping-torus corpus: (H(K), φ, ω) with n <= 3.
std::vector<TorusCase> mappingTorusCorpus() {
    auto t2 = [](const std::string& label, int order, const fx::TermSpec& gx, const fx::TermSpec& gy) {
        return TorusCase{label, fx::DocBuilder(label, {{"x", 1}, {"y", 1}}, 2)
                                    .cls("omega", {{1, {"x", "y"}}})
                                    .action(order, {{"x", gx}, {"y", gy}})};
    };
    auto t4 = fx::DocBuilder("T4", {{"x1", 1}, {"y1", 1}, {"x2", 1}, {"y2", 1}}, 4)
                  .cls("omega", {{1, {"x1", "y1"}}, {1, {"x2", "y2"}}});
    auto cp = [](int n) {
        fx::DocBuilder d("CP" + std::to_string(n), {{"u", 2}}, 2 * n + 2);
        return d.relation({{1, std::vector<std::string>(static_cast<std::size_t>(n) + 1, "u")}})
            .cls("omega", {{1, {"u"}}});
    };
    auto t6 = fx::DocBuilder("T6", {{"x1", 1}, {"y1", 1}, {"x2", 1}, {"y2", 1}, {"x3", 1}, {"y3", 1}}, 6)
                  .cls("omega", {{1, {"x1", "y1"}}, {1, {"x2", "y2"}}, {1, {"x3", "y3"}}});
    auto cube = fx::DocBuilder("CP1^3", {{"a", 2}, {"b", 2}, {"c", 2}}, 6)
                    .relation({{1, {"a", "a"}}})
                    .relation({{1, {"b", "b"}}})
                    .relation({{1, {"c", "c"}}})
                    .cls("omega", {{1, {"a"}}, {1, {"b"}}, {1, {"c"}}});
    auto cpt = fx::DocBuilder("CP1xT2", {{"u", 2}, {"x", 1}, {"y", 1}}, 4)
                   .relation({{1, {"u", "u"}}})
                   .cls("omega", {{1, {"u"}}, {1, {"x", "y"}}});
    std::vector<TorusCase> out = {
        t2("T2 order 2", 2, {{-1, {"x"}}}, {{-1, {"y"}}}),
        t2("T2 order 3", 3, {{1, {"y"}}}, {{-1, {"x"}}, {-1, {"y"}}}),
        t2("T2 order 4", 4, {{1, {"y"}}}, {{-1, {"x"}}}),
        t2("T2 order 6", 6, {{1, {"x"}}, {1, {"y"}}}, {{-1, {"x"}}}),
        {"T2 trivial", fx::DocBuilder("T2", {{"x", 1}, {"y", 1}}, 2).cls("omega", {{1, {"x", "y"}}})},
        {"T4 trivial", t4},
        {"T4 swap", fx::DocBuilder(t4).action(2, {{"x1", {{1, {"x2"}}}},
                                                  {"y1", {{1, {"y2"}}}},
                                                  {"x2", {{1, {"x1"}}}},
                                                  {"y2", {{1, {"y1"}}}}})},
        {"T4 antipodal", fx::DocBuilder(t4).action(2, {{"x1", {{-1, {"x1"}}}},
                                                       {"y1", {{-1, {"y1"}}}},
                                                       {"x2", {{-1, {"x2"}}}},
                                                       {"y2", {{-1, {"y2"}}}}})},
        {"T4 rotation x swap", fx::DocBuilder(t4).action(4, {{"x1", {{1, {"y1"}}}},
                                                             {"y1", {{-1, {"x1"}}}},
                                                             {"x2", {{-1, {"x2"}}}},
                                                             {"y2", {{-1, {"y2"}}}}})},
        {"CP1xCP1 swap", fx::example2()},
        {"CP1 trivial", cp(1)},
        {"CP2 trivial", cp(2)},
        {"CP3 trivial", cp(3)},
        {"CP1xT2 rotation", fx::DocBuilder(cpt).action(4, {{"x", {{1, {"y"}}}}, {"y", {{-1, {"x"}}}}})},
        {"CP1^3 cyclic", fx::DocBuilder(cube).action(3, {{"a", {{1, {"b"}}}}, {"b", {{1, {"c"}}}}, {"c", {{1, {"a"}}}}})},
        {"T6 trivial", t6},
    };
    return out;
}

CoKahlerModel buildTorus(const TorusCase& t) {
    auto l = t.doc.load();
    auto h = l.presented.algebraPtr();
    auto g = l.action ? *l.action : GroupActionSpec::trivial(h);
    return mappingTorusAlgebra(h, g, l.namedClass("omega"));
}

void bettiRelationSuite(Checker& c) {
    int count = 0;
    for (const auto& t : mappingTorusCorpus()) {
        auto m = buildTorus(t);
        c.expect(m.n() <= 3, t.label + ": n > 3");
        auto r = bettiRelationChecks(m);
        c.expect(r.passed(), t.label + ": " + (r.firstFailure() ? r.firstFailure()->name : std::string{}));
        ++count;
    }
    c.expect(count >= 10, "corpus has fewer than 10 instances");
}

void torusCertificates(Checker& c) {
    for (int n = 0; n <= 2; ++n) {
        int k = 2 * n + 1;
        auto h = fx::torus(k);
        auto cert = maxExteriorRank(*h);
        c.expect(cert.r == k && verifyCertificate(*h, cert), "T" + std::to_string(k) + " certificate");
        auto r = trcCheck(*h);
        bool slack0 = r.passed() && !r.checks.empty() && r.checks.back().detail.ends_with("slack 0");
        c.expect(slack0, "T" + std::to_string(k) + " slack is not 0");
    }
    for (const auto& t : mappingTorusCorpus()) {
        auto m = buildTorus(t);
        auto cert = maxExteriorRank(m.algebra(), m.eta());
        c.expect(cert.r >= 1, t.label + ": r = 0");
        c.expect(!cert.witnesses.empty() && cert.witnesses.front() == m.eta(), t.label + ": eta not a witness");
        c.expect(verifyCertificate(m.algebra(), cert), t.label + ": certificate does not verify");
        c.expect(trcCheck(m.algebra(), m.eta()).passed(), t.label + ": trc check fails");
    }
    for (const auto& file : {"t2_rotation.alg", "example2.alg"}) {
        auto l = loadAlgebraFile(dataFile(file));
        int bound = toralRankBound(l.presented.algebra(), *l.action);
        c.expect(bound == 1, std::string(file) + ": toral rank bound " + std::to_string(bound));
        auto r = cli({"toral-bound", dataFile(file)});
        c.expect(r.status == 0, std::string(file) + ": toral-bound exit status " + std::to_string(r.status));
    }
}

void modelValidity(Checker& c) {
    struct Target {
        std::string label;
        AlgebraPtr h;
        int n;
    };
    std::vector<Target> targets = {
        {"CP1", fx::projective(1), 4},
        {"CP2", fx::projective(2), 6},
        {"CP3", fx::projective(3), 8},
        {"T2", fx::torus(2), 3},
        {"T3", fx::torus(3), 3},
        {"S3", fx::present("S3", {{"x", 3}}, {}, 3).algebraPtr(), 6},
        {"S2xS2", fx::share(tensorProduct(*fx::projective(1), *fx::projective(1, "w"))), 4},
        {"CP1xS1", fx::share(tensorProduct(*fx::projective(1), *fx::torus(1))), 4},
    };
    for (const auto& t : mappingTorusCorpus()) {
        if (t.label == "T2 order 4" || t.label == "CP1xCP1 swap" || t.label == "T2 order 3") {
            auto m = buildTorus(t);
            targets.push_back({t.label + " mapping torus", m.algebraPtr(), 2 * m.n() + 2});
        }
    }
    for (const auto& t : targets) {
        auto m = minimalModelOfFormal(t.h, t.n);
        auto s = checkSullivan(m.source);
        c.expect(s.passed(), t.label + ": " + (s.firstFailure() ? s.firstFailure()->name : std::string{}));
        auto q = verifyQuasiIso(m, t.n);
        c.expect(q.passed(), t.label + ": " + (q.firstFailure() ? q.firstFailure()->name : std::string{}));
        MinimalModelOptions o;
        o.seed = 97;
        auto other = minimalModelOfFormal(t.h, t.n, o);
        c.expect(verifyQuasiIso(other, t.n).passed(), t.label + ": seeded model not a quasi-isomorphism");
        c.expect(modelFingerprint(m.source, t.n) == modelFingerprint(other.source, t.n),
                 t.label + ": fingerprints differ");
        auto iso = findModelIsomorphism(m.source, other.source, t.n);
        c.expect(iso.status == Status::Pass && verifyModelIsomorphism(m.source, other.source, iso.images, t.n),
                 t.label + ": no confirmed isomorphism (" + iso.detail + ")");
    }
}

/// Random hard-Lefschetz base: products of CP^k and T^2 factors with a
/// random positive combination of their Kähler classes.
std::optional<CoKahlerModel> randomCoKahler(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> factors(1, 3), kind(0, 2), coeff(1, 3);
    int k = factors(rng);
    AlgebraPtr b;
    std::vector<std::pair<std::string, Scalar>> omega;
    int n = 0;
    for (int i = 0; i < k; ++i) {
        AlgebraPtr f;
        std::string tag = "f" + std::to_string(i);
        Scalar c = coeff(rng);
        switch (kind(rng)) {
        case 0:
            f = fx::projective(1, tag);
            omega.push_back({tag, c});
            n += 1;
            break;
        case 1:
            f = fx::projective(2, tag);
            omega.push_back({tag, c});
            n += 2;
            break;
        default:
            f = fx::present("T2" + tag, {{tag + "x", 1}, {tag + "y", 1}}, {}, 2).algebraPtr();
            omega.push_back({tag + "x*" + tag + "y", c});
            n += 1;
            break;
        }
        b = b ? fx::share(tensorProduct(*b, *f)) : f;
    }
    if (2 * b->dim() > 64)
        return std::nullopt;
    Element w;
    for (const auto& [name, c] : omega)
        w += c * basis(*b, name);
    return CoKahlerModel(b, w, n);
}

void engineInvariants(Checker& c) {
    std::mt19937_64 rng(31337);
    int built = 0;
    for (int i = 0; i < 40; ++i) {
        auto pa = fx::randomCdga(rng, 64);
        ++built;
        auto r = verifyAlgebraAxioms(*pa.cdga);
        c.expect(r.passed(), "random cdga " + std::to_string(i) + ": " +
                                 (r.firstFailure() ? r.firstFailure()->name : std::string{}));
    }
    std::uniform_int_distribution<int> coeff(-3, 3);
    int models = 0;
    while (models < 20) {
        auto m = randomCoKahler(rng);
        if (!m)
            continue;
        ++models;
        const auto& a = m->algebra();
        std::string label = "random model " + std::to_string(models) + " (" + m->base().name() + ")";
        auto r = verifyAlgebraAxioms(a);
        c.expect(r.passed(), label + ": axioms");
        // B ⊕ B -> M, (b, b') -> b⊗1 + η(b'⊗1) is bijective, so the split is unique
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < m->base().dim(); ++i) {
            auto b = m->embedBase(m->base().basisElement(i));
            auto e = a.multiply(m->eta(), b);
            for (const auto& x : {b, e}) {
                Vector v(a.dim());
                for (const auto& [j, s] : x.terms)
                    v[j] = s;
                cols.push_back(v);
            }
        }
        c.expect(Matrix::fromColumns(cols, a.dim()).rank() == a.dim(), label + ": split not unique");
        for (int t = 0; t < 10; ++t) {
            Element x;
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (int s = coeff(rng); s != 0)
                    x += Scalar(s) * a.basisElement(j);
            c.expect(contractXi(*m, contractXi(*m, x)).isZero(), label + ": iota^2 != 0");
            auto [base, withEta] = etaSplit(*m, x);
            c.expect(base + withEta == x, label + ": split does not add up");
            c.expect(contractXi(*m, base).isZero(), label + ": base part not killed by iota");
            c.expect(withEta == a.multiply(m->eta(), contractXi(*m, x)), label + ": eta part");
        }
        // ι is an odd derivation on basis pairs
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                auto x = a.basisElement(i), y = a.basisElement(j);
                auto lhs = contractXi(*m, a.multiply(x, y));
                auto rhs = a.multiply(contractXi(*m, x), y) +
                           Scalar(a.basis().degree(i) % 2 ? -1 : 1) * a.multiply(x, contractXi(*m, y));
                if (lhs != rhs) {
                    c.expect(false, label + ": iota not a derivation on " + a.basis().name(i) + ", " +
                                        a.basis().name(j));
                    i = a.dim();
                    break;
                }
            }
    }
    c.expect(built == 40 && models == 20, "construction count");
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "T2 rotation end-to-end", rotationEndToEnd},
        {2, "CP1xCP1 swap end-to-end", swapEndToEnd},
        {3, "hard Lefschetz discrimination", hardLefschetzDiscrimination},
        {4, "property B suite", propertyBSuite},
        {5, "Betti relations on mapping tori", bettiRelationSuite},
        {6, "toral rank certificates", torusCertificates},
        {7, "minimal model validity and uniqueness", modelValidity},
        {8, "randomized engine invariants", engineInvariants},
    };
    return all;
}

bool runCriterion(const Criterion& cr) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        cr.run(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= timeLimitSeconds)
        c.failures.push_back("exceeded the time limit");
    bool ok = c.failures.empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " ("
              << static_cast<long>(secs * 1000) << " ms)";
    if (!ok)
        std::cout << ": " << c.failures.front()
                  << (c.failures.size() > 1 ? " (+" + std::to_string(c.failures.size() - 1) + " more)" : "");
    std::cout << "\n";
    for (std::size_t i = 1; i < c.failures.size(); ++i)
        std::cerr << "  criterion " << cr.id << ": " << c.failures[i] << "\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance suite"};
    std::optional<int> only;
    app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);
    bool ok = true;
    for (const auto& cr : criteria())
        if (!only || *only == cr.id)
            ok = runCriterion(cr) && ok;
    return ok ? 0 : 1;
}
