#include "cokahler/document.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace cokahler {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

void requireKeys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object())
        throw InputError(where, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items())
        if (!ok.contains(key))
            throw InputError(where.empty() ? key : where + "." + key, "unknown field");
}

const json& required(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError(where.empty() ? std::string(key) : where + "." + key, "missing field");
    return *it;
}

int integerField(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw InputError(where, "expected an integer");
    return v.get<int>();
}

std::string stringField(const json& v, const std::string& where) {
    if (!v.is_string())
        throw InputError(where, "expected a string");
    return v.get<std::string>();
}

TermList parseTerms(const json& v, const std::string& where) {
    if (!v.is_array())
        throw InputError(where, "expected an array of terms");
    TermList terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string at = where + "[" + std::to_string(i) + "]";
        requireKeys(v[i], at, {"coeff", "monomial"});
        const json& c = required(v[i], at, "coeff");
        if (!c.is_string())
            throw InputError(at + ".coeff", "non-rational coefficient: expected a string \"p\" or \"p/q\"");
        Term t;
        try {
            t.coeff = parseScalar(c.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(at + ".coeff", e.what());
        }
        const json& m = required(v[i], at, "monomial");
        if (!m.is_array())
            throw InputError(at + ".monomial", "expected an array of generator names");
        for (std::size_t k = 0; k < m.size(); ++k)
            t.monomial.push_back(stringField(m[k], at + ".monomial[" + std::to_string(k) + "]"));
        terms.push_back(std::move(t));
    }
    return terms;
}

std::map<std::string, TermList> parseTermMap(const json& v, const std::string& where) {
    if (!v.is_object())
        throw InputError(where, "expected an object");
    std::map<std::string, TermList> out;
    for (const auto& [key, value] : v.items())
        out[key] = parseTerms(value, where + "." + key);
    return out;
}

ojson termsToJson(const TermList& terms) {
    ojson arr = ojson::array();
    for (const auto& t : terms)
        arr.push_back(ojson{{"coeff", toString(t.coeff)}, {"monomial", t.monomial}});
    return arr;
}

std::pair<std::size_t, std::size_t> lineColumn(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

TermList normalized(const FreeAlgebra& f, const TermList& terms, const std::string& field) {
    return toTerms(f, toPolynomial(f, terms, field));
}

}  // namespace

FreePolynomial toPolynomial(const FreeAlgebra& f, const TermList& terms, const std::string& field) {
    FreePolynomial out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<std::size_t> word;
        for (const auto& name : terms[i].monomial) {
            auto g = f.find(name);
            if (!g)
                throw InputError(field + "[" + std::to_string(i) + "].monomial", "undeclared generator '" + name + "'");
            word.push_back(*g);
        }
        for (const auto& [m, c] : f.product(word)) {
            Scalar& slot = out[m];
            slot += terms[i].coeff * c;
            if (slot == 0)
                out.erase(m);
        }
    }
    return out;
}

TermList toTerms(const FreeAlgebra& f, const FreePolynomial& p) {
    TermList out;
    for (const auto& [m, c] : p) {
        if (c == 0)
            continue;
        Term t{c, {}};
        for (std::size_t j = 0; j < m.size(); ++j)
            for (int e = 0; e < m[j]; ++e)
                t.monomial.push_back(f.generators()[j].name);
        out.push_back(std::move(t));
    }
    return out;
}

AlgebraDocument parseAlgebraDocument(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = lineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
    }
    requireKeys(root, "", {"name", "coefficient_field", "truncation_degree", "generators", "relations", "differential",
                           "classes", "action"});
    AlgebraDocument doc;
    if (root.contains("name"))
        doc.name = stringField(root["name"], "name");
    if (root.contains("coefficient_field")) {
        doc.coefficientField = stringField(root["coefficient_field"], "coefficient_field");
        if (doc.coefficientField != "Q")
            throw InputError("coefficient_field", "only \"Q\" is supported");
    }
    doc.truncationDegree = integerField(required(root, "", "truncation_degree"), "truncation_degree");
    if (doc.truncationDegree < 0)
        throw InputError("truncation_degree", "must be non-negative");

    const json& gens = required(root, "", "generators");
    if (!gens.is_array())
        throw InputError("generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string at = "generators[" + std::to_string(i) + "]";
        requireKeys(gens[i], at, {"name", "degree"});
        doc.generators.push_back({stringField(required(gens[i], at, "name"), at + ".name"),
                                  integerField(required(gens[i], at, "degree"), at + ".degree")});
    }
    FreeAlgebra f;
    try {
        f = FreeAlgebra(doc.generators);
    } catch (const InputError& e) {
        throw InputError("generators", e.what());
    }

    if (root.contains("relations")) {
        const json& rels = root["relations"];
        if (!rels.is_array())
            throw InputError("relations", "expected an array of term lists");
        for (std::size_t i = 0; i < rels.size(); ++i) {
            std::string at = "relations[" + std::to_string(i) + "]";
            doc.relations.push_back(normalized(f, parseTerms(rels[i], at), at));
        }
    }
    if (root.contains("differential"))
        for (auto& [gen, terms] : parseTermMap(root["differential"], "differential")) {
            if (!f.find(gen))
                throw InputError("differential." + gen, "undeclared generator '" + gen + "'");
            TermList t = normalized(f, terms, "differential." + gen);
            if (!t.empty())
                doc.differential[gen] = std::move(t);
        }
    if (root.contains("classes"))
        for (auto& [label, terms] : parseTermMap(root["classes"], "classes"))
            doc.classes[label] = normalized(f, terms, "classes." + label);
    if (root.contains("action")) {
        const json& a = root["action"];
        requireKeys(a, "action", {"order", "images"});
        ActionDocument act;
        act.order = integerField(required(a, "action", "order"), "action.order");
        if (act.order < 1)
            throw InputError("action.order", "must be at least 1");
        if (a.contains("images"))
            for (auto& [gen, terms] : parseTermMap(a["images"], "action.images")) {
                if (!f.find(gen))
                    throw InputError("action.images." + gen, "undeclared generator '" + gen + "'");
                act.images[gen] = normalized(f, terms, "action.images." + gen);
            }
        doc.action = std::move(act);
    }
    return doc;
}

std::string serializeAlgebraDocument(const AlgebraDocument& doc) {
    ojson root;
    root["name"] = doc.name;
    root["coefficient_field"] = doc.coefficientField;
    root["truncation_degree"] = doc.truncationDegree;
    ojson gens = ojson::array();
    for (const auto& g : doc.generators)
        gens.push_back(ojson{{"name", g.name}, {"degree", g.degree}});
    root["generators"] = gens;
    ojson rels = ojson::array();
    for (const auto& r : doc.relations)
        rels.push_back(termsToJson(r));
    root["relations"] = rels;
    ojson diff = ojson::object();
    for (const auto& g : doc.generators) {
        auto it = doc.differential.find(g.name);
        if (it != doc.differential.end() && !it->second.empty())
            diff[g.name] = termsToJson(it->second);
    }
    root["differential"] = diff;
    ojson classes = ojson::object();
    for (const auto& [label, terms] : doc.classes)
        classes[label] = termsToJson(terms);
    root["classes"] = classes;
    if (doc.action) {
        ojson images = ojson::object();
        for (const auto& g : doc.generators) {
            auto it = doc.action->images.find(g.name);
            if (it != doc.action->images.end())
                images[g.name] = termsToJson(it->second);
        }
        root["action"] = ojson{{"order", doc.action->order}, {"images", images}};
    }
    return root.dump(2) + "\n";
}

const Element& LoadedAlgebra::namedClass(const std::string& label) const {
    auto it = classes.find(label);
    if (it == classes.end())
        throw InputError("classes." + label, "class '" + label + "' is not defined in the document");
    return it->second;
}

LoadedAlgebra loadAlgebra(const AlgebraDocument& doc, std::optional<int> maxDegree) {
    LoadedAlgebra out;
    out.document = doc;
    FreeAlgebra f(doc.generators);

    Presentation p;
    p.name = doc.name;
    p.generators = doc.generators;
    p.truncation = doc.truncationDegree;
    if (maxDegree) {
        if (*maxDegree > doc.truncationDegree)
            throw InputError("max-degree", "degree " + std::to_string(*maxDegree) + " exceeds truncation_degree " +
                                               std::to_string(doc.truncationDegree));
        if (*maxDegree < 0)
            throw InputError("max-degree", "must be non-negative");
        p.truncation = *maxDegree;
    }
    for (std::size_t i = 0; i < doc.relations.size(); ++i) {
        std::string at = "relations[" + std::to_string(i) + "]";
        FreePolynomial r = toPolynomial(f, doc.relations[i], at);
        std::optional<int> deg;
        try {
            deg = f.degree(r);
        } catch (const InputError& e) {
            throw InputError(at, e.what());
        }
        if (maxDegree && deg && *deg > p.truncation && *deg <= doc.truncationDegree)
            continue;
        p.relations.push_back(std::move(r));
    }
    p.differential.resize(f.size());
    for (const auto& [gen, terms] : doc.differential)
        p.differential[*f.find(gen)] = toPolynomial(f, terms, "differential." + gen);
    out.presented = buildFromPresentation(p);
    const GradedAlgebra& a = out.presented.algebra();

    for (const auto& [label, terms] : doc.classes) {
        FreePolynomial poly = toPolynomial(f, terms, "classes." + label);
        try {
            f.degree(poly);
        } catch (const InputError& e) {
            throw InputError("classes." + label, e.what());
        }
        out.classes[label] = out.presented.evaluate(poly);
    }

    if (doc.action) {
        std::vector<Element> genImages;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& g = doc.generators[i];
            auto it = doc.action->images.find(g.name);
            if (it == doc.action->images.end()) {
                genImages.push_back(out.presented.generatorElements[i]);
                continue;
            }
            std::string at = "action.images." + g.name;
            FreePolynomial poly = toPolynomial(f, it->second, at);
            std::optional<int> deg;
            try {
                deg = f.degree(poly);
            } catch (const InputError& e) {
                throw InputError(at, e.what());
            }
            if (deg && *deg != g.degree)
                throw InputError(at, "image must have degree " + std::to_string(g.degree));
            genImages.push_back(out.presented.evaluate(poly));
        }
        GroupActionSpec spec;
        spec.order = doc.action->order;
        spec.generator.source = out.presented.algebraPtr();
        spec.generator.target = out.presented.algebraPtr();
        for (std::size_t i = 0; i < a.dim(); ++i)
            spec.generator.images.push_back(
                out.presented.evaluateWith(FreePolynomial{{out.presented.basisMonomials[i], Scalar(1)}}, genImages, a));
        try {
            validateAction(spec, out.presented.cdga.get());
        } catch (const InputError& e) {
            throw InputError("action", e.what());
        }
        out.action = std::move(spec);
    }
    return out;
}

LoadedAlgebra loadAlgebraFile(const std::string& path, std::optional<int> maxDegree) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    AlgebraDocument doc;
    try {
        doc = parseAlgebraDocument(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.where(), e.what());
    }
    return loadAlgebra(doc, maxDegree);
}

AlgebraDocument documentFromPresentation(const Presentation& p, const std::map<std::string, FreePolynomial>& classes) {
    FreeAlgebra f(p.generators);
    AlgebraDocument doc;
    doc.name = p.name;
    doc.truncationDegree = p.truncation;
    doc.generators = p.generators;
    for (const auto& r : p.relations)
        if (!r.empty())
            doc.relations.push_back(toTerms(f, r));
    for (std::size_t i = 0; i < p.differential.size() && i < p.generators.size(); ++i)
        if (!p.differential[i].empty())
            doc.differential[p.generators[i].name] = toTerms(f, p.differential[i]);
    for (const auto& [label, poly] : classes)
        doc.classes[label] = toTerms(f, poly);
    return doc;
}

AlgebraDocument documentFromAlgebra(const GradedAlgebra& h, const std::map<std::string, Element>& classes,
                                    const std::string& name) {
    AlgebraPresentation ap = presentationOf(h, name);
    std::map<std::string, FreePolynomial> lifted;
    for (const auto& [label, x] : classes)
        lifted[label] = ap.lift(h, x);
    return documentFromPresentation(ap.presentation, lifted);
}

}  // namespace cokahler
