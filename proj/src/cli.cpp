#include "cokahler/cli.hpp"

#include "cokahler/derivations.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/sullivan.hpp"
#include "cokahler/toral_rank.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace cokahler {

namespace {

using ojson = nlohmann::ordered_json;

/// Cohomology of the document with its classes and action carried along.
/// A document with zero differential is its own cohomology.
struct CohomologyView {
    AlgebraPtr h;
    std::map<std::string, Element> classes;
    std::optional<GroupActionSpec> action;
    std::vector<int> dropped;

    const Element& namedClass(const std::string& label) const {
        auto it = classes.find(label);
        if (it == classes.end())
            throw InputError("classes." + label, "class '" + label + "' is not defined in the document");
        return it->second;
    }
    const GroupActionSpec& requireAction() const {
        if (!action)
            throw InputError("action", "this command needs a group action in the document");
        return *action;
    }
};

CohomologyView cohomologyView(const LoadedAlgebra& in) {
    CohomologyView v;
    if (in.cdga().isZeroDifferential()) {
        v.h = in.presented.algebraPtr();
        v.classes = in.classes;
        v.action = in.action;
        return v;
    }
    CohomologyRing ring = cohomology(in.presented.cdga);
    v.h = ring.algebraPtr();
    v.dropped = ring.droppedDegrees();
    for (const auto& [label, x] : in.classes) {
        try {
            v.classes[label] = ring.classOf(x);
        } catch (const std::invalid_argument&) {
            throw InputError("classes." + label, "class '" + label + "' is not a cocycle");
        }
    }
    if (in.action)
        v.action = inducedAction(ring, *in.action);
    return v;
}

CoKahlerModel coKahlerModelOf(const LoadedAlgebra& in, const CohomologyView& v, const CliOptions& o) {
    if (v.action && !v.classes.contains(o.eta))
        return mappingTorusAlgebra(v.h, *v.action, v.namedClass(o.omega));
    const Element& eta = v.namedClass(o.eta);
    const Element& omega = v.namedClass(o.omega);
    if (!in.cdga().isZeroDifferential())
        throw InputError("differential", "co-Kähler split needs a document with zero differential or an action");
    const auto& terms = in.document.classes.at(o.eta);
    if (terms.size() != 1 || terms.front().monomial.size() != 1)
        throw InputError("classes." + o.eta, "eta must be a multiple of a single generator");
    const std::string& etaGen = terms.front().monomial.front();
    std::vector<Element> base;
    for (std::size_t i = 0; i < in.document.generators.size(); ++i)
        if (in.document.generators[i].name != etaGen)
            base.push_back(in.presented.generatorElements[i]);
    CoKahlerModel model = coKahlerModelFromSplit(v.h, base, eta, omega);
    if (o.dim && *o.dim != model.n())
        throw InputError("dim", "document has formal dimension " + std::to_string(2 * model.n() + 1));
    return model;
}

int formalHalfDimension(const GradedAlgebra& h, const CliOptions& o) {
    if (o.dim)
        return *o.dim;
    if (!h.closed())
        throw InputError("dim", "algebra is not closed; pass --dim");
    if (h.topDegree() % 2 != 0)
        throw InputError("dim", "top degree " + std::to_string(h.topDegree()) + " is odd; pass --dim");
    return h.topDegree() / 2;
}

std::string formatBetti(const std::vector<int>& b) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

CommandResult dispatch(const AlgebraDocument& doc, const CliOptions& o) {
    const std::string& cmd = o.command;
    const bool modelDegree = cmd == "minimal-model" || cmd == "check-split";
    if (modelDegree && o.maxDegree && *o.maxDegree > doc.truncationDegree)
        throw InputError("max-degree", "degree " + std::to_string(*o.maxDegree) + " exceeds truncation_degree " +
                                           std::to_string(doc.truncationDegree));
    LoadedAlgebra in = loadAlgebra(doc, modelDegree ? std::nullopt : o.maxDegree);
    CommandResult res;
    Report& rep = res.report;
    rep.command = cmd;

    if (cmd == "check-axioms") {
        rep.append(verifyAlgebraAxioms(in.cdga()));
        if (in.action)
            rep.add("action is an automorphism of order " + std::to_string(in.action->order), Status::Pass);
        rep.betti = in.presented.algebra().betti();
        return res;
    }

    CohomologyView v = cohomologyView(in);
    if (cmd == "cohomology") {
        std::string detail;
        if (!v.dropped.empty())
            detail = "degree " + std::to_string(v.dropped.front()) + " dropped (truncation-unreliable)";
        rep.add("cohomology ring", Status::Pass, formatBetti(v.h->betti()), detail);
        rep.betti = v.h->betti();
        res.output = documentFromAlgebra(*v.h, v.classes, doc.name + "_H");
    } else if (cmd == "invariants") {
        const GroupActionSpec& g = v.requireAction();
        InvariantSubalgebra inv = invariantSubalgebra(v.h, g);
        std::string notIdempotent;
        for (int p = 0; p <= v.h->truncation() && notIdempotent.empty(); ++p) {
            Matrix pr = averagingProjector(g, p);
            if (!(pr * pr == pr))
                notIdempotent = "degree " + std::to_string(p);
        }
        rep.add("averaging projector is idempotent", notIdempotent.empty(), notIdempotent);
        rep.add("invariant subalgebra", Status::Pass, formatBetti(inv.algebra->betti()));
        rep.betti = inv.algebra->betti();
        Subalgebra sub{inv.algebra, inv.inclusion};
        std::map<std::string, Element> classes;
        for (const auto& [label, x] : v.classes) {
            try {
                classes[label] = sub.restrict(x);
            } catch (const std::invalid_argument&) {
            }
        }
        res.output = documentFromAlgebra(*inv.algebra, classes, doc.name + "_G");
    } else if (cmd == "check-kahler") {
        const Element& omega = v.namedClass(o.omega);
        int n = formalHalfDimension(*v.h, o);
        if (v.action) {
            rep.append(invariantKahlerCheck(v.h, *v.action, omega, n));
        } else {
            rep.append(hardLefschetzCheck(*v.h, omega, n).checks);
            rep.betti = v.h->betti();
        }
        if (!rep.betti)
            rep.betti = v.h->betti();
    } else if (cmd == "mapping-torus") {
        CoKahlerModel model = mappingTorusAlgebra(v.h, v.requireAction(), v.namedClass(o.omega));
        rep.add("co-Kähler model", Status::Pass, {},
                "omega^" + std::to_string(model.n()) + " * eta spans the top degree " + std::to_string(2 * model.n() + 1));
        rep.betti = model.algebra().betti();
        res.output = documentFromAlgebra(model.algebra(), {{"omega", model.omega()}, {"eta", model.eta()}},
                                         doc.name + "_phi");
    } else if (cmd == "check-cokahler-lefschetz") {
        CoKahlerModel model = coKahlerModelOf(in, v, o);
        rep.append(cokahlerLefschetzAll(model).checks);
        rep.betti = model.algebra().betti();
    } else if (cmd == "betti-relations") {
        CoKahlerModel model = coKahlerModelOf(in, v, o);
        rep.append(bettiRelationChecks(model));
        rep.betti = model.algebra().betti();
    } else if (cmd == "property-b") {
        rep.append(propertyBCheck(*v.h).report);
        rep.betti = v.h->betti();
    } else if (cmd == "trc") {
        std::optional<Element> preferred;
        if (v.classes.contains(o.eta))
            preferred = v.classes.at(o.eta);
        rep.append(trcCheck(*v.h, preferred));
        rep.betti = v.h->betti();
    } else if (cmd == "toral-bound") {
        const GroupActionSpec& g = v.requireAction();
        int alpha = alphaTilde1(*v.h, g);
        rep.add("fixed exterior rank of H^1", Status::Pass, std::to_string(alpha));
        rep.add("toral rank bound", Status::Pass, std::to_string(alpha + 1),
                alpha == 0 ? "rank 1: the Reeb flow closure is a circle" : std::string{});
        rep.betti = v.h->betti();
    } else if (cmd == "minimal-model") {
        int n = o.maxDegree.value_or(doc.truncationDegree);
        ModelMap m = minimalModelOfFormal(v.h, n);
        m.source.name = doc.name + "_model";
        rep.add("model", Status::Pass, m.source.format(), modelFingerprint(m.source, n).format());
        rep.append(verifyQuasiIso(m, n));
        res.output = documentFromPresentation(m.source.presentation(n));
        rep.betti = v.h->betti();
    } else if (cmd == "check-split") {
        CoKahlerModel model = coKahlerModelOf(in, v, o);
        int n = o.maxDegree.value_or(model.algebra().topDegree());
        rep.append(modelTensorSplitCheck(model, n));
    } else {
        throw InputError("command", "unknown command '" + cmd + "'");
    }
    return res;
}

Report inputErrorReport(const std::string& command, const std::string& where, const std::string& what) {
    Report r;
    r.command = command;
    r.add(where.empty() ? "input" : where, Status::InputError, {}, what);
    return r;
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError(path, "cannot write file");
    f << text;
}

}  // namespace

const std::vector<std::string>& commandNames() {
    static const std::vector<std::string> names{"check-axioms", "cohomology",   "invariants",
                                                "check-kahler", "mapping-torus", "check-cokahler-lefschetz",
                                                "betti-relations", "property-b", "trc",
                                                "toral-bound",  "minimal-model", "check-split"};
    return names;
}

CommandResult runCommand(const AlgebraDocument& doc, const CliOptions& options) {
    try {
        if (std::find(commandNames().begin(), commandNames().end(), options.command) == commandNames().end())
            throw InputError("command", "unknown command '" + options.command + "'");
        CommandResult res = dispatch(doc, options);
        if (res.output)
            res.report.model = serializeAlgebraDocument(*res.output);
        return res;
    } catch (const InputError& e) {
        return {inputErrorReport(options.command, e.where(), e.what()), std::nullopt};
    } catch (const std::invalid_argument& e) {
        return {inputErrorReport(options.command, {}, e.what()), std::nullopt};
    }
}

CommandResult runCommandOnFile(const std::string& path, const CliOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {inputErrorReport(options.command, path, "cannot open file"), std::nullopt};
    std::ostringstream ss;
    ss << in.rdbuf();
    AlgebraDocument doc;
    try {
        doc = parseAlgebraDocument(ss.str());
    } catch (const InputError& e) {
        return {inputErrorReport(options.command, e.where(), e.what()), std::nullopt};
    }
    return runCommand(doc, options);
}

int exitStatus(Status verdict) {
    switch (verdict) {
    case Status::Pass:
        return 0;
    case Status::Fail:
        return 1;
    case Status::InputError:
        return 2;
    case Status::Inconclusive:
        return 3;
    }
    return 2;
}

std::string renderText(const Report& r) {
    std::ostringstream os;
    os << r.command << ": " << toString(r.verdict()) << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << toString(c.status) << "] " << c.name;
        if (!c.detail.empty())
            os << " (" << c.detail << ")";
        if (!c.witness.empty())
            os << "\n      witness: " << c.witness;
        os << "\n";
    }
    if (r.betti)
        os << "  betti: " << formatBetti(*r.betti) << "\n";
    return os.str();
}

std::string renderStructured(const Report& r) {
    ojson root;
    root["command"] = r.command;
    root["verdict"] = toString(r.verdict());
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson e;
        e["name"] = c.name;
        e["status"] = toString(c.status);
        if (!c.witness.empty())
            e["witness"] = c.witness;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    root["checks"] = checks;
    if (r.betti)
        root["betti"] = *r.betti;
    if (r.model)
        root["model"] = ojson::parse(*r.model);
    return root.dump(2) + "\n";
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks on graded algebras, co-Kähler models and Sullivan models", "cokahler"};
    CliOptions o;
    std::string format = "text";
    std::string commands;
    for (const auto& c : commandNames())
        commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", o.command, "One of: " + commands)->required();
    app.add_option("input", o.input, "Algebra document");
    app.add_option("--out", o.out, "Write the produced algebra (or the structured report) to this path");
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--max-degree", o.maxDegree, "Degree bound, at most the document truncation");
    app.add_option("--omega", o.omega, "Label of the Kähler class");
    app.add_option("--eta", o.eta, "Label of the degree-1 class eta");
    app.add_option("--dim", o.dim, "Formal half-dimension n");
    app.add_option("--batch", o.batch, "Run on every .alg document of a directory");
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    o.structured = format == "structured";

    auto emit = [&](const Report& r, double ms) {
        std::string text = o.structured ? renderStructured(r) : renderText(r);
        out << text;
        if (!o.structured && ms >= 0)
            out << "  time: " << static_cast<long>(ms) << " ms\n";
    };

    if (o.batch) {
        std::vector<std::string> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(*o.batch, ec))
            if (entry.is_regular_file() && entry.path().extension() == ".alg")
                files.push_back(entry.path().string());
        if (ec) {
            err << "error: cannot read directory " << *o.batch << "\n";
            return 2;
        }
        std::sort(files.begin(), files.end());
        std::vector<std::future<CommandResult>> jobs;
        CliOptions single = o;
        single.out.reset();
        for (const auto& f : files)
            jobs.push_back(std::async(std::launch::async, [f, single] { return runCommandOnFile(f, single); }));
        Report summary;
        summary.command = o.command + " --batch";
        for (std::size_t i = 0; i < files.size(); ++i) {
            CommandResult r = jobs[i].get();
            const CheckEntry* first = r.report.firstFailure();
            summary.add(std::filesystem::path(files[i]).filename().string(), r.report.verdict(),
                        first ? first->name : std::string{});
        }
        if (o.structured && o.out)
            writeFile(*o.out, renderStructured(summary));
        else
            emit(summary, -1);
        return exitStatus(summary);
    }

    if (o.input.empty()) {
        err << "error: an input document is required\n";
        return 2;
    }
    auto start = std::chrono::steady_clock::now();
    CommandResult res = runCommandOnFile(o.input, o);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    try {
        if (o.out && res.output)
            writeFile(*o.out, serializeAlgebraDocument(*res.output));
        else if (o.out && o.structured)
            writeFile(*o.out, renderStructured(res.report));
    } catch (const InputError& e) {
        err << "error: " << e.where() << ": " << e.what() << "\n";
        return 2;
    }
    if (!(o.out && o.structured && !res.output))
        emit(res.report, ms);
    return exitStatus(res.report);
}

}  // namespace cokahler
