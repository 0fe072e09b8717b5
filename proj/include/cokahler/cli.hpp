#pragma once

#include "cokahler/document.hpp"
#include "cokahler/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cokahler {

struct CliOptions {
    std::string command;
    std::string input;
    std::optional<std::string> out;
    bool structured = false;
    std::optional<int> maxDegree;
    std::string omega = "omega";
    std::string eta = "eta";
    std::optional<int> dim;
    std::optional<std::string> batch;
};

const std::vector<std::string>& commandNames();

struct CommandResult {
    Report report;
    /// Algebra produced by the command (mapping torus, model, ...).
    std::optional<AlgebraDocument> output;
};

/// Runs one command on a parsed document. Invalid input is reported as an
/// input-error entry rather than thrown.
CommandResult runCommand(const AlgebraDocument& doc, const CliOptions& options);
CommandResult runCommandOnFile(const std::string& path, const CliOptions& options);

/// 0 pass, 1 fail, 2 input error, 3 inconclusive.
int exitStatus(Status verdict);
inline int exitStatus(const Report& r) { return exitStatus(r.verdict()); }

std::string renderText(const Report& r);
/// Deterministic JSON rendering (no timing information).
std::string renderStructured(const Report& r);

/// Whole command-line entry point; returns the process exit status.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cokahler
