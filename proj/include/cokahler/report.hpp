#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cokahler {

enum class Status { Pass, Fail, Inconclusive, InputError };

std::string toString(Status s);

struct CheckEntry {
    std::string name;
    Status status = Status::Pass;
    std::string witness;  // empty when there is nothing to show
    std::string detail;
};

/// Result of any verification. Checks are kept in insertion order so the
/// rendering is deterministic.
struct Report {
    std::string command;
    std::vector<CheckEntry> checks;
    std::optional<std::vector<int>> betti;
    std::optional<std::string> model;  // embedded algebra document (JSON text)

    void add(std::string name, Status status, std::string witness = {}, std::string detail = {}) {
        checks.push_back({std::move(name), status, std::move(witness), std::move(detail)});
    }
    void add(std::string name, bool ok, std::string witness = {}, std::string detail = {}) {
        add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness), std::move(detail));
    }
    void append(const Report& other, const std::string& prefix = {});

    /// input-error beats fail beats inconclusive beats pass. Empty reports pass.
    Status verdict() const;
    bool passed() const { return verdict() == Status::Pass; }
    const CheckEntry* firstFailure() const;
};

}  // namespace cokahler
