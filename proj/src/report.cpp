#include "cokahler/report.hpp"

namespace cokahler {

std::string toString(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Inconclusive:
        return "inconclusive";
    case Status::InputError:
        return "input-error";
    }
    return "unknown";
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        CheckEntry e = c;
        if (!prefix.empty())
            e.name = prefix + e.name;
        checks.push_back(std::move(e));
    }
}

Status Report::verdict() const {
    bool fail = false, inconclusive = false;
    for (const auto& c : checks) {
        if (c.status == Status::InputError)
            return Status::InputError;
        fail |= c.status == Status::Fail;
        inconclusive |= c.status == Status::Inconclusive;
    }
    if (fail)
        return Status::Fail;
    return inconclusive ? Status::Inconclusive : Status::Pass;
}

const CheckEntry* Report::firstFailure() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail)
            return &c;
    return nullptr;
}

}  // namespace cokahler
