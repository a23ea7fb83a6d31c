#pragma once

// Verification outcome with witnesses.  All failures are collected (up to a
// cap), not just the first: algebra authors need the full picture.

#include <string>
#include <vector>

#include "hly/linalg.hpp"

namespace hly {

struct Failure {
    std::string identity;        // which identity was violated
    std::vector<int> where;      // basis index tuple
    Vec residual;                // left-hand side minus right-hand side at that tuple
};

struct IdentityReport {
    std::vector<Failure> failures;
    bool truncated = false;
    int cap = 32;

    bool ok() const { return failures.empty() && !truncated; }

    void add(std::string identity, std::vector<int> where, Vec residual) {
        if (int(failures.size()) >= cap) {
            truncated = true;
            return;
        }
        failures.push_back({std::move(identity), std::move(where), std::move(residual)});
    }

    void merge(const IdentityReport& other) {
        for (const auto& f : other.failures) add(f.identity, f.where, f.residual);
        truncated = truncated || other.truncated;
    }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s = "failed:";
        for (const auto& f : failures) {
            s += " " + f.identity + "(";
            for (size_t i = 0; i < f.where.size(); ++i) s += (i ? "," : "") + std::to_string(f.where[i]);
            s += ")";
        }
        if (truncated) s += " ...";
        return s;
    }
};

// Thrown when a construction's precondition fails; carries the witness report.
struct PreconditionError : EngineError {
    IdentityReport report;
    PreconditionError(const std::string& what, IdentityReport r)
        : EngineError(what + ": " + r.summary()), report(std::move(r)) {}
};

}  // namespace hly
