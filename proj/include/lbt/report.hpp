// report.hpp -- the uniform shape every verifier reports in
#pragma once

#include <string>
#include <vector>

namespace lbt {

enum class ClaimStatus { pass, fail, inapplicable, capped };

const char* to_string(ClaimStatus s);

struct Claim {
    std::string name;
    ClaimStatus status = ClaimStatus::pass;
    std::string witness; // empty unless there is something to point at
};

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string note;
};

struct VerifierReport {
    std::string fixture;
    std::string operation;
    std::vector<Hypothesis> hypotheses;
    std::vector<Claim> claims;
    // named observations that are neither hypotheses nor pass/fail claims
    std::vector<std::pair<std::string, std::string>> info;

    bool hypotheses_met() const;
    bool any_failure() const;
    bool any_capped() const;
    // fail / capped / inapplicable / pass, in that priority order
    ClaimStatus overall() const;

    void claim(const std::string& name, bool ok, const std::string& witness = "");
    void hypothesis(const std::string& name, bool holds, const std::string& note = "");
    void note(const std::string& key, const std::string& value);
};

} // namespace lbt
