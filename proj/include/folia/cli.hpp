#pragma once

#include <string>
#include <utility>
#include <vector>

namespace folia {

/// Exit codes, stable per failure class.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitCertification = 4 };

/// Result of one sub-command: ordered key/value fields. Verdict fields read
/// "pass" or "fail"; any failed verdict makes the exit code 4.
struct CommandReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    int exitCode = kExitOk;
    bool json = false;
    /// Printed verbatim instead of the fields (help text).
    std::string preformatted;

    void add(std::string key, std::string value);
    void verdict(std::string key, bool ok);
    const std::string* find(const std::string& key) const;

    /// "key: value" lines; multi-line values are indented below their key.
    std::string text() const;
    std::string jsonText() const;
    std::string render() const { return json ? jsonText() : text(); }
};

/// Runs one sub-command; args excludes the program name. Never throws for
/// library errors: they become exit codes 2, 3 or 4 with an "error" field.
CommandReport runCommand(const std::vector<std::string>& args);

}  // namespace folia
