#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liouville {

enum ExitCode : int {
    ExitElementary = 0,
    ExitNonElementary = 1,
    ExitUnsupported = 2,
    ExitVerificationFailed = 3,
};

enum class OutputMode { Text, Json };

struct RunConfig {
    std::string integrand;
    std::string variable = "x";
    OutputMode output = OutputMode::Text;
    bool verify = true;
    std::optional<std::pair<double, double>> interval;
    std::optional<std::string> corpus;
};

/// Throws std::invalid_argument for a bad variable name or interval.
void validate(const RunConfig& config);

/// "lo,hi" with lo < hi.
std::pair<double, double> parse_interval(const std::string& text);

struct RunOutcome {
    int exit_code = ExitElementary;
    std::string output;       // stdout
    std::string diagnostics;  // stderr, possibly empty
};

/// Integrates config.integrand. Output is the Liouville form, the
/// certificate summary prefixed with "non-elementary: ", or an
/// "unsupported: " / "error: " message; JSON mode emits one object.
RunOutcome run(const RunConfig& config);

class CorpusError : public std::runtime_error {
public:
    CorpusError(int line, const std::string& message)
        : std::runtime_error("corpus line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// `<expr> ; elementary|non_elementary ; [expected]` per line, `#` starts a
/// comment line. For elementary entries `expected` is the rendered form,
/// for non-elementary ones a certificate kind such as risch_ode_unsolvable.
struct CorpusEntry {
    int line = 0;
    std::string expr;
    bool elementary = true;
    std::string expected;
};

/// Throws CorpusError naming the first malformed line.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

struct CorpusResult {
    CorpusEntry entry;
    bool pass = false;
    std::string verdict;  // elementary, non_elementary, unsupported or error
    std::string detail;   // rendered form, certificate summary or message
    std::string reason;   // why the entry failed
    double millis = 0;
};

CorpusResult run_corpus_entry(const CorpusEntry& entry, const RunConfig& config);

/// Runs every entry of config.corpus; exit 0 iff all pass, 1 if any fails,
/// 2 if the file cannot be read or is malformed.
RunOutcome run_corpus(const RunConfig& config);

}  // namespace liouville
