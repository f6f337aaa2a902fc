#include "liouville/cli/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "liouville/integrate/integrate.hpp"
#include "liouville/syntax/parser.hpp"
#include "liouville/tower/builder.hpp"
#include "liouville/verify/verify.hpp"

namespace liouville {

namespace {

using json = nlohmann::ordered_json;

const char* const reserved_names[] = {"exp",    "log",    "ln",     "sin",    "cos", "tan",
                                      "cot",    "arcsin", "arccos", "arctan", "arccot", "i"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string caret_line(const std::string& text, std::size_t column) {
    return "  " + text + "\n  " + std::string(column > 0 ? column - 1 : 0, ' ') + "^";
}

std::string form_json_with(const Tower& t, const LiouvilleForm& form, const VerificationReport* rep) {
    json j = json::parse(form_json(t, form));
    if (rep) j["verification"] = json::parse(rep->to_json());
    return j.dump();
}

// The pipeline result for one integrand, before rendering.
struct Outcome {
    enum Kind { Elementary, NonElementary, Unsupported, ParseFailure, VerificationFailure } kind;
    std::string text;        // form, certificate summary or message
    std::string json;        // complete JSON object
    std::string diagnostics;
    bool numeric_ok = true;
};

Outcome evaluate(const RunConfig& config) {
    Outcome out{};
    try {
        const Expr e = parse(config.integrand);
        const BuiltTower b = build_tower(e, config.variable);
        IntegrationResult r = integrate(b.tower, b.elem);
        if (auto* c = std::get_if<Certificate>(&r)) {
            out.kind = Outcome::NonElementary;
            out.text = c->summary();
            out.json = certificate_json(*c);
            return out;
        }
        const auto& form = std::get<LiouvilleForm>(r);
        out.text = form_string(b.tower, form);
        if (!config.verify) {
            out.kind = Outcome::Elementary;
            out.json = form_json_with(b.tower, form, nullptr);
            return out;
        }
        VerificationReport rep = verify(b.tower, form, b.elem, config.interval);
        if (!rep.symbolic_ok) {
            out.kind = Outcome::VerificationFailure;
            out.text = "derivative of " + out.text + " does not reduce to the integrand";
            json j;
            j["status"] = "verification_failed";
            j["result"] = json::parse(form_json(b.tower, form));
            j["verification"] = json::parse(rep.to_json());
            out.json = j.dump();
            return out;
        }
        out.kind = Outcome::Elementary;
        out.numeric_ok = rep.numeric_ok();
        if (!out.numeric_ok) {
            for (const auto& s : rep.numeric_samples)
                if (!(s.abs_error < VerificationReport::tolerance)) {
                    std::ostringstream os;
                    os << "warning: numeric check on (" << s.lo << ", " << s.hi << ") differs by " << s.abs_error;
                    out.diagnostics = os.str();
                    break;
                }
        } else if (!rep.numeric_skipped.empty()) {
            out.diagnostics = "note: numeric check skipped, " + rep.numeric_skipped;
        }
        out.json = form_json_with(b.tower, form, &rep);
        return out;
    } catch (const ParseError& e) {
        out.kind = Outcome::ParseFailure;
        out.text = e.what();
        out.diagnostics = caret_line(config.integrand, e.column());
        json j;
        j["status"] = "error";
        j["message"] = e.message();
        j["column"] = e.column();
        out.json = j.dump();
    } catch (const SingularityError& e) {
        out.kind = Outcome::ParseFailure;
        out.text = e.what();
        json j;
        j["status"] = "error";
        j["message"] = e.what();
        out.json = j.dump();
    } catch (const UnsupportedError& e) {
        out.kind = Outcome::Unsupported;
        out.text = e.what();
        json j;
        j["status"] = "unsupported";
        j["message"] = e.what();
        out.json = j.dump();
    } catch (const PoleError& e) {
        out.kind = Outcome::Unsupported;
        out.text = e.what();
        json j;
        j["status"] = "unsupported";
        j["message"] = e.what();
        out.json = j.dump();
    }
    return out;
}

}  // namespace

void validate(const RunConfig& config) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    if (!std::regex_match(config.variable, ident))
        throw std::invalid_argument("invalid variable name '" + config.variable + "'");
    for (const char* r : reserved_names)
        if (config.variable == r) throw std::invalid_argument("variable name '" + config.variable + "' is reserved");
    if (config.interval && !(config.interval->first < config.interval->second))
        throw std::invalid_argument("interval needs lo < hi");
}

std::pair<double, double> parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("interval must be lo,hi");
    auto number = [](const std::string& s) {
        const std::string v = trim(s);
        std::size_t used = 0;
        double d = 0;
        try {
            d = std::stod(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (v.empty() || used != v.size() || !std::isfinite(d)) throw std::invalid_argument("bad interval bound '" + v + "'");
        return d;
    };
    std::pair<double, double> r{number(text.substr(0, comma)), number(text.substr(comma + 1))};
    if (!(r.first < r.second)) throw std::invalid_argument("interval needs lo < hi");
    return r;
}

RunOutcome run(const RunConfig& config) {
    if (config.corpus) return run_corpus(config);
    RunOutcome res;
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        res.exit_code = ExitUnsupported;
        res.output = config.output == OutputMode::Json ? json{{"status", "error"}, {"message", e.what()}}.dump() + "\n"
                                                       : std::string("error: ") + e.what() + "\n";
        return res;
    }
    const Outcome o = evaluate(config);
    switch (o.kind) {
        case Outcome::Elementary: res.exit_code = ExitElementary; break;
        case Outcome::NonElementary: res.exit_code = ExitNonElementary; break;
        case Outcome::Unsupported:
        case Outcome::ParseFailure: res.exit_code = ExitUnsupported; break;
        case Outcome::VerificationFailure: res.exit_code = ExitVerificationFailed; break;
    }
    if (config.output == OutputMode::Json) {
        res.output = o.json + "\n";
        if (!o.diagnostics.empty() && o.kind != Outcome::ParseFailure) res.diagnostics = o.diagnostics + "\n";
        return res;
    }
    switch (o.kind) {
        case Outcome::Elementary: res.output = o.text + "\n"; break;
        case Outcome::NonElementary: res.output = "non-elementary: " + o.text + "\n"; break;
        case Outcome::Unsupported: res.output = "unsupported: " + o.text + "\n"; break;
        case Outcome::ParseFailure: res.output = "error: " + o.text + "\n"; break;
        case Outcome::VerificationFailure: res.output = "internal error: " + o.text + "\n"; break;
    }
    if (!o.diagnostics.empty()) res.diagnostics = o.diagnostics + "\n";
    return res;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto semi = s.find(';', start);
            fields.push_back(trim(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (fields.size() < 2) throw CorpusError(line, "expected '<expr> ; elementary|non_elementary ; [expected]'");
        if (fields.size() > 3) throw CorpusError(line, "too many ';' separated fields");
        if (fields[0].empty()) throw CorpusError(line, "empty expression");
        CorpusEntry e;
        e.line = line;
        e.expr = fields[0];
        if (fields[1] == "elementary")
            e.elementary = true;
        else if (fields[1] == "non_elementary")
            e.elementary = false;
        else
            throw CorpusError(line, "verdict must be elementary or non_elementary, got '" + fields[1] + "'");
        if (fields.size() == 3) e.expected = fields[2];
        out.push_back(std::move(e));
    }
    return out;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, const RunConfig& config) {
    CorpusResult r;
    r.entry = entry;
    RunConfig c = config;
    c.integrand = entry.expr;
    c.corpus.reset();
    c.verify = true;
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = evaluate(c);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.detail = o.text;
    switch (o.kind) {
        case Outcome::Elementary: r.verdict = "elementary"; break;
        case Outcome::NonElementary: r.verdict = "non_elementary"; break;
        case Outcome::Unsupported: r.verdict = "unsupported"; break;
        case Outcome::ParseFailure: r.verdict = "error"; break;
        case Outcome::VerificationFailure: r.verdict = "verification_failed"; break;
    }
    const std::string want = entry.elementary ? "elementary" : "non_elementary";
    if (r.verdict != want) {
        r.reason = "expected " + want + ", got " + r.verdict;
    } else if (o.kind == Outcome::Elementary && !o.numeric_ok) {
        r.reason = o.diagnostics;
    } else if (!entry.expected.empty()) {
        if (entry.elementary && o.text != entry.expected) {
            r.reason = "expected form " + entry.expected;
        } else if (!entry.elementary) {
            const std::string kind = json::parse(o.json)["certificate"]["kind"].get<std::string>();
            if (kind != entry.expected && o.text != entry.expected) r.reason = "expected certificate " + entry.expected + ", got " + kind;
        }
    }
    r.pass = r.reason.empty();
    return r;
}

RunOutcome run_corpus(const RunConfig& config) {
    RunOutcome res;
    const bool as_json = config.output == OutputMode::Json;
    auto fail = [&](const std::string& msg) {
        res.exit_code = ExitUnsupported;
        res.output = as_json ? json{{"status", "error"}, {"message", msg}}.dump() + "\n" : "error: " + msg + "\n";
        return res;
    };
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
    std::ifstream in(*config.corpus);
    if (!in) return fail("cannot open corpus " + *config.corpus);
    std::vector<CorpusEntry> entries;
    try {
        entries = parse_corpus(in);
    } catch (const CorpusError& e) {
        return fail(e.what());
    }
    int passed = 0;
    std::ostringstream text;
    json rows = json::array();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const CorpusResult r = run_corpus_entry(entries[k], config);
        if (r.pass) ++passed;
        if (as_json) {
            json row;
            row["line"] = r.entry.line;
            row["expr"] = r.entry.expr;
            row["expected"] = r.entry.elementary ? "elementary" : "non_elementary";
            row["verdict"] = r.verdict;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            if (!r.pass) row["reason"] = r.reason;
            row["ms"] = r.millis;
            rows.push_back(std::move(row));
            continue;
        }
        char head[64];
        std::snprintf(head, sizeof head, "%3zu  %s  %8.2f ms  ", k + 1, r.pass ? "PASS" : "FAIL", r.millis);
        text << head << r.entry.expr << "\n        " << r.detail << "\n";
        if (!r.pass) text << "        line " << r.entry.line << ": " << r.reason << "\n";
    }
    const int failed = static_cast<int>(entries.size()) - passed;
    if (as_json) {
        json j;
        j["entries"] = std::move(rows);
        j["passed"] = passed;
        j["failed"] = failed;
        res.output = j.dump() + "\n";
    } else {
        text << entries.size() << " entries: " << passed << " passed, " << failed << " failed\n";
        res.output = text.str();
    }
    res.exit_code = failed == 0 ? ExitElementary : ExitNonElementary;
    return res;
}

}  // namespace liouville
