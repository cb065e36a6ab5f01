#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asailab/asai.hpp"

namespace asailab {

using Json = nlohmann::ordered_json;

// A parsed run specification: named fields (square-root adjunction chains
// over the base), characters (level, generator images, uniformizer value),
// representations, and an optional command list.
struct RunSpec {
    long long prime = 3;
    int precision = 8;
    FieldPtr base;
    std::map<std::string, FieldPtr> fields;  // includes "F" = base
    std::map<std::string, SmoothChar> characters;
    std::map<std::string, GL2Rep> representations;
    std::vector<std::string> commands;
};

RunSpec parse_runspec(const Json& doc);
RunSpec load_runspec(const std::string& path);

// Canonical serializations (sorted roots, reduced fractions as strings),
// with exact-round-trip readers.
Json json_of(const ExactValue& v);
Json json_of(const EulerFactor& f);
ExactValue exact_value_from_json(const Json& j);
EulerFactor euler_factor_from_json(const Json& j);

// --- command execution -------------------------------------------------------

struct RunOptions {
    bool json = false;
    std::string target;  // empty = all applicable objects
    std::uint64_t unit_budget = kDefaultUnitBudget;
    std::uint64_t degree8_budget = 256;
    int verify_level = 2;
    int hilbert_samples = 2000;
    std::uint64_t seed = 0;
};

struct RunOutcome {
    int failures = 0;
    Json document;     // full canonical JSON (one object per command run)
    std::string text;  // human rendering
};

// command in {classify, lw, las, l1, twists, check-egal, distinguished,
// verify, run}; "run" executes the spec's own command list.
RunOutcome run_command(const RunSpec& spec, const std::string& command, const RunOptions& opt);

// --- corpus sweep -------------------------------------------------------------

struct CorpusOptions {
    std::vector<long long> primes{3, 5, 7};
    int precision = 8;
    std::uint64_t seed = 1;
    int max_level = 2;
    int instances_per_field = 60;  // approximate, split over the three shapes
    std::uint64_t unit_budget = kDefaultUnitBudget;
    std::uint64_t degree8_budget = 256;
};

struct CorpusStats {
    std::uint64_t candidates = 0;       // sampled parameter tuples
    std::uint64_t admissible = 0;       // accepted representations
    std::uint64_t egal_failures = 0;
    std::uint64_t divides_failures = 0;
    std::uint64_t simplepoles_failures = 0;
    std::uint64_t lcusp_failures = 0;
    std::uint64_t exclusivity_failures = 0;
    std::uint64_t pole_at_zero_failures = 0;
    std::uint64_t dihedral = 0, steinberg = 0, principal = 0;
    std::uint64_t nongalois_reduced = 0, nongalois_failed = 0;
    std::uint64_t budget_skipped = 0;  // instances dropped by enumeration budgets
    std::vector<std::string> violations;  // instance ids with the failed check

    std::uint64_t total_failures() const {
        return egal_failures + divides_failures + simplepoles_failures + lcusp_failures +
               exclusivity_failures + pole_at_zero_failures;
    }
};

CorpusStats run_corpus(const CorpusOptions& opt, Json* document);

std::string corpus_text_summary(const CorpusOptions& opt, const CorpusStats& stats);

}  // namespace asailab
