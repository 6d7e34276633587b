#pragma once

// Verification suites: randomized and exhaustive checks of the identities the
// library implements, reported as JSON.

#include "dahakit/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dahakit {

struct DatumSpec {
    char type = 'A';
    int rank = 1;
    Flavor flavor = Flavor::simply_connected;

    std::string name() const;
    RootDatumPtr build() const { return RootDatum::build(type, rank, flavor); }
    friend bool operator==(const DatumSpec&, const DatumSpec&) = default;
};

/// Parses lists such as "A1..A4,B2..B4,D4,G2". A suffix ":adj" selects the
/// adjoint flavor and ":both" both flavors. Throws std::invalid_argument.
std::vector<DatumSpec> parse_type_list(const std::string& text);

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    /// 0 means hardware concurrency, further capped by DAHAKIT_THREADS.
    unsigned threads = 0;
};

struct CheckResult {
    std::string name;
    std::string datum;
    long samples = 0;
    bool pass = true;
    std::optional<Json> counterexample;
    std::uint64_t seed = 0;
    double seconds = 0;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<std::string> data;
    std::vector<CheckResult> checks;  // ordered by (name, datum)
    Json notes = Json::object();
    double seconds = 0;

    bool pass() const;
    /// Durations are left out unless `timings` is set, so equal seeds give
    /// byte-identical output.
    Json to_json(bool timings) const;
};

const std::vector<std::string>& suite_names();
std::vector<DatumSpec> default_types(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite name. "all" runs every
/// suite, each on its own default types unless `types` is given.
VerifyReport run_suite(const std::string& suite, const std::optional<std::vector<DatumSpec>>& types,
                       const VerifyOptions& options);

}  // namespace dahakit
