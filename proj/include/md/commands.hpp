#pragma once

#include <optional>
#include <string>

#include "md/problem.hpp"

namespace md {

inline constexpr const char* kToolVersion = "1.0.0";

struct CommandResult {
    std::string body;   // deterministic report text
    bool exact = false;
    bool from_cache = false;
};

struct CacheConfig {
    bool enabled = true;
    std::string dir = ".mdcache";
};

// density | bounds | construct over a parsed problem file
CommandResult cmd_density(const ProblemFile& pf, const CacheConfig& cache = {});
CommandResult cmd_bounds(const ProblemFile& pf, const CacheConfig& cache = {});
CommandResult cmd_construct(const ProblemFile& pf, const CacheConfig& cache = {});

// certify a cosine polynomial given as "support=..." / "coefficients=..."
// (or "fejer=N") problem-file-style text
CommandResult cmd_certify(const std::string& text);

// cache primitives (line records, fingerprint-keyed, append-only)
std::optional<std::string> cache_lookup(const CacheConfig& cfg, std::uint64_t fingerprint,
                                        const std::string& command, const std::string& options);
void cache_store(const CacheConfig& cfg, std::uint64_t fingerprint, const std::string& command,
                 const std::string& options, const std::string& body);

std::string render_report(const DifferenceProblem& p, const DensityReport& rep);

}  // namespace md
