#ifndef SCHMIDT_VERIFY_HPP
#define SCHMIDT_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/builders.hpp"
#include "schmidt/oracle.hpp"

namespace schmidt {

struct Mismatch {
    int qdeg = 0;
    ColorMonomial mono;
    Int lhs, rhs;
};

struct VerifyReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;  // effective, canonical order
    SeriesCaps caps;
    enum class Status { Pass, Fail, Skipped } status = Status::Pass;
    std::optional<Mismatch> mismatch;  // populated on Fail of a coefficient comparison
    std::string note;                  // skip reason, or informational
    long long violations = 0;          // bijection checks
    std::vector<Int> scalar;           // q-coefficients when the comparison is colorless
    long long elapsed_ms = 0;          // only reported under --timings

    bool passed() const { return status == Status::Pass; }
};

/* All registered identity ids, in canonical (registry) order; bijection
 * checks are registered under bij/... and participate in `all`. */
const std::vector<std::string>& registry_ids();
bool is_registered(const std::string& id);

/* Runs one identity or bijection check.  Unknown parameters or values
 * violating an identity's hypotheses throw ParameterError; combinations
 * that cannot terminate at the caps yield Status::Skipped with a reason. */
VerifyReport verify(const std::string& id, const std::map<std::string, std::string>& raw_params,
                    SeriesCaps caps, const ColorAssignment& assign = {});

/* Convenience for the CLI / acceptance suite: every registry entry at its
 * default parameters, in order (execution may be concurrent). */
std::vector<VerifyReport> verify_all(SeriesCaps caps, const ColorAssignment& assign = {},
                                     int jobs = 0);

/* The brute-force side of an equation identity. */
CountTable lhs_count_table(const std::string& id, const IdentityParams& params, SeriesCaps caps);

/* First divergent (q-degree, monomial) between two series, if any. */
std::optional<Mismatch> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

std::string report_text(const VerifyReport& r, bool with_timing = false);
std::string report_json_line(const VerifyReport& r, bool with_timing = false);
std::string reports_json(const std::vector<VerifyReport>& rs, bool with_timing = false);

}  // namespace schmidt

#endif
