#pragma once

#include <string>
#include <vector>

#include "mzv/partial_values.hpp"

namespace mzv {

enum class SingularityTier { candidate, cancelled_by_gamma_zero, genuine };

const char* tier_name(SingularityTier tier);

/// One candidate singular hyperplane s_T = value, with the family it came
/// from (S1/S2/S3) and the witnessing indices.
struct SingularityEntry {
    Rational sT;
    std::string source;  // "S1", "S2" or "S3"
    SingularityTier tier;
    std::vector<long long> ell; // witnessing l (S1/S2) or k (S3)
    long long t = 0;            // witnessing shift (S1/S2 only)

    std::string witness_json() const;
};

struct SingularityReport {
    std::vector<SingularityEntry> entries; // sorted by s_T descending

    std::string json() const;
};

/// Enumerates the three hyperplane families within the window, solving each
/// integrality condition for s_T; indices range over 0..max_index. Candidates
/// at nonpositive integers are cancelled by the 1/Gamma(s_T) zero; the tier
/// "genuine" is only assigned where a pole is actually established
/// (d = 1, a = (0, 1): s_T = 1).
SingularityReport candidate_hyperplanes(const ProblemSpec& spec, const Rational& lo,
                                        const Rational& hi, int max_index);

/// True iff s_T avoids every non-cancelled candidate hyperplane; nonpositive
/// integers are always regular.
bool is_regular_point(const ProblemSpec& spec, const Rational& sT, int max_index = 64);

/// Nonpositive integer points are never singular.
bool is_regular_point(const ProblemSpec& spec, const EvalPoint& point);

} // namespace mzv
