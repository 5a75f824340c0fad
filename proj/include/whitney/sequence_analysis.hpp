#pragma once

#include "whitney/bigint.hpp"
#include "whitney/families.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace whitney {

/// Concrete evidence that a predicate fails. For the log-concavity kinds the
/// triple is (seq[k-1], seq[k], seq[k+1]) at the failing interior index k.
/// For "unimodal" the triple is (highest value seen before the valley, the
/// valley value, the value rising again) and k indexes the rising value.
struct SequenceViolation {
    std::string kind;  // "unimodal" | "log_concave" | "strict_log_concave"
    std::size_t index = 0;
    std::array<BigNat, 3> triple;
};

struct PredicateResult {
    bool holds = true;
    std::optional<SequenceViolation> witness;
};

/// True iff the sequence weakly rises then weakly falls.
PredicateResult is_unimodal(std::span<const BigNat> seq);

/// Checks seq[k]^2 >= seq[k-1] * seq[k+1] (strictly > when strict) for every
/// interior index 1 <= k <= len-2.
PredicateResult is_log_concave(std::span<const BigNat> seq, bool strict);

struct ConjectureReport {
    FamilySpec instance;
    bool unimodal = false;
    bool log_concave = false;
    bool strictly_log_concave = false;
    std::optional<SequenceViolation> first_violation;
};

/// Evaluates every fence with n <= max_cardinality and every crown with
/// 2n <= max_cardinality, tables computed through the closed forms. Reports
/// are ordered fences first, then crowns, parameters ascending.
std::vector<ConjectureReport> conjecture_sweep(unsigned max_cardinality);

struct SweepSummary {
    bool conjecture_holds = true;  // fences (n != 3) log-concave, crowns (n >= 4) strictly
    std::size_t instances = 0;
    std::size_t conjecture_cases = 0;
    std::vector<std::string> notes;     // known exceptions and out-of-scope facts
    std::vector<std::string> failures;  // violations inside the conjecture's range
};

SweepSummary summarize_conjecture(const std::vector<ConjectureReport>& reports);

}  // namespace whitney
