#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/dataset.hpp"

namespace quintic {

/// Outcome of one check on one row. `expected` and `computed` are rendered
/// for the report; failures are data, not errors.
struct CheckResult {
    int row_no = 0;
    std::int64_t D = 0;
    std::string check;
    bool pass = true;
    std::string expected;
    std::string computed;
};

struct VerificationReport {
    std::vector<CheckResult> results;  // rows x checks, row-major
    int rows = 0;
    int checks_per_row = 0;
    int failures = 0;

    std::vector<CheckResult> failed() const;
};

/// Names of the per-row checks, in the order they run.
const std::vector<std::string>& verification_check_names();

/// Cross-checks every computable column of the dataset: species, conductor,
/// multiplicity, the Parry and Kobayashi valuation identities, membership of
/// the recorded type in the admissible set, the eligibility pattern, the
/// Polya annotations, and two unit-index constraints (V_N = 0 forces E = 5
/// with type epsilon or theta; E = 0 never occurs).
VerificationReport verify_dataset(const std::vector<FieldRecord>& records);

/// Known Polya verdicts for specific radicands: the prime-radicand dichotomy
/// plus the worked prime-conductor families up to D < 1000. Used to check
/// polya_decision(A = T) against independent statements.
struct PolyaAnnotation {
    std::int64_t D;
    DpfTypeName type;
    bool polya;
};

const std::vector<PolyaAnnotation>& polya_annotations();

/// Annotation lookup for one radicand (dataset rows carry at most one).
std::optional<PolyaAnnotation> polya_annotation_for(std::int64_t D);

std::string format_report(const VerificationReport& report);

}  // namespace quintic
