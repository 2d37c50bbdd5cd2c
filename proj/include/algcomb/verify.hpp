#pragma once

#include <functional>
#include <string>
#include <vector>

namespace algcomb {

enum class VerifyLevel { Quick, Full };

enum class CheckStatus {
    Pass,
    Fail,
    Documented,  // failed only on a recorded discrepancy with the published value
};

const char* status_name(CheckStatus s);

struct SubCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<SubCheck> checks;
    double seconds = 0;

    /// Fail if any sub-check failed, else Documented if any is documented.
    CheckStatus status() const;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::Quick;
    std::vector<CriterionResult> criteria;

    /// True unless some criterion has an undocumented failure.
    bool ok() const;
};

inline constexpr int kCriterionCount = 11;

/// Runs acceptance criterion `id` (1..11). Exceptions thrown by the modules
/// become failed sub-checks.
CriterionResult run_criterion(int id, VerifyLevel level, int threads = 1);

/// Every criterion in order; `on_result` sees each one as it finishes.
VerifyReport verify_all(VerifyLevel level, int threads = 1,
                        const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace algcomb
