// One line per acceptance criterion; sub-checks are indented below it.
// Exits nonzero when any criterion fails outside a recorded discrepancy.
#include <cstdio>
#include <cstring>

#include "algcomb/parallel.hpp"
#include "algcomb/verify.hpp"

int main(int argc, char** argv) {
    using namespace algcomb;
    VerifyLevel level = VerifyLevel::Full;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) level = VerifyLevel::Quick;
    const VerifyReport report = verify_all(level, thread_count(), [](const CriterionResult& r) {
        std::printf("criterion %2d %-15s %s (%.1f s)\n", r.id, status_name(r.status()), r.title.c_str(), r.seconds);
        for (const auto& c : r.checks)
            std::printf("    %-15s %s%s%s\n", status_name(c.status), c.name.c_str(), c.detail.empty() ? "" : ": ",
                        c.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("acceptance %s\n", report.ok() ? "OK" : "FAILED");
    return report.ok() ? 0 : 1;
}
