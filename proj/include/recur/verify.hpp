#ifndef RECUR_VERIFY_HPP
#define RECUR_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace recur {

struct CriterionResult {
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

struct VerifyOptions {
    bool quick = false;          // reduced-size tier (<= 60 s target)
    std::uint64_t seed = 1;
    std::string out_dir;         // when nonempty, CSV outputs are written here
};

// runs every acceptance criterion, printing one pass/fail line each
std::vector<CriterionResult> run_verification(const VerifyOptions& opts, std::ostream& log);

// deterministic CSV bundle exercising the parallel code paths; used by
// the thread-count determinism criterion
void write_verify_outputs(const std::string& dir, std::uint64_t seed);

}  // namespace recur

#endif
