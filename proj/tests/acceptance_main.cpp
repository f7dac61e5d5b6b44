// Runs the full self-verification suite (one pass/fail line per
// criterion) and exits nonzero on any failure.
#include <iostream>
#include <string>

#include "recur/verify.hpp"

int main(int argc, char** argv) {
    recur::VerifyOptions opts;
    opts.seed = 1;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") opts.quick = true;
    auto results = recur::run_verification(opts, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << results.size() - static_cast<size_t>(failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
