// Acceptance suite: runs every criterion of the theorem-verification suite
// at full scale and prints one pass/fail line per criterion.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "autonet/verify.hpp"

int main(int argc, char** argv) {
    autonet::VerifyOptions options;
    options.fixture_dir = AUTONET_FIXTURE_DIR;

    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto value = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--fixtures")
            options.fixture_dir = value();
        else if (arg == "--threads")
            options.threads = std::atoi(value().c_str());
        else if (arg == "--sample-n3")
            options.n3_sample = std::strtoull(value().c_str(), nullptr, 10);
        else if (arg == "--sample-q3")
            options.q3_sample = std::strtoull(value().c_str(), nullptr, 10);
        else if (arg == "--seed")
            options.seed = std::strtoull(value().c_str(), nullptr, 10);
        else {
            std::cerr << "usage: acceptance_tests [--fixtures DIR] [--threads N] [--sample-n3 M]"
                         " [--sample-q3 M] [--seed S]\n";
            return 2;
        }
    }

    const auto results = autonet::run_acceptance(options);
    const bool ok = autonet::all_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return ok ? 0 : 1;
}
