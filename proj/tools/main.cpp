#include <iostream>
#include <string>
#include <vector>

#include "hensel/job.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
        std::cout << hensel::usage_text();
        return 0;
    }
    try {
        hensel::JobSpec spec = hensel::parse_job(args);
        hensel::JobResult result = hensel::run_job(spec);
        std::cout << result.output;
        std::cerr << result.diagnostics;
        return result.exit_code;
    } catch (const hensel::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << hensel::usage_text();
        return 1;
    }
}
