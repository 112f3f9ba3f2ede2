#include "qf2/acceptance.hpp"

#include <iostream>

int main()
{
    int failed = 0;
    for (const auto& r : qf2::run_acceptance()) {
        std::cout << qf2::format_result(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " of 10 criteria failed" : "all 10 criteria passed") << "\n";
    return failed ? 1 : 0;
}
