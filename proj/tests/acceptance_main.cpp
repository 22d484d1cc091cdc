#include <iostream>

#include "slspec/acceptance.hpp"

int main()
{
    const auto results = slspec::acceptance::run_acceptance(std::cout);
    int fails = 0;
    for (const auto& r : results) fails += r.pass ? 0 : 1;
    std::cout << (fails == 0 ? "all criteria passed\n"
                             : std::to_string(fails) + " criteria failed\n");
    return fails;
}
