// The first levels of the iterated Rees tower over <2,3> with a = y^2.

#include <iostream>

#include "sdiv/rees_suite.hpp"

using namespace sdiv;

int main() {
    for (const auto& w : TWord::all_up_to(3)) std::cout << "T" << w.bits() << " = " << expand(w).str() << "\n";

    for (const auto& c : verify_generator_identities(3))
        std::cout << (c.holds ? "ok   " : "FAIL ") << c.identity << "\n";

    for (const char* text : {"a*T0^-1", "T0^-1", "y^3*T1*T10", "a*T00^-1"}) {
        TMono m = parse_tmono(text);
        auto d = level_decomposition(m, 2);
        std::cout << text << " at level 2: " << (d ? rees::decomposition_json(*d).dump() : std::string("not a member")) << "\n";
    }

    auto rep = colon_collapse_check(1, 4);
    std::cout << "collapse at level 1: " << rep.checked << " monomials, " << rep.violations.size() << " violations\n";
    return 0;
}
