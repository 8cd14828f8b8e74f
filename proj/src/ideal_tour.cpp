// Divisorial and strong ideals of small numerical semigroups.

#include <iostream>

#include "sdiv/ideal_suite.hpp"

using namespace sdiv;
using namespace sdiv::idealsys;

namespace {

void show(const char* label, const Ideal1& e) { std::cout << label << ' ' << to_json(e).dump() << "\n"; }

}  // namespace

int main() {
    Sg1 s = semigroup({3, 4, 5});
    Ideal1 e = Ideal1::from_generators(s, {{3}, {4}});
    show("E       =", e);
    show("(S:E)   =", colon_s(e));
    show("E_v     =", v_closure(e));
    std::cout << "E divisorial: " << std::boolalpha << is_divisorial(e) << "\n\n";

    for (const auto& gens : fixed_semigroups()) {
        Sg1 t = semigroup(gens);
        Ideal1 m = Ideal1::maximal(t);
        std::cout << "<" << gens_text(gens) << ">  M strong: " << is_strong(m) << ", M t-invertible: " << is_t_invertible(m)
                  << ", strongly divisorial ideals with min <= 6: " << enumerate_strongly_divisorial(t, 6).size() << "\n";
    }

    auto [p1, p2, i] = two_primes(product({2, 3}, {2, 3}));
    std::cout << "\n<2,3> x <2,3>: P1 strong " << is_strong(p1) << ", P2 strong " << is_strong(p2) << ", P1 cap P2 strong "
              << is_strong(i) << ", divisorial " << is_divisorial(i) << "\n";
    return 0;
}
