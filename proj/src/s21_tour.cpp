// A short walk through the monoid S generated by n + 1 + 2^-n.

#include <iostream>

#include "sdiv/s21_suite.hpp"

using namespace sdiv;

int main() {
    const QMonoid S = QMonoid::paper_s21();

    std::cout << "first generators:";
    for (const auto& g : S.generators_up_to(Rat(5))) std::cout << ' ' << g;
    std::cout << "\n";

    for (const Rat& q : {Rat(2), Rat(3), Rat(9, 2), Rat(13, 4)}) {
        auto rep = S.representation(q);
        std::cout << q << (rep ? " is in S: " + to_json(*rep).dump() : std::string(" is not in S")) << "\n";
    }

    // 1/2 is not in S, and 1/2 + 5/2 = 3 shows S : (S : M) misses it.
    auto s = divisorial_gap_witness(S, Rat(1, 2), Rat(16));
    std::cout << "gap witness for 1/2: s = " << *s << ", 1/2 + s = " << Rat(1, 2) + *s << "\n";

    auto n = conductor_gap_witness(S, Rat(2), conductor_gap_bound(Rat(2)));
    std::cout << "2 + 2^-" << *n << " is not in S\n";

    auto cert = seminormal_violation(S, Rat(1), 12);
    std::cout << "seminormality fails at 1: chain of " << cert.chain.size() << " steps\n";

    SPoly f = s21::parse_spoly("X^2 + X^(5/2)", 2);
    auto a = monomial_associate(f, S, 12);
    std::cout << "f^(2^" << a->n << ") = X^" << a->s << " * (" << s21::spoly_text(a->cofactor) << ")\n";
    return 0;
}
