// Reflections as sandwich products and the exponential form of a rotor.
#include "ckgeom/ckgeom.hpp"

#include <iostream>

int main() {
    using namespace ckgeom;
    CKStructure ck = CKStructure::diag({1, 1});
    auto g = eps_metric(ck);
    EpsMultivector e1 = EpsMultivector::blade(0b01), e2 = EpsMultivector::blade(0b10);
    std::cout << "e1 e2 = " << str(geometric(e1, e2, g)) << ", e2 e1 = " << str(geometric(e2, e1, g)) << "\n";
    std::cout << "reflect (1:1) in e1: " << sandwich_reflect(ck, Point{1, 0}, Point{1, 1}).canonical_str() << "\n";

    Point r{1, 0}, s{Vec{Rational(3, 5), Rational(4, 5)}};
    RotorForm f = rotor_exponential_form(ck, r, s);
    std::cout << to_string(f.kind) << " rotor " << str(f.rotor) << " = exp(" << f.param << " t r^-1)"
              << (f.matches ? "" : " (mismatch)") << "\n";

    CKStructure gal = CKStructure::parse("+@0 +@1");
    RotorForm p = rotor_exponential_form(gal, Point{1, 0}, Point{1, 3});
    std::cout << to_string(p.kind) << " rotor " << str(p.rotor) << "\n";
    return 0;
}
