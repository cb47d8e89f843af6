// Distances, angles and reflections in the hyperbolic plane diag(1,1,-1).
#include "ckgeom/ckgeom.hpp"

#include <iostream>

int main() {
    using namespace ckgeom;
    CKStructure ck = CKStructure::parse("+@0 +@0 -@0");
    Point p{0, 0, 1}, q{1, 0, 2}, r{0, 1, 2};

    std::cout << "P " << classify_point(ck, p).str() << "\n";
    std::cout << "xi(P,Q) = " << quadrance_points(ck, p, q) << "\n";
    auto s = segment_lengths(ck, p, q);
    std::cout << "mu+ = " << s.plus.str(6) << ", mu- = " << s.minus.str(6) << "\n";
    std::cout << "d0(P,Q) = " << gross_distance(ck, p, q).str(6) << "\n";

    Flat pq = join(Flat::from_point(p), q), pr = join(Flat::from_point(p), r);
    Dihedral a = dihedral_angle(ck, pq, pr);
    std::cout << "angle at P: xi = " << a.xi << ", d = " << a.d.str(6) << "\n";

    Point q2 = reflect_point(ck, r, q);
    std::cout << "Q reflected in R = " << q2.canonical_str() << ", xi(P,Q') = " << quadrance_points(ck, reflect_point(ck, r, p), q2)
              << "\n";
    return 0;
}
