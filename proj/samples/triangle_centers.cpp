// Centers of a euclidean triangle given by squared side lengths, and of an
// elliptic triangle given by its vertices.
#include "ckgeom/ckgeom.hpp"

#include <iostream>

int main() {
    using namespace ckgeom;
    // d12 = 1, d13 = 1, d23 = 2: right angle at vertex 1
    Mat d{{0, 1, 1}, {1, 0, 2}, {1, 2, 0}};
    auto de = eps_distances(d);
    std::cout << "O = " << Point(affine_circumcenter(de)).canonical_str() << "\n";
    std::cout << "H = " << Point(monge_point(de)).canonical_str() << "\n";
    std::cout << "R^2 = " << affine_circumradius(de) << "\n";
    auto in = affine_incenter(de);
    std::cout << "I = " << in.center.bary[0] << ":" << in.center.bary[1] << ":" << in.center.bary[2]
              << ", r^2 = " << in.radius_coeff << " eps^" << in.radius_degree << "\n";

    CKStructure ell = CKStructure::diag({1, 1, 1});
    Simplex sx = make_simplex(ell, {Point{1, 0, 0}, Point{3, 4, 0}, Point{0, 3, 4}});
    std::cout << "elliptic O = " << Point(circumcenter(sx)).canonical_str()
              << ", tanh^2 R = " << circumradius_tanh2(sx) << "\n";
    return 0;
}
