// Walks through the library on the second-order cone x > sqrt(y^2 + z^2).

#include <iostream>

#include "hyperlax/hyperlax.hpp"

int main() {
    using namespace hyperlax;

    const Polynomial p = parse_polynomial("x^2 - y^2 - z^2", 3);
    const Vector e{1, 0, 0};

    const Verdict v = test_hyperbolic(p, e, SamplerConfig{});
    std::cout << format_polynomial(p) << " hyperbolic w.r.t. (1,0,0): " << (v.passed() ? "pass" : "refuted")
              << " after " << v.trials << " samples\n";

    std::cout << "(2,1,0) in cone: " << cone_contains(p, e, Vector{2, 1, 0}) << '\n';
    std::cout << "(1,1,1) in cone: " << cone_contains(p, e, Vector{1, 1, 1}) << '\n';

    const LaxTriple triple(SymMatrix::diagonal(Vector{1, -1}), SymMatrix::from_rows({{0, 1}, {1, 0}}));
    std::cout << "det(xI + yB + zC) = " << format_polynomial(expand_det(triple.pencil()))
              << ", certificate verifies: " << verify_lax_form(p, triple) << '\n';

    const Polynomial q = transport_lax_to_rz(p, triple).poly;
    std::cout << "real zero form q(y,z) = " << format_polynomial(q, {"y", "z"}) << '\n';

    const DimReport r = dimension_report(4, 10);
    std::cout << "n=4, d=10: determinantal forms have dimension <= " << r.det_image_dim << " of " << r.poly_space_dim
              << '\n';
}
