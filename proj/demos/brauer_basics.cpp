// Brauer diagrams, their products and the image on V^{(x)2}.
#include <cstdio>

#include "pbr/brauer.hpp"
#include "pbr/functors.hpp"

using namespace pbr;

int main() {
    BrauerElement s = brauer::s(2, 1), e = brauer::e(2, 1);
    std::printf("s * s = %s\n", (s * s).str().c_str());
    std::printf("e * e = %s\n", (e * e).str().c_str());
    std::printf("s * e = %s\n", (s * e).str().c_str());

    BrauerElement h = brauer::H();
    std::printf("H     = %s\n", h.str().c_str());

    // osp(1|2): sdim = -1.
    SuperSpace V = build_space(1, 1);
    SMat F = evaluate_brauer(h.substitute({{var::delta, Poly(V.sdim)}}), V);
    std::printf("F(H) on V(x)V for V = C^{1|2}: %dx%d, %zu nonzeros\n", F.rows(), F.cols(), F.nnz());
}
