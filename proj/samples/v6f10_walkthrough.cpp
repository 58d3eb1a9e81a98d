// Walks through the V6F10-6 complex: collapsibility, the M_k hierarchy,
// decomposability, and the hypergraph whose non-cover complex it is.

#include <iostream>

#include "sc/collapse.hpp"
#include "sc/decomposability.hpp"
#include "sc/generators.hpp"
#include "sc/hypergraph.hpp"
#include "sc/mk.hpp"

int main()
{
    using namespace sc;
    const auto x = named_complex("v6f10-6");
    std::cout << "X = " << to_string(x) << "\n";

    const auto c = collapsibility_number(x);
    std::cout << "C(X) = " << c.value << " via " << c.certificate.steps.size() << " elementary collapses\n";
    for (const auto& step : c.certificate.steps)
        std::cout << "  free " << to_string(step.free_face) << " in " << to_string(step.maximal_face) << "\n";

    MkEvaluator ev;
    std::cout << "M0 = " << ev.m0(x) << ", M1 = " << ev.mk(x, 1) << ", M'1 = " << ev.mk_prime(x, 1)
              << ", M2 = " << ev.mk(x, 2) << "\n";

    const Face pivot{1, 5};
    std::cout << "lk({1,5}) = " << to_string(link(x, pivot)) << "\n";
    std::cout << "del({1,5}) = " << to_string(deletion(x, pivot)) << "\n";

    for (int k = 0; k <= 1; ++k)
        std::cout << k << "-vertex decomposable: " << std::boolalpha
                  << is_k_vertex_decomposable(x, k).decomposable << "\n";
    std::cout << "Leray number: " << leray_number(x) << "\n";

    // X is 3-uniform and closed under complement, so X = NC(H) for H with the same triples.
    const Hypergraph h(6, x.facets());
    std::cout << "NC(H) == X: " << (non_cover_complex(h) == x) << ", gamma_i(H) = " << gamma_i(h).value
              << ", bound n - gamma_i - 1 = " << nc_collapsibility_bound(h) << "\n";
}
