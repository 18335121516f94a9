// Builds a small dual pair by hand and prints what the library says about it.
#include <iostream>

#include "linrel/linrel.hpp"

using namespace linrel;

int main() {
    const Scalar one(1), zero(0);

    // G = span{(e1, e2)} on C^2: e1 goes to e2, nothing else is defined.
    LinearRelation g = LinearRelation::from_pairs(2, {{Vector{one, zero}, Vector{zero, one}}});
    LinearRelation gs = adjoint(g);
    std::cout << "dim G = " << g.dim() << ", dim G* = " << gs.dim() << "\n";
    std::cout << "G* as a file:\n" << io::serialize_relation(gs);

    // {G, G} is a dual pair since G is Hermitian.
    DualPair p(g, g);
    HypothesisReport h = hypotheses(p);
    std::cout << "h1=" << h.h1 << " h2=" << h.h2 << " k1=" << h.k1 << " k2=" << h.k2 << "\n";

    KernelSpaces ks = kernel_spaces(p);
    std::cout << "dim N(1+B*A*) = " << ks.k_ba.dim() << ", dim N(1+A*B*) = " << ks.k_ab.dim() << "\n";
    std::cout << "Q =\n";
    Matrix q = q_map(p);
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) std::cout << "  " << q(i, j).str();
        std::cout << "\n";
    }

    // The swap graph sits between G and G*.
    LinearRelation swap = LinearRelation::graph_of(Matrix{{zero, one}, {one, zero}});
    ProperExtension e(p, swap);
    QuotientProfile prof = quotient_profile(e);
    std::cout << "swap extension profile:";
    for (auto d : prof.as_array()) std::cout << " " << d;
    std::cout << (is_quasi_selfadjoint(prof) ? " (quasi-selfadjoint)\n" : "\n");

    std::cout << io::dump(io::analyze_report(p));
}
