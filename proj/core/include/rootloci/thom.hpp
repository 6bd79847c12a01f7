#pragma once

#include <string>

#include "rootloci/biform.hpp"
#include "rootloci/partition.hpp"
#include "rootloci/rational.hpp"

namespace rootloci {

// Equivariant Poincare dual of the locus of degree-d binary forms whose root
// multiplicities are given by the partition; codim = d - n, value expressed
// in the c1, c2 basis.
struct ThomPoly {
    Partition partition;
    int codim;
    SymForm value;
    std::string method;
};

// Pushforward algorithm: top coefficient of the pulled-back q in the product
// of truncated rings.
ThomPoly tp_reduce(const Partition& p);

// Direct multi-sum with multinomial coefficients, divided by (v-u)^n.
ThomPoly tp_naive(const Partition& p);

// Weight-grouped sum: each term is C_{d+1} with one weight factor removed;
// the s-tuples are grouped by k = sum i*s_i before any polynomial work.
ThomPoly tp_sum(const Partition& p);

// lambda = (i^e): i^e times the product of weights ju+(d-j)v over j not
// divisible by i.
ThomPoly tp_power_block(int i, int e);

// lambda = (i^ei j^ej): one block collapsed to evaluations of Q_{ei} over a
// common denominator.
ThomPoly tp_two_block(int i, int ei, int j, int ej);

// lambda = (1^e1, j), j >= 2: divided difference of a single product.
ThomPoly tp_kirwan(int e1, int j);

// lambda = (1^{h-j}, j, h), d = 2h, 1 < j < h: divided difference of
// D_j * Pi with D_j an exact difference quotient.
ThomPoly tp_e3(int h, int j);

// prod_{l=0}^{nfactors-1} (l*v + (d-l)*u)
BiForm pi_product(int d, int nfactors);

// n! / prod(e_i!) * prod(i^{e_i})
Integer hilbert_degree(const Partition& p);

// Evaluation of the u,v expansion at u = v = 1/d; equals the projective
// degree of the root locus.
Rational projective_degree(const ThomPoly& tp);

struct RelationsReport {
    bool identity1 = false;  // tp_l1 = h c1 tp_l0
    bool identity2 = false;  // (h-1) tp_l2 = (h-1)(h-2) c1 tp_l1 + c1 tp_l0'
    std::string detail;
    bool ok() const { return identity1 && identity2; }
};

// Checks both inter-Tp identities for d = 2h, h > 2, via the reduction
// algorithm.
RelationsReport check_relations_even(int h);

}  // namespace rootloci
