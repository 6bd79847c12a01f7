#pragma once

#include <string>
#include <vector>

#include "rootloci/biform.hpp"
#include "rootloci/rational.hpp"

namespace rootloci {

// Homogeneous ideal of Q[u,v] given by generators; symmetric generators are
// polynomials in c1, c2 and then the quotient is read inside Q[c1,c2].
class GradedIdeal {
public:
    GradedIdeal() = default;  // zero ideal
    explicit GradedIdeal(std::vector<BiForm> generators);
    static GradedIdeal from_sym_generators(const std::vector<SymForm>& generators);

    const std::vector<BiForm>& generators() const { return gens_; }
    bool all_symmetric() const;

private:
    std::vector<BiForm> gens_;
};

// Degreewise dimensions; index = u,v-degree (half the cohomological degree),
// except the link presentation which reports true cohomological degrees.
struct PoincareSeries {
    std::vector<long> coeffs;
    std::string closed_form;  // annotation; the coefficient list is the truth
};

// Dimension of the degree-m piece of Q[c1,c2]/I.  For symmetric generators
// this is (floor(m/2)+1) minus the rank of the multiplication matrix in the
// c1^{m-2k} c2^k basis; in general it is computed inside Q[u,v] as
// dim(I_m + Sym_m) - dim(I_m).
size_t piece_dimension(const GradedIdeal& I, int m);

PoincareSeries quotient_series(const GradedIdeal& I, int bound);

// (1 - t^h - t^{h+1} + t^d) / ((1-t)(1-t^2)),  h = floor(d/2)
PoincareSeries kirwan_series(int d, int bound);

// P(t) = (1 - t^{h-1})(1 - t^h) / ((1-t)(1-t^2)), a polynomial; d = 2h
PoincareSeries stable_series_even(int d);

// 1/(1-t^2) + t P(t); d even
PoincareSeries ss_series_even(int d, int bound);

struct MembershipResult {
    bool member = false;
    std::vector<SymForm> cofactors;  // one per generator when member
    size_t rank_span = 0;            // rank of the multiplication columns
    size_t rank_with_target = 0;     // rank after adjoining f
};

// Exact membership of f in an ideal with symmetric generators, with explicit
// cofactors on success and the rank certificate on failure.
MembershipResult membership(const SymForm& f, const GradedIdeal& I);

// Degreewise span equality of two ideals for every degree <= bound.
bool ideal_equal_up_to(const GradedIdeal& I, const GradedIdeal& J, int bound);

struct GeneratorInfo {
    std::string name;
    int degree;
};

struct RingPresentation {
    std::string space;  // ss-equivariant | ss-quotient | stable-quotient | link
    std::vector<GeneratorInfo> generators;
    std::vector<BiForm> relations;
    std::vector<std::string> relation_text;
    PoincareSeries series;
    bool series_verified = false;  // degreewise recomputation matched
    std::vector<long> betti;       // link only, by cohomological degree
};

// Presentations of the three cohomology rings; bound < 0 means 2d.
RingPresentation presentation(int d, const std::string& space, int bound = -1);

// Two-generator presentation of the cohomology of the link; d = 2h, h >= 3.
RingPresentation presentation_link(int d);

struct GenFunctionReport {
    bool coefficients_ok = false;
    int first_failing_j = -1;        // -1 when coefficients_ok
    bool even_case_applicable = false;
    bool even_ideal_claim_ok = false;      // {dPi_j : h<j<=h+3} vs (Pi, dPi)
    bool even_ideal_corrected_ok = false;  // same span vs (c1 Pi, c1 dPi)
    std::string detail;
};

// Coefficient identity j! G_j = Pi_j for j <= jmax, plus the even-d ideal
// comparisons for the generators dPi_j, h < j <= h+3.
GenFunctionReport gen_function_check(int d, int jmax);

struct GcdReport {
    bool swap_coprime = false;  // gcd(Pi, Pi*) == 1
    bool dd_coprime = false;    // gcd(Pi, dPi) == 1
    BiForm gcd_swap;
    BiForm gcd_dd;
    bool ok() const { return swap_coprime && dd_coprime; }
};

GcdReport gcd_certificates(int d);

// Pi = prod_{l=0}^{h-1} (lv + (d-l)u) for even d; one more factor for odd d.
BiForm moduli_pi(int d);

}  // namespace rootloci
