#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "rootloci/moduli.hpp"
#include "rootloci/thom.hpp"

using namespace rootloci;

namespace {

const BiForm u = BiForm::monomial(1, 1, 0);
const BiForm v = BiForm::monomial(1, 0, 1);

SymForm sym(int degree, std::vector<Rational> coeffs) {
    return SymForm(degree, std::move(coeffs));
}

std::vector<long> prefix(const PoincareSeries& s, size_t n) {
    std::vector<long> out(n, 0);
    for (size_t i = 0; i < n && i < s.coeffs.size(); ++i) out[i] = s.coeffs[i];
    return out;
}

}  // namespace

TEST_CASE("graded ideal construction") {
    CHECK(GradedIdeal().generators().empty());
    CHECK(GradedIdeal().all_symmetric());
    CHECK_THROWS_AS(GradedIdeal({BiForm::zero()}), std::invalid_argument);
    GradedIdeal I = GradedIdeal::from_sym_generators({sym(1, {1})});
    CHECK(I.all_symmetric());
    CHECK(I.generators()[0] == u + v);
    CHECK(!GradedIdeal({u}).all_symmetric());
}

TEST_CASE("piece dimensions of quotients") {
    GradedIdeal zero;
    CHECK(piece_dimension(zero, 0) == 1);
    CHECK(piece_dimension(zero, 1) == 1);
    CHECK(piece_dimension(zero, 4) == 3);
    CHECK(piece_dimension(zero, 5) == 3);
    CHECK_THROWS_AS(piece_dimension(zero, -1), std::invalid_argument);

    GradedIdeal c1_ideal = GradedIdeal::from_sym_generators({sym(1, {1})});
    const long expect_c1[] = {1, 0, 1, 0, 1, 0};
    for (int m = 0; m <= 5; ++m) CHECK(piece_dimension(c1_ideal, m) == size_t(expect_c1[m]));

    // symmetric classes of Q[u,v]/(u) are spanned by v^m alone
    GradedIdeal u_ideal({u});
    for (int m = 0; m <= 5; ++m) CHECK(piece_dimension(u_ideal, m) == 1);
}

TEST_CASE("symmetric and bivariate dimension paths agree") {
    // same ideal of Q[u,v], once with symmetric generators, once with a
    // redundant non-symmetric generator forcing the bivariate path
    BiForm g = from_sym(sym(2, {120, -48}));
    GradedIdeal sym_path = GradedIdeal({g});
    GradedIdeal bi_path = GradedIdeal({g, g * u});
    CHECK(sym_path.all_symmetric());
    CHECK(!bi_path.all_symmetric());
    for (int m = 0; m <= 8; ++m)
        CHECK(piece_dimension(sym_path, m) == piece_dimension(bi_path, m));
}

TEST_CASE("quotient series") {
    CHECK(quotient_series(GradedIdeal(), 4).coeffs ==
          std::vector<long>({1, 1, 2, 2, 3}));
    GradedIdeal I = GradedIdeal::from_sym_generators(
        {sym(2, {60, -15}), sym(3, {120, 20})});
    CHECK(prefix(quotient_series(I, 6), 7) ==
          std::vector<long>({1, 1, 1, 0, 0, 0, 0}));
}

TEST_CASE("closed-form series") {
    CHECK(kirwan_series(2, 4).coeffs == std::vector<long>({1, 0, 1, 0, 1}));
    CHECK(kirwan_series(3, 4).coeffs == std::vector<long>({1, 0, 0, 0, 0}));
    CHECK(kirwan_series(5, 4).coeffs == std::vector<long>({1, 1, 1, 0, 0}));
    CHECK(kirwan_series(6, 12).coeffs ==
          std::vector<long>({1, 1, 2, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(kirwan_series(8, 10).coeffs ==
          std::vector<long>({1, 1, 2, 2, 2, 1, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(kirwan_series(1, 4), std::invalid_argument);

    CHECK(stable_series_even(4).coeffs == std::vector<long>({1}));
    CHECK(stable_series_even(6).coeffs == std::vector<long>({1, 1, 1}));
    CHECK(stable_series_even(8).coeffs == std::vector<long>({1, 1, 2, 1, 1}));
    CHECK(stable_series_even(12).coeffs ==
          std::vector<long>({1, 1, 2, 2, 3, 2, 2, 1, 1}));
    CHECK_THROWS_AS(stable_series_even(5), std::invalid_argument);
    CHECK_THROWS_AS(stable_series_even(2), std::invalid_argument);

    CHECK(ss_series_even(4, 6).coeffs == std::vector<long>({1, 1, 1, 0, 1, 0, 1}));
    CHECK(ss_series_even(6, 12).coeffs == kirwan_series(6, 12).coeffs);
    CHECK(ss_series_even(8, 14).coeffs == kirwan_series(8, 14).coeffs);
    CHECK_THROWS_AS(ss_series_even(5, 6), std::invalid_argument);
}

TEST_CASE("series against direct quotient computation") {
    // even d: the two hook-class relations cut the equivariant ring down to
    // the Kirwan series
    for (int d : {4, 6, 8}) {
        int h = d / 2;
        std::vector<int> p1(d - h - 1, 1), p2(d - h - 2, 1);
        p1.push_back(h + 1);
        p2.push_back(h + 2);
        GradedIdeal I = GradedIdeal::from_sym_generators(
            {tp_reduce(Partition(p1)).value, tp_reduce(Partition(p2)).value});
        CHECK(quotient_series(I, 2 * d).coeffs == kirwan_series(d, 2 * d).coeffs);
    }
    // even d: (c1 Pi, c1 dPi) also realizes the Kirwan series
    for (int d : {6, 8}) {
        BiForm Pi = moduli_pi(d), c1 = u + v;
        GradedIdeal J({c1 * Pi, c1 * divided_difference(Pi)});
        CHECK(quotient_series(J, 2 * d).coeffs == kirwan_series(d, 2 * d).coeffs);
    }
    // (Pi, dPi) itself realizes the stable series
    for (int d : {6, 8}) {
        BiForm Pi = moduli_pi(d);
        GradedIdeal K({Pi, divided_difference(Pi)});
        auto got = quotient_series(K, 2 * d).coeffs;
        auto expect = stable_series_even(d).coeffs;
        expect.resize(2 * d + 1, 0);
        CHECK(got == expect);
    }
}

TEST_CASE("membership with cofactors") {
    SymForm g = sym(2, {60, -15});
    GradedIdeal I = GradedIdeal::from_sym_generators({g});

    MembershipResult self = membership(g, I);
    CHECK(self.member);
    REQUIRE(self.cofactors.size() == 1);
    CHECK(self.cofactors[0] == SymForm::constant(1));

    SymForm f = to_sym(from_sym(g) * (u + v));
    MembershipResult res = membership(f, I);
    CHECK(res.member);
    REQUIRE(res.cofactors.size() == 1);
    CHECK(res.cofactors[0] == sym(1, {1}));
    CHECK(from_sym(res.cofactors[0]) * from_sym(g) == from_sym(f));

    MembershipResult triv = membership(SymForm::zero(), I);
    CHECK(triv.member);
    CHECK(triv.cofactors.size() == 1);
    CHECK(triv.cofactors[0].is_zero());

    CHECK_THROWS_AS(membership(f, GradedIdeal({u})), std::invalid_argument);
}

TEST_CASE("non-membership certificate at degree six") {
    GradedIdeal I = GradedIdeal::from_sym_generators(
        {sym(3, {360, -144}), sym(4, {720, 360, 0})});
    SymForm target = sym(3, {720, 1008});
    CHECK(tp_reduce(parse_partition("1,2,3")).value == target);
    MembershipResult res = membership(target, I);
    CHECK(!res.member);
    CHECK(res.cofactors.empty());
    CHECK(res.rank_span == 1);
    CHECK(res.rank_with_target == 2);
}

TEST_CASE("membership cofactors reassemble across many generators") {
    for (int d : {6, 8}) {
        int h = d / 2;
        std::vector<int> p1(d - h - 1, 1), p2(d - h - 2, 1);
        p1.push_back(h + 1);
        p2.push_back(h + 2);
        SymForm t1 = tp_reduce(Partition(p1)).value;
        SymForm t2 = tp_reduce(Partition(p2)).value;
        GradedIdeal I = GradedIdeal::from_sym_generators({t1, t2});
        // an explicit combination: c1^2 * t1 + 3 * t2  (degrees match: t2 = t1+1)
        BiForm c1 = u + v;
        SymForm f = to_sym(c1 * c1 * from_sym(t1) + from_sym(t2) * c1 * rational(3));
        MembershipResult res = membership(f, I);
        REQUIRE(res.member);
        BiForm rebuilt = BiForm::zero();
        rebuilt += from_sym(res.cofactors[0]) * from_sym(t1);
        rebuilt += from_sym(res.cofactors[1]) * from_sym(t2);
        CHECK(rebuilt == from_sym(f));
    }
}

TEST_CASE("degreewise ideal equality") {
    BiForm g = from_sym(sym(2, {120, -48}));
    CHECK(ideal_equal_up_to(GradedIdeal({g}), GradedIdeal({g}), 8));
    CHECK(ideal_equal_up_to(GradedIdeal({g}), GradedIdeal({g, g * u}), 8));
    CHECK(!ideal_equal_up_to(GradedIdeal({u + v}), GradedIdeal({u * v}), 4));

    // degree-six identities between the hook-class ideal and the weight
    // products
    BiForm Pi = moduli_pi(6);
    BiForm dPi = divided_difference(Pi);
    BiForm c1 = u + v;
    GradedIdeal hooks = GradedIdeal::from_sym_generators(
        {sym(3, {360, -144}), sym(4, {720, 360, 0})});
    CHECK(ideal_equal_up_to(hooks, GradedIdeal({c1 * dPi, c1 * Pi}), 12));
    GradedIdeal base = GradedIdeal::from_sym_generators(
        {sym(2, {120, -48}), sym(3, {720, 1008})});
    CHECK(ideal_equal_up_to(base, GradedIdeal({dPi, Pi}), 12));
    CHECK(!ideal_equal_up_to(hooks, GradedIdeal({dPi, Pi}), 12));
}

TEST_CASE("equivariant presentation at degree five") {
    RingPresentation rp = presentation(5, "ss-equivariant");
    REQUIRE(rp.generators.size() == 2);
    CHECK(rp.generators[0].name == "c1");
    CHECK(rp.generators[0].degree == 1);
    CHECK(rp.generators[1].name == "c2");
    CHECK(rp.generators[1].degree == 2);
    REQUIRE(rp.relation_text.size() == 2);
    CHECK(rp.relation_text[0] == "60*c1^2 - 15*c2");
    CHECK(rp.relation_text[1] == "120*c1^3 + 20*c1*c2");
    CHECK(prefix(rp.series, 5) == std::vector<long>({1, 1, 1, 0, 0}));
    CHECK(rp.series_verified);

    // odd d: the quotient presentation carries the same series
    RingPresentation rq = presentation(5, "ss-quotient");
    CHECK(rq.series.coeffs == rp.series.coeffs);
    CHECK(rq.series_verified);
}

TEST_CASE("quotient presentation at even degree") {
    RingPresentation rp = presentation(6, "ss-quotient");
    CHECK(prefix(rp.series, 6) == std::vector<long>({1, 1, 1, 1, 0, 0}));
    CHECK(rp.series_verified);
    CHECK(rp.series.closed_form.find("1 + t P(t)") != std::string::npos);

    RingPresentation r8 = presentation(8, "ss-quotient");
    CHECK(prefix(r8.series, 8) == std::vector<long>({1, 1, 1, 2, 1, 1, 0, 0}));
    CHECK(r8.series_verified);

    RingPresentation req = presentation(6, "ss-equivariant");
    CHECK(req.series.coeffs == kirwan_series(6, 12).coeffs);
    CHECK(req.series_verified);
}

TEST_CASE("stable presentation at even degree") {
    RingPresentation rp = presentation(6, "stable-quotient");
    REQUIRE(rp.relation_text.size() == 2);
    CHECK(rp.relation_text[0] == "120*c1^2 - 48*c2");
    CHECK(rp.relations[1] == moduli_pi(6));
    CHECK(prefix(rp.series, 4) == std::vector<long>({1, 1, 1, 0}));
    CHECK(rp.series_verified);

    RingPresentation r8 = presentation(8, "stable-quotient");
    CHECK(prefix(r8.series, 6) == std::vector<long>({1, 1, 2, 1, 1, 0}));
    CHECK(r8.series_verified);

    CHECK_THROWS_AS(presentation(5, "stable-quotient"), std::invalid_argument);
    CHECK_THROWS_AS(presentation(6, "bogus"), std::invalid_argument);
    CHECK_THROWS_AS(presentation(2, "ss-equivariant"), std::invalid_argument);
}

TEST_CASE("link presentation") {
    RingPresentation r6 = presentation_link(6);
    CHECK(r6.betti == std::vector<long>({1, 0, 0, 0, 0, 1}));
    REQUIRE(r6.generators.size() == 2);
    CHECK(r6.generators[0].name == "c2");
    CHECK(r6.generators[0].degree == 4);
    CHECK(r6.generators[1].name == "g");
    CHECK(r6.generators[1].degree == 5);
    CHECK(r6.relation_text == std::vector<std::string>({"c2", "g^2"}));
    CHECK(r6.series_verified);

    RingPresentation r8 = presentation_link(8);
    CHECK(r8.betti == std::vector<long>({1, 0, 0, 0, 1, 1, 0, 0, 0, 1}));
    CHECK(r8.series_verified);

    RingPresentation r10 = presentation_link(10);
    CHECK(r10.betti ==
          std::vector<long>({1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(r10.generators[1].degree == 9);
    CHECK(r10.series_verified);

    CHECK_THROWS_AS(presentation_link(5), std::invalid_argument);
    CHECK_THROWS_AS(presentation_link(4), std::invalid_argument);
}

TEST_CASE("generating function report") {
    GenFunctionReport odd = gen_function_check(5, 10);
    CHECK(odd.coefficients_ok);
    CHECK(odd.first_failing_j == -1);
    CHECK(!odd.even_case_applicable);

    GenFunctionReport even = gen_function_check(6, 12);
    CHECK(even.coefficients_ok);
    CHECK(even.even_case_applicable);
    CHECK(!even.even_ideal_claim_ok);      // literal span comparison fails
    CHECK(even.even_ideal_corrected_ok);   // c1-multiplied span matches
    CHECK(!even.detail.empty());

    GenFunctionReport e8 = gen_function_check(8, 8);
    CHECK(e8.coefficients_ok);
    CHECK(!e8.even_ideal_claim_ok);
    CHECK(e8.even_ideal_corrected_ok);

    CHECK_THROWS_AS(gen_function_check(2, 4), std::invalid_argument);
}

TEST_CASE("gcd certificates") {
    for (int d = 5; d <= 8; ++d) {
        GcdReport rep = gcd_certificates(d);
        CHECK(rep.ok());
        CHECK(rep.gcd_swap == BiForm::constant(1));
        CHECK(rep.gcd_dd == BiForm::constant(1));
    }
    CHECK_THROWS_AS(gcd_certificates(2), std::invalid_argument);
}

TEST_CASE("weight product for the moduli ideal") {
    CHECK(moduli_pi(6) == pi_product(6, 3));
    CHECK(moduli_pi(7) == pi_product(7, 4));
    CHECK(moduli_pi(8) == pi_product(8, 4));
    CHECK_THROWS_AS(moduli_pi(2), std::invalid_argument);
}
