#include "rootloci/moduli.hpp"

#include <stdexcept>

#include "rootloci/matrix.hpp"
#include "rootloci/thom.hpp"

namespace rootloci {

GradedIdeal::GradedIdeal(std::vector<BiForm> generators) {
    for (const BiForm& g : generators)
        if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
    gens_ = std::move(generators);
}

GradedIdeal GradedIdeal::from_sym_generators(const std::vector<SymForm>& generators) {
    std::vector<BiForm> gens;
    gens.reserve(generators.size());
    for (const SymForm& g : generators) gens.push_back(rootloci::from_sym(g));
    return GradedIdeal(std::move(gens));
}

bool GradedIdeal::all_symmetric() const {
    for (const BiForm& g : gens_)
        if (!g.is_symmetric()) return false;
    return true;
}

namespace {

// coordinates of a degree-m BiForm in the basis u^m, u^{m-1}v, .., v^m
std::vector<Rational> bi_coords(const BiForm& f, int m) {
    std::vector<Rational> c(m + 1);
    if (f.is_zero()) return c;
    if (f.degree() != m) throw std::invalid_argument("bi_coords: degree mismatch");
    for (int a = 0; a <= m; ++a) c[a] = f.coeff(a);
    return c;
}

// coordinates of a degree-m symmetric form in the basis c1^{m-2k} c2^k
std::vector<Rational> sym_coords(const SymForm& f, int m) {
    std::vector<Rational> c(m / 2 + 1);
    if (f.is_zero()) return c;
    if (f.degree() != m) throw std::invalid_argument("sym_coords: degree mismatch");
    for (int k = 0; k <= m / 2; ++k) c[k] = f.coeff(k);
    return c;
}

// rows of the degree-m piece of the ideal inside Q[u,v]
std::vector<std::vector<Rational>> ideal_rows_bi(const GradedIdeal& I, int m) {
    std::vector<std::vector<Rational>> rows;
    for (const BiForm& g : I.generators()) {
        int rem = m - g.degree();
        if (rem < 0) continue;
        for (int a = 0; a <= rem; ++a) {
            BiForm prod = g * BiForm::monomial(1, a, rem - a);
            rows.push_back(bi_coords(prod, m));
        }
    }
    return rows;
}

// rows of the degree-m piece of the ideal inside Q[c1,c2] (symmetric gens)
std::vector<std::vector<Rational>> ideal_rows_sym(const GradedIdeal& I, int m) {
    std::vector<std::vector<Rational>> rows;
    BiForm c1 = BiForm::linear(1, 1);
    for (const BiForm& g : I.generators()) {
        int rem = m - g.degree();
        if (rem < 0) continue;
        for (int b = 0; b <= rem / 2; ++b) {
            BiForm mono = c1.pow(rem - 2 * b) * BiForm::monomial(1, b, b);
            rows.push_back(sym_coords(to_sym(g * mono), m));
        }
    }
    return rows;
}

size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows, size_t width) {
    if (rows.empty()) return 0;
    RatMatrix m(rows.size(), width);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    return rank(m);
}

std::vector<std::vector<Rational>> sym_basis_rows_bi(int m) {
    std::vector<std::vector<Rational>> rows;
    BiForm c1 = BiForm::linear(1, 1);
    for (int k = 0; k <= m / 2; ++k) {
        BiForm mono = c1.pow(m - 2 * k) * BiForm::monomial(1, k, k);
        rows.push_back(bi_coords(mono, m));
    }
    return rows;
}

// expand p(t) = num(t) / ((1-t)(1-t^2)) to the requested bound
std::vector<long> expand_over_denominator(const std::vector<long>& num, int bound) {
    std::vector<long> a(bound + 1, 0);
    auto at = [&](int i) { return i < 0 ? 0L : a[i]; };
    for (int m = 0; m <= bound; ++m) {
        long nm = m < int(num.size()) ? num[m] : 0;
        a[m] = nm + at(m - 1) + at(m - 2) - at(m - 3);
    }
    return a;
}

}  // namespace

size_t piece_dimension(const GradedIdeal& I, int m) {
    if (m < 0) throw std::invalid_argument("piece_dimension: negative degree");
    const size_t sym_dim = size_t(m / 2) + 1;
    if (I.all_symmetric()) {
        size_t r = rank_of_rows(ideal_rows_sym(I, m), sym_dim);
        return sym_dim - r;
    }
    auto rows = ideal_rows_bi(I, m);
    size_t rank_ideal = rank_of_rows(rows, m + 1);
    auto sym_rows = sym_basis_rows_bi(m);
    rows.insert(rows.end(), sym_rows.begin(), sym_rows.end());
    size_t rank_joint = rank_of_rows(rows, m + 1);
    return rank_joint - rank_ideal;
}

PoincareSeries quotient_series(const GradedIdeal& I, int bound) {
    PoincareSeries s;
    s.coeffs.reserve(bound + 1);
    for (int m = 0; m <= bound; ++m) s.coeffs.push_back(long(piece_dimension(I, m)));
    return s;
}

PoincareSeries kirwan_series(int d, int bound) {
    if (d < 2) throw std::invalid_argument("kirwan_series: d >= 2 required");
    const int h = d / 2;
    std::vector<long> num(d + 1, 0);
    num[0] += 1;
    num[h] -= 1;
    num[h + 1] -= 1;
    num[d] += 1;
    PoincareSeries s;
    s.coeffs = expand_over_denominator(num, bound);
    s.closed_form = "(1 - t^" + std::to_string(h) + " - t^" + std::to_string(h + 1) +
                    " + t^" + std::to_string(d) + ")/((1 - t)(1 - t^2))";
    return s;
}

PoincareSeries stable_series_even(int d) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("stable_series_even: even d >= 4 required");
    const int h = d / 2;
    // numerator (1 - t^{h-1})(1 - t^h); the quotient is a polynomial of
    // degree 2h-4
    std::vector<long> num(2 * h, 0);
    num[0] += 1;
    num[h - 1] -= 1;
    num[h] -= 1;
    num[2 * h - 1] += 1;
    PoincareSeries s;
    s.coeffs = expand_over_denominator(num, std::max(2 * h - 4, 0));
    s.closed_form = "(1 - t^" + std::to_string(h - 1) + ")(1 - t^" + std::to_string(h) +
                    ")/((1 - t)(1 - t^2))";
    return s;
}

PoincareSeries ss_series_even(int d, int bound) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("ss_series_even: even d >= 4 required");
    PoincareSeries p = stable_series_even(d);
    PoincareSeries s;
    s.coeffs.assign(bound + 1, 0);
    for (int m = 0; m <= bound; ++m) {
        long val = (m % 2 == 0) ? 1 : 0;  // 1/(1-t^2)
        if (m >= 1 && m - 1 < int(p.coeffs.size())) val += p.coeffs[m - 1];
        s.coeffs[m] = val;
    }
    s.closed_form = "1/(1 - t^2) + t P(t) with P(t) = " + p.closed_form;
    return s;
}

MembershipResult membership(const SymForm& f, const GradedIdeal& I) {
    if (!I.all_symmetric())
        throw std::invalid_argument("membership: symmetric generators required");
    MembershipResult res;
    if (f.is_zero()) {
        res.member = true;
        res.cofactors.assign(I.generators().size(), SymForm::zero());
        return res;
    }
    const int m = f.degree();
    const size_t width = size_t(m / 2) + 1;

    // span columns with provenance (generator index, c2-power of the monomial)
    struct Col {
        size_t gen;
        int b;
    };
    std::vector<Col> cols;
    std::vector<std::vector<Rational>> span;
    BiForm c1 = BiForm::linear(1, 1);
    for (size_t gi = 0; gi < I.generators().size(); ++gi) {
        const BiForm& g = I.generators()[gi];
        int rem = m - g.degree();
        if (rem < 0) continue;
        for (int b = 0; b <= rem / 2; ++b) {
            BiForm mono = c1.pow(rem - 2 * b) * BiForm::monomial(1, b, b);
            span.push_back(sym_coords(to_sym(g * mono), m));
            cols.push_back({gi, b});
        }
    }
    std::vector<Rational> target = sym_coords(f, m);

    res.rank_span = rank_of_rows(span, width);
    {
        auto with = span;
        with.push_back(target);
        res.rank_with_target = rank_of_rows(with, width);
    }

    auto sol = solve_in_span(target, span);
    if (!sol) return res;
    res.member = true;
    for (size_t gi = 0; gi < I.generators().size(); ++gi) {
        const BiForm& g = I.generators()[gi];
        int rem = m - g.degree();
        if (rem < 0) {
            res.cofactors.push_back(SymForm::zero());
            continue;
        }
        std::vector<Rational> cof(rem / 2 + 1);
        for (size_t c = 0; c < cols.size(); ++c)
            if (cols[c].gen == gi) cof[cols[c].b] = (*sol)[c];
        res.cofactors.push_back(SymForm(rem, std::move(cof)));
    }
    return res;
}

bool ideal_equal_up_to(const GradedIdeal& I, const GradedIdeal& J, int bound) {
    for (int m = 0; m <= bound; ++m) {
        auto rows_i = ideal_rows_bi(I, m);
        auto rows_j = ideal_rows_bi(J, m);
        size_t ri = rank_of_rows(rows_i, m + 1);
        size_t rj = rank_of_rows(rows_j, m + 1);
        if (ri != rj) return false;
        auto joint = rows_i;
        joint.insert(joint.end(), rows_j.begin(), rows_j.end());
        if (rank_of_rows(joint, m + 1) != ri) return false;
    }
    return true;
}

namespace {

Partition hook_partition(std::initializer_list<std::pair<int, int>> blocks) {
    std::vector<int> evec;
    for (auto [base, mult] : blocks) {
        if (base < 1 || mult < 0) throw std::invalid_argument("invalid block");
        if (int(evec.size()) < base) evec.resize(base, 0);
        evec[base - 1] += mult;
    }
    return Partition::from_evec(evec);
}

// dimension of the image of c1 * Sym_{m-1} inside Sym_m / I_m
size_t augmented_piece(const GradedIdeal& I, int m) {
    const size_t width = size_t(m / 2) + 1;
    auto rows = ideal_rows_sym(I, m);
    size_t base_rank = rank_of_rows(rows, width);
    BiForm c1 = BiForm::linear(1, 1);
    for (int b = 0; b <= (m - 1) / 2; ++b) {
        BiForm mono = c1.pow(m - 2 * b) * BiForm::monomial(1, b, b);
        rows.push_back(sym_coords(to_sym(mono), m));
    }
    return rank_of_rows(rows, width) - base_rank;
}

bool coeffs_match(const std::vector<long>& got, const std::vector<long>& expect,
                  int bound) {
    for (int m = 0; m <= bound; ++m) {
        long g = m < int(got.size()) ? got[m] : 0;
        long e = m < int(expect.size()) ? expect[m] : 0;
        if (g != e) return false;
    }
    return true;
}

}  // namespace

RingPresentation presentation(int d, const std::string& space, int bound) {
    if (d < 3) throw std::invalid_argument("presentation: d >= 3 required");
    if (bound < 0) bound = 2 * d;
    const int h = d / 2;
    const bool even = (d % 2 == 0);

    RingPresentation rp;
    rp.space = space;
    rp.generators = {{"c1", 1}, {"c2", 2}};

    if (space == "ss-equivariant" || space == "ss-quotient") {
        SymForm tp1 = tp_reduce(hook_partition({{1, d - h - 1}, {h + 1, 1}})).value;
        SymForm tp2 = tp_reduce(hook_partition({{1, d - h - 2}, {h + 2, 1}})).value;
        GradedIdeal I = GradedIdeal::from_sym_generators({tp1, tp2});
        rp.relations = {from_sym(tp1), from_sym(tp2)};
        rp.relation_text = {to_string(tp1), to_string(tp2)};

        if (space == "ss-equivariant" || !even) {
            rp.series = quotient_series(I, bound);
            PoincareSeries expect = kirwan_series(d, bound);
            rp.series_verified = coeffs_match(rp.series.coeffs, expect.coeffs, bound);
            rp.series.closed_form = expect.closed_form;
        } else {
            // augmentation Q<1> + c1 * (quotient): unit in degree 0, c1-multiples above
            rp.series.coeffs.assign(bound + 1, 0);
            rp.series.coeffs[0] = 1;
            for (int m = 1; m <= bound; ++m)
                rp.series.coeffs[m] = long(augmented_piece(I, m));
            // expected: 1 + t P(t)
            PoincareSeries p = stable_series_even(d);
            std::vector<long> expect(bound + 1, 0);
            expect[0] = 1;
            for (int m = 1; m <= bound; ++m)
                if (m - 1 < int(p.coeffs.size())) expect[m] = p.coeffs[m - 1];
            rp.series_verified = coeffs_match(rp.series.coeffs, expect, bound);
            rp.series.closed_form = "1 + t P(t) with P(t) = " + p.closed_form;
        }
        return rp;
    }

    if (space == "stable-quotient") {
        if (!even)
            throw std::invalid_argument(
                "presentation: unsupported (d, space) combination (odd stable-quotient "
                "coincides with ss-quotient)");
        BiForm Pi = moduli_pi(d);
        BiForm dPi = divided_difference(Pi);
        GradedIdeal I({dPi, Pi});
        rp.relations = {dPi, Pi};
        rp.relation_text = {to_string(to_sym(dPi)), to_string(Pi)};
        rp.series = quotient_series(I, bound);
        PoincareSeries expect = stable_series_even(d);
        rp.series_verified = coeffs_match(rp.series.coeffs, expect.coeffs, bound);
        rp.series.closed_form = expect.closed_form;
        return rp;
    }

    throw std::invalid_argument("presentation: unsupported (d, space) combination");
}

RingPresentation presentation_link(int d) {
    if (d % 2 != 0 || d < 6)
        throw std::invalid_argument("presentation_link: even d >= 6 required");
    const int h = d / 2;
    const int k = h / 2;               // floor(h/2)
    const int gdeg = 4 * h - 4 * k - 3;  // cohomological degree of g

    RingPresentation rp;
    rp.space = "link";
    rp.generators = {{"c2", 4}, {"g", gdeg}};
    BiForm c2k = BiForm::monomial(1, k, k);
    rp.relations = {c2k};
    rp.relation_text = {to_string(to_sym(c2k)), "g^2"};

    rp.betti.assign(4 * h - 6, 0);
    for (int a = 0; a < k; ++a) {
        rp.betti[4 * a] += 1;
        rp.betti[gdeg + 4 * a] += 1;
    }
    rp.series.coeffs = rp.betti;
    rp.series.closed_form = "Betti numbers by cohomological degree";

    bool ok = true;
    long total = 0;
    for (int i = 0; i < int(rp.betti.size()); ++i) {
        total += rp.betti[i];
        if (rp.betti[i] != rp.betti[4 * h - 7 - i]) ok = false;
        if (rp.betti[i] != 0 && rp.betti[i] != 1) ok = false;
    }
    if (total != 2 * k) ok = false;
    rp.series_verified = ok;
    return rp;
}

GenFunctionReport gen_function_check(int d, int jmax) {
    if (d < 3) throw std::invalid_argument("gen_function_check: d >= 3 required");
    GenFunctionReport rep;

    // j! G_j from the binomial series: product of (d*u - l*(u-v)), l < j
    rep.coefficients_ok = true;
    for (int j = 0; j <= jmax; ++j) {
        BiForm lhs = BiForm::constant(1);
        for (int l = 0; l < j; ++l) {
            BiForm du = BiForm::linear(d, 0);
            BiForm luv = BiForm::linear(l, -l);  // l*(u-v)
            lhs *= du - luv;
        }
        BiForm rhs = pi_product(d, j);
        if (!(lhs == rhs)) {
            rep.coefficients_ok = false;
            rep.first_failing_j = j;
            break;
        }
    }

    if (d % 2 == 0 && d >= 6) {
        rep.even_case_applicable = true;
        const int h = d / 2;
        std::vector<BiForm> dgens;
        for (int j = h + 1; j <= h + 3; ++j)
            dgens.push_back(divided_difference(pi_product(d, j)));
        GradedIdeal J(dgens);

        BiForm Pi = moduli_pi(d);
        BiForm dPi = divided_difference(Pi);
        GradedIdeal literal({Pi, dPi});
        BiForm c1 = BiForm::linear(1, 1);
        GradedIdeal corrected({c1 * Pi, c1 * dPi});

        rep.even_ideal_claim_ok = ideal_equal_up_to(J, literal, 2 * d);
        rep.even_ideal_corrected_ok = ideal_equal_up_to(J, corrected, 2 * d);
    }

    rep.detail = rep.coefficients_ok
                     ? "coefficient identity holds"
                     : "coefficient identity fails at j=" + std::to_string(rep.first_failing_j);
    if (rep.even_case_applicable) {
        rep.detail += rep.even_ideal_claim_ok
                          ? "; span of the difference generators matches (Pi, dPi)"
                          : "; span of the difference generators does NOT match (Pi, dPi)";
        rep.detail += rep.even_ideal_corrected_ok
                          ? " but matches (c1 Pi, c1 dPi)"
                          : " and does not match (c1 Pi, c1 dPi) either";
    }
    return rep;
}

GcdReport gcd_certificates(int d) {
    if (d < 3) throw std::invalid_argument("gcd_certificates: d >= 3 required");
    BiForm Pi = moduli_pi(d);
    GcdReport rep;
    rep.gcd_swap = gcd_homogeneous(Pi, Pi.swapped());
    rep.gcd_dd = gcd_homogeneous(Pi, divided_difference(Pi));
    BiForm one = BiForm::constant(1);
    rep.swap_coprime = (rep.gcd_swap == one);
    rep.dd_coprime = (rep.gcd_dd == one);
    return rep;
}

BiForm moduli_pi(int d) {
    if (d < 3) throw std::invalid_argument("moduli_pi: d >= 3 required");
    const int h = d / 2;
    return pi_product(d, d % 2 == 0 ? h : h + 1);
}

}  // namespace rootloci
