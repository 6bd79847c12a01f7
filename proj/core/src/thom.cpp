#include "rootloci/thom.hpp"

#include <functional>
#include <stdexcept>

#include "rootloci/equivariant.hpp"

namespace rootloci {

namespace {

ThomPoly make_tp(Partition p, const BiForm& expansion, const char* method) {
    ThomPoly tp{std::move(p), 0, SymForm::zero(), method};
    tp.codim = tp.partition.codim();
    tp.value = to_sym(expansion);
    if (!tp.value.is_zero() && tp.value.degree() != tp.codim)
        throw std::runtime_error("tp: value degree does not match codimension");
    return tp;
}

// weights of S^d with index d-k removed, i.e. C_{d+1}/((d-k)u + kv)
BiForm product_without(const std::vector<BiForm>& w, int skip) {
    BiForm acc = BiForm::constant(1);
    for (int j = 0; j < int(w.size()); ++j)
        if (j != skip) acc *= w[j];
    return acc;
}

}  // namespace

ThomPoly tp_reduce(const Partition& p) {
    const auto& evec = p.evec();
    MultiPoly pulled = pullback_q(p.d(), evec);
    ReducedElement red = reduce(pulled, evec);
    return make_tp(p, integrate(red), "reduce");
}

ThomPoly tp_naive(const Partition& p) {
    const int d = p.d();
    const int n = p.n();
    const auto& e = p.evec();
    std::vector<int> active;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) active.push_back(int(i));

    // S_i(j_i) = sum_s (-1)^s (-i)^{j_i} ((e_i - s)u + s v)^{j_i} / (s!(e_i-s)!)
    auto block_sum = [&](int i, int ji) {
        BiForm acc = BiForm::zero();
        Rational sign_i = Rational(pow_int(-(i + 1), ji));
        for (int s = 0; s <= e[i]; ++s) {
            Rational w = sign_i / Rational(factorial(s) * factorial(e[i] - s));
            if (s % 2 == 1) w = -w;
            BiForm base = BiForm::linear(e[i] - s, s);
            acc += base.pow(ji) * w;
        }
        return acc;
    };

    // memoized per-block sums S[t][c]
    std::vector<std::vector<BiForm>> S(active.size());
    for (size_t t = 0; t < active.size(); ++t) {
        S[t].reserve(d + 1);
        for (int c = 0; c <= d; ++c) S[t].push_back(block_sum(active[t], c));
    }

    BiForm total = BiForm::zero();
    FormPoly Q = build_Q(d);  // C_{d-j} = coefficient of y^{j+1}
    std::vector<int> comp(active.size(), 0);
    // iterate over compositions of j into |active| parts for each j in [n, d]
    std::function<void(int, size_t, int)> rec = [&](int j, size_t idx, int used) {
        if (idx + 1 == comp.size()) {
            comp[idx] = j - used;
            Rational mult = Rational(factorial(j));
            for (int c : comp) mult /= Rational(factorial(c));
            BiForm term = Q.coeff(j + 1) * mult;
            for (size_t t = 0; t < active.size(); ++t) {
                if (term.is_zero()) break;
                term *= S[t][comp[t]];
            }
            if (!term.is_zero()) total += term;
            return;
        }
        for (int c = 0; c <= j - used; ++c) {
            comp[idx] = c;
            rec(j, idx + 1, used + c);
        }
    };
    for (int j = n; j <= d; ++j) rec(j, 0, 0);

    BiForm divided = total.is_zero()
                         ? BiForm::zero()
                         : exact_div(total, BiForm::linear(-1, 1).pow(n));
    return make_tp(p, divided, "naive");
}

ThomPoly tp_sum(const Partition& p) {
    const int d = p.d();
    const int n = p.n();
    const auto& e = p.evec();
    const int r = p.r();

    // accumulate one rational weight per k = sum i*s_i over all s-tuples
    std::vector<Rational> wk(d + 1, Rational(0));
    std::vector<int> s(r, 0);
    while (true) {
        int k = 0, total_s = 0;
        Rational w = 1;
        for (int i = 0; i < r; ++i) {
            k += (i + 1) * s[i];
            total_s += s[i];
            w /= Rational(factorial(s[i]) * factorial(e[i] - s[i]));
        }
        if (total_s % 2 == 1) w = -w;
        wk[k] += w;
        int pos = 0;
        while (pos < r && s[pos] == e[pos]) s[pos++] = 0;
        if (pos == r) break;
        ++s[pos];
    }

    // term for k is C_{d+1}/((d-k)u + kv): the product of the other d weights
    std::vector<BiForm> w = weights(d);
    std::vector<BiForm> pre(d + 2), suf(d + 2);
    pre[0] = BiForm::constant(1);
    for (int j = 0; j <= d; ++j) pre[j + 1] = pre[j] * w[j];
    suf[d + 1] = BiForm::constant(1);
    for (int j = d; j >= 0; --j) suf[j] = suf[j + 1] * w[j];

    BiForm total = BiForm::zero();
    for (int k = 0; k <= d; ++k) {
        if (wk[k] == 0) continue;
        int skip = d - k;  // weight (d-k)u + kv has index d-k
        total += (pre[skip] * suf[skip + 1]) * wk[k];
    }

    BiForm divided = total.is_zero()
                         ? BiForm::zero()
                         : exact_div(total, BiForm::linear(-1, 1).pow(n));
    return make_tp(p, divided, "sum");
}

ThomPoly tp_power_block(int i, int e) {
    if (i < 1 || e < 1) throw std::invalid_argument("tp_power_block: positive i, e required");
    const int d = i * e;
    BiForm acc = BiForm::constant(Rational(pow_int(i, e)));
    for (int j = 0; j <= d; ++j)
        if (j % i != 0) acc *= BiForm::linear(j, d - j);
    std::vector<int> evec(i, 0);
    evec[i - 1] = e;
    return make_tp(Partition::from_evec(evec), acc, "power-block");
}

ThomPoly tp_two_block(int i, int ei, int j, int ej) {
    if (i == j) throw std::invalid_argument("tp_two_block: blocks must differ");
    if (i < 1 || j < 1 || ei < 1 || ej < 1)
        throw std::invalid_argument("tp_two_block: positive arguments required");
    const int d = i * ei + j * ej;

    // P_s = i * Q_{ei}(a_s / i) with a_s = j*ej*u - j*s*(u-v), computed with
    // cleared denominators: P_s = i^{-ei} * prod_t (a_s + i*t*u + i*(ei-t)*v)
    std::vector<BiForm> P(ej + 1);
    for (int s = 0; s <= ej; ++s) {
        BiForm a = BiForm::linear(j * ej - j * s, j * s);
        BiForm prod = BiForm::constant(1);
        for (int t = 0; t <= ei; ++t) prod *= a + BiForm::linear(i * t, i * (ei - t));
        P[s] = prod * (Rational(1) / Rational(pow_int(i, ei)));
    }

    std::vector<BiForm> pre(ej + 2), suf(ej + 2);
    pre[0] = BiForm::constant(1);
    for (int s = 0; s <= ej; ++s) pre[s + 1] = pre[s] * P[s];
    suf[ej + 1] = BiForm::constant(1);
    for (int s = ej; s >= 0; --s) suf[s] = suf[s + 1] * P[s];

    BiForm num = BiForm::zero();
    for (int s = 0; s <= ej; ++s) {
        Rational w = Rational(1) / Rational(factorial(s) * factorial(ej - s));
        if (s % 2 == 1) w = -w;
        num += (pre[s] * suf[s + 1]) * w;
    }

    BiForm C = product_without(weights(d), -1);
    BiForm result = exact_div(C * num, suf[0] * BiForm::linear(-1, 1).pow(ej));

    std::vector<int> evec(std::max(i, j), 0);
    evec[i - 1] = ei;
    evec[j - 1] = ej;
    return make_tp(Partition::from_evec(evec), result, "two-block");
}

ThomPoly tp_kirwan(int e1, int j) {
    if (j < 2) throw std::invalid_argument("tp_kirwan: j >= 2 required");
    if (e1 < 1) throw std::invalid_argument("tp_kirwan: e1 >= 1 required");
    const int d = e1 + j;
    BiForm result = divided_difference(pi_product(d, j));
    std::vector<int> evec(j, 0);
    evec[0] = e1;
    evec[j - 1] += 1;
    return make_tp(Partition::from_evec(evec), result, "kirwan");
}

ThomPoly tp_e3(int h, int j) {
    if (h <= 2 || j <= 1 || j >= h)
        throw std::invalid_argument("tp_e3: need h > 2 and 1 < j < h");
    const int d = 2 * h;
    BiForm Pi = pi_product(d, h);
    // difference quotient of two partial products of the weights l*u + (d-l)*v
    BiForm first = BiForm::constant(1);
    for (int l = h - j + 1; l <= h; ++l) first *= BiForm::linear(l, d - l);
    BiForm second = BiForm::constant(1);
    for (int l = 0; l <= j - 1; ++l) second *= BiForm::linear(l, d - l);
    BiForm Dj = exact_div(first - second, BiForm::linear(1, -1));
    BiForm result = divided_difference(Dj * Pi);

    std::vector<int> evec(h, 0);
    evec[0] = h - j;
    evec[j - 1] += 1;
    evec[h - 1] += 1;
    return make_tp(Partition::from_evec(evec), result, "difference-quotient");
}

BiForm pi_product(int d, int nfactors) {
    BiForm acc = BiForm::constant(1);
    for (int l = 0; l < nfactors; ++l) acc *= BiForm::linear(d - l, l);
    return acc;
}

Integer hilbert_degree(const Partition& p) {
    Integer num = factorial(p.n());
    for (size_t i = 0; i < p.evec().size(); ++i) {
        int ei = p.evec()[i];
        if (ei == 0) continue;
        Integer efac = factorial(ei);
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), efac.get_mpz_t());
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), i + 1, ei);
        num *= ip;
    }
    return num;
}

Rational projective_degree(const ThomPoly& tp) {
    Rational x = Rational(1) / Rational(tp.partition.d());
    return from_sym(tp.value).evaluate(x, x);
}

RelationsReport check_relations_even(int h) {
    if (h <= 2) throw std::invalid_argument("check_relations_even: h > 2 required");
    auto part = [&](std::initializer_list<std::pair<int, int>> blocks) {
        std::vector<int> evec;
        for (auto [base, mult] : blocks) {
            if (int(evec.size()) < base) evec.resize(base, 0);
            evec[base - 1] += mult;
        }
        return Partition::from_evec(evec);
    };
    BiForm l0 = from_sym(tp_reduce(part({{1, h}, {h, 1}})).value);
    BiForm l0p = from_sym(tp_reduce(part({{1, h - 2}, {2, 1}, {h, 1}})).value);
    BiForm l1 = from_sym(tp_reduce(part({{1, h - 1}, {h + 1, 1}})).value);
    BiForm l2 = from_sym(tp_reduce(part({{1, h - 2}, {h + 2, 1}})).value);

    BiForm c1 = BiForm::linear(1, 1);
    RelationsReport rep;
    rep.identity1 = (l1 == c1 * l0 * Rational(h));
    rep.identity2 =
        (l2 * Rational(h - 1) ==
         c1 * l1 * Rational((h - 1) * (h - 2)) + c1 * l0p);
    if (!rep.identity1) rep.detail += "first multiplication identity violated; ";
    if (!rep.identity2) rep.detail += "second multiplication identity violated; ";
    if (rep.ok()) rep.detail = "both identities hold";
    return rep;
}

}  // namespace rootloci
