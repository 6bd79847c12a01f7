#include "rootloci/equivariant.hpp"

#include <stdexcept>

#include "rootloci/rational.hpp"

namespace rootloci {

FormPoly FormPoly::variable() {
    FormPoly p;
    p.terms_[1] = BiForm::constant(1);
    return p;
}

FormPoly FormPoly::constant(const BiForm& c) {
    FormPoly p;
    if (!c.is_zero()) p.terms_[0] = c;
    return p;
}

void FormPoly::set_coeff(int exp, const BiForm& c) {
    if (exp < 0) throw std::invalid_argument("FormPoly: negative exponent");
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

const BiForm& FormPoly::coeff(int exp) const {
    static const BiForm kZero = BiForm::zero();
    auto it = terms_.find(exp);
    return it == terms_.end() ? kZero : it->second;
}

int FormPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

FormPoly FormPoly::operator+(const FormPoly& o) const {
    FormPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            BiForm s = it->second + c;
            if (s.is_zero())
                r.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

FormPoly FormPoly::operator*(const FormPoly& o) const {
    FormPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            BiForm prod = c1 * c2;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                r.terms_[e1 + e2] = prod;
            } else {
                BiForm s = it->second + prod;
                if (s.is_zero())
                    r.terms_.erase(it);
                else
                    it->second = s;
            }
        }
    return r;
}

FormPoly FormPoly::operator*(const BiForm& c) const {
    FormPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, f] : terms_) r.terms_[e] = f * c;
    return r;
}

BiForm FormPoly::evaluate(const BiForm& arg) const {
    if (terms_.empty()) return BiForm::zero();
    BiForm acc = BiForm::zero();
    for (int k = degree(); k >= 0; --k) acc = acc * arg + coeff(k);
    return acc;
}

std::vector<BiForm> weights(int d) {
    if (d < 0) throw std::invalid_argument("weights: negative degree");
    std::vector<BiForm> w;
    w.reserve(d + 1);
    for (int j = 0; j <= d; ++j) w.push_back(BiForm::linear(j, d - j));
    return w;
}

FormPoly build_Q(int k) {
    FormPoly q = FormPoly::constant(BiForm::constant(1));
    for (const BiForm& w : weights(k)) {
        FormPoly lin = FormPoly::variable() + FormPoly::constant(w);
        q = q * lin;
    }
    return q;
}

BiForm chern(int d, int j) {
    if (j < 0 || j > d + 1) throw std::invalid_argument("chern: index out of range");
    return build_Q(d).coeff(d + 1 - j);
}

FormPoly build_q(int d) {
    FormPoly Q = build_Q(d);
    FormPoly q;
    for (const auto& [e, c] : Q.terms())
        if (e >= 1) q.set_coeff(e - 1, c);
    return q;
}

void MultiPoly::add_term(const std::vector<int>& key, const BiForm& c) {
    if (int(key.size()) != nvars) throw std::invalid_argument("MultiPoly: key arity mismatch");
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms[key] = c;
    } else {
        BiForm s = it->second + c;
        if (s.is_zero())
            terms.erase(it);
        else
            it->second = s;
    }
}

namespace {

MultiPoly multi_constant(int nvars, const BiForm& c) {
    MultiPoly p;
    p.nvars = nvars;
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly multi_add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [k, c] : b.terms) r.add_term(k, c);
    return r;
}

MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.nvars = a.nvars;
    for (const auto& [k1, c1] : a.terms)
        for (const auto& [k2, c2] : b.terms) {
            std::vector<int> k(k1.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = k1[i] + k2[i];
            r.add_term(k, c1 * c2);
        }
    return r;
}

}  // namespace

MultiPoly pullback_q(int d, const std::vector<int>& evec) {
    long total = 0;
    for (size_t i = 0; i < evec.size(); ++i) {
        if (evec[i] < 0) throw std::invalid_argument("pullback_q: partition/weight mismatch");
        total += long(i + 1) * evec[i];
    }
    if (total != d) throw std::invalid_argument("pullback_q: partition/weight mismatch");

    const int r = int(evec.size());
    // phi = sum_i i*x_i over blocks with multiplicity > 0
    MultiPoly phi;
    phi.nvars = r;
    for (int i = 1; i <= r; ++i) {
        if (evec[i - 1] == 0) continue;
        std::vector<int> key(r, 0);
        key[i - 1] = 1;
        phi.add_term(key, BiForm::constant(i));
    }

    // Horner: q(phi) built from the top coefficient down
    FormPoly q = build_q(d);
    MultiPoly acc = multi_constant(r, BiForm::zero());
    for (int k = q.degree(); k >= 0; --k) {
        acc = multi_mul(acc, phi);
        const BiForm& c = q.coeff(k);
        if (!c.is_zero()) acc = multi_add(acc, multi_constant(r, c));
    }
    return acc;
}

ReducedElement reduce(const MultiPoly& p, const std::vector<int>& evec) {
    if (p.nvars != int(evec.size()))
        throw std::invalid_argument("reduce: partition/weight mismatch");
    const int r = p.nvars;
    std::map<std::vector<int>, BiForm> work = p.terms;

    for (int i = r - 1; i >= 0; --i) {
        const int e = evec[i];
        // relation: x_i^{e+1} = -sum_{t=0}^{e} C_{e+1-t}(S^e) x_i^t
        FormPoly Q = build_Q(e);
        std::vector<BiForm> rel(e + 1);
        for (int t = 0; t <= e; ++t) rel[t] = -Q.coeff(t);

        bool again = true;
        while (again) {
            again = false;
            std::map<std::vector<int>, BiForm> next;
            auto add = [&next](const std::vector<int>& k, const BiForm& c) {
                if (c.is_zero()) return;
                auto it = next.find(k);
                if (it == next.end()) {
                    next[k] = c;
                } else {
                    BiForm s = it->second + c;
                    if (s.is_zero())
                        next.erase(it);
                    else
                        it->second = s;
                }
            };
            for (const auto& [k, c] : work) {
                if (k[i] <= e) {
                    add(k, c);
                    continue;
                }
                again = true;
                for (int t = 0; t <= e; ++t) {
                    if (rel[t].is_zero()) continue;
                    std::vector<int> nk = k;
                    nk[i] = k[i] - (e + 1) + t;
                    add(nk, c * rel[t]);
                }
            }
            work = std::move(next);
        }
    }

    ReducedElement re;
    re.evec = evec;
    re.terms = std::move(work);
    return re;
}

BiForm integrate(const ReducedElement& re) {
    auto it = re.terms.find(re.evec);
    return it == re.terms.end() ? BiForm::zero() : it->second;
}

BiForm integrate_closed(const FormPoly& f, int e) {
    if (e < 0) throw std::invalid_argument("integrate_closed: negative degree");
    BiForm vmu = BiForm::linear(-1, 1);  // v - u
    BiForm denom = vmu.pow(e);
    // per-exponent evaluation table: T_k = sum_s (-1)^s y_s^k / (s!(e-s)!).
    // Each T_k is itself divisible by (v-u)^e (iterated finite differences in s
    // each pull out one factor), so the division is exact term by term.
    BiForm acc = BiForm::zero();
    for (const auto& [k, c] : f.terms()) {
        BiForm tk = BiForm::zero();
        for (int s = 0; s <= e; ++s) {
            BiForm ys = BiForm::linear(-(e - s), -s);  // -(e-s)u - s v
            Rational w = Rational(1) / Rational(factorial(s) * factorial(e - s));
            if (s % 2 == 1) w = -w;
            tk += ys.pow(k) * w;
        }
        if (tk.is_zero()) continue;
        acc += c * exact_div(tk, denom);
    }
    return acc;
}

BiForm integrate_rational(const BiForm& C, const FormPoly& g, int e) {
    if (e < 0) throw std::invalid_argument("integrate_rational: negative degree");
    if (g.degree() > 1) throw std::invalid_argument("integrate_rational: g must be linear");
    const BiForm& B = g.coeff(1);
    const BiForm& A = g.coeff(0);

    std::vector<BiForm> gs(e + 1);
    for (int s = 0; s <= e; ++s) {
        BiForm ys = BiForm::linear(-(e - s), -s);
        gs[s] = B * ys + A;
        if (gs[s].is_zero()) throw std::runtime_error("nonexistent class");
    }

    // prefix/suffix products to form prod_{t != s} g_t
    std::vector<BiForm> pre(e + 2), suf(e + 2);
    pre[0] = BiForm::constant(1);
    for (int s = 0; s <= e; ++s) pre[s + 1] = pre[s] * gs[s];
    suf[e + 1] = BiForm::constant(1);
    for (int s = e; s >= 0; --s) suf[s] = suf[s + 1] * gs[s];

    BiForm num = BiForm::zero();
    for (int s = 0; s <= e; ++s) {
        Rational w = Rational(1) / Rational(factorial(s) * factorial(e - s));
        if (s % 2 == 1) w = -w;
        num += (pre[s] * suf[s + 1]) * w;
    }
    num = C * num;
    if (num.is_zero()) return BiForm::zero();

    BiForm denom = suf[0] * BiForm::linear(-1, 1).pow(e);
    BiForm q;
    try {
        q = exact_div(num, denom);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("nonexistent class");
    }
    return q;
}

}  // namespace rootloci
