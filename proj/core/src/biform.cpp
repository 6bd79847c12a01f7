#include "rootloci/biform.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootloci {

namespace {

bool all_zero(const std::vector<Rational>& c) {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

BiForm::BiForm(int degree, std::vector<Rational> coeffs) {
    if (degree < 0 || coeffs.size() != size_t(degree) + 1)
        throw std::invalid_argument("BiForm: coefficient count must be degree+1");
    if (all_zero(coeffs)) {
        deg_ = 0;
        c_.assign(1, Rational(0));
    } else {
        deg_ = degree;
        c_ = std::move(coeffs);
    }
}

BiForm BiForm::constant(const Rational& a) { return BiForm(0, {a}); }

BiForm BiForm::linear(const Rational& cu, const Rational& cv) {
    return BiForm(1, {cv, cu});
}

BiForm BiForm::monomial(const Rational& a, int upow, int vpow) {
    if (upow < 0 || vpow < 0) throw std::invalid_argument("BiForm: negative exponent");
    std::vector<Rational> c(upow + vpow + 1);
    c[upow] = a;
    return BiForm(upow + vpow, std::move(c));
}

bool BiForm::is_zero() const { return all_zero(c_); }

const Rational& BiForm::coeff(int upow) const {
    if (upow < 0 || upow > deg_) throw std::invalid_argument("BiForm: coeff index out of range");
    return c_[upow];
}

BiForm BiForm::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return BiForm(deg_, std::move(c));
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg_ != o.deg_) throw std::invalid_argument("BiForm: degree mismatch on add");
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return BiForm(deg_, std::move(c));
}

BiForm BiForm::operator-(const BiForm& o) const { return *this + (-o); }

BiForm BiForm::operator*(const BiForm& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rational> c(size_t(deg_) + o.deg_ + 1);
    for (int i = 0; i <= deg_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j <= o.deg_; ++j) {
            if (o.c_[j] == 0) continue;
            c[i + j] += c_[i] * o.c_[j];
        }
    }
    return BiForm(deg_ + o.deg_, std::move(c));
}

BiForm BiForm::operator*(const Rational& a) const {
    if (a == 0 || is_zero()) return zero();
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * a;
    return BiForm(deg_, std::move(c));
}

bool BiForm::operator==(const BiForm& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return deg_ == o.deg_ && c_ == o.c_;
}

BiForm BiForm::pow(int n) const {
    if (n < 0) throw std::invalid_argument("BiForm: negative power");
    BiForm r = constant(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

BiForm BiForm::swapped() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return BiForm(deg_, std::move(c));
}

Rational BiForm::evaluate(const Rational& u0, const Rational& v0) const {
    // sum c_k u0^k v0^(deg-k), Horner in u0/..: evaluate as poly in u0 scaled by v0 powers
    Rational acc = 0;
    Rational upow = 1;
    std::vector<Rational> vpow(deg_ + 1);
    vpow[deg_] = 1;
    for (int k = deg_ - 1; k >= 0; --k) vpow[k] = vpow[k + 1] * v0;
    for (int k = 0; k <= deg_; ++k) {
        if (c_[k] != 0) acc += c_[k] * upow * vpow[k];
        upow *= u0;
    }
    return acc;
}

// --- free functions -------------------------------------------------------

namespace {

// Dehomogenized view: p(x) = sum coeffs[k] x^k where x stands for u at v=1.
struct UniPoly {
    std::vector<Rational> c;  // index = power, may have trailing zeros trimmed
    int deg() const { return int(c.size()) - 1; }
};

UniPoly trim(UniPoly p) {
    while (p.c.size() > 1 && p.c.back() == 0) p.c.pop_back();
    return p;
}

bool uni_is_zero(const UniPoly& p) {
    return std::all_of(p.c.begin(), p.c.end(), [](const Rational& x) { return x == 0; });
}

// remainder and quotient of univariate division
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    UniPoly q;
    q.c.assign(std::max<int>(a.deg() - b.deg() + 1, 1), Rational(0));
    Rational lead = b.c.back();
    while (!uni_is_zero(a) && a.deg() >= b.deg()) {
        int shift = a.deg() - b.deg();
        Rational f = a.c.back() / lead;
        q.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i) a.c[shift + i] -= f * b.c[i];
        a = trim(a);
        if (a.c.size() == 1 && a.c[0] == 0) break;
    }
    return {q, trim(a)};
}

struct Stripped {
    int uval, vval;
    UniPoly p;  // nonzero constant term, degree = stripped form degree
};

Stripped strip(const BiForm& a) {
    int lo = 0;
    while (a.coeff(lo) == 0) ++lo;
    int hi = a.degree();
    while (a.coeff(hi) == 0) --hi;
    UniPoly p;
    p.c.assign(a.coeffs().begin() + lo, a.coeffs().begin() + hi + 1);
    return {lo, a.degree() - hi, p};
}

BiForm rehomogenize(const UniPoly& p, int uval, int vval) {
    int d = p.deg();
    std::vector<Rational> c(uval + d + vval + 1);
    for (int k = 0; k <= d; ++k) c[uval + k] = p.c[k];
    return BiForm(uval + d + vval, std::move(c));
}

}  // namespace

BiForm divided_difference(const BiForm& p) {
    BiForm num = p - p.swapped();
    if (num.is_zero()) return BiForm::zero();
    return exact_div(num, BiForm::linear(1, -1));
}

BiForm exact_div(const BiForm& a, const BiForm& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero form");
    if (a.is_zero()) return BiForm::zero();
    Stripped sa = strip(a), sb = strip(b);
    if (sa.uval < sb.uval || sa.vval < sb.vval)
        throw std::runtime_error("inexact division");
    auto [q, r] = uni_divmod(sa.p, sb.p);
    if (!uni_is_zero(r)) throw std::runtime_error("inexact division");
    return rehomogenize(trim(q), sa.uval - sb.uval, sa.vval - sb.vval);
}

BiForm gcd_homogeneous(const BiForm& a, const BiForm& b) {
    auto normalize = [](const BiForm& f) {
        if (f.is_zero()) return f;
        int hi = f.degree();
        while (f.coeff(hi) == 0) --hi;
        Rational inv = 1 / f.coeff(hi);
        return f * inv;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    Stripped sa = strip(a), sb = strip(b);
    UniPoly x = sa.p, y = sb.p;
    while (!uni_is_zero(y) && !(y.c.size() == 1 && y.c[0] == 0)) {
        auto [q, r] = uni_divmod(x, y);
        (void)q;
        x = y;
        y = r;
        if (uni_is_zero(y)) break;
        // keep coefficients small: make monic each step
        Rational lead = y.c.back();
        for (auto& cc : y.c) cc /= lead;
    }
    BiForm g = rehomogenize(x, std::min(sa.uval, sb.uval), std::min(sa.vval, sb.vval));
    return normalize(g);
}

// --- SymForm --------------------------------------------------------------

SymForm::SymForm(int degree, std::vector<Rational> coeffs) {
    if (degree < 0 || coeffs.size() != size_t(degree / 2) + 1)
        throw std::invalid_argument("SymForm: coefficient count must be degree/2+1");
    if (all_zero(coeffs)) {
        deg_ = 0;
        c_.assign(1, Rational(0));
    } else {
        deg_ = degree;
        c_ = std::move(coeffs);
    }
}

SymForm SymForm::constant(const Rational& a) { return SymForm(0, {a}); }

bool SymForm::is_zero() const { return all_zero(c_); }

const Rational& SymForm::coeff(int c2pow) const {
    if (c2pow < 0 || c2pow > deg_ / 2)
        throw std::invalid_argument("SymForm: coeff index out of range");
    return c_[c2pow];
}

bool SymForm::operator==(const SymForm& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return deg_ == o.deg_ && c_ == o.c_;
}

SymForm SymForm::operator*(const Rational& a) const {
    if (a == 0 || is_zero()) return zero();
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * a;
    return SymForm(deg_, std::move(c));
}

bool SymForm::all_integer() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
}

SymForm to_sym(const BiForm& a) {
    if (!a.is_symmetric()) throw std::runtime_error("not symmetric");
    if (a.is_zero()) return SymForm::zero();
    const int m = a.degree();
    std::vector<Rational> out(m / 2 + 1);
    BiForm work = a;
    BiForm c1 = BiForm::linear(1, 1);
    for (int k = 0; k <= m / 2; ++k) {
        if (work.is_zero()) break;
        // v=0 specialization: top u-coefficient of the remaining degree m-2k form
        Rational s = work.coeff(work.degree());
        out[k] = s;
        work = work - c1.pow(m - 2 * k) * s;
        if (work.is_zero()) break;
        work = exact_div(work, BiForm::monomial(1, 1, 1));
    }
    return SymForm(m, std::move(out));
}

BiForm from_sym(const SymForm& s) {
    if (s.is_zero()) return BiForm::zero();
    const int m = s.degree();
    BiForm acc = BiForm::zero();
    BiForm c1 = BiForm::linear(1, 1);
    for (int k = 0; k <= m / 2; ++k) {
        if (s.coeff(k) == 0) continue;
        acc += c1.pow(m - 2 * k) * BiForm::monomial(s.coeff(k), k, k);
    }
    if (acc.is_zero()) return BiForm::zero();
    return acc;
}

// --- rendering ------------------------------------------------------------

namespace {

void append_term(std::string& out, bool first, const Rational& coeff,
                 const std::string& factors) {
    bool neg = coeff < 0;
    Rational mag = neg ? Rational(-coeff) : coeff;
    std::string c = mag.get_str();
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (factors.empty()) {
        out += c;
    } else if (mag == 1) {
        out += factors;
    } else {
        out += c + "*" + factors;
    }
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string join_factors(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace

std::string to_string(const BiForm& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        const Rational& c = a.coeff(k);
        if (c == 0) continue;
        append_term(out, first, c, join_factors(power("u", k), power("v", a.degree() - k)));
        first = false;
    }
    return out;
}

std::string to_string(const SymForm& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= s.degree() / 2; ++k) {
        const Rational& c = s.coeff(k);
        if (c == 0) continue;
        append_term(out, first, c,
                    join_factors(power("c1", s.degree() - 2 * k), power("c2", k)));
        first = false;
    }
    return out;
}

}  // namespace rootloci
