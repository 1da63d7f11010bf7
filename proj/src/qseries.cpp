#include "etaprove/qseries.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace etaprove {

namespace {

std::int64_t exponent_index(const Rational& e)
{
    Rational scaled = e * kLattice;
    if (!scaled.is_integer())
        throw LatticeError("exponent " + e.str() + " is not a multiple of 1/24");
    return scaled.to_int64();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

// Sort, merge equal indices, drop zeros and anything at or past trunc.
std::vector<QSeries::Term> normalize_terms(std::vector<QSeries::Term> terms, std::int64_t trunc)
{
    std::sort(terms.begin(), terms.end(),
              [](const QSeries::Term& a, const QSeries::Term& b) { return a.index < b.index; });
    std::vector<QSeries::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (t.index >= trunc)
            break;
        if (!out.empty() && out.back().index == t.index)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (out.back().coeff.is_zero())
            out.pop_back();
    }
    return out;
}

// Largest g dividing every (index - base) over the terms; 0 when there is only
// the base term.
std::int64_t index_step(std::span<const QSeries::Term> terms)
{
    std::int64_t g = 0;
    if (terms.empty())
        return 0;
    for (const auto& t : terms)
        g = std::gcd(g, t.index - terms.front().index);
    return g;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    if (b > 0 && a > hi - b)
        return hi;
    if (b < 0 && a < lo - b)
        return lo;
    return a + b;
}

}  // namespace

std::int64_t lattice_ceil(const Rational& e)
{
    return to_int64((e * kLattice).ceil());
}

QSeries QSeries::from_lattice(std::vector<Term> terms, std::int64_t trunc_index)
{
    QSeries s;
    s.trunc_ = trunc_index;
    s.terms_ = normalize_terms(std::move(terms), trunc_index);
    return s;
}

QSeries QSeries::zero(const Rational& trunc)
{
    return from_lattice({}, lattice_ceil(trunc));
}

QSeries QSeries::constant(const Rational& c, const Rational& trunc)
{
    return from_lattice({Term{0, c}}, lattice_ceil(trunc));
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent, const Rational& trunc)
{
    return from_lattice({Term{exponent_index(exponent), c}}, lattice_ceil(trunc));
}

QSeries QSeries::from_terms(std::span<const std::pair<Rational, Rational>> terms,
                            const Rational& trunc)
{
    std::vector<Term> v;
    v.reserve(terms.size());
    for (const auto& [e, c] : terms)
        v.push_back(Term{exponent_index(e), c});
    return from_lattice(std::move(v), lattice_ceil(trunc));
}

QSeries QSeries::from_coefficients(std::span<const Rational> coeffs, std::int64_t start,
                                   const Rational& trunc)
{
    std::vector<Term> v;
    v.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        v.push_back(Term{(start + static_cast<std::int64_t>(k)) * kLattice, coeffs[k]});
    return from_lattice(std::move(v), lattice_ceil(trunc));
}

Rational QSeries::coeff(const Rational& exponent) const
{
    std::int64_t idx = exponent_index(exponent);
    if (idx >= trunc_)
        throw SeriesError("coefficient of q^" + exponent.str() + " requested past O(q^" +
                          trunc().str() + ")");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, std::int64_t i) { return t.index < i; });
    if (it != terms_.end() && it->index == idx)
        return it->coeff;
    return Rational(0);
}

std::optional<LeadingTerm> QSeries::leading_term() const
{
    if (terms_.empty())
        return std::nullopt;
    return LeadingTerm{terms_.front().exponent(), terms_.front().coeff};
}

std::int64_t QSeries::valuation_index() const
{
    return terms_.empty() ? trunc_ : terms_.front().index;
}

bool QSeries::has_integer_exponents() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.index % kLattice == 0; });
}

QSeries QSeries::truncated_index(std::int64_t t) const
{
    QSeries s;
    s.trunc_ = std::min(trunc_, t);
    for (const auto& term : terms_) {
        if (term.index >= s.trunc_)
            break;
        s.terms_.push_back(term);
    }
    return s;
}

QSeries QSeries::truncated(const Rational& t) const
{
    return truncated_index(lattice_ceil(t));
}

QSeries QSeries::shifted(const Rational& e) const
{
    std::int64_t d = exponent_index(e);
    QSeries s = *this;
    for (auto& t : s.terms_)
        t.index += d;
    s.trunc_ = sat_add(s.trunc_, d);
    return s;
}

QSeries QSeries::scaled(const Rational& c) const
{
    if (c.is_zero())
        return from_lattice({}, trunc_);
    QSeries s = *this;
    for (auto& t : s.terms_)
        t.coeff *= c;
    return s;
}

QSeries QSeries::dilated(std::int64_t m) const
{
    if (m < 1)
        throw std::invalid_argument("dilation factor must be positive");
    QSeries s = *this;
    for (auto& t : s.terms_)
        t.index *= m;
    s.trunc_ = trunc_ * m;
    return s;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;
        if (t.index == 0) {
            os << c;
            continue;
        }
        if (c != Rational(1))
            os << c << "*";
        os << "q";
        Rational e = t.exponent();
        if (e != Rational(1)) {
            if (e.is_integer() && e.sign() > 0)
                os << "^" << e;
            else
                os << "^(" << e << ")";
        }
    }
    if (!first)
        os << " + ";
    Rational tr = trunc();
    os << "O(q";
    if (tr != Rational(1)) {
        if (tr.is_integer() && tr.sign() > 0)
            os << "^" << tr;
        else
            os << "^(" << tr << ")";
    }
    os << ")";
    return os.str();
}

bool operator==(const QSeries::Term& a, const QSeries::Term& b)
{
    return a.index == b.index && a.coeff == b.coeff;
}

bool operator==(const QSeries& a, const QSeries& b)
{
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

QSeries series_add(const QSeries& a, const QSeries& b)
{
    std::int64_t trunc = std::min(a.trunc_index(), b.trunc_index());
    std::vector<QSeries::Term> out;
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        std::int64_t ia = i < ta.size() ? ta[i].index : std::numeric_limits<std::int64_t>::max();
        std::int64_t ib = j < tb.size() ? tb[j].index : std::numeric_limits<std::int64_t>::max();
        std::int64_t idx = std::min(ia, ib);
        if (idx >= trunc)
            break;
        Rational c;
        if (ia == idx)
            c += ta[i++].coeff;
        if (ib == idx)
            c += tb[j++].coeff;
        if (!c.is_zero())
            out.push_back({idx, std::move(c)});
    }
    return QSeries::from_lattice(std::move(out), trunc);
}

QSeries series_neg(const QSeries& a)
{
    return a.scaled(Rational(-1));
}

QSeries series_sub(const QSeries& a, const QSeries& b)
{
    return series_add(a, series_neg(b));
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    std::int64_t trunc = std::min(sat_add(a.trunc_index(), b.valuation_index()),
                                  sat_add(b.trunc_index(), a.valuation_index()));
    if (a.is_zero() || b.is_zero())
        return QSeries::from_lattice({}, trunc);

    auto ta = a.terms();
    auto tb = b.terms();
    const std::int64_t base = ta.front().index + tb.front().index;
    if (base >= trunc)
        return QSeries::from_lattice({}, trunc);
    std::int64_t step = std::gcd(index_step(ta), index_step(tb));
    if (step == 0)
        step = 1;
    const std::int64_t slots = ceil_div(trunc - base, step);

    std::vector<Rational> acc(static_cast<std::size_t>(slots));
    std::vector<bool> touched(static_cast<std::size_t>(slots), false);
    for (const auto& x : ta) {
        std::int64_t off_x = x.index - ta.front().index;
        if (off_x / step >= slots)
            break;
        for (const auto& y : tb) {
            std::int64_t slot = (off_x + y.index - tb.front().index) / step;
            if (slot >= slots)
                break;
            acc[slot].add_product(x.coeff, y.coeff);
            touched[slot] = true;
        }
    }
    std::vector<QSeries::Term> out;
    for (std::int64_t s = 0; s < slots; ++s) {
        if (touched[s] && !acc[s].is_zero())
            out.push_back({base + s * step, std::move(acc[s])});
    }
    return QSeries::from_lattice(std::move(out), trunc);
}

QSeries series_invert(const QSeries& a, const Rational& depth)
{
    if (a.is_zero())
        throw ZeroLeadingTerm("cannot invert a series that is zero up to O(q^" + a.trunc().str() +
                              ")");
    auto ta = a.terms();
    const std::int64_t ord = ta.front().index;
    const std::int64_t trunc =
        std::min(lattice_ceil(depth), sat_add(a.trunc_index(), -2 * ord));
    const std::int64_t base = -ord;
    if (base >= trunc)
        return QSeries::from_lattice({}, trunc);
    std::int64_t step = index_step(ta);
    if (step == 0)
        step = 1;
    const std::int64_t slots = ceil_div(trunc - base, step);

    // b_n = -(1/a_0) sum_{k>=1} a_k b_{n-k}, over the sparse terms of a.
    const Rational inv_lead = Rational(1) / ta.front().coeff;
    std::vector<std::pair<std::int64_t, const Rational*>> tail;
    for (std::size_t k = 1; k < ta.size(); ++k)
        tail.emplace_back((ta[k].index - ord) / step, &ta[k].coeff);

    std::vector<Rational> b(static_cast<std::size_t>(slots));
    b[0] = inv_lead;
    for (std::int64_t n = 1; n < slots; ++n) {
        Rational s;
        for (const auto& [k, c] : tail) {
            if (k > n)
                break;
            if (!b[n - k].is_zero())
                s.add_product(*c, b[n - k]);
        }
        if (!s.is_zero())
            b[n] = -(s * inv_lead);
    }
    std::vector<QSeries::Term> out;
    for (std::int64_t s = 0; s < slots; ++s)
        if (!b[s].is_zero())
            out.push_back({base + s * step, std::move(b[s])});
    return QSeries::from_lattice(std::move(out), trunc);
}

QSeries series_div(const QSeries& a, const QSeries& b)
{
    if (b.is_zero())
        throw ZeroLeadingTerm("division by a series that is zero up to O(q^" + b.trunc().str() +
                              ")");
    auto tb = b.terms();
    const std::int64_t ord_b = tb.front().index;
    const std::int64_t trunc = std::min(sat_add(a.trunc_index(), -ord_b),
                                        sat_add(b.trunc_index(), a.valuation_index() - 2 * ord_b));
    if (a.is_zero())
        return QSeries::from_lattice({}, trunc);
    auto ta = a.terms();
    const std::int64_t base = ta.front().index - ord_b;
    if (base >= trunc)
        return QSeries::from_lattice({}, trunc);
    std::int64_t step = std::gcd(index_step(ta), index_step(tb));
    if (step == 0)
        step = 1;
    const std::int64_t slots = ceil_div(trunc - base, step);

    std::vector<Rational> c(static_cast<std::size_t>(slots));
    for (const auto& t : ta) {
        std::int64_t slot = (t.index - ta.front().index) / step;
        if (slot >= slots)
            break;
        c[slot] = t.coeff;
    }
    const Rational inv_lead = Rational(1) / tb.front().coeff;
    const bool unit_lead = tb.front().coeff == Rational(1);
    for (std::int64_t n = 0; n < slots; ++n) {
        if (!c[n].is_zero()) {
            if (!unit_lead)
                c[n] *= inv_lead;
            // c[n] is final; subtract its contribution from later slots.
            Rational neg = -c[n];
            for (std::size_t k = 1; k < tb.size(); ++k) {
                std::int64_t slot = n + (tb[k].index - ord_b) / step;
                if (slot >= slots)
                    break;
                c[slot].add_product(neg, tb[k].coeff);
            }
        }
    }
    std::vector<QSeries::Term> out;
    for (std::int64_t s = 0; s < slots; ++s)
        if (!c[s].is_zero())
            out.push_back({base + s * step, std::move(c[s])});
    return QSeries::from_lattice(std::move(out), trunc);
}

QSeries series_pow(const QSeries& a, std::int64_t n)
{
    if (n == 0) {
        std::int64_t trunc = a.trunc_index() - a.valuation_index();
        return QSeries::from_lattice({QSeries::Term{0, Rational(1)}}, trunc);
    }
    QSeries base = a;
    if (n < 0) {
        if (a.is_zero())
            throw ZeroLeadingTerm("negative power of a series that is zero up to its order");
        std::int64_t ord = a.valuation_index();
        base = series_invert(a, Rational(a.trunc_index() - 2 * ord) / kLattice);
        n = -n;
    }
    std::optional<QSeries> result;
    while (true) {
        if (n & 1)
            result = result ? series_mul(*result, base) : base;
        n >>= 1;
        if (n == 0)
            break;
        base = series_mul(base, base);
    }
    return *result;
}

QSeries euler_product(std::int64_t t, const Rational& depth)
{
    if (t < 1)
        throw std::invalid_argument("eta multiplier must be positive");
    const std::int64_t trunc = lattice_ceil(depth);
    // prod (1 - x^n) = sum_k (-1)^k x^(k(3k-1)/2), k over all integers, x = q^t.
    std::vector<QSeries::Term> terms;
    if (trunc > 0)
        terms.push_back({0, Rational(1)});
    for (std::int64_t k = 1; k * (3 * k - 1) / 2 * t * kLattice < trunc; ++k) {
        Rational sign((k % 2 == 0) ? 1 : -1);
        for (std::int64_t pent : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
            std::int64_t idx = pent * t * kLattice;
            if (idx < trunc)
                terms.push_back({idx, sign});
        }
    }
    return QSeries::from_lattice(std::move(terms), trunc);
}

QSeries eta_series(std::int64_t t, const Rational& depth)
{
    Rational prefactor = Rational(t) / kLattice;
    return euler_product(t, depth - prefactor).shifted(prefactor);
}

QSeries sift(const QSeries& a, std::int64_t p, std::int64_t j)
{
    if (p < 1)
        throw std::invalid_argument("sift modulus must be positive");
    if (j < 0 || j >= p)
        throw std::invalid_argument("sift residue must lie in [0, p)");
    if (!a.has_integer_exponents())
        throw FractionalExponent("sift needs integer exponents");
    std::vector<QSeries::Term> out;
    for (const auto& t : a.terms()) {
        std::int64_t e = t.index / kLattice;
        std::int64_t r = ((e - j) % p + p) % p;
        if (r == 0)
            out.push_back({floor_div(e - j, p) * kLattice, t.coeff});
    }
    Rational trunc(Rational(a.trunc() - Rational(j)) / Rational(p));
    return QSeries::from_lattice(std::move(out), to_int64(trunc.ceil()) * kLattice);
}

QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

}  // namespace etaprove
