#include "md/polynomial.hpp"

namespace md {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

std::size_t poly_degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
    return poly_trim(std::move(d));
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Rat& s) {
    if (s == 0) return {};
    Poly r = a;
    for (Rat& c : r) c *= s;
    return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    const Rat& lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        Rat f = r.back() / lead;
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r = poly_trim(std::move(r));
    }
    q = poly_trim(std::move(q));
}

namespace {

Poly make_monic(Poly p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = make_monic(std::move(r));  // keeps coefficient growth in check
    }
    return make_monic(std::move(a));
}

Poly odd_multiplicity_part(const Poly& p0) {
    Poly p = poly_trim(p0);
    if (p.size() <= 1) return {Rat(1)};
    // Yun: p = prod a_i^i; collect the a_i with odd i
    Poly g = poly_gcd(p, poly_derivative(p));
    Poly q, rem;
    poly_divmod(p, g, q, rem);  // q = radical-ish start
    Poly a0 = q;
    poly_divmod(poly_derivative(p), g, q, rem);
    Poly c = poly_sub(q, poly_derivative(a0));
    Poly out{Rat(1)};
    for (std::size_t i = 1; !a0.empty() && poly_degree(a0) > 0; ++i) {
        Poly ai = poly_gcd(a0, c);
        if (i % 2 == 1) out = poly_mul(out, ai);
        poly_divmod(a0, ai, q, rem);
        a0 = q;
        Poly b;
        poly_divmod(c, ai, b, rem);
        c = poly_sub(b, poly_derivative(a0));
    }
    return make_monic(std::move(out));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(poly_trim(p));
    chain.push_back(poly_derivative(chain[0]));
    while (!chain.back().empty() && poly_degree(chain.back()) > 0) {
        Poly q, r;
        poly_divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.empty()) break;
        for (Rat& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

std::size_t sturm_sign_changes(const std::vector<Poly>& chain, const Rat& x) {
    std::size_t changes = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        Rat v = poly_eval(p, x);
        int s = (v > 0) - (v < 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

std::size_t count_roots_halfopen(const Poly& p, const Rat& a, const Rat& b) {
    std::vector<Poly> chain = sturm_chain(p);
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

}  // namespace md
