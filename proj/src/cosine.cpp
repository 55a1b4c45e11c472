#include "md/cosine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "md/matrix.hpp"
#include "md/simplex.hpp"

namespace md {

Rat CosinePolynomial::c0() const {
    Rat v(1);
    for (const Rat& c : coeffs) v += c;
    return v;
}

Rat CosinePolynomial::eval_cos(const Rat& x) const { return poly_eval(chebyshev_form(*this), x); }

CosinePolynomial make_cosine(std::vector<std::int64_t> support, std::vector<Rat> coeffs) {
    if (support.size() != coeffs.size()) throw std::invalid_argument("support/coefficient mismatch");
    std::vector<std::size_t> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
    CosinePolynomial c;
    for (std::size_t i : order) {
        if (support[i] <= 0) throw std::invalid_argument("support must be positive");
        if (!c.support.empty() && c.support.back() == support[i])
            throw std::invalid_argument("repeated support frequency");
        c.support.push_back(support[i]);
        c.coeffs.push_back(coeffs[i]);
    }
    return c;
}

Poly chebyshev_form(const CosinePolynomial& c) {
    std::int64_t maxk = c.support.empty() ? 0 : c.support.back();
    // T_0..T_maxk by the recurrence T_{k+1} = 2x T_k - T_{k-1}
    std::vector<Poly> t;
    t.push_back({Rat(1)});
    if (maxk >= 1) t.push_back({Rat(0), Rat(1)});
    for (std::int64_t k = 2; k <= maxk; ++k)
        t.push_back(poly_sub(poly_mul({Rat(0), Rat(2)}, t.back()), t[t.size() - 2]));
    Poly p{Rat(1)};
    for (std::size_t i = 0; i < c.support.size(); ++i)
        p = poly_add(p, poly_scale(t[static_cast<std::size_t>(c.support[i])], c.coeffs[i]));
    return p;
}

SturmCertificate sturm_certify(const CosinePolynomial& c) {
    Poly p = chebyshev_form(c);
    SturmCertificate cert{true, 0, Rat(0), std::nullopt, ""};
    if (poly_is_zero(p)) {
        cert.detail = "identically zero";
        return cert;
    }

    Poly odd = odd_multiplicity_part(p);
    std::size_t interior = 0;
    if (poly_degree(odd) > 0) {
        interior = count_roots_halfopen(odd, Rat(-1), Rat(1));
        if (poly_eval(odd, Rat(1)) == 0) --interior;  // open at the right end
    }
    cert.sign_change_roots = interior;

    // probe: endpoints plus deg+2 interior points (more points than roots, so
    // at least one probe is a non-root and pins the ambient sign)
    const std::size_t probes = poly_degree(p) + 2;
    bool first = true;
    auto probe = [&](const Rat& x) {
        Rat v = poly_eval(p, x);
        if (first || v < cert.min_sample) cert.min_sample = v;
        first = false;
        if (v < 0 && !cert.witness_x) cert.witness_x = x;
    };
    probe(Rat(-1));
    probe(Rat(1));
    for (std::size_t j = 1; j <= probes; ++j)
        probe(Rat(Int(2 * j), Int(probes + 1)) - 1);

    if (cert.witness_x) {
        cert.nonnegative = false;
    } else if (interior > 0) {
        // a sign change exists but the coarse probes missed it: refine a
        // dyadic grid until the guaranteed negative region is hit
        cert.nonnegative = false;
        for (std::size_t depth = 4; !cert.witness_x && depth < 64; ++depth) {
            Int steps = Int(1) << depth;
            for (Int i(1); i < steps; ++i) {
                Rat x = Rat(2 * i, steps) - 1;
                Rat v = poly_eval(p, x);
                if (v < 0) {
                    cert.witness_x = x;
                    if (v < cert.min_sample) cert.min_sample = v;
                    break;
                }
            }
        }
    }
    std::ostringstream os;
    os << "sign-change roots in (-1,1): " << interior << "; min probed value "
       << rat_str(cert.min_sample);
    cert.detail = os.str();
    return cert;
}

FejerBound fejer_bound(std::size_t n) {
    if (n < 1) throw std::invalid_argument("fejer bound needs n >= 1");
    std::vector<std::int64_t> support;
    std::vector<Rat> coeffs;
    for (std::size_t k = 1; k <= n; ++k) {
        support.push_back(static_cast<std::int64_t>(k));
        coeffs.push_back(Rat(2) * (Rat(1) - Rat(Int(k), Int(n + 1))));
    }
    return FejerBound{Rat(1, Int(n + 1)), make_cosine(std::move(support), std::move(coeffs))};
}

namespace {

// cos(pi a / g) as an exact rational where the angle admits one, otherwise
// rounded to denominator 2^40
Rat cos_grid(std::int64_t k, std::int64_t i, std::int64_t g) {
    std::int64_t a = (k * i) % (2 * g);
    Rat r(a, g);  // in [0, 2)
    if (r == 0) return Rat(1);
    if (r == 1) return Rat(-1);
    if (r == Rat(1, 2) || r == Rat(3, 2)) return Rat(0);
    if (r == Rat(1, 3) || r == Rat(5, 3)) return Rat(1, 2);
    if (r == Rat(2, 3) || r == Rat(4, 3)) return Rat(-1, 2);
    static const long double pi = acosl(-1.0L);
    long double v = cosl(pi * static_cast<long double>(a) / static_cast<long double>(g));
    Int scale = Int(1) << 40;
    long double scaled = v * 1099511627776.0L;  // 2^40
    Int n(static_cast<long long>(llroundl(scaled)));
    return Rat(n, scale);
}

}  // namespace

CosineLpResult cosine_lp(const std::vector<std::int64_t>& support, std::size_t grid_size,
                         const Rat& margin) {
    if (support.empty()) throw std::invalid_argument("empty support");
    std::vector<std::int64_t> k = support;
    std::sort(k.begin(), k.end());
    std::int64_t maxk = k.back();
    if (grid_size < static_cast<std::size_t>(4 * maxk))
        throw std::invalid_argument("grid too coarse for the support");
    const std::size_t r = k.size(), cols = grid_size + 1;
    const std::int64_t g = static_cast<std::int64_t>(grid_size);

    // dual of: max sum c_k  s.t.  sum_k c_k cos(2 pi k t_i) >= margin - 1
    // -> min (1 - margin) sum y  s.t.  sum_i (-cos_{k,i}) y_i = 1, y >= 0
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(cols));
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t i = 0; i < cols; ++i)
            a[p][i] = -cos_grid(k[p], static_cast<std::int64_t>(i), g);
    std::vector<Rat> rhs(r, Rat(1)), cost(cols, Rat(1) - margin);
    LpSolution dual = simplex_solve(a, rhs, cost);
    if (dual.basis.size() != r)
        throw std::logic_error("degenerate dual basis: support constraints dependent");

    // primal coefficients = multipliers of the optimal dual basis
    RationalMatrix m(r, r);
    std::vector<Rat> b(r);
    for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = 0; q < r; ++q) m.at(p, q) = a[q][dual.basis[p]];
        b[p] = cost[dual.basis[p]];
    }
    std::vector<Rat> lambda = solve_rational(m, b);
    CosineLpResult res;
    res.candidate = make_cosine(k, lambda);
    res.objective = Rat(1) + dual.objective;
    res.grid_size = grid_size;
    res.margin = margin;
    return res;
}

namespace {

bool is_initial_segment(const std::vector<std::int64_t>& support) {
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] != static_cast<std::int64_t>(i + 1)) return false;
    return true;
}

Rat round_to_denominator(const Rat& x, const Int& d) {
    return Rat(floor_rat(x * Rat(d) + Rat(1, 2)), d);
}

}  // namespace

DelsarteBound delsarte_upper_bound(const std::vector<std::int64_t>& support,
                                   std::size_t grid_size,
                                   const std::optional<std::vector<Rat>>& coeffs) {
    std::vector<std::int64_t> k = support;
    std::sort(k.begin(), k.end());
    if (coeffs) {
        CosinePolynomial c = make_cosine(support, *coeffs);
        SturmCertificate cert = sturm_certify(c);
        if (!cert.nonnegative)
            throw CertificationFailed("supplied coefficients are not nonnegative on the circle");
        if (c.c0() <= 0) throw CertificationFailed("C(0) not positive");
        return DelsarteBound{Rat(1) / c.c0(), std::move(c), std::move(cert),
                             "supplied coefficients"};
    }
    if (is_initial_segment(k)) {
        FejerBound f = fejer_bound(k.size());
        SturmCertificate cert = sturm_certify(f.poly);
        if (!cert.nonnegative) throw CertificationFailed("Fejer kernel failed certification");
        return DelsarteBound{f.bound, std::move(f.poly), std::move(cert), "fejer kernel"};
    }
    if (grid_size == 0) grid_size = kLpGridFactor * static_cast<std::size_t>(k.back());
    CosineLpResult lp = cosine_lp(k, grid_size);
    std::vector<Rat> rounded;
    for (const Rat& c : lp.candidate.coeffs)
        rounded.push_back(round_to_denominator(c, Int(1) << 24));
    for (Rat shrink(1, 65536); shrink < Rat(1, 8); shrink *= 2) {
        Rat keep = Rat(1) - shrink;
        std::vector<Rat> c2;
        for (const Rat& c : rounded) c2.push_back(c * keep);
        CosinePolynomial cand = make_cosine(k, c2);
        SturmCertificate cert = sturm_certify(cand);
        if (cert.nonnegative && cand.c0() > 0) {
            std::ostringstream os;
            os << "grid LP (grid " << grid_size << ") shrunk by " << rat_str(shrink);
            return DelsarteBound{Rat(1) / cand.c0(), std::move(cand), std::move(cert), os.str()};
        }
    }
    throw CertificationFailed("LP candidate could not be certified nonnegative");
}

}  // namespace md
