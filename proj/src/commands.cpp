#include "md/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "md/cosine.hpp"
#include "md/kappa.hpp"

namespace md {

namespace {

std::string entry_line(const char* side, const BoundEntry& e) {
    std::ostringstream os;
    os << side << ": " << rat_pretty(e.value) << "  [" << e.method << "]";
    if (!e.note.empty()) os << "  (" << e.note << ")";
    return os.str();
}

// the half-parity avoiding set: cell {0} over the even-coordinate-sum
// subgroup (index 2 once Lambda has even-sum generators)
PeriodicSet parity_witness(const QuotientGroup& g) {
    std::vector<GroupElement> gens;
    const std::size_t r = g.ambient_dim();
    std::vector<Int> v(r, Int(0));
    v[0] = 2;
    gens.push_back(g.canonical(v));
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<Int> w(r, Int(0));
        w[0] = 1;
        w[i] = 1;
        gens.push_back(g.canonical(w));
    }
    return make_periodic_set(g, std::move(gens), {g.zero()});
}

// Delsarte applies when the quotient is Z: the differences are k_i x.
std::optional<std::vector<std::int64_t>> integer_support(const DifferenceProblem& p) {
    if (p.group.free_rank() != 1 || !p.group.invariant_factors().empty()) return std::nullopt;
    std::vector<std::int64_t> support;
    for (const GroupElement& d : p.differences) {
        Int h = d.free_part[0];
        if (h < 0) h = -h;
        support.push_back(static_cast<std::int64_t>(h));
    }
    return support;
}

void attach_folner(DensityReport& rep, const DifferenceProblem& p, std::size_t max_n,
                   std::size_t vertex_cap = kDefaultVertexCap) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        try {
            Rat v = folner_upper_bound(p, n, vertex_cap);
            std::ostringstream tag;
            tag << "folner(N=" << n << ")";
            rep.add_upper(v, tag.str());
        } catch (const CapExceeded& e) {
            std::ostringstream os;
            os << "folner(N=" << n << ") skipped: " << e.what();
            rep.notes.push_back(os.str());
            break;
        }
    }
}

DensityReport dispatch_density(const DifferenceProblem& p, const ProblemFile& pf) {
    const QuotientGroup& g = p.group;
    if (g.is_finite()) {
        try {
            return density_finite_group(p);
        } catch (const CapExceeded& e) {
            DensityReport rep;
            rep.notes.push_back(std::string("finite solver capped: ") + e.what());
            rep.add_upper(Rat(1, 2), "disjoint translate");
            if (pf.kind == "rational-circle") {
                KappaWitness k = kappa_rational(pf.fractions);
                rep.add_lower(k.value, "kappa (" + k.certificate + ")");
            }
            return rep;
        }
    }
    if (g.lattice().rank() == 1) {
        std::vector<Int> m = g.lattice().basis().row(0);
        DensityReport rep;
        rep.exact = rank1_density(m);
        rep.exact_method = "rank-1 closed form floor(k/2)/k";
        PeriodicSet w = rank1_construction(m);
        if (!verify_avoiding(w, p)) throw std::logic_error("rank-1 construction not avoiding");
        rep.witness = w;
        rep.add_lower(w.density, "rank-1 construction", "", std::move(w));
        rep.add_upper(*rep.exact, "rank-1 fundamental-domain tile");
        return rep;
    }
    if (g.free_rank() == 1) {
        Corank1Options opt;
        opt.state_bits = pf.state_bits;
        return corank1_density(p, opt);
    }
    if (g.lattice().rank() == 0 || half_parity_check(g.lattice())) {
        DensityReport rep;
        rep.exact = Rat(1, 2);
        rep.exact_method = g.lattice().rank() == 0 ? "free quotient: parity classes"
                                                   : "half-parity criterion";
        PeriodicSet w = parity_witness(g);
        if (!verify_avoiding(w, p)) throw std::logic_error("parity witness not avoiding");
        rep.witness = w;
        rep.add_lower(Rat(1, 2), "parity-class construction", "", std::move(w));
        rep.add_upper(Rat(1, 2), "disjoint translate");
        return rep;
    }
    // free rank >= 2 at intermediate rank: bounds only
    DensityReport rep;
    rep.notes.push_back("no exact solver for this shape (free rank >= 2, intermediate rank)");
    if (is_primitive_set(g.lattice())) {
        KappaWitness k = kappa_dual_lower(g.lattice(), pf.dual_radius);
        rep.add_lower(k.value, "kappa lower bound (" + k.certificate + ")");
    }
    rep.add_upper(Rat(1, 2), "disjoint translate");
    attach_folner(rep, p, pf.max_folner);
    return rep;
}

std::string describe_problem(const DifferenceProblem& p) {
    std::ostringstream os;
    os << "group: " << p.group.describe() << "\n";
    os << "differences:";
    for (const GroupElement& d : p.differences) os << " " << d.str();
    os << "\n";
    return os.str();
}

std::string options_signature(const ProblemFile& pf) {
    std::ostringstream os;
    os << "folner=" << pf.max_folner << ";bits=" << pf.state_bits << ";grid=" << pf.grid
       << ";radius=" << pf.dual_radius;
    return os.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\')
            out += "\\\\";
        else if (c == '\n')
            out += "\\n";
        else if (c == '\t')
            out += "\\t";
        else
            out += c;
    }
    return out;
}

bool unescape(const std::string& s, std::string& out) {
    out.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) return false;
        if (s[i] == 'n')
            out += '\n';
        else if (s[i] == 't')
            out += '\t';
        else if (s[i] == '\\')
            out += '\\';
        else
            return false;
    }
    return true;
}

std::string cache_path(const CacheConfig& cfg) { return cfg.dir + "/results.tsv"; }

CommandResult finish(const ProblemFile& pf, const DifferenceProblem& prob,
                     const CacheConfig& cache, const std::string& command,
                     const DensityReport& rep) {
    CommandResult res;
    res.exact = rep.exact.has_value();
    res.body = describe_problem(prob) + render_report(prob, rep);
    if (cache.enabled)
        cache_store(cache, problem_fingerprint(prob), command, options_signature(pf), res.body);
    return res;
}

}  // namespace

std::string render_report(const DifferenceProblem&, const DensityReport& rep) {
    std::ostringstream os;
    if (rep.exact) {
        os << "exact: " << rat_pretty(*rep.exact) << "\n";
        os << "method: " << rep.exact_method << "\n";
        os << "status: EXACT\n";
    } else {
        os << "status: NOT-EXACT (bounds only)\n";
        if (auto lo = rep.best_lower()) os << "best lower: " << rat_pretty(*lo) << "\n";
        if (auto hi = rep.best_upper()) os << "best upper: " << rat_pretty(*hi) << "\n";
    }
    if (rep.witness) os << "witness: " << rep.witness->describe() << "\n";
    for (const BoundEntry& e : rep.lower) os << entry_line("lower", e) << "\n";
    for (const BoundEntry& e : rep.upper) os << entry_line("upper", e) << "\n";
    for (const std::string& n : rep.notes) os << "note: " << n << "\n";
    return os.str();
}

std::optional<std::string> cache_lookup(const CacheConfig& cfg, std::uint64_t fingerprint,
                                        const std::string& command, const std::string& options) {
    if (!cfg.enabled) return std::nullopt;
    std::ifstream in(cache_path(cfg));
    if (!in) return std::nullopt;
    std::optional<std::string> newest;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == '\t') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        if (fields.size() != 6) continue;  // corrupted line: skip
        std::ostringstream fp;
        fp << std::hex << fingerprint;
        if (fields[0] != fp.str() || fields[1] != command || fields[2] != options) continue;
        std::string body;
        if (!unescape(fields[5], body)) continue;
        newest = body;  // later lines win
    }
    return newest;
}

void cache_store(const CacheConfig& cfg, std::uint64_t fingerprint, const std::string& command,
                 const std::string& options, const std::string& body) {
    if (!cfg.enabled) return;
    try {
        std::filesystem::create_directories(cfg.dir);
        std::ofstream out(cache_path(cfg), std::ios::app);
        if (!out) return;  // cache failure is non-fatal
        auto now = std::chrono::system_clock::now().time_since_epoch();
        out << std::hex << fingerprint << std::dec << "\t" << command << "\t" << options << "\t"
            << kToolVersion << "\t"
            << std::chrono::duration_cast<std::chrono::seconds>(now).count() << "\t"
            << escape(body) << "\n";
    } catch (const std::exception&) {
        // non-fatal by contract
    }
}

CommandResult cmd_density(const ProblemFile& pf, const CacheConfig& cache) {
    DifferenceProblem prob = build_problem(pf);
    if (auto hit = cache_lookup(cache, problem_fingerprint(prob), "density", options_signature(pf))) {
        CommandResult res;
        res.body = *hit;
        res.from_cache = true;
        res.exact = hit->find("status: EXACT") != std::string::npos;
        return res;
    }
    DensityReport rep = dispatch_density(prob, pf);
    return finish(pf, prob, cache, "density", rep);
}

CommandResult cmd_bounds(const ProblemFile& pf, const CacheConfig& cache) {
    DifferenceProblem prob = build_problem(pf);
    if (auto hit = cache_lookup(cache, problem_fingerprint(prob), "bounds", options_signature(pf))) {
        CommandResult res;
        res.body = *hit;
        res.from_cache = true;
        return res;
    }
    const QuotientGroup& g = prob.group;
    DensityReport rep;
    if (pf.kind == "rational-circle") {
        KappaWitness k = kappa_rational(pf.fractions);
        rep.add_lower(k.value, "kappa (" + k.certificate + ")");
    } else if (is_primitive_set(g.lattice()) || g.lattice().rank() == 0) {
        KappaWitness k = kappa_dual_lower(g.lattice(), pf.dual_radius);
        rep.add_lower(k.value, "kappa lower bound (" + k.certificate + ")");
    }
    if (half_parity_check(g.lattice()))
        rep.add_lower(Rat(1, 2), "half-parity construction");
    if (g.lattice().rank() == 1)
        rep.add_lower(rank1_density(g.lattice().basis().row(0)), "rank-1 construction");
    rep.add_upper(Rat(1, 2), "disjoint translate");
    if (g.is_finite()) {
        try {
            DensityReport fin = density_finite_group(prob);
            rep.add_upper(*fin.exact, "independence number over the full finite group");
        } catch (const CapExceeded& e) {
            rep.notes.push_back(std::string("finite solver capped: ") + e.what());
        }
    } else {
        attach_folner(rep, prob, pf.max_folner);
    }
    if (auto support = integer_support(prob)) {
        try {
            DelsarteBound d = delsarte_upper_bound(*support, pf.grid);
            rep.add_upper(d.bound, "delsarte (" + d.method + ")");
        } catch (const CertificationFailed& e) {
            rep.notes.push_back(std::string("delsarte skipped: ") + e.what());
        }
    }
    return finish(pf, prob, cache, "bounds", rep);
}

CommandResult cmd_construct(const ProblemFile& pf, const CacheConfig& cache) {
    DifferenceProblem prob = build_problem(pf);
    std::ostringstream os;
    os << describe_problem(prob);
    if (pf.kind == "rational-circle") {
        // the kappa argmax N drives the interval construction
        Int n(0);
        Int q(1);
        for (const Rat& f : pf.fractions) q = lcm(q, den(f));
        Rat best(-1);
        for (Int cand(0); cand < q; ++cand) {
            Rat v(1);
            for (const Rat& f : pf.fractions) v = std::min(v, dist_to_int(Rat(cand) * f));
            if (v > best) {
                best = v;
                n = cand;
            }
        }
        if (n == 0 || best <= 0) throw NoConstructionApplicable("kappa witness is trivial");
        IntervalSet s = interval_construction(pf.fractions, n, best);
        os << "intervals (x with ||" << n << " x|| < " << rat_str(best / 2) << "):\n";
        for (const auto& [lo, hi] : s.intervals)
            os << "  [" << rat_str(lo) << ", " << rat_str(hi) << ")\n";
        os << "measure: " << rat_pretty(s.measure) << "\n";
        os << "verification: VERIFIED (exact interval difference arithmetic)\n";
    } else {
        DensityReport rep = dispatch_density(prob, pf);
        if (!rep.witness)
            throw NoConstructionApplicable("no construction for this problem shape");
        bool ok = verify_avoiding(*rep.witness, prob);
        os << "periodic set: " << rep.witness->describe() << "\n";
        os << "verification: " << (ok ? "VERIFIED" : "FAILED") << " (avoiding check)\n";
        if (!ok) throw std::logic_error("construction failed verification");
    }
    CommandResult res;
    res.body = os.str();
    res.exact = true;
    if (cache.enabled)
        cache_store(cache, problem_fingerprint(prob), "construct", options_signature(pf), res.body);
    return res;
}

CommandResult cmd_certify(const std::string& text) {
    std::vector<std::int64_t> support;
    std::vector<Rat> coeffs;
    std::optional<std::size_t> fejer;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto strip = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r\n");
            if (a == std::string::npos) return std::string();
            return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value");
        std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
        std::istringstream vs(value);
        std::string part;
        if (key == "support") {
            while (std::getline(vs, part, ','))
                support.push_back(static_cast<std::int64_t>(std::stoll(strip(part))));
        } else if (key == "coefficients") {
            while (std::getline(vs, part, ',')) coeffs.push_back(parse_rational(strip(part)));
        } else if (key == "fejer") {
            fejer = static_cast<std::size_t>(std::stoull(value));
        } else {
            throw ParseError("unknown key '" + key + "'");
        }
    }
    CosinePolynomial c = fejer ? fejer_bound(*fejer).poly : make_cosine(support, coeffs);
    SturmCertificate cert = sturm_certify(c);
    std::ostringstream os;
    os << "C(0) = " << rat_pretty(c.c0()) << "\n";
    if (cert.nonnegative) {
        os << "certificate: NONNEGATIVE (" << cert.detail << ")\n";
        os << "bound: " << rat_pretty(Rat(1) / c.c0()) << "\n";
    } else {
        os << "certificate: NEGATIVE (" << cert.detail << ")\n";
        if (cert.witness_x) {
            double x = static_cast<double>(num(*cert.witness_x)) /
                       static_cast<double>(den(*cert.witness_x));
            os << "witness: C < 0 at x = cos(2 pi t) = " << rat_str(*cert.witness_x)
               << " (t ~ " << std::acos(x) / (2 * std::acos(-1.0)) << ")\n";
        }
    }
    CommandResult res;
    res.body = os.str();
    res.exact = cert.nonnegative;
    return res;
}

}  // namespace md
