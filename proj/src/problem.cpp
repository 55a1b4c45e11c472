#include "md/problem.hpp"

#include <algorithm>
#include <sstream>

namespace md {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top_level(const std::string& s) {
    // comma-split, but commas inside (...) belong to a vector
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

Int parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty integer");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError("malformed integer '" + t + "'");
    for (; i < t.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("malformed integer '" + t + "'");
    return Int(t);
}

std::vector<Int> parse_vector(const std::string& s) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("expected vector '(a,b,...)', got '" + t + "'");
    std::vector<Int> v;
    for (const std::string& part : split_top_level(t.substr(1, t.size() - 2)))
        v.push_back(parse_int(part));
    if (v.empty()) throw ParseError("empty vector");
    return v;
}

}  // namespace

Rat parse_rational(const std::string& s) {
    std::string t = strip(s);
    std::size_t slash = t.find('/');
    if (slash == std::string::npos) return Rat(parse_int(t));
    Int n = parse_int(t.substr(0, slash));
    Int d = parse_int(t.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + t + "'");
    return Rat(n, d);
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_kind = false, have_payload = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        std::ostringstream where;
        where << "line " << lineno << ": ";
        if (eq == std::string::npos) throw ParseError(where.str() + "expected key = value");
        std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
        try {
            if (key == "kind") {
                if (value != "rational-circle" && value != "integer-vectors" &&
                    value != "explicit-lattice" && value != "corank1-direct")
                    throw ParseError("unknown kind '" + value + "'");
                pf.kind = value;
                have_kind = true;
            } else if (key == "differences") {
                have_payload = true;
                for (const std::string& part : split_top_level(value)) {
                    if (!part.empty() && part.front() == '(') {
                        std::size_t bar = part.find('|');
                        if (bar != std::string::npos) {
                            std::string torsion = part.substr(0, bar) + ")";
                            if (strip(part.substr(1, bar - 1)).empty()) torsion = "()";
                            std::vector<Int> t;
                            if (torsion != "()") t = parse_vector(torsion);
                            std::string htxt = part.substr(bar + 1);
                            if (!htxt.empty() && htxt.back() == ')') htxt.pop_back();
                            pf.direct.emplace_back(std::move(t), parse_int(htxt));
                        } else {
                            pf.vectors.push_back(parse_vector(part));
                        }
                    } else {
                        Rat f = parse_rational(part);
                        if (f == 0) throw ParseError("zero difference");
                        pf.fractions.push_back(f);
                    }
                }
            } else if (key == "basis") {
                have_payload = true;
                for (const std::string& part : split_top_level(value))
                    pf.basis.push_back(parse_vector(part));
            } else if (key == "dim") {
                pf.dim = static_cast<std::size_t>(parse_int(value));
            } else if (key == "factors") {
                for (const std::string& part : split_top_level(value)) {
                    Int f = parse_int(part);
                    if (f < 2) throw ParseError("torsion factor must be >= 2");
                    pf.factors.push_back(f);
                }
            } else if (key == "max-folner") {
                pf.max_folner = static_cast<std::size_t>(parse_int(value));
            } else if (key == "state-bits") {
                pf.state_bits = static_cast<unsigned>(parse_int(value));
            } else if (key == "grid") {
                pf.grid = static_cast<std::size_t>(parse_int(value));
            } else if (key == "dual-radius") {
                pf.dual_radius = static_cast<std::size_t>(parse_int(value));
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) != 0) msg = where.str() + msg;
            throw ParseError(msg);
        }
    }
    if (!have_kind) throw ParseError("missing 'kind'");
    if (!have_payload && pf.kind != "explicit-lattice")
        throw ParseError("missing 'differences'");
    return pf;
}

DifferenceProblem build_problem(const ProblemFile& pf) {
    if (pf.kind == "rational-circle") {
        if (pf.fractions.empty()) throw ParseError("rational-circle needs fraction differences");
        for (const Rat& f : pf.fractions)
            if (f <= 0 || f >= 1) throw ParseError("fractions must lie in (0,1)");
        return problem_from_rational_circle(pf.fractions);
    }
    if (pf.kind == "integer-vectors") {
        if (pf.vectors.empty()) throw ParseError("integer-vectors needs vector differences");
        return problem_from_integer_vectors(pf.vectors);
    }
    if (pf.kind == "explicit-lattice") {
        if (pf.dim == 0) throw ParseError("explicit-lattice needs dim");
        IntMatrix basis(pf.basis.size(), pf.dim);
        for (std::size_t i = 0; i < pf.basis.size(); ++i) {
            if (pf.basis[i].size() != pf.dim) throw ParseError("basis row has wrong dimension");
            for (std::size_t j = 0; j < pf.dim; ++j) basis.at(i, j) = pf.basis[i][j];
        }
        return basis_images(QuotientGroup(Lattice(pf.dim, basis)));
    }
    if (pf.kind == "corank1-direct") {
        if (pf.direct.empty()) throw ParseError("corank1-direct needs (t|h) differences");
        const std::size_t k = pf.factors.size();
        IntMatrix rel(k, k + 1);
        for (std::size_t i = 0; i < k; ++i) rel.at(i, i) = pf.factors[i];
        QuotientGroup g(Lattice(k + 1, rel));
        std::vector<GroupElement> diffs;
        for (const auto& [t, h] : pf.direct) {
            if (t.size() != k) throw ParseError("torsion part has wrong length");
            std::vector<Int> ambient(k + 1, Int(0));
            for (std::size_t i = 0; i < k; ++i) ambient[i] = t[i];
            ambient[k] = h;
            diffs.push_back(g.canonical(ambient));
        }
        return problem_direct(std::move(g), std::move(diffs), ProblemSource::Corank1Direct);
    }
    throw ParseError("unknown kind '" + pf.kind + "'");
}

std::uint64_t problem_fingerprint(const DifferenceProblem& p) {
    std::ostringstream os;
    for (const Int& f : p.group.invariant_factors()) os << f << ",";
    os << ";" << p.group.free_rank() << ";";
    for (const GroupElement& d : p.differences) os << d.str();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace md
