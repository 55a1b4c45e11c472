#include "md/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace md {

bool GroupElement::is_zero() const {
    for (const Int& v : torsion)
        if (v != 0) return false;
    for (const Int& v : free_part)
        if (v != 0) return false;
    return true;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Int& v : torsion) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    if (!torsion.empty() && !free_part.empty()) os << ";";
    first = true;
    for (const Int& v : free_part) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}

QuotientGroup::QuotientGroup(const Lattice& l) : r_(l.ambient_dim()), lattice_(l) {
    if (l.rank() == 0) {
        V_ = IntMatrix::identity(r_);
        Vinv_ = V_;
        snf_rank_ = 0;
    } else {
        SmithDecomposition d = smith_normal_form(l.basis());
        V_ = d.V;
        Vinv_ = d.Vinv;
        snf_rank_ = d.rank();
        for (std::size_t i = 0; i < d.rank(); ++i)
            if (d.invariant_factors[i] > 1) {
                factors_.push_back(d.invariant_factors[i]);
                torsion_pos_.push_back(i);
            }
    }
    free_rank_ = r_ - snf_rank_;
}

Int QuotientGroup::order() const {
    if (!is_finite()) throw std::logic_error("order of infinite group");
    Int p(1);
    for (const Int& a : factors_) p *= a;
    return p;
}

GroupElement QuotientGroup::canonical(const std::vector<Int>& ambient) const {
    if (ambient.size() != r_) throw std::invalid_argument("ambient dim mismatch");
    std::vector<Int> y = Vinv_.apply_left(ambient);
    GroupElement g;
    g.torsion.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        g.torsion.push_back(mod_floor(y[torsion_pos_[k]], factors_[k]));
    g.free_part.assign(y.begin() + static_cast<std::ptrdiff_t>(snf_rank_), y.end());
    return g;
}

std::vector<Int> QuotientGroup::lift(const GroupElement& g) const {
    std::vector<Int> y(r_, Int(0));
    for (std::size_t k = 0; k < factors_.size(); ++k) y[torsion_pos_[k]] = g.torsion[k];
    for (std::size_t i = 0; i < free_rank_; ++i) y[snf_rank_ + i] = g.free_part[i];
    return V_.apply_left(y);
}

GroupElement QuotientGroup::zero() const {
    GroupElement g;
    g.torsion.assign(factors_.size(), Int(0));
    g.free_part.assign(free_rank_, Int(0));
    return g;
}

GroupElement QuotientGroup::reduce(GroupElement g) const {
    for (std::size_t k = 0; k < factors_.size(); ++k) g.torsion[k] = mod_floor(g.torsion[k], factors_[k]);
    return g;
}

GroupElement QuotientGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement g = a;
    for (std::size_t k = 0; k < g.torsion.size(); ++k)
        g.torsion[k] = mod_floor(g.torsion[k] + b.torsion[k], factors_[k]);
    for (std::size_t i = 0; i < g.free_part.size(); ++i) g.free_part[i] += b.free_part[i];
    return g;
}

GroupElement QuotientGroup::neg(const GroupElement& a) const {
    GroupElement g = a;
    for (std::size_t k = 0; k < g.torsion.size(); ++k)
        g.torsion[k] = mod_floor(-g.torsion[k], factors_[k]);
    for (std::size_t i = 0; i < g.free_part.size(); ++i) g.free_part[i] = -g.free_part[i];
    return g;
}

GroupElement QuotientGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement QuotientGroup::sign_min(const GroupElement& g) const {
    GroupElement n = neg(g);
    return n < g ? n : g;
}

std::vector<GroupElement> QuotientGroup::enumerate_torsion() const {
    std::vector<GroupElement> out;
    GroupElement cur = zero();
    for (;;) {
        out.push_back(cur);
        std::size_t k = 0;
        while (k < factors_.size()) {
            cur.torsion[k] += 1;
            if (cur.torsion[k] < factors_[k]) break;
            cur.torsion[k] = 0;
            ++k;
        }
        if (k == factors_.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string QuotientGroup::describe() const {
    std::ostringstream os;
    bool first = true;
    for (const Int& a : factors_) {
        if (!first) os << " + ";
        os << "Z_" << a;
        first = false;
    }
    if (free_rank_ > 0) {
        if (!first) os << " + ";
        if (free_rank_ == 1)
            os << "Z";
        else
            os << "Z^" << free_rank_;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::size_t CayleyGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < size(); ++u) d += adj[v][u] ? 1u : 0u;
    return d;
}

QuotientGroup quotient_of(const Lattice& l) { return QuotientGroup(l); }

bool DifferenceProblem::is_difference(const GroupElement& g) const {
    GroupElement m = group.sign_min(g);
    return std::binary_search(differences.begin(), differences.end(), m);
}

DifferenceProblem problem_direct(QuotientGroup g, std::vector<GroupElement> diffs,
                                 ProblemSource source) {
    std::set<GroupElement> dedup;
    for (const GroupElement& d : diffs) {
        GroupElement c = g.reduce(d);
        if (c.is_zero())
            throw IdentityDifference("a stated difference equals the identity");
        dedup.insert(g.sign_min(c));
    }
    DifferenceProblem p{std::move(g), {dedup.begin(), dedup.end()}, source};
    return p;
}

DifferenceProblem basis_images(const QuotientGroup& g) {
    std::vector<GroupElement> diffs;
    for (std::size_t i = 0; i < g.ambient_dim(); ++i) {
        std::vector<Int> e(g.ambient_dim(), Int(0));
        e[i] = 1;
        diffs.push_back(g.canonical(e));
    }
    return problem_direct(g, std::move(diffs), ProblemSource::ExplicitLattice);
}

DifferenceProblem problem_from_rational_circle(const std::vector<Rat>& fractions) {
    const std::size_t r = fractions.size();
    if (r == 0) throw std::invalid_argument("empty difference list");
    Int q(1);
    for (const Rat& f : fractions) {
        if (f == 0) throw std::invalid_argument("zero difference");
        q = lcm(q, den(f));
    }
    // Lambda = {n : sum n_i a_i/q_i in Z} = projection of ker[c_1 .. c_r  -q]
    IntMatrix b(1, r + 1);
    for (std::size_t i = 0; i < r; ++i) b.at(0, i) = num(fractions[i]) * (q / den(fractions[i]));
    b.at(0, r) = -q;
    Lattice k = kernel_lattice(b);  // rank r inside Z^{r+1}
    IntMatrix basis(k.rank(), r);
    for (std::size_t i = 0; i < k.rank(); ++i)
        for (std::size_t j = 0; j < r; ++j) basis.at(i, j) = k.basis().at(i, j);
    QuotientGroup g(Lattice(r, basis));
    DifferenceProblem p = basis_images(g);
    p.source = ProblemSource::RationalCircle;
    return p;
}

DifferenceProblem problem_from_integer_vectors(const std::vector<std::vector<Int>>& d) {
    if (d.empty()) throw std::invalid_argument("empty difference list");
    const std::size_t k = d[0].size(), r = d.size();
    IntMatrix b(k, r);  // columns are the difference vectors
    for (std::size_t j = 0; j < r; ++j) {
        if (d[j].size() != k) throw std::invalid_argument("ragged difference vectors");
        bool zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            b.at(i, j) = d[j][i];
            if (d[j][i] != 0) zero = false;
        }
        if (zero) throw IdentityDifference("a stated difference equals the identity");
    }
    // The kernel is unchanged by the reduction that re-expresses a proper
    // column span in its own basis, so building on ker(B) handles that
    // reduction automatically.
    QuotientGroup g(kernel_lattice(b));
    DifferenceProblem p = basis_images(g);
    p.source = ProblemSource::IntegerVectors;
    return p;
}

std::string realize_as_compact_group(const Lattice& l) {
    QuotientGroup g(l);
    std::ostringstream os;
    os << "G = ";
    bool first = true;
    for (const Int& a : g.invariant_factors()) {
        if (!first) os << " x ";
        os << "Z_" << a;
        first = false;
    }
    if (!first) os << " x ";
    os << "T\n";
    std::size_t d = g.invariant_factors().size();
    os << "torsion differences: " << d << " generator(s) of the finite factors\n";
    if (g.free_rank() > 0) {
        os << "circle differences: beta_1..beta_" << g.free_rank()
           << " with 1, beta_1, ..., beta_" << g.free_rank()
           << " linearly independent over Q (any such choice works; emitted symbolically)\n";
    }
    os << "Md_G(D) = Md_{Z^" << l.ambient_dim() << "/Lambda}(B_Lambda), group " << g.describe();
    return os.str();
}

FolnerBox folner_box(const QuotientGroup& g, std::size_t n, std::uint64_t cap) {
    Int count(1);
    for (const Int& a : g.invariant_factors()) count *= a;
    Int width = 2 * Int(n) + 1;
    for (std::size_t i = 0; i < g.free_rank(); ++i) count *= width;
    if (count > Int(cap)) {
        std::ostringstream os;
        os << "Folner box cardinality " << count << " exceeds cap " << cap;
        throw CapExceeded(os.str());
    }
    FolnerBox box{&g, n, {}};
    std::vector<GroupElement> torsion = g.enumerate_torsion();
    for (const GroupElement& t : torsion) {
        GroupElement cur = t;
        cur.free_part.assign(g.free_rank(), Int(-static_cast<long long>(n)));
        for (;;) {
            box.elements.push_back(cur);
            std::size_t k = 0;
            while (k < g.free_rank()) {
                cur.free_part[k] += 1;
                if (cur.free_part[k] <= Int(static_cast<long long>(n))) break;
                cur.free_part[k] = Int(-static_cast<long long>(n));
                ++k;
            }
            if (k == g.free_rank()) break;
        }
    }
    std::sort(box.elements.begin(), box.elements.end());
    return box;
}

CayleyGraph induced_cayley_graph(const DifferenceProblem& p,
                                 const std::vector<GroupElement>& vertices) {
    CayleyGraph g;
    g.vertices = vertices;
    const std::size_t n = vertices.size();
    g.adj.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            GroupElement d = p.group.sub(vertices[i], vertices[j]);
            if (p.is_difference(d)) g.adj[i][j] = g.adj[j][i] = 1;
        }
    return g;
}

}  // namespace md
