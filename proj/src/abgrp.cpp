#include "bredon/abgrp.hpp"

#include <sstream>
#include <stdexcept>

namespace bredon {

std::string NormalForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << 'Z';
        if (rank > 1) os << '^' << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

NormalForm direct_sum(const NormalForm& a, const NormalForm& b) {
    std::vector<Integer> d = a.torsion;
    d.insert(d.end(), b.torsion.begin(), b.torsion.end());
    IntMatrix rel = IntMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) rel(static_cast<Index>(i), static_cast<Index>(i)) = d[i];
    NormalForm t = normal_form_of(rel, rel.rows());
    t.rank = a.rank + b.rank;
    return t;
}

NormalForm normal_form_of(const IntMatrix& relations, Index generators) {
    if (relations.rows() != generators) throw std::invalid_argument("relation matrix has wrong row count");
    NormalForm nf;
    if (relations.cols() == 0 || generators == 0) {
        nf.rank = generators;
        return nf;
    }
    const auto s = smith_normal_form(relations, false);
    nf.rank = generators - s.rank;
    for (Index i = 0; i < s.rank; ++i)
        if (s.D(i, i) != Integer(1)) nf.torsion.push_back(s.D(i, i));
    return nf;
}

FgAbPresentation::FgAbPresentation(Index gens, IntMatrix rels) : generators(gens), relations(std::move(rels)) {
    if (relations.rows() != generators) {
        if (relations.size() == 0)
            relations = IntMatrix(generators, 0);
        else
            throw std::invalid_argument("presentation: relation rows must equal generator count");
    }
}

FgAbPresentation FgAbPresentation::cyclic(const Integer& order) {
    if (order == Integer(0)) return free(1);
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return {1, r};
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    Index r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix m = IntMatrix::Zero(r, c);
    Index i = 0, j = 0;
    for (const auto& b : blocks) {
        m.block(i, j, b.rows(), b.cols()) = b;
        i += b.rows();
        j += b.cols();
    }
    return m;
}

FgAbPresentation direct_sum(const std::vector<FgAbPresentation>& parts) {
    std::vector<IntMatrix> rels;
    Index n = 0;
    for (const auto& p : parts) {
        rels.push_back(p.relations);
        n += p.generators;
    }
    return {n, block_diagonal(rels)};
}

bool equal_modulo(const IntMatrix& a, const IntMatrix& b, const Lattice& relations) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return relations.contains_columns(IntMatrix(a - b));
}

bool AbHom::well_defined() const {
    if (matrix.rows() != target.generators || matrix.cols() != source.generators) return false;
    return target.relation_lattice().contains_columns(product(matrix, source.relations));
}

bool AbHom::equals(const AbHom& other) const {
    return equal_modulo(matrix, other.matrix, target.relation_lattice());
}

bool AbHom::is_zero() const {
    return target.relation_lattice().contains_columns(matrix);
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (g.source.generators != f.target.generators) throw std::invalid_argument("compose: shape mismatch");
    return {f.source, g.target, product(g.matrix, f.matrix)};
}

Subquotient::Subquotient(Lattice numerator, const Lattice& denominator) : num_(std::move(numerator)) {
    const Index ra = num_.rank();
    IntMatrix c = coordinates(num_, denominator.basis());
    IntMatrix uinv;
    Index rank = 0;
    std::vector<Integer> d;
    if (c.cols() == 0 || ra == 0) {
        U_ = IntMatrix::Identity(ra, ra);
        uinv = U_;
    } else {
        auto s = smith_normal_form(c, true);
        U_ = std::move(s.U);
        uinv = std::move(s.Uinv);
        rank = s.rank;
        for (Index i = 0; i < rank; ++i) d.push_back(s.D(i, i));
    }
    const IntMatrix adapted = product(num_.basis(), uinv);
    for (Index i = 0; i < ra; ++i) {
        const Integer di = i < rank ? d[static_cast<std::size_t>(i)] : Integer(0);
        if (di == Integer(1)) continue;
        keep_.push_back(i);
        orders_.push_back(di);
    }
    gens_ = IntMatrix(num_.ambient(), static_cast<Index>(keep_.size()));
    for (std::size_t k = 0; k < keep_.size(); ++k) gens_.col(static_cast<Index>(k)) = adapted.col(keep_[k]);
}

NormalForm Subquotient::normal_form() const {
    NormalForm nf;
    for (const auto& d : orders_)
        if (d == Integer(0)) ++nf.rank;
        else nf.torsion.push_back(d);
    // SNF diagonal is already a divisor chain
    return nf;
}

FgAbPresentation Subquotient::presentation() const {
    const Index k = size();
    IntMatrix rel = IntMatrix::Zero(k, 0);
    std::vector<Index> cols;
    for (Index i = 0; i < k; ++i)
        if (orders_[static_cast<std::size_t>(i)] != Integer(0)) cols.push_back(i);
    rel = IntMatrix::Zero(k, static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) rel(cols[j], static_cast<Index>(j)) = orders_[static_cast<std::size_t>(cols[j])];
    return {k, rel};
}

IntVector Subquotient::reduce(const IntVector& x) const {
    auto c = num_.coordinates(x);
    if (!c) throw std::domain_error("subquotient: vector outside the numerator");
    const IntVector y = U_ * *c;
    IntVector out(size());
    for (std::size_t k = 0; k < keep_.size(); ++k) {
        Integer v = y(keep_[k]);
        const Integer& d = orders_[k];
        if (d != Integer(0)) {
            v %= d;
            if (v < Integer(0)) v += d;
        }
        out(static_cast<Index>(k)) = v;
    }
    return out;
}

IntMatrix Subquotient::reduce(const IntMatrix& x) const {
    IntMatrix out(size(), x.cols());
    for (Index j = 0; j < x.cols(); ++j) out.col(j) = reduce(IntVector(x.col(j)));
    return out;
}

IntMatrix induced_map(const IntMatrix& d, const Subquotient& src, const Subquotient& tgt) {
    return tgt.reduce(product(d, src.generators()));
}

CochainComplex::CochainComplex(std::vector<FgAbPresentation> terms, std::vector<IntMatrix> differentials)
    : terms_(std::move(terms)), d_(std::move(differentials)) {
    d_.resize(terms_.size());
    for (std::size_t n = 0; n < terms_.size(); ++n) {
        const Index rows = n + 1 < terms_.size() ? terms_[n + 1].generators : 0;
        if (d_[n].size() == 0) d_[n] = IntMatrix::Zero(rows, terms_[n].generators);
        if (d_[n].rows() != rows || d_[n].cols() != terms_[n].generators)
            throw std::invalid_argument("cochain complex: differential " + std::to_string(n) + " has wrong shape");
        rel_.push_back(terms_[n].relation_lattice());
    }
}

const FgAbPresentation& CochainComplex::term(int n) const {
    static const FgAbPresentation zero;
    if (n < 0 || n > top()) return zero;
    return terms_[static_cast<std::size_t>(n)];
}

IntMatrix CochainComplex::differential(int n) const {
    if (n < 0 || n > top()) return IntMatrix::Zero(rank(n + 1), rank(n));
    return d_[static_cast<std::size_t>(n)];
}

Lattice CochainComplex::relations(int n) const {
    if (n < 0 || n > top()) return Lattice::zero(0);
    return rel_[static_cast<std::size_t>(n)];
}

std::string CochainComplex::validate() const {
    for (int n = 0; n <= top(); ++n) {
        const IntMatrix d = differential(n);
        if (!relations(n + 1).contains_columns(product(d, term(n).relations)))
            return "differential " + std::to_string(n) + " does not preserve relations";
        const IntMatrix dd = product(differential(n + 1), d);
        if (!relations(n + 2).contains_columns(dd)) return "dd != 0 in degree " + std::to_string(n);
    }
    return {};
}

Lattice CochainComplex::cocycles(int n) const { return preimage(differential(n), relations(n + 1)); }

Lattice CochainComplex::coboundaries(int n) const {
    return image(differential(n - 1), Lattice::full(rank(n - 1))) + relations(n);
}

Subquotient CochainComplex::cohomology(int n) const { return {cocycles(n), coboundaries(n)}; }

bool is_chain_map(const CochainComplex& a, const CochainComplex& b, const std::vector<IntMatrix>& f,
                  int shift) {
    auto fm = [&](int n) -> IntMatrix {
        if (n < 0 || n > a.top()) return IntMatrix::Zero(b.rank(n + shift), a.rank(n));
        return f[static_cast<std::size_t>(n)];
    };
    for (int n = 0; n <= a.top(); ++n) {
        const IntMatrix m = fm(n);
        if (m.rows() != b.rank(n + shift) || m.cols() != a.rank(n)) return false;
        if (!b.relations(n + shift).contains_columns(product(m, a.term(n).relations))) return false;
        const IntMatrix lhs = product(b.differential(n + shift), m);
        const IntMatrix rhs = product(fm(n + 1), a.differential(n));
        if (!equal_modulo(lhs, rhs, b.relations(n + shift + 1))) return false;
    }
    return true;
}

AbHom cohomology_map(const CochainComplex& a, const CochainComplex& b, const IntMatrix& f, int n, int shift) {
    const Subquotient ha = a.cohomology(n);
    const Subquotient hb = b.cohomology(n + shift);
    return {ha.presentation(), hb.presentation(), induced_map(f, ha, hb)};
}

GroupModule GroupModule::trivial(FiniteGroup g, FgAbPresentation m) {
    GroupModule gm{std::move(g), std::move(m), {}};
    for (int a = 0; a < gm.group.order(); ++a) gm.action.push_back(IntMatrix::Identity(gm.module.generators, gm.module.generators));
    return gm;
}

std::string GroupModule::validate() const {
    const int n = group.order();
    if (static_cast<int>(action.size()) != n) return "module action missing for some group elements";
    const Lattice rel = module.relation_lattice();
    const Index k = module.generators;
    for (int a = 0; a < n; ++a) {
        if (action[a].rows() != k || action[a].cols() != k) return "action matrix has wrong shape";
        if (!rel.contains_columns(IntMatrix(action[a] * module.relations)))
            return "action of element " + std::to_string(a) + " does not preserve relations";
    }
    if (!equal_modulo(action[0], IntMatrix::Identity(k, k), rel)) return "identity does not act trivially";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!equal_modulo(action[group.mul(a, b)], IntMatrix(action[a] * action[b]), rel))
                return "action is not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    return {};
}

std::string GroupRingModuleMap::validate() const {
    const int g = group.order();
    if (boundary.size() != rank.size()) return "boundary list does not match rank list";
    for (std::size_t n = 1; n < rank.size(); ++n) {
        if (static_cast<int>(boundary[n].size()) != g) return "boundary needs one matrix per group element";
        for (const auto& m : boundary[n])
            if (m.rows() != rank[n - 1] || m.cols() != rank[n]) return "boundary matrix has wrong shape";
    }
    for (std::size_t n = 2; n < rank.size(); ++n) {
        // coefficient of h in (d_{n-1} d_n)(i, k)
        for (int h = 0; h < g; ++h) {
            IntMatrix acc = IntMatrix::Zero(rank[n - 2], rank[n]);
            for (int a = 0; a < g; ++a) {
                const int b = group.mul(group.inv(a), h);  // a * b == h
                acc += boundary[n - 1][static_cast<std::size_t>(a)] * boundary[n][static_cast<std::size_t>(b)];
            }
            if (!acc.isZero()) return "dd != 0 over the group ring in degree " + std::to_string(n);
        }
    }
    return {};
}

CochainComplex hom_over_group_ring(const GroupRingModuleMap& chains, const GroupModule& m) {
    if (!(chains.group == m.group)) throw std::invalid_argument("hom_over_group_ring: group mismatch");
    if (auto e = m.validate(); !e.empty()) throw std::invalid_argument("module: " + e);
    const Index k = m.module.generators;
    std::vector<FgAbPresentation> terms;
    for (Index r : chains.rank) terms.push_back(direct_sum(std::vector<FgAbPresentation>(static_cast<std::size_t>(r), m.module)));
    std::vector<IntMatrix> ds;
    for (std::size_t n = 0; n + 1 < chains.rank.size(); ++n) {
        IntMatrix d = IntMatrix::Zero(chains.rank[n + 1] * k, chains.rank[n] * k);
        for (int a = 0; a < chains.group.order(); ++a) {
            const IntMatrix& c = chains.boundary[n + 1][static_cast<std::size_t>(a)];
            for (Index i = 0; i < c.rows(); ++i)
                for (Index j = 0; j < c.cols(); ++j)
                    if (c(i, j) != Integer(0)) d.block(j * k, i * k, k, k) += c(i, j) * m.action[static_cast<std::size_t>(a)];
        }
        ds.push_back(std::move(d));
    }
    return {std::move(terms), std::move(ds)};
}

}  // namespace bredon
