#include "bredon/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bredon {

namespace {

Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<int> out{0};
    seen[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            const int y = g.mul(out[i], s);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
    const int n = order();
    if (n == 0) throw GroupError("group table is empty");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n) throw GroupError("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw GroupError("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mul_[0][a] != a || mul_[a][0] != a)
            throw GroupError("element 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw GroupError("group table is not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == 0 && mul_[b][a] == 0) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw GroupError("element " + std::to_string(a) + " has no inverse");
    }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& generators, int degree, int cap) {
    if (degree < 1) throw GroupError("permutation degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree) throw GroupError("generator has wrong degree");
        std::vector<bool> hit(static_cast<std::size_t>(degree), false);
        for (int x : p) {
            if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)])
                throw GroupError("generator is not a permutation");
            hit[static_cast<std::size_t>(x)] = true;
        }
    }
    Perm id(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
    std::set<Perm> elems{id};
    std::deque<Perm> queue{id};
    while (!queue.empty()) {
        Perm x = queue.front();
        queue.pop_front();
        for (const auto& s : generators) {
            Perm y = compose(x, s);
            if (elems.insert(y).second) {
                if (static_cast<int>(elems.size()) > cap)
                    throw GroupError("generated group exceeds size cap " + std::to_string(cap));
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<Perm> perms(elems.begin(), elems.end());
    std::map<Perm, int> id_of;
    for (std::size_t i = 0; i < perms.size(); ++i) id_of[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) table[a][b] = id_of.at(compose(perms[a], perms[b]));
    FiniteGroup g(std::move(table));
    g.perms_ = std::move(perms);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    Perm r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
    return from_permutations(n > 1 ? std::vector<Perm>{r} : std::vector<Perm>{}, n);
}

FiniteGroup FiniteGroup::dihedral(int n) {
    Perm r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r[static_cast<std::size_t>(i)] = (i + 1) % n;
        s[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return from_permutations({r, s}, n);
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 2) return from_permutations({}, 1);
    Perm t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i)] = i;
        c[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    std::swap(t[0], t[1]);
    return from_permutations({t, c}, n);
}

std::string FiniteGroup::element_name(int a) const {
    if (perms_.empty()) return "g" + std::to_string(a);
    const Perm& p = perms_[static_cast<std::size_t>(a)];
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        os << '(';
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            if (j != i) os << ' ';
            os << j;
            seen[j] = true;
        }
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

SubgroupLattice::SubgroupLattice(FiniteGroup g, int cap) : g_(std::move(g)) {
    const int n = g_.order();
    if (n > cap) throw GroupError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

    std::set<std::vector<int>> found{{0}};
    std::deque<std::vector<int>> queue{{0}};
    while (!queue.empty()) {
        const std::vector<int> s = queue.front();
        queue.pop_front();
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int x : s) in[static_cast<std::size_t>(x)] = true;
        for (int x = 0; x < n; ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            std::vector<int> gens = s;
            gens.push_back(x);
            auto t = closure(g_, gens);
            if (found.insert(t).second) queue.push_back(std::move(t));
        }
    }
    std::vector<std::vector<int>> all(found.begin(), found.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    for (auto& m : all) {
        Subgroup s;
        s.mask.assign(static_cast<std::size_t>(n), false);
        for (int x : m) s.mask[static_cast<std::size_t>(x)] = true;
        s.members = std::move(m);
        s.index = static_cast<int>(subs_.size());
        by_members_[s.members] = s.index;
        subs_.push_back(std::move(s));
    }
    const int m = size();

    incl_.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int h = 0; h < m; ++h)
        for (int k = 0; k < m; ++k)
            incl_[h][k] = std::all_of(subs_[h].members.begin(), subs_[h].members.end(),
                                      [&](int x) { return subs_[k].contains(x); });

    conj_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int h = 0; h < m; ++h)
        for (int a = 0; a < n; ++a) {
            std::vector<int> c;
            for (int x : subs_[h].members) c.push_back(g_.conj(a, x));
            std::sort(c.begin(), c.end());
            conj_[h][a] = by_members_.at(c);
        }

    norm_.resize(static_cast<std::size_t>(m));
    for (int h = 0; h < m; ++h) {
        std::vector<int> nm;
        for (int a = 0; a < n; ++a)
            if (conj_[h][a] == h) nm.push_back(a);
        norm_[h] = by_members_.at(nm);
    }

    class_.assign(static_cast<std::size_t>(m), -1);
    transp_.assign(static_cast<std::size_t>(m), 0);
    for (int h = 0; h < m; ++h) {
        if (class_[h] >= 0) continue;
        const int c = static_cast<int>(reps_.size());
        reps_.push_back(h);
        for (int a = 0; a < n; ++a) {
            const int k = conj_[h][a];
            if (class_[k] < 0) {
                class_[k] = c;
                transp_[k] = a;
            }
        }
    }

    len_.assign(static_cast<std::size_t>(m), 0);
    for (int h = m - 1; h >= 0; --h)
        for (int k = h + 1; k < m; ++k)
            if (incl_[h][k]) len_[h] = std::max(len_[h], len_[k] + 1);
    strata_.assign(static_cast<std::size_t>(len_[0] + 1), {});
    for (int h = 0; h < m; ++h) strata_[len_[h]].push_back(h);
}

int SubgroupLattice::find(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto it = by_members_.find(members);
    return it == by_members_.end() ? -1 : it->second;
}

int SubgroupLattice::generated(const std::vector<int>& elements) const {
    return by_members_.at(closure(g_, elements));
}

int SubgroupLattice::intersection(int h, int k) const {
    std::vector<int> c;
    for (int x : subs_[h].members)
        if (subs_[k].contains(x)) c.push_back(x);
    return by_members_.at(c);
}

int SubgroupLattice::subconjugator(int h, int k) const {
    for (int a = 0; a < g_.order(); ++a)
        if (incl_[conj_[h][a]][k]) return a;
    return -1;
}

int SubgroupLattice::coset_rep(int a, int h) const {
    int best = a;
    for (int x : subs_[h].members) best = std::min(best, g_.mul(a, x));
    return best;
}

Quotient SubgroupLattice::quotient(int n, int k) const {
    if (!le(k, n) || !le(n, norm_[k])) throw GroupError("quotient: subgroup is not normal in the ambient subgroup");
    Quotient q;
    q.proj.assign(static_cast<std::size_t>(g_.order()), -1);
    for (int a : subs_[n].members) {
        if (q.proj[a] >= 0) continue;
        const int id = static_cast<int>(q.rep.size());
        q.rep.push_back(a);  // members are sorted, so a is the minimal element of aK
        for (int x : subs_[k].members) q.proj[g_.mul(a, x)] = id;
    }
    const std::size_t r = q.rep.size();
    std::vector<std::vector<int>> t(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t[i][j] = q.proj[g_.mul(q.rep[i], q.rep[j])];
    q.group = FiniteGroup(std::move(t));
    return q;
}

SubquotientWeyl SubgroupLattice::subquotient_weyl(int h, int k) const {
    if (!le(h, k)) throw GroupError("subquotient Weyl group needs H <= K");
    SubquotientWeyl s;
    s.h = h;
    s.k = k;
    const int nn = intersection(norm_[h], norm_[k]);
    s.w = quotient(nn, h);
    s.wbar = quotient(nn, intersection(k, norm_[h]));
    for (int rep : s.w.rep) s.pi.push_back(s.wbar.proj[rep]);
    return s;
}

WeylLattice weyl_lattice(const SubgroupLattice& lat, int h) {
    WeylLattice w;
    w.h = h;
    w.weyl = lat.weyl(h);
    auto wl = std::make_shared<SubgroupLattice>(w.weyl.group);
    w.to_weyl.assign(static_cast<std::size_t>(lat.size()), -1);
    w.from_weyl.assign(static_cast<std::size_t>(wl->size()), -1);
    const int nh = lat.normalizer(h);
    for (int l = 0; l < lat.size(); ++l) {
        if (!lat.le(h, l) || !lat.le(l, nh)) continue;
        std::vector<int> img;
        for (int a : lat.at(l).members) img.push_back(w.weyl.proj[static_cast<std::size_t>(a)]);
        const int wi = wl->find(img);
        w.to_weyl[static_cast<std::size_t>(l)] = wi;
        w.from_weyl[static_cast<std::size_t>(wi)] = l;
    }
    w.lattice = std::move(wl);
    return w;
}

}  // namespace bredon
