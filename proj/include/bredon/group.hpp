#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bredon {

/// Raised when group data is malformed (non-associative table, size cap, ...).
class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Perm = std::vector<int>;

/// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
public:
    static constexpr int default_cap = 100;

    FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}
    /// Validates the table: total, associative, 0 a two-sided identity, inverses exist.
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    /// Closure of permutation generators on `degree` points. Images are 0-based and
    /// (a*b)(x) = a(b(x)). Elements are numbered in lexicographic order of their
    /// image tuples, so the identity is 0.
    static FiniteGroup from_permutations(const std::vector<Perm>& generators, int degree,
                                         int cap = default_cap);
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n
    static FiniteGroup symmetric(int n);

    [[nodiscard]] int order() const { return static_cast<int>(mul_.size()); }
    [[nodiscard]] int mul(int a, int b) const { return mul_[a][b]; }
    [[nodiscard]] int inv(int a) const { return inv_[a]; }
    /// g x g^-1
    [[nodiscard]] int conj(int g, int x) const { return mul_[mul_[g][x]][inv_[g]]; }
    [[nodiscard]] const std::vector<std::vector<int>>& table() const { return mul_; }
    /// Permutation realizing each element, when built from permutations.
    [[nodiscard]] const std::vector<Perm>& permutations() const { return perms_; }
    [[nodiscard]] std::string element_name(int a) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<Perm> perms_;
};

/// Quotient N/K of a subgroup N by a normal subgroup K of it, as a group in its
/// own right. Quotient elements are ordered by the minimal element of each coset.
struct Quotient {
    FiniteGroup group;
    std::vector<int> rep;   ///< quotient element -> minimal element of the coset
    std::vector<int> proj;  ///< ambient element -> quotient element, -1 outside N
};

struct Subgroup {
    std::vector<int> members;  ///< sorted
    std::vector<bool> mask;
    int index = -1;

    [[nodiscard]] int order() const { return static_cast<int>(members.size()); }
    [[nodiscard]] bool contains(int g) const { return mask[static_cast<std::size_t>(g)]; }
};

struct SubquotientWeyl {
    int h = -1, k = -1;
    Quotient w;     ///< W^K_H = (N K ∩ N H)/H
    Quotient wbar;  ///< W̄^K_H = (N K ∩ N H)/(K ∩ N H)
    std::vector<int> pi;  ///< w element -> wbar element
};

/// All subgroups of a finite group, ordered by (order, sorted member tuple).
///
/// Index 0 is the trivial subgroup and the last index is G itself. Each
/// conjugacy class is represented by its minimal member in this order.
class SubgroupLattice {
public:
    explicit SubgroupLattice(FiniteGroup g, int cap = FiniteGroup::default_cap);

    [[nodiscard]] const FiniteGroup& group() const { return g_; }
    [[nodiscard]] int size() const { return static_cast<int>(subs_.size()); }
    [[nodiscard]] const Subgroup& at(int i) const { return subs_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<Subgroup>& subgroups() const { return subs_; }
    [[nodiscard]] int trivial() const { return 0; }
    [[nodiscard]] int whole() const { return size() - 1; }

    /// Index of the subgroup with these members; -1 if they do not form one.
    [[nodiscard]] int find(std::vector<int> members) const;
    /// Index of the subgroup generated by the given elements.
    [[nodiscard]] int generated(const std::vector<int>& elements) const;
    [[nodiscard]] bool le(int h, int k) const { return incl_[h][k]; }
    [[nodiscard]] bool lt(int h, int k) const { return h != k && incl_[h][k]; }
    /// g H g^-1
    [[nodiscard]] int conjugate(int g, int h) const { return conj_[h][g]; }
    [[nodiscard]] int intersection(int h, int k) const;
    [[nodiscard]] int normalizer(int h) const { return norm_[h]; }
    [[nodiscard]] int length(int h) const { return len_[h]; }
    [[nodiscard]] int max_length() const { return len_[0]; }
    [[nodiscard]] const std::vector<int>& stratum(int k) const { return strata_[k]; }

    [[nodiscard]] int class_of(int h) const { return class_[h]; }
    [[nodiscard]] int class_count() const { return static_cast<int>(reps_.size()); }
    [[nodiscard]] const std::vector<int>& class_reps() const { return reps_; }
    [[nodiscard]] int rep(int h) const { return reps_[class_[h]]; }
    [[nodiscard]] bool conjugate_to(int h, int k) const { return class_[h] == class_[k]; }
    /// Minimal x with H = x H_rep x^-1.
    [[nodiscard]] int transporter(int h) const { return transp_[h]; }
    /// Some g with g H g^-1 <= K, or -1.
    [[nodiscard]] int subconjugator(int h, int k) const;
    /// Minimal element of the left coset aH.
    [[nodiscard]] int coset_rep(int a, int h) const;

    [[nodiscard]] Quotient quotient(int n, int k) const;
    [[nodiscard]] Quotient weyl(int h) const { return quotient(norm_[h], h); }
    [[nodiscard]] SubquotientWeyl subquotient_weyl(int h, int k) const;

private:
    FiniteGroup g_;
    std::vector<Subgroup> subs_;
    std::map<std::vector<int>, int> by_members_;
    std::vector<std::vector<bool>> incl_;
    std::vector<std::vector<int>> conj_;
    std::vector<int> norm_, len_, class_, reps_, transp_;
    std::vector<std::vector<int>> strata_;
};

/// The Weyl group W H = N H / H with its own subgroup lattice and the lattice
/// correspondence L <-> L/H for H <= L <= N H.
struct WeylLattice {
    int h = -1;
    Quotient weyl;
    std::shared_ptr<const SubgroupLattice> lattice;
    std::vector<int> to_weyl;    ///< G-subgroup -> W H subgroup, -1 unless H <= L <= N H
    std::vector<int> from_weyl;  ///< W H subgroup -> preimage in G

    /// Minimal element of N H in the coset w.
    [[nodiscard]] int lift(int w) const { return weyl.rep[static_cast<std::size_t>(w)]; }
};

WeylLattice weyl_lattice(const SubgroupLattice& lat, int h);

}  // namespace bredon
