#pragma once

#include <set>
#include <string>
#include <vector>

namespace k3a5 {

// Permutation of {0, ..., degree-1}, stored as its image vector.
class Perm {
    std::vector<int> img_;

public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int degree);
    // Cycles in 0-based points, e.g. {{0,1},{2,3}} for (12)(34).
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;  // (a*b)(x) = a(b(x))
    Perm inverse() const;

    bool is_even() const;
    int order() const;
    std::vector<int> cycle_type() const;  // descending cycle lengths, fixed points included

    auto operator<=>(const Perm&) const = default;

    std::string to_string() const;  // 1-based cycle notation
};

struct ConjugacyClass {
    std::string label;
    Perm representative;
    std::vector<std::size_t> members;  // indices into the group's element list
    std::size_t size() const { return members.size(); }
};

class PermGroup {
    int degree_ = 0;
    std::vector<Perm> elements_;             // sorted
    std::vector<std::size_t> class_index_;   // element index -> class index
    std::vector<ConjugacyClass> classes_;

    void build_classes();

public:
    static PermGroup alternating(int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }

    bool contains(const Perm& p) const;
    std::size_t index_of(const Perm& p) const;  // throws if not a member
    const std::string& class_of(const Perm& p) const;

    // All subgroup orders, by exhaustive closure of <= 2-generated subsets
    // (every subgroup of A5 is generated by at most two elements).
    std::set<long> subgroup_orders() const;

    // Degrees of the faithful transitive actions: indices |G|/|H| over all
    // subgroups H, restricted to values >= 5.
    std::set<long> transitive_orbit_sizes() const;
};

}  // namespace k3a5
