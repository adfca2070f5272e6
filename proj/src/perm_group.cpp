#include "k3a5/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace k3a5 {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 0 || from >= degree) throw std::invalid_argument("cycle point out of range");
            img[static_cast<std::size_t>(from)] = to;
        }
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        img[x] = img_[static_cast<std::size_t>(o.img_[x])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
    return Perm(std::move(img));
}

bool Perm::is_even() const {
    int transpositions = 0;
    for (int len : cycle_type()) transpositions += len - 1;
    return transpositions % 2 == 0;
}

int Perm::order() const {
    long o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<long>(len));
    return static_cast<int>(o);
}

std::vector<int> Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (std::size_t s = 0; s < img_.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        std::size_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            x = static_cast<std::size_t>(img_[x]);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::string Perm::to_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string s;
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start] || img_[start] == static_cast<int>(start)) continue;
        s += "(";
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            s += (first ? "" : " ") + std::to_string(x + 1);
            first = false;
            x = static_cast<std::size_t>(img_[x]);
        }
        s += ")";
    }
    return s.empty() ? "id" : s;
}

PermGroup PermGroup::alternating(int degree) {
    if (degree < 3 || degree > 8) throw std::invalid_argument("unsupported degree");
    PermGroup g;
    g.degree_ = degree;
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    do {
        Perm p(img);
        if (p.is_even()) g.elements_.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(g.elements_.begin(), g.elements_.end());
    g.build_classes();
    return g;
}

void PermGroup::build_classes() {
    const std::size_t n = elements_.size();
    class_index_.assign(n, n);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t s = 0; s < n; ++s) {
        if (class_index_[s] != n) continue;
        std::vector<std::size_t> orbit;
        for (const Perm& g : elements_) {
            std::size_t idx = index_of(g.inverse() * elements_[s] * g);
            if (class_index_[idx] == n) {
                class_index_[idx] = orbits.size();
                orbit.push_back(idx);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    // Sort classes by element order, then by smallest member; for A5 this
    // makes 5A the class of (1 2 3 4 5), whose image vector is the least
    // among all 5-cycles.
    std::vector<std::size_t> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        int oa = elements_[orbits[a][0]].order(), ob = elements_[orbits[b][0]].order();
        if (oa != ob) return oa < ob;
        return orbits[a][0] < orbits[b][0];
    });

    std::map<int, char> next_letter;
    std::vector<std::size_t> new_index(orbits.size());
    for (std::size_t rank = 0; rank < perm.size(); ++rank) {
        const auto& orbit = orbits[perm[rank]];
        int order = elements_[orbit[0]].order();
        char letter = next_letter.count(order) ? next_letter[order] : 'A';
        next_letter[order] = static_cast<char>(letter + 1);
        ConjugacyClass c;
        c.label = std::to_string(order) + letter;
        c.representative = elements_[orbit[0]];
        c.members = orbit;
        classes_.push_back(std::move(c));
        new_index[perm[rank]] = rank;
    }
    for (std::size_t i = 0; i < n; ++i) class_index_[i] = new_index[class_index_[i]];
}

bool PermGroup::contains(const Perm& p) const {
    return p.degree() == degree_ &&
           std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p))
        throw std::invalid_argument("permutation is not a group member: " + p.to_string());
    return static_cast<std::size_t>(it - elements_.begin());
}

const std::string& PermGroup::class_of(const Perm& p) const {
    return classes_[class_index_[index_of(p)]].label;
}

namespace {

std::vector<std::size_t> closure(const std::vector<std::vector<std::size_t>>& table,
                                 std::size_t identity, std::vector<std::size_t> gens) {
    std::vector<bool> in(table.size(), false);
    std::vector<std::size_t> members{identity};
    in[identity] = true;
    for (std::size_t g : gens)
        if (!in[g]) {
            in[g] = true;
            members.push_back(g);
        }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            std::size_t p = table[members[i]][members[j]];
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::set<long> PermGroup::subgroup_orders() const {
    const std::size_t n = elements_.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index_of(elements_[i] * elements_[j]);
    std::size_t id = index_of(Perm::identity(degree_));

    std::set<std::vector<std::size_t>> subgroups;
    subgroups.insert(closure(table, id, {}));
    for (std::size_t a = 0; a < n; ++a) {
        subgroups.insert(closure(table, id, {a}));
        for (std::size_t b = a + 1; b < n; ++b) subgroups.insert(closure(table, id, {a, b}));
    }
    std::set<long> orders;
    for (const auto& s : subgroups) orders.insert(static_cast<long>(s.size()));
    return orders;
}

std::set<long> PermGroup::transitive_orbit_sizes() const {
    std::set<long> sizes;
    for (long h : subgroup_orders()) {
        long r = static_cast<long>(size()) / h;
        if (r >= 5) sizes.insert(r);
    }
    return sizes;
}

}  // namespace k3a5
