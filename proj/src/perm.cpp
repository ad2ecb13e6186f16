#include "lbt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lbt {

Permutation::Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (uint32_t x = 0; x < degree(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw std::invalid_argument("degree mismatch in permutation product");
    std::vector<uint32_t> img(degree());
    for (uint32_t x = 0; x < degree(); ++x) img[x] = rhs.img_[img_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> img(degree());
    for (uint32_t x = 0; x < degree(); ++x) img[img_[x]] = x;
    return Permutation(std::move(img));
}

uint64_t Permutation::order() const {
    uint64_t result = 1;
    std::vector<bool> done(degree(), false);
    for (uint32_t x = 0; x < degree(); ++x) {
        if (done[x]) continue;
        uint64_t len = 0;
        for (uint32_t y = x; !done[y]; y = img_[y]) {
            done[y] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::power(int64_t k) const {
    uint64_t n = order();
    uint64_t e = static_cast<uint64_t>(((k % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) %
                                       static_cast<int64_t>(n));
    Permutation acc = identity(degree());
    Permutation base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<uint32_t>> result;
    std::vector<bool> done(degree(), false);
    for (uint32_t x = 0; x < degree(); ++x) {
        if (done[x] || img_[x] == x) {
            done[x] = true;
            continue;
        }
        std::vector<uint32_t> cyc;
        for (uint32_t y = x; !done[y]; y = img_[y]) {
            done[y] = true;
            cyc.push_back(y);
        }
        result.push_back(std::move(cyc));
    }
    return result;
}

std::string Permutation::cycle_string() const {
    auto cycs = cycles();
    if (cycs.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cycs) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ',';
            out << c[i];
        }
        out << ')';
    }
    return out.str();
}

std::vector<uint32_t> Permutation::moved_points() const {
    std::vector<uint32_t> moved;
    for (uint32_t x = 0; x < degree(); ++x)
        if (img_[x] != x) moved.push_back(x);
    return moved;
}

Permutation Permutation::from_cycles(const std::string& text, uint32_t degree) {
    std::vector<uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<uint32_t> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected point in cycle notation");
            uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<uint64_t>(text[i] - '0');
                ++i;
            }
            if (v >= degree) throw std::invalid_argument("cycle point exceeds degree");
            cyc.push_back(static_cast<uint32_t>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
        ++i; // ')'
        for (size_t k = 0; k + 1 < cyc.size(); ++k) {
            if (img[cyc[k]] != cyc[k]) throw std::invalid_argument("point repeated across cycles");
            img[cyc[k]] = cyc[k + 1];
        }
        if (cyc.size() > 1) {
            if (img[cyc.back()] != cyc.back())
                throw std::invalid_argument("point repeated across cycles");
            img[cyc.back()] = cyc.front();
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

std::vector<std::vector<uint32_t>> orbits_of(const std::vector<Permutation>& gens,
                                             uint32_t degree) {
    std::vector<std::vector<uint32_t>> result;
    std::vector<bool> seen(degree, false);
    for (uint32_t x = 0; x < degree; ++x) {
        if (seen[x]) continue;
        std::vector<uint32_t> orbit;
        std::queue<uint32_t> todo;
        todo.push(x);
        seen[x] = true;
        while (!todo.empty()) {
            uint32_t y = todo.front();
            todo.pop();
            orbit.push_back(y);
            for (const auto& g : gens) {
                uint32_t z = g[y];
                if (!seen[z]) {
                    seen[z] = true;
                    todo.push(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

PermGroup::PermGroup(uint32_t degree, std::vector<Permutation> gens,
                     std::vector<Permutation> elements)
    : degree_(degree), gens_(std::move(gens)), elements_(std::move(elements)) {}

PermGroup PermGroup::closure(uint32_t degree, std::vector<Permutation> gens,
                             uint64_t element_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    std::set<Permutation> seen;
    std::queue<Permutation> todo;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    todo.push(id);
    while (!todo.empty()) {
        Permutation cur = std::move(todo.front());
        todo.pop();
        for (const auto& g : gens) {
            Permutation next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > element_cap)
                    throw cap_exceeded("group closure cap exceeded after " +
                                       std::to_string(seen.size() - 1) + " elements");
                todo.push(std::move(next));
            }
        }
    }
    std::vector<Permutation> elements(seen.begin(), seen.end());
    std::vector<Permutation> reduced = reduce_generators(degree, elements);
    return PermGroup(degree, std::move(reduced), std::move(elements));
}

PermGroup PermGroup::from_elements(uint32_t degree, std::vector<Permutation> elements) {
    for (const auto& e : elements)
        if (e.degree() != degree) throw std::invalid_argument("element degree mismatch");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !elements.front().is_identity())
        throw std::invalid_argument("element set does not contain the identity");
    auto gens = reduce_generators(degree, elements);
    try {
        PermGroup regen = closure(degree, gens, elements.size());
        if (regen.elements_ != elements)
            throw std::invalid_argument("element set is not closed");
    } catch (const cap_exceeded&) {
        throw std::invalid_argument("element set is not closed");
    }
    return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::trivial(uint32_t degree) {
    return PermGroup(degree, {}, {Permutation::identity(degree)});
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    return true;
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const {
    return orbits_of(gens_, degree_);
}

bool PermGroup::is_transitive() const {
    return degree_ == 0 || orbits().size() == 1;
}

bool PermGroup::same_element_set(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
}

std::vector<Permutation> reduce_generators(uint32_t degree,
                                           const std::vector<Permutation>& elements) {
    std::vector<Permutation> gens;
    std::set<Permutation> reachable;
    reachable.insert(Permutation::identity(degree));
    for (const auto& e : elements) {
        if (reachable.count(e)) continue;
        gens.push_back(e);
        // re-close with the enlarged generating set
        std::queue<Permutation> todo;
        for (const auto& r : reachable) todo.push(r);
        while (!todo.empty()) {
            Permutation cur = std::move(todo.front());
            todo.pop();
            for (const auto& g : gens) {
                Permutation next = cur * g;
                if (reachable.insert(next).second) todo.push(std::move(next));
            }
        }
        if (reachable.size() == elements.size()) break;
    }
    return gens;
}

PermGroup centralizer_in_sym(uint32_t degree, const std::vector<Permutation>& gens,
                             uint64_t element_cap) {
    const uint32_t n = degree;
    for (const auto& g : gens)
        if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
    auto orbs = orbits_of(gens, n);

    std::vector<uint32_t> orbit_of_point(n, 0);
    for (uint32_t i = 0; i < orbs.size(); ++i)
        for (uint32_t p : orbs[i]) orbit_of_point[p] = i;

    // Schreier tree per orbit: bfs_order visits the orbit from its base;
    // tree_gen/tree_parent reconstruct how each point was reached.
    struct OrbitTree {
        uint32_t base;
        std::vector<uint32_t> bfs_order;
        std::vector<uint32_t> tree_parent, tree_gen; // indexed by point
    };
    std::vector<OrbitTree> trees(orbs.size());
    for (uint32_t i = 0; i < orbs.size(); ++i) {
        OrbitTree& t = trees[i];
        t.base = orbs[i].front();
        t.tree_parent.assign(n, UINT32_MAX);
        t.tree_gen.assign(n, UINT32_MAX);
        std::queue<uint32_t> todo;
        todo.push(t.base);
        std::vector<bool> seen(n, false);
        seen[t.base] = true;
        while (!todo.empty()) {
            uint32_t p = todo.front();
            todo.pop();
            t.bfs_order.push_back(p);
            for (uint32_t gi = 0; gi < gens.size(); ++gi) {
                uint32_t q = gens[gi][p];
                if (!seen[q]) {
                    seen[q] = true;
                    t.tree_parent[q] = p;
                    t.tree_gen[q] = gi;
                    todo.push(q);
                }
            }
        }
    }

    // Per orbit, every consistent image map: pick the base image, spread it
    // along the tree, then insist every generator commutes at every point.
    struct OrbitChoice {
        uint32_t target_orbit;
        std::vector<std::pair<uint32_t, uint32_t>> assignment; // (point, image)
    };
    std::vector<std::vector<OrbitChoice>> choices(orbs.size());
    for (uint32_t i = 0; i < orbs.size(); ++i) {
        const OrbitTree& t = trees[i];
        for (uint32_t y = 0; y < n; ++y) {
            if (orbs[orbit_of_point[y]].size() != orbs[i].size()) continue;
            std::vector<uint32_t> img(n, UINT32_MAX);
            img[t.base] = y;
            for (uint32_t p : t.bfs_order) {
                if (p == t.base) continue;
                img[p] = gens[t.tree_gen[p]][img[t.tree_parent[p]]];
            }
            bool ok = true;
            for (uint32_t p : t.bfs_order) {
                for (const auto& g : gens)
                    if (img[g[p]] != g[img[p]]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            OrbitChoice choice;
            choice.target_orbit = orbit_of_point[y];
            for (uint32_t p : t.bfs_order) choice.assignment.emplace_back(p, img[p]);
            choices[i].push_back(std::move(choice));
        }
    }

    std::vector<Permutation> found;
    std::vector<uint32_t> image(n, 0);
    std::vector<bool> orbit_used(orbs.size(), false);
    auto extend = [&](auto&& self, uint32_t oi) -> void {
        if (oi == orbs.size()) {
            if (found.size() >= element_cap)
                throw cap_exceeded("centralizer cap exceeded at " +
                                   std::to_string(found.size()) + " elements");
            found.push_back(Permutation{std::vector<uint32_t>(image)});
            return;
        }
        for (const OrbitChoice& choice : choices[oi]) {
            if (orbit_used[choice.target_orbit]) continue;
            for (auto [p, y] : choice.assignment) image[p] = y;
            orbit_used[choice.target_orbit] = true;
            self(self, oi + 1);
            orbit_used[choice.target_orbit] = false;
        }
    };
    extend(extend, 0);

    return PermGroup::from_elements(n, std::move(found));
}

PermGroup centralizer_in_sym(const PermGroup& g, uint64_t element_cap) {
    return centralizer_in_sym(g.degree(), g.generators(), element_cap);
}

GroupAction GroupAction::natural(const PermGroup& g) {
    GroupAction a{g, g.degree(), g.elements()};
    return a;
}

bool GroupAction::respects_products() const {
    if (point_images.size() != group.elements().size()) return false;
    for (const auto& p : point_images)
        if (p.degree() != point_count) return false;
    auto index_of = [&](const Permutation& e) {
        const auto& es = group.elements();
        return static_cast<size_t>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
    };
    if (!point_images[index_of(Permutation::identity(group.degree()))].is_identity())
        return false;
    const auto& es = group.elements();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            size_t k = index_of(es[i] * es[j]);
            if (point_images[i] * point_images[j] != point_images[k]) return false;
        }
    return true;
}

bool is_transitive_action(const GroupAction& a) {
    if (a.point_count == 0) return true;
    return orbits_of(a.point_images, a.point_count).size() == 1;
}

bool is_regular_action(const GroupAction& a) {
    // route one: direct counting
    bool counted = true;
    for (uint32_t x = 0; x < a.point_count && counted; ++x) {
        std::vector<uint32_t> hits(a.point_count, 0);
        for (const auto& p : a.point_images) ++hits[p[x]];
        for (uint32_t h : hits)
            if (h != 1) {
                counted = false;
                break;
            }
    }
    if (a.point_count == 0) counted = a.point_images.size() == 1;
    // route two: transitivity plus order
    bool structural = is_transitive_action(a) &&
                      a.point_images.size() == a.point_count;
    if (a.point_count == 0) structural = a.point_images.size() == 1;
    if (counted != structural)
        throw std::logic_error("regularity routes disagree");
    return counted;
}

} // namespace lbt
