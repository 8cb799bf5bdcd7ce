#include "fga/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace fga {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_same_group(const GroupSpec& a, const GroupSpec& b, const char* where) {
    if (a != b) {
        throw GroupMismatchError(std::string(where) + ": arguments live on different groups");
    }
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

std::int64_t GroupSpec::lcm_order() const {
    std::int64_t l = 1;
    for (std::int64_t n : orders) l = std::lcm(l, n);
    return l;
}

GroupSpec make_group(const std::vector<std::int64_t>& orders) {
    if (orders.empty()) {
        throw InvalidGroupError("make_group: order list must be non-empty");
    }
    GroupSpec g;
    g.orders = orders;
    g.order = 1;
    for (std::int64_t n : orders) {
        if (n < 1) {
            throw InvalidGroupError("make_group: cyclic order " + std::to_string(n) +
                                    " is not positive");
        }
        g.order *= n;
    }
    return g;
}

GroupElement make_element(const GroupSpec& group, std::vector<std::int64_t> coords) {
    if (coords.size() != group.orders.size()) {
        throw InvalidGroupError("make_element: coordinate count does not match group");
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
        coords[j] = mod_reduce(coords[j], group.orders[j]);
    }
    return GroupElement{group, std::move(coords)};
}

GroupElement zero_element(const GroupSpec& group) {
    return GroupElement{group, std::vector<std::int64_t>(group.orders.size(), 0)};
}

std::int64_t index_of(const GroupElement& x) {
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        idx = idx * x.group.orders[j] + x.coords[j];
    }
    return idx;
}

GroupElement element_at(const GroupSpec& group, std::int64_t index) {
    std::vector<std::int64_t> coords(group.orders.size(), 0);
    for (std::size_t j = group.orders.size(); j-- > 0;) {
        coords[j] = index % group.orders[j];
        index /= group.orders[j];
    }
    return GroupElement{group, std::move(coords)};
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
    require_same_group(x.group, y.group, "add");
    GroupElement z = x;
    for (std::size_t j = 0; j < z.coords.size(); ++j) {
        z.coords[j] = mod_reduce(x.coords[j] + y.coords[j], x.group.orders[j]);
    }
    return z;
}

GroupElement neg(const GroupElement& x) {
    GroupElement z = x;
    for (std::size_t j = 0; j < z.coords.size(); ++j) {
        z.coords[j] = mod_reduce(-x.coords[j], x.group.orders[j]);
    }
    return z;
}

GroupElement sub(const GroupElement& x, const GroupElement& y) {
    return add(x, neg(y));
}

std::int64_t character_exponent(const GroupElement& x, const GroupElement& omega) {
    require_same_group(x.group, omega.group, "character");
    const std::int64_t l = x.group.lcm_order();
    std::int64_t m = 0;
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        const std::int64_t nj = x.group.orders[j];
        m = mod_reduce(m + mod_reduce(x.coords[j] * omega.coords[j], nj) * (l / nj), l);
    }
    return m;
}

cplx character(const GroupElement& x, const GroupElement& omega) {
    const std::int64_t l = x.group.lcm_order();
    const std::int64_t m = character_exponent(x, omega);
    if (m == 0) return cplx(1.0, 0.0);
    return std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(l));
}

TFPoint make_tf_point(const GroupElement& time, const GroupElement& freq) {
    require_same_group(time.group, freq.group, "make_tf_point");
    return TFPoint{time, freq};
}

TFPoint zero_tf_point(const GroupSpec& group) {
    return TFPoint{zero_element(group), zero_element(group)};
}

std::int64_t plane_size(const GroupSpec& group) {
    return group.order * group.order;
}

std::int64_t index_of(const TFPoint& p) {
    return index_of(p.time) * p.time.group.order + index_of(p.freq);
}

TFPoint tf_point_at(const GroupSpec& group, std::int64_t index) {
    const std::int64_t n = group.order;
    return TFPoint{element_at(group, index / n), element_at(group, index % n)};
}

TFPoint add(const TFPoint& p, const TFPoint& q) {
    return TFPoint{add(p.time, q.time), add(p.freq, q.freq)};
}

TFPoint neg(const TFPoint& p) {
    return TFPoint{neg(p.time), neg(p.freq)};
}

TFPoint sub(const TFPoint& p, const TFPoint& q) {
    return add(p, neg(q));
}

std::int64_t symplectic_exponent(const TFPoint& p, const TFPoint& q) {
    const std::int64_t l = p.time.group.lcm_order();
    return mod_reduce(character_exponent(q.time, p.freq) - character_exponent(p.time, q.freq), l);
}

cplx symplectic_character(const TFPoint& p, const TFPoint& q) {
    const std::int64_t l = p.time.group.lcm_order();
    const std::int64_t m = symplectic_exponent(p, q);
    if (m == 0) return cplx(1.0, 0.0);
    return std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(l));
}

bool Lattice::contains(const TFPoint& p) const {
    const std::int64_t idx = index_of(p);
    auto it = std::lower_bound(elements.begin(), elements.end(), idx,
                               [](const TFPoint& e, std::int64_t v) { return index_of(e) < v; });
    return it != elements.end() && index_of(*it) == idx;
}

Lattice enumerate_subgroup(const GroupSpec& group, const std::vector<TFPoint>& generators) {
    for (const TFPoint& g : generators) {
        require_same_group(g.time.group, group, "enumerate_subgroup");
        require_same_group(g.freq.group, group, "enumerate_subgroup");
    }
    // Breadth-first closure under addition of generators, starting from 0.
    std::unordered_set<std::int64_t> seen;
    std::vector<std::int64_t> frontier;
    seen.insert(index_of(zero_tf_point(group)));
    frontier.push_back(index_of(zero_tf_point(group)));
    while (!frontier.empty()) {
        std::vector<std::int64_t> next;
        for (std::int64_t idx : frontier) {
            const TFPoint p = tf_point_at(group, idx);
            for (const TFPoint& g : generators) {
                const std::int64_t nidx = index_of(add(p, g));
                if (seen.insert(nidx).second) next.push_back(nidx);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::int64_t> indices(seen.begin(), seen.end());
    std::sort(indices.begin(), indices.end());
    Lattice lat;
    lat.group = group;
    lat.generators = generators;
    lat.elements.reserve(indices.size());
    for (std::int64_t idx : indices) lat.elements.push_back(tf_point_at(group, idx));
    return lat;
}

Lattice separable_lattice(const GroupSpec& group, std::int64_t a, std::int64_t b) {
    if (group.orders.size() != 1) {
        throw InvalidLatticeError("separable_lattice: group must be a single cyclic factor");
    }
    const std::int64_t n = group.orders[0];
    if (a < 1 || b < 1 || n % a != 0 || n % b != 0) {
        throw InvalidLatticeError("separable_lattice: steps must divide the group order");
    }
    const GroupElement ea = make_element(group, {a % n});
    const GroupElement eb = make_element(group, {b % n});
    return enumerate_subgroup(group, {TFPoint{ea, zero_element(group)},
                                      TFPoint{zero_element(group), eb}});
}

namespace {

// Small generating set for a sorted element list: greedily add elements
// not yet reached by the closure of the chosen ones.
std::vector<TFPoint> reduce_generators(const GroupSpec& group,
                                       const std::vector<TFPoint>& elements) {
    std::vector<TFPoint> gens;
    Lattice closure = enumerate_subgroup(group, gens);
    for (const TFPoint& e : elements) {
        if (!closure.contains(e)) {
            gens.push_back(e);
            closure = enumerate_subgroup(group, gens);
            if (closure.size() == static_cast<std::int64_t>(elements.size())) break;
        }
    }
    return gens;
}

}  // namespace

Lattice adjoint_subgroup(const Lattice& lattice) {
    const GroupSpec& group = lattice.group;
    std::vector<TFPoint> adjoint_elements;
    for (std::int64_t idx = 0; idx < plane_size(group); ++idx) {
        const TFPoint mu = tf_point_at(group, idx);
        bool annihilates = true;
        for (const TFPoint& gen : lattice.generators) {
            if (symplectic_exponent(gen, mu) != 0) {
                annihilates = false;
                break;
            }
        }
        if (annihilates) adjoint_elements.push_back(mu);
    }
    Lattice adj;
    adj.group = group;
    adj.elements = std::move(adjoint_elements);
    adj.generators = reduce_generators(group, adj.elements);
    return adj;
}

bool is_isotropic(const Lattice& lattice) {
    for (const TFPoint& p : lattice.elements) {
        for (const TFPoint& q : lattice.elements) {
            if (symplectic_exponent(p, q) != 0) return false;
        }
    }
    return true;
}

HeisenbergElement heisenberg_identity(const GroupSpec& group) {
    return HeisenbergElement{cplx(1.0, 0.0), zero_element(group), zero_element(group)};
}

HeisenbergElement heisenberg_multiply(const HeisenbergElement& h1, const HeisenbergElement& h2) {
    require_same_group(h1.time.group, h2.time.group, "heisenberg_multiply");
    return HeisenbergElement{h1.phase * h2.phase * character(h2.time, h1.freq),
                             add(h1.time, h2.time), add(h1.freq, h2.freq)};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& h) {
    return HeisenbergElement{std::conj(h.phase) * character(h.time, h.freq), neg(h.time),
                             neg(h.freq)};
}

}  // namespace fga
