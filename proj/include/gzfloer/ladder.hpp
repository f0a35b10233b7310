#pragma once

#include "gzfloer/face.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzfloer {

// Unit grid segment: 'h' runs (x,y)-(x+1,y), 'v' runs (x,y)-(x,y+1).
struct GridEdge {
    char dir = 'h';
    int x = 0;
    int y = 0;

    auto operator<=>(const GridEdge&) const = default;

    std::string name() const {
        return std::string(1, dir) + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    std::pair<int, int> from() const { return {x, y}; }
    std::pair<int, int> to() const { return dir == 'h' ? std::pair{x + 1, y} : std::pair{x, y + 1}; }
};

// The L-shaped ladder diagram: a column of n unit boxes over [0,1] and a row
// of n unit boxes under [0,1], sharing the corner box. Boxes are keyed by
// their upper-right corner (i,j).
class LadderGraph {
public:
    static LadderGraph build(int n) {
        if (n < 2) throw std::invalid_argument("ladder diagram needs n >= 2");
        LadderGraph g;
        g.n_ = n;
        for (int j = 1; j <= n; ++j) g.boxes_.emplace_back(1, j);
        for (int i = 2; i <= n; ++i) g.boxes_.emplace_back(i, 1);
        std::set<GridEdge> edges;
        for (auto [i, j] : g.boxes_) {
            // box (i,j) occupies [i-1,i] x [j-1,j]
            edges.insert({'h', i - 1, j - 1});
            edges.insert({'h', i - 1, j});
            edges.insert({'v', i - 1, j - 1});
            edges.insert({'v', i, j - 1});
        }
        g.edges_.assign(edges.begin(), edges.end());
        for (std::size_t k = 0; k < g.edges_.size(); ++k) g.index_[g.edges_[k]] = static_cast<int>(k);
        return g;
    }

    int n() const { return n_; }
    const std::vector<GridEdge>& edges() const { return edges_; }
    const std::vector<std::pair<int, int>>& boxes() const { return boxes_; }

    bool has_edge(const GridEdge& e) const { return index_.count(e) != 0; }
    int edge_index(const GridEdge& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw std::invalid_argument("edge not in diagram: " + e.name());
        return it->second;
    }

private:
    int n_ = 0;
    std::vector<GridEdge> edges_;
    std::vector<std::pair<int, int>> boxes_;
    std::map<GridEdge, int> index_;
};

// Shortest monotone lattice path from the origin to a farthest point.
struct PositivePath {
    std::vector<std::pair<int, int>> vertices; // (0,0) first
    std::vector<GridEdge> edges;
};

// The 2(n+1) positive paths: to (1,n) turning right at height h, and to (n,1)
// turning up at offset k.
inline std::vector<PositivePath> enumerate_positive_paths(const LadderGraph& g) {
    const int n = g.n();
    std::vector<PositivePath> out;
    auto push = [&](const std::vector<std::pair<int, int>>& vs) {
        PositivePath p;
        p.vertices = vs;
        for (std::size_t i = 1; i < vs.size(); ++i) {
            auto [px, py] = vs[i - 1];
            GridEdge e = (vs[i].first == px + 1) ? GridEdge{'h', px, py} : GridEdge{'v', px, py};
            p.edges.push_back(e);
        }
        out.push_back(std::move(p));
    };
    for (int h = 0; h <= n; ++h) {
        std::vector<std::pair<int, int>> vs;
        for (int y = 0; y <= h; ++y) vs.emplace_back(0, y);
        for (int y = h; y <= n; ++y) vs.emplace_back(1, y);
        push(vs);
    }
    for (int k = 0; k <= n; ++k) {
        std::vector<std::pair<int, int>> vs;
        for (int x = 0; x <= k; ++x) vs.emplace_back(x, 0);
        for (int x = k; x <= n; ++x) vs.emplace_back(x, 1);
        push(vs);
    }
    return out;
}

// Element of the subgraph poset: a union of positive paths containing both
// farthest points. Self-contained value (n + edge bitmask over the canonical
// edge order); the diagram has at most 6*8-2 = 46 edges for the documented
// bound n <= 8.
class LadderSubgraph {
public:
    static LadderSubgraph from_mask_unchecked(int n, std::uint64_t mask) {
        LadderSubgraph s;
        s.n_ = n;
        s.mask_ = mask;
        return s;
    }

    // Validates that the edge set is a union of positive paths reaching both
    // farthest points.
    static LadderSubgraph from_edges(const LadderGraph& g, const std::vector<GridEdge>& edges) {
        std::uint64_t mask = 0;
        for (const auto& e : edges) mask |= 1ull << g.edge_index(e);
        std::uint64_t covered = 0;
        bool top = false, right = false;
        for (const auto& p : enumerate_positive_paths(g)) {
            std::uint64_t pm = 0;
            for (const auto& e : p.edges) pm |= 1ull << g.edge_index(e);
            if ((pm & mask) != pm) continue;
            covered |= pm;
            if (p.vertices.back() == std::pair{1, g.n()}) top = true;
            else right = true;
        }
        if (covered != mask || !top || !right)
            throw std::invalid_argument("edge set is not a union of positive paths to both corners");
        return from_mask_unchecked(g.n(), mask);
    }

    int n() const { return n_; }
    std::uint64_t mask() const { return mask_; }

    std::vector<GridEdge> edges() const {
        auto g = LadderGraph::build(n_);
        std::vector<GridEdge> out;
        for (std::size_t k = 0; k < g.edges().size(); ++k)
            if (mask_ & (1ull << k)) out.push_back(g.edges()[k]);
        return out;
    }

    std::size_t edge_count() const {
        std::uint64_t m = mask_;
        std::size_t c = 0;
        while (m) {
            m &= m - 1;
            ++c;
        }
        return c;
    }

    friend bool operator==(const LadderSubgraph& a, const LadderSubgraph& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

// All distinct unions of nonempty path sets reaching both corners, sorted by
// bitmask over the canonical edge order. Exponential in the path count; fine
// for the documented bound n <= 8.
inline std::vector<LadderSubgraph> enumerate_subgraphs(const LadderGraph& g) {
    const int n = g.n();
    auto paths = enumerate_positive_paths(g);
    std::vector<std::uint64_t> top_masks, right_masks;
    for (const auto& p : paths) {
        std::uint64_t pm = 0;
        for (const auto& e : p.edges) pm |= 1ull << g.edge_index(e);
        (p.vertices.back() == std::pair{1, n} ? top_masks : right_masks).push_back(pm);
    }
    // union over nonempty subsets of each family
    auto subset_unions = [](const std::vector<std::uint64_t>& ms) {
        std::set<std::uint64_t> out;
        for (std::uint64_t sel = 1; sel < (1ull << ms.size()); ++sel) {
            std::uint64_t u = 0;
            for (std::size_t i = 0; i < ms.size(); ++i)
                if (sel & (1ull << i)) u |= ms[i];
            out.insert(u);
        }
        return std::vector<std::uint64_t>(out.begin(), out.end());
    };
    auto tops = subset_unions(top_masks);
    auto rights = subset_unions(right_masks);
    std::set<std::uint64_t> unions;
    for (auto a : tops)
        for (auto b : rights) unions.insert(a | b);
    std::vector<LadderSubgraph> out;
    out.reserve(unions.size());
    for (auto m : unions) out.push_back(LadderSubgraph::from_mask_unchecked(n, m));
    return out;
}

// First Betti number E - V + C of the covered subgraph.
inline int h1_rank(const LadderSubgraph& s) {
    auto edges = s.edges();
    std::map<std::pair<int, int>, int> vid;
    auto id_of = [&](std::pair<int, int> v) {
        return vid.emplace(v, static_cast<int>(vid.size())).first->second;
    };
    std::vector<int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = 0;
    for (const auto& e : edges) {
        int a = id_of(e.from()), b = id_of(e.to());
        while (static_cast<int>(parent.size()) < static_cast<int>(vid.size())) {
            parent.push_back(static_cast<int>(parent.size()));
            ++components;
        }
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return static_cast<int>(edges.size()) - static_cast<int>(vid.size()) + components;
}

namespace detail {

// The grid edge dividing each interlacing pair, aligned with
// interlacing_pairs(n). An equality is forced exactly when the divider is
// missing from the subgraph.
inline std::vector<std::pair<std::pair<int, int>, GridEdge>> divider_table(int n) {
    std::vector<GridEdge> dividers;
    dividers.push_back({'h', 0, n});                                     // lambda1 | u_{1,n}
    for (int i = 1; i <= n - 1; ++i) dividers.push_back({'h', 0, n - i}); // u_{1,k+1} | u_{1,k}
    dividers.push_back({'v', 1, 1});                                     // u_{1,2} | lambda2
    dividers.push_back({'v', 1, 0});                                     // u_{1,1} | u_{2,1}
    dividers.push_back({'h', 1, 1});                                     // lambda2 | u_{2,1}
    for (int k = 2; k <= n - 1; ++k) dividers.push_back({'v', k, 0});    // u_{k,1} | u_{k+1,1}
    dividers.push_back({'v', n, 0});                                     // u_{n,1} | lambda3
    const auto pairs = interlacing_pairs(n);
    std::vector<std::pair<std::pair<int, int>, GridEdge>> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) out.push_back({pairs[i], dividers[i]});
    return out;
}

} // namespace detail

// Face correspondence: equate every adjacent pair whose divider is absent;
// dimension is the first Betti number.
inline FaceDescriptor face_of(const LadderSubgraph& s) {
    const int n = s.n();
    auto g = LadderGraph::build(n);
    std::vector<std::pair<int, int>> tight;
    for (const auto& [pair, edge] : detail::divider_table(n)) {
        if (!(s.mask() & (1ull << g.edge_index(edge)))) tight.push_back(pair);
    }
    FaceDescriptor f;
    f.n = n;
    f.classes = equality_classes(n, tight);
    f.dimension = h1_rank(s);
    return f;
}

// Set-theoretic edge inclusion.
inline bool poset_leq(const LadderSubgraph& a, const LadderSubgraph& b) {
    if (a.n() != b.n()) throw std::invalid_argument("poset_leq: different diagram sizes");
    return (a.mask() & ~b.mask()) == 0;
}

} // namespace gzfloer
