#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzfloer {

// Nodes of the filling diagram, in chain order:
//   0            lambda1
//   1 .. n       u_{1,n} .. u_{1,1}
//   n+1          lambda2
//   n+2 .. 2n    u_{2,1} .. u_{n,1}
//   2n+1         lambda3
inline int face_node_count(int n) { return 2 * n + 2; }

inline std::string face_node_name(int n, int id) {
    if (id == 0) return "lambda1";
    if (id == n + 1) return "lambda2";
    if (id == 2 * n + 1) return "lambda3";
    if (id >= 1 && id <= n) return "u_{1," + std::to_string(n + 1 - id) + "}";
    if (id >= n + 2 && id <= 2 * n) return "u_{" + std::to_string(id - n) + ",1}";
    throw std::invalid_argument("face_node_name: bad node id");
}

// Adjacent pairs (a, b) of the interlacing pattern, value(a) >= value(b), in
// canonical inequality order. There are 2n+2 of them.
inline std::vector<std::pair<int, int>> interlacing_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.push_back({0, 1});                                           // lambda1 >= u_{1,n}
    for (int i = 1; i <= n - 1; ++i) out.push_back({i, i + 1});      // u_{1,k+1} >= u_{1,k}
    out.push_back({n - 1, n + 1});                                   // u_{1,2} >= lambda2
    out.push_back({n, n + 2});                                       // u_{1,1} >= u_{2,1}
    out.push_back({n + 1, n + 2});                                   // lambda2 >= u_{2,1}
    for (int k = 2; k <= n - 1; ++k) out.push_back({n + k, n + k + 1}); // u_{k,1} >= u_{k+1,1}
    out.push_back({2 * n, 2 * n + 1});                               // u_{n,1} >= lambda3
    return out;
}

// A face of the polytope, presented as the partition of fillings forced equal
// (classes of size >= 2 only, each sorted, sorted by first member) plus its
// affine dimension.
struct FaceDescriptor {
    int n = 0;
    std::vector<std::vector<int>> classes;
    int dimension = 0;

    friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;

    std::vector<std::pair<int, int>> equality_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& cls : classes)
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j) out.push_back({cls[i], cls[j]});
        return out;
    }
};

// Builds the canonical partition from a list of forced-equal node pairs.
inline std::vector<std::vector<int>> equality_classes(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> parent(face_node_count(n));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : pairs) parent[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < face_node_count(n); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

} // namespace gzfloer
