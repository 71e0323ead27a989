#include "sg/generators.hpp"

#include <algorithm>
#include <numeric>

namespace sg {

// Distribution objects are avoided so that streams are identical across
// standard library implementations.
int uniform_int(Rng& rng, int lo, int hi) {
    if (hi < lo) throw InvalidInput("uniform_int: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
}

double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph random_gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_real(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(uniform_int(rng, 0, v - 1), v);
    return g;
}

Graph random_ktree(int n, int k, Rng& rng) {
    if (k < 0 || n < k + 1) throw InvalidInput("random_ktree: need n >= k+1");
    Graph g = complete_graph(k + 1);
    std::vector<std::vector<int>> cliques;  // k-cliques available for attachment
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int v = 0; v <= k; ++v)
            if (v != skip) c.push_back(v);
        cliques.push_back(c);
    }
    for (int v = k + 1; v < n; ++v) {
        g.add_vertex();
        auto base = cliques[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(cliques.size()) - 1))];
        for (int u : base) g.add_edge(u, v);
        for (size_t skip = 0; skip < base.size(); ++skip) {
            std::vector<int> c;
            for (size_t i = 0; i < base.size(); ++i)
                if (i != skip) c.push_back(base[i]);
            c.push_back(v);
            cliques.push_back(c);
        }
    }
    return g;
}

Graph random_partial_ktree(int n, int k, double keep, Rng& rng) {
    if (n <= k) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_real(rng) < keep) g.add_edge(u, v);
        return g;
    }
    Graph full = random_ktree(n, k, rng);
    Graph g(n);
    for (auto [u, v] : full.edges())
        if (uniform_real(rng) < keep) g.add_edge(u, v);
    return shuffle_labels(g, rng);
}

Graph shuffle_labels(const Graph& g, Rng& rng) {
    std::vector<int> perm(static_cast<size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.n() - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(uniform_int(rng, 0, i))]);
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

}  // namespace sg
