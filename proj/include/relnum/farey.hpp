#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "relnum/errors.hpp"
#include "relnum/matrix.hpp"
#include "relnum/scalar.hpp"
#include "relnum/word.hpp"

namespace relnum {

// Unordered pair of distinct projective points; the translate g.{0, inf}.
struct Edge {
    ProjPoint a, b;  // canonical: proj_less(a, b)

    static Edge make(ProjPoint x, ProjPoint y) {
        if (x == y) throw Error("edge endpoints coincide");
        if (proj_less(y, x)) std::swap(x, y);
        return {std::move(x), std::move(y)};
    }

    friend bool operator==(const Edge& x, const Edge& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Edge& x, const Edge& y) { return !(x == y); }
};

inline std::size_t hash_value(const Edge& e) {
    std::size_t seed = hash_value(e.a);
    boost::hash_combine(seed, hash_value(e.b));
    return seed;
}

inline Edge base_edge() { return Edge::make(ProjPoint::zero(), ProjPoint::infinity()); }

inline Edge edge_of(const ScalarMat2& m) {
    return Edge::make(moebius_apply(m, ProjPoint::zero()),
                      moebius_apply(m, ProjPoint::infinity()));
}

// Finite piece of the generalized Farey graph: every edge w.{0, inf} over
// reduced words w with at most syllable_bound syllables, each exponent at
// most exponent_bound in magnitude. The graph itself is not locally finite,
// so both bounds are load-bearing.
struct BallExploration {
    Scalar alpha;
    int syllable_bound = 0;
    int exponent_bound = 0;
    std::vector<ProjPoint> vertices;        // ascending
    std::vector<Edge> edges;                // canonical generation order
    std::vector<ReducedWord> witness_words; // parallel to edges, first word reaching each
    size_t words_generated = 0;             // words enumerated before deduplication
};

// An ordered closed edge-walk certifying that the graph has a cycle; checkable
// with exact arithmetic and nothing else.
struct CycleCertificate {
    Scalar alpha;
    std::vector<ReducedWord> edge_words;
};

namespace detail {

struct EdgeHash {
    std::size_t operator()(const Edge& e) const { return hash_value(e); }
};
struct PointHash {
    std::size_t operator()(const ProjPoint& p) const { return hash_value(p); }
};

}  // namespace detail

inline BallExploration explore_ball(Scalar alpha, int syllable_bound, int exponent_bound) {
    if (alpha.is_zero()) throw DegenerateAlpha();
    if (exact_sign(alpha) < 0) alpha = -alpha;
    if (syllable_bound < 0 || exponent_bound < 0)
        throw Error("explore_ball bounds must be nonnegative");

    BallExploration ball;
    ball.alpha = alpha;
    ball.syllable_bound = syllable_bound;
    ball.exponent_bound = exponent_bound;

    std::unordered_map<Edge, size_t, detail::EdgeHash> seen;
    std::unordered_set<ProjPoint, detail::PointHash> vertex_set;

    auto record = [&](const ScalarMat2& m, const ReducedWord& w) {
        Edge e = edge_of(m);
        ++ball.words_generated;
        if (seen.emplace(e, ball.edges.size()).second) {
            vertex_set.insert(e.a);
            vertex_set.insert(e.b);
            ball.edges.push_back(std::move(e));
            ball.witness_words.push_back(w);
        }
    };

    struct Node {
        ScalarMat2 m;
        ReducedWord w;
        Gen last;
    };

    record(ScalarMat2::identity(), ReducedWord{});

    const ScalarMat2 gens[2] = {gen_A(), gen_B(alpha)};
    std::vector<Node> frontier;
    // syllable level 1 starts from the identity with either generator
    for (int level = 1; level <= syllable_bound; ++level) {
        std::vector<Node> next;
        auto extend = [&](const ScalarMat2& m, const ReducedWord& w, Gen g) {
            // exponent order 1, -1, 2, -2, ...
            ScalarMat2 pos = m, neg = m;
            const ScalarMat2& step = gens[static_cast<int>(g)];
            const ScalarMat2 inv = step.inverse();
            for (int e = 1; e <= exponent_bound; ++e) {
                pos = pos * step;
                ReducedWord wp = w;
                wp.push(g, e);
                record(pos, wp);
                if (level < syllable_bound) next.push_back({pos, wp, g});
                neg = neg * inv;
                ReducedWord wn = w;
                wn.push(g, -e);
                record(neg, wn);
                if (level < syllable_bound) next.push_back({neg, wn, g});
            }
        };
        if (level == 1) {
            extend(ScalarMat2::identity(), ReducedWord{}, Gen::x1);
            extend(ScalarMat2::identity(), ReducedWord{}, Gen::x2);
        } else {
            for (const auto& node : frontier) extend(node.m, node.w, other(node.last));
        }
        frontier = std::move(next);
    }

    ball.vertices.assign(vertex_set.begin(), vertex_set.end());
    std::sort(ball.vertices.begin(), ball.vertices.end(), proj_less);
    return ball;
}

namespace detail {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(size_t n) : parent(n, -1) {}
    int find(int x) {
        while (parent[x] >= 0) {
            if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

struct CycleSearch {
    const BallExploration& ball;
    std::unordered_map<ProjPoint, int, PointHash> vertex_id;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)

    explicit CycleSearch(const BallExploration& b) : ball(b) {
        for (size_t i = 0; i < ball.vertices.size(); ++i)
            vertex_id.emplace(ball.vertices[i], static_cast<int>(i));
        adj.resize(ball.vertices.size());
        for (size_t e = 0; e < ball.edges.size(); ++e) {
            int u = vertex_id.at(ball.edges[e].a);
            int v = vertex_id.at(ball.edges[e].b);
            adj[u].emplace_back(v, static_cast<int>(e));
            adj[v].emplace_back(u, static_cast<int>(e));
        }
        // vertex ids ascend in the point order, so sorting adjacency by id is
        // the canonical neighbor order
        for (auto& list : adj) std::sort(list.begin(), list.end());
    }

    // shortest path from s to t avoiding edge `banned`; returns edge indices
    std::optional<std::vector<int>> path_avoiding(int s, int t, int banned) const {
        std::vector<int> par_edge(adj.size(), -1), par_vertex(adj.size(), -1);
        std::vector<char> seen(adj.size(), 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == t) break;
            for (auto [y, e] : adj[x]) {
                if (e == banned || seen[y]) continue;
                seen[y] = 1;
                par_edge[y] = e;
                par_vertex[y] = x;
                queue.push_back(y);
            }
        }
        if (!seen[t]) return std::nullopt;
        std::vector<int> edges;
        for (int v = t; v != s; v = par_vertex[v]) edges.push_back(par_edge[v]);
        std::reverse(edges.begin(), edges.end());
        return edges;
    }

    // shortest cycle strictly below `best_len`, scanning vertices in canonical
    // order; BFS from each vertex with depth pruning
    std::optional<std::vector<int>> shorter_cycle(size_t best_len) const {
        std::optional<std::vector<int>> best;
        std::vector<int> depth(adj.size()), par_edge(adj.size()), par_vertex(adj.size());
        for (size_t root = 0; root < adj.size(); ++root) {
            size_t limit = (best_len == SIZE_MAX) ? SIZE_MAX : best_len / 2;
            std::vector<char> seen(adj.size(), 0);
            std::deque<int> queue{static_cast<int>(root)};
            seen[root] = 1;
            depth[root] = 0;
            par_edge[root] = -1;
            par_vertex[root] = -1;
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                if (static_cast<size_t>(depth[x]) >= limit) continue;
                for (auto [y, e] : adj[x]) {
                    if (e == par_edge[x]) continue;
                    if (!seen[y]) {
                        seen[y] = 1;
                        depth[y] = depth[x] + 1;
                        par_edge[y] = e;
                        par_vertex[y] = x;
                        queue.push_back(y);
                        continue;
                    }
                    size_t len = static_cast<size_t>(depth[x]) + depth[y] + 1;
                    if (len >= best_len) continue;
                    // reconstruct the two root paths plus the closing edge
                    std::vector<int> cycle;
                    for (int v = x; par_edge[v] >= 0; v = par_vertex[v])
                        cycle.push_back(par_edge[v]);
                    std::reverse(cycle.begin(), cycle.end());
                    cycle.push_back(e);
                    for (int v = y; par_edge[v] >= 0; v = par_vertex[v])
                        cycle.push_back(par_edge[v]);
                    // distinctness guards against overlapping root paths; only
                    // a genuine simple cycle is accepted
                    std::unordered_set<int> distinct(cycle.begin(), cycle.end());
                    if (distinct.size() != cycle.size()) continue;
                    best_len = len;
                    best = std::move(cycle);
                    limit = best_len / 2;
                }
            }
            if (best_len == 3) break;  // girth cannot be smaller
        }
        return best;
    }
};

}  // namespace detail

// A shortest cycle in the explored subgraph, if any: among shortest cycles the
// one through the base edge is preferred, then canonical vertex order decides.
// Any cycle here is a cycle of the full graph, so a result certifies a relation
// number; absence is inconclusive.
inline std::optional<CycleCertificate> find_cycle(const BallExploration& ball) {
    detail::DisjointSet dsu(ball.vertices.size());
    detail::CycleSearch search(ball);
    bool has_cycle = false;
    for (const auto& e : ball.edges) {
        if (!dsu.unite(search.vertex_id.at(e.a), search.vertex_id.at(e.b))) {
            has_cycle = true;
            break;
        }
    }
    if (!has_cycle) return std::nullopt;

    std::optional<std::vector<int>> cycle;
    auto base_it = search.vertex_id.find(ProjPoint::zero());
    auto inf_it = search.vertex_id.find(ProjPoint::infinity());
    if (base_it != search.vertex_id.end() && inf_it != search.vertex_id.end()) {
        // the base edge is edge 0 by generation order
        if (auto path = search.path_avoiding(base_it->second, inf_it->second, 0)) {
            path->insert(path->begin(), 0);
            cycle = std::move(path);
        }
    }
    size_t best_len = cycle ? cycle->size() : SIZE_MAX;
    if (best_len > 3) {
        if (auto shorter = search.shorter_cycle(best_len)) cycle = std::move(shorter);
    }
    if (!cycle) return std::nullopt;

    CycleCertificate cert;
    cert.alpha = ball.alpha;
    for (int e : *cycle) cert.edge_words.push_back(ball.witness_words[e]);
    return cert;
}

// Re-evaluates every word exactly and checks that the edges form a closed
// walk of pairwise-distinct edges. Independent of the search that produced it.
inline bool check_certificate(const CycleCertificate& cert) {
    if (cert.edge_words.size() < 3)
        throw InvalidCertificate("a cycle needs at least 3 edges");
    const size_t k = cert.edge_words.size();
    std::vector<Edge> edges;
    edges.reserve(k);
    for (const auto& w : cert.edge_words)
        edges.push_back(edge_of(evaluate_word(w, cert.alpha)));
    // pairwise distinct as Edges
    std::unordered_set<Edge, detail::EdgeHash> dedup(edges.begin(), edges.end());
    if (dedup.size() != k) return false;
    // consecutive edges share exactly one endpoint and the shared vertices
    // chain into a closed walk: edge i = {s_{i-1}, s_i}
    std::vector<ProjPoint> shared;
    for (size_t i = 0; i < k; ++i) {
        const Edge& e = edges[i];
        const Edge& f = edges[(i + 1) % k];
        bool aa = e.a == f.a || e.a == f.b;
        bool bb = e.b == f.a || e.b == f.b;
        if (aa == bb) return false;  // zero or two shared endpoints
        shared.push_back(aa ? e.a : e.b);
    }
    for (size_t i = 0; i < k; ++i) {
        const ProjPoint& prev = shared[(i + k - 1) % k];
        const ProjPoint& cur = shared[i];
        if (prev == cur) return false;
        if (Edge::make(prev, cur) != edges[i]) return false;
    }
    return true;
}

}  // namespace relnum
