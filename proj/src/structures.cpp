#include "matchpoly/structures.hpp"

#include <algorithm>

#include "matchpoly/errors.hpp"

namespace matchpoly {

namespace {

bool subset_is_odd_structure(const Graph& g, const std::vector<int>& subset) {
    auto [sub, labels] = g.induced_subgraph(subset);
    (void)labels;
    // Cheap rejections first: 2-connected graphs have minimum degree 2.
    for (int u = 0; u < sub.vertex_count(); ++u)
        if (sub.degree(u) < 2) return false;
    return is_two_connected(sub) && is_factor_critical(sub);
}

void enumerate_odd_subsets(const Graph& g, int size, std::vector<int>& current, int next,
                           Budget& budget, std::vector<OddStructure>& out) {
    if (static_cast<int>(current.size()) == size) {
        budget.tick();
        if (subset_is_odd_structure(g, current))
            out.push_back({current, g.induced_edge_indices(current)});
        return;
    }
    const int needed = size - static_cast<int>(current.size());
    for (int u = next; u + needed <= g.vertex_count(); ++u) {
        current.push_back(u);
        enumerate_odd_subsets(g, size, current, u + 1, budget, out);
        current.pop_back();
    }
}

} // namespace

std::vector<OddStructure> odd_structures(const Graph& g, const EnumerationLimits& limits) {
    if (limits.vertex_cap < 3)
        throw InputError("odd structure enumeration needs vertex_cap >= 3");
    Budget budget = Budget::work_only(limits.subset_budget);
    std::vector<OddStructure> out;
    std::vector<int> current;
    const int max_size = std::min(g.vertex_count(), limits.vertex_cap);
    for (int size = 3; size <= max_size; size += 2)
        enumerate_odd_subsets(g, size, current, 0, budget, out);
    // Subsets of one size come out lexicographically; merge sizes into a single
    // lexicographic order over vertex sets.
    std::sort(out.begin(), out.end(),
              [](const OddStructure& a, const OddStructure& b) { return a.vertices < b.vertices; });
    return out;
}

// ---- slices ----------------------------------------------------------------

bool is_wheel_subgraph(const Graph& h, int n) {
    if (n < 4 || h.vertex_count() != n) return false;
    const int rim = n - 1;
    for (const Edge& e : h.edges()) {
        const bool spoke = e.v == rim;
        const bool rim_edge =
            (e.v == e.u + 1 && e.v < rim) || (e.u == 0 && e.v == rim - 1 && rim > 2);
        if (!spoke && !rim_edge) return false;
    }
    return true;
}

namespace {

void require_wheel_subgraph(const Graph& h, int n) {
    if (!is_wheel_subgraph(h, n))
        throw InputError("graph is not a subgraph of W_" + std::to_string(n) +
                         " with the wheel's vertex indexing");
}

} // namespace

std::vector<Slice> slices(const Graph& h, int n) {
    require_wheel_subgraph(h, n);
    const int rim = n - 1;
    const int center = rim;

    auto rim_edge_present = [&](int i) { return h.has_edge(i, (i + 1) % rim); };
    auto spoke_present = [&](int i) { return h.has_edge(i, center); };

    std::vector<Slice> out;

    // Proper arcs: consecutive rim edges all present, spokes at both ends.
    for (int start = 0; start < rim; ++start) {
        if (!spoke_present(start)) continue;
        bool path_ok = true;
        for (int len = 2; len <= rim; ++len) {
            const int last = (start + len - 1) % rim;
            if (!rim_edge_present((start + len - 2) % rim)) {
                path_ok = false;
            }
            if (!path_ok) break;
            if (len == rim) {
                // Full-rim arc: only a slice when the closing edge is absent
                // (otherwise the induced subgraph has a cycle boundary and is
                // handled below).
                if (!rim_edge_present(last) && spoke_present(last)) {
                    Slice s;
                    for (int i = 0; i < len; ++i) s.rim.push_back((start + i) % rim);
                    out.push_back(std::move(s));
                }
            } else if (spoke_present(last)) {
                Slice s;
                for (int i = 0; i < len; ++i) s.rim.push_back((start + i) % rim);
                out.push_back(std::move(s));
            }
        }
    }

    // Cycle-boundary slice: the whole rim plus the center.
    bool full_rim = true;
    for (int i = 0; i < rim && full_rim; ++i)
        if (!rim_edge_present(i)) full_rim = false;
    if (full_rim) {
        int spokes = 0;
        for (int i = 0; i < rim; ++i)
            if (spoke_present(i)) ++spokes;
        if (spokes >= 2) {
            Slice s;
            s.boundary_cycle = true;
            for (int i = 0; i < rim; ++i) s.rim.push_back(i);
            out.push_back(std::move(s));
        }
    }

    std::sort(out.begin(), out.end(), [](const Slice& a, const Slice& b) {
        if (a.rim.size() != b.rim.size()) return a.rim.size() < b.rim.size();
        return a.rim < b.rim;
    });
    return out;
}

PairKind classify_pair(const Graph& h, int n, const Slice& s, const Slice& t) {
    require_wheel_subgraph(h, n);
    std::vector<int> sv = s.rim, tv = t.rim;
    std::sort(sv.begin(), sv.end());
    std::sort(tv.begin(), tv.end());
    std::vector<int> shared;
    std::set_intersection(sv.begin(), sv.end(), tv.begin(), tv.end(), std::back_inserter(shared));
    if (shared.empty()) return PairKind::almost_disjoint;
    for (std::size_t i = 0; i < shared.size(); ++i)
        for (std::size_t j = i + 1; j < shared.size(); ++j)
            if (h.has_edge(shared[i], shared[j])) return PairKind::interlocking;
    return PairKind::somewhat_disjoint;
}

bool slice_is_odd_structure(const Graph& h, int n, const Slice& s) {
    if (!s.odd()) return false;
    // Arc slices are factor-critical by construction (pair toward an end
    // spoke). A cycle-boundary slice needs enough spokes; test it directly.
    if (!s.boundary_cycle) return true;
    std::vector<int> vertices = s.rim;
    vertices.push_back(n - 1);
    return is_factor_critical(h.induced_subgraph(vertices).first);
}

std::vector<OddStructure> wheel_odd_structures(const Graph& h, int n) {
    require_wheel_subgraph(h, n);
    const int rim = n - 1;
    const int center = rim;
    std::vector<OddStructure> out;
    for (const Slice& s : slices(h, n)) {
        if (!slice_is_odd_structure(h, n, s)) continue;
        std::vector<int> vertices = s.rim;
        vertices.push_back(center);
        std::sort(vertices.begin(), vertices.end());
        out.push_back({vertices, h.induced_edge_indices(vertices)});
    }
    if (n % 2 == 0) {
        bool full_rim = true;
        for (int i = 0; i < rim && full_rim; ++i)
            if (!h.has_edge(i, (i + 1) % rim)) full_rim = false;
        if (full_rim) {
            std::vector<int> vertices(static_cast<std::size_t>(rim));
            for (int i = 0; i < rim; ++i) vertices[static_cast<std::size_t>(i)] = i;
            out.push_back({vertices, h.induced_edge_indices(vertices)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const OddStructure& a, const OddStructure& b) { return a.vertices < b.vertices; });
    return out;
}

} // namespace matchpoly
