#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

#include "matchpoly/errors.hpp"
#include "matchpoly/idp.hpp"

// Constructive splitter for t-matchings on wheel subgraphs: interlocking
// reduction, conductor/insulator gaps, per-slice alternating patterns, the
// center spoke rule and the outer-cycle top-up. Every level is verified;
// exhaustive search is the fallback of record.

namespace matchpoly {

namespace {

struct RimGeometry {
    int n = 0;
    int rim = 0;    // outer cycle length n-1
    int center = 0; // vertex n-1

    int next(int i) const { return (i + 1) % rim; }
    int prev(int i) const { return (i + rim - 1) % rim; }
};

// Weight bookkeeping for one construction level, indexed by h's edge list.
struct LevelState {
    const Graph& h;
    RimGeometry geo;
    int t;
    std::vector<int> weights;
    std::vector<int> vertex_weight;
    std::vector<bool> tight;

    LevelState(const Graph& graph, const std::vector<int>& w, int level)
        : h(graph), t(level), weights(w) {
        geo.n = graph.vertex_count();
        geo.rim = geo.n - 1;
        geo.center = geo.rim;
        vertex_weight.assign(static_cast<std::size_t>(geo.n), 0);
        for (int u = 0; u < geo.n; ++u)
            for (int ei : h.incident_edges(u))
                vertex_weight[static_cast<std::size_t>(u)] +=
                    weights[static_cast<std::size_t>(ei)];
        tight.resize(static_cast<std::size_t>(geo.n));
        for (int u = 0; u < geo.n; ++u)
            tight[static_cast<std::size_t>(u)] = vertex_weight[static_cast<std::size_t>(u)] == t;
    }

    int rim_edge(int i) const { return h.edge_index(i, geo.next(i)); }
    int spoke(int i) const { return h.edge_index(i, geo.center); }
    bool is_tight(int u) const { return tight[static_cast<std::size_t>(u)]; }

    long long slice_weight(const std::vector<int>& rim) const {
        std::vector<int> vertices = rim;
        vertices.push_back(geo.center);
        long long sum = 0;
        for (int ei : h.induced_edge_indices(vertices)) sum += weights[static_cast<std::size_t>(ei)];
        return sum;
    }
};

long long half_count(int size) { return (static_cast<long long>(size) - 1) / 2; }

std::optional<TroublesomeSlice> make_slice(const LevelState& st, std::vector<int> rim,
                                           bool boundary_cycle) {
    TroublesomeSlice s;
    s.rim = std::move(rim);
    s.boundary_cycle = boundary_cycle;
    const int size = static_cast<int>(s.rim.size()) + 1;
    if (size % 2 == 0) return std::nullopt;
    s.index = st.slice_weight(s.rim) - static_cast<long long>(st.t - 1) * half_count(size);
    if (s.index <= 0) return std::nullopt;
    s.full_index = s.index == half_count(size);
    return s;
}

// Proper slice validity: consecutive rim edges present, end spokes present.
bool arc_is_slice(const LevelState& st, const std::vector<int>& rim) {
    if (rim.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < rim.size(); ++i)
        if (st.h.edge_index(rim[i], rim[i + 1]) < 0) return false;
    return st.spoke(rim.front()) >= 0 && st.spoke(rim.back()) >= 0;
}

bool vector_contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

TroublesomeSet reduce_tight_structures(const Graph& h, const EdgeWeighting& x, int t) {
    const int n = h.vertex_count();
    const std::vector<Slice> all = slices(h, n); // validates wheel indexing
    LevelState st(h, x.weights, t);

    TroublesomeSet out;
    std::vector<TroublesomeSlice> working;
    for (const Slice& s : all)
        if (slice_is_odd_structure(h, n, s))
            if (auto ts = make_slice(st, s.rim, s.boundary_cycle)) working.push_back(*ts);

    auto to_residual = [&](const TroublesomeSlice& s) {
        std::vector<int> vertices = s.rim;
        vertices.push_back(st.geo.center);
        std::sort(vertices.begin(), vertices.end());
        out.residual.push_back({vertices, h.induced_edge_indices(vertices)});
    };

    auto dedupe = [&](std::vector<TroublesomeSlice>& list) {
        std::sort(list.begin(), list.end(),
                  [](const TroublesomeSlice& a, const TroublesomeSlice& b) {
                      return std::tie(a.rim, a.boundary_cycle) < std::tie(b.rim, b.boundary_cycle);
                  });
        list.erase(std::unique(list.begin(), list.end(),
                               [](const TroublesomeSlice& a, const TroublesomeSlice& b) {
                                   return a.rim == b.rim && a.boundary_cycle == b.boundary_cycle;
                               }),
                   list.end());
    };

    struct InterlockInfo {
        bool crossing = false;
        std::vector<int> shared; // in s1 order
    };
    auto interlock = [&](const TroublesomeSlice& a, const TroublesomeSlice& b) {
        InterlockInfo info;
        const std::vector<int>& s1 = a.rim;
        const std::vector<int>& s2 = b.rim;
        for (int v : s1)
            if (vector_contains(s2, v)) info.shared.push_back(v);
        bool edge_shared = false;
        for (std::size_t x1 = 0; x1 < info.shared.size() && !edge_shared; ++x1)
            for (std::size_t x2 = x1 + 1; x2 < info.shared.size() && !edge_shared; ++x2)
                if (h.has_edge(info.shared[x1], info.shared[x2])) edge_shared = true;
        if (!edge_shared) {
            info.shared.clear();
            return info;
        }
        // Proper crossing: both arcs keep private vertices and the shared run
        // is one contiguous piece sitting at an end of each arc.
        bool crossing = !a.boundary_cycle && !b.boundary_cycle;
        auto has_private = [&](const std::vector<int>& p, const std::vector<int>& q) {
            for (int v : p)
                if (!vector_contains(q, v)) return true;
            return false;
        };
        if (crossing) crossing = has_private(s1, s2) && has_private(s2, s1);
        if (crossing) {
            auto run_at_end = [&](const std::vector<int>& arc) {
                std::size_t first = arc.size(), last = 0;
                for (std::size_t k = 0; k < arc.size(); ++k)
                    if (vector_contains(info.shared, arc[k])) {
                        first = std::min(first, k);
                        last = std::max(last, k);
                    }
                return info.shared.size() == last - first + 1 &&
                       (first == 0 || last == arc.size() - 1);
            };
            crossing = info.shared.size() >= 2 && run_at_end(s1) && run_at_end(s2);
        }
        info.crossing = crossing;
        return info;
    };

    bool changed = true;
    int guard = 8 * n * n + 64;
    while (changed && guard-- > 0) {
        changed = false;
        dedupe(working);

        // (a) Interlocking pairs. Lemma reductions (proper crossings) first;
        // containments and other irregular overlaps drop the larger slice to
        // the residual obligations.
        std::size_t pick_i = working.size(), pick_j = working.size();
        bool pick_crossing = false;
        for (std::size_t i = 0; i < working.size(); ++i) {
            for (std::size_t j = i + 1; j < working.size(); ++j) {
                const InterlockInfo info = interlock(working[i], working[j]);
                if (info.shared.empty()) continue;
                if (info.crossing) {
                    pick_i = i;
                    pick_j = j;
                    pick_crossing = true;
                    break;
                }
                if (pick_i == working.size()) {
                    pick_i = i;
                    pick_j = j;
                }
            }
            if (pick_crossing) break;
        }

        if (pick_i < working.size() && !pick_crossing) {
            const std::size_t drop =
                (working[pick_i].boundary_cycle ||
                 (!working[pick_j].boundary_cycle &&
                  working[pick_i].rim.size() >= working[pick_j].rim.size()))
                    ? pick_i
                    : pick_j;
            to_residual(working[drop]);
            working.erase(working.begin() + static_cast<std::ptrdiff_t>(drop));
            changed = true;
            continue;
        }

        if (pick_i < working.size()) {
            // Build R from the shared run and S', T' from the private runs
            // extended by the run endpoint lying inside them. The replaced
            // slices stay on as residual index obligations: the lemma's
            // bookkeeping does not survive the (t-1)-normalized index for
            // t > 2, so the top-up pass enforces them directly.
            to_residual(working[pick_i]);
            to_residual(working[pick_j]);
            const std::vector<int> s1 = working[pick_i].rim;
            const std::vector<int> s2 = working[pick_j].rim;
            const std::vector<int> shared = interlock(working[pick_i], working[pick_j]).shared;
            auto trimmed_of = [&](const std::vector<int>& arc) {
                std::vector<int> part;
                for (int v : arc)
                    if (!vector_contains(shared, v)) part.push_back(v);
                if (part.empty()) return part;
                if (vector_contains(shared, arc.front())) {
                    // Run is a prefix of the arc: the private suffix gains the
                    // run vertex adjacent to its front.
                    for (int v : shared)
                        if (st.geo.next(v) == part.front()) {
                            part.insert(part.begin(), v);
                            break;
                        }
                } else {
                    for (int v : shared)
                        if (st.geo.prev(v) == part.back()) {
                            part.push_back(v);
                            break;
                        }
                }
                return part;
            };
            std::vector<int> sprime = trimmed_of(s1);
            std::vector<int> tprime = trimmed_of(s2);
            std::vector<int> middle = shared;

            std::vector<TroublesomeSlice> next_working;
            for (std::size_t k = 0; k < working.size(); ++k)
                if (k != pick_i && k != pick_j) next_working.push_back(working[k]);
            for (const std::vector<int>* rim : {&middle, &sprime, &tprime})
                if (arc_is_slice(st, *rim))
                    if (auto ts = make_slice(st, *rim, false)) next_working.push_back(*ts);
            working = std::move(next_working);
            changed = true;
            continue;
        }

        // (b) Split a tight slice at a tight interior rim vertex into the
        // flanking slices plus that vertex. The parent stays a residual
        // obligation (same normalizer caveat as above).
        for (std::size_t i = 0; i < working.size() && !changed; ++i) {
            const std::vector<int>& rim = working[i].rim;
            if (working[i].boundary_cycle || working[i].synthetic) continue;
            for (std::size_t pos = 1; pos + 1 < rim.size(); ++pos) {
                if (!st.is_tight(rim[pos])) continue;
                std::vector<int> left(rim.begin(), rim.begin() + static_cast<std::ptrdiff_t>(pos));
                std::vector<int> right(rim.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                       rim.end());
                std::vector<TroublesomeSlice> kept;
                for (const std::vector<int>* part : {&left, &right})
                    if (arc_is_slice(st, *part))
                        if (auto ts = make_slice(st, *part, false)) kept.push_back(*ts);
                // Splitting only helps when a flank survives as a tight odd
                // slice; otherwise the parent's own pattern serves it better.
                if (kept.empty()) continue;
                to_residual(working[i]);
                std::vector<TroublesomeSlice> next_working;
                for (std::size_t k = 0; k < working.size(); ++k)
                    if (k != i) next_working.push_back(working[k]);
                for (auto& ts : kept) next_working.push_back(std::move(ts));
                working = std::move(next_working);
                changed = true;
                break;
            }
        }
    }

    // Residual entries may repeat after cascading reductions.
    std::sort(out.residual.begin(), out.residual.end(),
              [](const OddStructure& a, const OddStructure& b) { return a.vertices < b.vertices; });
    out.residual.erase(std::unique(out.residual.begin(), out.residual.end()), out.residual.end());

    // Synthetic triangles: a tight rim vertex outside every troublesome slice
    // whose alternating walk is blocked by a missing rim edge. The surviving
    // rim edge plus the spoke form the triangle of the missing-edge trick.
    std::vector<bool> in_slice(static_cast<std::size_t>(st.geo.rim), false);
    for (const auto& s : working)
        for (int v : s.rim)
            if (v < st.geo.rim) in_slice[static_cast<std::size_t>(v)] = true;
    for (int u = 0; u < st.geo.rim; ++u) {
        if (!st.is_tight(u) || in_slice[static_cast<std::size_t>(u)]) continue;
        const bool left_edge = st.h.edge_index(st.geo.prev(u), u) >= 0;
        const bool right_edge = st.h.edge_index(u, st.geo.next(u)) >= 0;
        if (left_edge && right_edge) continue;
        TroublesomeSlice tri;
        tri.synthetic = true;
        tri.index = 1;
        tri.full_index = true;
        if (left_edge)
            tri.rim = {st.geo.prev(u), u};
        else if (right_edge)
            tri.rim = {u, st.geo.next(u)};
        else
            tri.rim = {u};
        working.push_back(tri);
    }

    std::sort(working.begin(), working.end(),
              [](const TroublesomeSlice& a, const TroublesomeSlice& b) {
                  if (a.boundary_cycle != b.boundary_cycle) return a.boundary_cycle;
                  if (a.rim.front() != b.rim.front()) return a.rim.front() < b.rim.front();
                  return a.rim.size() < b.rim.size();
              });
    out.slices = std::move(working);

    // Gap classification between consecutive proper troublesome slices.
    std::vector<std::size_t> proper;
    for (std::size_t i = 0; i < out.slices.size(); ++i)
        if (!out.slices[i].boundary_cycle && !out.slices[i].synthetic) proper.push_back(i);
    if (proper.size() >= 2) {
        for (std::size_t k = 0; k < proper.size(); ++k) {
            const std::size_t a = proper[k];
            const std::size_t b = proper[(k + 1) % proper.size()];
            SliceGap gap;
            gap.left_slice = static_cast<int>(a);
            gap.right_slice = static_cast<int>(b);
            const int from = out.slices[a].rim.back();
            const int to = out.slices[b].rim.front();
            if (from == to) {
                gap.kind = GapKind::pseudoconductor;
                gap.shared_vertex = from;
            } else {
                bool path_ok = true;
                int steps = 0;
                for (int v = from; v != to && steps <= st.geo.rim; v = st.geo.next(v), ++steps) {
                    if (st.h.edge_index(v, st.geo.next(v)) < 0) path_ok = false;
                    if (st.geo.next(v) != to) gap.vertices.push_back(st.geo.next(v));
                }
                bool all_tight = true;
                for (int v : gap.vertices)
                    if (!st.is_tight(v)) all_tight = false;
                gap.kind = (path_ok && all_tight && gap.vertices.size() % 2 == 1)
                               ? GapKind::conductor
                               : GapKind::insulator;
            }
            if (out.slices[a].full_index && out.slices[b].full_index &&
                gap.kind != GapKind::insulator)
                ++out.conductor_pair_detections;
            out.gaps.push_back(std::move(gap));
        }
    }
    return out;
}

// ---- patterns ----------------------------------------------------------------

namespace {

// Canonical-order knobs the level constructor may retry over; each setting is
// one of the choices the construction leaves open.
struct BuildOptions {
    bool runs_extend_right_first = false;
    bool designate_slice_for_center = true;
    bool slice_side_reversed = false;
    // Saturate insulator runs before placing slice patterns, letting the
    // alternating pattern extend from the insulators onto the slices.
    bool insulators_first = false;
};

struct Pattern {
    std::vector<int> edges;     // edge ids to claim
    std::vector<int> uncovered; // boundary vertices deliberately left open
};

// Candidate patterns for one troublesome slice, most preferred first.
// `use_spoke` anchors the pattern at an outermost spoke.
std::vector<Pattern> slice_patterns(const LevelState& st, const TroublesomeSlice& s,
                                    bool use_spoke, const BuildOptions& options) {
    const std::vector<int>& rim = s.rim;
    const std::size_t L = rim.size();
    std::vector<Pattern> out;

    if (s.synthetic) {
        const int u = L == 1 ? rim[0] : (st.is_tight(rim[0]) ? rim[0] : rim[1]);
        if (L == 2) {
            Pattern p;
            p.edges = {st.h.edge_index(rim[0], rim[1])};
            if (p.edges[0] >= 0) out.push_back(std::move(p));
        }
        if (st.spoke(u) >= 0) out.push_back({{st.spoke(u)}, {}});
        return out;
    }

    if (s.boundary_cycle) {
        if (use_spoke) {
            // Spoke anchor plus a near-perfect matching of the rest of the
            // cycle; the open vertex sits at an even offset from the anchor.
            for (std::size_t anchor = 0; anchor < L; ++anchor) {
                if (st.spoke(rim[anchor]) < 0) continue;
                std::vector<int> path;
                for (std::size_t i = 1; i < L; ++i) path.push_back(rim[(anchor + i) % L]);
                for (std::size_t skip = 0; skip < path.size(); skip += 2) {
                    if (st.is_tight(path[skip])) continue;
                    Pattern p;
                    p.edges.push_back(st.spoke(rim[anchor]));
                    for (std::size_t i = 0; i + 1 < path.size();) {
                        if (i == skip) {
                            ++i;
                            continue;
                        }
                        p.edges.push_back(st.h.edge_index(path[i], path[i + 1]));
                        i += 2;
                    }
                    p.uncovered.push_back(path[skip]);
                    out.push_back(std::move(p));
                }
            }
        } else {
            for (std::size_t offset = 0; offset < 2; ++offset) {
                Pattern p;
                for (std::size_t i = offset; i + 1 < L + offset; i += 2)
                    p.edges.push_back(st.h.edge_index(rim[i % L], rim[(i + 1) % L]));
                out.push_back(std::move(p));
            }
            if (!s.full_index) {
                for (std::size_t a = 0; a < L; ++a) {
                    if (st.is_tight(rim[a]) || st.is_tight(rim[(a + 1) % L])) continue;
                    Pattern p;
                    for (std::size_t i = 2; i + 1 < L; i += 2)
                        p.edges.push_back(
                            st.h.edge_index(rim[(a + i) % L], rim[(a + i + 1) % L]));
                    p.uncovered.push_back(rim[a]);
                    p.uncovered.push_back(rim[(a + 1) % L]);
                    out.push_back(std::move(p));
                }
            }
        }
        return out;
    }

    if (use_spoke) {
        // Spoke at one end, then alternating rim edges; exactly one
        // odd-offset vertex stays open. Prefer opening a loose interior,
        // then the far endpoint.
        for (int side = 0; side < 2; ++side) {
            std::vector<int> arc = rim;
            if ((side == 1) != options.slice_side_reversed) std::reverse(arc.begin(), arc.end());
            if (st.spoke(arc.front()) < 0) continue;
            std::vector<std::size_t> skips;
            for (std::size_t j = 1; j < L; j += 2) skips.push_back(j);
            std::stable_sort(skips.begin(), skips.end(), [&](std::size_t a, std::size_t b) {
                auto key = [&](std::size_t j) {
                    const bool tight_open = st.is_tight(arc[j]);
                    const bool interior = j + 1 < L;
                    return std::tuple<int, int, std::size_t>(tight_open ? 1 : 0,
                                                             tight_open && interior ? 1 : 0, j);
                };
                return key(a) < key(b);
            });
            for (std::size_t j : skips) {
                Pattern p;
                p.edges.push_back(st.spoke(arc.front()));
                for (std::size_t i = 1; i + 1 < L;) {
                    if (i == j) {
                        ++i;
                        continue;
                    }
                    p.edges.push_back(st.h.edge_index(arc[i], arc[i + 1]));
                    i += 2;
                }
                p.uncovered.push_back(arc[j]);
                out.push_back(std::move(p));
            }
        }
        return out;
    }

    if (s.full_index) {
        Pattern p; // perfect matching of the boundary path, both ends covered
        for (std::size_t i = 0; i + 1 < L; i += 2)
            p.edges.push_back(st.h.edge_index(rim[i], rim[i + 1]));
        out.push_back(std::move(p));
        return out;
    }

    // Partial index: (|S|-1)/2 - 1 edges. Open both endpoints, or an
    // adjacent even-offset pair.
    {
        Pattern mid;
        for (std::size_t i = 1; i + 2 < L; i += 2)
            mid.edges.push_back(st.h.edge_index(rim[i], rim[i + 1]));
        mid.uncovered.push_back(rim[0]);
        mid.uncovered.push_back(rim[L - 1]);
        out.push_back(std::move(mid));
    }
    for (std::size_t a = 0; a + 1 < L; a += 2) {
        Pattern p;
        for (std::size_t i = 0; i + 1 < a; i += 2)
            p.edges.push_back(st.h.edge_index(rim[i], rim[i + 1]));
        for (std::size_t i = a + 2; i + 1 < L; i += 2)
            p.edges.push_back(st.h.edge_index(rim[i], rim[i + 1]));
        p.uncovered.push_back(rim[a]);
        p.uncovered.push_back(rim[a + 1]);
        out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [&](const Pattern& a, const Pattern& b) {
        auto open_tight = [&](const Pattern& p) {
            int count = 0;
            for (int v : p.uncovered)
                if (st.is_tight(v)) ++count;
            return count;
        };
        return open_tight(a) < open_tight(b);
    });
    return out;
}

// Open interior vertices must be loose; open endpoints may still be rescued
// by the insulator pass.
bool pattern_admissible(const LevelState& st, const TroublesomeSlice& s, const Pattern& p) {
    for (int ei : p.edges)
        if (ei < 0) return false;
    for (int v : p.uncovered) {
        if (!st.is_tight(v)) continue;
        if (s.boundary_cycle) return false;
        if (!s.rim.empty() && (v == s.rim.front() || v == s.rim.back())) continue;
        return false;
    }
    return true;
}

// ---- per-level assembly --------------------------------------------------------

class Assembler {
public:
    Assembler(const LevelState& state, std::vector<std::string>& trace_out)
        : st_(state),
          chosen_(static_cast<std::size_t>(state.h.edge_count()), 0),
          saturated_(static_cast<std::size_t>(state.h.vertex_count()), false),
          trace_(trace_out) {}

    const std::vector<int>& chosen() const { return chosen_; }

    bool can_add(int ei) const {
        if (ei < 0 || chosen_[static_cast<std::size_t>(ei)]) return false;
        const Edge e = st_.h.edge(ei);
        return !saturated_[static_cast<std::size_t>(e.u)] &&
               !saturated_[static_cast<std::size_t>(e.v)];
    }

    void add(int ei) {
        const Edge e = st_.h.edge(ei);
        chosen_[static_cast<std::size_t>(ei)] = 1;
        saturated_[static_cast<std::size_t>(e.u)] = true;
        saturated_[static_cast<std::size_t>(e.v)] = true;
    }

    bool try_add_all(const std::vector<int>& edge_ids) {
        for (std::size_t i = 0; i < edge_ids.size(); ++i) {
            if (!can_add(edge_ids[i])) {
                for (std::size_t k = 0; k < i; ++k) remove(edge_ids[k]);
                return false;
            }
            add(edge_ids[i]);
        }
        return true;
    }

    bool is_saturated(int u) const { return saturated_[static_cast<std::size_t>(u)]; }

    // Snapshot/rollback for multi-batch attempts.
    struct Snapshot {
        std::vector<int> chosen;
        std::vector<bool> saturated;
        std::size_t trace_size;
    };
    Snapshot snapshot() const { return {chosen_, saturated_, trace_.size()}; }
    void rollback(const Snapshot& s) {
        chosen_ = s.chosen;
        saturated_ = s.saturated;
        trace_.resize(s.trace_size);
    }

    bool corollary_construction(const TroublesomeSet& ts, const SliceGap& gap);
    bool place_slices(const TroublesomeSet& ts, int spoke_slice, const BuildOptions& options);
    bool center_spoke();
    bool insulators(const BuildOptions& options);
    bool structure_topup(const std::vector<OddStructure>& structures);

private:
    void remove(int ei) {
        const Edge e = st_.h.edge(ei);
        chosen_[static_cast<std::size_t>(ei)] = 0;
        saturated_[static_cast<std::size_t>(e.u)] = false;
        saturated_[static_cast<std::size_t>(e.v)] = false;
    }

    std::string rim_str(const std::vector<int>& rim) const {
        std::string s = "[";
        for (std::size_t i = 0; i < rim.size(); ++i) s += (i ? " " : "") + std::to_string(rim[i]);
        return s + "]";
    }

    const LevelState& st_;
    std::vector<int> chosen_;
    std::vector<bool> saturated_;
    std::vector<std::string>& trace_;
};

bool Assembler::corollary_construction(const TroublesomeSet& ts, const SliceGap& gap) {
    const TroublesomeSlice& s = ts.slices[static_cast<std::size_t>(gap.left_slice)];
    const TroublesomeSlice& t = ts.slices[static_cast<std::size_t>(gap.right_slice)];

    // Walk O(S), Omega, O(T); for a pseudoconductor the junction vertex is
    // shared and appears once.
    std::vector<int> walk = s.rim;
    for (int v : gap.vertices) walk.push_back(v);
    if (gap.kind == GapKind::pseudoconductor) {
        for (std::size_t i = 1; i < t.rim.size(); ++i) walk.push_back(t.rim[i]);
    } else {
        for (int v : t.rim) walk.push_back(v);
    }

    std::vector<int> edges;
    const int anchor_spoke = st_.spoke(walk.front());
    if (anchor_spoke < 0) return false;
    edges.push_back(anchor_spoke);
    for (std::size_t i = 1; i + 1 < walk.size(); i += 2) {
        const int ei = st_.h.edge_index(walk[i], walk[i + 1]);
        if (ei < 0) return false;
        edges.push_back(ei);
    }
    if (!try_add_all(edges)) return false;
    trace_.push_back("conductor corollary: spoke at rim " + std::to_string(walk.front()) +
                     ", alternating through " + rim_str(walk));

    // A remaining troublesome slice is partial index: alternate along its
    // boundary interior, avoiding both endpoints.
    for (std::size_t k = 0; k < ts.slices.size(); ++k) {
        if (static_cast<int>(k) == gap.left_slice || static_cast<int>(k) == gap.right_slice)
            continue;
        const TroublesomeSlice& w = ts.slices[k];
        if (w.synthetic) continue;
        std::vector<int> wes;
        for (std::size_t i = 1; i + 2 < w.rim.size(); i += 2) {
            const int ei = st_.h.edge_index(w.rim[i], w.rim[i + 1]);
            if (ei < 0) return false;
            wes.push_back(ei);
        }
        if (!try_add_all(wes)) return false;
        trace_.push_back("third slice " + rim_str(w.rim) + ": interior alternation");
    }
    return true;
}

bool Assembler::place_slices(const TroublesomeSet& ts, int spoke_slice,
                             const BuildOptions& options) {
    // Spoke-designated slice first, then full-index, then partial; stable by
    // rim order. Synthetic triangles claim no edges here: their vertex is
    // saturated by the center/insulator passes.
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < ts.slices.size(); ++k)
        if (static_cast<int>(k) == spoke_slice) order.push_back(k);
    for (std::size_t k = 0; k < ts.slices.size(); ++k)
        if (static_cast<int>(k) != spoke_slice && !ts.slices[k].synthetic &&
            ts.slices[k].full_index)
            order.push_back(k);
    for (std::size_t k = 0; k < ts.slices.size(); ++k)
        if (static_cast<int>(k) != spoke_slice && !ts.slices[k].synthetic &&
            !ts.slices[k].full_index)
            order.push_back(k);

    for (std::size_t k : order) {
        const TroublesomeSlice& s = ts.slices[k];
        const bool with_spoke = static_cast<int>(k) == spoke_slice;
        // Earlier passes may already have served the index obligation.
        {
            std::vector<int> vertices = s.rim;
            vertices.push_back(st_.geo.center);
            long long have = 0;
            for (int ei : st_.h.induced_edge_indices(vertices))
                have += chosen_[static_cast<std::size_t>(ei)];
            if (have >= s.index && !with_spoke) {
                trace_.push_back("slice " + rim_str(s.rim) + " already served");
                continue;
            }
        }
        bool placed = false;
        for (const Pattern& p : slice_patterns(st_, s, with_spoke, options)) {
            if (!pattern_admissible(st_, s, p)) continue;
            if (try_add_all(p.edges)) {
                trace_.push_back(std::string(s.full_index ? "full-index slice "
                                                          : "partial slice ") +
                                 rim_str(s.rim) +
                                 (with_spoke ? ": spoke-anchored pattern" : ": rim pattern"));
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    for (const TroublesomeSlice& s : ts.slices)
        if (s.synthetic)
            trace_.push_back("synthetic triangle " + rim_str(s.rim) +
                             " materialized (missing-edge trick)");
    return true;
}

bool Assembler::center_spoke() {
    if (!st_.is_tight(st_.geo.center) || is_saturated(st_.geo.center)) return true;
    // Prefer a spoke that also saturates a tight rim vertex.
    for (int pass = 0; pass < 2; ++pass) {
        for (int u = 0; u < st_.geo.rim; ++u) {
            const int ei = st_.spoke(u);
            if (ei < 0 || !can_add(ei)) continue;
            if (pass == 0 && !st_.is_tight(u)) continue;
            add(ei);
            trace_.push_back("tight center: spoke to rim " + std::to_string(u));
            return true;
        }
    }
    return false;
}

bool Assembler::insulators(const BuildOptions& options) {
    std::vector<bool> pending(static_cast<std::size_t>(st_.geo.rim), false);
    for (int u = 0; u < st_.geo.rim; ++u)
        pending[static_cast<std::size_t>(u)] = st_.is_tight(u) && !is_saturated(u);

    // Maximal runs of pending vertices joined by existing rim edges.
    std::vector<std::vector<int>> found;
    {
        std::vector<bool> seen(static_cast<std::size_t>(st_.geo.rim), false);
        for (int u = 0; u < st_.geo.rim; ++u) {
            if (!pending[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)])
                continue;
            int start = u;
            while (true) {
                const int p = st_.geo.prev(start);
                if (p == u || !pending[static_cast<std::size_t>(p)] ||
                    st_.h.edge_index(p, start) < 0)
                    break;
                start = p;
            }
            std::vector<int> run{start};
            seen[static_cast<std::size_t>(start)] = true;
            int at = start;
            while (true) {
                const int nx = st_.geo.next(at);
                if (nx == start || !pending[static_cast<std::size_t>(nx)] ||
                    st_.h.edge_index(at, nx) < 0)
                    break;
                run.push_back(nx);
                seen[static_cast<std::size_t>(nx)] = true;
                at = nx;
            }
            found.push_back(std::move(run));
        }
    }

    for (const std::vector<int>& run : found) {
        std::vector<int> edges;
        bool handled = false;
        if (run.size() % 2 == 0) {
            for (std::size_t i = 0; i + 1 < run.size(); i += 2)
                edges.push_back(st_.h.edge_index(run[i], run[i + 1]));
            handled = try_add_all(edges);
        }
        // Odd run: extend one step past an end onto a free vertex.
        auto extend_left = [&]() {
            const int before = st_.geo.prev(run.front());
            if (run.size() % 2 == 1 && st_.h.edge_index(before, run.front()) >= 0 &&
                !is_saturated(before) && !pending[static_cast<std::size_t>(before)]) {
                edges.clear();
                edges.push_back(st_.h.edge_index(before, run.front()));
                for (std::size_t i = 1; i + 1 < run.size(); i += 2)
                    edges.push_back(st_.h.edge_index(run[i], run[i + 1]));
                return try_add_all(edges);
            }
            return false;
        };
        auto extend_right = [&]() {
            const int after = st_.geo.next(run.back());
            if (run.size() % 2 == 1 && st_.h.edge_index(run.back(), after) >= 0 &&
                !is_saturated(after) && !pending[static_cast<std::size_t>(after)]) {
                edges.clear();
                for (std::size_t i = 0; i + 2 < run.size(); i += 2)
                    edges.push_back(st_.h.edge_index(run[i], run[i + 1]));
                edges.push_back(st_.h.edge_index(run.back(), after));
                return try_add_all(edges);
            }
            return false;
        };
        if (!handled)
            handled = options.runs_extend_right_first ? (extend_right() || extend_left())
                                                      : (extend_left() || extend_right());
        if (!handled) {
            // Spend a spoke at an even offset; the rest pairs up. This is the
            // missing-edge triangle in action.
            for (std::size_t j = 0; j < run.size() && !handled; j += 2) {
                const int ei = st_.spoke(run[j]);
                if (ei < 0 || !can_add(ei)) continue;
                edges.clear();
                edges.push_back(ei);
                for (std::size_t i = 0; i + 1 < j; i += 2)
                    edges.push_back(st_.h.edge_index(run[i], run[i + 1]));
                for (std::size_t i = j + 1; i + 1 < run.size(); i += 2)
                    edges.push_back(st_.h.edge_index(run[i], run[i + 1]));
                handled = try_add_all(edges);
            }
        }
        if (!handled) return false;
        trace_.push_back("insulator run " + rim_str(run) + " saturated");
    }
    return true;
}

bool Assembler::structure_topup(const std::vector<OddStructure>& structures) {
    for (const OddStructure& u : structures) {
        long long weight = 0;
        for (int ei : u.edge_indices) weight += st_.weights[static_cast<std::size_t>(ei)];
        const long long need =
            weight -
            static_cast<long long>(st_.t - 1) * half_count(static_cast<int>(u.vertices.size()));
        if (need <= 0) continue;
        long long have = 0;
        for (int ei : u.edge_indices) have += chosen_[static_cast<std::size_t>(ei)];
        for (int ei : u.edge_indices) {
            if (have >= need) break;
            if (can_add(ei)) {
                add(ei);
                ++have;
            }
        }
        if (have < need) return false;
        trace_.push_back("structure on " + rim_str(u.vertices) + " holds index " +
                         std::to_string(need));
    }
    return true;
}

std::optional<std::vector<int>> construct_level(const Graph& hs, const std::vector<int>& w,
                                                int level, const TroublesomeSet& ts,
                                                const BuildOptions& options,
                                                std::vector<std::string>& trace) {
    LevelState st(hs, w, level);

    Assembler as(st, trace);

    // The two-full-index-slices-with-a-conductor corollary takes priority.
    bool corollary_done = false;
    for (const SliceGap& gap : ts.gaps) {
        if (gap.kind == GapKind::insulator) continue;
        if (!ts.slices[static_cast<std::size_t>(gap.left_slice)].full_index ||
            !ts.slices[static_cast<std::size_t>(gap.right_slice)].full_index)
            continue;
        const Assembler::Snapshot snap = as.snapshot();
        if (as.corollary_construction(ts, gap))
            corollary_done = true;
        else
            as.rollback(snap);
        break;
    }

    int spoke_slice = -1;
    if (!corollary_done) {
        for (std::size_t k = 0; k < ts.slices.size() && spoke_slice < 0; ++k)
            if (ts.slices[k].full_index && !ts.slices[k].synthetic)
                spoke_slice = static_cast<int>(k);
        if (spoke_slice < 0 && st.is_tight(st.geo.center) && options.designate_slice_for_center)
            for (std::size_t k = 0; k < ts.slices.size() && spoke_slice < 0; ++k)
                if (!ts.slices[k].synthetic) spoke_slice = static_cast<int>(k);
    }

    if (options.insulators_first && !corollary_done) {
        // Alternate along the insulators first and let the slice patterns
        // extend around whatever the runs claimed.
        if (!as.insulators(options)) return std::nullopt;
        if (!as.center_spoke()) return std::nullopt;
        if (!as.place_slices(ts, spoke_slice, options)) return std::nullopt;
    } else {
        if (!corollary_done && !as.place_slices(ts, spoke_slice, options)) return std::nullopt;
        // The tight center picks its spoke before the insulator pass so runs
        // do not strand it.
        if (!as.center_spoke()) return std::nullopt;
        if (!as.insulators(options)) return std::nullopt;
    }

    // Outer-cycle and residual index obligations.
    std::vector<OddStructure> obligations = ts.residual;
    const int n = hs.vertex_count();
    if (n % 2 == 0) {
        bool full_rim = true;
        for (int i = 0; i < n - 1 && full_rim; ++i)
            if (hs.edge_index(i, (i + 1) % (n - 1)) < 0) full_rim = false;
        if (full_rim) {
            std::vector<int> delta;
            for (int i = 0; i < n - 1; ++i) delta.push_back(i);
            obligations.push_back({delta, hs.induced_edge_indices(delta)});
        }
    }
    if (!as.structure_topup(obligations)) return std::nullopt;

    return as.chosen();
}

} // namespace

SplitResult wheel_split(const Graph& h, const EdgeWeighting& x, int t, Budget budget) {
    const int n = h.vertex_count();
    if (!is_wheel_subgraph(h, n))
        throw InputError("wheel_split requires a wheel subgraph in standard indexing");
    if (static_cast<int>(x.weights.size()) != h.edge_count())
        throw InputError("weight vector length mismatch");
    for (int w : x.weights)
        if (w <= 0)
            throw InputError("wheel_split requires a nondegenerate weighting; reduce to G[x]");
    const auto structures = wheel_odd_structures(h, n);
    if (t < 1 || !is_t_matching(h, structures, x, t))
        throw InputError("wheel_split requires a t-matching");

    SplitResult result;
    result.method = SplitMethod::wheel;
    int conductor_detections = 0;

    std::vector<int> current = x.weights;
    int level = t;
    while (level > 0) {
        budget.tick();
        if (std::all_of(current.begin(), current.end(), [](int v) { return v == 0; })) {
            for (int i = 0; i < level; ++i)
                result.parts.push_back({std::vector<int>(current.size(), 0), 1});
            break;
        }
        if (level == 1) {
            result.parts.push_back({current, 1});
            break;
        }

        // Restrict to the support of the current level.
        std::vector<bool> keep(current.size());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = current[i] > 0;
        const Graph hs = h.edge_subgraph(keep);
        std::vector<int> ws(static_cast<std::size_t>(hs.edge_count()), 0);
        for (int i = 0; i < hs.edge_count(); ++i) {
            const Edge e = hs.edge(i);
            ws[static_cast<std::size_t>(i)] =
                current[static_cast<std::size_t>(h.edge_index(e.u, e.v))];
        }

        const TroublesomeSet ts = reduce_tight_structures(hs, {ws, level}, level);
        conductor_detections += ts.conductor_pair_detections;

        // The construction leaves a few choices open (run extension side,
        // spoke designation, arc orientation); try them in canonical order
        // and keep the first level matching that verifies.
        bool ok = false;
        std::vector<int> m(current.size(), 0);
        for (int variant = 0; variant < 16 && !ok; ++variant) {
            BuildOptions options;
            options.runs_extend_right_first = variant & 1;
            options.designate_slice_for_center = !(variant & 2);
            options.slice_side_reversed = variant & 4;
            options.insulators_first = variant & 8;
            std::vector<std::string> attempt_trace;
            auto ms = construct_level(hs, ws, level, ts, options, attempt_trace);
            if (!ms) continue;
            std::fill(m.begin(), m.end(), 0);
            for (int i = 0; i < hs.edge_count(); ++i) {
                if (!(*ms)[static_cast<std::size_t>(i)]) continue;
                const Edge e = hs.edge(i);
                m[static_cast<std::size_t>(h.edge_index(e.u, e.v))] = 1;
            }
            std::vector<int> rest(current.size());
            for (std::size_t i = 0; i < current.size(); ++i) rest[i] = current[i] - m[i];
            if (is_matching_vector(h, m) &&
                is_t_matching(h, structures, {rest, level - 1}, level - 1)) {
                ok = true;
                for (auto& line : attempt_trace) result.trace.push_back(std::move(line));
            }
        }

        if (ok) {
            result.parts.push_back({m, 1});
            for (std::size_t i = 0; i < current.size(); ++i) current[i] -= m[i];
            --level;
            continue;
        }

        result.trace.push_back("level " + std::to_string(level) +
                               ": construction failed verification, exhaustive fallback");
        result.fallback_used = true;
        auto rescue = split_exhaustive(h, {current, level}, level, budget);
        if (!rescue) throw InternalError("t-matching on a wheel subgraph failed to split");
        for (auto& p : rescue->parts) result.parts.push_back(std::move(p));
        break;
    }

    if (conductor_detections > 0)
        result.trace.push_back("full-index conductor pairs detected: " +
                               std::to_string(conductor_detections));

    if (static_cast<int>(result.parts.size()) != t)
        throw InternalError("wheel decomposition has wrong part count");
    std::vector<long long> sum(x.weights.size(), 0);
    for (const EdgeWeighting& part : result.parts) {
        if (!is_matching_vector(h, part.weights))
            throw InternalError("wheel decomposition part is not a matching");
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += part.weights[i];
    }
    for (std::size_t i = 0; i < sum.size(); ++i)
        if (sum[i] != x.weights[i])
            throw InternalError("wheel decomposition does not re-sum to input");
    return result;
}

} // namespace matchpoly
