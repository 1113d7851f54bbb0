#include "planeguard/stacked_guard.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "planeguard/face_builder.hpp"

namespace planeguard {

namespace {

bool face_has(const std::array<VertexId, 3>& f, VertexId v) {
    return f[0] == v || f[1] == v || f[2] == v;
}

bool edge_covers(const VertexPair& e, const std::array<VertexId, 3>& f) {
    return face_has(f, e.a) || face_has(f, e.b);
}

// Guard set under rewriting: the endpoint counts make "is v an endpoint"
// queries cheap during the exchange and coverage passes.
struct GuardState {
    std::set<VertexPair> edges;
    std::unordered_map<VertexId, int> hits;

    bool has(const VertexPair& e) const { return edges.count(e) != 0; }
    bool guarded(VertexId v) const {
        auto it = hits.find(v);
        return it != hits.end() && it->second > 0;
    }
    bool add(const VertexPair& e) {
        if (!edges.insert(e).second) return false;
        ++hits[e.a];
        ++hits[e.b];
        return true;
    }
    void remove(const VertexPair& e) {
        if (edges.erase(e) == 0) throw std::logic_error("removing a guard that is not present");
        --hits[e.a];
        --hits[e.b];
    }
    int size() const { return (int)edges.size(); }
};

bool face_seen(const GuardState& st, const std::array<VertexId, 3>& f) {
    return st.guarded(f[0]) || st.guarded(f[1]) || st.guarded(f[2]);
}

// Weak form: host (p,q,r), forced pair {p,q}. Every face incident to a or b
// also touches p or q, which keeps each exchange coverage-preserving.
void normalize_weak_core(const GadgetRecord& gad, GuardState& st) {
    VertexId p = gad.host[0], q = gad.host[1], r = gad.host[2];
    VertexId a = gad.a, b = gad.b;
    for (VertexId t : {a, p, q}) {
        VertexPair e(b, t);
        if (st.has(e)) {
            st.remove(e);
            st.add(VertexPair(p, q));
        }
    }
    if (st.guarded(p) && st.guarded(q)) return;
    // b is clean now, so face (p,q,b) forces one of p,q; the other must be
    // reachable through a guard at a.
    VertexId have, miss;
    if (st.guarded(p)) {
        have = p;
        miss = q;
    } else if (st.guarded(q)) {
        have = q;
        miss = p;
    } else {
        throw std::logic_error("weak gadget face lost its guard");
    }
    for (VertexId w : {have, r}) {
        VertexPair e(a, w);
        if (st.has(e)) {
            st.remove(e);
            st.add(VertexPair(w, miss));
            return;
        }
    }
    throw std::logic_error("weak gadget normalization found no exchange");
}

// Strong form: host (F,P,Q), forced vertex F. Internal pairs dissolve into
// {F,a}; if F is still unguarded the only consistent state is a guard on
// {b,P} with a itself guarded, and swapping in {F,P} fixes it.
void normalize_strong_core(const GadgetRecord& gad, GuardState& st) {
    VertexId F = gad.host[0], P = gad.host[1], Q = gad.host[2];
    VertexId a = gad.a, b = gad.b, c = gad.c;
    const VertexPair internals[3] = {VertexPair(a, b), VertexPair(a, c), VertexPair(b, c)};
    for (const VertexPair& e : internals) {
        if (st.has(e)) {
            st.remove(e);
            st.add(VertexPair(F, a));
        }
    }
    if (!st.guarded(F)) {
        if (!st.has(VertexPair(b, P)) || !st.guarded(a))
            throw std::logic_error("strong gadget face lost its guard");
        st.remove(VertexPair(b, P));
        st.add(VertexPair(F, P));
    }
    bool cross = st.has(VertexPair(a, F)) || st.has(VertexPair(a, P)) || st.has(VertexPair(a, Q)) ||
                 st.has(VertexPair(b, F)) || st.has(VertexPair(b, P)) || st.has(VertexPair(c, F));
    if (!st.guarded(F) || !cross)
        throw std::logic_error("strong gadget normalization failed");
}

// Rewrites every surviving boundary-to-gadget guard {g,h} as {h, low(h)}.
// low(h) must name a neighbor of h in the gadget-free graph.
template <class LowFn>
void remap_core(const GadgetRecord& gad, GuardState& st, LowFn&& low) {
    std::vector<VertexId> gv{gad.a, gad.b};
    if (gad.strong) gv.push_back(gad.c);
    for (size_t i = 0; i < gv.size(); ++i)
        for (size_t j = i + 1; j < gv.size(); ++j)
            if (st.has(VertexPair(gv[i], gv[j])))
                throw std::logic_error("remap requires normalized guards");
    for (VertexId w : gv)
        for (VertexId h : gad.host) {
            VertexPair e(w, h);
            if (st.has(e)) {
                st.remove(e);
                st.add(VertexPair(h, low(h)));
            }
        }
}

// Pocket snapshot walkers; work for any node type exposing tri/stacked/child.
template <class NodeVec>
void walk_leaves(const NodeVec& nodes, int idx, Region& out, long long* ops) {
    if (ops) ++*ops;
    const auto& nd = nodes[(size_t)idx];
    if (nd.stacked < 0) {
        out.faces.push_back(nd.tri);
        return;
    }
    out.interior.push_back(nd.stacked);
    for (int c : nd.child) walk_leaves(nodes, c, out, ops);
}

template <class NodeVec>
Region make_region(const NodeVec& nodes, int idx, long long* ops = nullptr) {
    Region r;
    r.corners = nodes[(size_t)idx].tri;
    r.hub = nodes[(size_t)idx].stacked;
    walk_leaves(nodes, idx, r, ops);
    // every pocket edge lies on some leaf triangle
    for (const auto& f : r.faces)
        for (int i = 0; i < 3; ++i) r.edges.insert(VertexPair(f[i], f[(i + 1) % 3]));
    return r;
}

std::vector<std::array<VertexId, 3>> cover_targets(const Region& r, bool with_corner_face) {
    std::vector<std::array<VertexId, 3>> need = r.faces;
    if (with_corner_face) need.push_back(r.corners);
    return need;
}

std::vector<std::vector<VertexId>> all_face_cycles(const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> out(g.face_count());
    for (FaceId f = 0; f < g.face_count(); ++f)
        for (DartId d : g.face(f).boundary) out[f].push_back(g.dart(d).tail);
    return out;
}

std::array<VertexId, 3> sorted3(std::array<VertexId, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
}

int find_inner_triangle(const PlaneGraph& g, const std::vector<std::vector<VertexId>>& cyc,
                        const std::array<VertexId, 3>& want) {
    auto key = sorted3(want);
    for (int f = 0; f < (int)cyc.size(); ++f) {
        if (f == g.outer_face() || cyc[f].size() != 3) continue;
        if (sorted3({cyc[f][0], cyc[f][1], cyc[f][2]}) == key) return f;
    }
    throw std::invalid_argument("gadget host triple is not an inner face");
}

int slot_with_set(const FaceListBuilder& fb, std::initializer_list<int> slots,
                  std::array<VertexId, 3> want) {
    auto key = sorted3(want);
    for (int s : slots) {
        const auto& f = fb.face(s);
        if (f.size() == 3 && sorted3({f[0], f[1], f[2]}) == key) return s;
    }
    throw std::logic_error("gadget wiring lost a sub-face");
}

EdgeGuardSet state_to_set(GuardState&& st) {
    EdgeGuardSet out;
    out.edges = std::move(st.edges);
    return out;
}

GuardState set_to_state(const EdgeGuardSet& guards) {
    GuardState st;
    for (const auto& e : guards.edges) st.add(e);
    return st;
}

}  // namespace

Region whole_graph_region(const PlaneGraph& g) {
    Classification c = classify(g);
    if (!c.is_stacked)
        throw std::invalid_argument("whole_graph_region: not a stacked triangulation");
    return make_region(c.tree->nodes, c.tree->root);
}

VertexPair unique_guard_6(const Region& six, VertexId avoid, bool require_outer) {
    if ((int)six.interior.size() != 3)
        throw std::invalid_argument("unique_guard_6: pocket must have exactly 3 interior vertices");
    if ((int)six.faces.size() != 7)
        throw std::logic_error("unique_guard_6: malformed pocket");
    auto need_all = cover_targets(six, true);
    if (avoid < 0) {
        VertexPair found;
        int count = 0;
        for (const VertexPair& e : six.edges) {
            bool ok = true;
            for (const auto& f : need_all)
                if (!edge_covers(e, f)) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = e;
                ++count;
            }
        }
        if (count != 1) throw std::logic_error("six-vertex pocket guard is not unique");
        return found;
    }
    std::vector<std::array<VertexId, 3>> need;
    for (const auto& f : need_all)
        if (!face_has(f, avoid)) need.push_back(f);
    for (const VertexPair& e : six.edges) {
        if (require_outer) {
            bool anchored = false;
            for (VertexId c : six.corners)
                if (c != avoid && e.contains(c)) anchored = true;
            if (!anchored) continue;
        }
        bool ok = true;
        for (const auto& f : need)
            if (!edge_covers(e, f)) {
                ok = false;
                break;
            }
        if (ok) return e;
    }
    throw std::logic_error("six-vertex pocket has no qualifying guard");
}

VertexPair extend_7(const Region& seven, const std::vector<VertexId>& guarded_corners) {
    if ((int)seven.interior.size() != 4)
        throw std::invalid_argument("extend_7: pocket must have exactly 4 interior vertices");
    if ((int)seven.faces.size() != 9)
        throw std::logic_error("extend_7: malformed pocket");
    auto need = cover_targets(seven, true);
    auto seen = [&](const std::array<VertexId, 3>& f) {
        for (VertexId w : guarded_corners)
            if (face_has(f, w)) return true;
        return false;
    };
    for (const VertexPair& e : seven.edges) {
        bool ok = true;
        for (const auto& f : need)
            if (!seen(f) && !edge_covers(e, f)) {
                ok = false;
                break;
            }
        if (ok) return e;
    }
    throw std::logic_error("seven-vertex pocket has no extension edge");
}

std::pair<PlaneGraph, GadgetRecord> insert_weak_gadget(const PlaneGraph& g,
                                                       std::array<VertexId, 3> face) {
    auto cyc = all_face_cycles(g);
    int slot = find_inner_triangle(g, cyc, face);
    FaceListBuilder fb(std::move(cyc));
    int n = g.vertex_count();
    GadgetRecord rec;
    rec.strong = false;
    rec.host = face;
    rec.a = n;
    rec.b = n + 1;
    fb.stack(slot, rec.a);
    int bslot = slot_with_set(fb, {slot, fb.face_count() - 2, fb.face_count() - 1},
                              {rec.a, face[0], face[1]});
    fb.stack(bslot, rec.b);
    return {build_from_faces(n + 2, fb.faces(), g.outer_pair()), rec};
}

std::pair<PlaneGraph, GadgetRecord> insert_strong_gadget(const PlaneGraph& g,
                                                         std::array<VertexId, 3> face) {
    auto cyc = all_face_cycles(g);
    int slot = find_inner_triangle(g, cyc, face);
    FaceListBuilder fb(std::move(cyc));
    int n = g.vertex_count();
    GadgetRecord rec;
    rec.strong = true;
    rec.host = face;
    rec.a = n;
    rec.b = n + 1;
    rec.c = n + 2;
    fb.stack(slot, rec.a);
    int bslot = slot_with_set(fb, {slot, fb.face_count() - 2, fb.face_count() - 1},
                              {rec.a, face[0], face[1]});
    fb.stack(bslot, rec.b);
    int cslot = slot_with_set(fb, {bslot, fb.face_count() - 2, fb.face_count() - 1},
                              {rec.a, rec.b, face[0]});
    fb.stack(cslot, rec.c);
    return {build_from_faces(n + 3, fb.faces(), g.outer_pair()), rec};
}

EdgeGuardSet normalize_weak(const GadgetRecord& gad, const EdgeGuardSet& guards) {
    GuardState st = set_to_state(guards);
    normalize_weak_core(gad, st);
    return state_to_set(std::move(st));
}

EdgeGuardSet normalize_strong(const GadgetRecord& gad, const EdgeGuardSet& guards) {
    GuardState st = set_to_state(guards);
    normalize_strong_core(gad, st);
    return state_to_set(std::move(st));
}

EdgeGuardSet remap_gadget_guards(const GadgetRecord& gad, const EdgeGuardSet& guards,
                                 const PlaneGraph& host) {
    GuardState st = set_to_state(guards);
    remap_core(gad, st, [&host](VertexId h) {
        const auto& rot = host.rotation(h);
        if (rot.empty()) throw std::invalid_argument("remap host corner has no neighbors");
        return *std::min_element(rot.begin(), rot.end());
    });
    return state_to_set(std::move(st));
}

namespace {

struct WorkNode {
    std::array<VertexId, 3> tri{-1, -1, -1};
    VertexId stacked = -1;
    std::array<int, 3> child{-1, -1, -1};
    int parent = -1;
};

struct StepRecord {
    enum Kind { Base, FinalTen, Peel4, Shallow, Side5, Side6, Side7, DeepWeak, DeepPeel };
    Kind kind = Base;
    int removed = 0;        // net vertex change of the step
    int added_measured = 0; // filled during the upward pass
    Region region;          // pocket of the handled triangle, taken before mutation
    Region region_a, region_b, region_mid;
    std::optional<GadgetRecord> gadget;
    std::map<VertexId, VertexId> corner_low;  // corner -> lowest neighbor when the gadget went in
    VertexId vx = -1, vy = -1, vz = -1, vv = -1;
    VertexPair gA, gB;
    VertexId uA = -1, wA = -1, uB = -1, wB = -1;
    int side7_case = 0;  // 1..6 in the priority order of the endpoint cases
    std::vector<VertexPair> planned;
    std::unique_ptr<StepRecord> inner;  // follow-up reduction after a 3-vertex peel
};

const char* case_name(StepRecord::Kind k) {
    switch (k) {
        case StepRecord::Base: return "base";
        case StepRecord::FinalTen: return "base10";
        case StepRecord::Peel4: return "peel4";
        case StepRecord::Shallow: return "shallow";
        case StepRecord::Side5: return "side5";
        case StepRecord::Side6: return "side6";
        case StepRecord::Side7: return "side7";
        case StepRecord::DeepWeak: return "deep-weak";
        case StepRecord::DeepPeel: return "deep-peel";
    }
    return "?";
}

class StackedSolver {
public:
    StackedSolver(const StackingTree& t, int n) {
        nodes_.reserve(t.nodes.size());
        for (const auto& sn : t.nodes) {
            WorkNode w;
            w.tri = sn.tri;
            w.stacked = sn.stacked;
            w.child = sn.child;
            w.parent = sn.parent;
            nodes_.push_back(w);
        }
        root_ = t.root;
        adj_.assign(n, {});
        const auto rt = nodes_[root_].tri;
        link(rt[0], rt[1]);
        link(rt[1], rt[2]);
        link(rt[2], rt[0]);
        for (const auto& w : nodes_)
            if (w.stacked >= 0)
                for (VertexId c : w.tri) link(w.stacked, c);
        live_ = n;
    }

    StackedResult run(const PlaneGraph& g) {
        StackedResult res;
        res.undersized = (live_ == 3);
        for (int id = 0; id < (int)nodes_.size(); ++id) {
            int key;
            if (is_candidate(id, key)) enqueue(id, key);
        }
        for (;;) {
            int u = pop();
            if (u < 0) break;
            auto s = dispatch(u);
            if (s->kind == StepRecord::FinalTen) {
                terminal_ = std::move(s);
                break;
            }
            int par = nodes_[u].parent;
            steps_.push_back(std::move(s));
            requeue_from(par);
        }
        if (!terminal_) terminal_ = base_case();

        GuardState st;
        apply_up(*terminal_, st);
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) apply_up(**it, st);

        for (const auto& sp : steps_)
            res.ledger.push_back({case_name(sp->kind), sp->removed, sp->added_measured});
        res.ledger.push_back(
            {case_name(terminal_->kind), terminal_->removed, terminal_->added_measured});
        res.guards = state_to_set(std::move(st));
        res.tree_ops = ops_;
        res.fallbacks = fallbacks_;

        auto rep = g.verify_guard_set(res.guards);
        if (!rep.valid) throw std::logic_error("stacked solver produced an invalid guard set");
        int n = g.vertex_count();
        if (n >= 4 && res.guards.size() > 2 * n / 7)
            throw std::logic_error("stacked solver exceeded its guard budget");
        return res;
    }

private:
    std::vector<WorkNode> nodes_;
    std::vector<std::set<VertexId>> adj_;
    int root_ = 0;
    int live_ = 0;
    long long ops_ = 0;
    long long fallbacks_ = 0;
    std::array<std::set<int>, 11> bucket_;
    std::unordered_map<int, int> queued_;
    std::vector<std::unique_ptr<StepRecord>> steps_;
    std::unique_ptr<StepRecord> terminal_;

    void link(VertexId u, VertexId v) {
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    VertexId fresh_vertex() {
        VertexId v = (VertexId)adj_.size();
        adj_.emplace_back();
        return v;
    }

    // Interior count of the subtree, abandoned once it passes cap.
    void count_rec(int idx, int cap, int& total) {
        ++ops_;
        const WorkNode& nd = nodes_[idx];
        if (nd.stacked < 0) return;
        if (++total > cap) return;
        for (int c : nd.child) {
            count_rec(c, cap, total);
            if (total > cap) return;
        }
    }
    int count_capped(int idx, int cap) {
        int total = 0;
        count_rec(idx, cap, total);
        return total;
    }

    int height(int idx) {
        const WorkNode& nd = nodes_[idx];
        if (nd.stacked < 0) return 0;
        int h = 0;
        for (int c : nd.child) h = std::max(h, height(c));
        return 1 + h;
    }

    // A triangle qualifies when it holds 4..10 interior vertices and no child
    // triangle holds 4 or more; such triangles are never ancestor-related.
    bool is_candidate(int idx, int& key) {
        const WorkNode& nd = nodes_[idx];
        if (nd.stacked < 0) return false;
        for (int c : nd.child)
            if (count_capped(c, 3) > 3) return false;
        int cnt = count_capped(idx, 10);
        if (cnt < 4 || cnt > 10) return false;
        key = cnt;
        return true;
    }

    void enqueue(int id, int key) {
        auto it = queued_.find(id);
        if (it != queued_.end()) {
            if (it->second == key) return;
            bucket_[it->second].erase(id);
            it->second = key;
        } else {
            queued_.emplace(id, key);
        }
        bucket_[key].insert(id);
        ++ops_;
    }

    int pop() {
        for (int k = 4; k <= 10; ++k) {
            if (bucket_[k].empty()) continue;
            int id = *bucket_[k].begin();
            bucket_[k].erase(bucket_[k].begin());
            queued_.erase(id);
            ++ops_;
            int key = 0;
            if (!is_candidate(id, key) || key != k)
                throw std::logic_error("stacked solver queue held a stale candidate");
            return id;
        }
        return -1;
    }

    // After a step the handled triangle holds at most 3 vertices; climb until
    // an ancestor reaches 4 again and queue it if it qualifies. Each climbed-
    // through node stays under 4 forever, so the total climb work is O(n).
    void requeue_from(int idx) {
        while (idx >= 0) {
            ++ops_;
            if (count_capped(idx, 10) >= 4) {
                int key;
                if (is_candidate(idx, key)) enqueue(idx, key);
                return;
            }
            idx = nodes_[idx].parent;
        }
    }

    void drop_vertex(VertexId w) {
        for (VertexId nb : adj_[w]) adj_[nb].erase(w);
        adj_[w].clear();
    }

    void clear_rec(int idx, int& removed) {
        ++ops_;
        const WorkNode& nd = nodes_[idx];
        if (nd.stacked < 0) return;
        drop_vertex(nd.stacked);
        ++removed;
        for (int c : nd.child) clear_rec(c, removed);
    }

    int clear_subtree(int idx) {
        int removed = 0;
        clear_rec(idx, removed);
        nodes_[idx].stacked = -1;
        nodes_[idx].child = {-1, -1, -1};
        live_ -= removed;
        return removed;
    }

    void stack_into(int idx, VertexId v) {
        ++ops_;
        std::array<VertexId, 3> t = nodes_[idx].tri;
        nodes_[idx].stacked = v;
        for (int i = 0; i < 3; ++i) {
            WorkNode ch;
            ch.tri = {v, t[i], t[(i + 1) % 3]};
            ch.parent = idx;
            int cid = (int)nodes_.size();
            nodes_.push_back(ch);
            nodes_[idx].child[i] = cid;
        }
        for (VertexId c : t) link(v, c);
        ++live_;
    }

    int child_with(int idx, std::array<VertexId, 3> want) {
        auto key = sorted3(want);
        for (int c : nodes_[idx].child)
            if (c >= 0 && sorted3(nodes_[c].tri) == key) return c;
        throw std::logic_error("gadget wiring lost a sub-triangle");
    }

    GadgetRecord tree_insert_weak(int u, VertexPair forced, VertexId third) {
        GadgetRecord rec;
        rec.strong = false;
        rec.host = {forced.a, forced.b, third};
        rec.a = fresh_vertex();
        stack_into(u, rec.a);
        int bslot = child_with(u, {rec.a, forced.a, forced.b});
        rec.b = fresh_vertex();
        stack_into(bslot, rec.b);
        return rec;
    }

    GadgetRecord tree_insert_strong(int u, VertexId F, VertexId P, VertexId Q) {
        GadgetRecord rec;
        rec.strong = true;
        rec.host = {F, P, Q};
        rec.a = fresh_vertex();
        stack_into(u, rec.a);
        int bslot = child_with(u, {rec.a, F, P});
        rec.b = fresh_vertex();
        stack_into(bslot, rec.b);
        int cslot = child_with(bslot, {rec.a, rec.b, F});
        rec.c = fresh_vertex();
        stack_into(cslot, rec.c);
        return rec;
    }

    void snapshot_lows(StepRecord& s, const std::array<VertexId, 3>& corners) {
        for (VertexId c : corners) {
            if (adj_[c].empty()) throw std::logic_error("pocket corner lost all neighbors");
            s.corner_low[c] = *adj_[c].begin();
        }
    }

    // Splits a pocket guard into its corner anchor (lowest corner when both
    // endpoints are corners) and the remaining endpoint.
    static void split_guard(const std::array<VertexId, 3>& corners, const VertexPair& e,
                            VertexId& anchor, VertexId& other) {
        bool ca = face_has(corners, e.a), cb = face_has(corners, e.b);
        if (ca && cb) {
            anchor = std::min(e.a, e.b);
            other = std::max(e.a, e.b);
        } else if (ca) {
            anchor = e.a;
            other = e.b;
        } else if (cb) {
            anchor = e.b;
            other = e.a;
        } else {
            throw std::logic_error("pocket guard has no corner endpoint");
        }
    }

    // ---- downward steps ----

    std::unique_ptr<StepRecord> dispatch(int u) {
        int cnt = count_capped(u, 10);
        if (cnt == 4) return do_peel4(u);
        if (height(u) <= 3) return do_shallow(u);
        std::array<int, 3> ccnt;
        for (int i = 0; i < 3; ++i) ccnt[i] = count_capped(nodes_[u].child[i], 3);
        bool has_zero = ccnt[0] == 0 || ccnt[1] == 0 || ccnt[2] == 0;
        if (has_zero) {
            if (cnt == 5 || cnt == 6 || cnt == 7) return do_side(u, cnt, ccnt);
            throw std::logic_error("empty-sided pocket with more than 7 interior vertices");
        }
        if (cnt == 6) return do_deep_weak(u, ccnt);
        if (cnt >= 7) {
            if (cnt == 7 && live_ == 10) return do_final_ten(u);
            return do_deep_peel(u, ccnt);
        }
        throw std::logic_error("unreachable pocket shape");
    }

    std::unique_ptr<StepRecord> do_peel4(int u) {
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::Peel4;
        s->region = make_region(nodes_, u, &ops_);
        s->removed = clear_subtree(u);
        return s;
    }

    std::unique_ptr<StepRecord> do_shallow(int u) {
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::Shallow;
        s->region = make_region(nodes_, u, &ops_);
        int removed = 0;
        for (int c : nodes_[u].child) removed += clear_subtree(c);
        s->removed = removed;
        return s;
    }

    // Labels shared by the three empty-side cases and the deep cases:
    // A = first 3-vertex child, B = the other filled child, x their shared
    // corner, y = A's own corner, z = B's own corner, (v,y,z) the empty side.
    struct SideLabels {
        int A = -1, B = -1, F = -1;
        VertexId v = -1, x = -1, y = -1, z = -1;
    };

    SideLabels side_labels(int u, const std::array<int, 3>& ccnt) {
        SideLabels L;
        for (int i = 0; i < 3; ++i) {
            int c = nodes_[u].child[i];
            if (ccnt[i] == 0 && L.F < 0)
                L.F = c;
            else if (ccnt[i] == 3 && L.A < 0)
                L.A = c;
            else
                L.B = c;
        }
        if (L.A < 0 || L.B < 0 || L.F < 0) throw std::logic_error("side pocket shape mismatch");
        L.v = nodes_[u].stacked;
        const auto& ta = nodes_[L.A].tri;
        const auto& tb = nodes_[L.B].tri;
        for (VertexId t : ta)
            if (t != L.v && face_has(tb, t)) L.x = t;
        for (VertexId t : ta)
            if (t != L.v && t != L.x) L.y = t;
        for (VertexId t : tb)
            if (t != L.v && t != L.x) L.z = t;
        if (L.x < 0 || L.y < 0 || L.z < 0 ||
            sorted3(nodes_[L.F].tri) != sorted3({L.v, L.y, L.z}))
            throw std::logic_error("side pocket corner labels are inconsistent");
        return L;
    }

    std::unique_ptr<StepRecord> do_side(int u, int cnt, const std::array<int, 3>& ccnt) {
        SideLabels L = side_labels(u, ccnt);
        auto s = std::make_unique<StepRecord>();
        s->region = make_region(nodes_, u, &ops_);
        s->vx = L.x;
        s->vy = L.y;
        s->vz = L.z;
        s->vv = L.v;
        if (cnt == 5) {
            s->kind = StepRecord::Side5;
            s->removed = clear_subtree(L.A) + clear_subtree(L.B);
            return s;
        }
        if (cnt == 6) return do_side6(u, std::move(s), L);
        return do_side7(u, std::move(s), L);
    }

    std::unique_ptr<StepRecord> do_side6(int u, std::unique_ptr<StepRecord> s, const SideLabels& L) {
        s->kind = StepRecord::Side6;
        s->region_a = make_region(nodes_, L.A, &ops_);
        s->region_b = make_region(nodes_, L.B, &ops_);
        s->gA = unique_guard_6(s->region_a);
        split_guard(s->region_a.corners, s->gA, s->uA, s->wA);
        // which outer edge of the 5-vertex side already covers all its faces
        const VertexPair cands[3] = {VertexPair(L.x, L.z), VertexPair(L.x, L.v),
                                     VertexPair(L.v, L.z)};
        int pick = -1;
        for (int i = 0; i < 3 && pick < 0; ++i) {
            bool ok = true;
            for (const auto& f : s->region_b.faces)
                if (!edge_covers(cands[i], f)) {
                    ok = false;
                    break;
                }
            if (ok) pick = i;
        }
        if (pick < 0) throw std::logic_error("two-vertex side has no covering outer edge");
        auto withA = [&](VertexId c) { return c == s->wA ? s->gA : VertexPair(c, s->wA); };
        VertexPair forced;
        if (pick == 0) {
            forced = VertexPair(L.x, L.z);
            s->planned = {s->gA};
        } else if (pick == 1) {
            forced = VertexPair(L.x, L.y);
            s->planned = {s->uA == L.v ? s->gA : withA(L.v)};
        } else if (s->uA == L.v) {
            forced = VertexPair(L.y, L.z);
            s->planned = {s->gA};
        } else {
            forced = VertexPair(s->uA, L.z);
            s->planned = {withA(L.v)};
        }
        int removed = clear_subtree(u);
        snapshot_lows(*s, {L.x, L.y, L.z});
        VertexId third = -1;
        for (VertexId c : {L.x, L.y, L.z})
            if (!forced.contains(c)) third = c;
        s->gadget = tree_insert_weak(u, forced, third);
        s->removed = removed - 2;
        return s;
    }

    std::unique_ptr<StepRecord> do_side7(int u, std::unique_ptr<StepRecord> s, const SideLabels& L) {
        s->kind = StepRecord::Side7;
        s->region_a = make_region(nodes_, L.A, &ops_);
        s->region_b = make_region(nodes_, L.B, &ops_);
        s->gA = unique_guard_6(s->region_a);
        s->gB = unique_guard_6(s->region_b);
        split_guard(s->region_a.corners, s->gA, s->uA, s->wA);
        split_guard(s->region_b.corners, s->gB, s->uB, s->wB);
        VertexId forced;
        if (s->uA == L.x && s->uB == L.x) {
            s->side7_case = 1;
            forced = L.x;
        } else if (s->uA == L.x) {
            s->side7_case = 2;
            forced = L.x;
        } else if (s->uB == L.x) {
            s->side7_case = 3;
            forced = L.x;
        } else if (s->uA == L.v && s->uB == L.v) {
            s->side7_case = 4;
            forced = L.x;
        } else if (s->uA == L.y) {
            s->side7_case = 5;
            forced = L.y;
        } else if (s->uB == L.z) {
            s->side7_case = 6;
            forced = L.z;
        } else {
            throw std::logic_error("three-vertex sides fell outside the endpoint cases");
        }
        std::vector<VertexId> rest;
        for (VertexId c : {L.x, L.y, L.z})
            if (c != forced) rest.push_back(c);
        int removed = clear_subtree(u);
        snapshot_lows(*s, {L.x, L.y, L.z});
        s->gadget = tree_insert_strong(u, forced, std::min(rest[0], rest[1]),
                                       std::max(rest[0], rest[1]));
        s->removed = removed - 3;
        return s;
    }

    std::unique_ptr<StepRecord> do_deep_weak(int u, const std::array<int, 3>& ccnt) {
        int M = -1;
        for (int i = 0; i < 3; ++i)
            if (ccnt[i] == 3) M = nodes_[u].child[i];
        if (M < 0) throw std::logic_error("deep pocket lacks a 3-vertex side");
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::DeepWeak;
        s->region = make_region(nodes_, u, &ops_);
        s->region_mid = make_region(nodes_, M, &ops_);
        s->vv = nodes_[u].stacked;
        VertexId y = -1, z = -1;
        for (VertexId t : nodes_[M].tri)
            if (t != s->vv) (y < 0 ? y : z) = t;
        if (y > z) std::swap(y, z);
        VertexId x = -1;
        for (VertexId t : nodes_[u].tri)
            if (t != y && t != z) x = t;
        s->vx = x;
        s->vy = y;
        s->vz = z;
        int removed = clear_subtree(u);
        snapshot_lows(*s, {x, y, z});
        s->gadget = tree_insert_weak(u, VertexPair(y, z), x);
        s->removed = removed - 2;
        return s;
    }

    std::unique_ptr<StepRecord> do_deep_peel(int u, const std::array<int, 3>& ccnt) {
        int M = -1;
        for (int i = 0; i < 3 && M < 0; ++i)
            if (ccnt[i] == 3) M = nodes_[u].child[i];
        if (M < 0) throw std::logic_error("deep pocket lacks a 3-vertex side");
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::DeepPeel;
        s->region_mid = make_region(nodes_, M, &ops_);
        int removed = clear_subtree(M);
        s->inner = dispatch(u);
        switch (s->inner->kind) {
            case StepRecord::Peel4:
            case StepRecord::Shallow:
            case StepRecord::Side5:
            case StepRecord::Side6:
            case StepRecord::Side7:
                break;
            default:
                throw std::logic_error("peeling did not expose a reducible pocket");
        }
        s->removed = removed + s->inner->removed;
        return s;
    }

    // Ten live vertices at the root with every side filled: the recursion
    // would leave a bare triangle behind and lose its budget, so finish with
    // a bounded exact search instead (two edges always suffice here).
    std::unique_ptr<StepRecord> do_final_ten(int u) {
        if (nodes_[u].parent >= 0) throw std::logic_error("full ten-vertex pocket below the root");
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::FinalTen;
        s->region = make_region(nodes_, u, &ops_);
        auto need = cover_targets(s->region, true);
        std::vector<VertexPair> es(s->region.edges.begin(), s->region.edges.end());
        auto covered = [&](const VertexPair& e1, const VertexPair* e2) {
            for (const auto& f : need)
                if (!edge_covers(e1, f) && (!e2 || !edge_covers(*e2, f))) return false;
            return true;
        };
        for (const VertexPair& e : es)
            if (covered(e, nullptr)) {
                s->planned = {e};
                break;
            }
        if (s->planned.empty()) {
            for (size_t i = 0; i < es.size() && s->planned.empty(); ++i)
                for (size_t j = i + 1; j < es.size(); ++j)
                    if (covered(es[i], &es[j])) {
                        s->planned = {es[i], es[j]};
                        break;
                    }
        }
        if (s->planned.empty())
            throw std::logic_error("ten-vertex remainder has no two-edge guard");
        s->removed = live_;
        return s;
    }

    std::unique_ptr<StepRecord> base_case() {
        auto s = std::make_unique<StepRecord>();
        s->kind = StepRecord::Base;
        s->region = make_region(nodes_, root_, &ops_);
        auto need = cover_targets(s->region, true);
        for (const VertexPair& e : s->region.edges) {
            bool ok = true;
            for (const auto& f : need)
                if (!edge_covers(e, f)) {
                    ok = false;
                    break;
                }
            if (ok) {
                s->planned = {e};
                break;
            }
        }
        if (s->planned.empty()) throw std::logic_error("small remainder has no single-edge guard");
        s->removed = live_;
        return s;
    }

    // ---- upward pass ----

    bool region_covered(const Region& r, const GuardState& st) {
        for (const auto& f : r.faces)
            if (!face_seen(st, f)) return false;
        return true;
    }

    void single_edge_fallback(const Region& r, GuardState& st, const char* what) {
        for (const VertexPair& e : r.edges) {
            bool ins = st.add(e);
            if (region_covered(r, st)) {
                ++fallbacks_;
                return;
            }
            if (ins) st.remove(e);
        }
        throw std::logic_error(what);
    }

    void remap_with(const StepRecord& s, GuardState& st) {
        remap_core(*s.gadget, st, [&s](VertexId h) {
            auto it = s.corner_low.find(h);
            if (it == s.corner_low.end())
                throw std::logic_error("missing corner snapshot for remap");
            return it->second;
        });
    }

    void apply_up(StepRecord& s, GuardState& st) {
        int before = st.size();
        switch (s.kind) {
            case StepRecord::Base:
            case StepRecord::FinalTen:
                for (const auto& e : s.planned) st.add(e);
                break;
            case StepRecord::Peel4: up_peel4(s, st); break;
            case StepRecord::Shallow: up_shallow(s, st); break;
            case StepRecord::Side5: up_side5(s, st); break;
            case StepRecord::Side6: up_side6(s, st); break;
            case StepRecord::Side7: up_side7(s, st); break;
            case StepRecord::DeepWeak: up_deep_weak(s, st); break;
            case StepRecord::DeepPeel:
                apply_up(*s.inner, st);
                st.add(unique_guard_6(s.region_mid));
                break;
        }
        s.added_measured = st.size() - before;
    }

    void up_peel4(StepRecord& s, GuardState& st) {
        std::vector<VertexId> W;
        for (VertexId c : s.region.corners)
            if (st.guarded(c)) W.push_back(c);
        st.add(extend_7(s.region, W));
    }

    void up_shallow(StepRecord& s, GuardState& st) {
        std::array<VertexId, 4> clique{s.region.hub, s.region.corners[0], s.region.corners[1],
                                       s.region.corners[2]};
        std::vector<VertexId> missing;
        for (VertexId c : clique)
            if (!st.guarded(c)) missing.push_back(c);
        // the faces around the kept hub force at least two clique endpoints
        if (missing.size() > 2)
            throw std::logic_error("kept hub lost its surrounding coverage");
        if (missing.size() == 2) {
            st.add(VertexPair(missing[0], missing[1]));
        } else if (missing.size() == 1) {
            VertexId low = -1;
            for (VertexId c : clique)
                if (c != missing[0] && (low < 0 || c < low)) low = c;
            st.add(VertexPair(missing[0], low));
        } else {
            std::sort(clique.begin(), clique.end());
            st.add(VertexPair(clique[0], clique[1]));
        }
        if (!region_covered(s.region, st))
            throw std::logic_error("shallow pocket left a face unguarded");
    }

    void up_side5(StepRecord& s, GuardState& st) {
        for (const VertexPair& e : s.region.edges) {
            bool ok = true;
            for (const auto& f : s.region.faces)
                if (!face_seen(st, f) && !edge_covers(e, f)) {
                    ok = false;
                    break;
                }
            if (ok) {
                st.add(e);
                return;
            }
        }
        throw std::logic_error("one-vertex side pocket has no completion edge");
    }

    void up_side6(StepRecord& s, GuardState& st) {
        normalize_weak_core(*s.gadget, st);
        remap_with(s, st);
        std::vector<VertexPair> ours;
        for (const auto& e : s.planned)
            if (st.add(e)) ours.push_back(e);
        if (!region_covered(s.region, st)) {
            for (const auto& e : ours) st.remove(e);
            single_edge_fallback(s.region, st, "six-vertex pocket has no covering completion");
        }
    }

    void up_deep_weak(StepRecord& s, GuardState& st) {
        normalize_weak_core(*s.gadget, st);
        remap_with(s, st);
        // finish the 3-vertex side with an edge through the removed hub
        VertexPair chosen;
        bool found = false, inserted = false;
        for (const VertexPair& e : s.region_mid.edges) {
            if (!e.contains(s.vv)) continue;
            bool ok = true;
            for (const auto& f : s.region_mid.faces)
                if (!face_seen(st, f) && !edge_covers(e, f)) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen = e;
                found = true;
                break;
            }
        }
        if (found) inserted = st.add(chosen);
        if (!region_covered(s.region, st)) {
            if (inserted) st.remove(chosen);
            single_edge_fallback(s.region, st, "deep pocket has no covering completion");
        }
    }

    void up_side7(StepRecord& s, GuardState& st) {
        const GadgetRecord& gad = *s.gadget;
        normalize_strong_core(gad, st);
        // take out the guaranteed boundary guard; its real endpoint steers
        // the exchange table
        std::vector<VertexPair> cross{VertexPair(gad.a, gad.host[0]), VertexPair(gad.a, gad.host[1]),
                                      VertexPair(gad.a, gad.host[2]), VertexPair(gad.b, gad.host[0]),
                                      VertexPair(gad.b, gad.host[1]), VertexPair(gad.c, gad.host[0])};
        std::sort(cross.begin(), cross.end());
        VertexPair taken;
        bool have = false;
        for (const auto& e : cross)
            if (st.has(e)) {
                taken = e;
                have = true;
                break;
            }
        if (!have) throw std::logic_error("strong gadget left no boundary guard");
        st.remove(taken);
        VertexId u = face_has(gad.host, taken.a) ? taken.a : taken.b;
        remap_with(s, st);

        auto withA = [&](VertexId c) { return c == s.wA ? s.gA : VertexPair(c, s.wA); };
        auto withB = [&](VertexId c) { return c == s.wB ? s.gB : VertexPair(c, s.wB); };
        VertexId x = s.vx, y = s.vy, z = s.vz, v = s.vv;
        std::array<VertexPair, 2> want;
        VertexPair xside;
        bool fixup_eligible = false;
        switch (s.side7_case) {
            case 1:
                if (u == x) {
                    want = {withA(x), withB(x)};
                    xside = withB(x);
                } else if (u == y) {
                    want = {withA(y), withB(x)};
                    xside = withB(x);
                } else {
                    want = {withB(z), withA(x)};
                    xside = withA(x);
                }
                fixup_eligible = true;
                break;
            case 2:
                want = (u == z) ? std::array<VertexPair, 2>{withB(z), withA(v)}
                                : std::array<VertexPair, 2>{withA(u), withB(s.uB)};
                break;
            case 3:
                want = (u == y) ? std::array<VertexPair, 2>{withA(y), withB(v)}
                                : std::array<VertexPair, 2>{withB(u), withA(s.uA)};
                break;
            case 4:
                want = (u == z) ? std::array<VertexPair, 2>{withB(z), withA(v)}
                                : std::array<VertexPair, 2>{withA(u), withB(v)};
                break;
            case 5:
                want = (u == z) ? std::array<VertexPair, 2>{withB(z), withA(v)}
                                : std::array<VertexPair, 2>{withA(u), withB(s.uB)};
                break;
            case 6:
                want = (u == y) ? std::array<VertexPair, 2>{withA(y), withB(v)}
                                : std::array<VertexPair, 2>{withB(u), withA(s.uA)};
                break;
            default:
                throw std::logic_error("bad endpoint case tag");
        }

        bool table_ok = want[0] != want[1] && s.region.edges.count(want[0]) &&
                        s.region.edges.count(want[1]);
        std::vector<VertexPair> ours;
        if (table_ok) {
            for (const auto& e : want)
                if (st.add(e)) ours.push_back(e);
            if (fixup_eligible && !st.guarded(v) && !st.guarded(y) && !st.guarded(z)) {
                // the empty side (v,y,z) slipped through: move our x-anchored
                // edge onto v, keeping the same far endpoint
                auto it = std::find(ours.begin(), ours.end(), xside);
                VertexPair repl(v, xside.other(x));
                if (it != ours.end() && xside.contains(x) && s.region.edges.count(repl)) {
                    st.remove(xside);
                    ours.erase(it);
                    if (st.add(repl)) ours.push_back(repl);
                }
            }
            if (!region_covered(s.region, st)) {
                for (const auto& e : ours) st.remove(e);
                table_ok = false;
            }
        }
        if (!table_ok) side7_fallback(s, st, u);
    }

    void side7_fallback(StepRecord& s, GuardState& st, VertexId u, bool count = true) {
        // the removed boundary guard kept u an endpoint; preserve that while
        // searching bounded pairs
        std::vector<VertexId> partners;
        for (const VertexPair& e : s.region.edges)
            if (e.contains(u)) partners.push_back(e.other(u));
        for (VertexId w2 : partners) {
            VertexPair e1(u, w2);
            bool i1 = st.add(e1);
            for (const VertexPair& e2 : s.region.edges) {
                if (e2 == e1) continue;
                bool i2 = st.add(e2);
                if (region_covered(s.region, st)) {
                    if (count) ++fallbacks_;
                    return;
                }
                if (i2) st.remove(e2);
            }
            if (i1) st.remove(e1);
        }
        throw std::logic_error("three-vertex sides have no two-edge completion");
    }
};

}  // namespace

StackedResult guard_stacked(const PlaneGraph& g) {
    Classification c = classify(g);
    if (!c.is_stacked)
        throw std::invalid_argument("guard_stacked: input is not a stacked triangulation");
    StackedSolver solver(*c.tree, g.vertex_count());
    return solver.run(g);
}

}  // namespace planeguard
