#include "imh/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace imh {

std::string_view to_string(SolveStatus s) {
    return s == SolveStatus::Optimal ? "optimal" : "budget_exhausted";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace detail {

CliqueEngine::CliqueEngine(const std::vector<Bitset>& rows) : n_(rows.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> degree(n_);
    for (std::size_t v = 0; v < n_; ++v)
        degree[v] = rows[v].count();
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    position_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        position_[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
        rows[order_[i]].for_each([&](std::size_t w) { adj_[i].set(position_[w]); });
}

std::size_t CliqueEngine::colour_bound(const Bitset& candidates) const {
    Bitset uncolored(n_);
    candidates.for_each([&](std::size_t v) { uncolored.set(position_[v]); });
    std::size_t colours = 0;
    while (uncolored.any()) {
        ++colours;
        Bitset open = uncolored;
        for (std::size_t v = open.first(); v < n_; v = open.next(v)) {
            uncolored.reset(v);
            open.subtract(adj_[v]);
        }
    }
    return colours;
}

class SearchState {
public:
    SearchState(const CliqueEngine& e, std::size_t target, std::uint64_t budget)
        : e_(e), n_(e.n_), target_(target), budget_(budget) {
        best_size_ = target_ > 0 ? target_ - 1 : 0;
    }

    CliqueEngine::Outcome run(const Bitset& candidates) {
        Bitset start(n_);
        candidates.for_each([&](std::size_t v) { start.set(e_.position_[v]); });
        root_colours_ = start.count();
        if (start.any()) {
            if (target_ == 1) {
                best_.assign(1, start.first());
                best_size_ = 1;
            } else {
                if (target_ == 0)
                    seed_greedy(start);
                expand(start);
            }
        }
        CliqueEngine::Outcome out;
        for (std::size_t v : best_)
            out.clique.push_back(e_.order_[v]);
        std::sort(out.clique.begin(), out.clique.end());
        out.exhausted = aborted_;
        out.nodes = nodes_;
        if (!aborted_)
            out.upper_bound = target_ > 0 && out.clique.size() < target_ ? target_ - 1 : out.clique.size();
        else
            out.upper_bound = std::max(out.clique.size(), root_colours_);
        return out;
    }

private:
    void seed_greedy(const Bitset& start) {
        Bitset cand = start;
        std::vector<std::size_t> clique;
        for (std::size_t v = cand.first(); v < n_; v = cand.first()) {
            clique.push_back(v);
            cand &= e_.adj_[v];
        }
        best_ = clique;
        best_size_ = clique.size();
    }

    bool recolor(std::size_t v, std::vector<Bitset>& classes) const {
        for (std::size_t k1 = 0; k1 < classes.size(); ++k1) {
            const std::size_t hits = e_.adj_[v].intersection_count(classes[k1]);
            if (hits == 0) {
                classes[k1].set(v);
                return true;
            }
            if (hits != 1)
                continue;
            Bitset conflict = e_.adj_[v];
            conflict &= classes[k1];
            const std::size_t w = conflict.first();
            for (std::size_t k2 = k1 + 1; k2 < classes.size(); ++k2) {
                if (!e_.adj_[w].intersects(classes[k2])) {
                    classes[k1].reset(w);
                    classes[k2].set(w);
                    classes[k1].set(v);
                    return true;
                }
            }
        }
        return false;
    }

    void expand(Bitset candidates) {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        const std::size_t depth = current_.size();
        // A vertex coloured k can lead to a clique of depth + k at most;
        // only colours reaching past the incumbent need branching.
        const std::size_t kmin = best_size_ >= depth ? best_size_ - depth + 1 : 1;

        struct Branch {
            std::size_t vertex;
            std::size_t color;
        };
        std::vector<Branch> branches;
        std::vector<Bitset> classes;
        Bitset uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset open = uncolored;
            if (color < kmin)
                classes.emplace_back(n_);
            for (std::size_t v = open.first(); v < n_; v = open.next(v)) {
                uncolored.reset(v);
                if (color >= kmin && recolor(v, classes))
                    continue;
                open.subtract(e_.adj_[v]);
                if (color < kmin)
                    classes.back().set(v);
                else
                    branches.push_back({v, color});
            }
        }
        if (depth == 0)
            root_colours_ = branches.empty() ? classes.size() : branches.back().color;

        for (auto it = branches.rbegin(); it != branches.rend(); ++it) {
            if (depth + it->color <= best_size_)
                return;
            current_.push_back(it->vertex);
            Bitset next = candidates;
            next &= e_.adj_[it->vertex];
            if (next.none()) {
                if (current_.size() > best_size_) {
                    best_ = current_;
                    best_size_ = current_.size();
                    if (target_ > 0)
                        done_ = true;
                }
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            if (done_ || aborted_)
                return;
            candidates.reset(it->vertex);
        }
    }

    const CliqueEngine& e_;
    std::size_t n_;
    std::size_t target_;
    std::uint64_t budget_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::size_t best_size_ = 0;
    std::size_t root_colours_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false;
};

CliqueEngine::Outcome CliqueEngine::search(const Bitset& candidates, std::size_t target, std::uint64_t budget) const {
    return SearchState(*this, target, budget).run(candidates);
}

CliqueSearchResult clique_search(const std::vector<Bitset>& rows, std::size_t target, std::uint64_t budget) {
    CliqueEngine engine(rows);
    Bitset all(rows.size());
    all.set_all();
    auto o = engine.search(all, target, budget);
    return {std::move(o.clique), o.exhausted, o.nodes};
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Bitset> adjacency_rows(const Graph& g) {
    std::vector<Bitset> rows(g.num_vertices(), Bitset(g.num_vertices()));
    for (const Edge& e : g.edges()) {
        rows[e.u].set(e.v);
        rows[e.v].set(e.u);
    }
    return rows;
}

std::vector<Bitset> complement_rows(const Graph& g) {
    auto rows = adjacency_rows(g);
    for (std::size_t v = 0; v < rows.size(); ++v) {
        rows[v].flip_all();
        rows[v].reset(v);
    }
    return rows;
}

// Row i lists the edges of g that conflict with edge i: those with an
// endpoint in the closed neighbourhood of either endpoint of edge i.
std::vector<Bitset> conflict_rows(const Graph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<Bitset> incident(g.num_vertices(), Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        incident[edges[i].u].set(i);
        incident[edges[i].v].set(i);
    }
    std::vector<Bitset> closed(g.num_vertices(), Bitset(m));
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
        closed[x] = incident[x];
        for (VertexId y : g.neighbors(x))
            closed[x] |= incident[y];
    }
    std::vector<Bitset> rows(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i] = closed[edges[i].u];
        rows[i] |= closed[edges[i].v];
        rows[i].reset(i);
    }
    return rows;
}

std::vector<Bitset> compatibility_rows(const Graph& g) {
    auto rows = conflict_rows(g);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].flip_all();
        rows[i].reset(i);
    }
    return rows;
}

VertexSet to_vertex_set(const std::vector<std::size_t>& ids) {
    return VertexSet(ids.begin(), ids.end());
}

EdgeSet to_edge_set(const Graph& g, const std::vector<std::size_t>& ids) {
    EdgeSet out;
    out.reserve(ids.size());
    for (std::size_t i : ids)
        out.push_back(g.edges()[i]);
    std::sort(out.begin(), out.end());
    return out;
}

SolveResult optimize(const std::vector<Bitset>& rows, std::uint64_t budget) {
    const auto start = Clock::now();
    auto found = detail::clique_search(rows, 0, budget);
    SolveResult r;
    r.value = found.clique.size();
    r.vertices = to_vertex_set(found.clique);
    r.status = found.exhausted ? SolveStatus::BudgetExhausted : SolveStatus::Optimal;
    r.nodes_explored = found.nodes;
    r.elapsed = Clock::now() - start;
    return r;
}

DecisionResult decide(const std::vector<Bitset>& rows, std::size_t target, std::uint64_t budget) {
    const auto start = Clock::now();
    DecisionResult r;
    if (target == 0) {
        r.verdict = Verdict::Yes;
        r.elapsed = Clock::now() - start;
        return r;
    }
    auto found = detail::clique_search(rows, target, budget);
    if (found.clique.size() >= target)
        r.verdict = Verdict::Yes;
    else
        r.verdict = found.exhausted ? Verdict::Unknown : Verdict::No;
    r.vertices = to_vertex_set(found.clique);
    r.nodes_explored = found.nodes;
    r.elapsed = Clock::now() - start;
    return r;
}

}  // namespace

SolveResult max_clique(const Graph& g, std::uint64_t budget) { return optimize(adjacency_rows(g), budget); }

SolveResult max_independent_set(const Graph& g, std::uint64_t budget) {
    return optimize(complement_rows(g), budget);
}

SolveResult max_induced_matching(const Graph& g, std::uint64_t budget) {
    auto r = optimize(compatibility_rows(g), budget);
    std::vector<std::size_t> ids(r.vertices.begin(), r.vertices.end());
    r.edges = to_edge_set(g, ids);
    r.vertices.clear();
    return r;
}

DecisionResult has_clique(const Graph& g, std::size_t target, std::uint64_t budget) {
    return decide(adjacency_rows(g), target, budget);
}

DecisionResult has_independent_set(const Graph& g, std::size_t target, std::uint64_t budget) {
    return decide(complement_rows(g), target, budget);
}

DecisionResult has_induced_matching(const Graph& g, std::size_t target, std::uint64_t budget) {
    auto r = decide(compatibility_rows(g), target, budget);
    std::vector<std::size_t> ids(r.vertices.begin(), r.vertices.end());
    r.edges = to_edge_set(g, ids);
    r.vertices.clear();
    return r;
}

Graph conflict_graph(const Graph& g) {
    const auto rows = conflict_rows(g);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i].for_each([&](std::size_t j) {
            if (j > i)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        });
    return Graph(rows.size(), std::move(edges));
}

}  // namespace imh

namespace imh {

namespace {

class PartitionedSearch {
public:
    PartitionedSearch(const Graph& g, std::size_t target, const std::vector<std::vector<std::size_t>>& parts,
                      std::uint64_t budget)
        : m_(g.num_edges()), target_(target), budget_(budget), rows_(compatibility_rows(g)) {
        std::vector<int> owner(m_, -1);
        for (const auto& part : parts) {
            std::vector<std::size_t> members;
            for (std::size_t e : part) {
                if (e >= m_)
                    throw PreconditionError("partition names edge index " + std::to_string(e) + " out of range");
                if (owner[e] != -1)
                    throw PreconditionError("edge index " + std::to_string(e) + " appears in two parts");
                owner[e] = static_cast<int>(parts_.size());
                members.push_back(e);
            }
            if (!members.empty())
                add_part(std::move(members));
        }
        std::vector<std::size_t> rest;
        for (std::size_t e = 0; e < m_; ++e)
            if (owner[e] == -1)
                rest.push_back(e);
        if (!rest.empty())
            add_part(std::move(rest));
    }

    DecisionResult run() {
        DecisionResult r;
        Bitset all(m_);
        all.set_all();
        if (target_ == 0 || expand(all))
            r.verdict = Verdict::Yes;
        else
            r.verdict = aborted_ ? Verdict::Unknown : Verdict::No;
        r.vertices.assign(witness_.begin(), witness_.end());
        r.nodes_explored = nodes_;
        return r;
    }

private:
    struct Part {
        std::vector<std::size_t> members;  // global edge indices, ascending
        detail::CliqueEngine engine;
    };

    void add_part(std::vector<std::size_t> members) {
        std::vector<Bitset> local(members.size(), Bitset(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if (rows_[members[i]].test(members[j]))
                    local[i].set(j);
        parts_.push_back({std::move(members), detail::CliqueEngine(local)});
    }

    Bitset local_candidates(std::size_t j, const Bitset& open) const {
        const auto& members = parts_[j].members;
        Bitset local(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            if (open.test(members[i]))
                local.set(i);
        return local;
    }

    // Exact (or, past the budget, colouring-based) clique number of the
    // open candidates of part j in the compatibility graph.
    std::size_t part_bound(std::size_t j, const Bitset& open) {
        const Bitset local = local_candidates(j, open);
        if (local.none())
            return 0;
        std::string key(reinterpret_cast<const char*>(&j), sizeof j);
        for (std::size_t w = 0; w < local.num_words(); ++w) {
            const auto word = local.word(w);
            key.append(reinterpret_cast<const char*>(&word), sizeof word);
        }
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const std::uint64_t left = nodes_ < budget_ ? budget_ - nodes_ : 0;
        const auto o = parts_[j].engine.search(local, 0, left);
        nodes_ += o.nodes;
        const std::size_t bound = o.exhausted ? parts_[j].engine.colour_bound(local) : o.upper_bound;
        if (!o.exhausted)
            memo_.emplace(std::move(key), bound);
        return bound;
    }

    bool expand(Bitset open) {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        if (chosen_.size() >= target_) {
            witness_ = chosen_;
            return true;
        }
        std::vector<std::size_t> bounds(parts_.size());
        std::size_t total = 0;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            bounds[j] = part_bound(j, open);
            total += bounds[j];
        }
        if (aborted_ || nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        if (chosen_.size() + total < target_)
            return false;

        // Branch on the part with a positive share and the fewest open
        // candidates.
        std::size_t pick = parts_.size();
        std::size_t pick_open = 0;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (bounds[j] == 0)
                continue;
            const std::size_t count = local_candidates(j, open).count();
            if (pick == parts_.size() || count < pick_open) {
                pick = j;
                pick_open = count;
            }
        }
        const std::size_t others = total - bounds[pick];
        for (std::size_t v : parts_[pick].members) {
            if (!open.test(v))
                continue;
            chosen_.push_back(v);
            Bitset next = open;
            next &= rows_[v];
            const bool found = expand(std::move(next));
            chosen_.pop_back();
            if (found)
                return true;
            if (aborted_)
                return false;
            open.reset(v);
            if (chosen_.size() + others + part_bound(pick, open) < target_)
                return false;
        }
        // Solutions taking nothing from this part remain.
        return expand(std::move(open));
    }

    std::size_t m_;
    std::size_t target_;
    std::uint64_t budget_;
    std::vector<Bitset> rows_;
    std::vector<Part> parts_;
    std::unordered_map<std::string, std::size_t> memo_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> witness_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

DecisionResult has_induced_matching_partitioned(const Graph& g, std::size_t target,
                                                const std::vector<std::vector<std::size_t>>& parts,
                                                std::uint64_t budget) {
    const auto start = std::chrono::steady_clock::now();
    auto r = PartitionedSearch(g, target, parts, budget).run();
    std::vector<std::size_t> ids(r.vertices.begin(), r.vertices.end());
    r.edges = to_edge_set(g, ids);
    r.vertices.clear();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace imh
