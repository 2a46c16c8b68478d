#include "rgiso/mcis.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace rgiso {

namespace {

using Clock = std::chrono::steady_clock;

// A label class: vertices of each graph with the same adjacency signature
// towards the current partial mapping. Stored as segments [l, l+ln) and
// [r, r+rn) of two shared vertex arrays that get partitioned in place.
struct Bidomain {
    int l, r, ln, rn;
};

class McSplitSearch {
public:
    McSplitSearch(const Graph& g1, const Graph& g2, const SearchBudget& budget,
                  int decision_k)
        : g1_(g1), g2_(g2), decision_k_(decision_k) {
        n1_ = g1.vertex_count();
        n2_ = g2.vertex_count();
        ub_ = std::min(n1_, n2_);
        max_nodes_ = budget.max_nodes.value_or(UINT64_MAX);
        if (budget.max_time)
            deadline_ = Clock::now() + *budget.max_time;
        if (decision_k_ < 0 && budget.target)
            target_ = std::max(0, *budget.target);

        left_.resize(n1_);
        right_.resize(n2_);
        std::iota(left_.begin(), left_.end(), 0);
        std::iota(right_.begin(), right_.end(), 0);
        dom_stack_.resize(n1_ + 3);
        cand_stack_.resize(n1_ + 3);
        cur_.reserve(ub_);
        best_.reserve(ub_);
    }

    void run() {
        auto& root = dom_stack_[0];
        if (n1_ > 0 && n2_ > 0)
            root.push_back({0, 0, n1_, n2_});
        solve(0, root);
    }

    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }
    bool found() const { return found_; }
    bool proved_optimal() const {
        if (aborted_)
            return false;
        if (stopped_at_target_)
            return static_cast<int>(best_.size()) >= ub_;
        return true;
    }
    const std::vector<std::pair<int, int>>& best() const { return best_; }

private:
    bool budget_exceeded() {
        if (nodes_ > max_nodes_)
            return true;
        if (deadline_ && Clock::now() > *deadline_)
            return true;
        return false;
    }

    void solve(int depth, std::vector<Bidomain>& doms) {
        ++nodes_;
        if ((nodes_ & 1023u) == 0 && budget_exceeded())
            aborted_ = true;
        if (aborted_ || done_)
            return;

        const int cur_size = static_cast<int>(cur_.size());
        if (decision_k_ >= 0) {
            if (cur_size >= decision_k_) {
                best_ = cur_;
                found_ = true;
                done_ = true;
                return;
            }
        } else if (cur_size > static_cast<int>(best_.size())) {
            best_ = cur_;
            if (static_cast<int>(best_.size()) >= ub_) {
                done_ = true;
                return;
            }
            if (target_ >= 0 && static_cast<int>(best_.size()) >= target_) {
                stopped_at_target_ = true;
                done_ = true;
                return;
            }
        }

        int bound = cur_size;
        for (const auto& d : doms)
            bound += std::min(d.ln, d.rn);
        if (decision_k_ >= 0 ? bound < decision_k_ : bound <= static_cast<int>(best_.size()))
            return;

        // class with the smallest max(|L|,|R|); ties by lowest left vertex id
        int bd_idx = -1, bd_key = INT_MAX, bd_minv = INT_MAX;
        for (std::size_t i = 0; i < doms.size(); ++i) {
            const auto& d = doms[i];
            if (d.ln == 0 || d.rn == 0)
                continue;
            const int key = std::max(d.ln, d.rn);
            if (key > bd_key)
                continue;
            int minv = INT_MAX;
            for (int t = d.l; t < d.l + d.ln; ++t)
                minv = std::min(minv, left_[t]);
            if (key < bd_key || minv < bd_minv) {
                bd_idx = static_cast<int>(i);
                bd_key = key;
                bd_minv = minv;
            }
        }
        if (bd_idx < 0)
            return;
        Bidomain& bd = doms[static_cast<std::size_t>(bd_idx)];

        // branch vertex: highest g1-degree in the class, ties by lowest id
        int vpos = bd.l;
        for (int t = bd.l + 1; t < bd.l + bd.ln; ++t) {
            const int a = left_[t], b = left_[vpos];
            if (g1_.degree(a) > g1_.degree(b) || (g1_.degree(a) == g1_.degree(b) && a < b))
                vpos = t;
        }
        const int v = left_[vpos];
        std::swap(left_[vpos], left_[bd.l + bd.ln - 1]);
        bd.ln -= 1;

        // candidates in descending g2-degree, ties by lowest id
        auto& cands = cand_stack_[depth];
        cands.assign(right_.begin() + bd.r, right_.begin() + bd.r + bd.rn);
        std::sort(cands.begin(), cands.end(), [this](int a, int b) {
            if (g2_.degree(a) != g2_.degree(b))
                return g2_.degree(a) > g2_.degree(b);
            return a < b;
        });

        for (const int w : cands) {
            if (aborted_ || done_)
                break;
            int wpos = bd.r;
            while (right_[wpos] != w)
                ++wpos;
            std::swap(right_[wpos], right_[bd.r + bd.rn - 1]);
            bd.rn -= 1;

            auto& kids = dom_stack_[depth + 1];
            kids.clear();
            for (const auto& d : doms) {
                if (d.ln == 0 || d.rn == 0)
                    continue;
                const int la = partition(left_, d.l, d.ln, g1_, v);
                const int ra = partition(right_, d.r, d.rn, g2_, w);
                if (la > 0 && ra > 0)
                    kids.push_back({d.l, d.r, la, ra});
                if (d.ln > la && d.rn > ra)
                    kids.push_back({d.l + la, d.r + ra, d.ln - la, d.rn - ra});
            }
            cur_.emplace_back(v, w);
            solve(depth + 1, kids);
            cur_.pop_back();

            bd.rn += 1;
        }

        if (!aborted_ && !done_)
            solve(depth + 1, doms); // leave v unmapped
        bd.ln += 1;
    }

    // moves vertices adjacent to pivot to the front of the segment,
    // returns how many are adjacent
    static int partition(std::vector<int>& arr, int start, int len, const Graph& g,
                         int pivot) {
        int i = start;
        for (int t = start; t < start + len; ++t)
            if (g.adjacent(pivot, arr[t]))
                std::swap(arr[i++], arr[t]);
        return i - start;
    }

    const Graph& g1_;
    const Graph& g2_;
    int n1_, n2_, ub_;
    int decision_k_;
    int target_ = -1;
    std::uint64_t max_nodes_;
    std::optional<Clock::time_point> deadline_;

    std::vector<int> left_, right_;
    std::vector<std::vector<Bidomain>> dom_stack_;
    std::vector<std::vector<int>> cand_stack_;
    std::vector<std::pair<int, int>> cur_, best_;

    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false;
    bool found_ = false;
    bool stopped_at_target_ = false;
};

} // namespace

SolveResult max_common_induced_subgraph(const Graph& g1, const Graph& g2,
                                        const SearchBudget& budget) {
    const auto start = Clock::now();
    McSplitSearch search(g1, g2, budget, -1);
    search.run();

    SolveResult result;
    result.mapping = search.best();
    result.size = static_cast<int>(result.mapping.size());
    result.nodes_explored = search.nodes();
    result.optimal = search.proved_optimal();
    result.elapsed = Clock::now() - start;
    if (!is_induced_isomorphism(g1, g2, result.mapping))
        throw std::logic_error("max_common_induced_subgraph: witness failed verification");
    return result;
}

Ternary decision_common(const Graph& g1, const Graph& g2, int k,
                        const SearchBudget& budget) {
    if (k < 0)
        throw std::invalid_argument("decision_common: k must be non-negative");
    if (k == 0)
        return Ternary::yes; // the empty mapping is a witness
    if (k > std::min(g1.vertex_count(), g2.vertex_count()))
        return Ternary::no;

    McSplitSearch search(g1, g2, budget, k);
    search.run();
    if (search.found()) {
        if (static_cast<int>(search.best().size()) != k ||
            !is_induced_isomorphism(g1, g2, search.best()))
            throw std::logic_error("decision_common: witness failed verification");
        return Ternary::yes;
    }
    return search.aborted() ? Ternary::unknown : Ternary::no;
}

namespace {

// used only by the brute-force oracle; no injectivity checks needed because
// subsets and permutations are injective by construction
bool pairs_consistent(const Graph& g1, const Graph& g2, const int* sub1, const int* sub2,
                      int k) {
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g1.adjacent(sub1[a], sub1[b]) != g2.adjacent(sub2[a], sub2[b]))
                return false;
    return true;
}

bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

SolveResult brute_force_mcis(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() > 8 || g2.vertex_count() > 8)
        throw std::invalid_argument("brute_force_mcis: both graphs must have at most 8 vertices");

    const auto start = Clock::now();
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    SolveResult result;
    result.optimal = true;

    for (int k = std::min(n1, n2); k >= 1; --k) {
        std::vector<int> sub1(k);
        std::iota(sub1.begin(), sub1.end(), 0);
        do {
            std::vector<int> sub2(k);
            std::iota(sub2.begin(), sub2.end(), 0);
            do {
                std::vector<int> mapped(sub2);
                std::sort(mapped.begin(), mapped.end());
                do {
                    ++result.nodes_explored;
                    if (pairs_consistent(g1, g2, sub1.data(), mapped.data(), k)) {
                        result.size = k;
                        for (int i = 0; i < k; ++i)
                            result.mapping.emplace_back(sub1[i], mapped[i]);
                        result.elapsed = Clock::now() - start;
                        return result;
                    }
                } while (std::next_permutation(mapped.begin(), mapped.end()));
            } while (next_subset(sub2, n2));
        } while (next_subset(sub1, n1));
    }
    result.elapsed = Clock::now() - start;
    return result; // size 0: at least one side is empty
}

} // namespace rgiso
