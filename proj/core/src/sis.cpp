#include "rgiso/sis.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace rgiso {

namespace {

using Clock = std::chrono::steady_clock;

class SisSearch {
public:
    SisSearch(const Graph& pattern, const Graph& target, const SearchBudget& budget,
              bool counting)
        : pat_(pattern), tgt_(target), counting_(counting) {
        np_ = pat_.vertex_count();
        nt_ = tgt_.vertex_count();
        words_ = tgt_.words_per_row();
        max_nodes_ = budget.max_nodes.value_or(UINT64_MAX);
        if (budget.max_time)
            deadline_ = Clock::now() + *budget.max_time;
        build_order();
        build_complement_rows();
        assign_.assign(np_, -1);
        dom_.assign(static_cast<std::size_t>(np_ + 1) * np_ * words_, 0);
    }

    void run() {
        if (np_ == 0) {
            found_ = true;
            return;
        }
        if (!seed_domains())
            return; // a degree filter emptied some domain: proven absent
        solve(0);
    }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }
    const BigCount& count() const { return count_; }

    std::vector<std::pair<int, int>> witness() const {
        std::vector<std::pair<int, int>> w;
        w.reserve(static_cast<std::size_t>(np_));
        for (int d = 0; d < np_; ++d)
            w.emplace_back(order_[d], assign_[d]);
        std::sort(w.begin(), w.end());
        return w;
    }

private:
    // Static variable order: highest pattern degree first, then prefer
    // vertices adjacent to the ordered prefix, then lowest id.
    void build_order() {
        order_.reserve(static_cast<std::size_t>(np_));
        std::vector<bool> chosen(static_cast<std::size_t>(np_), false);
        std::vector<bool> touches_prefix(static_cast<std::size_t>(np_), false);
        for (int step = 0; step < np_; ++step) {
            int best = -1;
            for (int u = 0; u < np_; ++u) {
                if (chosen[static_cast<std::size_t>(u)])
                    continue;
                if (best < 0) {
                    best = u;
                    continue;
                }
                const int du = pat_.degree(u), db = pat_.degree(best);
                const bool cu = touches_prefix[static_cast<std::size_t>(u)];
                const bool cb = touches_prefix[static_cast<std::size_t>(best)];
                if (du != db ? du > db : (cu != cb ? cu : u < best))
                    best = u;
            }
            order_.push_back(best);
            chosen[static_cast<std::size_t>(best)] = true;
            for (int u = 0; u < np_; ++u)
                if (!chosen[static_cast<std::size_t>(u)] && pat_.adjacent(best, u))
                    touches_prefix[static_cast<std::size_t>(u)] = true;
        }
    }

    // Complement rows of the target with the diagonal bit cleared, so both
    // masks exclude the newly assigned vertex and keep the map injective.
    void build_complement_rows() {
        comp_rows_.assign(static_cast<std::size_t>(nt_) * words_, 0);
        const std::uint64_t tail =
            (nt_ & 63) ? ((std::uint64_t{1} << (nt_ & 63)) - 1) : ~std::uint64_t{0};
        for (int v = 0; v < nt_; ++v) {
            const std::uint64_t* row = tgt_.row(v);
            std::uint64_t* out = comp_row(v);
            for (int w = 0; w < words_; ++w)
                out[w] = ~row[w];
            if (words_ > 0)
                out[words_ - 1] &= tail;
            out[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    std::uint64_t* comp_row(int v) {
        return comp_rows_.data() + static_cast<std::size_t>(v) * words_;
    }
    std::uint64_t* dom(int level, int pos) {
        return dom_.data() +
               (static_cast<std::size_t>(level) * np_ + pos) * words_;
    }

    bool seed_domains() {
        for (int i = 0; i < np_; ++i) {
            const int u = order_[static_cast<std::size_t>(i)];
            const int du = pat_.degree(u);
            const int cu = np_ - 1 - du;
            std::uint64_t* d = dom(0, i);
            bool any = false;
            for (int v = 0; v < nt_; ++v) {
                if (tgt_.degree(v) >= du && nt_ - 1 - tgt_.degree(v) >= cu) {
                    d[v >> 6] |= std::uint64_t{1} << (v & 63);
                    any = true;
                }
            }
            if (!any)
                return false;
        }
        return true;
    }

    bool budget_exceeded() {
        if (nodes_ > max_nodes_)
            return true;
        if (deadline_ && Clock::now() > *deadline_)
            return true;
        return false;
    }

    // returns true when the search should unwind completely
    bool solve(int d) {
        if (d == np_) {
            if (counting_) {
                ++count_;
                return false;
            }
            found_ = true;
            return true;
        }
        const int u = order_[static_cast<std::size_t>(d)];
        const std::uint64_t* candidates = dom(d, d);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits) {
                const int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;

                ++nodes_;
                if ((nodes_ & 1023u) == 0 && budget_exceeded()) {
                    aborted_ = true;
                    return true;
                }

                bool dead = false;
                for (int i = d + 1; i < np_; ++i) {
                    const std::uint64_t* src = dom(d, i);
                    std::uint64_t* dst = dom(d + 1, i);
                    const std::uint64_t* mask =
                        pat_.adjacent(u, order_[static_cast<std::size_t>(i)])
                            ? tgt_.row(v)
                            : comp_row(v);
                    std::uint64_t any = 0;
                    for (int ww = 0; ww < words_; ++ww)
                        any |= (dst[ww] = src[ww] & mask[ww]);
                    if (!any) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) {
                    assign_[static_cast<std::size_t>(d)] = v;
                    if (solve(d + 1))
                        return true;
                }
            }
        }
        return false;
    }

    const Graph& pat_;
    const Graph& tgt_;
    bool counting_;
    int np_, nt_, words_;
    std::uint64_t max_nodes_;
    std::optional<Clock::time_point> deadline_;

    std::vector<int> order_;
    std::vector<int> assign_;
    std::vector<std::uint64_t> comp_rows_;
    std::vector<std::uint64_t> dom_;

    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool aborted_ = false;
    BigCount count_ = 0;
};

} // namespace

SisResult contains_induced(const Graph& pattern, const Graph& target,
                           const SearchBudget& budget) {
    const auto start = Clock::now();
    SisSearch search(pattern, target, budget, /*counting=*/false);
    search.run();

    SisResult result;
    result.nodes_explored = search.nodes();
    if (search.found()) {
        result.found = Ternary::yes;
        result.witness = search.witness();
        if (!is_induced_isomorphism(pattern, target, *result.witness) ||
            static_cast<int>(result.witness->size()) != pattern.vertex_count())
            throw std::logic_error("contains_induced: witness failed verification");
    } else {
        result.found = search.aborted() ? Ternary::unknown : Ternary::no;
    }
    result.elapsed = Clock::now() - start;
    return result;
}

BigCount count_induced_embeddings(const Graph& pattern, const Graph& target) {
    SisSearch search(pattern, target, SearchBudget::unlimited(), /*counting=*/true);
    search.run();
    if (pattern.vertex_count() == 0)
        return 1; // exactly one empty embedding
    return search.count();
}

namespace {

void enumerate_injections(const Graph& pattern, const Graph& target, int depth,
                          std::vector<int>& assign, std::vector<bool>& used, bool& found,
                          BigCount& count) {
    const int np = pattern.vertex_count();
    if (depth == np) {
        for (int a = 0; a < np; ++a)
            for (int b = a + 1; b < np; ++b)
                if (pattern.adjacent(a, b) != target.adjacent(assign[a], assign[b]))
                    return;
        found = true;
        ++count;
        return;
    }
    for (int v = 0; v < target.vertex_count(); ++v) {
        if (used[static_cast<std::size_t>(v)])
            continue;
        used[static_cast<std::size_t>(v)] = true;
        assign[static_cast<std::size_t>(depth)] = v;
        enumerate_injections(pattern, target, depth + 1, assign, used, found, count);
        used[static_cast<std::size_t>(v)] = false;
    }
}

} // namespace

std::pair<bool, BigCount> brute_force_sis(const Graph& pattern, const Graph& target) {
    if (pattern.vertex_count() > 6 || target.vertex_count() > 10)
        throw std::invalid_argument(
            "brute_force_sis: requires pattern.n <= 6 and target.n <= 10");
    if (pattern.vertex_count() == 0)
        return {true, 1};
    std::vector<int> assign(static_cast<std::size_t>(pattern.vertex_count()), -1);
    std::vector<bool> used(static_cast<std::size_t>(target.vertex_count()), false);
    bool found = false;
    BigCount count = 0;
    enumerate_injections(pattern, target, 0, assign, used, found, count);
    return {found, count};
}

} // namespace rgiso
