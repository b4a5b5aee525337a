#include "ppg2/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "ppg2/classify.hpp"
#include "ppg2/iso.hpp"

namespace ppg2 {

namespace {

void check_cap(int max_n) {
    if (max_n < 1 || max_n > kEnumerateCap)
        throw SizeBoundError("enumerate: max_n must be in 1.." + std::to_string(kEnumerateCap) +
                             ", got " + std::to_string(max_n));
}

// All children of `parent` obtained by attaching a new vertex to a nonempty
// independent set, as canonical graph6 keys.
void children_of(const Graph& parent, std::vector<std::string>& out) {
    const int n = parent.order();
    // Enumerate independent sets by ascending extension.
    std::vector<std::uint64_t> stack_set{0};
    std::vector<int> stack_next{0};
    while (!stack_set.empty()) {
        std::uint64_t set = stack_set.back();
        int next = stack_next.back();
        stack_set.pop_back();
        stack_next.pop_back();
        if (set != 0) {
            Graph child(n + 1);
            std::vector<std::pair<int, int>> edges = parent.edges();
            for (std::uint64_t m = set; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                edges.emplace_back(v, n);
            }
            child = Graph::from_edge_list(n + 1, edges);
            out.push_back(canonical_form(child).graph6);
        }
        for (int v = next; v < n; ++v)
            if ((parent.neighbors(v) & set) == 0) {
                stack_set.push_back(set | (std::uint64_t{1} << v));
                stack_next.push_back(v + 1);
            }
    }
}

// Sorted canonical keys of all connected triangle-free graphs of order n,
// given the previous level.  Splitting parents across threads changes
// nothing: the merged key set is schedule-independent and sorted at the end.
std::vector<std::string> next_level(const std::vector<std::string>& parents, int jobs) {
    std::vector<std::vector<std::string>> buckets(std::max(jobs, 1));
    std::atomic<size_t> cursor{0};
    auto work = [&](int worker) {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= parents.size()) break;
            children_of(decode_graph6(parents[i]), buckets[worker]);
        }
    };
    if (jobs <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::unordered_set<std::string> seen;
    for (auto& bucket : buckets)
        for (auto& key : bucket) seen.insert(std::move(key));
    std::vector<std::string> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Runs `body` on every level: body(n, keys of all connected triangle-free
// graphs of order n, sorted).
void run_levels(int max_n, int jobs,
                const std::function<void(int, const std::vector<std::string>&)>& body) {
    check_cap(max_n);
    std::vector<std::string> level{canonical_form(Graph(1)).graph6};
    body(1, level);
    for (int n = 2; n <= max_n; ++n) {
        level = next_level(level, jobs);
        body(n, level);
    }
}

}  // namespace

void enumerate_mtf(int max_n, const std::function<void(const Graph&)>& emit, int jobs) {
    run_levels(max_n, jobs, [&](int, const std::vector<std::string>& keys) {
        for (const auto& key : keys) {
            Graph g = decode_graph6(key);
            if (is_maximal_triangle_free(g)) emit(g);
        }
    });
}

std::vector<Graph> enumerate_mtf(int max_n, int jobs) {
    std::vector<Graph> out;
    enumerate_mtf(max_n, [&](const Graph& g) { out.push_back(g); }, jobs);
    return out;
}

EnumerationReport verify_theorem2(int max_n, int jobs) {
    EnumerationReport report;
    report.max_n = max_n;
    run_levels(max_n, jobs, [&](int n, const std::vector<std::string>& keys) {
        OrderReport order_report;
        order_report.n = n;
        for (const auto& key : keys) {
            Graph g = decode_graph6(key);
            if (!is_maximal_triangle_free(g)) continue;
            if (diameter_of(g) != std::optional<int>{2}) continue;
            ++order_report.total;
            try {
                Classification verdict = classify(g);
                if (const Member* m = std::get_if<Member>(&verdict)) {
                    Graph target = construct(m->family);
                    bool valid = g.order() == target.order();
                    for (int u = 0; valid && u < g.order(); ++u)
                        for (int v = u + 1; valid && v < g.order(); ++v)
                            if (g.adjacent(u, v) !=
                                target.adjacent(m->iso_witness[u], m->iso_witness[v]))
                                valid = false;
                    if (!valid) {
                        order_report.anomalies.push_back(key + " member-witness-invalid");
                        continue;
                    }
                    ++order_report.members;
                } else if (const NonMember* nm = std::get_if<NonMember>(&verdict)) {
                    if (!verify_model(nm->certificate, obstruction_pattern(nm->obstruction), g)) {
                        order_report.anomalies.push_back(key + " certificate-invalid");
                        continue;
                    }
                    ++order_report.nonmembers;
                    ++order_report.obstructions[static_cast<int>(nm->obstruction)];
                } else {
                    order_report.anomalies.push_back(key + " out-of-scope-after-filter");
                }
            } catch (const Error& e) {
                order_report.anomalies.push_back(key + " " + e.what());
            }
        }
        report.per_order.push_back(std::move(order_report));
    });
    return report;
}

DominationReport verify_domination(int max_n, int jobs) {
    DominationReport report;
    report.max_n = max_n;
    run_levels(max_n, jobs, [&](int, const std::vector<std::string>& keys) {
        for (const auto& key : keys) {
            Graph g = decode_graph6(key);
            if (!is_maximal_triangle_free(g)) continue;
            if (diameter_of(g) != std::optional<int>{2}) continue;
            try {
                if (!std::holds_alternative<Member>(classify(g))) continue;
                ++report.members_checked;
                DominationResult dom = domination_number(g);
                report.max_gamma = std::max(report.max_gamma, dom.gamma);
                if (dom.gamma >= 3) report.gamma3.push_back(key);
            } catch (const Error& e) {
                report.anomalies.push_back(key + " " + e.what());
            }
        }
    });
    constexpr SpecialGraph seven[] = {SpecialGraph::p10,       SpecialGraph::w8,
                                      SpecialGraph::w8_plus,   SpecialGraph::m11,
                                      SpecialGraph::m11_minus, SpecialGraph::m11_eq,
                                      SpecialGraph::k34_star};
    for (SpecialGraph s : seven) {
        FamilySpec spec = FamilySpec::fixed(s);
        if (order_and_size(spec).first <= max_n)
            report.expected_gamma3.push_back(canonical_form(construct(spec)).graph6);
    }
    std::sort(report.expected_gamma3.begin(), report.expected_gamma3.end());
    std::sort(report.gamma3.begin(), report.gamma3.end());
    return report;
}

}  // namespace ppg2
