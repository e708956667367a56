// SPDX-License-Identifier: Apache-2.0
#include "kcol/events.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"

namespace kcol {

namespace {

using Kind = TripleClassification::Kind;

// Classification of every triple i < j < k, addressable in any index order.
class TripleTable {
  public:
    TripleTable(const Scene& scene, const EnumerateOptions& options) : n_(scene.size()) {
        slot_.assign(n_ * n_ * n_, kNone);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                for (std::size_t k = j + 1; k < n_; ++k) {
                    const auto id = static_cast<std::uint32_t>(triples_.size());
                    triples_.push_back({i, j, k});
                    const std::array<std::array<std::size_t, 3>, 6> orders{
                        {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
                    for (const auto& [a, b, c] : orders) slot_[(a * n_ + b) * n_ + c] = id;
                }
            }
        }
        classes_.resize(triples_.size());
        detail::parallel_for(triples_.size(), options.threads, [&](std::size_t t) {
            const auto& [i, j, k] = triples_[t];
            classes_[t] = classify_triple(scene[i], scene[j], scene[k], options.solve);
        });
    }

    std::size_t size() const { return triples_.size(); }
    const std::array<std::size_t, 3>& members(std::size_t t) const { return triples_[t]; }
    const TripleClassification& at(std::size_t t) const { return classes_[t]; }
    const TripleClassification& at(std::size_t a, std::size_t b, std::size_t c) const {
        return classes_[slot_[(a * n_ + b) * n_ + c]];
    }

  private:
    static constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::size_t n_;
    std::vector<std::array<std::size_t, 3>> triples_;
    std::vector<std::uint32_t> slot_;
    std::vector<TripleClassification> classes_;
};

struct TimedTriple {
    AlgebraicTime time;
    std::size_t triple;
};

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Expands every triple collinear at one shared time into maximal events.
std::vector<CollinearityEvent> expand_time_group(const Scene& scene, const TripleTable& table,
                                                 std::span<const TimedTriple> group) {
    const AlgebraicTime& t = group.front().time;
    const std::size_t n = scene.size();
    std::vector<ExactPoint> pos;
    pos.reserve(n);
    for (const auto& p : scene.points()) pos.push_back(position_at(p, t));

    std::vector<CollinearityEvent> out;
    // Member sets already produced at this time, including filtered ones.
    std::vector<std::vector<std::size_t>> covered;

    for (const auto& entry : group) {
        const auto [i, j, k] = table.members(entry.triple);
        const bool seen = std::any_of(covered.begin(), covered.end(), [&](const auto& m) {
            return contains(m, i) && contains(m, j) && contains(m, k);
        });
        if (seen) continue;

        // Provisional anchors; a triple that meets in one point is found again
        // through a triple with a member off the collision point.
        std::size_t u = 0, v = 0;
        if (pos[i] != pos[j]) {
            u = i, v = j;
        } else if (pos[i] != pos[k]) {
            u = i, v = k;
        } else {
            continue;
        }

        CollinearityEvent ev;
        ev.time = t;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == u || w == v || orientation(pos[u], pos[v], pos[w]).is_zero()) ev.members.push_back(w);
        }
        covered.push_back(ev.members);

        // Canonical anchors: the first member pair at distinct positions.
        bool found = false;
        for (std::size_t a = 0; a < ev.members.size() && !found; ++a) {
            for (std::size_t b = a + 1; b < ev.members.size() && !found; ++b) {
                if (pos[ev.members[a]] != pos[ev.members[b]]) {
                    ev.anchors = {ev.members[a], ev.members[b]};
                    found = true;
                }
            }
        }

        // The members are always collinear iff each is always collinear with
        // the two anchors, whose trajectories are distinct lines.
        const auto [a0, a1] = ev.anchors;
        const bool always = std::all_of(ev.members.begin(), ev.members.end(), [&](std::size_t w) {
            return w == a0 || w == a1 || table.at(a0, a1, w).kind == Kind::AlwaysCollinear;
        });
        if (always) continue;

        const auto& m = ev.members;
        for (std::size_t x = 0; x < m.size() && !ev.tangential; ++x) {
            for (std::size_t y = x + 1; y < m.size() && !ev.tangential; ++y) {
                for (std::size_t z = y + 1; z < m.size() && !ev.tangential; ++z) {
                    const auto& cls = table.at(m[x], m[y], m[z]);
                    ev.tangential = cls.kind == Kind::CollinearAt && cls.tangential && same_time(cls.times.front(), t);
                }
            }
        }
        for (std::size_t x = 0; x < m.size() && !ev.contains_subcollision; ++x) {
            for (std::size_t y = x + 1; y < m.size() && !ev.contains_subcollision; ++y) {
                ev.contains_subcollision = pos[m[x]] == pos[m[y]];
            }
        }
        out.push_back(std::move(ev));
    }
    return out;
}

}  // namespace

bool event_less(const CollinearityEvent& a, const CollinearityEvent& b) {
    const auto c = compare_times(a.time, b.time);
    if (c != 0) return c < 0;
    return a.members < b.members;
}

bool same_event(const CollinearityEvent& a, const CollinearityEvent& b) {
    return a.members == b.members && same_time(a.time, b.time);
}

std::vector<CollinearityEvent> enumerate_events(const Scene& scene, const EnumerateOptions& options) {
    const TripleTable table(scene, options);

    std::vector<TimedTriple> timed;
    for (std::size_t t = 0; t < table.size(); ++t) {
        const auto& cls = table.at(t);
        if (cls.kind != Kind::CollinearAt) continue;
        for (const auto& time : cls.times) timed.push_back({time, t});
    }
    std::stable_sort(timed.begin(), timed.end(),
                     [](const TimedTriple& a, const TimedTriple& b) { return compare_times(a.time, b.time) < 0; });

    std::vector<std::span<const TimedTriple>> groups;
    for (std::size_t begin = 0; begin < timed.size();) {
        std::size_t end = begin + 1;
        while (end < timed.size() && same_time(timed[begin].time, timed[end].time)) ++end;
        groups.emplace_back(timed.data() + begin, end - begin);
        begin = end;
    }

    std::vector<std::vector<CollinearityEvent>> per_group(groups.size());
    detail::parallel_for(groups.size(), options.threads,
                         [&](std::size_t g) { per_group[g] = expand_time_group(scene, table, groups[g]); });

    std::vector<CollinearityEvent> events;
    for (auto& batch : per_group) {
        for (auto& ev : batch) {
            if (ev.k() >= options.k_min) events.push_back(std::move(ev));
        }
    }
    std::sort(events.begin(), events.end(), event_less);
    return events;
}

std::vector<CollinearityEvent> enumerate_events(const Scene& scene, std::size_t k_min) {
    EnumerateOptions options;
    options.k_min = k_min;
    return enumerate_events(scene, options);
}

std::size_t count_k_collinearities(const std::vector<CollinearityEvent>& events, std::size_t k) {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [k](const CollinearityEvent& e) { return e.k() >= k; }));
}

std::size_t count_k_collinearities(const Scene& scene, std::size_t k, unsigned threads) {
    if (k < 3) throw std::invalid_argument("count_k_collinearities requires k >= 3");
    EnumerateOptions options;
    options.threads = threads;
    return count_k_collinearities(enumerate_events(scene, options), k);
}

std::vector<std::vector<std::size_t>> always_collinear_groups(const Scene& scene) {
    const std::size_t n = scene.size();
    std::set<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> companions;
            for (std::size_t w = 0; w < n; ++w) {
                if (w == i || w == j || collinearity_polynomial(scene[i], scene[j], scene[w]).is_zero()) {
                    companions.push_back(w);
                }
            }
            if (companions.size() >= 3) groups.insert(std::move(companions));
        }
    }
    return {groups.begin(), groups.end()};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BoundAudit audit_bounds(const Scene& scene, const std::vector<CollinearityEvent>& events, std::size_t k) {
    if (k < 3) throw std::invalid_argument("audit_bounds requires k >= 3");
    BoundAudit audit;
    audit.n = scene.size();
    audit.k = k;
    audit.event_count = events.size();
    audit.count_k = count_k_collinearities(events, k);
    audit.bound_3 = 2 * binomial(audit.n, 3);
    audit.bound_k = audit.bound_3 / binomial(k, 3);
    audit.no_three_always_collinear = always_collinear_groups(scene).empty();

    for (const auto& ev : events) {
        const auto& m = ev.members;
        for (std::size_t x = 0; x < m.size(); ++x) {
            for (std::size_t y = x + 1; y < m.size(); ++y) {
                for (std::size_t z = y + 1; z < m.size(); ++z) {
                    if (!collinearity_polynomial(scene[m[x]], scene[m[y]], scene[m[z]]).is_zero()) {
                        ++audit.triple_incidences;
                    }
                }
            }
        }
    }

    if (audit.event_count > audit.bound_3) {
        audit.violations.push_back("3-collinearities " + std::to_string(audit.event_count) + " exceed 2*C(n,3) = " +
                                   std::to_string(audit.bound_3));
    }
    if (audit.no_three_always_collinear && audit.count_k > audit.bound_k) {
        audit.violations.push_back(std::to_string(k) + "-collinearities " + std::to_string(audit.count_k) +
                                   " exceed 2*C(n,3)/C(k,3) = " + std::to_string(audit.bound_k));
    }
    audit.pass = audit.violations.empty();
    return audit;
}

BoundAudit audit_bounds(const Scene& scene, std::size_t k, unsigned threads) {
    if (k < 3) throw std::invalid_argument("audit_bounds requires k >= 3");
    EnumerateOptions options;
    options.threads = threads;
    return audit_bounds(scene, enumerate_events(scene, options), k);
}

}  // namespace kcol
