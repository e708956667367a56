// SPDX-License-Identifier: Apache-2.0
//
// Enumeration of k-collinearities: (line, time) pairs where a line holds at
// least k points, the points on it do not all coincide, and they are not
// collinear at all times.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcol/exact_numbers.hpp"
#include "kcol/kinematics.hpp"

namespace kcol {

/// One k-collinearity. Indices refer to positions in the owning Scene.
struct CollinearityEvent {
    AlgebraicTime time;
    std::vector<std::size_t> members;    // ascending scene indices, maximal
    std::array<std::size_t, 2> anchors;  // first member pair with distinct positions
    bool tangential = false;             // some member triple touches without crossing
    bool contains_subcollision = false;  // some, not all, members coincide

    std::size_t k() const { return members.size(); }
};

/// Orders by time, then member list.
bool event_less(const CollinearityEvent& a, const CollinearityEvent& b);
bool same_event(const CollinearityEvent& a, const CollinearityEvent& b);

struct EnumerateOptions {
    std::size_t k_min = 3;
    /// Worker threads for triple classification and per-time expansion. The
    /// result does not depend on this value.
    unsigned threads = 1;
    SolveOptions solve;
};

std::vector<CollinearityEvent> enumerate_events(const Scene& scene, const EnumerateOptions& options = {});
std::vector<CollinearityEvent> enumerate_events(const Scene& scene, std::size_t k_min);

/// Number of events with at least k members.
std::size_t count_k_collinearities(const Scene& scene, std::size_t k, unsigned threads = 1);
std::size_t count_k_collinearities(const std::vector<CollinearityEvent>& events, std::size_t k);

/// Maximal sets (size >= 3) of points collinear at every time, ascending.
std::vector<std::vector<std::size_t>> always_collinear_groups(const Scene& scene);

struct BoundAudit {
    std::size_t n = 0;
    std::size_t k = 3;
    std::size_t event_count = 0;  // all events (k >= 3)
    std::size_t count_k = 0;      // events with at least k members
    std::size_t triple_incidences = 0;
    std::uint64_t bound_3 = 0;  // 2 C(n,3)
    std::uint64_t bound_k = 0;  // floor(2 C(n,3) / C(k,3))
    bool no_three_always_collinear = true;
    bool pass = true;
    std::vector<std::string> violations;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Requires k >= 3 (std::invalid_argument otherwise).
BoundAudit audit_bounds(const Scene& scene, std::size_t k, unsigned threads = 1);
BoundAudit audit_bounds(const Scene& scene, const std::vector<CollinearityEvent>& events, std::size_t k);

class OracleCapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

struct BruteForceOptions {
    /// Probe these times instead of all triple roots.
    std::optional<std::vector<AlgebraicTime>> time_candidates;
    std::size_t cap = 8;
};

/// Independent re-derivation of the event list by subset enumeration. Shares
/// nothing with enumerate_events beyond the exact number layer. Throws
/// OracleCapExceeded when the scene has more than options.cap points.
std::vector<CollinearityEvent> brute_force_events(const Scene& scene, const BruteForceOptions& options = {});

}  // namespace kcol
