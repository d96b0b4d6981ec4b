#pragma once

// Data model shared by every other component: instances, solutions, the
// rounded-Euclidean cost function, and the feasibility validator.
//
// All types are immutable value types after construction; every operation
// here is a pure function and safe to call concurrently.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xlcvrp {

inline constexpr int kGridMin = 0;
inline constexpr int kGridMax = 1000;

struct Point {
    int x = 0;
    int y = 0;

    bool operator==(const Point&) const = default;
};

inline bool in_grid(Point p) {
    return p.x >= kGridMin && p.x <= kGridMax && p.y >= kGridMin && p.y <= kGridMax;
}

// EUC_2D edge weight: nint(sqrt(dx^2 + dy^2)) with nint(v) = floor(v + 0.5).
// Squared distances stay below 2*10^6, far inside exact int64/double range.
inline std::int64_t euclid_cost(Point a, Point b) {
    const std::int64_t dx = a.x - b.x;
    const std::int64_t dy = a.y - b.y;
    const double d = std::sqrt(static_cast<double>(dx * dx + dy * dy));
    return static_cast<std::int64_t>(std::floor(d + 0.5));
}

struct Instance {
    std::string name;
    std::string comment;
    Point depot;
    std::vector<Point> customers;   // customer i has 1-based index i+1... see below
    std::vector<int> demands;       // parallel to customers, all >= 1
    std::int64_t capacity = 0;
    int k_min = 0;
    bool k_min_proven = true;

    int n_customers() const { return static_cast<int>(customers.size()); }
    int n_total() const { return n_customers() + 1; }

    // Customers are addressed 1..n_customers in routes and files; the depot
    // is node 1 in files but is not addressable from a route.
    const Point& customer(int index1) const { return customers[index1 - 1]; }
    int demand(int index1) const { return demands[index1 - 1]; }
};

struct Route {
    std::vector<int> customer_indices;  // 1-based, depot implicit at both ends
};

struct Solution {
    std::vector<Route> routes;
};

// Undirected canonical orientation: first customer index <= last.
inline void canonicalize(Solution& sol) {
    for (auto& r : sol.routes) {
        auto& c = r.customer_indices;
        if (!c.empty() && c.front() > c.back()) std::reverse(c.begin(), c.end());
    }
}

inline std::int64_t route_cost(const Instance& inst, const Route& r) {
    if (r.customer_indices.empty()) return 0;
    std::int64_t total = euclid_cost(inst.depot, inst.customer(r.customer_indices.front()));
    for (std::size_t i = 0; i + 1 < r.customer_indices.size(); ++i)
        total += euclid_cost(inst.customer(r.customer_indices[i]),
                             inst.customer(r.customer_indices[i + 1]));
    total += euclid_cost(inst.customer(r.customer_indices.back()), inst.depot);
    return total;
}

inline std::int64_t solution_cost(const Instance& inst, const Solution& sol) {
    std::int64_t total = 0;
    for (const auto& r : sol.routes) {
        for (int idx : r.customer_indices)
            if (idx < 1 || idx > inst.n_customers())
                throw std::out_of_range("solution_cost: unknown customer index " +
                                        std::to_string(idx));
        total += route_cost(inst, r);
    }
    return total;
}

struct Violation {
    enum class Kind { MissingCustomer, DuplicateCustomer, CapacityExcess, UnknownIndex };

    Kind kind;
    int customer = 0;           // MissingCustomer / DuplicateCustomer / UnknownIndex
    int route = -1;             // CapacityExcess (0-based position in the route list)
    std::int64_t overload = 0;  // CapacityExcess: demand sum minus capacity

    std::string describe() const {
        switch (kind) {
            case Kind::MissingCustomer:
                return "missing customer " + std::to_string(customer);
            case Kind::DuplicateCustomer:
                return "duplicated customer " + std::to_string(customer);
            case Kind::CapacityExcess:
                return "route " + std::to_string(route + 1) + " exceeds capacity by " +
                       std::to_string(overload);
            case Kind::UnknownIndex:
                return "unknown customer index " + std::to_string(customer);
        }
        return "?";
    }
};

struct ValidationReport {
    bool feasible = false;
    std::vector<Violation> violations;
    // Filled whenever every route index is a known customer.
    std::optional<std::int64_t> recomputed_cost;
};

// Reports every violation, not just the first. A solution with more routes
// than k_min is still feasible; k_min is a reference value only.
inline ValidationReport validate(const Instance& inst, const Solution& sol) {
    ValidationReport rep;
    const int n = inst.n_customers();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    bool all_known = true;

    for (std::size_t ri = 0; ri < sol.routes.size(); ++ri) {
        std::int64_t load = 0;
        for (int idx : sol.routes[ri].customer_indices) {
            if (idx < 1 || idx > n) {
                rep.violations.push_back(
                    {Violation::Kind::UnknownIndex, idx, static_cast<int>(ri), 0});
                all_known = false;
                continue;
            }
            ++seen[idx];
            load += inst.demand(idx);
        }
        if (load > inst.capacity)
            rep.violations.push_back({Violation::Kind::CapacityExcess, 0,
                                      static_cast<int>(ri), load - inst.capacity});
    }
    for (int c = 1; c <= n; ++c) {
        if (seen[c] == 0)
            rep.violations.push_back({Violation::Kind::MissingCustomer, c, -1, 0});
        else if (seen[c] > 1)
            rep.violations.push_back({Violation::Kind::DuplicateCustomer, c, -1, 0});
    }

    if (all_known) {
        std::int64_t total = 0;
        for (const auto& r : sol.routes) total += route_cost(inst, r);
        rep.recomputed_cost = total;
    }
    rep.feasible = rep.violations.empty();
    return rep;
}

}  // namespace xlcvrp
