// Copyright 2026 The morphplan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Multiple-choice knapsack: pick at most one item per group, maximize total
// profit subject to a total-cost budget.
//
//   max  sum_g sum_j x[g][j] * profit[g][j]
//   s.t. sum_g sum_j x[g][j] * cost[g][j]  <= budget   (or < budget)
//        sum_j x[g][j] <= 1 for every group g,  x in {0, 1}
//
// All quantities are Tenths, so every comparison below is exact.

#ifndef MORPHPLAN_MCKP_HPP
#define MORPHPLAN_MCKP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphplan/decimal.hpp"
#include "morphplan/errors.hpp"

namespace morphplan {

enum class Comparator { kInclusive, kExclusive };

inline std::string_view to_string(Comparator c) {
  return c == Comparator::kInclusive ? "inclusive" : "exclusive";
}

inline std::optional<Comparator> parse_comparator(std::string_view s) {
  if (s == "inclusive") return Comparator::kInclusive;
  if (s == "exclusive") return Comparator::kExclusive;
  return std::nullopt;
}

enum class SolverKind { kGreedy, kDp, kExhaustive };

inline std::string_view to_string(SolverKind s) {
  switch (s) {
    case SolverKind::kGreedy:
      return "greedy";
    case SolverKind::kDp:
      return "dp";
    case SolverKind::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

inline std::optional<SolverKind> parse_solver(std::string_view s) {
  if (s == "greedy") return SolverKind::kGreedy;
  if (s == "dp") return SolverKind::kDp;
  if (s == "exhaustive") return SolverKind::kExhaustive;
  return std::nullopt;
}

struct MckpItem {
  Tenths profit;
  Tenths cost;

  friend bool operator==(const MckpItem&, const MckpItem&) = default;
};

struct MckpInstance {
  std::vector<std::vector<MckpItem>> groups;
  Tenths budget;
  Comparator comparator = Comparator::kInclusive;

  friend bool operator==(const MckpInstance&, const MckpInstance&) = default;
};

/// Zero-based (group, item) position.
struct ItemRef {
  std::size_t group = 0;
  std::size_t item = 0;

  friend auto operator<=>(const ItemRef&, const ItemRef&) = default;
};

struct MckpSolution {
  /// Chosen item per group; nullopt leaves the group empty.
  std::vector<std::optional<std::size_t>> selection;
  Tenths total_profit;
  Tenths total_cost;
  SolverKind solver = SolverKind::kDp;

  friend bool operator==(const MckpSolution&, const MckpSolution&) = default;
};

inline constexpr std::int64_t kMaxDpBudget = 10'000'000;      // tenths
inline constexpr std::uint64_t kMaxEnumeration = 1'000'000;  // prod of q

inline Findings validate_instance(const MckpInstance& instance) {
  Findings out;
  if (instance.budget < Tenths(0)) out.push_back("negative budget");
  for (std::size_t g = 0; g < instance.groups.size(); ++g) {
    const auto& items = instance.groups[g];
    const std::string where = "group " + std::to_string(g + 1);
    if (items.empty()) out.push_back(where + " is empty");
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (items[j].profit < Tenths(0) || items[j].cost < Tenths(0))
        out.push_back(where + " item " + std::to_string(j + 1) +
                      " has a negative value");
    }
  }
  return out;
}

/// Largest admissible total cost in tenths; nullopt when even the empty
/// selection violates the budget (exclusive comparator with budget 0).
inline std::optional<std::int64_t> effective_capacity(
    const MckpInstance& instance) {
  const std::int64_t cap = instance.comparator == Comparator::kInclusive
                               ? instance.budget.raw()
                               : instance.budget.raw() - 1;
  if (cap < 0) return std::nullopt;
  return cap;
}

inline bool within_budget(const MckpInstance& instance, Tenths cost) {
  return instance.comparator == Comparator::kInclusive
             ? cost <= instance.budget
             : cost < instance.budget;
}

/// Checks an arbitrary pick list (possibly several per group) against the
/// instance. Claimed totals are compared when provided.
inline Findings verify_assignment(const MckpInstance& instance,
                                  std::span<const ItemRef> picks,
                                  std::optional<Tenths> claimed_profit = {},
                                  std::optional<Tenths> claimed_cost = {}) {
  Findings out;
  std::vector<int> per_group(instance.groups.size(), 0);
  Tenths profit;
  Tenths cost;
  for (const auto& pick : picks) {
    if (pick.group >= instance.groups.size() ||
        pick.item >= instance.groups[pick.group].size()) {
      out.push_back("unknown item " + std::to_string(pick.item + 1) +
                    " in group " + std::to_string(pick.group + 1));
      continue;
    }
    if (++per_group[pick.group] == 2)
      out.push_back("multiple selections in group " +
                    std::to_string(pick.group + 1));
    profit += instance.groups[pick.group][pick.item].profit;
    cost += instance.groups[pick.group][pick.item].cost;
  }
  if (claimed_profit && *claimed_profit != profit)
    out.push_back("profit total mismatch: reported " +
                  format_tenths(*claimed_profit) + ", actual " +
                  format_tenths(profit));
  if (claimed_cost && *claimed_cost != cost)
    out.push_back("cost total mismatch: reported " +
                  format_tenths(*claimed_cost) + ", actual " +
                  format_tenths(cost));
  if (!within_budget(instance, cost)) {
    const char* op =
        instance.comparator == Comparator::kInclusive ? " > " : " >= ";
    out.push_back("budget exceeded: " + format_tenths(cost) + op +
                  format_tenths(instance.budget));
  }
  return out;
}

inline Findings verify_solution(const MckpInstance& instance,
                                const MckpSolution& solution) {
  Findings out;
  if (solution.selection.size() != instance.groups.size()) {
    out.push_back("selection covers " +
                  std::to_string(solution.selection.size()) +
                  " groups, instance has " +
                  std::to_string(instance.groups.size()));
    return out;
  }
  std::vector<ItemRef> picks;
  for (std::size_t g = 0; g < solution.selection.size(); ++g)
    if (solution.selection[g]) picks.push_back({g, *solution.selection[g]});
  return verify_assignment(instance, picks, solution.total_profit,
                           solution.total_cost);
}

namespace detail {

inline void require_valid(const MckpInstance& instance) {
  Findings findings = validate_instance(instance);
  if (!findings.empty())
    throw ValidationError("invalid instance: " + join_findings(findings),
                          findings);
}

inline std::int64_t require_capacity(const MckpInstance& instance) {
  const auto cap = effective_capacity(instance);
  if (!cap)
    throw SolverError("infeasible: no selection satisfies total cost < " +
                      format_tenths(instance.budget));
  return *cap;
}

inline MckpSolution make_solution(const MckpInstance& instance,
                                  std::vector<std::optional<std::size_t>> sel,
                                  SolverKind solver) {
  MckpSolution s;
  s.selection = std::move(sel);
  s.solver = solver;
  for (std::size_t g = 0; g < s.selection.size(); ++g) {
    if (!s.selection[g]) continue;
    s.total_profit += instance.groups[g][*s.selection[g]].profit;
    s.total_cost += instance.groups[g][*s.selection[g]].cost;
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Greedy: series packing by profit/cost ratio.

struct GreedyStep {
  enum class Outcome { kSelected, kGroupTaken, kOverBudget };

  ItemRef item;
  Tenths profit;
  Tenths cost;
  Outcome outcome = Outcome::kSelected;
  Tenths load_after;  // total cost after this step

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

inline std::string_view to_string(GreedyStep::Outcome o) {
  switch (o) {
    case GreedyStep::Outcome::kSelected:
      return "selected";
    case GreedyStep::Outcome::kGroupTaken:
      return "skipped: group already filled";
    case GreedyStep::Outcome::kOverBudget:
      return "skipped: would exceed budget";
  }
  return "unknown";
}

struct GreedyResult {
  MckpSolution solution;
  std::vector<GreedyStep> trace;
};

/// Items with positive profit in greedy order: ratio descending (zero-cost
/// items first), then lower cost, lower group, lower item.
inline std::vector<ItemRef> greedy_rank(const MckpInstance& instance) {
  std::vector<ItemRef> ranked;
  for (std::size_t g = 0; g < instance.groups.size(); ++g)
    for (std::size_t j = 0; j < instance.groups[g].size(); ++j)
      if (instance.groups[g][j].profit > Tenths(0)) ranked.push_back({g, j});

  const auto item = [&](const ItemRef& r) -> const MckpItem& {
    return instance.groups[r.group][r.item];
  };
  std::sort(ranked.begin(), ranked.end(),
            [&](const ItemRef& a, const ItemRef& b) {
              const MckpItem& x = item(a);
              const MckpItem& y = item(b);
              const bool x_inf = x.cost == Tenths(0);
              const bool y_inf = y.cost == Tenths(0);
              if (x_inf != y_inf) return x_inf;
              if (!x_inf) {
                // x.p / x.c  vs  y.p / y.c, cross-multiplied.
                const __int128 lhs =
                    static_cast<__int128>(x.profit.raw()) * y.cost.raw();
                const __int128 rhs =
                    static_cast<__int128>(y.profit.raw()) * x.cost.raw();
                if (lhs != rhs) return lhs > rhs;
              }
              if (x.cost != y.cost) return x.cost < y.cost;
              return a < b;
            });
  return ranked;
}

inline GreedyResult solve_greedy_traced(const MckpInstance& instance) {
  detail::require_valid(instance);
  detail::require_capacity(instance);
  std::vector<std::optional<std::size_t>> sel(instance.groups.size());
  GreedyResult result;
  Tenths load;
  for (const ItemRef& r : greedy_rank(instance)) {
    const MckpItem& it = instance.groups[r.group][r.item];
    GreedyStep step{r, it.profit, it.cost, GreedyStep::Outcome::kSelected,
                    load};
    if (sel[r.group]) {
      step.outcome = GreedyStep::Outcome::kGroupTaken;
    } else if (!within_budget(instance, load + it.cost)) {
      step.outcome = GreedyStep::Outcome::kOverBudget;
    } else {
      sel[r.group] = r.item;
      load += it.cost;
      step.load_after = load;
    }
    result.trace.push_back(step);
  }
  result.solution =
      detail::make_solution(instance, std::move(sel), SolverKind::kGreedy);
  return result;
}

inline MckpSolution solve_greedy(const MckpInstance& instance) {
  return solve_greedy_traced(instance).solution;
}

// ---------------------------------------------------------------------------
// Exact dynamic programming over integer budgets.
//
// best[g][w] is the best (max profit, then min cost) value reachable with
// groups g..n-1 and capacity w. Reconstruction walks forward and takes the
// earliest option (skip, item 0, item 1, ...) that still attains best[g][w],
// which yields the lexicographically earliest optimal selection.

inline MckpSolution solve_dp(const MckpInstance& instance) {
  detail::require_valid(instance);
  if (instance.budget.raw() > kMaxDpBudget)
    throw SolverError("budget " + format_tenths(instance.budget) +
                      " exceeds the dynamic-programming limit of " +
                      format_tenths(Tenths(kMaxDpBudget)));
  std::int64_t cap = detail::require_capacity(instance);

  std::int64_t max_load = 0;
  for (const auto& items : instance.groups) {
    std::int64_t most = 0;
    for (const auto& it : items) most = std::max(most, it.cost.raw());
    max_load += most;
  }
  cap = std::min(cap, max_load);

  struct Cell {
    std::int64_t profit = 0;
    std::int64_t cost = 0;
  };
  const auto better = [](const Cell& a, const Cell& b) {
    return a.profit > b.profit || (a.profit == b.profit && a.cost < b.cost);
  };

  const std::size_t n = instance.groups.size();
  const std::size_t width = static_cast<std::size_t>(cap) + 1;
  std::vector<Cell> best((n + 1) * width);
  const auto at = [&](std::size_t g, std::int64_t w) -> Cell& {
    return best[g * width + static_cast<std::size_t>(w)];
  };

  for (std::size_t g = n; g-- > 0;) {
    for (std::int64_t w = 0; w <= cap; ++w) {
      Cell top = at(g + 1, w);  // skip the group
      for (const auto& it : instance.groups[g]) {
        const std::int64_t c = it.cost.raw();
        if (c > w) continue;
        const Cell& rest = at(g + 1, w - c);
        const Cell cand{rest.profit + it.profit.raw(), rest.cost + c};
        if (better(cand, top)) top = cand;
      }
      at(g, w) = top;
    }
  }

  std::vector<std::optional<std::size_t>> sel(n);
  std::int64_t w = cap;
  for (std::size_t g = 0; g < n; ++g) {
    const Cell target = at(g, w);
    const Cell skip = at(g + 1, w);
    if (skip.profit == target.profit && skip.cost == target.cost) continue;
    for (std::size_t j = 0; j < instance.groups[g].size(); ++j) {
      const auto& it = instance.groups[g][j];
      const std::int64_t c = it.cost.raw();
      if (c > w) continue;
      const Cell& rest = at(g + 1, w - c);
      if (rest.profit + it.profit.raw() == target.profit &&
          rest.cost + c == target.cost) {
        sel[g] = j;
        w -= c;
        break;
      }
    }
  }
  return detail::make_solution(instance, std::move(sel), SolverKind::kDp);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration; the independent oracle for solve_dp.

inline MckpSolution solve_exhaustive(const MckpInstance& instance) {
  detail::require_valid(instance);
  std::uint64_t product = 1;
  for (const auto& items : instance.groups) {
    product *= items.size();
    if (product > kMaxEnumeration)
      throw SolverError("instance too large for enumeration: product of group "
                        "sizes exceeds " +
                        std::to_string(kMaxEnumeration));
  }
  const auto cap = effective_capacity(instance);
  if (!cap)
    throw SolverError("infeasible: no selection satisfies total cost < " +
                      format_tenths(instance.budget));

  // Odometer over options per group: 0 = skip, k = item k-1. Group 0 is the
  // most significant digit, so visiting order is lexicographic and the first
  // maximum found wins ties.
  const std::size_t n = instance.groups.size();
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::size_t> best_digit(n, 0);
  std::int64_t best_profit = -1;
  std::int64_t best_cost = 0;
  while (true) {
    std::int64_t profit = 0;
    std::int64_t cost = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (digit[g] == 0) continue;
      profit += instance.groups[g][digit[g] - 1].profit.raw();
      cost += instance.groups[g][digit[g] - 1].cost.raw();
    }
    if (cost <= *cap && (profit > best_profit ||
                         (profit == best_profit && cost < best_cost))) {
      best_profit = profit;
      best_cost = cost;
      best_digit = digit;
    }
    bool carry = true;
    for (std::size_t g = n; carry && g-- > 0;) {
      if (++digit[g] <= instance.groups[g].size())
        carry = false;
      else
        digit[g] = 0;
    }
    if (carry) break;  // wrapped the most significant digit
  }

  std::vector<std::optional<std::size_t>> sel(n);
  for (std::size_t g = 0; g < n; ++g)
    if (best_digit[g] != 0) sel[g] = best_digit[g] - 1;
  return detail::make_solution(instance, std::move(sel),
                               SolverKind::kExhaustive);
}

inline MckpSolution solve(const MckpInstance& instance, SolverKind solver) {
  switch (solver) {
    case SolverKind::kGreedy:
      return solve_greedy(instance);
    case SolverKind::kDp:
      return solve_dp(instance);
    case SolverKind::kExhaustive:
      return solve_exhaustive(instance);
  }
  throw SolverError("unknown solver");
}

}  // namespace morphplan

#endif  // MORPHPLAN_MCKP_HPP
