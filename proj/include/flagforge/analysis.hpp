#pragma once

/// Exhaustive verification of flag codes: minimum distance, projected codes,
/// disjointness, and the optimality verdict against the closed-form bounds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "flagforge/bounds.hpp"
#include "flagforge/error.hpp"
#include "flagforge/flag.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge {

/// Minimum of fn(i, j) over 0 <= i < j < count, split across `workers`
/// threads by strided first index. workers == 0 means hardware concurrency.
/// Returns nullopt when count < 2. The result does not depend on `workers`.
inline std::optional<std::uint64_t> min_over_pairs(std::size_t count, unsigned workers,
                                                   const std::function<std::uint64_t(std::size_t, std::size_t)>& fn) {
  if (count < 2) return std::nullopt;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count - 1));
  std::vector<std::uint64_t> partial(workers, std::numeric_limits<std::uint64_t>::max());
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) {
      for (std::size_t j = i + 1; j < count; ++j) partial[w] = std::min(partial[w], fn(i, j));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return *std::min_element(partial.begin(), partial.end());
}

/// Exact minimum flag distance over all unordered pairs.
inline std::uint64_t min_flag_distance(const FlagCode& code, unsigned workers = 1) {
  if (code.size() < 2) throw Error(ErrorKind::TooSmall, "minimum distance needs at least two flags");
  const auto& flags = code.flags();
  return *min_over_pairs(flags.size(), workers,
                         [&](std::size_t i, std::size_t j) { return flag_distance(flags[i], flags[j]); });
}

inline std::uint64_t max_flag_distance_bound(const FlagType& type) {
  return max_flag_distance_bound(type.n(), type.ticks());
}

/// The distinct t-th components, sorted canonically.
inline std::vector<Subspace> projected_code(const FlagCode& code, std::uint64_t t) {
  const std::size_t pos = code.type().position(t);
  std::vector<Subspace> out;
  out.reserve(code.size());
  for (const auto& f : code.flags()) out.push_back(f.component(pos));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_disjoint(const FlagCode& code) {
  for (auto t : code.type().ticks()) {
    if (projected_code(code, t).size() != code.size()) return false;
  }
  return true;
}

/// min(2t, 2(n - t)), the largest possible distance of a code of t-spaces.
inline std::uint64_t projected_distance_target(std::uint64_t n, std::uint64_t t) { return 2 * std::min(t, n - t); }

/// Minimum subspace distance of a set; nullopt if it has fewer than two members.
inline std::optional<std::uint64_t> min_subspace_distance(const std::vector<Subspace>& set, unsigned workers = 1) {
  return min_over_pairs(set.size(), workers,
                        [&](std::size_t i, std::size_t j) { return subspace_distance(set[i], set[j]); });
}

/// True iff the members share a dimension and pairwise intersect trivially.
inline bool partial_spread_check(const std::vector<Subspace>& set) {
  for (const auto& s : set) {
    if (s.dimension() != set.front().dimension()) throw Error(ErrorKind::DimMismatch, "spread members differ in dimension");
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (intersection_dim(set[i], set[j]) != 0) return false;
    }
  }
  return true;
}

struct TickReport {
  std::uint64_t t = 0;
  std::uint64_t projected_size = 0;
  std::optional<std::uint64_t> projected_min_distance;
  std::uint64_t target = 0;

  bool attains() const { return projected_min_distance && *projected_min_distance == target; }
  friend bool operator==(const TickReport&, const TickReport&) = default;
};

struct VerificationReport {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t a = 0;
  std::uint64_t r = 0;
  std::vector<std::uint64_t> type;
  std::uint64_t size = 0;
  std::uint64_t min_flag_distance = 0;
  std::uint64_t max_distance_bound = 0;
  std::vector<TickReport> per_tick;
  bool disjoint = false;
  bool is_odfc = false;
  BigInt size_formula;
  std::optional<BigInt> upper_bound;
  std::optional<BigInt> drake_freeman;
  BigInt gaussian_r;
  /// False when the type set misses both k and n - k, so no upper bound applies.
  bool bound_applicable = false;
  Optimality optimality = Optimality::BoundInapplicable;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Distance-based ODFC predicate.
inline bool odfc_by_distance(const FlagCode& code, unsigned workers = 1) {
  return min_flag_distance(code, workers) == max_flag_distance_bound(code.type());
}

/// Projection-based ODFC predicate: disjoint, and every projected code attains
/// min(2t, 2(n - t)).
inline bool odfc_by_projection(const FlagCode& code, unsigned workers = 1) {
  if (code.size() < 2) throw Error(ErrorKind::TooSmall, "predicate needs at least two flags");
  for (auto t : code.type().ticks()) {
    const auto proj = projected_code(code, t);
    if (proj.size() != code.size()) return false;
    if (min_subspace_distance(proj, workers) != projected_distance_target(code.type().n(), t)) return false;
  }
  return true;
}

inline VerificationReport verify_odfc(const FlagCode& code, unsigned workers = 1) {
  if (code.size() < 2) throw Error(ErrorKind::TooSmall, "verification needs at least two flags");
  const CodeParams& params = code.params();
  VerificationReport rep;
  rep.q = params.q();
  rep.n = params.n;
  rep.k = params.k;
  rep.a = params.a;
  rep.r = params.r;
  rep.type = code.type().ticks();
  rep.size = code.size();
  rep.min_flag_distance = min_flag_distance(code, workers);
  rep.max_distance_bound = max_flag_distance_bound(code.type());
  rep.is_odfc = rep.min_flag_distance == rep.max_distance_bound;

  bool projections_attain = true;
  rep.disjoint = true;
  for (auto t : code.type().ticks()) {
    const auto proj = projected_code(code, t);
    TickReport tick;
    tick.t = t;
    tick.projected_size = proj.size();
    tick.projected_min_distance = min_subspace_distance(proj, workers);
    tick.target = projected_distance_target(params.n, t);
    rep.disjoint = rep.disjoint && tick.projected_size == rep.size;
    projections_attain = projections_attain && tick.attains();
    rep.per_tick.push_back(tick);
  }
  if ((rep.disjoint && projections_attain) != rep.is_odfc) {
    throw Error(ErrorKind::CharacterizationMismatch,
                "distance-based and projection-based ODFC predicates disagree");
  }

  const OdfcBounds bounds = odfc_bounds(params.n, params.k, rep.q, rep.type);
  rep.size_formula = bounds.size_formula;
  rep.upper_bound = bounds.upper_bound;
  rep.drake_freeman = bounds.drake_freeman;
  rep.gaussian_r = bounds.gaussian_r;
  rep.bound_applicable = bounds.upper_bound.has_value();
  if (!rep.bound_applicable) {
    rep.optimality = Optimality::BoundInapplicable;
  } else if (rep.is_odfc && BigInt(rep.size) == *rep.upper_bound) {
    rep.optimality = Optimality::Optimal;
  } else {
    rep.optimality = Optimality::NotProvenOptimal;
  }
  return rep;
}

}  // namespace flagforge
