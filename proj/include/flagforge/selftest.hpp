#pragma once

/// Seeded invariant suites shared by the `selftest` command and the test
/// binaries. Each suite returns the first violation it finds, or a summary of
/// what it checked.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "flagforge/analysis.hpp"
#include "flagforge/bounds.hpp"
#include "flagforge/flag.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/matrix.hpp"
#include "flagforge/random.hpp"
#include "flagforge/rank_metric.hpp"
#include "flagforge/serialize.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge::selftest {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct IdVectorStats {
  std::size_t pairs = 0;
  std::size_t reduced_equal_cases = 0;
  std::size_t inverse_equal_cases = 0;
};

struct CharacterizationStats {
  std::size_t codes = 0;
  std::size_t odfc = 0;
  std::size_t non_odfc = 0;
};

namespace detail {

inline PropertyResult fail(std::string name, const std::string& why) { return {std::move(name), false, why}; }

}  // namespace detail

/// Field axioms exhaustively for small orders; inverses for q <= 256.
inline PropertyResult field_axioms() {
  const std::string name = "galois.field_axioms";
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const FieldPtr f = make_field_of_order(q);
    const Field& k = *f;
    for (Element a = 0; a < q; ++a) {
      if (k.mul(a, 1) != a || k.add(a, 0) != a || k.add(a, k.neg(a)) != 0) {
        return detail::fail(name, "identity/negation failed in GF(" + std::to_string(q) + ")");
      }
      for (Element b = 0; b < q; ++b) {
        if (k.mul(a, b) != k.mul_reference(a, b)) return detail::fail(name, "table product disagrees with polynomial product");
        if (k.add(a, b) != k.add(b, a) || k.mul(a, b) != k.mul(b, a)) return detail::fail(name, "commutativity");
        for (Element c = 0; c < q; ++c) {
          if (k.add(k.add(a, b), c) != k.add(a, k.add(b, c))) return detail::fail(name, "additive associativity");
          if (k.mul(k.mul(a, b), c) != k.mul(a, k.mul(b, c))) return detail::fail(name, "multiplicative associativity");
          if (k.mul(a, k.add(b, c)) != k.add(k.mul(a, b), k.mul(a, c))) return detail::fail(name, "distributivity");
        }
      }
    }
  }
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 25u, 27u, 49u, 128u, 256u}) {
    const FieldPtr f = make_field_of_order(q);
    for (Element a = 1; a < q; ++a) {
      if (f->mul(a, f->inv(a)) != 1) return detail::fail(name, "a * a^-1 != 1 in GF(" + std::to_string(q) + ")");
      if (f->pow(a, q - 1) != 1) return detail::fail(name, "a^(q-1) != 1 in GF(" + std::to_string(q) + ")");
    }
  }
  return {name, true, "orders up to 16 exhaustive, inverses up to 256"};
}

/// Echelon canonicality under random row operations, idempotence, and rank bounds.
inline PropertyResult echelon_canonical(std::uint64_t seed, std::size_t trials = 200) {
  const std::string name = "matgfq.echelon_canonical";
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const FieldPtr f = make_field_of_order(trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 2 : 4));
    const std::size_t rows = rng.between(1, 5);
    const std::size_t cols = rng.between(1, 7);
    const Matrix m = random_matrix(rng, f, rows, cols);
    const Matrix t = random_invertible(rng, f, rows);
    const Matrix tm = t * m;
    const auto e1 = rref(m);
    const auto e2 = rref(tm);
    if (!(e1.matrix == e2.matrix) || e1.pivots != e2.pivots) return detail::fail(name, "rref differs for row-equivalent matrices");
    if (!(inv_rref(m).matrix == inv_rref(tm).matrix)) return detail::fail(name, "inverse rref differs for row-equivalent matrices");
    if (e1.rank() > 0) {
      const auto again = rref(e1.matrix);
      if (!(again.matrix == e1.matrix) || again.pivots != e1.pivots) return detail::fail(name, "rref is not idempotent");
    }
    if (!(inv_rref(m).matrix.reversed_columns() == rref(m.reversed_columns()).matrix)) {
      return detail::fail(name, "inverse rref is not the column-reversal conjugate");
    }
    const Matrix other = random_matrix(rng, f, rng.between(1, 4), cols);
    const std::size_t ra = rank(m);
    const std::size_t rb = rank(other);
    const std::size_t rs = rank(stack(m, other));
    if (rs < std::max(ra, rb) || rs > ra + rb) return detail::fail(name, "rank of stack outside [max, sum]");
  }
  return {name, true, std::to_string(trials) + " random row-equivalent pairs"};
}

/// For delta = m: nonzero codewords invertible, linear closure, size q^m, and
/// every truncation is MRD with distance t. Also checks delta < m instances.
inline PropertyResult gabidulin_properties() {
  const std::string name = "rankmetric.gabidulin";
  const std::vector<std::pair<std::size_t, std::uint32_t>> grid = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}};
  for (auto [m, q] : grid) {
    const FieldPtr f = make_field_of_order(q);
    const MrdCode code = gabidulin_square(m, m, f);
    const auto words = enumerate_codewords(code);
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < m; ++i) expected *= q;
    if (words.size() != expected) return detail::fail(name, "codeword count != q^m");
    for (std::size_t i = 1; i < words.size(); ++i) {
      if (rank(words[i]) != m) return detail::fail(name, "nonzero codeword is singular");
    }
    std::vector<Matrix> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    auto member = [&](const Matrix& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (Element s = 0; s < q; ++s) {
        if (!member(words[i].scaled(s))) return detail::fail(name, "code not closed under scaling");
      }
      for (std::size_t j = i; j < words.size(); ++j) {
        if (!member(words[i] + words[j])) return detail::fail(name, "code not closed under addition");
      }
    }
    for (std::size_t t = 1; t <= m; ++t) {
      if (min_rank_distance(truncate_code(words, t)).value_or(t) != t) {
        return detail::fail(name, "truncation to t rows lost the MRD property");
      }
    }
  }
  for (auto [m, delta, q] : std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>{{3, 2, 2}, {3, 1, 2}, {2, 1, 3}, {4, 3, 2}}) {
    const MrdCode code = gabidulin_square(m, delta, make_field_of_order(q));
    const auto words = enumerate_codewords(code);
    if (min_rank_distance(words) != delta) return detail::fail(name, "delta < m code misses its designed distance");
  }
  return {name, true, "square codes for (m,q) in " + std::to_string(grid.size()) + " settings"};
}

/// Identifying-vector distance inequalities and equalities on random equal-dimension pairs.
inline PropertyResult identifying_vector_checks(std::uint64_t seed, std::size_t pairs = 1000, IdVectorStats* stats = nullptr) {
  const std::string name = "subspace.id_vectors";
  Rng rng(seed);
  const FieldPtr fields[] = {make_field_of_order(2), make_field_of_order(3)};
  IdVectorStats local;
  for (std::size_t trial = 0; trial < pairs; ++trial) {
    const FieldPtr& f = fields[rng.below(2)];
    const std::size_t n = rng.between(2, 8);
    const std::size_t k = rng.between(1, n);
    const Subspace u = random_subspace(rng, f, n, k);
    Subspace v = u;
    switch (rng.below(4)) {
      case 0:
        v = random_subspace_with_pivots(rng, f, n, u.pivots());
        break;
      case 1: {
        std::vector<std::size_t> flipped;
        for (auto p : u.pivots(EchelonVariant::Inverse)) flipped.push_back(n - 1 - p);
        std::sort(flipped.begin(), flipped.end());
        v = Subspace(random_subspace_with_pivots(rng, f, n, flipped).basis().reversed_columns());
        break;
      }
      default:
        v = random_subspace(rng, f, n, k);
    }
    const std::size_t ds = subspace_distance(u, v);
    if (ds % 2 != 0) return detail::fail(name, "odd distance between equal-dimension subspaces");
    if (subspace_distance(v, u) != ds || (ds == 0) != (u == v)) return detail::fail(name, "metric axioms");
    const IdVector vu = identifying_vector(u), vv = identifying_vector(v);
    const IdVector iu = inverse_identifying_vector(u), iv = inverse_identifying_vector(v);
    if (vu.weight() != k || iu.weight() != k) return detail::fail(name, "identifying vector weight != dimension");
    if (ds < hamming_distance(vu, vv)) return detail::fail(name, "d_S < d_H of identifying vectors");
    if (ds < hamming_distance(iu, iv)) return detail::fail(name, "d_S < d_H of inverse identifying vectors");
    if (vu == vv) {
      ++local.reduced_equal_cases;
      if (ds != 2 * rank_distance(pivot_complement(u), pivot_complement(v))) {
        return detail::fail(name, "equal identifying vectors but d_S != 2 d_R");
      }
    }
    if (iu == iv) {
      ++local.inverse_equal_cases;
      if (ds != 2 * rank_distance(pivot_complement(u, EchelonVariant::Inverse), pivot_complement(v, EchelonVariant::Inverse))) {
        return detail::fail(name, "equal inverse identifying vectors but d_S != 2 d_R");
      }
    }
    ++local.pairs;
  }
  if (stats) *stats = local;
  std::ostringstream os;
  os << local.pairs << " pairs, " << local.reduced_equal_cases << " equal-v cases, " << local.inverse_equal_cases
     << " equal-v-hat cases";
  return {name, true, os.str()};
}

/// Construction sizes, exhaustive ODFC checks, and deterministic serialization
/// over a small parameter grid.
inline PropertyResult construction_grid() {
  const std::string name = "flag.construction";
  struct Case {
    std::uint64_t n, k, q;
  };
  for (const Case c : {Case{2, 1, 2}, Case{3, 1, 2}, Case{4, 1, 2}, Case{4, 2, 2}, Case{5, 2, 2}, Case{4, 2, 3},
                       Case{6, 3, 2}, Case{6, 2, 2}, Case{4, 2, 4}}) {
    const FieldPtr f = make_field_of_order(c.q);
    const FlagCode code = construct_odfc(c.n, c.k, allowed_ticks(c.n, c.k), f);
    if (BigInt(code.size()) != odfc_size_formula(c.n, c.k, c.q)) return detail::fail(name, "size differs from formula");
    if (!is_disjoint(code)) return detail::fail(name, "constructed code is not disjoint");
    if (!odfc_by_distance(code)) return detail::fail(name, "constructed code misses the distance ceiling");
    const FlagCode again = construct_odfc(c.n, c.k, allowed_ticks(c.n, c.k), f);
    if (to_json(code).dump() != to_json(again).dump()) return detail::fail(name, "construction is not deterministic");
  }
  return {name, true, "9 parameter sets"};
}

/// Random small flag codes: the distance-based and projection-based ODFC
/// predicates must agree.
inline PropertyResult characterization(std::uint64_t seed, std::size_t codes = 200,
                                       CharacterizationStats* stats = nullptr) {
  const std::string name = "analysis.characterization";
  Rng rng(seed);
  CharacterizationStats local;
  const FieldPtr fields[] = {make_field_of_order(2), make_field_of_order(3)};
  while (local.codes < codes) {
    const FieldPtr& f = fields[rng.below(2)];
    const std::size_t target = rng.between(2, 6);
    std::vector<Flag> flags;
    FlagType type;
    std::uint64_t n = 0;
    std::uint64_t k = 1;
    const auto mode = rng.below(3);
    if (mode == 0) {
      n = rng.between(2, 5);
      type = random_flag_type(rng, n);
      for (int attempt = 0; attempt < 64 && flags.size() < target; ++attempt) {
        Flag fl = flag_from_matrix(random_invertible(rng, f, n), type);
        if (std::find(flags.begin(), flags.end(), fl) == flags.end()) flags.push_back(std::move(fl));
      }
      if (flags.size() < 2) continue;
    } else {
      // Subsets of constructed codes, optionally with one flag replaced.
      n = rng.between(2, 5);
      k = (n >= 4 && rng.coin()) ? 2 : 1;
      const FlagCode base = construct_odfc(n, k, allowed_ticks(n, k), f);
      std::vector<std::uint64_t> ticks;
      for (auto t : base.type().ticks()) {
        if (rng.coin()) ticks.push_back(t);
      }
      if (ticks.empty()) ticks.push_back(base.type().ticks()[rng.below(base.type().length())]);
      type = FlagType(n, ticks);
      std::vector<Flag> pool;
      for (const auto& fl : base.flags()) pool.push_back(fl.restricted(type));
      for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
      for (auto& fl : pool) {
        if (flags.size() == target) break;
        if (std::find(flags.begin(), flags.end(), fl) == flags.end()) flags.push_back(fl);
      }
      if (flags.size() < 2) continue;
      if (mode == 2) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          Flag fl = flag_from_matrix(random_invertible(rng, f, n), type);
          if (std::find(flags.begin(), flags.end(), fl) == flags.end()) {
            flags[rng.below(flags.size())] = std::move(fl);
            break;
          }
        }
      }
    }
    const FlagCode code(CodeParams::make(f, n, k), type, std::move(flags));
    const bool by_distance = odfc_by_distance(code);
    const bool by_projection = odfc_by_projection(code);
    if (by_distance != by_projection) return detail::fail(name, "predicates disagree on a random code");
    ++local.codes;
    ++(by_distance ? local.odfc : local.non_odfc);
  }
  if (stats) *stats = local;
  std::ostringstream os;
  os << local.codes << " codes (" << local.odfc << " ODFC, " << local.non_odfc << " not)";
  return {name, true, os.str()};
}

/// Closed-form identities for the bound formulas.
inline PropertyResult bound_identities() {
  const std::string name = "analysis.bound_identities";
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      for (std::uint64_t n = 2 * k; n <= 4 * k + 3; ++n) {
        const BigInt formula = odfc_size_formula(n, k, q);
        BigInt sum = 1;
        for (std::uint64_t i = 1; i <= n / k - 1; ++i) sum += big_pow(q, i * k + n % k);
        if (formula != sum) return detail::fail(name, "size formula != sum of q^{ik+r} + 1");
        if (n % k == 0 && formula != (big_pow(q, n) - 1) / (big_pow(q, k) - 1)) {
          return detail::fail(name, "k | n size differs from (q^n - 1)/(q^k - 1)");
        }
        if (k >= 2 && n == 2 * k + 1 && formula != big_pow(q, k + 1) + 1) return detail::fail(name, "n = 2k+1 size != q^{k+1} + 1");
        const CdcBound cdc = cdc_upper_bound(n, k, q);
        if (cdc.bound < formula) return detail::fail(name, "upper bound below the construction size");
        if (cdc.drake_freeman && *cdc.drake_freeman < cdc.bound) return detail::fail(name, "exact value exceeds Drake-Freeman");
      }
    }
  }
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const BigInt s = isqrt(BigInt(x));
    if (s * s > x || (s + 1) * (s + 1) <= x) return detail::fail(name, "isqrt bracket violated");
  }
  return {name, true, "q <= 9, k <= 5"};
}

inline std::vector<PropertyResult> run_all(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(field_axioms());
  out.push_back(echelon_canonical(seed));
  out.push_back(gabidulin_properties());
  out.push_back(identifying_vector_checks(seed));
  out.push_back(construction_grid());
  out.push_back(characterization(seed));
  out.push_back(bound_identities());
  return out;
}

}  // namespace flagforge::selftest
