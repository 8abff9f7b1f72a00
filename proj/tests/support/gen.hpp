#pragma once

// Deterministic random data for property tests.  Everything is driven by a
// caller-owned std::mt19937_64 so failures reproduce from the seed.

#include <cstddef>
#include <random>

#include "ratlp/constraint.hpp"
#include "ratlp/linalg.hpp"
#include "ratlp/linpoly.hpp"

namespace testgen {

inline ratlp::Rat random_rat(std::mt19937_64& rng, long num_lo = -3, long num_hi = 3,
                             long den_hi = 3) {
  std::uniform_int_distribution<long> num(num_lo, num_hi);
  std::uniform_int_distribution<long> den(1, den_hi);
  return ratlp::Rat(num(rng), den(rng));
}

inline ratlp::Vec random_vec(std::mt19937_64& rng, std::size_t dim) {
  ratlp::Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_rat(rng);
  return v;
}

inline ratlp::Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ratlp::Mat a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = random_rat(rng);
  return a;
}

/// Up to max_terms terms over variables < var_limit (possibly the zero poly).
inline ratlp::LinPoly random_poly(std::mt19937_64& rng, std::size_t var_limit,
                                  std::size_t max_terms) {
  ratlp::LinPoly p;
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, var_limit == 0 ? 0 : var_limit - 1);
  const std::size_t k = nterms(rng);
  for (std::size_t t = 0; t < k; ++t) p.add_term(var(rng), random_rat(rng));
  return p;
}

inline ratlp::Assignment random_assignment(std::mt19937_64& rng, std::size_t var_limit) {
  ratlp::Assignment a;
  for (std::size_t v = 0; v < var_limit; ++v) a[v] = random_rat(rng, -5, 5, 4);
  return a;
}

inline ratlp::Rel random_rel(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return ratlp::Rel::Leq;
    case 1: return ratlp::Rel::Eq;
    default: return ratlp::Rel::Geq;
  }
}

/// Constraint with random affine sides; both sides may mention variables.
inline ratlp::Constraint random_constraint(std::mt19937_64& rng, std::size_t var_limit) {
  ratlp::Affine lhs{random_poly(rng, var_limit, 3), random_rat(rng)};
  ratlp::Affine rhs{random_poly(rng, var_limit, 2), random_rat(rng)};
  return {std::move(lhs), random_rel(rng), std::move(rhs)};
}

inline std::vector<ratlp::Constraint> random_system(std::mt19937_64& rng, std::size_t var_limit,
                                                    std::size_t max_constraints) {
  std::uniform_int_distribution<std::size_t> count(1, max_constraints);
  std::vector<ratlp::Constraint> cs;
  const std::size_t k = count(rng);
  cs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) cs.push_back(random_constraint(rng, var_limit));
  return cs;
}

}  // namespace testgen
