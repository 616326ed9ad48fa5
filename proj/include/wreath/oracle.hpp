#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "wreath/weakbialgebra.hpp"

/// Reference computations over the rationals that share no code with the
/// main construction path: dense matrices, index loops straight from the
/// structure constants, and a separate elimination routine.
namespace wreath::oracle {

struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpq_class> a;  // row-major

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static Dense identity(std::size_t n);
  mpq_class& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Dense multiply(const Dense& x, const Dense& y);
Dense kron(const Dense& x, const Dense& y);
std::size_t rank(Dense m);
bool equal(const Dense& x, const LinMap& f);

/// Structure constants: e_a e_b = sum mul[a][b][k] e_k, comul e_i =
/// sum comul[i][p][q] e_p (x) e_q.
struct Constants {
  std::size_t d = 0;
  std::vector<mpq_class> mul;     // d^3, index (a*d + b)*d + k
  std::vector<mpq_class> unit;    // d
  std::vector<mpq_class> comul;   // d^3, index (i*d + p)*d + q
  std::vector<mpq_class> counit;  // d

  const mpq_class& m(std::size_t a, std::size_t b, std::size_t k) const {
    return mul[(a * d + b) * d + k];
  }
  const mpq_class& c(std::size_t i, std::size_t p, std::size_t q) const {
    return comul[(i * d + p) * d + q];
  }
};

/// Reads the constants of a weak bialgebra over the rationals.
Constants constants_of(const WeakBialgebra& h);

/// H (x) Hhat -> Hhat (x) H.
Dense lambda(const Constants& k);
/// Hhat (x) H -> H (x) Hhat.
Dense lambda_hat(const Constants& k);
/// Idempotent of lambda on Hhat (x) H through the unit of H, left path only.
Dense lambda_bar(const Constants& k);
/// Idempotent of lambda_hat on H (x) Hhat through the unit of Hhat.
Dense lambda_bar_hat(const Constants& k);
/// 1_(1) eps(1_(2) x).
Dense eps_bar_s(const Constants& k);

/// Nearest-neighbour product of lambda_bar blocks on sites 0..n.
Dense chain_idempotent(const Constants& k, std::size_t n, bool parity = false);
/// Rank of chain_idempotent.
std::size_t chain_dimension(const WeakBialgebra& h, std::size_t n, bool parity = false);

}  // namespace wreath::oracle
