#include "wreath/oracle.hpp"

#include "wreath/errors.hpp"

namespace wreath::oracle {

Dense Dense::identity(std::size_t n) {
  Dense r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

Dense multiply(const Dense& x, const Dense& y) {
  if (x.cols != y.rows) throw ShapeMismatch("oracle multiply");
  Dense r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const mpq_class& v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        if (y(k, j) != 0) r(i, j) += v * y(k, j);
      }
    }
  }
  return r;
}

Dense kron(const Dense& x, const Dense& y) {
  Dense r(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      if (x(i, j) == 0) continue;
      for (std::size_t p = 0; p < y.rows; ++p) {
        for (std::size_t q = 0; q < y.cols; ++q) {
          if (y(p, q) != 0) r(i * y.rows + p, j * y.cols + q) = x(i, j) * y(p, q);
        }
      }
    }
  }
  return r;
}

std::size_t rank(Dense m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      const mpq_class f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

bool equal(const Dense& x, const LinMap& f) {
  if (x.rows != f.rows() || x.cols != f.cols()) return false;
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      if (x(i, j) != f.at(i, j).to_mpq()) return false;
    }
  }
  return true;
}

Constants constants_of(const WeakBialgebra& h) {
  if (!h.algebra.field().is_rational()) {
    throw FieldMismatch("the oracle works over the rationals");
  }
  Constants k;
  const std::size_t d = h.algebra.space.dim();
  k.d = d;
  k.mul.resize(d * d * d);
  k.comul.resize(d * d * d);
  k.unit.resize(d);
  k.counit.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        k.mul[(a * d + b) * d + c] = h.algebra.mul.at(c, a * d + b).to_mpq();
        k.comul[(a * d + b) * d + c] = h.coalgebra.comul.at(b * d + c, a).to_mpq();
      }
    }
    k.unit[a] = h.algebra.unit.at(a, 0).to_mpq();
    k.counit[a] = h.coalgebra.counit.at(0, a).to_mpq();
  }
  return k;
}

Dense lambda(const Constants& k) {
  const std::size_t d = k.d;
  Dense r(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t kk = 0; kk < d; ++kk)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          if (k.c(i, p, q) == 0) continue;
          for (std::size_t a = 0; a < d; ++a) {
            r(a * d + q, i * d + kk) += k.c(i, p, q) * k.m(a, p, kk);
          }
        }
  return r;
}

Dense lambda_hat(const Constants& k) {
  const std::size_t d = k.d;
  Dense r(d * d, d * d);
  for (std::size_t kk = 0; kk < d; ++kk)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          if (k.c(i, p, q) == 0) continue;
          for (std::size_t b = 0; b < d; ++b) {
            r(p * d + b, kk * d + i) += k.c(i, p, q) * k.m(q, b, kk);
          }
        }
  return r;
}

// (s (x) mu_t).(lambda (x) t).(eta_t (x) s (x) t) on s (x) t, for
// lambda: t (x) s -> s (x) t with t-unit eta and t-product tmul(x, y, z).
template <class Mul>
Dense left_path(const Dense& lam, const std::vector<mpq_class>& eta, std::size_t d, Mul tmul) {
  Dense r(d * d, d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t u = 0; u < d; ++u) {
        if (eta[u] == 0) continue;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            const mpq_class& l = lam(a * d + b, u * d + s);
            if (l == 0) continue;
            for (std::size_t z = 0; z < d; ++z) {
              const mpq_class m = tmul(b, t, z);
              if (m != 0) r(a * d + z, s * d + t) += eta[u] * l * m;
            }
          }
      }
  return r;
}

Dense lambda_bar(const Constants& k) {
  return left_path(lambda(k), k.unit, k.d,
                   [&](std::size_t x, std::size_t y, std::size_t z) { return k.m(x, y, z); });
}

Dense lambda_bar_hat(const Constants& k) {
  // The dual has unit given by the counit and product given by the coproduct.
  return left_path(lambda_hat(k), k.counit, k.d,
                   [&](std::size_t x, std::size_t y, std::size_t z) { return k.c(z, x, y); });
}

Dense eps_bar_s(const Constants& k) {
  const std::size_t d = k.d;
  Dense r(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t u = 0; u < d; ++u) {
      if (k.unit[u] == 0) continue;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          if (k.c(u, p, q) == 0) continue;
          for (std::size_t z = 0; z < d; ++z) {
            r(p, j) += k.unit[u] * k.c(u, p, q) * k.m(q, j, z) * k.counit[z];
          }
        }
    }
  return r;
}

Dense chain_idempotent(const Constants& k, std::size_t n, bool parity) {
  const std::size_t d = k.d;
  const Dense id = Dense::identity(d);
  if (n == 0) return id;
  // bar_eo acts on (even site) (x) (odd site), bar_oe on (odd) (x) (even).
  Dense bar_eo = parity ? lambda_bar(k) : lambda_bar_hat(k);
  Dense bar_oe = parity ? lambda_bar_hat(k) : lambda_bar(k);
  auto power = [](const Dense& f, std::size_t m) {
    Dense r = Dense::identity(1);
    for (std::size_t i = 0; i < m; ++i) r = kron(r, f);
    return r;
  };
  if (n % 2) {
    return multiply(kron(kron(id, power(bar_oe, (n - 1) / 2)), id),
                    power(bar_eo, (n + 1) / 2));
  }
  return multiply(kron(id, power(bar_oe, n / 2)), kron(power(bar_eo, n / 2), id));
}

std::size_t chain_dimension(const WeakBialgebra& h, std::size_t n, bool parity) {
  return rank(chain_idempotent(constants_of(h), n, parity));
}

}  // namespace wreath::oracle
