#include "wronski/wronskian.hpp"

#include <bit>
#include <cassert>

#include "wronski/errors.hpp"

namespace wronski {

EtaPoly determinant_by_minors(const EtaMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return EtaPoly(ParamRat(1));
  assert(n < 20);
  // minor[mask]: determinant of rows 0..popcount(mask)-1 restricted to the
  // columns in mask, expanded along its last row.
  std::vector<EtaPoly> minor(std::size_t{1} << n);
  minor[0] = EtaPoly(ParamRat(1));
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const int row = std::popcount(mask) - 1;
    EtaPoly acc;
    int above = 0;  // set columns to the right of j
    for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
      const std::size_t bit = std::size_t{1} << j;
      if (!(mask & bit)) continue;
      const EtaPoly& sub = minor[mask ^ bit];
      if (!sub.is_zero() && !m[row][j].is_zero()) {
        EtaPoly term = m[row][j] * sub;
        acc = (above % 2 == 0) ? acc + term : acc - term;
      }
      ++above;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

EtaPoly determinant_bareiss(EtaMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return EtaPoly(ParamRat(1));
  bool negate = false;
  EtaPoly prev(ParamRat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        EtaPoly cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (k == 0) {
          m[i][j] = std::move(cross);
        } else {
          auto q = cross.divide_exact(prev);
          assert(q.has_value());
          m[i][j] = std::move(*q);
        }
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

EtaMatrix wronskian_matrix(std::span<const QuasiPoly> columns) {
  const std::size_t n = columns.size();
  EtaMatrix m(n, std::vector<EtaPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    RawQuasi r = columns[j].raw();
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = r.poly;
      if (i + 1 < n) r = differentiate(r);
    }
  }
  return m;
}

QuasiPoly wronskian_of(std::span<const QuasiPoly> columns, DetMethod method) {
  const std::size_t n = columns.size();
  if (n == 0) return QuasiPoly();
  if (n == 1) return columns[0];
  AffineExp es, ec;
  for (const auto& c : columns) {
    es += c.exp_sin();
    ec += c.exp_cos();
  }
  const Rational drop(static_cast<long>(n * (n - 1) / 2));
  es = es - drop;
  ec = ec - drop;
  if (method == DetMethod::kAuto) method = n <= 4 ? DetMethod::kMinors : DetMethod::kBareiss;
  EtaMatrix m = wronskian_matrix(columns);
  EtaPoly det = method == DetMethod::kMinors ? determinant_by_minors(m)
                                              : determinant_bareiss(std::move(m));
  return QuasiPoly(std::move(es), std::move(ec), std::move(det));
}

QuasiPoly wronskian(const StateTuple& t, DetMethod method) {
  std::vector<QuasiPoly> cols;
  cols.reserve(t.size());
  for (const auto& s : t) cols.push_back(make_state(s));
  return wronskian_of(cols, method);
}

QuasiPoly wronskian(const StateTuple& t, const ParamPoint& at, DetMethod method) {
  std::vector<QuasiPoly> cols;
  cols.reserve(t.size());
  for (const auto& s : t) cols.push_back(make_state(s).instantiate(at));
  return wronskian_of(cols, method);
}

bool wronskian_compose_check(const StateTuple& base, const State& f, const State& g,
                             const ParamPoint& at) {
  const StateTuple with_f = base.with_appended(f);
  const StateTuple with_g = base.with_appended(g);
  const StateTuple with_both = with_f.with_appended(g);
  const QuasiPoly lhs = wronskian(with_both, at) * wronskian(base, at);
  const std::vector<QuasiPoly> outer{wronskian(with_f, at), wronskian(with_g, at)};
  const QuasiPoly rhs = wronskian_of(outer);
  const auto c = compare_quasi(lhs, rhs);
  return c.has_value() && *c == ParamRat(1);
}

}  // namespace wronski
