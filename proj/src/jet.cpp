#include "symkin/jet.hpp"

#include <algorithm>
#include <cmath>

namespace symkin {

namespace {

constexpr int kTableSize = kMaxJetOrder + 2;

struct BinomialTable {
  std::array<std::array<double, kTableSize>, kTableSize> c{};
  constexpr BinomialTable() {
    for (int n = 0; n < kTableSize; ++n) {
      c[n][0] = 1.0;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0.0);
    }
  }
};

constexpr BinomialTable kBinomial;

constexpr std::array<double, kTableSize> make_factorials() {
  std::array<double, kTableSize> f{};
  f[0] = 1.0;
  for (int i = 1; i < kTableSize; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorial = make_factorials();

// Truncated Taylor-coefficient series, index i = coefficient of h^i.
template <class T>
using Series = std::array<T, kMaxJetOrder + 1>;

template <class T>
Series<T> to_series(const Jet<T>& j) {
  Series<T> s{};
  for (int i = 0; i <= j.order(); ++i) s[i] = j[i] / kFactorial[i];
  return s;
}

template <class T>
Jet<T> from_series(const Series<T>& s, int order) {
  Jet<T> j(order);
  for (int i = 0; i <= order; ++i) j[i] = s[i] * kFactorial[i];
  return j;
}

Series<double> series_mul(const Series<double>& a, const Series<double>& b, int order) {
  Series<double> r{};
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    r[k] = acc;
  }
  return r;
}

// sum_n outer[n] (inner - inner[0])^n, all as Taylor coefficients.
template <class T>
Series<T> series_compose(const Series<T>& outer, Series<double> inner, int order) {
  inner[0] = 0.0;
  Series<T> r{};
  r[0] = outer[0];
  Series<double> power{};
  power[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    power = series_mul(power, inner, order);
    // power starts at h^n since inner has no constant term
    for (int m = n; m <= order; ++m) r[m] += power[m] * outer[n];
  }
  return r;
}

template <class T>
Jet<T> compose_impl(const Jet<T>& outer, const ScalarJet& inner) {
  const int order = std::min(outer.order(), inner.order());
  return from_series(series_compose(to_series(outer), to_series(inner), order), order);
}

}  // namespace

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n >= kTableSize) {
    fail(Reason::OutOfRange, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  return kBinomial.c[n][k];
}

std::pair<ScalarJet, ScalarJet> jet_sin_cos(const ScalarJet& theta) {
  const int order = theta.order();
  ScalarJet s(order), c(order);
  s[0] = std::sin(theta[0]);
  c[0] = std::cos(theta[0]);
  // (sin θ)' = θ' cos θ, (cos θ)' = -θ' sin θ, differentiated n times by Leibniz.
  for (int n = 0; n < order; ++n) {
    double ds = 0.0, dc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = binomial(n, i) * theta[i + 1];
      ds += w * c[n - i];
      dc -= w * s[n - i];
    }
    s[n + 1] = ds;
    c[n + 1] = dc;
  }
  return {s, c};
}

PlanarJet jet_tilde(const PlanarJet& a) { return jet_j_pow(1, a); }

PlanarJet jet_j_pow(int k, const PlanarJet& a) {
  const JPower j(k);
  PlanarJet r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = j(a[i]);
  return r;
}

PlanarJet jet_rotate(const PlanarJet& v, const ScalarJet& angle) {
  const auto [s, c] = jet_sin_cos(angle);
  return c * v + s * jet_tilde(v);
}

ScalarJet jet_compose(const ScalarJet& outer, const ScalarJet& inner) {
  return compose_impl(outer, inner);
}

PlanarJet jet_compose(const PlanarJet& outer, const ScalarJet& inner) {
  return compose_impl(outer, inner);
}

ScalarJet jet_invert(const ScalarJet& g, double s0) {
  const int order = g.order();
  if (order == 0) return ScalarJet::constant(s0, 0);
  const double slope = g[1];
  if (!(std::abs(slope) > 0.0) || !std::isfinite(1.0 / slope)) {
    fail(Reason::PureTranslation, "function is not invertible: vanishing first derivative");
  }
  const Series<double> gs = to_series(g);
  Series<double> inv{};
  inv[1] = 1.0 / slope;
  // Fix coefficient n so that g(inv(h)) = g0 + h holds through order n.
  for (int n = 2; n <= order; ++n) {
    const Series<double> c = series_compose(gs, inv, n);
    inv[n] = -c[n] / gs[1];
  }
  inv[0] = s0;
  return from_series(inv, order);
}

}  // namespace symkin
