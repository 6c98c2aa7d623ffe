#include "rescycle/universal.hpp"

#include <algorithm>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

// index of m in basis, or -1
int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> identity_mat(std::size_t m) {
  std::vector<std::vector<int>> id(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
  return id;
}

// u_t(M) = sum_{g=0}^{beta_t - 1} z_t^(beta_t - 1 - g) M_t^g as a Form matrix;
// the partial geometric series satisfying (z_t Id - M_t) u_t = z_t^beta_t Id
SuperMat<Form> u_series(const UniversalData& u, int t) {
  const std::size_t m = u.basis.size();
  const int var = u.support[static_cast<std::size_t>(t)];
  const int beta = u.beta[static_cast<std::size_t>(t)];
  SuperMat<Form> out = SuperMat<Form>::zero(0, 0, m, m);
  std::vector<std::vector<int>> power = identity_mat(m);
  for (int g = 0; g < beta; ++g) {
    Poly coef = Poly::monomial(Monomial::var(var, beta - 1 - g), Rational(1));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (power[i][j] != 0)
          out.at(i, j) += Form::scalar(RatFun(coef.scaled(Rational(power[i][j]))));
    if (g + 1 < beta) {
      const auto& M = u.multmats[static_cast<std::size_t>(t)];
      std::vector<std::vector<int>> next(m, std::vector<int>(m, 0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
          if (M[i][k] != 0)
            for (std::size_t j = 0; j < m; ++j) next[i][j] += M[i][k] * power[k][j];
      power = std::move(next);
    }
  }
  return out;
}

} // namespace

UniversalData universal_resolution(const MonomialIdeal& J, const std::vector<int>& W) {
  const auto primes = minimal_primes(J);
  if (std::find(primes.begin(), primes.end(), W) == primes.end())
    fail(ErrKind::Unsupported, "universal_resolution: W is not a minimal prime of the ideal");

  UniversalData u;
  u.support = W;
  const int p = static_cast<int>(W.size());
  const int nvars = J.nvars();
  const MonomialIdeal loc = J.localized(W);

  // minimal pure powers z_{W[t]}^beta_t contained in the localized ideal
  u.beta.assign(W.size(), -1);
  for (std::size_t t = 0; t < W.size(); ++t) {
    for (const Monomial& g : loc.gens()) {
      bool pure = g.zdeg(W[t]) > 0;
      for (std::size_t v = 0; v < g.z.size() && pure; ++v)
        if (static_cast<int>(v) != W[t] && g.z[v] != 0) pure = false;
      if (pure && (u.beta[t] < 0 || g.zdeg(W[t]) < u.beta[t])) u.beta[t] = g.zdeg(W[t]);
    }
    if (u.beta[t] <= 0)
      fail(ErrKind::Internal, "universal_resolution: localized ideal lacks a pure power");
  }

  // standard monomials of the localized ideal inside the box prod [0, beta_t)
  std::vector<int> a(W.size(), 0);
  while (true) {
    Monomial mono = Monomial::one();
    for (std::size_t t = 0; t < W.size(); ++t)
      if (a[t] > 0) mono = mono * Monomial::var(W[t], a[t]);
    if (!loc.contains(mono)) u.basis.push_back(mono);
    std::size_t i = 0;
    while (i < W.size()) {
      if (++a[i] < u.beta[i]) break;
      a[i] = 0;
      ++i;
    }
    if (i == W.size()) break;
  }
  // degree-descending order makes every multiplication matrix strictly upper
  // triangular (multiplying by a variable can only raise the degree)
  MonoLess less;
  std::sort(u.basis.begin(), u.basis.end(),
            [&](const Monomial& x, const Monomial& y) { return less(y, x); });
  const std::size_t m = u.basis.size();

  u.multmats.assign(W.size(), std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
  for (std::size_t t = 0; t < W.size(); ++t) {
    const Monomial zt = Monomial::var(W[t]);
    for (std::size_t j = 0; j < m; ++j) {
      int i = basis_index(u.basis, u.basis[j] * zt);
      if (i >= 0) u.multmats[t][static_cast<std::size_t>(i)][j] = 1;
    }
  }

  // K: Koszul complex of (z_t Id - M_t) over the basis module, ranks m*C(p,k);
  // basis vector (I, b) of level k sits at index subset_index * m + b
  std::vector<std::size_t> kranks;
  for (int k = 0; k <= p; ++k) kranks.push_back(m * subsets_of_size(p, k).size());
  std::vector<SuperMat<Form>> kdiffs;
  for (int k = 1; k <= p; ++k) {
    auto cols_sub = subsets_of_size(p, k);
    auto rows_sub = subsets_of_size(p, k - 1);
    SuperMat<Form> d = SuperMat<Form>::zero(k, k - 1, kranks[static_cast<std::size_t>(k) - 1],
                                            kranks[static_cast<std::size_t>(k)]);
    for (std::size_t ci = 0; ci < cols_sub.size(); ++ci) {
      const auto& I = cols_sub[ci];
      for (std::size_t t = 0; t < I.size(); ++t) {
        std::vector<int> rest = I;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        auto rit = std::find(rows_sub.begin(), rows_sub.end(), rest);
        std::size_t ri = static_cast<std::size_t>(rit - rows_sub.begin());
        Rational sgn = (t % 2 == 0) ? Rational(1) : Rational(-1);
        const Poly zvar = Poly::variable(W[static_cast<std::size_t>(I[t])]);
        const auto& M = u.multmats[static_cast<std::size_t>(I[t])];
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            Poly entry = (i == j) ? zvar : Poly::zero();
            entry -= Poly::constant(Rational(M[i][j]));
            if (!entry.is_zero()) d.at(ri * m + i, ci * m + j) = Form::scalar(RatFun(entry.scaled(sgn)));
          }
      }
    }
    kdiffs.push_back(std::move(d));
  }
  u.K = make_complex(nvars, kranks, std::move(kdiffs));

  // L: Koszul complex of the pure powers themselves
  std::vector<Poly> powers;
  for (std::size_t t = 0; t < W.size(); ++t)
    powers.push_back(Poly::monomial(Monomial::var(W[t], u.beta[t]), Rational(1)));
  u.L = koszul_complex(powers, nvars);

  // chain map c: L -> K lifting O/(z^beta) -> A; c_k sends the Koszul
  // generator e_I to (prod_{t in I} u_t(M)) applied to the basis vector of the
  // monomial 1, placed in the e_I block
  const int unit_pos = basis_index(u.basis, Monomial::one());
  if (unit_pos < 0) fail(ErrKind::Internal, "universal_resolution: 1 is not a standard monomial");
  std::vector<SuperMat<Form>> cmaps;
  for (int k = 0; k <= p; ++k) {
    auto subs = subsets_of_size(p, k);
    SuperMat<Form> ck =
        SuperMat<Form>::zero(k, k, kranks[static_cast<std::size_t>(k)], subs.size());
    for (std::size_t ci = 0; ci < subs.size(); ++ci) {
      SuperMat<Form> acc = SuperMat<Form>::zero(0, 0, m, m);
      for (std::size_t i = 0; i < m; ++i) acc.at(i, i) = Form::one();
      for (int t : subs[ci]) acc = plain_mul(acc, u_series(u, t));
      for (std::size_t i = 0; i < m; ++i)
        ck.at(ci * m + i, ci) = acc.at(i, static_cast<std::size_t>(unit_pos));
    }
    cmaps.push_back(std::move(ck));
  }
  u.c = ChainMap{u.L, u.K, std::move(cmaps)};
  return u;
}

std::vector<std::vector<int>> universal_mult_matrix(const UniversalData& u,
                                                    const std::vector<int>& gamma) {
  if (gamma.size() != u.support.size())
    fail(ErrKind::Internal, "universal_mult_matrix: exponent length mismatch");
  const std::size_t m = u.basis.size();
  Monomial zg = Monomial::one();
  for (std::size_t t = 0; t < gamma.size(); ++t)
    if (gamma[t] > 0) zg = zg * Monomial::var(u.support[t], gamma[t]);
  std::vector<std::vector<int>> out(m, std::vector<int>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    int i = basis_index(u.basis, u.basis[j] * zg);
    if (i >= 0) out[static_cast<std::size_t>(i)][j] = 1;
  }
  return out;
}

SuperMat<Form> universal_bmatrix(const UniversalData& u) {
  const std::size_t m = u.basis.size();
  const int p = static_cast<int>(u.support.size());
  SuperMat<Form> acc = SuperMat<Form>::zero(p, p, m, m);
  for (std::size_t i = 0; i < m; ++i) acc.at(i, i) = Form::one();
  for (int t = 0; t < p; ++t) acc = plain_mul(acc, u_series(u, t));
  acc.src = p;
  acc.tgt = p;
  return acc;
}

} // namespace rescycle
