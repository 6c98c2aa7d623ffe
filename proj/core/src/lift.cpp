#include "rescycle/lift.hpp"

#include <map>
#include <numeric>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

// differential / chain-map entries are scalar (degree-0) forms with
// polynomial coefficients
Poly scalar_entry_poly(const Form& f) {
  auto s = f.as_scalar();
  if (!s) fail(ErrKind::Lift, "lift_chain_map: matrix entry is not a scalar form");
  auto dc = s->den().as_constant();
  if (!dc) fail(ErrKind::Lift, "lift_chain_map: matrix entry is not polynomial");
  return s->num().scaled(Rational(1) / *dc);
}

int max_entry_degree(const SuperMat<Form>& m) {
  int d = 0;
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const Form& f = m.at(r, c);
      if (!f.is_zero()) d = std::max(d, scalar_entry_poly(f).total_degree());
    }
  return d;
}

// Gaussian elimination; particular solution with free variables zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b, std::size_t nunk) {
  const std::size_t neq = A.size();
  std::vector<std::size_t> pivot_col(neq, nunk);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nunk && row < neq; ++col) {
    std::size_t pr = row;
    while (pr < neq && A[pr][col].is_zero()) ++pr;
    if (pr == neq) continue;
    std::swap(A[pr], A[row]);
    std::swap(b[pr], b[row]);
    Rational inv = Rational(1) / A[row][col];
    for (std::size_t c = col; c < nunk; ++c) A[row][c] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < neq; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      Rational factor = A[r][col];
      for (std::size_t c = col; c < nunk; ++c) A[r][c] -= factor * A[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (std::size_t r = row; r < neq; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  std::vector<Rational> x(nunk, Rational(0));
  for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return x;
}

// Solve phiE * a = rhs for one column of a at a time (the columns do not
// interact).  Unknowns: coefficient of each basis monomial in each entry of
// the column.  Returns nullopt when some column has no solution in the
// given monomial basis.
std::optional<SuperMat<Form>> solve_level(const SuperMat<Form>& phiE, const SuperMat<Form>& rhs,
                                          const std::vector<Monomial>& basis) {
  const std::size_t arows = phiE.cols; // rank E_k
  const std::size_t nb = basis.size();
  const std::size_t nunk = arows * nb;
  SuperMat<Form> a = SuperMat<Form>::zero(rhs.src, phiE.src, arows, rhs.cols);

  for (std::size_t j = 0; j < rhs.cols; ++j) {
    // equations indexed by (target row i, monomial)
    std::map<std::pair<std::size_t, Monomial>, std::size_t,
             bool (*)(const std::pair<std::size_t, Monomial>&,
                      const std::pair<std::size_t, Monomial>&)>
        eqidx([](const std::pair<std::size_t, Monomial>& x,
                 const std::pair<std::size_t, Monomial>& y) {
          if (x.first != y.first) return x.first < y.first;
          return MonoLess{}(x.second, y.second);
        });
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    auto eq_row = [&](std::size_t i, const Monomial& m) -> std::size_t {
      auto it = eqidx.find({i, m});
      if (it != eqidx.end()) return it->second;
      std::size_t idx = A.size();
      eqidx.emplace(std::make_pair(i, m), idx);
      A.emplace_back(nunk, Rational(0));
      b.emplace_back(0);
      return idx;
    };
    for (std::size_t i = 0; i < phiE.rows; ++i) {
      for (std::size_t rk = 0; rk < arows; ++rk) {
        const Form& ef = phiE.at(i, rk);
        if (ef.is_zero()) continue;
        Poly ep = scalar_entry_poly(ef);
        for (const auto& [mono, coef] : ep.terms())
          for (std::size_t bi = 0; bi < nb; ++bi)
            A[eq_row(i, mono * basis[bi])][rk * nb + bi] += coef;
      }
      const Form& rf = rhs.at(i, j);
      if (!rf.is_zero()) {
        Poly rp = scalar_entry_poly(rf);
        for (const auto& [mono, coef] : rp.terms()) b[eq_row(i, mono)] += coef;
      }
    }
    auto x = solve_linear(std::move(A), std::move(b), nunk);
    if (!x) return std::nullopt;
    for (std::size_t rk = 0; rk < arows; ++rk) {
      Poly entry;
      for (std::size_t bi = 0; bi < nb; ++bi)
        if (!(*x)[rk * nb + bi].is_zero())
          entry += Poly::monomial(basis[bi], (*x)[rk * nb + bi]);
      if (!entry.is_zero()) a.at(rk, j) = Form::scalar(RatFun(entry));
    }
  }
  return a;
}

} // namespace

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  while (true) {
    if (std::accumulate(e.begin(), e.end(), 0) <= d) {
      Monomial m;
      m.z = e;
      m.trim();
      out.push_back(m);
    }
    std::size_t i = 0;
    while (i < e.size()) {
      if (++e[i] <= d) break;
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) break;
  }
  return out;
}

ChainMap lift_chain_map(const FreeComplex& F, const FreeComplex& E, const SuperMat<Form>& a0,
                        std::optional<int> degree_bound) {
  if (F.length() > E.length())
    fail(ErrKind::Lift, "lift_chain_map: source complex is longer than the target");
  if (a0.rows != E.rank(0) || a0.cols != F.rank(0))
    fail(ErrKind::Lift, "lift_chain_map: a0 has the wrong shape");

  std::vector<SuperMat<Form>> maps;
  maps.push_back(a0);
  maps.back().src = 0;
  maps.back().tgt = 0;

  for (int k = 1; k <= F.length(); ++k) {
    SuperMat<Form> rhs = plain_mul(maps.back(), F.phi(k));
    const SuperMat<Form>& phiE = E.phi(k);
    int d = degree_bound ? *degree_bound
                         : std::max(1, max_entry_degree(rhs) + max_entry_degree(phiE));
    const int attempts = degree_bound ? 1 : 4;
    std::optional<SuperMat<Form>> a;
    for (int att = 0; att < attempts && !a; ++att, d *= 2)
      a = solve_level(phiE, rhs, monomials_up_to_degree(E.nvars, d));
    if (!a)
      fail(ErrKind::Lift,
           "lift_chain_map: no lift at level " + std::to_string(k) + " within degree bound");
    maps.push_back(std::move(*a));
  }
  return ChainMap{F, E, std::move(maps)};
}

} // namespace rescycle
