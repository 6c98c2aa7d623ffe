#include "rescycle/complexes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rescycle {

namespace {

void check_shapes(const std::vector<std::size_t>& ranks, const std::vector<SuperMat<Form>>& diffs) {
  if (ranks.empty()) fail(ErrKind::Unsupported, "complex needs at least level 0");
  if (diffs.size() + 1 != ranks.size())
    fail(ErrKind::Unsupported, "complex needs one differential per positive level");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const auto& d = diffs[k];
    if (d.src != static_cast<int>(k) + 1 || d.tgt != static_cast<int>(k))
      fail(ErrKind::Internal, "differential has wrong level labels");
    if (d.rows != ranks[k] || d.cols != ranks[k + 1])
      fail(ErrKind::Unsupported, "differential shape does not match ranks");
    for (const auto& e : d.entries) {
      if (e.is_zero()) continue;
      auto deg = e.homogeneous_degree();
      if (!deg || *deg != 0)
        fail(ErrKind::Unsupported, "differential entries must have form degree 0");
      for (const auto& [key, c] : e.coeffs())
        if (!c.is_polynomial() || !c.num().holomorphic())
          fail(ErrKind::Unsupported, "differential entries must be holomorphic polynomials");
    }
  }
}

} // namespace

FreeComplex make_complex_unchecked(int nvars, std::vector<std::size_t> ranks,
                                   std::vector<SuperMat<Form>> diffs) {
  check_shapes(ranks, diffs);
  FreeComplex E;
  E.nvars = nvars;
  E.ranks = std::move(ranks);
  E.diffs = std::move(diffs);
  return E;
}

FreeComplex make_complex(int nvars, std::vector<std::size_t> ranks,
                         std::vector<SuperMat<Form>> diffs) {
  FreeComplex E = make_complex_unchecked(nvars, std::move(ranks), std::move(diffs));
  for (int k = 1; k + 1 <= E.length(); ++k) {
    auto prod = super_mul(E.phi(k), E.phi(k + 1));
    if (!prod.is_zero())
      fail(ErrKind::Unsupported,
           "not a complex: phi_" + std::to_string(k) + " phi_" + std::to_string(k + 1) +
               " != 0");
  }
  return E;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

FreeComplex koszul_complex(const std::vector<Poly>& f, int nvars) {
  int p = static_cast<int>(f.size());
  if (p == 0) fail(ErrKind::Unsupported, "empty tuple");
  for (const auto& g : f) {
    if (g.is_zero()) fail(ErrKind::Unsupported, "zero entry in tuple");
    if (!g.holomorphic()) fail(ErrKind::Unsupported, "tuple entries must be holomorphic");
  }
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::vector<int>>> bases;
  for (int k = 0; k <= p; ++k) {
    bases.push_back(subsets_of_size(p, k));
    ranks.push_back(bases.back().size());
  }
  std::vector<SuperMat<Form>> diffs;
  for (int k = 1; k <= p; ++k) {
    const auto& src = bases[static_cast<std::size_t>(k)];
    const auto& tgt = bases[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<int>, std::size_t> tgt_index;
    for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i]] = i;
    auto d = SuperMat<Form>::zero(k, k - 1, tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const auto& I = src[j];
      for (int t = 0; t < k; ++t) {
        std::vector<int> J = I;
        J.erase(J.begin() + t);
        Rational sign = (t % 2 == 0) ? 1 : -1;
        Poly entry = f[static_cast<std::size_t>(I[static_cast<std::size_t>(t)])].scaled(sign);
        auto& cell = d.at(tgt_index.at(J), j);
        cell += Form::scalar(RatFun(entry));
      }
    }
    diffs.push_back(std::move(d));
  }
  return make_complex(nvars, std::move(ranks), std::move(diffs));
}

FreeComplex staircase_resolution(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) fail(ErrKind::Unsupported, "empty generator list");
  // identify the two staircase variables from the generators (a pure-power CI
  // in one variable is not a staircase in this sense)
  std::set<int> vars;
  for (const auto& g : gens) {
    if (!g.holomorphic()) fail(ErrKind::Unsupported, "generators must be holomorphic monomials");
    for (std::size_t i = 0; i < g.z.size(); ++i)
      if (g.z[i] > 0) vars.insert(static_cast<int>(i));
  }
  if (vars.size() > 2) fail(ErrKind::Unsupported, "staircase resolution needs at most 2 variables");
  for (const auto& g : gens)
    if (g.is_one()) fail(ErrKind::Unsupported, "unit ideal has no staircase resolution");
  int vx = vars.empty() ? 0 : *vars.begin();
  int vy = vars.size() == 2 ? *std::next(vars.begin()) : (vx == 0 ? 1 : 0);
  int r = static_cast<int>(gens.size());
  std::vector<int> a(static_cast<std::size_t>(r)), b(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    a[static_cast<std::size_t>(i)] = gens[static_cast<std::size_t>(i)].zdeg(vx);
    b[static_cast<std::size_t>(i)] = gens[static_cast<std::size_t>(i)].zdeg(vy);
  }
  for (int i = 0; i + 1 < r; ++i) {
    bool sorted = a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)] &&
                  b[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i + 1)];
    if (!sorted)
      fail(ErrKind::Unsupported,
           "staircase generators must be minimal and sorted (strictly increasing in the first "
           "variable, strictly decreasing in the second)");
  }
  auto phi1 = SuperMat<Form>::zero(1, 0, 1, static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    phi1.at(0, static_cast<std::size_t>(j)) =
        Form::scalar(RatFun(Poly::monomial(gens[static_cast<std::size_t>(j)], 1)));
  std::vector<std::size_t> ranks = {1, static_cast<std::size_t>(r)};
  std::vector<SuperMat<Form>> diffs = {std::move(phi1)};
  if (r > 1) {
    auto phi2 = SuperMat<Form>::zero(2, 1, static_cast<std::size_t>(r),
                                     static_cast<std::size_t>(r - 1));
    for (int i = 0; i + 1 < r; ++i) {
      Poly up = Poly::monomial(
          Monomial::var(vx, a[static_cast<std::size_t>(i + 1)] - a[static_cast<std::size_t>(i)]),
          -1);
      Poly down = Poly::monomial(
          Monomial::var(vy, b[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i + 1)]),
          1);
      phi2.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
          Form::scalar(RatFun(up));
      phi2.at(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) =
          Form::scalar(RatFun(down));
    }
    ranks.push_back(static_cast<std::size_t>(r - 1));
    diffs.push_back(std::move(phi2));
  }
  return make_complex(nvars, std::move(ranks), std::move(diffs));
}

SuperMat<Form> dphi(const SuperMat<Form>& phi) {
  auto d = SuperMat<Form>::zero(phi.src, phi.tgt, phi.rows, phi.cols);
  for (std::size_t i = 0; i < phi.entries.size(); ++i) {
    const Form& e = phi.entries[i];
    if (e.is_zero()) continue;
    auto deg = e.homogeneous_degree();
    if (!deg || *deg != 0)
      fail(ErrKind::Unsupported, "dphi needs form-degree-0 entries");
    for (const auto& [key, c] : e.coeffs())
      if (!c.is_polynomial() || !c.num().holomorphic())
        fail(ErrKind::Unsupported, "dphi needs holomorphic polynomial entries");
    auto [holo, anti] = exterior_d(e);
    if (!anti.is_zero()) fail(ErrKind::Internal, "holomorphic entry with antiholomorphic d");
    d.entries[i] = holo;
  }
  return d;
}

SuperMat<Form> dphi_product(const FreeComplex& E, int k) {
  if (k < 1 || k > E.length())
    fail(ErrKind::Unsupported, "dphi_product level out of range");
  SuperMat<Form> P = dphi(E.phi(1));
  for (int j = 2; j <= k; ++j) P = super_mul(P, dphi(E.phi(j)));
  return P;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<Rational>> eval_matrix(const SuperMat<Form>& m,
                                               const std::vector<Rational>& zv,
                                               const std::vector<Rational>& zbv) {
  std::vector<std::vector<Rational>> out(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Form& e = m.at(i, j);
      if (e.is_zero()) continue;
      auto s = e.as_scalar();
      if (!s) fail(ErrKind::Unsupported, "pointwise rank needs scalar entries");
      out[i][j] = s->eval(zv, zbv);
    }
  return out;
}

} // namespace

ComplexCheck verify_complex(const FreeComplex& E, std::uint64_t seed) {
  for (int k = 1; k + 1 <= E.length(); ++k) {
    auto prod = super_mul(E.phi(k), E.phi(k + 1));
    if (!prod.is_zero())
      return {false, k,
              "phi_" + std::to_string(k) + " phi_" + std::to_string(k + 1) + " != 0"};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-19, 19);
  std::uniform_int_distribution<int> den(1, 7);
  const int attempts = 6;
  ComplexCheck last{false, -1, "rank condition failed at every sample point"};
  for (int t = 0; t < attempts; ++t) {
    std::vector<Rational> zv, zbv;
    for (int i = 0; i < E.nvars; ++i) {
      int n = num(rng);
      if (n == 0) n = 1;
      zv.emplace_back(Rational(n, den(rng)));
      int nb = num(rng);
      if (nb == 0) nb = 1;
      zbv.emplace_back(Rational(nb, den(rng)));
    }
    bool ok = true;
    ComplexCheck attempt{true, -1, ""};
    std::vector<std::size_t> rk(static_cast<std::size_t>(E.length()) + 1, 0);
    for (int k = 1; k <= E.length(); ++k)
      rk[static_cast<std::size_t>(k)] = rational_rank(eval_matrix(E.phi(k), zv, zbv));
    // level 0: the complex resolves a sheaf supported on a proper subset, so
    // generically phi_1 is surjective
    if (rk[1] != E.rank(0)) {
      ok = false;
      attempt = {false, 0, "phi_1 not generically surjective"};
    }
    for (int k = 1; ok && k <= E.length(); ++k) {
      std::size_t next = (k + 1 <= E.length()) ? rk[static_cast<std::size_t>(k) + 1] : 0;
      if (rk[static_cast<std::size_t>(k)] + next != E.rank(k)) {
        ok = false;
        attempt = {false, k, "generic rank condition fails at level " + std::to_string(k)};
      }
    }
    if (ok) return {true, -1, ""};
    last = attempt;
  }
  return last;
}

bool chain_map_identity_holds(const ChainMap& cm) {
  int levels = static_cast<int>(cm.maps.size()) - 1;
  for (int k = 1; k <= levels; ++k) {
    if (k > cm.source.length() || k > cm.target.length()) break;
    auto lhs = super_mul(cm.target.phi(k), cm.maps[static_cast<std::size_t>(k)]);
    auto rhs = super_mul(cm.maps[static_cast<std::size_t>(k) - 1], cm.source.phi(k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

} // namespace rescycle
