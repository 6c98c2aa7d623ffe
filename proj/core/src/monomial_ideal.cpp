#include "rescycle/monomial_ideal.hpp"

#include <algorithm>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

bool divides(const Monomial& a, const Monomial& b) { return b.divide(a).has_value(); }

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return MonoLess{}(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (auto& g : gens) {
    g.trim();
    if (!g.holomorphic())
      fail(ErrKind::Unsupported, "monomial ideal generators must be holomorphic");
    for (std::size_t i = 0; i < g.z.size(); ++i)
      if (g.z[i] > 0 && static_cast<int>(i) >= nvars)
        fail(ErrKind::Unsupported, "generator uses an undeclared variable");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_polys(int nvars, const std::vector<Poly>& gens) {
  std::vector<Monomial> ms;
  for (const auto& p : gens) {
    auto t = p.as_single_term();
    if (!t || t->second == 0)
      fail(ErrKind::Unsupported, "ideal generators must be single monomials");
    ms.push_back(t->first);
  }
  return MonomialIdeal(nvars, std::move(ms));
}

bool MonomialIdeal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_one()) return true;
  return false;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::localized(const std::vector<int>& keep) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    Monomial r;
    for (int v : keep) {
      int e = g.zdeg(v);
      if (e > 0) r = r * Monomial::var(v, e);
    }
    out.push_back(r);
  }
  return MonomialIdeal(nvars_, std::move(out));
}

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& J) {
  if (J.is_zero()) fail(ErrKind::Unsupported, "zero ideal has no minimal coordinate primes");
  if (J.is_unit()) fail(ErrKind::Unsupported, "unit ideal has no minimal coordinate primes");
  // supports of the generators as bitmasks over the variables that occur
  std::vector<unsigned> supports;
  unsigned all = 0;
  for (const auto& g : J.gens()) {
    unsigned s = 0;
    for (std::size_t i = 0; i < g.z.size(); ++i)
      if (g.z[i] > 0) s |= 1u << i;
    supports.push_back(s);
    all |= s;
  }
  std::vector<int> usable;
  for (int v = 0; v < J.nvars(); ++v)
    if (all & (1u << v)) usable.push_back(v);
  int n = static_cast<int>(usable.size());
  if (n > 20) fail(ErrKind::Unsupported, "too many variables for transversal enumeration");
  std::vector<unsigned> hits;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned varmask = 0;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) varmask |= 1u << usable[static_cast<std::size_t>(b)];
    bool hit = true;
    for (unsigned s : supports)
      if ((s & varmask) == 0) {
        hit = false;
        break;
      }
    if (hit) hits.push_back(varmask);
  }
  std::vector<unsigned> minimal;
  for (unsigned h : hits) {
    bool is_min = true;
    for (unsigned o : hits)
      if (o != h && (o & h) == o) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(h);
  }
  std::vector<std::vector<int>> out;
  for (unsigned m : minimal) {
    std::vector<int> prime;
    for (int v = 0; v < J.nvars(); ++v)
      if (m & (1u << v)) prime.push_back(v);
    out.push_back(std::move(prime));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

// smallest e with z_v^e in J, or -1
int pure_power_bound(const MonomialIdeal& J, int v) {
  int best = -1;
  for (const auto& g : J.gens()) {
    bool pure = true;
    for (std::size_t i = 0; i < g.z.size(); ++i)
      if (g.z[i] > 0 && static_cast<int>(i) != v) {
        pure = false;
        break;
      }
    if (pure && g.zdeg(v) > 0 && (best < 0 || g.zdeg(v) < best)) best = g.zdeg(v);
  }
  return best;
}

} // namespace

long long multiplicity_along(const MonomialIdeal& J, const std::vector<int>& P) {
  auto primes = minimal_primes(J);
  if (std::find(primes.begin(), primes.end(), P) == primes.end())
    fail(ErrKind::Unsupported, "multiplicity requested along a non-minimal prime");
  MonomialIdeal loc = J.localized(P);
  // the localized ideal contains a pure power of every variable of P
  std::vector<int> bound;
  for (int v : P) {
    int b = pure_power_bound(loc, v);
    if (b < 0) fail(ErrKind::Internal, "localized ideal is not cofinite in its variables");
    bound.push_back(b);
  }
  // count standard monomials inside the bounding box
  long long count = 0;
  std::vector<int> exp(P.size(), 0);
  while (true) {
    Monomial m;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (exp[i] > 0) m = m * Monomial::var(P[i], exp[i]);
    if (!loc.contains(m)) ++count;
    std::size_t i = 0;
    while (i < P.size()) {
      if (++exp[i] < bound[i]) break;
      exp[i] = 0;
      ++i;
    }
    if (i == P.size()) break;
  }
  return count;
}

Cycle fundamental_cycle(const MonomialIdeal& J) {
  Cycle c;
  for (const auto& P : minimal_primes(J))
    c.add(P, Scalar(Rational(multiplicity_along(J, P)), 0));
  return c;
}

long long length_along(const MonomialIdeal& J, const std::vector<int>& P) {
  if (J.is_zero() || J.is_unit())
    fail(ErrKind::Unsupported, "length is defined for proper nonzero monomial ideals");
  std::vector<int> allvars;
  for (int v = 0; v < J.nvars(); ++v) allvars.push_back(v);
  if (P != allvars)
    fail(ErrKind::Unsupported, "length supported along the maximal ideal of all variables only");
  if (J.nvars() > 3) fail(ErrKind::Unsupported, "length supported in at most 3 variables");

  // z^a is in (J : m^inf) iff for every direction v some generator g has
  // g_j <= a_j for all j != v (deep v-shifts of z^a land in J)
  auto in_saturation = [&](const std::vector<int>& a) {
    for (int v = 0; v < J.nvars(); ++v) {
      bool ok = false;
      for (const auto& g : J.gens()) {
        bool fits = true;
        for (int j = 0; j < J.nvars(); ++j) {
          if (j == v) continue;
          if (g.zdeg(j) > a[static_cast<std::size_t>(j)]) {
            fits = false;
            break;
          }
        }
        if (fits) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  // monomials of sat \ J live inside the box bounded by the max exponents
  std::vector<int> box(static_cast<std::size_t>(J.nvars()), 1);
  for (const auto& g : J.gens())
    for (int v = 0; v < J.nvars(); ++v)
      box[static_cast<std::size_t>(v)] =
          std::max(box[static_cast<std::size_t>(v)], g.zdeg(v) + 1);

  long long count = 0;
  std::vector<int> a(static_cast<std::size_t>(J.nvars()), 0);
  while (true) {
    Monomial m;
    for (int v = 0; v < J.nvars(); ++v)
      if (a[static_cast<std::size_t>(v)] > 0) m = m * Monomial::var(v, a[static_cast<std::size_t>(v)]);
    if (!J.contains(m) && in_saturation(a)) ++count;
    int i = 0;
    while (i < J.nvars()) {
      if (++a[static_cast<std::size_t>(i)] < box[static_cast<std::size_t>(i)]) break;
      a[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == J.nvars()) break;
  }
  return count;
}

} // namespace rescycle
