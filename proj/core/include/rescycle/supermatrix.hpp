#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rescycle/errors.hpp"
#include "rescycle/form.hpp"

namespace rescycle {

// Matrix of a graded morphism Hom(E_src, E_tgt) in fixed frames. The stored
// entries are the plain matrix {beta}; the superalgebra product is
//   {beta gamma} = (-1)^(deg_e(beta) * deg_f(gamma)) {beta}{gamma},
// with deg_e = (src + tgt) mod 2 and deg_f the common total form degree of the
// entries. Mixed-degree data must be split by the caller before use.
template <typename E>
struct SuperMat {
  int src = 0, tgt = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<E> entries; // row-major

  static SuperMat zero(int src_, int tgt_, std::size_t rows_, std::size_t cols_) {
    SuperMat m;
    m.src = src_;
    m.tgt = tgt_;
    m.rows = rows_;
    m.cols = cols_;
    m.entries.assign(rows_ * cols_, E{});
    return m;
  }

  E& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const E& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  int deg_e() const { return (src + tgt) & 1; }

  bool is_zero() const {
    for (const auto& e : entries)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const SuperMat& a, const SuperMat& b) {
    return a.src == b.src && a.tgt == b.tgt && a.rows == b.rows && a.cols == b.cols &&
           a.entries == b.entries;
  }
};

// total degree of a single entry when homogeneous (nullopt otherwise);
// overloaded per entry algebra
std::optional<int> entry_degree(const Form& f);

// negation of an entry
inline Form entry_negate(const Form& f) { return -f; }

// product of two entries; overloads for current-valued entries live with the
// current algebra
inline Form entry_mul(const Form& a, const Form& b) { return wedge(a, b); }

// common form degree of the nonzero entries (0 for a zero matrix);
// errors when mixed
template <typename E>
int deg_f(const SuperMat<E>& m) {
  std::optional<int> d;
  for (const auto& e : m.entries) {
    if (e.is_zero()) continue;
    auto ed = entry_degree(e);
    if (!ed) fail(ErrKind::Unsupported, "matrix entry is not form-degree homogeneous");
    if (d && *d != *ed)
      fail(ErrKind::Unsupported, "matrix entries have mixed form degrees; split the data first");
    d = ed;
  }
  return d.value_or(0);
}

template <typename E>
SuperMat<E> operator+(const SuperMat<E>& a, const SuperMat<E>& b) {
  if (a.src != b.src || a.tgt != b.tgt || a.rows != b.rows || a.cols != b.cols)
    fail(ErrKind::Internal, "matrix shape mismatch in addition");
  SuperMat<E> r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

template <typename E>
SuperMat<E> operator-(const SuperMat<E>& a, const SuperMat<E>& b) {
  if (a.src != b.src || a.tgt != b.tgt || a.rows != b.rows || a.cols != b.cols)
    fail(ErrKind::Internal, "matrix shape mismatch in subtraction");
  SuperMat<E> r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i)
    r.entries[i] += entry_negate(b.entries[i]);
  return r;
}

// superalgebra composition: beta after gamma (beta.src must equal gamma.tgt)
template <typename A, typename B>
auto super_mul(const SuperMat<A>& beta, const SuperMat<B>& gamma)
    -> SuperMat<decltype(entry_mul(std::declval<A>(), std::declval<B>()))> {
  using R = decltype(entry_mul(std::declval<A>(), std::declval<B>()));
  if (beta.src != gamma.tgt)
    fail(ErrKind::Internal, "level mismatch in composition");
  if (beta.cols != gamma.rows)
    fail(ErrKind::Internal, "matrix shape mismatch in composition");
  bool flip = (beta.deg_e() & 1) && (deg_f(gamma) & 1);
  auto r = SuperMat<R>::zero(gamma.src, beta.tgt, beta.rows, gamma.cols);
  for (std::size_t i = 0; i < beta.rows; ++i)
    for (std::size_t j = 0; j < gamma.cols; ++j) {
      R acc{};
      for (std::size_t t = 0; t < beta.cols; ++t) {
        const auto& x = beta.at(i, t);
        const auto& y = gamma.at(t, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += entry_mul(x, y);
      }
      if (flip) acc = entry_negate(acc);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

// plain matrix product {beta}{gamma} with no super sign; used by tests that
// compare the two evaluation routes
template <typename A, typename B>
auto plain_mul(const SuperMat<A>& beta, const SuperMat<B>& gamma)
    -> SuperMat<decltype(entry_mul(std::declval<A>(), std::declval<B>()))> {
  using R = decltype(entry_mul(std::declval<A>(), std::declval<B>()));
  if (beta.cols != gamma.rows) fail(ErrKind::Internal, "matrix shape mismatch in product");
  auto r = SuperMat<R>::zero(gamma.src, beta.tgt, beta.rows, gamma.cols);
  for (std::size_t i = 0; i < beta.rows; ++i)
    for (std::size_t j = 0; j < gamma.cols; ++j) {
      R acc{};
      for (std::size_t t = 0; t < beta.cols; ++t) {
        const auto& x = beta.at(i, t);
        const auto& y = gamma.at(t, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += entry_mul(x, y);
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

// ordinary diagonal sum of an endomorphism block
template <typename E>
E super_trace(const SuperMat<E>& m) {
  if (m.src != m.tgt || m.rows != m.cols)
    fail(ErrKind::Unsupported, "trace requires an endomorphism block");
  E acc{};
  for (std::size_t i = 0; i < m.rows; ++i) acc += m.at(i, i);
  return acc;
}

std::string to_string(const SuperMat<Form>& m, const VarTable& vars);

} // namespace rescycle
