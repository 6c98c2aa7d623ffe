#include "rescycle/form.hpp"

#include <algorithm>
#include <sstream>

#include "rescycle/errors.hpp"

namespace rescycle {

namespace {

// generators tagged for ordering: (0, i) = dzbar_i, (1, i) = dz_i
using Gen = std::pair<int, int>;

std::vector<Gen> key_gens(const FormKey& k) {
  std::vector<Gen> g;
  g.reserve(static_cast<std::size_t>(k.degree()));
  for (int b : k.bars) g.emplace_back(0, b);
  for (int d : k.dzs) g.emplace_back(1, d);
  return g;
}

} // namespace

std::optional<std::pair<FormKey, int>> merge_keys(const FormKey& a, const FormKey& b) {
  std::vector<Gen> gens = key_gens(a);
  std::vector<Gen> gb = key_gens(b);
  gens.insert(gens.end(), gb.begin(), gb.end());
  // count inversions of the concatenation relative to canonical order; each
  // generator is odd so the sign is the permutation parity
  int inv = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] == gens[j]) return std::nullopt;
      if (gens[j] < gens[i]) ++inv;
    }
  FormKey k;
  std::sort(gens.begin(), gens.end());
  for (const auto& [tag, idx] : gens)
    (tag == 0 ? k.bars : k.dzs).push_back(idx);
  return std::make_pair(k, inv % 2 == 0 ? 1 : -1);
}

Form Form::scalar(const RatFun& c) {
  Form f;
  f.set(FormKey{}, c);
  return f;
}

Form Form::dz(int i) {
  Form f;
  f.set(FormKey{{}, {i}}, RatFun(Rational(1)));
  return f;
}

Form Form::dzbar(int i) {
  Form f;
  f.set(FormKey{{i}, {}}, RatFun(Rational(1)));
  return f;
}

Form Form::generator(const FormKey& k, const RatFun& c) {
  Form f;
  f.set(k, c);
  return f;
}

void Form::set(const FormKey& k, const RatFun& c) {
  if (c.is_zero()) {
    c_.erase(k);
  } else {
    c_[k] = c;
  }
}

const RatFun& Form::coeff(const FormKey& k) const {
  static const RatFun kZero;
  auto it = c_.find(k);
  return it == c_.end() ? kZero : it->second;
}

std::optional<RatFun> Form::as_scalar() const {
  if (c_.empty()) return RatFun();
  if (c_.size() == 1 && c_.begin()->first.is_scalar()) return c_.begin()->second;
  return std::nullopt;
}

int Form::top_degree() const {
  int d = 0;
  for (const auto& [k, c] : c_) d = std::max(d, k.degree());
  return d;
}

std::optional<int> Form::homogeneous_degree() const {
  if (c_.empty()) return 0;
  int d = c_.begin()->first.degree();
  for (const auto& [k, c] : c_)
    if (k.degree() != d) return std::nullopt;
  return d;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [k, c] : o.c_) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [k, c] : o.c_) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      c_.emplace(k, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

Form Form::scaled(const RatFun& c) const {
  Form r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : c_) r.c_.emplace(k, v * c);
  return r;
}

Form wedge(const Form& a, const Form& b) {
  Form r;
  for (const auto& [ka, ca] : a.coeffs())
    for (const auto& [kb, cb] : b.coeffs()) {
      auto m = merge_keys(ka, kb);
      if (!m) continue;
      RatFun c = ca * cb;
      if (m->second < 0) c = -c;
      auto cur = r.coeff(m->first);
      r.set(m->first, cur + c);
    }
  return r;
}

std::pair<Form, Form> exterior_d(const Form& f) {
  Form holo, anti;
  for (const auto& [k, c] : f.coeffs()) {
    // collect variable indices that can contribute
    std::set<int> vars = c.num().vars_used();
    for (int v : c.den().vars_used()) vars.insert(v);
    for (int v : vars) {
      RatFun dz = c.derivative_z(v);
      if (!dz.is_zero()) {
        auto m = merge_keys(FormKey{{}, {v}}, k);
        if (m) holo += Form::generator(m->first, m->second < 0 ? -dz : dz);
      }
      RatFun dzb = c.derivative_zb(v);
      if (!dzb.is_zero()) {
        auto m = merge_keys(FormKey{{v}, {}}, k);
        if (m) anti += Form::generator(m->first, m->second < 0 ? -dzb : dzb);
      }
    }
  }
  return {holo, anti};
}

std::string key_to_string(const FormKey& k, const VarTable& vars) {
  std::ostringstream os;
  bool first = true;
  for (int b : k.bars) {
    if (!first) os << "^";
    os << "dbar(" << vars.name(b) << ")";
    first = false;
  }
  for (int d : k.dzs) {
    if (!first) os << "^";
    os << "d(" << vars.name(d) << ")";
    first = false;
  }
  return os.str();
}

std::string Form::to_string(const VarTable& vars) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string(vars);
    bool atomic = c.is_polynomial() && c.num().terms().size() <= 1;
    if (k.is_scalar()) {
      os << cs;
    } else if (c.as_constant() == Rational(1)) {
      os << key_to_string(k, vars);
    } else {
      os << (atomic ? cs : "(" + cs + ")") << "*" << key_to_string(k, vars);
    }
  }
  return os.str();
}

} // namespace rescycle
