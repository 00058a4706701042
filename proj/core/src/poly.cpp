#include "symtruss/poly.hpp"

#include <algorithm>
#include <map>

#include "symtruss/errors.hpp"

namespace symtruss {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({v, exp});
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::degree_of(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      out.factors_.push_back(*a++);
    else if (b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, o.factors_.end());
  return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : o.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.push_back({v, a->second - e});
    ++a;
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

Monomial Monomial::with_degree(VarId v, std::uint32_t exp) const {
  Monomial out = without(v);
  if (exp > 0) {
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                               [](const Factor& f, VarId w) { return f.first < w; });
    out.factors_.insert(it, {v, exp});
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Highest VarId most significant; factor lists are ascending, walk backward.
  auto ia = a.factors_.rbegin(), ib = b.factors_.rbegin();
  while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.rend()) return 1;
  if (ib != b.factors_.rend()) return -1;
  return 0;
}

// -------------------------------------------------------------------- Poly

namespace {
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};
}  // namespace

Poly::Poly(Int constant) {
  if (constant != 0) terms_.push_back({std::move(constant), Monomial()});
}

Poly Poly::var(VarId v, std::uint32_t exp) {
  Poly p;
  p.terms_.push_back({Int(1), Monomial::var(v, exp)});
  return p;
}

Poly Poly::term(Int coeff, Monomial m) {
  Poly p;
  if (coeff != 0) p.terms_.push_back({std::move(coeff), std::move(m)});
  return p;
}

bool Poly::terms_eq(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coeff != o.terms_[k].coeff)
      return false;
  return true;
}

int Poly::compare(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = Monomial::compare(a.terms_[k].mono, b.terms_[k].mono);
    if (c != 0) return c;
    if (a.terms_[k].coeff != b.terms_[k].coeff)
      return a.terms_[k].coeff < b.terms_[k].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t Poly::degree_of(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_of(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int c = Monomial::compare(a->mono, b->mono);
    if (c > 0)
      out.terms_.push_back(*a++);
    else if (c < 0)
      out.terms_.push_back(*b++);
    else {
      Int s = a->coeff + b->coeff;
      if (s != 0) out.terms_.push_back({std::move(s), a->mono});
      ++a;
      ++b;
    }
  }
  out.terms_.insert(out.terms_.end(), a, terms_.end());
  out.terms_.insert(out.terms_.end(), b, o.terms_.end());
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Int& coeff, const Monomial& m) const {
  Poly out;
  if (coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * coeff, t.mono * m});
  return out;  // multiplying by one monomial preserves strict descending order
}

Poly Poly::mul_int(const Int& k) const {
  Poly out;
  if (k == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * k, t.mono});
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero () || o.is_zero()) return Poly();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coeff, terms_[0].mono);
  std::map<Monomial, Int, MonoGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto [it, inserted] = acc.try_emplace(std::move(m), a.coeff * b.coeff);
      if (!inserted) it->second += a.coeff * b.coeff;
    }
  Poly out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({std::move(c), m});
  return out;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Int, MonoGreater> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Poly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({std::move(c), m});
  return out;
}

Poly Poly::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree_of(v);
    if (e == 0) continue;
    out.push_back({t.coeff * e, t.mono.with_degree(v, e - 1)});
  }
  return from_terms(std::move(out));
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    g = int_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Int c = content();
  if (c == 1) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff /= c;
  return out;
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (d.is_one()) return *this;
  Poly q;
  Poly r = *this;
  const Term& lead_d = d.leading_term();
  while (!r.is_zero()) {
    const Term& lead_r = r.leading_term();
    auto qm = lead_r.mono.divided_by(lead_d.mono);
    if (!qm) return std::nullopt;
    if (lead_r.coeff % lead_d.coeff != 0) return std::nullopt;
    Int qc = lead_r.coeff / lead_d.coeff;
    q.terms_.push_back({qc, *qm});  // quotient terms arrive in descending order
    r = r - d.mul_term(qc, *qm);
  }
  return q;
}

Poly Poly::divided_by_exact(const Poly& d) const {
  auto q = divided_by(d);
  if (!q) throw InternalError("inexact polynomial division");
  return *q;
}

double Poly::eval(const std::vector<double>& var_values) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = to_double(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      double base = var_values.at(v.value);
      for (std::uint32_t k = 0; k < e; ++k) prod *= base;
    }
    sum += prod;
  }
  return sum;
}

// ------------------------------------------------------------------- gcd

namespace {

std::uint32_t deg_in(const Poly& p, VarId v) { return p.degree_of(v); }

Poly coeff_of(const Poly& p, VarId v, std::uint32_t k) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.mono.degree_of(v) == k) out.push_back({t.coeff, t.mono.without(v)});
  return Poly::from_terms(std::move(out));
}

Poly lc_in(const Poly& p, VarId v) { return coeff_of(p, v, deg_in(p, v)); }

// gcd of all v-coefficients (the content of p viewed in (R[rest])[v]).
Poly content_in(const Poly& p, VarId v) {
  Poly g;
  std::uint32_t d = deg_in(p, v);
  for (std::uint32_t k = 0; k <= d; ++k) {
    Poly c = coeff_of(p, v, k);
    if (!c.is_zero()) g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v (scaling factor irrelevant to the
// primitive PRS, which strips contents every step).
Poly prem(Poly r, const Poly& b, VarId v) {
  std::uint32_t db = deg_in(b, v);
  Poly lb = lc_in(b, v);
  while (!r.is_zero() && deg_in(r, v) >= db) {
    std::uint32_t dr = deg_in(r, v);
    Poly lr = lc_in(r, v);
    Poly shift = Poly::var(v, dr - db);
    r = r * lb - b * (lr * shift);
  }
  return r;
}

Poly normalize_sign(Poly p) {
  if (p.lead_sign() < 0) return -p;
  return p;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) {
    Int g = int_gcd(a.content(), b.content());
    return Poly(g);
  }
  // Main variable: lowest id appearing in either.
  VarId v = [&] {
    auto va = a.variables();
    auto vb = b.variables();
    VarId best{UINT32_MAX};
    if (!va.empty()) best = va.front();
    if (!vb.empty() && vb.front() < best) best = vb.front();
    return best;
  }();
  if (deg_in(a, v) == 0) return poly_gcd(a, content_in(b, v));
  if (deg_in(b, v) == 0) return poly_gcd(content_in(a, v), b);

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = poly_gcd(ca, cb);
  Poly pa = a.divided_by_exact(ca);
  Poly pb = b.divided_by_exact(cb);
  if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Poly();
    } else {
      pb = r.divided_by_exact(content_in(r, v));
    }
  }
  pa = pa.divided_by_exact(content_in(pa, v));
  return normalize_sign(c * pa);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return normalize_sign((a * b).divided_by_exact(g));
}

std::pair<Poly, Poly> square_free_split(const Poly& q) {
  if (q.is_constant() || q.total_degree() == 0) return {Poly(Int(1)), q};
  Poly g = q;
  for (VarId v : q.variables()) {
    Poly d = q.derivative(v);
    g = poly_gcd(g, d);
    if (g.is_constant()) break;
  }
  if (g.is_constant()) return {Poly(Int(1)), q};
  Poly s = q.divided_by_exact(g);  // square-free part: product of distinct factors
  auto [o1, i1] = square_free_split(g);
  Poly inside = s.divided_by_exact(i1);
  Poly outside = o1 * i1;
  return {outside, inside};
}

}  // namespace symtruss
