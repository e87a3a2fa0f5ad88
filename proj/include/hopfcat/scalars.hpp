#pragma once

// Exact field arithmetic for the engine: the rationals, cyclotomic fields
// Q(z_N) = Q[x]/Phi_N(x), prime fields F_p and their extensions F_p[x]/(f).
// Scalars are coefficient vectors over the prime field in the canonical
// power basis; equality is representation equality after reduction.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcat {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace poly {

// Dense polynomials, ascending coefficients.
using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
inline QPoly mod(QPoly a, const QPoly& b) {
  trim(a);
  if (b.empty()) throw error("polynomial division by zero");
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

// Extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic or zero.
struct ExGcd {
  QPoly g, u, v;
};

inline QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline ExGcd exgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  QPoly u0{mpq_class(1)}, v0, u1, v1{mpq_class(1)};
  while (!b.empty()) {
    // divide a by b: quotient q, remainder r
    QPoly q, r = a;
    while (r.size() >= b.size() && !r.empty()) {
      mpq_class c = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
      q[shift] += c;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      trim(r);
    }
    QPoly u2 = sub(u0, mul(q, u1));
    QPoly v2 = sub(v0, mul(q, v1));
    a = b;
    b = r;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (!a.empty() && a.back() != 1) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {a, u0, v0};
}

// Exact division of integer polynomials with monic divisor.
inline ZPoly divide_exact(ZPoly a, const ZPoly& b) {
  trim(a);
  if (b.empty() || b.back() != 1) throw error("divisor must be monic");
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (a.size() >= b.size()) {
    mpz_class c = a.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw error("inexact polynomial division");
  trim(q);
  return q;
}

// N-th cyclotomic polynomial over Z, by dividing x^N - 1 by the lower ones.
inline ZPoly cyclotomic(unsigned long N, std::map<unsigned long, ZPoly>* memo = nullptr) {
  std::map<unsigned long, ZPoly> local;
  if (!memo) memo = &local;
  auto it = memo->find(N);
  if (it != memo->end()) return it->second;
  ZPoly num(N + 1, mpz_class(0));
  num[0] = -1;
  num[N] = 1;
  for (unsigned long d = 1; d < N; ++d)
    if (N % d == 0) num = divide_exact(num, cyclotomic(d, memo));
  (*memo)[N] = num;
  return num;
}

}  // namespace poly

struct FieldSpec {
  enum class Kind { Rationals, Cyclotomic, Prime, PrimeExtension };
  Kind kind = Kind::Rationals;
  unsigned long n = 0;                  // cyclotomic order N
  mpz_class p = 0;                      // characteristic
  std::vector<mpz_class> min_poly;      // ascending, for prime extensions

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec cyclotomic(unsigned long N) {
    FieldSpec s;
    s.kind = Kind::Cyclotomic;
    s.n = N;
    return s;
  }
  static FieldSpec prime(const mpz_class& p) {
    FieldSpec s;
    s.kind = Kind::Prime;
    s.p = p;
    return s;
  }
  static FieldSpec prime_extension(const mpz_class& p, std::vector<mpz_class> mp) {
    FieldSpec s;
    s.kind = Kind::PrimeExtension;
    s.p = p;
    s.min_poly = std::move(mp);
    return s;
  }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && n == o.n && p == o.p && min_poly == o.min_poly;
  }

  // "Q", "Q(z12)", "F7", "F2[1,1,1]" (coefficients of the minimal polynomial,
  // ascending, e.g. x^2+x+1).
  std::string to_string() const {
    switch (kind) {
      case Kind::Rationals:
        return "Q";
      case Kind::Cyclotomic:
        return "Q(z" + std::to_string(n) + ")";
      case Kind::Prime:
        return "F" + p.get_str();
      case Kind::PrimeExtension: {
        std::string s = "F" + p.get_str() + "[";
        for (std::size_t i = 0; i < min_poly.size(); ++i) {
          if (i) s += ",";
          s += min_poly[i].get_str();
        }
        return s + "]";
      }
    }
    throw error("bad field spec");
  }

  static FieldSpec parse(const std::string& s);
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Scalar {
 public:
  Scalar() = default;  // null scalar; usable only after assignment
  Scalar(FieldPtr f, std::vector<mpq_class> c) : field_(std::move(f)), c_(std::move(c)) {}

  const std::vector<mpq_class>& coeffs() const { return c_; }
  const FieldPtr& field() const { return field_; }
  bool null() const { return field_ == nullptr; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<mpq_class> c_;
};

// Total order on same-field scalars: lexicographic on coefficient vectors.
inline int scalar_cmp(const Scalar& a, const Scalar& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c) return c;
  }
  return int(x.size()) - int(y.size());
}

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  const mpz_class& characteristic() const { return spec_.p; }
  std::size_t dimension() const { return dim_; }

  Scalar zero() const { return scalar(std::vector<mpq_class>(dim_, mpq_class(0))); }
  Scalar one() const {
    std::vector<mpq_class> c(dim_, mpq_class(0));
    c[0] = 1;
    return scalar_reduced(std::move(c));
  }
  Scalar from_int(long v) const { return from_mpq(mpq_class(v)); }
  Scalar from_mpq(const mpq_class& v) const {
    std::vector<mpq_class> c(dim_, mpq_class(0));
    c[0] = v;
    return scalar_reduced(std::move(c));
  }
  // Class of x (the symbol z for cyclotomic fields); 1 for prime/rational fields
  // of dimension one.
  Scalar generator() const {
    if (dim_ == 1) {
      // z reduces to a scalar: root of the degree-one modulus
      if (spec_.kind == FieldSpec::Kind::Cyclotomic) {
        std::vector<mpq_class> c{-modulus_[0]};
        return scalar_reduced(std::move(c));
      }
      return one();
    }
    std::vector<mpq_class> c(dim_, mpq_class(0));
    c[1] = 1;
    return scalar(std::move(c));
  }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, long e) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const;

  // All roots of unity in the field (the torsion subgroup of the units),
  // sorted canonically. Finite for every supported field.
  const std::vector<Scalar>& torsion_units() const { return torsion_; }
  unsigned long torsion_order() const { return torsion_.size(); }
  unsigned long unit_order(const Scalar& u) const;
  std::optional<Scalar> primitive_root_of_unity(unsigned long m) const;
  std::vector<Scalar> roots_of_unity_dividing(unsigned long m) const;

  std::string to_string(const Scalar& a) const;
  Scalar parse_scalar(const std::string& s) const;

  void check_same(const Field& o) const {
    if (!(spec_ == o.spec_)) throw error("field mismatch");
  }

 private:
  Field() = default;
  FieldSpec spec_;
  std::size_t dim_ = 1;
  poly::QPoly modulus_;  // Phi_N or min_poly over the prime field; empty if dim 1 trivial
  std::vector<Scalar> torsion_;

  mpq_class reduce_coeff(const mpq_class& v) const;
  std::vector<mpq_class> reduce(std::vector<mpq_class> c) const;
  Scalar scalar(std::vector<mpq_class> c) const {
    return Scalar(shared_from_this(), std::move(c));
  }
  Scalar scalar_reduced(std::vector<mpq_class> c) const {
    return Scalar(shared_from_this(), reduce(std::move(c)));
  }
  void build_torsion();
};

inline mpq_class Field::reduce_coeff(const mpq_class& v) const {
  if (spec_.p == 0) return v;
  // residue num * den^{-1} mod p
  mpz_class num = v.get_num(), den = v.get_den();
  mpz_class r, dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), spec_.p.get_mpz_t()) == 0)
    throw error("denominator not invertible modulo p");
  r = num * dinv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), spec_.p.get_mpz_t());
  return mpq_class(r);
}

inline std::vector<mpq_class> Field::reduce(std::vector<mpq_class> c) const {
  if (c.size() > dim_) {
    if (!modulus_.empty()) {
      if (spec_.p != 0)
        for (auto& x : c) x = reduce_coeff(x);
      c = poly::mod(std::move(c), modulus_);
    } else {
      for (std::size_t i = dim_; i < c.size(); ++i)
        if (c[i] != 0) throw error("value does not fit the field");
    }
  }
  c.resize(dim_, mpq_class(0));
  if (spec_.p != 0)
    for (auto& x : c) x = reduce_coeff(x);
  return c;
}

inline Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check_same(*a.field());
  check_same(*b.field());
  std::vector<mpq_class> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
  return scalar_reduced(std::move(c));
}

inline Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  check_same(*a.field());
  check_same(*b.field());
  std::vector<mpq_class> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
  return scalar_reduced(std::move(c));
}

inline Scalar Field::neg(const Scalar& a) const {
  check_same(*a.field());
  std::vector<mpq_class> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = -a.coeffs()[i];
  return scalar_reduced(std::move(c));
}

inline Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check_same(*a.field());
  check_same(*b.field());
  if (dim_ == 1) {
    std::vector<mpq_class> c{a.coeffs()[0] * b.coeffs()[0]};
    return scalar_reduced(std::move(c));
  }
  poly::QPoly prod = poly::mul(a.coeffs(), b.coeffs());
  return scalar_reduced(std::move(prod));
}

inline bool Field::eq(const Scalar& a, const Scalar& b) const {
  check_same(*a.field());
  check_same(*b.field());
  return a.coeffs() == b.coeffs();
}

inline bool Field::is_zero(const Scalar& a) const {
  for (const auto& x : a.coeffs())
    if (x != 0) return false;
  return true;
}

inline Scalar Field::inv(const Scalar& a) const {
  check_same(*a.field());
  if (is_zero(a)) throw error("inversion of zero");
  if (dim_ == 1) {
    if (spec_.p == 0) {
      std::vector<mpq_class> c{1 / a.coeffs()[0]};
      return scalar_reduced(std::move(c));
    }
    mpz_class v = a.coeffs()[0].get_num();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), spec_.p.get_mpz_t()) == 0)
      throw error("element not invertible");
    return scalar_reduced({mpq_class(r)});
  }
  // extended Euclid in k[x] modulo the modulus; over F_p reduce along the way
  poly::QPoly av = a.coeffs();
  poly::trim(av);
  if (spec_.p != 0) {
    // wrap coefficients as rationals with mod-p semantics via exgcd over Q is
    // unsound; do the Euclid mod p directly
    auto modp = [&](poly::QPoly v) {
      for (auto& x : v) x = reduce_coeff(x);
      poly::trim(v);
      return v;
    };
    auto invp = [&](const mpq_class& x) {
      mpz_class v = x.get_num(), r;
      if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), spec_.p.get_mpz_t()) == 0)
        throw error("element not invertible");
      return mpq_class(r);
    };
    poly::QPoly r0 = modulus_, r1 = modp(av);
    poly::QPoly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
      // divide r0 by r1 over F_p
      poly::QPoly q, rem = r0;
      mpq_class lead_inv = invp(r1.back());
      while (rem.size() >= r1.size() && !rem.empty()) {
        mpq_class c = reduce_coeff(rem.back() * lead_inv);
        std::size_t shift = rem.size() - r1.size();
        if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
        q[shift] = reduce_coeff(q[shift] + c);
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = reduce_coeff(rem[shift + i] - c * r1[i]);
        poly::trim(rem);
      }
      poly::QPoly s2 = poly::sub(s0, poly::mul(q, s1));
      s2 = modp(s2);
      r0 = r1;
      r1 = rem;
      s0 = s1;
      s1 = s2;
    }
    if (r0.size() != 1) throw error("element not invertible (gcd not constant)");
    mpq_class ginv = invp(r0[0]);
    for (auto& x : s0) x = reduce_coeff(x * ginv);
    return scalar_reduced(std::move(s0));
  }
  auto eg = poly::exgcd(av, modulus_);
  if (eg.g.size() != 1) throw error("element not invertible (gcd not constant)");
  // eg.u * a + eg.v * modulus == 1
  return scalar_reduced(std::move(eg.u));
}

inline Scalar Field::pow(const Scalar& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar r = one(), base = a;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = mul(r, base);
    base = mul(base, base);
    u >>= 1;
  }
  return r;
}

inline unsigned long Field::unit_order(const Scalar& u) const {
  unsigned long T = torsion_order();
  for (unsigned long d = 1; d <= T; ++d) {
    if (T % d) continue;
    if (eq(pow(u, static_cast<long>(d)), one())) return d;
  }
  throw error("element is not a torsion unit");
}

inline std::optional<Scalar> Field::primitive_root_of_unity(unsigned long m) const {
  if (m == 0) throw error("root order must be positive");
  if (m == 1) return one();
  if (torsion_order() % m != 0) return std::nullopt;
  for (const auto& u : torsion_)
    if (unit_order(u) == m) return u;
  return std::nullopt;
}

inline std::vector<Scalar> Field::roots_of_unity_dividing(unsigned long m) const {
  std::vector<Scalar> out;
  for (const auto& u : torsion_)
    if (m % unit_order(u) == 0) out.push_back(u);
  return out;
}

inline void Field::build_torsion() {
  std::vector<Scalar> list;
  switch (spec_.kind) {
    case FieldSpec::Kind::Rationals:
      list = {from_int(1), from_int(-1)};
      break;
    case FieldSpec::Kind::Cyclotomic: {
      // the torsion subgroup is generated by -z (N odd) or z (N even),
      // of order lcm(2, N)
      unsigned long N = spec_.n;
      Scalar g = (N % 2 == 0) ? generator() : neg(generator());
      unsigned long T = (N % 2 == 0) ? N : 2 * N;
      if (N == 1) {
        g = from_int(-1);
        T = 2;
      }
      Scalar cur = one();
      for (unsigned long k = 0; k < T; ++k) {
        list.push_back(cur);
        cur = mul(cur, g);
      }
      break;
    }
    case FieldSpec::Kind::Prime: {
      if (spec_.p > 100000) throw error("prime field too large for torsion enumeration");
      for (mpz_class v = 1; v < spec_.p; ++v) list.push_back(from_mpq(mpq_class(v)));
      break;
    }
    case FieldSpec::Kind::PrimeExtension: {
      mpz_class total = 1;
      for (std::size_t i = 0; i < dim_; ++i) total *= spec_.p;
      if (total > 65536) throw error("extension field too large for torsion enumeration");
      unsigned long q = total.get_ui();
      unsigned long p = spec_.p.get_ui();
      for (unsigned long code = 1; code < q; ++code) {
        std::vector<mpq_class> c(dim_);
        unsigned long t = code;
        for (std::size_t i = 0; i < dim_; ++i) {
          c[i] = mpq_class(static_cast<long>(t % p));
          t /= p;
        }
        list.push_back(scalar(std::move(c)));
      }
      break;
    }
  }
  std::sort(list.begin(), list.end(),
            [](const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; });
  torsion_ = std::move(list);
}

namespace detail {

inline bool is_probable_prime(const mpz_class& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// brute-force irreducibility over F_p for desk-scale degrees
inline bool irreducible_mod_p(const std::vector<mpz_class>& f, const mpz_class& pz) {
  std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  unsigned long p = pz.get_ui();
  auto modp = [&](const mpz_class& v) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return r.get_ui();
  };
  std::vector<unsigned long> fv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fv[i] = modp(f[i]);
  // try all monic divisors of degree 1..d/2
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    mpz_class count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= pz;
    if (count > 2000000) throw error("minimal polynomial too large to verify");
    for (mpz_class code = 0; code < count; ++code) {
      std::vector<unsigned long> g(k + 1);
      mpz_class t = code;
      for (std::size_t i = 0; i < k; ++i) {
        mpz_class digit = t % pz;
        g[i] = digit.get_ui();
        t /= pz;
      }
      g[k] = 1;
      // remainder of fv mod g over F_p
      std::vector<unsigned long> r = fv;
      while (r.size() >= g.size()) {
        unsigned long c = r.back();
        std::size_t shift = r.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
          unsigned long prod = (c * g[i]) % p;
          r[shift + i] = (r[shift + i] + p - prod) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (r.empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

inline FieldPtr Field::make(const FieldSpec& spec) {
  auto f = std::shared_ptr<Field>(new Field());
  f->spec_ = spec;
  switch (spec.kind) {
    case FieldSpec::Kind::Rationals:
      f->dim_ = 1;
      break;
    case FieldSpec::Kind::Cyclotomic: {
      if (spec.n == 0) throw error("cyclotomic order must be positive");
      poly::ZPoly phi = poly::cyclotomic(spec.n);
      f->modulus_.assign(phi.begin(), phi.end());
      f->dim_ = phi.size() - 1;
      break;
    }
    case FieldSpec::Kind::Prime: {
      if (!detail::is_probable_prime(spec.p)) throw error("not prime: " + spec.p.get_str());
      f->dim_ = 1;
      break;
    }
    case FieldSpec::Kind::PrimeExtension: {
      if (!detail::is_probable_prime(spec.p)) throw error("not prime: " + spec.p.get_str());
      std::vector<mpz_class> mp = spec.min_poly;
      for (auto& c : mp) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), spec.p.get_mpz_t());
      while (!mp.empty() && mp.back() == 0) mp.pop_back();
      if (mp.size() < 2) throw error("minimal polynomial must have positive degree");
      if (mp.back() != 1) throw error("minimal polynomial must be monic modulo p");
      if (!detail::irreducible_mod_p(mp, spec.p))
        throw error("minimal polynomial is reducible modulo p");
      f->spec_.min_poly = mp;
      f->modulus_.assign(mp.begin(), mp.end());
      f->dim_ = mp.size() - 1;
      break;
    }
  }
  f->build_torsion();
  return f;
}

inline Scalar Scalar::operator+(const Scalar& o) const { return field_->add(*this, o); }
inline Scalar Scalar::operator-(const Scalar& o) const { return field_->sub(*this, o); }
inline Scalar Scalar::operator*(const Scalar& o) const { return field_->mul(*this, o); }
inline Scalar Scalar::operator-() const { return field_->neg(*this); }
inline Scalar Scalar::inv() const { return field_->inv(*this); }
inline Scalar Scalar::pow(long e) const { return field_->pow(*this, e); }
inline bool Scalar::operator==(const Scalar& o) const { return field_->eq(*this, o); }
inline bool Scalar::is_zero() const { return field_->is_zero(*this); }
inline bool Scalar::is_one() const { return field_->eq(*this, field_->one()); }
inline std::string Scalar::str() const { return field_->to_string(*this); }

// ---------------------------------------------------------------------------
// Serialization. Rationals: "p/q" or "p". Cyclotomic: polynomial in z, e.g.
// "1/2*z^2 - 1" (descending powers). Prime fields: residue integers; prime
// extensions use the symbol x.

inline std::string Field::to_string(const Scalar& a) const {
  check_same(*a.field());
  if (dim_ == 1) {
    mpq_class v = a.coeffs()[0];
    return v.get_str();
  }
  const char sym = (spec_.kind == FieldSpec::Kind::Cyclotomic) ? 'z' : 'x';
  std::string out;
  bool first = true;
  for (std::size_t k = dim_; k-- > 0;) {
    mpq_class c = a.coeffs()[k];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class absc = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string cs = absc.get_str();
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += sym;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  if (first) return "0";
  return out;
}

namespace detail {

// tiny recursive-descent parser for the scalar grammar above
struct ScalarParser {
  const std::string& s;
  std::size_t pos = 0;
  char sym;

  explicit ScalarParser(const std::string& str, char symbol) : s(str), sym(symbol) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool take(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw error("scalar parse error: expected integer in '" + s + "'");
    return mpz_class(s.substr(start, pos - start));
  }
  // term: [coeff] [* ] [sym [^k]]
  void term(std::vector<mpq_class>& acc, bool negate) {
    skip();
    mpq_class coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (take('/')) den = integer();
      if (den == 0) throw error("scalar parse error: zero denominator");
      coeff = mpq_class(num) / mpq_class(den);
      have_coeff = true;
    }
    std::size_t deg = 0;
    skip();
    if (have_coeff && take('*')) skip();
    if (pos < s.size() && s[pos] == sym) {
      ++pos;
      deg = 1;
      if (take('^')) deg = static_cast<std::size_t>(integer().get_ui());
    } else if (!have_coeff) {
      throw error("scalar parse error in '" + s + "'");
    }
    if (negate) coeff = -coeff;
    if (acc.size() <= deg) acc.resize(deg + 1, mpq_class(0));
    acc[deg] += coeff;
  }
  std::vector<mpq_class> parse() {
    std::vector<mpq_class> acc;
    bool neg = take('-');
    if (!neg) take('+');
    term(acc, neg);
    while (true) {
      skip();
      if (pos >= s.size()) break;
      if (take('+'))
        term(acc, false);
      else if (take('-'))
        term(acc, true);
      else
        throw error("scalar parse error near '" + s.substr(pos) + "'");
    }
    return acc;
  }
};

}  // namespace detail

inline Scalar Field::parse_scalar(const std::string& s) const {
  const char sym = (spec_.kind == FieldSpec::Kind::Cyclotomic) ? 'z' : 'x';
  detail::ScalarParser p(s, sym);
  std::vector<mpq_class> c = p.parse();
  if (c.size() > dim_ && dim_ >= 1 && spec_.kind != FieldSpec::Kind::Cyclotomic &&
      spec_.kind != FieldSpec::Kind::PrimeExtension)
    throw error("scalar parse error: nonconstant value in a dimension-one field");
  return scalar_reduced(std::move(c));
}

inline FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Q(z", 0) == 0 && s.back() == ')') {
    std::string num = s.substr(3, s.size() - 4);
    if (num.empty()) throw error("bad field spec: " + s);
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw error("bad field spec: " + s);
    unsigned long n = std::stoul(num);
    if (n == 0) throw error("cyclotomic order must be positive");
    return cyclotomic(n);
  }
  if (s.size() >= 2 && s[0] == 'F') {
    auto lb = s.find('[');
    if (lb == std::string::npos) {
      std::string num = s.substr(1);
      for (char c : num)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw error("bad field spec: " + s);
      if (num.empty()) throw error("bad field spec: " + s);
      return prime(mpz_class(num));
    }
    if (s.back() != ']') throw error("bad field spec: " + s);
    mpz_class p(s.substr(1, lb - 1));
    std::vector<mpz_class> mp;
    std::string body = s.substr(lb + 1, s.size() - lb - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      std::string item =
          body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) throw error("bad field spec: " + s);
      mp.emplace_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return prime_extension(p, std::move(mp));
  }
  throw error("bad field spec: " + s);
}

}  // namespace hopfcat
