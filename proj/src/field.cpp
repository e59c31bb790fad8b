#include "semisym/field.hpp"

#include <sstream>
#include <stdexcept>

#include "semisym/algorithms.hpp"

namespace semisym {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::domain_error("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t t = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Poly a(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  if (p < 2 || prime_divisors(p).size() != 1 || prime_divisors(p)[0] != p) {
    throw std::invalid_argument("field characteristic must be prime");
  }
  if (k < 1) throw std::invalid_argument("field degree must be positive");
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  if (q_ > 1024) throw std::invalid_argument("field too large for table arithmetic");

  // Lexicographically least monic irreducible, comparing c_{k-1},...,c_0.
  Poly mod;
  for (std::uint32_t n = 0; n < q_; ++n) {
    Poly f = decode(n, p, k);
    f.push_back(1);
    if (k == 1 || is_irreducible(f, p)) {
      mod = f;
      break;
    }
  }
  modulus_.assign(mod.begin(), mod.end() - 1);

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = decode(a, p, k);
    Poly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = encode(na, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = decode(b, p, k);
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      Poly r = poly_mod(prod, mod, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = g, ord = 1;
    while (x != 1) {
      x = mul_[x * q_ + g];
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

GaloisField GaloisField::of_order(std::uint32_t q) {
  auto ps = prime_divisors(q);
  if (ps.size() != 1) throw std::invalid_argument("field order must be a prime power");
  std::uint32_t k = 0;
  for (std::uint32_t t = q; t > 1; t /= static_cast<std::uint32_t>(ps[0])) ++k;
  return GaloisField(static_cast<std::uint32_t>(ps[0]), k);
}

std::string GaloisField::modulus_string() const {
  std::ostringstream os;
  os << "x^" << k_;
  for (std::size_t i = k_; i-- > 0;) {
    if (modulus_[i] == 0) continue;
    os << " + " << modulus_[i];
    if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

FieldElement GaloisField::from_int(std::int64_t n) const {
  auto r = static_cast<std::uint32_t>(((n % static_cast<std::int64_t>(p_)) + p_) % p_);
  return {r};
}

FieldElement GaloisField::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  return {code};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("zero has no inverse");
  return {inv_[a.code]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement GaloisField::frobenius(FieldElement a, std::uint32_t j) const noexcept {
  for (std::uint32_t i = 0; i < j; ++i) a = pow(a, p_);
  return a;
}

Matrix mat_identity(std::size_t d) {
  Matrix m(d * d);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = {1};
  return m;
}

Matrix mat_mul(const GaloisField& f, std::size_t d, const Matrix& a, const Matrix& b) {
  Matrix c(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      FieldElement s = f.zero();
      for (std::size_t t = 0; t < d; ++t) s = f.add(s, f.mul(a[i * d + t], b[t * d + j]));
      c[i * d + j] = s;
    }
  }
  return c;
}

FieldElement mat_det(const GaloisField& f, std::size_t d, Matrix a) {
  FieldElement det = f.one();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv * d + col].code == 0) ++piv;
    if (piv == d) return f.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < d; ++j) std::swap(a[piv * d + j], a[col * d + j]);
      det = f.neg(det);
    }
    FieldElement pv = a[col * d + col];
    det = f.mul(det, pv);
    FieldElement pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < d; ++r) {
      FieldElement factor = f.mul(a[r * d + col], pinv);
      if (factor.code == 0) continue;
      for (std::size_t j = col; j < d; ++j) a[r * d + j] = f.sub(a[r * d + j], f.mul(factor, a[col * d + j]));
    }
  }
  return det;
}

Matrix mat_inverse(const GaloisField& f, std::size_t d, const Matrix& m) {
  Matrix a = m;
  Matrix r = mat_identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv * d + col].code == 0) ++piv;
    if (piv == d) throw std::invalid_argument("singular matrix");
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(a[piv * d + j], a[col * d + j]);
      std::swap(r[piv * d + j], r[col * d + j]);
    }
    FieldElement pinv = f.inv(a[col * d + col]);
    for (std::size_t j = 0; j < d; ++j) {
      a[col * d + j] = f.mul(a[col * d + j], pinv);
      r[col * d + j] = f.mul(r[col * d + j], pinv);
    }
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col) continue;
      FieldElement factor = a[row * d + col];
      if (factor.code == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        a[row * d + j] = f.sub(a[row * d + j], f.mul(factor, a[col * d + j]));
        r[row * d + j] = f.sub(r[row * d + j], f.mul(factor, r[col * d + j]));
      }
    }
  }
  return r;
}

Matrix mat_transpose(std::size_t d, const Matrix& a) {
  Matrix t(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) t[j * d + i] = a[i * d + j];
  }
  return t;
}

Matrix mat_frobenius(const GaloisField& f, const Matrix& a, std::uint32_t j) {
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.frobenius(a[i], j);
  return r;
}

}  // namespace semisym
