#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semisym {

// Element of GF(p^k), coded as sum c_i p^i over the coefficients of its
// polynomial representative.
struct FieldElement {
  std::uint32_t code = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
};

class GaloisField {
 public:
  GaloisField(std::uint32_t p, std::uint32_t k);
  // Accepts any prime power q.
  static GaloisField of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  // Coefficients c_0..c_{k-1} of the monic modulus x^k + ... + c_0.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(std::int64_t n) const;
  FieldElement element(std::uint32_t code) const;
  FieldElement primitive_element() const noexcept { return {primitive_}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept { return {add_[a.code * q_ + b.code]}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept { return {mul_[a.code * q_ + b.code]}; }
  FieldElement neg(FieldElement a) const noexcept { return {neg_[a.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
  // x -> x^(p^j)
  FieldElement frobenius(FieldElement a, std::uint32_t j = 1) const noexcept;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

using Matrix = std::vector<FieldElement>;  // row-major, dimension d x d

Matrix mat_identity(std::size_t d);
Matrix mat_mul(const GaloisField& f, std::size_t d, const Matrix& a, const Matrix& b);
FieldElement mat_det(const GaloisField& f, std::size_t d, Matrix a);
Matrix mat_inverse(const GaloisField& f, std::size_t d, const Matrix& a);
Matrix mat_transpose(std::size_t d, const Matrix& a);
// Entrywise x -> x^(p^j).
Matrix mat_frobenius(const GaloisField& f, const Matrix& a, std::uint32_t j);

}  // namespace semisym
