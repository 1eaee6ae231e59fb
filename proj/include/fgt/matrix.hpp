#ifndef FGT_MATRIX_HPP_
#define FGT_MATRIX_HPP_

#include <array>
#include <memory>

#include "fgt/field.hpp"

namespace fgt {

/// 2x2 matrix over a small field, entries row-major.
struct Matrix2 {
  std::shared_ptr<const FieldSpec> field;
  std::array<FieldElement, 4> e{0, 0, 0, 0};

  friend bool operator==(const Matrix2& a, const Matrix2& b) {
    return a.e == b.e && (a.field == b.field || *a.field == *b.field);
  }
};

inline Matrix2 mat_make(std::shared_ptr<const FieldSpec> f, FieldElement a, FieldElement b,
                        FieldElement c, FieldElement d) {
  for (auto x : {a, b, c, d}) {
    if (!field_valid(*f, x)) throw Error(ErrorCode::InvalidElement, "matrix entry out of range");
  }
  return Matrix2{std::move(f), {a, b, c, d}};
}

inline Matrix2 mat_identity(std::shared_ptr<const FieldSpec> f) {
  return Matrix2{std::move(f), {1, 0, 0, 1}};
}

inline void mat_check_same_field(const Matrix2& a, const Matrix2& b) {
  if (!(a.field == b.field || *a.field == *b.field)) {
    throw Error(ErrorCode::FieldMismatch, field_name(*a.field) + " vs " + field_name(*b.field));
  }
}

inline Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
  mat_check_same_field(a, b);
  const FieldSpec& f = *a.field;
  auto dot = [&](FieldElement x1, FieldElement y1, FieldElement x2, FieldElement y2) {
    return field_add(f, field_mul(f, x1, y1), field_mul(f, x2, y2));
  };
  return Matrix2{a.field,
                 {dot(a.e[0], b.e[0], a.e[1], b.e[2]), dot(a.e[0], b.e[1], a.e[1], b.e[3]),
                  dot(a.e[2], b.e[0], a.e[3], b.e[2]), dot(a.e[2], b.e[1], a.e[3], b.e[3])}};
}

inline FieldElement mat_det(const Matrix2& a) {
  const FieldSpec& f = *a.field;
  return field_sub(f, field_mul(f, a.e[0], a.e[3]), field_mul(f, a.e[1], a.e[2]));
}

inline Matrix2 mat_inv(const Matrix2& a) {
  const FieldSpec& f = *a.field;
  FieldElement d = mat_det(a);
  if (d == 0) throw Error(ErrorCode::Singular, "determinant is zero");
  FieldElement di = field_inv(f, d);
  return Matrix2{a.field,
                 {field_mul(f, a.e[3], di), field_mul(f, field_neg(f, a.e[1]), di),
                  field_mul(f, field_neg(f, a.e[2]), di), field_mul(f, a.e[0], di)}};
}

/// Conjugate transpose under the Frobenius map.
inline Matrix2 mat_conj_transpose(const Matrix2& a) {
  const FieldSpec& f = *a.field;
  return Matrix2{a.field,
                 {field_frobenius(f, a.e[0]), field_frobenius(f, a.e[2]),
                  field_frobenius(f, a.e[1]), field_frobenius(f, a.e[3])}};
}

struct Matrix2Hash {
  std::size_t operator()(const Matrix2& m) const noexcept {
    std::size_t h = 0;
    for (auto x : m.e) h = h * 65599u + x;
    return h;
  }
};

}  // namespace fgt

#endif  // FGT_MATRIX_HPP_
