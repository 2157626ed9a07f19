#ifndef TKT_LAURENT_HPP
#define TKT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace tkt {

/// Integer Laurent polynomial in one variable t.
/// Zero coefficients are never stored; the zero polynomial has an empty map.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long constant);

  static LaurentPoly monomial(long long coeff, int exp);
  static LaurentPoly one() { return LaurentPoly(1); }

  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(int exp) const;
  int min_exp() const;  // requires non-zero
  int max_exp() const;  // requires non-zero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// Substitute t -> 1/t.
  LaurentPoly mirrored() const;
  /// Evaluate at t = 1.
  long long eval_at_one() const;

  /// Exact division; returns nullopt when the remainder is non-zero.
  std::optional<LaurentPoly> divided_by(const LaurentPoly& d) const;

  /// Human/machine form, terms sorted by descending exponent:
  /// "t - 1 + t^-1", "-t + 3 - t^-1", "1", "0".
  std::string to_string() const;

  const std::map<int, long long>& terms() const { return coeffs_; }

private:
  std::map<int, long long> coeffs_;
  void set(int exp, long long c);
};

}  // namespace tkt

#endif
