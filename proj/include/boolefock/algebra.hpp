#ifndef BOOLEFOCK_ALGEBRA_HPP_
#define BOOLEFOCK_ALGEBRA_HPP_

// Sparse arithmetic for the unital algebra K(l2({#} u N)) + C*I.
//
// An element is a finitely supported matrix over the index set {#} u {1,2,...}
// plus a multiple of the identity. The support never grows beyond what the
// arithmetic produces, and amplitudes whose modulus falls below
// kDropThreshold are removed after every operation, so equality of elements
// is plain entrywise equality of their canonical forms.

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace boolefock {

using Complex = std::complex<double>;
using Site = std::uint32_t;

/// Comparison tolerance used by the kernel when no other value is supplied.
inline constexpr double kDefaultTolerance = 1e-10;

/// Amplitudes with modulus below this are removed from the sparse support.
inline constexpr double kDropThreshold = 1e-14;

/// A basis label of l2({#} u N): either the vacuum symbol # or a site n >= 1.
/// Ordering places the vacuum before every site.
class Index {
 public:
  static constexpr Index vacuum() noexcept { return Index{0}; }
  static Index site(Site n);

  constexpr bool is_vacuum() const noexcept { return value_ == 0; }
  /// Site label; throws std::logic_error for the vacuum.
  Site site_label() const;

  std::string to_string() const;

  friend constexpr auto operator<=>(Index, Index) = default;

 private:
  explicit constexpr Index(Site value) noexcept : value_(value) {}
  Site value_;
};

using IndexPair = std::pair<Index, Index>;

/// An element A + sI with A finitely supported.
class BooleanElement {
 public:
  /// Row-major ordered (row, col) -> amplitude.
  using Entries = std::map<IndexPair, Complex>;

  BooleanElement() = default;
  explicit BooleanElement(Complex scalar) : scalar_(scalar) {}
  BooleanElement(Entries compact, Complex scalar);

  static BooleanElement identity() { return BooleanElement{Complex{1.0, 0.0}}; }

  const Entries& compact() const noexcept { return compact_; }
  Complex scalar() const noexcept { return scalar_; }

  /// Compact-part amplitude at (row, col); zero off the support.
  Complex entry(Index row, Index col) const;

  /// All indices that occur as a row or column of the compact part.
  std::set<Index> support() const;

  bool is_zero() const noexcept { return compact_.empty() && scalar_ == Complex{}; }

  friend bool operator==(const BooleanElement&, const BooleanElement&) = default;

 private:
  Entries compact_;
  Complex scalar_{};
};

/// A vector of the Boolean Fock space C (+) l2(N), with the vacuum amplitude
/// stored under Index::vacuum().
class FockVector {
 public:
  using Amplitudes = std::map<Index, Complex>;

  FockVector() = default;
  explicit FockVector(Amplitudes amplitudes);

  static FockVector basis(Index i);

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  Complex amplitude(Index i) const;
  Complex vacuum_amplitude() const { return amplitude(Index::vacuum()); }

  /// True when the vacuum amplitude is exactly zero (the vector lies in H).
  bool in_one_particle_space() const { return !amps_.contains(Index::vacuum()); }

  double norm_squared() const;
  std::set<Index> support() const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Amplitudes amps_;
};

BooleanElement matrix_unit(Index row, Index col);

BooleanElement add(const BooleanElement& x, const BooleanElement& y);
BooleanElement scale(Complex c, const BooleanElement& x);
BooleanElement mul(const BooleanElement& x, const BooleanElement& y);
BooleanElement adjoint(const BooleanElement& x);

inline BooleanElement operator+(const BooleanElement& x, const BooleanElement& y) { return add(x, y); }
inline BooleanElement operator-(const BooleanElement& x, const BooleanElement& y) {
  return add(x, scale(Complex{-1.0, 0.0}, y));
}
inline BooleanElement operator*(const BooleanElement& x, const BooleanElement& y) { return mul(x, y); }
inline BooleanElement operator*(Complex c, const BooleanElement& x) { return scale(c, x); }

/// Largest entrywise modulus of x - y, the scalar parts included.
double max_deviation(const BooleanElement& x, const BooleanElement& y);
inline bool approx_equal(const BooleanElement& x, const BooleanElement& y,
                         double tolerance = kDefaultTolerance) {
  return max_deviation(x, y) <= tolerance;
}

FockVector add(const FockVector& v, const FockVector& w);
FockVector scale(Complex c, const FockVector& v);
inline FockVector operator+(const FockVector& v, const FockVector& w) { return add(v, w); }
inline FockVector operator*(Complex c, const FockVector& v) { return scale(c, v); }

/// <v, w>, linear in v and conjugate-linear in w.
Complex inner(const FockVector& v, const FockVector& w);

double max_deviation(const FockVector& v, const FockVector& w);

/// (A + sI) v computed on the finite supports.
FockVector apply(const BooleanElement& x, const FockVector& v);

}  // namespace boolefock

#endif  // BOOLEFOCK_ALGEBRA_HPP_
