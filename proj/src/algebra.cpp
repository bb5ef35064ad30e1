#include "boolefock/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boolefock {

namespace {

template <typename Map>
void drop_small(Map& entries) {
  std::erase_if(entries, [](const auto& kv) { return std::abs(kv.second) < kDropThreshold; });
}

}  // namespace

Index Index::site(Site n) {
  if (n == 0) throw std::invalid_argument("site labels start at 1");
  return Index{n};
}

Site Index::site_label() const {
  if (is_vacuum()) throw std::logic_error("the vacuum index has no site label");
  return value_;
}

std::string Index::to_string() const { return is_vacuum() ? std::string("#") : std::to_string(value_); }

BooleanElement::BooleanElement(Entries compact, Complex scalar)
    : compact_(std::move(compact)), scalar_(scalar) {
  drop_small(compact_);
}

Complex BooleanElement::entry(Index row, Index col) const {
  auto it = compact_.find({row, col});
  return it == compact_.end() ? Complex{} : it->second;
}

std::set<Index> BooleanElement::support() const {
  std::set<Index> out;
  for (const auto& [rc, amp] : compact_) {
    out.insert(rc.first);
    out.insert(rc.second);
  }
  return out;
}

FockVector::FockVector(Amplitudes amplitudes) : amps_(std::move(amplitudes)) { drop_small(amps_); }

FockVector FockVector::basis(Index i) { return FockVector{Amplitudes{{i, Complex{1.0, 0.0}}}}; }

Complex FockVector::amplitude(Index i) const {
  auto it = amps_.find(i);
  return it == amps_.end() ? Complex{} : it->second;
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& [i, a] : amps_) s += std::norm(a);
  return s;
}

std::set<Index> FockVector::support() const {
  std::set<Index> out;
  for (const auto& [i, a] : amps_) out.insert(i);
  return out;
}

BooleanElement matrix_unit(Index row, Index col) {
  return BooleanElement{BooleanElement::Entries{{{row, col}, Complex{1.0, 0.0}}}, Complex{}};
}

BooleanElement add(const BooleanElement& x, const BooleanElement& y) {
  BooleanElement::Entries out = x.compact();
  for (const auto& [rc, amp] : y.compact()) out[rc] += amp;
  return BooleanElement{std::move(out), x.scalar() + y.scalar()};
}

BooleanElement scale(Complex c, const BooleanElement& x) {
  if (c == Complex{}) return BooleanElement{};
  BooleanElement::Entries out;
  for (const auto& [rc, amp] : x.compact()) out.emplace_hint(out.end(), rc, c * amp);
  return BooleanElement{std::move(out), c * x.scalar()};
}

// (A + aI)(B + bI) = AB + aB + bA + ab I
BooleanElement mul(const BooleanElement& x, const BooleanElement& y) {
  const auto& lhs = x.compact();
  const auto& rhs = y.compact();
  BooleanElement::Entries out;

  for (const auto& [rc, amp] : lhs) {
    const Index inner_index = rc.second;
    for (auto it = rhs.lower_bound({inner_index, Index::vacuum()});
         it != rhs.end() && it->first.first == inner_index; ++it) {
      out[{rc.first, it->first.second}] += amp * it->second;
    }
  }
  if (y.scalar() != Complex{}) {
    for (const auto& [rc, amp] : lhs) out[rc] += y.scalar() * amp;
  }
  if (x.scalar() != Complex{}) {
    for (const auto& [rc, amp] : rhs) out[rc] += x.scalar() * amp;
  }
  return BooleanElement{std::move(out), x.scalar() * y.scalar()};
}

BooleanElement adjoint(const BooleanElement& x) {
  BooleanElement::Entries out;
  for (const auto& [rc, amp] : x.compact()) out.emplace(IndexPair{rc.second, rc.first}, std::conj(amp));
  return BooleanElement{std::move(out), std::conj(x.scalar())};
}

double max_deviation(const BooleanElement& x, const BooleanElement& y) {
  double dev = std::abs(x.scalar() - y.scalar());
  auto a = x.compact().begin();
  auto b = y.compact().begin();
  const auto a_end = x.compact().end();
  const auto b_end = y.compact().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) {
      dev = std::max(dev, std::abs(a->second));
      ++a;
    } else if (a == a_end || b->first < a->first) {
      dev = std::max(dev, std::abs(b->second));
      ++b;
    } else {
      dev = std::max(dev, std::abs(a->second - b->second));
      ++a;
      ++b;
    }
  }
  return dev;
}

FockVector add(const FockVector& v, const FockVector& w) {
  FockVector::Amplitudes out = v.amplitudes();
  for (const auto& [i, a] : w.amplitudes()) out[i] += a;
  return FockVector{std::move(out)};
}

FockVector scale(Complex c, const FockVector& v) {
  FockVector::Amplitudes out;
  for (const auto& [i, a] : v.amplitudes()) out.emplace_hint(out.end(), i, c * a);
  return FockVector{std::move(out)};
}

Complex inner(const FockVector& v, const FockVector& w) {
  Complex s{};
  for (const auto& [i, a] : v.amplitudes()) s += a * std::conj(w.amplitude(i));
  return s;
}

double max_deviation(const FockVector& v, const FockVector& w) {
  double dev = 0.0;
  for (const auto& [i, a] : v.amplitudes()) dev = std::max(dev, std::abs(a - w.amplitude(i)));
  for (const auto& [i, a] : w.amplitudes()) {
    if (!v.amplitudes().contains(i)) dev = std::max(dev, std::abs(a));
  }
  return dev;
}

FockVector apply(const BooleanElement& x, const FockVector& v) {
  FockVector::Amplitudes out;
  for (const auto& [rc, amp] : x.compact()) {
    const Complex c = v.amplitude(rc.second);
    if (c != Complex{}) out[rc.first] += amp * c;
  }
  if (x.scalar() != Complex{}) {
    for (const auto& [i, a] : v.amplitudes()) out[i] += x.scalar() * a;
  }
  return FockVector{std::move(out)};
}

}  // namespace boolefock
