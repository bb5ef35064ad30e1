#include "boolefock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace boolefock {

namespace {

void require_one_particle(const FockVector& f, const char* what) {
  if (!f.in_one_particle_space()) {
    throw std::invalid_argument(std::string(what) + ": argument has a nonzero vacuum amplitude");
  }
}

Index relabel(const FinitePermutation& g, Index i) {
  return i.is_vacuum() ? i : Index::site(g(i.site_label()));
}

}  // namespace

TestAlgebraElement operator*(const TestAlgebraElement& x, const TestAlgebraElement& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d, x.beta * y.beta};
}

TestAlgebraElement adjoint(const TestAlgebraElement& x) {
  return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d), std::conj(x.beta)};
}

double max_deviation(const TestAlgebraElement& x, const TestAlgebraElement& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                   std::abs(x.d - y.d), std::abs(x.beta - y.beta)});
}

FinitePermutation::FinitePermutation(std::map<Site, Site> mapping) {
  std::set<Site> image;
  for (const auto& [from, to] : mapping) {
    if (from == 0 || to == 0) throw std::invalid_argument("permutation: site labels start at 1");
    if (!mapping.contains(to)) {
      throw std::invalid_argument("permutation: image of " + std::to_string(from) +
                                  " leaves the support");
    }
    if (!image.insert(to).second) {
      throw std::invalid_argument("permutation: site " + std::to_string(to) + " is hit twice");
    }
  }
  for (const auto& [from, to] : mapping) {
    if (from != to) mapping_.emplace(from, to);
  }
}

FinitePermutation FinitePermutation::transposition(Site i, Site j) {
  if (i == j) return FinitePermutation{};
  return FinitePermutation{{{i, j}, {j, i}}};
}

Site FinitePermutation::operator()(Site j) const {
  auto it = mapping_.find(j);
  return it == mapping_.end() ? j : it->second;
}

std::set<Site> FinitePermutation::support() const {
  std::set<Site> out;
  for (const auto& [from, to] : mapping_) out.insert(from);
  return out;
}

FinitePermutation FinitePermutation::inverse() const {
  std::map<Site, Site> inv;
  for (const auto& [from, to] : mapping_) inv.emplace(to, from);
  return FinitePermutation{std::move(inv)};
}

FinitePermutation compose(const FinitePermutation& g, const FinitePermutation& h) {
  std::set<Site> moved = g.support();
  moved.merge(h.support());
  std::map<Site, Site> out;
  for (Site j : moved) out.emplace(j, g(h(j)));
  return FinitePermutation{std::move(out)};
}

BooleanElement creator(const FockVector& f) {
  require_one_particle(f, "creator");
  BooleanElement::Entries out;
  for (const auto& [i, amp] : f.amplitudes()) out.emplace(IndexPair{i, Index::vacuum()}, amp);
  return BooleanElement{std::move(out), Complex{}};
}

BooleanElement annihilator(const FockVector& f) {
  require_one_particle(f, "annihilator");
  BooleanElement::Entries out;
  for (const auto& [i, amp] : f.amplitudes()) out.emplace(IndexPair{Index::vacuum(), i}, std::conj(amp));
  return BooleanElement{std::move(out), Complex{}};
}

BooleanElement embed(Site j, const TestAlgebraElement& x) {
  const Index vac = Index::vacuum();
  const Index site = Index::site(j);
  BooleanElement::Entries out{
      {{vac, vac}, x.a - x.beta},
      {{vac, site}, x.b},
      {{site, vac}, x.c},
      {{site, site}, x.d - x.beta},
  };
  return BooleanElement{std::move(out), x.beta};
}

BooleanElement permute(const FinitePermutation& g, const BooleanElement& x) {
  BooleanElement::Entries out;
  for (const auto& [rc, amp] : x.compact()) {
    out.emplace(IndexPair{relabel(g, rc.first), relabel(g, rc.second)}, amp);
  }
  return BooleanElement{std::move(out), x.scalar()};
}

}  // namespace boolefock
