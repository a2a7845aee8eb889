#include "permpat/qpoly.hpp"

#include <stdexcept>

namespace permpat {

QPolynomial QPolynomial::constant(int nvars, BigInt c) {
  QPolynomial p(nvars);
  p.add_term(Expo(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

void QPolynomial::add_term(const Expo& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("QPolynomial::add_term: exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("QPolynomial::operator+=: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BigInt QPolynomial::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::coeff_sum() const {
  BigInt s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BigInt QPolynomial::coeff_univar(int k) const {
  if (nvars_ != 1) throw std::logic_error("QPolynomial::coeff_univar: polynomial is multivariate");
  return coeff(Expo{k});
}

int QPolynomial::degree_univar() const {
  if (nvars_ != 1) throw std::logic_error("QPolynomial::degree_univar: polynomial is multivariate");
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first[0];
}

std::vector<BigInt> QPolynomial::coeffs_univar() const {
  const int d = degree_univar();
  std::vector<BigInt> out(static_cast<std::size_t>(d < 0 ? 1 : d + 1), BigInt(0));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[0])] = c;
  return out;
}

QPolynomial QPolynomial::times_monomial(const Expo& e) const {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("QPolynomial::times_monomial: exponent arity mismatch");
  QPolynomial out(nvars_);
  for (const auto& [te, c] : terms_) {
    Expo ne(te);
    for (int v = 0; v < nvars_; ++v) ne[static_cast<std::size_t>(v)] += e[static_cast<std::size_t>(v)];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

QPolynomial QPolynomial::substituted(const std::vector<Expo>& images, int target_nvars) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("QPolynomial::substituted: one image per variable required");
  QPolynomial out(target_nvars);
  for (const auto& [e, c] : terms_) {
    Expo ne(static_cast<std::size_t>(target_nvars), 0);
    for (int v = 0; v < nvars_; ++v) {
      const int ev = e[static_cast<std::size_t>(v)];
      if (ev == 0) continue;
      const Expo& img = images[static_cast<std::size_t>(v)];
      for (int t = 0; t < target_nvars; ++t) ne[static_cast<std::size_t>(t)] += ev * img[static_cast<std::size_t>(t)];
    }
    out.add_term(ne, c);
  }
  return out;
}

}  // namespace permpat
