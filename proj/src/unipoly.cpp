#include "permpat/unipoly.hpp"

#include <sstream>

namespace permpat {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

UniPoly UniPoly::of(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::of_ints(const std::vector<BigInt>& coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (const BigInt& v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

void UniPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[k];
}

BigRational UniPoly::eval(const BigInt& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= BigRational(x);
    acc += *it;
  }
  return acc;
}

BigInt UniPoly::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += to_integer(*it);
  }
  return acc;
}

bool UniPoly::integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<BigRational> c(std::max(coeffs_.size(), o.coeffs_.size()), BigRational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(BigRational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<BigRational> c(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const BigRational& s) const {
  std::vector<BigRational> c(coeffs_);
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

namespace {

std::string rational_str(const BigRational& r) {
  return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigRational c = coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? '-' : '+');
    }
    if (k == 0) {
      out << rational_str(mag);
    } else {
      if (mag != 1) out << rational_str(mag);
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

}  // namespace permpat
