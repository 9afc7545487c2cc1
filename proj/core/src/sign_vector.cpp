#include "lrb/sign_vector.hpp"

#include "lrb/errors.hpp"

namespace lrb {

SignVector SignVector::parse(const std::string& text) {
  std::vector<Sign> e;
  e.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': e.push_back(Sign::Zero); break;
      case '+': e.push_back(Sign::Plus); break;
      case '-': e.push_back(Sign::Minus); break;
      default: throw ParseError(std::string("bad sign character: ") + c);
    }
  }
  return SignVector(std::move(e));
}

SignVector SignVector::compose(const SignVector& other) const {
  if (size() != other.size()) throw DomainError("sign vector length mismatch");
  std::vector<Sign> e(entries_);
  for (int i = 0; i < size(); ++i)
    if (e[i] == Sign::Zero) e[i] = other.entries_[i];
  return SignVector(std::move(e));
}

bool SignVector::leq(const SignVector& other) const {
  if (size() != other.size()) throw DomainError("sign vector length mismatch");
  for (int i = 0; i < size(); ++i)
    if (entries_[i] != Sign::Zero && entries_[i] != other.entries_[i]) return false;
  return true;
}

SignVector SignVector::negated() const {
  std::vector<Sign> e(entries_);
  for (auto& s : e) {
    if (s == Sign::Plus)
      s = Sign::Minus;
    else if (s == Sign::Minus)
      s = Sign::Plus;
  }
  return SignVector(std::move(e));
}

bool SignVector::is_zero() const {
  for (auto s : entries_)
    if (s != Sign::Zero) return false;
  return true;
}

bool SignVector::is_full() const {
  for (auto s : entries_)
    if (s == Sign::Zero) return false;
  return true;
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (auto s : entries_)
    out += (s == Sign::Zero ? '0' : (s == Sign::Plus ? '+' : '-'));
  return out;
}

int csign_level(CSign s) {
  switch (s) {
    case CSign::Zero: return 0;
    case CSign::Plus:
    case CSign::Minus: return 1;
    default: return 2;
  }
}

bool csign_less(CSign a, CSign b) {
  return csign_level(a) < csign_level(b);
}

ComplexSignVector ComplexSignVector::parse(const std::string& text) {
  std::vector<CSign> e;
  e.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': e.push_back(CSign::Zero); break;
      case '+': e.push_back(CSign::Plus); break;
      case '-': e.push_back(CSign::Minus); break;
      case 'i': e.push_back(CSign::I); break;
      case 'j': e.push_back(CSign::J); break;
      default: throw ParseError(std::string("bad complex sign character: ") + c);
    }
  }
  return ComplexSignVector(std::move(e));
}

ComplexSignVector ComplexSignVector::from_real_pair(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw DomainError("sign vector length mismatch");
  std::vector<CSign> e(x.size());
  for (int i = 0; i < x.size(); ++i) {
    if (y[i] == Sign::Plus)
      e[i] = CSign::I;
    else if (y[i] == Sign::Minus)
      e[i] = CSign::J;
    else
      e[i] = (x[i] == Sign::Zero ? CSign::Zero
                                 : (x[i] == Sign::Plus ? CSign::Plus : CSign::Minus));
  }
  return ComplexSignVector(std::move(e));
}

ComplexSignVector ComplexSignVector::compose(const ComplexSignVector& other) const {
  if (size() != other.size()) throw DomainError("complex sign vector length mismatch");
  std::vector<CSign> e(entries_);
  for (int i = 0; i < size(); ++i)
    if (csign_less(e[i], other.entries_[i])) e[i] = other.entries_[i];
  return ComplexSignVector(std::move(e));
}

bool ComplexSignVector::leq(const ComplexSignVector& other) const {
  if (size() != other.size()) throw DomainError("complex sign vector length mismatch");
  for (int i = 0; i < size(); ++i)
    if (entries_[i] != other.entries_[i] && !csign_less(entries_[i], other.entries_[i]))
      return false;
  return true;
}

bool ComplexSignVector::has_zero() const {
  for (auto s : entries_)
    if (s == CSign::Zero) return true;
  return false;
}

bool ComplexSignVector::is_imaginary() const {
  for (auto s : entries_)
    if (csign_level(s) != 2) return false;
  return true;
}

int ComplexSignVector::level_sum() const {
  int r = 0;
  for (auto s : entries_) r += csign_level(s);
  return r;
}

std::string ComplexSignVector::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (auto s : entries_) {
    switch (s) {
      case CSign::Zero: out += '0'; break;
      case CSign::Plus: out += '+'; break;
      case CSign::Minus: out += '-'; break;
      case CSign::I: out += 'i'; break;
      case CSign::J: out += 'j'; break;
    }
  }
  return out;
}

}  // namespace lrb
