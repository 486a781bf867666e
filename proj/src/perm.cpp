#include "ppfun/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ppfun/error.hpp"

namespace ppfun {

Perm::Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) fail(errc::invalid_permutation, "image vector is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(errc::parse_error, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) fail(errc::parse_error, "expected point number in cycle notation: " + text);
      int pt = std::stoi(text.substr(i, j - i));
      if (pt < 1 || pt > degree) fail(errc::parse_error, "point out of range in cycle notation: " + text);
      cyc.push_back(pt - 1);
      i = j;
      skip_ws();
    }
    if (i == text.size()) fail(errc::parse_error, "unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
      if (img[from] != from && img[from] != to) fail(errc::parse_error, "point repeated across cycles: " + text);
      img[from] = to;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[x] = img_[rhs.img_[x]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::power(long e) const {
  int n = order();
  e %= n;
  if (e < 0) e += n;
  Perm acc(degree()), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  long ord = 1;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    do {
      seen[y] = 1;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, static_cast<long>(len));
  }
  return static_cast<int>(ord);
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    int y = x;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << (y + 1);
      first = false;
      seen[y] = 1;
      y = img_[y];
    } while (y != x);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace ppfun
