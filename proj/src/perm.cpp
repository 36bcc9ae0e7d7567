#include "digroups/perm.hpp"

#include <algorithm>
#include <sstream>

#include "digroups/errors.hpp"

namespace digroups {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw ParseError("permutation must have degree >= 1");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n) {
      throw ParseError("permutation image " + std::to_string(v) +
                       " out of range for degree " + std::to_string(n));
    }
    if (seen[v]) {
      throw ParseError("permutation repeats image " + std::to_string(v));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw ParseError("permutation must have degree >= 1");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree) {
    throw ParseError("transposition point out of range");
  }
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::order() const {
  Permutation acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++k;
  }
  return k;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::one_line() const {
  std::ostringstream out;
  for (int i = 0; i < degree(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out << '(' << i;
    done[i] = true;
    for (int j = images_[i]; j != i; j = images_[j]) {
      out << ' ' << j;
      done[j] = true;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("cannot compose permutations of degrees " +
                            std::to_string(p.degree()) + " and " +
                            std::to_string(q.degree()));
  }
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p.images_[q.images_[i]];
  return Permutation(std::move(im));
}

}  // namespace digroups
