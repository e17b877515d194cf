#include "rlcsynth/subresultant.hpp"

#include <algorithm>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

std::vector<int> storage_sign_sequence(const std::vector<Rational>& r) {
  // r holds R_0..R_{n-1}; the sequence runs 1, R_{n-1}, ..., R_0.
  std::vector<int> seq{1};
  int last = 1, run = 0;
  for (int k = static_cast<int>(r.size()) - 1; k >= 0; --k) {
    int s = sgn(r[k]);
    if (s != 0) {
      last = s;
      run = 0;
      seq.push_back(s);
      continue;
    }
    ++run;
    int j = run;
    int flip = ((j * (j - 1) / 2) % 2 == 0) ? 1 : -1;
    seq.push_back(flip * last);
  }
  return seq;
}

StorageCounts storage_counts(const Poly& p, const Poly& q) {
  const int n = std::max(p.degree(), q.degree());
  if (p.is_zero() || q.is_zero()) fail(ErrorKind::NotCoprime, "zero polynomial");
  if (n <= 0) return {};
  std::vector<Rational> r = subresultants(p, q, n);
  if (sgn(r[0]) == 0) fail(ErrorKind::NotCoprime, "R0(p,q) = 0");
  std::vector<int> seq = storage_sign_sequence(r);
  StorageCounts c;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == seq[i - 1])
      ++c.capacitors;
    else
      ++c.inductors;
  }
  return c;
}

bool same_sign(const std::vector<int>& signs) {
  bool pos = false, neg = false;
  for (int s : signs) {
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  return !(pos && neg);
}

}  // namespace rlcsynth
