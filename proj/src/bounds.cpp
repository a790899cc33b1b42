#include "homset/bounds.hpp"

#include <cmath>
#include <string>

namespace homset {

namespace {

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is binom(a-b+i, i) after this step
  }
  return r;
}

}  // namespace

TheoremParams validate_params(int n, double k, double C) {
  if (n < 3)
    throw ConstraintViolation("n must be an integer >= 3, got " +
                              std::to_string(n));
  if (!(k >= 2.0))
    throw ConstraintViolation("k must be a real >= 2, got " +
                              std::to_string(k));
  if (!(C > 0.0) || C > 0.01)
    throw ConstraintViolation("C must lie in (0, 0.01], got " +
                              std::to_string(C));
  if (k > double(n) / (3.0 * C))
    throw ConstraintViolation("k must be <= n/(3C) = " +
                              std::to_string(double(n) / (3.0 * C)) +
                              ", got " + std::to_string(k));
  return TheoremParams{n, k, C};
}

double target_size(const TheoremParams& p) {
  return p.C * p.k * std::log2(double(p.n)) / std::log2(p.k);
}

CaseLabel classify_case(const TheoremParams& p) {
  if (p.k <= 100.0) return CaseLabel::Case1;
  if (p.k >= std::sqrt(double(p.n))) return CaseLabel::Case2;
  return CaseLabel::Case3;
}

BigInt es_upper_bound(double s, double t) {
  if (!(s >= 1.0) || !(t >= 1.0))
    throw InvalidInput("es_upper_bound needs s >= 1 and t >= 1");
  long long si = (long long)std::ceil(s);
  long long ti = (long long)std::ceil(t);
  return binomial(si + ti - 2, si - 1);
}

double turan_max_edges(int n, int r) {
  if (r < 2) throw InvalidInput("turan_max_edges needs r >= 2");
  if (n < 1) throw InvalidInput("turan_max_edges needs n >= 1");
  return (1.0 - 1.0 / double(r - 1)) * double(n) * double(n) / 2.0;
}

BoundReport case3_thresholds(const TheoremParams& p, int a_size) {
  if (a_size < 1) throw InvalidInput("case3_thresholds needs a_size >= 1");
  BoundReport r;
  r.target = target_size(p);

  double n = double(p.n);
  if (p.k <= n / (p.C * p.C) && !(r.target <= n))
    throw InvariantBreach("target_le_n", r.target, n);

  double s = 10.0 * double(a_size) / p.k;
  r.es_bound = es_upper_bound(std::max(s, 1.0), std::max(r.target, 1.0));

  int turan_r = (int)std::ceil(2.0 * p.C * p.k);
  r.turan_limit = turan_r >= 2 ? turan_max_edges(p.n, turan_r) : 0.0;

  r.degree_threshold = (1.0 - 2.0 / p.k) * n;
  r.neighbor_threshold = (1.0 - 10.0 / p.k) * double(a_size);
  double e = std::exp(1.0);
  r.subset_count_cap = s * std::pow(e * p.k / 10.0, s);

  r.n_fifth = n / 5.0;
  r.n_quarter = n / 4.0;
  r.n_cbrt = std::cbrt(n);
  r.sqrt_n = std::sqrt(n);
  r.n_049 = 0.49 * n;
  return r;
}

}  // namespace homset
