#include "qlat/bounds.hpp"

#include <sstream>

namespace qlat {
namespace {

std::string gb(long long m, long long k) {
  std::ostringstream os;
  os << "gb(" << m << "," << k << ")";
  return os.str();
}

std::string qpow(unsigned long long e) {
  std::ostringstream os;
  os << "q^" << e;
  return os.str();
}

std::string sum_gb(unsigned n, unsigned d) {
  std::ostringstream os;
  for (unsigned i = 0; i <= d; ++i) {
    if (i) os << " + ";
    os << gb(n, i);
  }
  return os.str();
}

BigNat sum_layers(unsigned n, unsigned d, unsigned q) {
  BigNat s = 0;
  for (unsigned i = 0; i <= d; ++i) s += gaussian_binomial(n, i, q);
  return s;
}

}  // namespace

BoundReport optimal_union_bound(unsigned n, unsigned s, unsigned q) {
  if (s < 2 || s >= n) throw BadParameters("need 2 <= s < n");
  unsigned d = s / 2;
  BoundReport r;
  r.theorem = "1.2";
  r.params = {{"n", n}, {"s", s}};
  r.q = q;
  r.hypothesis_ok = (s + 2 <= n);  // uniqueness clause needs s <= n-2
  r.value = sum_layers(n, d, q);
  r.formula = sum_gb(n, d);
  if (s % 2 == 1) {
    r.value += gaussian_binomial(n - 1, d, q);
    r.formula += " + " + gb(n - 1, d);
  }
  return r;
}

BoundReport suboptimal_union_bound(unsigned n, unsigned s, unsigned q) {
  if (s < 2 || s >= n) throw BadParameters("need 2 <= s < n");
  unsigned d = s / 2;
  BoundReport r;
  r.theorem = "1.3";
  r.params = {{"n", n}, {"s", s}};
  r.q = q;
  if (s % 2 == 0) {
    r.hypothesis_ok = true;
    r.value = sum_layers(n, d, q) -
              q_power(q, (unsigned long long)d * (d + 1)) *
                  gaussian_binomial(n - d - 1, d, q) +
              1;
    r.formula = sum_gb(n, d) + " - " + qpow((unsigned long long)d * (d + 1)) +
                " * " + gb(n - d - 1, d) + " + 1";
  } else {
    r.hypothesis_ok = (q >= 3 && n >= 2 * d + 3) || (q == 2 && n >= 2 * d + 4);
    r.value = sum_layers(n, d, q) + gaussian_binomial(n - 1, d, q) -
              q_power(q, (unsigned long long)d * (d + 1)) *
                  gaussian_binomial(n - d - 2, d, q) +
              q_power(q, d + 1);
    r.formula = sum_gb(n, d) + " + " + gb(n - 1, d) + " - " +
                qpow((unsigned long long)d * (d + 1)) + " * " + gb(n - d - 2, d) +
                " + " + qpow(d + 1);
  }
  return r;
}

BoundReport antichain_bound(unsigned n, unsigned s, unsigned q) {
  if (s < 2 || s > n) throw BadParameters("need 2 <= s <= n");
  unsigned d = s / 2;
  BoundReport r;
  r.theorem = s == n ? "1.5" : "1.4";
  r.params = {{"n", n}, {"s", s}};
  r.q = q;
  r.value = gaussian_binomial(n, d, q);
  r.formula = gb(n, d);
  return r;
}

BoundReport suboptimal_antichain_bound(unsigned n, unsigned s, unsigned q) {
  if (s < 2 || s > n) throw BadParameters("need 2 <= s <= n");
  unsigned d = s / 2;
  BoundReport r;
  r.params = {{"n", n}, {"s", s}};
  r.q = q;
  if (s == n) {
    r.theorem = "1.5";
    r.value = gaussian_binomial(n, d, q) - q * gaussian_binomial(d, 1, q);
    r.formula = gb(n, d) + " - q * " + gb(d, 1);
  } else if (s % 2 == 0) {
    r.theorem = "1.6";
    if (d == 1) {
      r.value = gaussian_binomial(n, 1, q) - q;
      r.formula = gb(n, 1) + " - q";
    } else {
      r.value = gaussian_binomial(n, d, q) - q * gaussian_binomial(n - d, 1, q);
      r.formula = gb(n, d) + " - q * " + gb(n - d, 1);
    }
  } else {
    r.theorem = "conj5.1";
    r.conjectural = true;
    r.value = gaussian_binomial(n, d, q) - q * gaussian_binomial(d, 1, q);
    r.formula = gb(n, d) + " - q * " + gb(d, 1);
  }
  return r;
}

BoundReport ekr_bound(unsigned n, unsigned k, unsigned t, unsigned q) {
  if (t < 1 || t > k) throw BadParameters("need 1 <= t <= k");
  if (n <= 2 * k - t) throw BadParameters("need n > 2k - t");
  BoundReport r;
  r.theorem = "2.1";
  r.params = {{"n", n}, {"k", k}, {"t", t}};
  r.q = q;
  if (n >= 2 * k) {
    r.value = gaussian_binomial(n - t, k - t, q);
    r.formula = gb(n - t, k - t);
    r.branch = "n>=2k";
  } else {
    r.value = gaussian_binomial(2 * k - t, k, q);
    r.formula = gb(2 * k - t, k);
    r.branch = "2k-t<n<=2k";
  }
  return r;
}

BoundReport hm_bound(unsigned n, unsigned k, unsigned q) {
  if (k < 2 || !((q >= 3 && n >= 2 * k + 1) || (q == 2 && n >= 2 * k + 2)))
    throw HypothesisViolated("Hilton-Milner hypotheses fail at these parameters");
  BoundReport r;
  r.theorem = "2.2";
  r.params = {{"n", n}, {"k", k}};
  r.q = q;
  r.value = gaussian_binomial(n - 1, k - 1, q) -
            q_power(q, (unsigned long long)k * (k - 1)) *
                gaussian_binomial(n - k - 1, k - 1, q) +
            q_power(q, k);
  r.formula = gb(n - 1, k - 1) + " - " + qpow((unsigned long long)k * (k - 1)) +
              " * " + gb(n - k - 1, k - 1) + " + " + qpow(k);
  return r;
}

BoundReport cross_t_bound(unsigned n, unsigned a, unsigned b, unsigned t,
                          unsigned q) {
  if (a < 2 || b < 2 || t >= std::min(a, b) || t < 1 || a + b >= n + t ||
      gaussian_binomial(n, a, q) > gaussian_binomial(n, b, q))
    throw HypothesisViolated("cross-t-intersecting hypotheses fail");
  BoundReport r;
  r.theorem = "2.6";
  r.params = {{"n", n}, {"a", a}, {"b", b}, {"t", t}};
  r.q = q;
  r.value = gaussian_binomial(n, b, q);
  std::ostringstream fs;
  fs << gb(n, b);
  for (unsigned i = 0; i < t; ++i) {
    r.value -= q_power(q, (unsigned long long)(a - i) * (b - i)) *
               gaussian_binomial(a, i, q) * gaussian_binomial(n - a, b - i, q);
    fs << " - " << qpow((unsigned long long)(a - i) * (b - i)) << " * "
       << gb(a, i) << " * " << gb(n - a, b - i);
  }
  r.value += 1;
  fs << " + 1";
  r.formula = fs.str();
  return r;
}

BoundReport cross_sperner_bound(unsigned n, unsigned a, unsigned b, unsigned q) {
  if (a == 0 || a >= b || b >= n) throw BadParameters("need 0 < a < b < n");
  BoundReport r;
  r.theorem = "2.5";
  r.params = {{"n", n}, {"a", a}, {"b", b}};
  r.q = q;
  BigNat v1 = gaussian_binomial(n, b, q) - gaussian_binomial(n - a, b - a, q) + 1;
  BigNat v2 = gaussian_binomial(n, a, q) - gaussian_binomial(b, a, q) + 1;
  r.value = std::max(v1, v2);
  r.branch = v1 >= v2 ? "b-side" : "a-side";
  r.formula = "max(" + gb(n, b) + " - " + gb(n - a, b - a) + " + 1, " +
              gb(n, a) + " - " + gb(b, a) + " + 1)";
  return r;
}

BoundReport cross_sharp_bound(unsigned n, unsigned k, unsigned q) {
  if (n < 2 * k + 1) throw BadParameters("need n >= 2k + 1");
  BoundReport r;
  r.theorem = "2.7";
  r.params = {{"n", n}, {"k", k}};
  r.q = q;
  r.hypothesis_ok = (n >= 2 * k + 2);  // uniqueness clause
  r.value = gaussian_binomial(n, k, q) -
            q_power(q, (unsigned long long)k * (k + 1)) *
                gaussian_binomial(n - k - 1, k, q) +
            1;
  r.formula = gb(n, k) + " - " + qpow((unsigned long long)k * (k + 1)) + " * " +
              gb(n - k - 1, k) + " + 1";
  return r;
}

}  // namespace qlat
