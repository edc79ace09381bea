#include "oddrobin/arith.hpp"

#include <string>

#include "oddrobin/error.hpp"

namespace oddrobin {

ExactRatio::ExactRatio(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw DomainError("zero denominator");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

ExactRatio::ExactRatio(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) {
    throw DomainError("zero denominator");
  }
  q_.canonicalize();
}

ExactRatio ExactRatio::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw UsageError("not a rational: " + text);
  }
  return ExactRatio(q);
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
  ExactRatio r;
  r.q_ = a.q_ * b.q_;
  return r;
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
  ExactRatio r;
  r.q_ = a.q_ + b.q_;
  return r;
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
  if (n < 2 || n > table.limit()) {
    throw UsageError("factorize: " + std::to_string(n) + " outside [2, " +
                     std::to_string(table.limit()) + "]");
  }
  std::vector<PrimePower> pairs;
  while (n > 1) {
    const std::uint32_t p = table.spf(n);
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    pairs.push_back({p, a});
  }
  return Factorization(std::move(pairs));
}

ExactRatio sigma_over_n(const Factorization& f) {
  mpz_class num = 1;
  mpz_class den = 1;
  mpz_class pa;
  for (const auto& [p, a] : f.pairs()) {
    mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
    num *= pa * p - 1;
    den *= pa * (p - 1);
  }
  return ExactRatio(num, den);
}

ExactRatio n_over_phi(const Factorization& f) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (const auto& pp : f.pairs()) {
    num *= static_cast<unsigned long>(pp.prime);
    den *= static_cast<unsigned long>(pp.prime - 1);
  }
  return ExactRatio(num, den);
}

mpz_class value(const Factorization& f) {
  mpz_class v = 1;
  mpz_class pa;
  for (const auto& [p, a] : f.pairs()) {
    mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
    v *= pa;
  }
  return v;
}

}  // namespace oddrobin
