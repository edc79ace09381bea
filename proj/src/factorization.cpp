#include "oddrobin/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "oddrobin/error.hpp"

namespace oddrobin {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  std::uint64_t previous = 0;
  for (const auto& [p, a] : pairs_) {
    if (a == 0) {
      throw UsageError("factorization exponent must be >= 1 (prime " + std::to_string(p) + ")");
    }
    if (p <= previous) {
      throw UsageError("factorization primes must be strictly increasing");
    }
    if (!is_small_prime(p)) {
      throw UsageError(std::to_string(p) + " is not prime");
    }
    previous = p;
  }
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("malformed factorization: " + std::string(whole));
  }
  return v;
}

}  // namespace

Factorization Factorization::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  // Normalize the middle dot (UTF-8 C2 B7) and '.' to '*', drop spaces.
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ') {
      continue;
    }
    if (c == '\xC2' && i + 1 < text.size() && text[i + 1] == '\xB7') {
      cleaned.push_back('*');
      ++i;
    } else if (c == '.') {
      cleaned.push_back('*');
    } else {
      cleaned.push_back(c);
    }
  }
  if (cleaned == "1") {
    return {};
  }
  std::vector<PrimePower> pairs;
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    const auto star = rest.find('*');
    const std::string_view term = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    const auto caret = term.find('^');
    PrimePower pp;
    if (caret == std::string_view::npos) {
      pp.prime = parse_u64(term, text);
      pp.exponent = 1;
    } else {
      pp.prime = parse_u64(term.substr(0, caret), text);
      pp.exponent = static_cast<unsigned>(parse_u64(term.substr(caret + 1), text));
    }
    pairs.push_back(pp);
  }
  return Factorization(std::move(pairs));
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p,
                             [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  return (it != pairs_.end() && it->prime == p) ? it->exponent : 0;
}

Factorization Factorization::times_prime(std::uint64_t p) const {
  if (!is_small_prime(p)) {
    throw UsageError(std::to_string(p) + " is not prime");
  }
  std::vector<PrimePower> out = pairs_;
  auto it = std::lower_bound(out.begin(), out.end(), p,
                             [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  if (it != out.end() && it->prime == p) {
    ++it->exponent;
  } else {
    out.insert(it, PrimePower{p, 1});
  }
  return Factorization(std::move(out), Trusted{});
}

std::optional<std::uint64_t> Factorization::quotient_prime(const Factorization& smaller) const {
  for (const auto& pp : smaller.pairs_) {
    if (exponent_of(pp.prime) < pp.exponent) {
      return std::nullopt;
    }
  }
  std::optional<std::uint64_t> found;
  for (const auto& pp : pairs_) {
    const unsigned extra = pp.exponent - smaller.exponent_of(pp.prime);
    if (extra == 0) {
      continue;
    }
    if (extra != 1 || found) {
      return std::nullopt;
    }
    found = pp.prime;
  }
  return found;
}

std::string Factorization::to_string() const {
  if (pairs_.empty()) {
    return "1";
  }
  std::string out;
  for (const auto& [p, a] : pairs_) {
    if (!out.empty()) {
      out += '*';
    }
    out += std::to_string(p);
    if (a != 1) {
      out += '^';
      out += std::to_string(a);
    }
  }
  return out;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> out;
  out.reserve(a.pairs_.size() + b.pairs_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.pairs_.size() || j < b.pairs_.size()) {
    if (j == b.pairs_.size() || (i < a.pairs_.size() && a.pairs_[i].prime < b.pairs_[j].prime)) {
      out.push_back(a.pairs_[i++]);
    } else if (i == a.pairs_.size() || b.pairs_[j].prime < a.pairs_[i].prime) {
      out.push_back(b.pairs_[j++]);
    } else {
      out.push_back({a.pairs_[i].prime, a.pairs_[i].exponent + b.pairs_[j].exponent});
      ++i;
      ++j;
    }
  }
  return Factorization(std::move(out), Factorization::Trusted{});
}

bool coprime(const Factorization& a, const Factorization& b) {
  for (const auto& pp : a.pairs()) {
    if (b.exponent_of(pp.prime) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace oddrobin
