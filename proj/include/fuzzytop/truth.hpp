#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzytop {

class invalid_value : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class invalid_chain : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact grade in [0,1]. Always stored in lowest terms.
class TruthValue {
 public:
  using rep = boost::rational<std::int64_t>;

  TruthValue() = default;
  TruthValue(std::int64_t num, std::int64_t den) : v_(num, den) { check(); }
  explicit TruthValue(rep r) : v_(r) { check(); }

  static TruthValue zero() { return {}; }
  static TruthValue one() { return TruthValue(1, 1); }

  std::int64_t num() const { return v_.numerator(); }
  std::int64_t den() const { return v_.denominator(); }
  const rep& rational() const { return v_; }
  double to_double() const { return boost::rational_cast<double>(v_); }

  bool is_zero() const { return v_.numerator() == 0; }
  bool is_one() const { return v_.numerator() == v_.denominator(); }

  friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (v_.denominator() == 1) return std::to_string(v_.numerator());
    return std::to_string(v_.numerator()) + "/" + std::to_string(v_.denominator());
  }

  // Accepts "p/q", integers, and decimals such as "0.35" (converted exactly).
  static TruthValue parse(std::string_view s) {
    auto bad = [&] { return invalid_value("not a truth value: '" + std::string(s) + "'"); };
    auto digits = [](std::string_view d) {
      return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [&](std::string_view d) -> std::int64_t {
      if (!digits(d) || d.size() > 17) throw bad();
      return std::stoll(std::string(d));
    };
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      auto q = to_int(s.substr(slash + 1));
      if (q == 0) throw bad();
      return checked(rep(to_int(s.substr(0, slash)), q), s);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (ip.empty()) ip = "0";
      if (fp.empty() || fp.size() > 15) throw bad();
      std::int64_t den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      return checked(rep(to_int(ip) * den + to_int(fp), den), s);
    }
    return checked(rep(to_int(s), 1), s);
  }

 private:
  static TruthValue checked(rep r, std::string_view src) {
    if (r < rep(0) || r > rep(1)) throw invalid_value("truth value outside [0,1]: '" + std::string(src) + "'");
    return TruthValue(r);
  }
  void check() const {
    if (v_ < rep(0) || v_ > rep(1)) throw invalid_value("truth value outside [0,1]");
  }
  rep v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const TruthValue& t) { return os << t.str(); }

inline TruthValue meet(const TruthValue& a, const TruthValue& b) { return std::min(a, b); }
inline TruthValue join(const TruthValue& a, const TruthValue& b) { return std::max(a, b); }

// a -> b: 1 when a <= b, b otherwise.
inline TruthValue godel_arrow(const TruthValue& a, const TruthValue& b) {
  return a <= b ? TruthValue::one() : b;
}

inline TruthValue inf_family(std::span<const TruthValue> xs) {
  TruthValue r = TruthValue::one();
  for (const auto& x : xs) r = std::min(r, x);
  return r;
}

inline TruthValue sup_family(std::span<const TruthValue> xs) {
  TruthValue r;
  for (const auto& x : xs) r = std::max(r, x);
  return r;
}

inline TruthValue inf_family(std::initializer_list<TruthValue> xs) {
  return inf_family(std::span<const TruthValue>(xs.begin(), xs.size()));
}
inline TruthValue sup_family(std::initializer_list<TruthValue> xs) {
  return sup_family(std::span<const TruthValue>(xs.begin(), xs.size()));
}

// Finite sub-chain of [0,1] containing 0 and 1, strictly increasing.
class ValueChain {
 public:
  ValueChain() : vals_{TruthValue::zero(), TruthValue::one()} {}

  // Chain of all values in `vs` together with 0 and 1.
  static ValueChain from_values(std::vector<TruthValue> vs) {
    vs.push_back(TruthValue::zero());
    vs.push_back(TruthValue::one());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    ValueChain c;
    c.vals_ = std::move(vs);
    return c;
  }

  std::size_t size() const { return vals_.size(); }
  const TruthValue& operator[](std::size_t i) const { return vals_[i]; }
  const std::vector<TruthValue>& values() const { return vals_; }
  auto begin() const { return vals_.begin(); }
  auto end() const { return vals_.end(); }

  bool contains(const TruthValue& t) const { return std::binary_search(vals_.begin(), vals_.end(), t); }
  // Position of t in the chain, or -1.
  int index_of(const TruthValue& t) const {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), t);
    return (it != vals_.end() && *it == t) ? int(it - vals_.begin()) : -1;
  }
  // True when the chain is {k/(size-1)}.
  bool uniform() const {
    auto n = std::int64_t(vals_.size()) - 1;
    for (std::size_t k = 0; k < vals_.size(); ++k)
      if (vals_[k] != TruthValue(std::int64_t(k), n)) return false;
    return true;
  }

  friend bool operator==(const ValueChain&, const ValueChain&) = default;

 private:
  std::vector<TruthValue> vals_;
};

// The chain {0, 1/(n-1), ..., 1}.
inline ValueChain make_chain(int n) {
  if (n < 2) throw invalid_chain("chain size must be at least 2, got " + std::to_string(n));
  std::vector<TruthValue> vs;
  for (int k = 0; k < n; ++k) vs.emplace_back(k, n - 1);
  return ValueChain::from_values(std::move(vs));
}

}  // namespace fuzzytop

template <>
struct std::hash<fuzzytop::TruthValue> {
  std::size_t operator()(const fuzzytop::TruthValue& t) const noexcept {
    return std::hash<std::int64_t>{}(t.num()) * 1000003u ^ std::hash<std::int64_t>{}(t.den());
  }
};
