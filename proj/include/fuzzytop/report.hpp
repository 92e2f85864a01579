#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fuzzytop {

// Outcome of a law check: each violated law with a witness description.
struct Report {
  struct Failure {
    std::string law;
    std::string witness;
  };

  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  explicit operator bool() const { return ok(); }

  void fail(std::string law, std::string witness) { failures.push_back({std::move(law), std::move(witness)}); }

  // Record only the first witness per law; later ones add nothing useful.
  void fail_once(const std::string& law, std::string witness) {
    for (auto& f : failures)
      if (f.law == law) return;
    fail(law, std::move(witness));
  }

  Report& merge(const Report& other, const std::string& prefix = {}) {
    for (auto& f : other.failures) failures.push_back({prefix.empty() ? f.law : prefix + ": " + f.law, f.witness});
    return *this;
  }

  bool has(const std::string& law) const {
    for (auto& f : failures)
      if (f.law == law) return true;
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    if (ok()) return "pass";
    for (auto& f : failures) os << f.law << " [" << f.witness << "]\n";
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const Report& r) { return os << r.str(); }

// Small helper for building witness strings from mixed arguments.
template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

}  // namespace fuzzytop
