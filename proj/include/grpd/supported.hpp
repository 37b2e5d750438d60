#pragma once

#include <map>
#include <memory>
#include <utility>

#include "grpd/groupoid.hpp"
#include "grpd/scalar.hpp"

namespace grpd {

// Finitely supported Q(i)-valued function on the arrows of a groupoid or the
// points of a correspondence. Zero coefficients are never stored.
template <class Space>
class Supported {
 public:
  using Ref = std::shared_ptr<const Space>;

  explicit Supported(Ref space) : space_(std::move(space)) {}

  static Supported delta(Ref space, Index i, Scalar c = 1) {
    Supported out(std::move(space));
    out.add(i, c);
    return out;
  }

  const Ref& space() const { return space_; }
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar at(Index i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(Index i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Supported& operator+=(const Supported& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
  }
  Supported& operator-=(const Supported& o) {
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
  }
  Supported& operator*=(const Scalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [i, v] : terms_) v *= c;
    return *this;
  }

  friend Supported operator+(Supported a, const Supported& b) { return a += b; }
  friend Supported operator-(Supported a, const Supported& b) { return a -= b; }
  friend Supported operator*(const Scalar& c, Supported a) { return a *= c; }
  friend bool operator==(const Supported& a, const Supported& b) { return a.terms_ == b.terms_; }

 private:
  Ref space_;
  std::map<Index, Scalar> terms_;
};

}  // namespace grpd
