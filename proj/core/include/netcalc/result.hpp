#ifndef NETCALC_RESULT_HPP
#define NETCALC_RESULT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace netcalc {

// Value-or-reason. Rejections (cycle introduced, ambiguous overlap, ...) are
// ordinary outcomes of the calculus, not exceptions.
template <typename T>
class Result {
 public:
  static Result ok(T value) {
    Result r;
    r.value_ = std::move(value);
    return r;
  }
  static Result fail(std::string reason) {
    Result r;
    r.reason_ = std::move(reason);
    return r;
  }

  explicit operator bool() const { return value_.has_value(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Result::value on failure: " + reason_);
    return *value_;
  }
  T&& take() && {
    if (!value_) throw std::logic_error("Result::take on failure: " + reason_);
    return std::move(*value_);
  }
  const std::string& reason() const { return reason_; }

 private:
  std::optional<T> value_;
  std::string reason_;
};

}  // namespace netcalc

#endif
