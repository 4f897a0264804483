#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SSC_ERROR(Name)                                             \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

SSC_ERROR(PrecisionExhausted);
SSC_ERROR(DivisionByZero);
SSC_ERROR(NotRational);
SSC_ERROR(NotInGroup);
SSC_ERROR(NotInH);
SSC_ERROR(BadParameter);
SSC_ERROR(BudgetExceeded);
SSC_ERROR(UnsupportedVector);
SSC_ERROR(SupportNotLocated);
SSC_ERROR(UnknownCheck);
SSC_ERROR(BadConfig);

#undef SSC_ERROR

}  // namespace ssc
