#pragma once

#include <stdexcept>
#include <string>

namespace mc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
};

#define MC_DEFINE_ERROR(N)                                          \
  class N : public Error {                                          \
   public:                                                          \
    using Error::Error;                                             \
    const char* name() const noexcept override { return #N; }       \
  }

MC_DEFINE_ERROR(SingularModel);
MC_DEFINE_ERROR(BadCharacteristic);
MC_DEFINE_ERROR(DegenerateParam);
MC_DEFINE_ERROR(HasseViolation);
MC_DEFINE_ERROR(DataFormat);
MC_DEFINE_ERROR(ConfigError);
MC_DEFINE_ERROR(NoRoot);
MC_DEFINE_ERROR(SampleExhausted);

#undef MC_DEFINE_ERROR

}  // namespace mc
