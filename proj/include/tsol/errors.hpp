#pragma once

#include <stdexcept>
#include <string>

namespace tsol {

enum class Errc {
  degenerate_input,
  dimension_unsupported,
  not_reflexive,
  degree_unsupported,
  singular_gram,
  unbounded,
  degenerate_hessian,
  quadrature_failure,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tsol
