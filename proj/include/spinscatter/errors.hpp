#pragma once

#include <stdexcept>
#include <string>

namespace spinscatter {

enum class Errc {
  invalid_argument,
  non_unit_vector,
  inelastic_input,
  degenerate_geometry,
  non_positive_mass,
  zero_momentum_transfer,
  out_of_plane,
  null_potential_at_q,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace spinscatter
