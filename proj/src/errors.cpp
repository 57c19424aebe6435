#include "spinscatter/errors.hpp"

namespace spinscatter {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return "InvalidArgument";
    case Errc::non_unit_vector:
      return "NonUnitVector";
    case Errc::inelastic_input:
      return "InelasticInput";
    case Errc::degenerate_geometry:
      return "DegenerateGeometry";
    case Errc::non_positive_mass:
      return "NonPositiveMass";
    case Errc::zero_momentum_transfer:
      return "ZeroMomentumTransfer";
    case Errc::out_of_plane:
      return "OutOfPlane";
    case Errc::null_potential_at_q:
      return "NullPotentialAtQ";
  }
  return "UnknownError";
}

}  // namespace spinscatter
