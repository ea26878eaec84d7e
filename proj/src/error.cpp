#include "flagclass/error.hpp"

namespace flagclass {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLieType: return "invalid_lie_type";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::IndexOutOfRange: return "index_out_of_range";
    case ErrorKind::NotARoot: return "not_a_root";
    case ErrorKind::DegenerateRootString: return "degenerate_root_string";
    case ErrorKind::CartanBracket: return "cartan_bracket";
    case ErrorKind::NotAFlagManifold: return "not_a_flag_manifold";
    case ErrorKind::RootInTheta: return "root_in_theta";
    case ErrorKind::BridgeUnavailable: return "bridge_unavailable";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotATRoot: return "not_a_t_root";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::NotInStabilizer: return "not_in_stabilizer";
    case ErrorKind::NotClosedUnderAction: return "not_closed_under_action";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::InvariantViolation: return "invariant_violation";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace flagclass
