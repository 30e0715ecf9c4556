#include "oalgdim/error.hpp"

namespace oalgdim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InternalBoundViolation: return "InternalBoundViolation";
    case ErrorKind::CalibrationError: return "CalibrationError";
    case ErrorKind::CorruptCache: return "CorruptCache";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace oalgdim
