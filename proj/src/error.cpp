#include "setorbits/error.hpp"

namespace setorbits {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::degree_mismatch: return "degree-mismatch";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::catalog: return "catalog";
    case ErrorKind::data_gap: return "data-gap";
    case ErrorKind::usage: return "usage";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace setorbits
