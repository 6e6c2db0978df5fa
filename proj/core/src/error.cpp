#include "lrlab/error.hpp"

namespace lrlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotComparable: return "NotComparable";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CapMismatch: return "CapMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnknownLemma: return "UnknownLemma";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::UnsupportedLength: return "UnsupportedLength";
    case Errc::HypothesisFails: return "HypothesisFails";
    case Errc::NotFoundWithin: return "NotFoundWithin";
    case Errc::ParseError: return "ParseError";
    case Errc::CacheFormat: return "CacheFormat";
  }
  return "Unknown";
}

}  // namespace lrlab
