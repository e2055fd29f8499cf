#include "dfop/common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dfop {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MismatchedEndpoints: return "MismatchedEndpoints";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::SiteClosureExceeded: return "SiteClosureExceeded";
    case ErrorCode::ArityExceeded: return "ArityExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::MackeyViolation: return "MackeyViolation";
    case ErrorCode::BCViolation: return "BCViolation";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::MissingLimits: return "MissingLimits";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "UnknownError";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple_name(const std::vector<std::string>& parts) {
  if (parts.empty()) return "()";
  if (parts.size() == 1) return parts[0];
  return "(" + join(parts, ",") + ")";
}

std::vector<int> radix_decode(std::int64_t index, const std::vector<int>& radices) {
  std::vector<int> digits(radices.size(), 0);
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % radices[k]);
    index /= radices[k];
  }
  return digits;
}

std::int64_t radix_encode(const std::vector<int>& digits, const std::vector<int>& radices) {
  std::int64_t index = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) index = index * radices[k] + digits[k];
  return index;
}

void parallel_for(std::int64_t n, Exec exec, const std::function<void(std::int64_t)>& body) {
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
#endif
  }
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace dfop
