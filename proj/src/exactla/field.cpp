#include "phantomkit/field.hpp"

#include "phantomkit/error.hpp"

namespace phantomkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::NotIntertwining: return "NotIntertwining";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::NoMonoIntoProjective: return "NoMonoIntoProjective";
    case ErrorKind::NotGP: return "NotGP";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::HullVerificationFailed: return "HullVerificationFailed";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error(ErrorKind::InvalidField,
                "modulus " + std::to_string(p) + " is not a prime in [2, 46337]");
}

Residue Field::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Internal, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace phantomkit
