#pragma once

#include <stdexcept>
#include <string>

namespace ppfun {

enum class errc {
  invalid_permutation,
  closure_exceeds_cap,
  unknown_name,
  cap_exceeded,
  catalogue_incomplete,
  vanishing_essential_algebra,
  char_divides_order,
  not_a_generator,
  field_table_exhausted,
  certificate_failure,
  singular_brauer_table,
  non_integral_cartan,
  denominator_divisible_by_p,
  oracle_cap_exceeded,
  wrong_pair_for_w,
  not_in_g_hat,
  parse_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_permutation: return "InvalidPermutation";
    case errc::closure_exceeds_cap: return "ClosureExceedsCap";
    case errc::unknown_name: return "UnknownName";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::catalogue_incomplete: return "CatalogueIncomplete";
    case errc::vanishing_essential_algebra: return "VanishingEssentialAlgebra";
    case errc::char_divides_order: return "CharDividesOrder";
    case errc::not_a_generator: return "NotAGenerator";
    case errc::field_table_exhausted: return "FieldTableExhausted";
    case errc::certificate_failure: return "CertificateFailure";
    case errc::singular_brauer_table: return "SingularBrauerTable";
    case errc::non_integral_cartan: return "NonIntegralCartan";
    case errc::denominator_divisible_by_p: return "DenominatorDivisibleByP";
    case errc::oracle_cap_exceeded: return "OracleCapExceeded";
    case errc::wrong_pair_for_w: return "WrongPairForW";
    case errc::not_in_g_hat: return "NotInGHat";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace ppfun
