#ifndef SAW_BIGINT_HPP
#define SAW_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace saw {

// Exact unbounded integers. Walk counts and polynomial coefficients are
// never held in fixed-width types: substitution identities multiply counts
// and K_N coefficients reach (N-2)!.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) {
    return BigInt(s, 10);
}

inline double to_double(const BigInt& v) { return v.get_d(); }

} // namespace saw

#endif
