#pragma once

#include <iosfwd>
#include <string>

#include "qmf/forms.hpp"

namespace qmf {

/// Text format for exact q-expansions ("# qexp 1"):
///
///   # qexp 1
///   twice_weight 8
///   level 5
///   character trivial:5
///   order 1
///   prec 10
///   1 1
///   2 -4
///
/// Body lines are "n value" for the nonzero coefficients, n strictly
/// increasing below prec; values use the exact-ring serialization
/// ("p/q" or "[c0,c1,...]@m" with m equal to the header order).
/// Absent indices are zero. Writing then parsing is the identity.
FormExpansion parse_qexp(const std::string& content);
FormExpansion parse_qexp(std::istream& in);

std::string write_qexp(const FormExpansion& f);

} // namespace qmf
