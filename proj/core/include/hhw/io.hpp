#pragma once

#include "hhw/betti.hpp"
#include "hhw/series.hpp"
#include "hhw/verify.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hhw {

enum class Format { json, csv, plain };

/// Throws std::invalid_argument unless the name is json, csv or plain.
Format parse_format(std::string_view name);

// JSON output carries a "schema" tag ("hhw.series/1", "hhw.table/1",
// "hhw.report/1"). CSV has a header row and lists nonzero entries only; a
// report without checks is written as the single row "suite,,,".

/// CSV rows (n, i, dim); plain text like "1 + q + q^2(1 + t^2)".
std::string emit(const BiSeries& s, Format f);
/// CSV rows (n, i, dim) when n is given, (i, dim) otherwise; plain text is
/// the Poincare polynomial in t.
std::string emit(const BettiTable& t, Format f, std::optional<int> n = std::nullopt);
std::string emit(const SuiteReport& r, Format f);

/// Inverses of emit. Series bounds are not recorded in CSV and plain text,
/// so they are passed in. Throw std::invalid_argument on malformed input.
BiSeries parse_series(std::string_view text, Format f, int q_bound, int t_bound);
BettiTable parse_table(std::string_view text, Format f);
SuiteReport parse_report(std::string_view text, Format f);

} // namespace hhw
